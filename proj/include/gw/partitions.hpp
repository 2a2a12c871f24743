#pragma once

// Cohomology-weighted partitions, their size/lexicographic orders, gluing
// multiplicities, and the partial order on relative invariant keys.

#include <gw/error.hpp>
#include <gw/rational.hpp>
#include <gw/ring.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gw {

/// (m, δ): contact order m with weight δ, a basis class of the divisor.
struct WeightedPair {
  int multiplicity = 1;
  int weight = 0;

  friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

/// (m, δ) > (m', δ') iff m > m', or m = m' and deg δ > deg δ'. Distinct
/// weights of equal degree have equal size.
inline std::weak_ordering size_compare(const Space& divisor, const WeightedPair& a, const WeightedPair& b) {
  if (a.multiplicity != b.multiplicity) return a.multiplicity <=> b.multiplicity;
  return divisor.basis().at(a.weight).real_degree <=> divisor.basis().at(b.weight).real_degree;
}

class WeightedPartition {
 public:
  explicit WeightedPartition(Space divisor, std::vector<WeightedPair> pairs = {})
      : divisor_(std::move(divisor)), pairs_(std::move(pairs)) {
    for (const auto& p : pairs_) {
      if (p.multiplicity < 1) fail(ErrorKind::Parameter, "multiplicity must be positive");
      if (p.weight < 0 || p.weight >= static_cast<int>(divisor_.rank()))
        fail(ErrorKind::Parameter, "weight is not a basis class of " + divisor_.name());
    }
    canonicalize();
  }

  const Space& divisor() const { return divisor_; }
  const std::vector<WeightedPair>& pairs() const { return pairs_; }
  std::size_t length() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  int total() const {
    int t = 0;
    for (const auto& p : pairs_) t += p.multiplicity;
    return t;
  }

  /// Σ real degrees of the weights.
  int degree() const {
    int d = 0;
    for (const auto& p : pairs_) d += divisor_.basis()[p.weight].real_degree;
    return d;
  }

  /// Order of the symmetry group of the weighted multiset.
  BigInt aut_order() const {
    std::map<std::pair<int, int>, unsigned> counts;
    for (const auto& p : pairs_) ++counts[{p.multiplicity, p.weight}];
    BigInt r = 1;
    for (const auto& [key, c] : counts) r *= factorial(c);
    return r;
  }

  /// Order of the symmetry group of the underlying integer partition.
  BigInt aut_order_unweighted() const {
    std::map<int, unsigned> counts;
    for (const auto& p : pairs_) ++counts[p.multiplicity];
    BigInt r = 1;
    for (const auto& [m, c] : counts) r *= factorial(c);
    return r;
  }

  /// Δ = Π m_j · |Aut| with the weighted automorphism count.
  BigInt delta_factor() const {
    BigInt r = aut_order();
    for (const auto& p : pairs_) r *= p.multiplicity;
    return r;
  }

  /// Replaces every weight by its Poincaré dual.
  WeightedPartition dual() const {
    auto d = dual_basis(divisor_);
    std::vector<WeightedPair> out;
    for (const auto& p : pairs_) out.push_back({p.multiplicity, d[p.weight]});
    return WeightedPartition(divisor_, out);
  }

  /// "(2,1)+(1,pt)"; "" for the empty partition.
  std::string to_string() const {
    std::string out;
    for (const auto& p : pairs_) {
      if (!out.empty()) out += "+";
      out += "(" + std::to_string(p.multiplicity) + "," + divisor_.basis()[p.weight].label + ")";
    }
    return out;
  }

  friend bool operator==(const WeightedPartition& a, const WeightedPartition& b) {
    return a.divisor_ == b.divisor_ && a.pairs_ == b.pairs_;
  }
  friend bool operator<(const WeightedPartition& a, const WeightedPartition& b) {
    auto key = [](const WeightedPartition& w) {
      std::vector<std::pair<int, int>> v;
      for (const auto& p : w.pairs_) v.emplace_back(p.multiplicity, p.weight);
      return v;
    };
    return key(a) < key(b);
  }

 private:
  // Decreasing by size; ties broken by weight index so equal multisets
  // have identical representations.
  void canonicalize() {
    std::sort(pairs_.begin(), pairs_.end(), [&](const WeightedPair& a, const WeightedPair& b) {
      auto c = size_compare(divisor_, a, b);
      if (c != 0) return c > 0;
      return a.weight > b.weight;
    });
  }

  Space divisor_;
  std::vector<WeightedPair> pairs_;
};

/// Parses "(2,1)+(1,pt)" with weight labels resolved in the divisor space.
/// "", "()" and "0" denote the empty partition.
inline WeightedPartition parse_partition(const Space& divisor, std::string_view text) {
  std::vector<WeightedPair> pairs;
  if (text.empty() || text == "()" || text == "0" || text == "empty") return WeightedPartition(divisor);
  std::size_t pos = 0;
  auto bad = [&] { fail(ErrorKind::Parameter, "malformed partition: " + std::string(text)); };
  while (pos < text.size()) {
    if (text[pos] != '(') bad();
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) bad();
    auto inner = text.substr(pos + 1, close - pos - 1);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos || comma == 0) bad();
    int m = 0;
    for (char c : inner.substr(0, comma)) {
      if (c < '0' || c > '9') bad();
      m = m * 10 + (c - '0');
      if (m > 1000) bad();
    }
    pairs.push_back({m, divisor.find(inner.substr(comma + 1))});
    pos = close + 1;
    if (pos < text.size()) {
      if (text[pos] != '+') bad();
      ++pos;
      if (pos == text.size()) bad();
    }
  }
  return WeightedPartition(divisor, pairs);
}

/// Compares sorted pairs by size; at the first differing index the larger
/// size wins. With an equal common prefix the longer partition is greater.
inline std::weak_ordering lex_compare(const WeightedPartition& a, const WeightedPartition& b) {
  if (!(a.divisor() == b.divisor())) fail(ErrorKind::Parameter, "partitions over different divisors");
  std::size_t n = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = size_compare(a.divisor(), a.pairs()[i], b.pairs()[i]);
    if (c != 0) return c;
  }
  return a.length() <=> b.length();
}

/// Data indexing a genus-zero relative invariant ⟨ϖ | μ⟩_{0,A}.
struct InvariantKey {
  long degree = 0;
  int genus = 0;
  std::vector<RingElement> insertions;
  WeightedPartition partition;

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < insertions.size(); ++i) out += (i ? "," : "") + insertions[i].to_string();
    return out + " | " + partition.to_string() + ">_" + std::to_string(degree);
  }
};

/// Ordering of `a` relative to `b`: less means a ∘< b. Clauses in order:
/// smaller curve degree, smaller genus, fewer absolute insertions, larger
/// deg(μ), lexicographically larger μ.
inline std::partial_ordering key_compare(const InvariantKey& a, const InvariantKey& b) {
  if (a.degree != b.degree) return a.degree <=> b.degree;
  if (a.genus != b.genus) return a.genus <=> b.genus;
  if (a.insertions.size() != b.insertions.size()) return a.insertions.size() <=> b.insertions.size();
  int da = a.partition.degree(), db = b.partition.degree();
  if (da != db) return db <=> da;
  auto lex = lex_compare(a.partition, b.partition);
  if (lex < 0) return std::partial_ordering::greater;
  if (lex > 0) return std::partial_ordering::less;
  return std::partial_ordering::equivalent;
}

/// Set partitions of {0, ..., n-1}, blocks listed by first element.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

/// Integer partitions of n in decreasing parts.
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace gw
