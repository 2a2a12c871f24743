#pragma once

// Degeneration of X along a divisor Z into X ∪_Z P(N ⊕ O): term enumeration,
// the absolute/relative comparison identity, recovery of relative invariants
// of (X, Z) by Möbius inversion, and lifting rational-connectedness witnesses
// from Z to X.

#include <gw/error.hpp>
#include <gw/partitions.hpp>
#include <gw/quantum.hpp>
#include <gw/rational.hpp>
#include <gw/relative.hpp>
#include <gw/ring.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace gw {

/// X cut along Z. The Y side is the bundle P(N ⊕ O) over Z.
struct Cut {
  DivisorDescriptor divisor;
  BundleSpec bundle;
  std::string name;
  int search_bound = 3;

  const Space& ambient() const { return divisor.ambient; }
  const Space& base() const { return divisor.divisor; }
  std::optional<long> V() const { return min_normal_chern(divisor, search_bound); }
};

inline Cut make_cut(DivisorDescriptor d, std::string name) {
  BundleSpec b{d.divisor, d.normal_degree()};
  return Cut{std::move(d), std::move(b), std::move(name)};
}

inline std::vector<std::string> testbed_names() { return {"p1-pt", "p2-line", "p2-conic", "p3-plane"}; }

inline Cut testbed(std::string_view name) {
  if (name == "p1-pt") return make_cut(hyperplane_divisor(1), "p1-pt");
  if (name == "p2-line") return make_cut(hyperplane_divisor(2), "p2-line");
  if (name == "p2-conic") return make_cut(plane_conic_divisor(), "p2-conic");
  if (name == "p3-plane") return make_cut(hyperplane_divisor(3), "p3-plane");
  fail(ErrorKind::Parameter, "unknown testbed: " + std::string(name));
}

/// Values of genus-zero relative invariants ⟨α_1, ..., α_m | 𝒯⟩^{X,Z}_d.
using RelativeOracle = std::function<Rational(const InvariantKey&)>;

inline std::string shriek_label(const RingElement& beta) { return "i!(" + beta.to_string() + ")"; }

/// Order-independent text key for a relative invariant.
inline std::string key_string(const InvariantKey& key) {
  std::vector<std::string> parts;
  for (const auto& a : key.insertions) parts.push_back(a.to_string());
  std::sort(parts.begin(), parts.end());
  std::string out = "<";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + " | " + key.partition.to_string() + ">_" + std::to_string(key.degree);
}

inline std::string describe_query(const Cut& cut, long d, const std::vector<RingElement>& alphas,
                                  const std::vector<RingElement>& betas) {
  std::string out = "<";
  bool first = true;
  for (const auto& a : alphas) out += (std::exchange(first, false) ? "" : ",") + a.to_string();
  for (const auto& b : betas) out += (std::exchange(first, false) ? "" : ",") + shriek_label(b);
  return out + ">^{" + cut.ambient().name() + "}_" + std::to_string(d);
}

/// ⟨α_1, ..., α_m, ι^!(β_1), ..., ι^!(β_l)⟩^X_d.
inline Rational comparison_lhs(const Cut& cut, long d, const std::vector<RingElement>& alphas,
                               const std::vector<RingElement>& betas) {
  InvariantQuery q{cut.ambient(), d, alphas};
  for (const auto& b : betas) q.insertions.push_back(cut.divisor.shriek(b));
  try {
    return gw_invariant(q);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unsupported)
      fail(ErrorKind::Unsupported, "blocking query " + describe_query(cut, d, alphas, betas) + ": " + e.message());
    throw;
  }
}

/// Positivity of the divisor and V >= l.
inline void require_comparison_hypotheses(const Cut& cut, std::size_t l) {
  if (!cut.divisor.positive) fail(ErrorKind::HypothesisViolated, cut.name + ": divisor is not positive");
  auto v = cut.V();
  if (v && *v < static_cast<long>(l))
    fail(ErrorKind::HypothesisViolated,
         cut.name + ": V = " + std::to_string(*v) + " is smaller than l = " + std::to_string(l));
}

struct ComparisonPartition {
  std::vector<std::vector<int>> blocks;
  WeightedPartition partition;
  Rational coefficient;
  BigInt orderings;  // W! / (W - q)!: injective placements of the blocks on the contact points
};

/// Partitions 𝒯 = {(1, γ_B)}_B ∪ {(1, 1_Z)}^{W-q} over set partitions of the
/// betas into q <= W blocks, γ_B the product of the block. Blocks with γ_B = 0
/// are dropped; a γ_B with several basis terms is expanded multilinearly.
/// Relative invariants are normalized by 1/|Aut(T_k)| of the unweighted
/// contact orders, so each set partition enters the comparison sum with the
/// number of ways to place its blocks on the W contact points.
inline std::vector<ComparisonPartition> comparison_partitions(const Space& z, const std::vector<RingElement>& betas,
                                                              long W) {
  if (!betas.empty() && W < 1) fail(ErrorKind::Parameter, "the curve class must meet the divisor");
  for (const auto& b : betas) {
    if (!(b.space() == z)) fail(ErrorKind::Parameter, "betas must be classes of " + z.name());
    if (!b.is_homogeneous()) fail(ErrorKind::Parameter, "betas must be homogeneous");
  }
  std::vector<ComparisonPartition> out;
  for (const auto& sigma : set_partitions(static_cast<int>(betas.size()))) {
    long q = static_cast<long>(sigma.size());
    if (q > W) continue;
    std::vector<std::pair<std::vector<WeightedPair>, Rational>> acc{{{}, Rational(1)}};
    bool zero = false;
    for (const auto& block : sigma) {
      RingElement gamma = RingElement::unit(z);
      for (int j : block) gamma = cup(gamma, betas[j]);
      if (gamma.is_zero()) {
        zero = true;
        break;
      }
      std::vector<std::pair<std::vector<WeightedPair>, Rational>> next;
      for (const auto& [pairs, c] : acc)
        for (const auto& [i, ci] : gamma.coefficients()) {
          auto p = pairs;
          p.push_back({1, i});
          next.emplace_back(std::move(p), c * ci);
        }
      acc = std::move(next);
    }
    if (zero) continue;
    for (auto& [pairs, c] : acc) {
      for (long i = q; i < W; ++i) pairs.push_back({1, 0});
      BigInt orderings = factorial(static_cast<unsigned>(W)) / factorial(static_cast<unsigned>(W - q));
      out.push_back({sigma, WeightedPartition(z, pairs), c, orderings});
    }
  }
  return out;
}

/// Σ_𝒯 orderings · ⟨α | 𝒯⟩^{X,Z}_d over comparison_partitions. Refuses when V < l.
inline Rational comparison_rhs(const RelativeOracle& oracle, const Cut& cut, long d,
                               const std::vector<RingElement>& alphas, const std::vector<RingElement>& betas) {
  require_comparison_hypotheses(cut, betas.size());
  Rational sum = 0;
  for (const auto& cp : comparison_partitions(cut.base(), betas, cut.divisor.intersection(d)))
    sum += cp.coefficient * Rational(cp.orderings) * oracle(InvariantKey{d, 0, alphas, cp.partition});
  return sum;
}

struct YComponent {
  RelQuery query;
  Rational value;
};

struct DegenerationTerm {
  std::vector<std::vector<int>> blocks;  // β indices carried by each non-empty fiber component
  InvariantKey x_side;
  std::vector<YComponent> y_side;
  BigInt delta;      // Δ(𝒯) with the weighted automorphism count
  Rational x_value;  // ⟨α | 𝒯⟩^{X,Z}
  Rational y_value;  // disconnected Y-side invariant against the dual weights
  Rational value;    // x_value · delta · y_value
};

struct PrunedComponent {
  RelQuery query;
  std::string reason;
};

struct TermEnumeration {
  std::vector<DegenerationTerm> terms;
  std::vector<PrunedComponent> pruned;
  std::vector<std::string> notes;
};

namespace detail {

inline int real_degree(const RingElement& a) {
  if (a.is_zero()) return -1;
  auto d = a.degree();
  if (!d) fail(ErrorKind::Parameter, "insertions must be homogeneous");
  return *d;
}

inline void enumerate_compositions(long total, std::size_t parts, std::vector<long>& cur,
                                   const std::function<void()>& emit) {
  if (cur.size() == parts) {
    emit();
    return;
  }
  long used = 0;
  for (long s : cur) used += s;
  for (long s = 1; used + s + static_cast<long>(parts - cur.size() - 1) <= total; ++s) {
    cur.push_back(s);
    enumerate_compositions(total, parts, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

/// Genus-zero terms of the degeneration of ⟨α, ι^!(β)⟩^X_d. The α stay on X
/// and every ι^!(β) is carried by the Y side as β·[Z]. The X side is
/// connected of degree d; each Y component is a fiber multiple glued at one
/// contact point. Components forced to vanish are listed in `pruned`.
inline TermEnumeration enumerate_terms(const Cut& cut, long d, const std::vector<RingElement>& alphas,
                                       const std::vector<RingElement>& betas, const RelativeOracle& oracle) {
  const Space& x = cut.ambient();
  const Space& z = cut.base();
  for (const auto& a : alphas)
    if (!(a.space() == x)) fail(ErrorKind::Parameter, "alphas must be classes of " + x.name());
  for (const auto& b : betas)
    if (!(b.space() == z)) fail(ErrorKind::Parameter, "betas must be classes of " + z.name());
  if (d < 1) fail(ErrorKind::Unsupported, "constant maps are not modelled");
  try {
    require_comparison_hypotheses(cut, betas.size());
  } catch (const Error& e) {
    fail(ErrorKind::Unsupported, "Y-side classes with a base part are not modelled (" + e.message() + ")");
  }

  TermEnumeration out;
  out.notes.push_back("Y-side classes with a base part vanish: the divisor is positive and V >= l");
  std::size_t n_ins = alphas.size() + betas.size();
  long total_degree = 0;
  for (const auto& a : alphas) {
    int dg = detail::real_degree(a);
    if (dg < 0) {
      out.notes.push_back("zero insertion");
      return out;
    }
    total_degree += dg;
  }
  for (const auto& b : betas) {
    int dg = detail::real_degree(b);
    if (dg < 0) {
      out.notes.push_back("zero insertion");
      return out;
    }
    total_degree += dg + 2;
  }
  if (total_degree != virtual_dimension(x, d, static_cast<int>(n_ins))) {
    out.notes.push_back("dimension mismatch");
    return out;
  }

  const long W = cut.divisor.intersection(d);
  const auto dual = dual_basis(z);
  const int rank = static_cast<int>(z.rank());
  std::set<std::string> pruned_seen;

  auto component_query = [&](const std::vector<int>& block, long s, int weight) {
    RelQuery q{cut.bundle, {0, s}, {}, WeightedPartition(z, {{static_cast<int>(s), weight}})};
    for (int j : block) q.insertions.push_back(RelInsertion::zero_section(betas[j]));
    return q;
  };

  for (const auto& sigma : set_partitions(static_cast<int>(betas.size()))) {
    const std::size_t q = sigma.size();
    if (static_cast<long>(q) > W) continue;
    std::vector<long> block_s;
    detail::enumerate_compositions(W, q, block_s, [&] {
      long used = 0;
      for (long s : block_s) used += s;
      std::vector<std::vector<int>> empty_parts = {{}};
      if (W - used > 0) empty_parts = integer_partitions(static_cast<int>(W - used));
      for (const auto& empties : empty_parts) {
        // components: (block, contact order)
        std::vector<std::pair<std::vector<int>, long>> comps;
        for (std::size_t i = 0; i < q; ++i) comps.emplace_back(sigma[i], block_s[i]);
        for (int s : empties) comps.emplace_back(std::vector<int>{}, s);

        bool dropped = false;
        for (const auto& [block, s] : comps) {
          RelQuery cq = component_query(block, s, 0);
          if (fiber_vanishing(cq)) {
            dropped = true;
            auto v = vanishing_data(cq);
            std::string reason = v.zero_section >= 1 && (v.contacts + v.zero_section + v.pullbacks >= 3) &&
                                         cq.cls.zero_section_pairing(cq.bundle) >= v.descendent_total
                                     ? "vanishing theorem for P^1-bundles"
                                     : "fiber-class dimension count";
            if (pruned_seen.insert(cq.to_string()).second) out.pruned.push_back({cq, reason});
          }
        }
        if (dropped) continue;

        // Every surviving component is a single-contact fiber F. Expand the
        // diagonal of Z over each contact point.
        std::vector<std::vector<std::pair<int, YComponent>>> choices;
        for (const auto& [block, s] : comps) {
          std::vector<std::pair<int, YComponent>> opts;
          for (int delta = 0; delta < rank; ++delta) {
            RelQuery cq = component_query(block, s, delta);
            RelValue rv = evaluate(cq);
            if (!rv.vanishes && rv.value != 0) opts.push_back({delta, YComponent{cq, rv.value}});
          }
          choices.push_back(std::move(opts));
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        bool any = std::all_of(choices.begin(), choices.end(), [](const auto& c) { return !c.empty(); });
        while (any) {
          std::vector<WeightedPair> xpairs;
          std::vector<YComponent> ys;
          std::map<std::tuple<std::vector<int>, long, int>, unsigned> tails;
          Rational yprod = 1;
          for (std::size_t c = 0; c < comps.size(); ++c) {
            const auto& [dw, yc] = choices[c][pick[c]];
            xpairs.push_back({static_cast<int>(comps[c].second), dual[dw]});
            ys.push_back(yc);
            yprod *= yc.value;
            ++tails[{comps[c].first, comps[c].second, dw}];
          }
          // Labelled contact points: a configuration with symmetry group
          // Aut_c carries W!/|Aut_c| labellings of the glued tails.
          BigInt aut_c = 1;
          for (const auto& [tail, count] : tails) aut_c *= factorial(count);
          WeightedPartition xp(z, xpairs);
          Rational y = yprod * Rational(xp.aut_order_unweighted()) / Rational(aut_c * xp.aut_order());
          InvariantKey key{d, 0, alphas, xp};
          Rational xv = oracle(key);
          BigInt delta = xp.delta_factor();
          out.terms.push_back({sigma, key, ys, delta, xv, y, xv * Rational(delta) * y});
          std::size_t c = 0;
          while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
          if (c == pick.size()) break;
        }
      }
    });
  }
  return out;
}

struct ComparisonReport {
  std::string query;
  Rational lhs;
  Rational rhs;
  TermEnumeration enumeration;
  bool equal = false;
};

inline ComparisonReport verify_comparison(const Cut& cut, long d, const std::vector<RingElement>& alphas,
                                          const std::vector<RingElement>& betas, const RelativeOracle& oracle) {
  require_comparison_hypotheses(cut, betas.size());
  ComparisonReport r;
  r.query = describe_query(cut, d, alphas, betas);
  r.lhs = comparison_lhs(cut, d, alphas, betas);
  r.enumeration = enumerate_terms(cut, d, alphas, betas, oracle);
  r.rhs = 0;
  for (const auto& t : r.enumeration.terms) r.rhs += t.value;
  r.equal = r.lhs == r.rhs;
  return r;
}

/// Closed-form relative values of (P^1, point), viewed as the bundle
/// P(O ⊕ O) over a point: [pt] is the zero section and 1 the pull-back of 1.
inline RelativeOracle bundle_oracle(const Cut& cut) {
  if (!(cut.ambient() == Space::projective(1) && cut.base() == Space::point()))
    fail(ErrorKind::Unsupported, cut.name + ": closed forms need X to be a P^1-bundle over the divisor");
  BundleSpec b{Space::point(), 0};
  return [b](const InvariantKey& key) -> Rational {
    if (key.genus != 0) fail(ErrorKind::Unsupported, "genus zero only");
    RingElement one = RingElement::unit(b.base);
    std::vector<std::pair<std::vector<RelInsertion>, Rational>> acc{{{}, Rational(1)}};
    for (const auto& a : key.insertions) {
      std::vector<std::pair<std::vector<RelInsertion>, Rational>> next;
      for (const auto& [ins, c] : acc)
        for (const auto& [i, ci] : a.coefficients()) {
          auto v = ins;
          v.push_back(i == 0 ? RelInsertion::pullback(one) : RelInsertion::zero_section(one));
          next.emplace_back(std::move(v), c * ci);
        }
      acc = std::move(next);
    }
    Rational sum = 0;
    for (const auto& [ins, c] : acc) sum += c * evaluate(RelQuery{b, {0, key.degree}, ins, key.partition}).value;
    return sum;
  };
}

struct SolveEquation {
  std::vector<int> subset;
  Rational lhs;
};

struct SolveEntry {
  InvariantKey key;
  Rational value;
};

struct SolveResult {
  std::string testbed;
  long degree = 0;
  std::vector<RingElement> alphas;
  std::vector<RingElement> betas;
  std::map<std::string, SolveEntry> table;
  std::vector<SolveEquation> equations;
  std::vector<std::string> refused;
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
};

namespace detail {

inline std::string blocks_string(const std::vector<std::vector<int>>& blocks) {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += i ? ",{" : "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) out += (j ? "," : "") + std::to_string(blocks[i][j]);
    out += "}";
  }
  return out + "}";
}

}  // namespace detail

/// Recovers ⟨α | 𝒯⟩^{X,Z}_d for every 𝒯 reachable from sub-families of
/// `betas`. The comparison identity for the merged family of a set partition
/// τ sums the relative values of all coarsenings of τ, so the values follow by
/// Möbius inversion on the partition lattice. A set partition with more than V
/// blocks would need an equation with l > V and is refused.
inline SolveResult solve_relative(const Cut& cut, long d, const std::vector<RingElement>& alphas,
                                  const std::vector<RingElement>& betas) {
  if (d < 1) fail(ErrorKind::Parameter, "degree must be positive");
  if (!cut.divisor.positive) fail(ErrorKind::HypothesisViolated, cut.name + ": divisor is not positive");
  const Space& z = cut.base();
  for (const auto& b : betas)
    if (!(b.space() == z)) fail(ErrorKind::Parameter, "betas must be classes of " + z.name());
  const auto V = cut.V();
  const long W = cut.divisor.intersection(d);
  const int l = static_cast<int>(betas.size());
  if (l > 16) fail(ErrorKind::Parameter, "too many betas");

  SolveResult res{cut.name, d, alphas, betas, {}, {}, {}, {}};
  std::map<std::vector<std::string>, Rational> cache;
  auto lhs_of = [&](const std::vector<RingElement>& gammas) {
    std::vector<std::string> k;
    for (const auto& g : gammas) k.push_back(g.to_string());
    std::sort(k.begin(), k.end());
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Rational v = comparison_lhs(cut, d, alphas, gammas);
    cache.emplace(k, v);
    return v;
  };
  auto within_v = [&](std::size_t n) { return !V || static_cast<long>(n) <= *V; };

  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) S.push_back(i);
    if (within_v(S.size())) {
      std::vector<RingElement> bs;
      for (int i : S) bs.push_back(betas[i]);
      res.equations.push_back({S, lhs_of(bs)});
    }
    for (const auto& local : set_partitions(static_cast<int>(S.size()))) {
      std::vector<std::vector<int>> sigma;
      for (const auto& blk : local) {
        std::vector<int> b;
        for (int j : blk) b.push_back(S[j]);
        sigma.push_back(b);
      }
      const std::size_t q = sigma.size();
      if (!within_v(q)) {
        res.refused.push_back(detail::blocks_string(sigma) + ": needs an equation with l = " + std::to_string(q) +
                              " > V");
        continue;
      }
      std::vector<RingElement> gammas;
      for (const auto& blk : sigma) {
        RingElement g = RingElement::unit(z);
        for (int j : blk) g = cup(g, betas[j]);
        gammas.push_back(g);
      }
      Rational R = 0;
      for (const auto& tau : set_partitions(static_cast<int>(q))) {
        Rational mu = 1;
        std::vector<RingElement> merged;
        for (const auto& c : tau) {
          long n = static_cast<long>(c.size());
          mu *= Rational(factorial(static_cast<unsigned>(n - 1))) * ((n - 1) % 2 ? -1 : 1);
          RingElement g = RingElement::unit(z);
          for (int i : c) g = cup(g, gammas[i]);
          merged.push_back(g);
        }
        R += mu * lhs_of(merged);
      }
      bool zero = std::any_of(gammas.begin(), gammas.end(), [](const RingElement& g) { return g.is_zero(); });
      if (zero || static_cast<long>(q) > W) {
        if (R != 0)
          res.inconsistencies.push_back(detail::blocks_string(sigma) + ": expected 0, got " + to_string(R));
        continue;
      }
      std::vector<WeightedPair> pairs;
      Rational coeff = 1;
      bool monomial = true;
      for (const auto& g : gammas) {
        if (g.coefficients().size() != 1) {
          monomial = false;
          break;
        }
        pairs.push_back({1, g.coefficients().begin()->first});
        coeff *= g.coefficients().begin()->second;
      }
      if (!monomial) {
        res.refused.push_back(detail::blocks_string(sigma) + ": weight is not a single basis class");
        continue;
      }
      for (long i = static_cast<long>(q); i < W; ++i) pairs.push_back({1, 0});
      InvariantKey key{d, 0, alphas, WeightedPartition(z, pairs)};
      Rational value =
          R / (coeff * Rational(factorial(static_cast<unsigned>(W)) / factorial(static_cast<unsigned>(W - q))));
      std::string ks = key_string(key);
      auto it = res.table.find(ks);
      if (it == res.table.end())
        res.table.emplace(ks, SolveEntry{key, value});
      else if (it->second.value != value)
        res.inconsistencies.push_back(ks + ": " + to_string(it->second.value) + " vs " + to_string(value));
    }
  }
  return res;
}

inline RelativeOracle table_oracle(const SolveResult& res) {
  auto table = std::make_shared<std::map<std::string, SolveEntry>>(res.table);
  return [table](const InvariantKey& key) -> Rational {
    auto it = table->find(key_string(key));
    if (it == table->end()) fail(ErrorKind::Unsupported, "relative invariant not determined: " + key_string(key));
    return it->second.value;
  };
}

/// A genus-zero invariant of the divisor ⟨ι^*α..., pt × points, β...⟩^Z_degree.
struct DivisorWitness {
  long degree = 0;
  int points = 0;
  std::vector<RingElement> betas;
  std::vector<RingElement> alphas;  // classes of X, restricted to Z
};

struct LiftResult {
  DivisorWitness witness;     // after padding with divisor classes
  Rational divisor_value;     // of the unpadded witness
  InvariantQuery x_query{Space::point(), 0, {}};
  std::vector<std::string> labels;
  Rational value;
  int points = 0;
  std::string route;  // "direct" or "relative"
  std::optional<InvariantKey> relative_key;
};

inline Rational divisor_witness_value(const Cut& cut, const DivisorWitness& w) {
  InvariantQuery q{cut.base(), w.degree, {}};
  for (const auto& a : w.alphas) q.insertions.push_back(cut.divisor.restrict(a));
  for (int i = 0; i < w.points; ++i) q.insertions.push_back(RingElement::point_class(cut.base()));
  for (const auto& b : w.betas) q.insertions.push_back(b);
  return gw_invariant(q);
}

/// A nonzero invariant of Z in the minimal class with at least k points.
inline DivisorWitness default_divisor_witness(const Cut& cut, int k) {
  auto V = cut.V();
  if (!V) fail(ErrorKind::Inapplicable, cut.name + ": the divisor has no stably effective class");
  long a = *V / cut.divisor.normal_degree();
  auto w = witness_in_degree(cut.base(), k, static_cast<int>(a));
  if (!w) fail(ErrorKind::Inapplicable, cut.name + ": no " + std::to_string(k) + "-point invariant of the divisor in degree " + std::to_string(a));
  DivisorWitness out{a, 0, {}, {}};
  RingElement pt = RingElement::point_class(cut.base());
  for (const auto& c : w->query.insertions) {
    if (out.points < k && c == pt)
      ++out.points;
    else
      out.betas.push_back(c);
  }
  return out;
}

/// Lifts a k-point witness on Z to one on X. The direct route evaluates
/// ⟨α, pt × k, ι^!(β)...⟩^X after padding the witness with divisor classes
/// to Z·A + 1 insertions. The relative route selects the minimal nonzero
/// relative invariant among single-term comparison identities.
inline LiftResult rc_lift(const Cut& cut, const DivisorWitness& witness, bool force_relative_route = false) {
  const Space& x = cut.ambient();
  const Space& z = cut.base();
  if (!cut.divisor.positive) fail(ErrorKind::Inapplicable, cut.name + ": divisor is not positive");
  auto V = cut.V();
  if (!V) fail(ErrorKind::Inapplicable, cut.name + ": the divisor has no stably effective class");
  Rational zv = divisor_witness_value(cut, witness);
  if (zv == 0) fail(ErrorKind::Precondition, "divisor witness vanishes");
  if (cut.divisor.normal_degree() * witness.degree != *V)
    fail(ErrorKind::Inapplicable, "witness class is not minimal: c_1(N)(A) != V");
  long r = witness.points + static_cast<long>(witness.betas.size());
  if (r > *V + 1) fail(ErrorKind::Inapplicable, "witness has more than V + 1 insertions");

  LiftResult out;
  out.witness = witness;
  out.divisor_value = zv;
  out.points = witness.points;
  auto hz = z.divisor_index();
  if (!hz) fail(ErrorKind::Inapplicable, "divisor has no degree-two class");
  while (out.witness.points + static_cast<long>(out.witness.betas.size()) < *V + 1)
    out.witness.betas.push_back(RingElement::basis(z, *hz));

  const long dx = cut.divisor.pushforward_degree(witness.degree);
  auto build = [&](const std::vector<RingElement>& gammas) {
    InvariantQuery q{x, dx, {}};
    std::vector<std::string> labels;
    for (const auto& a : witness.alphas) {
      q.insertions.push_back(a);
      labels.push_back(a.to_string());
    }
    for (int i = 0; i < witness.points; ++i) {
      q.insertions.push_back(RingElement::point_class(x));
      labels.push_back("pt");
    }
    for (const auto& g : gammas) {
      q.insertions.push_back(cut.divisor.shriek(g));
      labels.push_back(shriek_label(g));
    }
    return std::make_pair(q, labels);
  };

  auto [direct, direct_labels] = build(out.witness.betas);
  Rational dv = gw_invariant(direct);
  if (dv != 0 && !force_relative_route) {
    out.x_query = direct;
    out.labels = direct_labels;
    out.value = dv;
    out.route = "direct";
    return out;
  }

  const long W = cut.divisor.intersection(dx);
  const auto& bs = out.witness.betas;
  std::vector<RingElement> xins = witness.alphas;
  for (int i = 0; i < witness.points; ++i) xins.push_back(RingElement::point_class(x));
  struct Candidate {
    InvariantKey key;
    std::vector<RingElement> gammas;
    Rational value;
  };
  std::vector<Candidate> candidates;
  for (const auto& sigma : set_partitions(static_cast<int>(bs.size()))) {
    long q = static_cast<long>(sigma.size());
    if (q > W || q > *V) continue;
    std::vector<RingElement> gammas;
    for (const auto& blk : sigma) {
      RingElement g = RingElement::unit(z);
      for (int j : blk) g = cup(g, bs[j]);
      gammas.push_back(g);
    }
    bool ok = std::all_of(gammas.begin(), gammas.end(),
                          [](const RingElement& g) { return g.coefficients().size() == 1; });
    for (std::size_t i = 0; ok && i < gammas.size(); ++i)
      for (std::size_t j = i + 1; ok && j < gammas.size(); ++j)
        if (!cup(gammas[i], gammas[j]).is_zero()) ok = false;
    if (!ok) continue;
    std::vector<WeightedPair> pairs;
    for (const auto& g : gammas) pairs.push_back({1, g.coefficients().begin()->first});
    for (long i = q; i < W; ++i) pairs.push_back({1, 0});
    Rational coeff = 1;
    for (const auto& g : gammas) coeff *= g.coefficients().begin()->second;
    Rational v = gw_invariant(build(gammas).first) /
                 (coeff * Rational(factorial(static_cast<unsigned>(W)) / factorial(static_cast<unsigned>(W - q))));
    if (v != 0) candidates.push_back({InvariantKey{dx, 0, xins, WeightedPartition(z, pairs)}, gammas, v});
  }
  const Candidate* best = nullptr;
  for (const auto& c : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](const Candidate& o) { return key_compare(o.key, c.key) < 0; });
    if (minimal) {
      best = &c;
      break;
    }
  }
  if (!best) fail(ErrorKind::Inapplicable, "no nonzero relative invariant in the comparison sum");
  auto [q, labels] = build(best->gammas);
  out.x_query = q;
  out.labels = labels;
  out.value = gw_invariant(q);
  out.route = "relative";
  out.relative_key = best->key;
  return out;
}

}  // namespace gw
