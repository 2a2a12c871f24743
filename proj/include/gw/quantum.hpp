#pragma once

// Genus-zero absolute Gromov-Witten invariants of the testbed spaces. The
// oracle is partial on purpose: it answers exactly or throws Unsupported.

#include <gw/error.hpp>
#include <gw/rational.hpp>
#include <gw/ring.hpp>
#include <gw/schubert.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gw {

struct InvariantQuery {
  Space space;
  long degree = 0;
  std::vector<RingElement> insertions;

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < insertions.size(); ++i) out += (i ? "," : "") + insertions[i].to_string();
    return out + ">^" + space.name() + "_" + std::to_string(degree);
  }
};

/// 2 c_1(A) + 2(n - 3) + 2k at genus zero.
inline long virtual_dimension(const Space& space, long d, long k) {
  return 2 * d * space.chern_number() + 2 * (space.complex_dimension() - 3) + 2 * k;
}

/// N_1 .. N_{max_d}; index 0 is unused.
inline std::vector<BigInt> plane_curve_counts(int max_d) {
  if (max_d < 1) fail(ErrorKind::Parameter, "plane curve counts start at degree 1");
  std::vector<BigInt> N(max_d + 1, 0);
  N[1] = 1;
  for (long d = 2; d <= max_d; ++d) {
    BigInt sum = 0;
    for (long d1 = 1; d1 < d; ++d1) {
      long d2 = d - d1;
      sum += N[d1] * N[d2] * d1 * d1 * d2 *
             (d2 * binomial(3 * d - 4, 3 * d1 - 2) - d1 * binomial(3 * d - 4, 3 * d1 - 1));
    }
    N[d] = sum;
  }
  return N;
}

/// Number of degree-d rational plane curves through 3d - 1 general points.
inline Rational wdvv_nd(int d) {
  if (d < 1) fail(ErrorKind::Parameter, "N_d needs d >= 1");
  return Rational(plane_curve_counts(d)[d]);
}

/// Σ_e q^e · (class). Grading: a q contributes 2 c_1 real degrees.
struct QuantumClass {
  Space space;
  std::map<int, RingElement> terms;

  bool is_zero() const { return terms.empty(); }

  void add(int q_power, const RingElement& e) {
    auto it = terms.find(q_power);
    if (it == terms.end()) it = terms.emplace(q_power, RingElement(space)).first;
    it->second += e;
    if (it->second.is_zero()) terms.erase(it);
  }

  friend bool operator==(const QuantumClass& a, const QuantumClass& b) {
    return a.space == b.space && a.terms == b.terms;
  }

  /// Common total real degree of all terms, or nullopt if mixed.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [e, cls] : terms) {
      auto cd = cls.degree();
      if (!cd) return std::nullopt;
      int total = *cd + 2 * e * space.chern_number();
      if (d && *d != total) return std::nullopt;
      d = total;
    }
    return d;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, cls] : terms) {
      if (!out.empty()) out += " + ";
      std::string q = e == 0 ? "" : e == 1 ? "q*" : "q^" + std::to_string(e) + "*";
      out += q + "(" + cls.to_string() + ")";
    }
    return out;
  }
};

namespace detail {

inline schubert::Young grassmann_shape(const Space& s, int index) {
  return s.basis()[index].shape;
}

/// P^n is handled as Gr(1, n + 1) by the rim-hook route.
inline std::pair<int, int> grassmann_params(const Space& s) {
  if (s.kind() == SpaceKind::Grassmannian) return {s.k(), s.n()};
  if (s.kind() == SpaceKind::ProjectiveSpace) return {1, s.n() + 1};
  fail(ErrorKind::Unsupported, "no quantum product on " + s.name());
}

}  // namespace detail

/// σ_λ ⋆ σ_μ in the small quantum cohomology of Gr(k, n) (or P^n).
inline QuantumClass rim_hook_product(const schubert::Young& lambda, const schubert::Young& mu, const Space& space) {
  auto [k, n] = detail::grassmann_params(space);
  QuantumClass out{space, {}};
  for (const auto& [e, sum] : schubert::quantum_product(lambda, mu, k, n)) {
    RingElement cls(space);
    for (const auto& [shape, c] : sum) cls.add(space.find_shape(shape), Rational(c));
    out.add(e, cls);
  }
  return out;
}

inline QuantumClass quantum_multiply(const QuantumClass& a, const QuantumClass& b) {
  QuantumClass out{a.space, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      for (const auto& [i, xi] : ca.coefficients())
        for (const auto& [j, xj] : cb.coefficients()) {
          QuantumClass p = rim_hook_product(a.space.basis()[i].shape, a.space.basis()[j].shape, a.space);
          for (const auto& [e, cls] : p.terms) out.add(ea + eb + e, cls * (xi * xj));
        }
  return out;
}

inline QuantumClass as_quantum(const RingElement& e) {
  QuantumClass q{e.space(), {}};
  q.add(0, e);
  return q;
}

/// Invariant on a tuple of basis classes.
inline Rational basis_invariant(const Space& space, long d, const std::vector<int>& indices) {
  if (d < 0) fail(ErrorKind::Parameter, "negative curve degree");
  const auto& basis = space.basis();
  long total = 0;
  for (int i : indices) total += basis[i].real_degree;
  if (total != virtual_dimension(space, d, static_cast<long>(indices.size()))) return 0;

  if (d == 0) {
    if (indices.size() != 3) return 0;
    return integrate(cup(basis_product(space, indices[0], indices[1]), RingElement::basis(space, indices[2])));
  }
  if (!space.has_curves()) fail(ErrorKind::Parameter, "a point has no curve classes");

  // Fundamental class and divisor axioms.
  Rational factor = 1;
  std::vector<int> rest;
  for (int i : indices) {
    if (basis[i].real_degree == 0) return 0;
    if (basis[i].real_degree == 2)
      factor *= d;
    else
      rest.push_back(i);
  }

  if (space.kind() == SpaceKind::ProjectiveSpace && space.n() == 1) return d == 1 ? factor : Rational(0);

  if (space.kind() == SpaceKind::ProjectiveSpace && space.n() == 2) {
    // Only point classes remain.
    if (static_cast<long>(rest.size()) != 3 * d - 1) return 0;
    return factor * wdvv_nd(static_cast<int>(d));
  }

  if (rest.size() > 3)
    fail(ErrorKind::Unsupported, "more than three non-divisor insertions on " + space.name());
  auto h = space.divisor_index();
  std::size_t pads = 3 - rest.size();
  while (rest.size() < 3) rest.push_back(*h);
  auto dual = dual_basis(space);
  QuantumClass prod = rim_hook_product(basis[rest[0]].shape, basis[rest[1]].shape, space);
  auto it = prod.terms.find(static_cast<int>(d));
  Rational three_point = it == prod.terms.end() ? Rational(0) : it->second.coefficient(dual[rest[2]]);
  for (std::size_t i = 0; i < pads; ++i) three_point /= d;
  return factor * three_point;
}

/// ⟨α_1, ..., α_k⟩_{0,d}, multilinear in the insertions.
inline Rational gw_invariant(const InvariantQuery& q) {
  for (const auto& ins : q.insertions) {
    if (!(ins.space() == q.space)) fail(ErrorKind::Parameter, "insertion lives in the wrong space");
    if (ins.is_zero()) return 0;
  }
  Rational total = 0;
  std::vector<int> idx(q.insertions.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t pos, Rational coeff) {
    if (pos == q.insertions.size()) {
      total += coeff * basis_invariant(q.space, q.degree, idx);
      return;
    }
    for (const auto& [i, c] : q.insertions[pos].coefficients()) {
      idx[pos] = i;
      rec(pos + 1, coeff * c);
    }
  };
  rec(0, 1);
  return total;
}

struct Witness {
  InvariantQuery query;
  Rational value;
};

/// First nonzero descendent-free invariant of degree d with at least
/// k_points point insertions. Divisor insertions are never needed (they only
/// rescale by d), so the search covers points plus classes of real degree
/// 4..2n-2, with the number of points fixed by the dimension constraint.
inline std::optional<Witness> witness_in_degree(const Space& space, int k_points, int d) {
  if (k_points < 0) fail(ErrorKind::Parameter, "k_points must be nonnegative");
  if (!space.has_curves() || d < 1) return std::nullopt;
  const int dim = space.complex_dimension();
  const int point_weight = 2 * dim - 2;
  std::vector<int> extras;
  for (const auto& b : space.basis())
    if (b.real_degree >= 4 && b.real_degree < 2 * dim) extras.push_back(b.index);

  const long budget = 2L * d * space.chern_number() + 2L * dim - 6;
  if (budget < 0) return std::nullopt;
  std::optional<Witness> found;
  std::vector<int> chosen;
  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long used) {
    long rem = budget - used;
    long points = -1;
    if (point_weight == 0) {
      if (rem == 0) points = k_points;
    } else if (rem % point_weight == 0 && rem / point_weight >= k_points) {
      points = rem / point_weight;
    }
    if (points >= 0) {
      std::vector<int> idx(points, space.top_index());
      idx.insert(idx.end(), chosen.begin(), chosen.end());
      try {
        Rational v = basis_invariant(space, d, idx);
        if (v != 0) {
          InvariantQuery q{space, d, {}};
          for (int i : idx) q.insertions.push_back(RingElement::basis(space, i));
          found = Witness{q, v};
          return;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported) throw;
      }
    }
    for (std::size_t j = from; j < extras.size() && !found; ++j) {
      long w = space.basis()[extras[j]].real_degree - 2;
      if (used + w > budget) continue;
      chosen.push_back(extras[j]);
      rec(j, used + w);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return found;
}

/// Searches degrees 1..max_degree for a k_points-point strongly rationally
/// connected class and returns the first witness.
inline std::optional<Witness> rc_certificate(const Space& space, int k_points, int max_degree) {
  for (int d = 1; d <= max_degree; ++d)
    if (auto w = witness_in_degree(space, k_points, d)) return w;
  return std::nullopt;
}

}  // namespace gw
