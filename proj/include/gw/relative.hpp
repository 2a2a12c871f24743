#pragma once

// Genus-zero relative invariants of Y = P(L ⊕ O) over a base Z, relative to
// the infinity section D ≅ Z. Fiber-class invariants come from closed forms;
// base classes with empty contact data reduce to invariants of Z.

#include <gw/error.hpp>
#include <gw/partitions.hpp>
#include <gw/quantum.hpp>
#include <gw/rational.hpp>
#include <gw/ring.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gw {

struct BundleSpec {
  Space base;
  long c1L = 0;  // c_1(L) on the H_2 generator of the base

  /// c_1(L)(C) >= 0 for every holomorphic curve C in the base.
  bool nonnegative() const { return c1L >= 0 || !base.has_curves(); }

  std::string to_string() const { return base.name() + ":c1=" + std::to_string(c1L); }
};

/// A' + μF with A' ∈ H_2(Z) pushed forward by the zero section.
struct BundleClass {
  long base_degree = 0;
  long fiber = 0;

  bool is_fiber() const { return base_degree == 0 && fiber > 0; }
  /// Intersection with the infinity section.
  long infinity_pairing() const { return fiber; }
  /// Intersection with the zero section.
  long zero_section_pairing(const BundleSpec& b) const { return b.c1L * base_degree + fiber; }

  std::string to_string() const {
    std::string out;
    if (base_degree) out += std::to_string(base_degree) + "B";
    if (fiber || out.empty()) out += (out.empty() ? "" : "+") + std::to_string(fiber) + "F";
    return out;
  }
};

enum class RelInsertionKind { Pullback, ZeroSection };

/// π^*α or τ_{ψ} (β · [Z]). Descendents occur only on zero-section classes.
struct RelInsertion {
  RelInsertionKind kind = RelInsertionKind::ZeroSection;
  RingElement cls;
  int psi_power = 0;

  static RelInsertion pullback(RingElement a) { return {RelInsertionKind::Pullback, std::move(a), 0}; }
  static RelInsertion zero_section(RingElement b, int psi = 0) {
    return {RelInsertionKind::ZeroSection, std::move(b), psi};
  }

  std::string to_string() const {
    std::string c = (kind == RelInsertionKind::Pullback ? "pb:" : "zs:") + cls.to_string();
    return psi_power ? "tau" + std::to_string(psi_power) + "(" + c + ")" : c;
  }
};

struct RelQuery {
  BundleSpec bundle;
  BundleClass cls;
  std::vector<RelInsertion> insertions;
  WeightedPartition partition;

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < insertions.size(); ++i) out += (i ? "," : "") + insertions[i].to_string();
    return out + " | " + partition.to_string() + ">^{Y,D}_" + cls.to_string();
  }
};

/// ⟨τ_{d-1} pt | (s, pt)⟩ on (P^1, point): 1/s! when d = s, else 0.
inline Rational rel_p1_two_point(long s, long d) {
  if (s < 1) fail(ErrorKind::Precondition, "contact order must be positive");
  if (d < 1) fail(ErrorKind::Precondition, "descendent index must be positive");
  return d == s ? Rational(1, factorial(static_cast<unsigned>(s))) : Rational(0);
}

struct VanishingData {
  BundleClass cls;
  long zero_section = 0;      // l
  long pullbacks = 0;         // q
  long contacts = 0;          // k
  long descendent_total = 0;  // Σ d_i over zero-section insertions (d_i = ψ-power + 1)
};

/// True when the invariant is forced to vanish: the non-fiber / three-or-more
/// special insertions theorem (needs Z^*(A) >= Σ d_i and a zero-section
/// insertion), or the fiber-class dimension count (no descendents, anything
/// but s = k = 1, q = 0). False means undecided, not nonzero.
inline bool fiber_vanishing(const BundleSpec& bundle, const VanishingData& v) {
  if (!bundle.nonnegative()) fail(ErrorKind::Inapplicable, "c_1(L) is negative on some curve of the base");
  const auto& A = v.cls;
  if (v.zero_section >= 1 && (!A.is_fiber() || v.contacts + v.zero_section + v.pullbacks >= 3) &&
      A.zero_section_pairing(bundle) >= v.descendent_total)
    return true;
  if (A.is_fiber() && v.descendent_total == v.zero_section && !(A.fiber == 1 && v.contacts == 1 && v.pullbacks == 0))
    return true;
  return false;
}

inline VanishingData vanishing_data(const RelQuery& q) {
  VanishingData v{q.cls, 0, 0, static_cast<long>(q.partition.length()), 0};
  for (const auto& ins : q.insertions) {
    if (ins.kind == RelInsertionKind::Pullback) {
      ++v.pullbacks;
    } else {
      ++v.zero_section;
      v.descendent_total += ins.psi_power + 1;
    }
  }
  return v;
}

inline bool fiber_vanishing(const RelQuery& q) { return fiber_vanishing(q.bundle, vanishing_data(q)); }

/// ⟨τ_{d-1}(β_0 · [Z]) | (s, β_∞)⟩_{sF} = (1/s!) ∫_Z β_0 β_∞ if d = s, else 0.
inline Rational fiber_two_point(long s, long d, const RingElement& beta0, const RingElement& beta_inf) {
  if (s < 1) fail(ErrorKind::Precondition, "fiber multiple must be positive");
  if (d != s) return 0;
  return integrate(cup(beta0, beta_inf)) / factorial(static_cast<unsigned>(s));
}

/// ⟨ι^!(β_1), ..., ι^!(β_l) | (1, γ)⟩_F = ∫_Z β_1 ⋯ β_l γ.
inline Rational fiber_one_relative(const std::vector<RingElement>& betas, const RingElement& gamma) {
  RingElement acc = gamma;
  for (const auto& b : betas) acc = cup(acc, b);
  return integrate(acc);
}

/// ⟨ϖ, β_1·[Z], ..., β_k·[Z] | ∅⟩^{Y,D}_{0,A} = ⟨ι^*ϖ, β_1, ..., β_k⟩^Z_{0,A}
/// for A ∈ H_2(Z) of degree a, valid when k = Z·A + 1. `pullbacks` are the
/// base classes α with ϖ = π^*α, so ι^*ϖ = α.
inline Rational empty_partition_divisor(const BundleSpec& bundle, long a, const std::vector<RingElement>& pullbacks,
                                        const std::vector<RingElement>& zero_section_betas) {
  if (!bundle.nonnegative()) fail(ErrorKind::Inapplicable, "c_1(L) is negative on some curve of the base");
  long expected = bundle.c1L * a + 1;
  if (static_cast<long>(zero_section_betas.size()) != expected)
    fail(ErrorKind::Precondition, "need Z·A + 1 = " + std::to_string(expected) + " zero-section insertions");
  InvariantQuery q{bundle.base, a, pullbacks};
  q.insertions.insert(q.insertions.end(), zero_section_betas.begin(), zero_section_betas.end());
  return gw_invariant(q);
}

/// Z has a nonzero genus-zero invariant in degree d.
inline bool stably_effective(const Space& z, int d) { return witness_in_degree(z, 0, d).has_value(); }

/// V = min{c_1(N)(A) > 0 : A stably effective, deg A <= search_bound};
/// nullopt stands for +∞ (no such class).
inline std::optional<long> min_normal_chern(const Space& divisor, long normal_degree, int search_bound = 3) {
  if (normal_degree <= 0) return std::nullopt;
  for (int d = 1; d <= search_bound; ++d)
    if (stably_effective(divisor, d)) return normal_degree * d;
  return std::nullopt;
}

inline std::optional<long> min_normal_chern(const DivisorDescriptor& div, int search_bound = 3) {
  return min_normal_chern(div.divisor, div.normal_degree(), search_bound);
}

struct RelValue {
  bool vanishes = false;
  Rational value;
  std::string reason;
};

/// Routes a relative query to the vanishing predicate or a closed form.
inline RelValue evaluate(const RelQuery& q) {
  const Space& z = q.bundle.base;
  if (!(q.partition.divisor() == z)) fail(ErrorKind::Parameter, "partition weights must live on the base");
  if (q.cls.base_degree < 0 || q.cls.fiber < 0) fail(ErrorKind::Parameter, "curve class must be effective");
  if (q.cls.base_degree > 0 && !z.has_curves()) fail(ErrorKind::Parameter, "the base has no curve classes");
  if (q.partition.total() != q.cls.infinity_pairing())
    fail(ErrorKind::Precondition, "partition total must equal D·A = " + std::to_string(q.cls.infinity_pairing()));
  for (const auto& ins : q.insertions) {
    if (!(ins.cls.space() == z)) fail(ErrorKind::Parameter, "insertion classes must live on the base");
    if (ins.psi_power < 0 || (ins.psi_power > 0 && ins.kind == RelInsertionKind::Pullback))
      fail(ErrorKind::Parameter, "descendents are only allowed on zero-section insertions");
    if (ins.cls.is_zero()) return {false, 0, "zero insertion"};
  }
  if (q.cls.base_degree == 0 && q.cls.fiber == 0) fail(ErrorKind::Unsupported, "constant maps are not modelled");

  VanishingData v = vanishing_data(q);
  if (fiber_vanishing(q.bundle, v)) {
    bool structural = v.zero_section >= 1 && (!q.cls.is_fiber() || v.contacts + v.zero_section + v.pullbacks >= 3) &&
                      q.cls.zero_section_pairing(q.bundle) >= v.descendent_total;
    return {true, 0, structural ? "vanishing theorem for P^1-bundles" : "fiber-class dimension count"};
  }

  std::vector<RingElement> betas, alphas;
  for (const auto& ins : q.insertions) (ins.kind == RelInsertionKind::Pullback ? alphas : betas).push_back(ins.cls);

  if (q.cls.is_fiber()) {
    if (v.contacts == 1 && v.pullbacks == 0 && q.insertions.size() == 1) {
      const auto& p = q.partition.pairs().front();
      return {false,
              fiber_two_point(p.multiplicity, q.insertions[0].psi_power + 1, q.insertions[0].cls,
                              RingElement::basis(z, p.weight)),
              "two-point fiber class"};
    }
    if (q.cls.fiber == 1 && v.contacts == 1 && v.pullbacks == 0 && v.descendent_total == v.zero_section)
      return {false, fiber_one_relative(betas, RingElement::basis(z, q.partition.pairs().front().weight)),
              "single-contact fiber class"};
    fail(ErrorKind::Unsupported, "no closed form for " + q.to_string());
  }

  if (q.cls.fiber == 0 && v.descendent_total == v.zero_section) {
    if (static_cast<long>(betas.size()) != q.bundle.c1L * q.cls.base_degree + 1)
      fail(ErrorKind::Unsupported, "empty-partition reduction needs Z·A + 1 zero-section insertions");
    return {false, empty_partition_divisor(q.bundle, q.cls.base_degree, alphas, betas), "empty contact data"};
  }
  fail(ErrorKind::Unsupported, "no closed form for " + q.to_string());
}

}  // namespace gw
