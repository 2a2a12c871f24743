#pragma once

// Finite graded cohomology rings of the testbed spaces (point, projective
// spaces, Grassmannians), the Poincaré pairing, and divisor push-forward.
// Only even-degree classes occur, so no sign bookkeeping is needed.

#include <gw/error.hpp>
#include <gw/rational.hpp>
#include <gw/schubert.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gw {

enum class SpaceKind { Point, ProjectiveSpace, Grassmannian };

struct BasisClass {
  int index = 0;
  int real_degree = 0;
  std::string label;
  schubert::Young shape;  // exponent {i} for h^i on P^n, λ for σ_λ on Gr
};

class Space {
 public:
  static Space point() { return Space(SpaceKind::Point, 0, 0); }

  static Space projective(int n) {
    if (n < 1) fail(ErrorKind::Parameter, "projective space needs n >= 1");
    return Space(SpaceKind::ProjectiveSpace, 1, n);
  }

  static Space grassmannian(int k, int n) {
    if (k < 1 || k >= n) fail(ErrorKind::Parameter, "Grassmannian needs 1 <= k < n");
    return Space(SpaceKind::Grassmannian, k, n);
  }

  SpaceKind kind() const { return kind_; }
  /// Gr(k, n) parameters; P^n reports k = 1 and n = its dimension.
  int k() const { return k_; }
  int n() const { return n_; }

  int complex_dimension() const {
    switch (kind_) {
      case SpaceKind::Point: return 0;
      case SpaceKind::ProjectiveSpace: return n_;
      case SpaceKind::Grassmannian: return k_ * (n_ - k_);
    }
    return 0;
  }

  /// c_1(TX) evaluated on the H_2 generator.
  int chern_number() const {
    switch (kind_) {
      case SpaceKind::Point: return 0;
      case SpaceKind::ProjectiveSpace: return n_ + 1;
      case SpaceKind::Grassmannian: return n_;
    }
    return 0;
  }

  bool has_curves() const { return kind_ != SpaceKind::Point; }
  std::optional<std::string> h2_generator_name() const {
    if (!has_curves()) return std::nullopt;
    return kind_ == SpaceKind::ProjectiveSpace ? "line" : "line(σ_1 dual)";
  }

  const std::vector<BasisClass>& basis() const { return *basis_; }
  std::size_t rank() const { return basis_->size(); }
  int top_index() const { return static_cast<int>(basis_->size()) - 1; }

  /// Index of the degree-2 generator, absent for a point.
  std::optional<int> divisor_index() const {
    for (const auto& b : *basis_)
      if (b.real_degree == 2) return b.index;
    return std::nullopt;
  }

  std::string name() const {
    switch (kind_) {
      case SpaceKind::Point: return "pt";
      case SpaceKind::ProjectiveSpace: return "pn:" + std::to_string(n_);
      case SpaceKind::Grassmannian: return "gr:" + std::to_string(k_) + ":" + std::to_string(n_);
    }
    return {};
  }

  /// Resolves canonical labels plus the aliases "id", "pt", "h" and the
  /// compact Schubert form "s21".
  int find(std::string_view label) const {
    if (label == "id" || label == "1") return 0;
    if (label == "pt") return top_index();
    if (label == "h" || label == "s1") {
      if (auto d = divisor_index()) return *d;
    }
    for (const auto& b : *basis_) {
      if (b.label == label) return b.index;
      if (kind_ == SpaceKind::Grassmannian && label.size() > 1 && label[0] == 's') {
        std::string compact = "s";
        for (int p : b.shape) compact += std::to_string(p);
        if (compact == label) return b.index;
      }
    }
    fail(ErrorKind::Parameter, "no basis class '" + std::string(label) + "' in " + name());
  }

  int find_shape(const schubert::Young& shape) const {
    for (const auto& b : *basis_)
      if (b.shape == shape) return b.index;
    fail(ErrorKind::Parameter, "shape is not a basis class of " + name());
  }

  friend bool operator==(const Space& a, const Space& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_ && a.n_ == b.n_;
  }

 private:
  Space(SpaceKind kind, int k, int n) : kind_(kind), k_(k), n_(n) {
    auto basis = std::make_shared<std::vector<BasisClass>>();
    switch (kind) {
      case SpaceKind::Point: basis->push_back({0, 0, "1", {}}); break;
      case SpaceKind::ProjectiveSpace:
        for (int i = 0; i <= n; ++i) {
          std::string label = i == 0 ? "1" : i == 1 ? "h" : "h^" + std::to_string(i);
          basis->push_back({i, 2 * i, label, i == 0 ? schubert::Young{} : schubert::Young{i}});
        }
        break;
      case SpaceKind::Grassmannian: {
        int idx = 0;
        for (auto& shape : schubert::partitions_in_box(k, n - k)) {
          std::string label = "1";
          if (!shape.empty()) {
            label = "s[";
            for (std::size_t i = 0; i < shape.size(); ++i)
              label += (i ? "," : "") + std::to_string(shape[i]);
            label += "]";
          }
          basis->push_back({idx++, 2 * schubert::size(shape), label, shape});
        }
        break;
      }
    }
    basis_ = std::move(basis);
  }

  SpaceKind kind_;
  int k_;
  int n_;
  std::shared_ptr<const std::vector<BasisClass>> basis_;
};

/// "pt", "pn:<n>" (alias "p<n>"), "gr:<k>:<n>".
inline Space parse_space(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 4) fail(ErrorKind::Parameter, "bad space descriptor: " + std::string(text));
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail(ErrorKind::Parameter, "bad space descriptor: " + std::string(text));
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (text == "pt") return Space::point();
  if (text.starts_with("pn:")) return Space::projective(to_int(text.substr(3)));
  if (text.starts_with("gr:")) {
    auto rest = text.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::Parameter, "bad space descriptor: " + std::string(text));
    return Space::grassmannian(to_int(rest.substr(0, colon)), to_int(rest.substr(colon + 1)));
  }
  if (text.size() > 1 && text[0] == 'p') return Space::projective(to_int(text.substr(1)));
  fail(ErrorKind::Parameter, "bad space descriptor: " + std::string(text));
}

class RingElement {
 public:
  explicit RingElement(Space space) : space_(std::move(space)) {}

  static RingElement basis(const Space& space, int index, Rational coeff = 1) {
    RingElement e(space);
    e.add(index, coeff);
    return e;
  }
  static RingElement unit(const Space& space) { return basis(space, 0); }
  static RingElement point_class(const Space& space) { return basis(space, space.top_index()); }
  static RingElement parse(const Space& space, std::string_view label) {
    return basis(space, space.find(label));
  }

  const Space& space() const { return space_; }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coefficient(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(int index, const Rational& c) {
    if (index < 0 || index >= static_cast<int>(space_.rank()))
      fail(ErrorKind::Parameter, "basis index out of range");
    Rational& slot = coeffs_[index];
    slot += c;
    if (slot == 0) coeffs_.erase(index);
  }

  bool is_homogeneous() const { return degree().has_value() || is_zero(); }

  /// Real degree, or nullopt when zero or mixed.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [i, c] : coeffs_) {
      int di = space_.basis()[i].real_degree;
      if (d && *d != di) return std::nullopt;
      d = di;
    }
    return d;
  }

  /// Single basis class times a scalar, if this element is one.
  std::optional<std::pair<int, Rational>> as_monomial() const {
    if (coeffs_.size() != 1) return std::nullopt;
    return *coeffs_.begin();
  }

  RingElement& operator+=(const RingElement& o) {
    check_same(o);
    for (const auto& [i, c] : o.coeffs_) add(i, c);
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    check_same(o);
    for (const auto& [i, c] : o.coeffs_) add(i, -c);
    return *this;
  }
  RingElement& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [i, c] : coeffs_) c *= s;
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
  friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      if (c != 1) out += c.str() + "*";
      out += space_.basis()[i].label;
    }
    return out;
  }

  void check_same(const RingElement& o) const {
    if (!(space_ == o.space_)) fail(ErrorKind::Parameter, "ring elements live in different spaces");
  }

 private:
  Space space_;
  std::map<int, Rational> coeffs_;
};

/// Structure constants for a product of two basis classes.
inline RingElement basis_product(const Space& space, int a, int b) {
  RingElement out(space);
  const auto& ba = space.basis()[a];
  const auto& bb = space.basis()[b];
  switch (space.kind()) {
    case SpaceKind::Point: out.add(0, 1); break;
    case SpaceKind::ProjectiveSpace: {
      int e = a + b;
      if (e <= space.n()) out.add(e, 1);
      break;
    }
    case SpaceKind::Grassmannian:
      for (const auto& [nu, c] : schubert::classical_product(ba.shape, bb.shape, space.k(), space.n()))
        out.add(space.find_shape(nu), Rational(c));
      break;
  }
  return out;
}

inline RingElement cup(const RingElement& a, const RingElement& b) {
  a.check_same(b);
  RingElement out(a.space());
  for (const auto& [i, ci] : a.coefficients())
    for (const auto& [j, cj] : b.coefficients()) {
      RingElement p = basis_product(a.space(), i, j);
      for (const auto& [m, cm] : p.coefficients()) out.add(m, ci * cj * cm);
    }
  return out;
}

inline RingElement cup_all(const Space& space, const std::vector<RingElement>& factors) {
  RingElement acc = RingElement::unit(space);
  for (const auto& f : factors) acc = cup(acc, f);
  return acc;
}

/// Coefficient of the point class.
inline Rational integrate(const RingElement& a) { return a.coefficient(a.space().top_index()); }

/// For each basis index a, the index a' with ∫ β_a ∪ β_a' = 1. The pairing
/// on the Schubert / monomial basis is a permutation matrix; anything else is
/// an internal error.
inline std::vector<int> dual_basis(const Space& space) {
  const int r = static_cast<int>(space.rank());
  std::vector<int> dual(r, -1);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      Rational v = integrate(basis_product(space, a, b));
      if (v == 0) continue;
      if (v != 1 || dual[a] != -1) fail(ErrorKind::Internal, "pairing is not a permutation on " + space.name());
      dual[a] = b;
    }
    if (dual[a] == -1) fail(ErrorKind::Internal, "degenerate pairing on " + space.name());
  }
  return dual;
}

/// Inclusion of a divisor Z into an ambient space X, described by ι^* on
/// basis classes, the class [Z], and c_1 of the normal bundle.
struct DivisorDescriptor {
  Space ambient;
  Space divisor;
  std::vector<RingElement> restriction;  // ι^* of each ambient basis class
  RingElement divisor_class;             // [Z] in H^2(X)
  RingElement normal_c1;                 // c_1(N_{Z|X}) in H^2(Z)
  bool positive = true;                  // user-asserted positivity of N_{Z|X}
  std::string name;

  RingElement restrict(const RingElement& a) const {
    RingElement out(divisor);
    for (const auto& [i, c] : a.coefficients()) out += restriction.at(i) * c;
    return out;
  }

  /// ι^!(β): the class with ∫_X ι^!(β) ∪ α = ∫_Z β ∪ ι^*α for every α.
  RingElement shriek(const RingElement& beta) const {
    if (!(beta.space() == divisor)) fail(ErrorKind::Parameter, "shriek expects a divisor class");
    RingElement out(ambient);
    auto dual = dual_basis(ambient);
    for (const auto& b : ambient.basis()) {
      Rational c = integrate(cup(beta, restriction[dual[b.index]]));
      if (c != 0) out.add(b.index, c);
    }
    return out;
  }

  /// c_1(N)(A) for A of degree d on the divisor.
  long normal_degree() const {
    auto idx = divisor.divisor_index();
    if (!idx) return 0;
    return static_cast<long>(normal_c1.coefficient(*idx));
  }

  /// Z · A for A of degree d on the ambient space.
  long intersection(long d) const {
    auto idx = ambient.divisor_index();
    if (!idx) return 0;
    return d * static_cast<long>(divisor_class.coefficient(*idx));
  }

  /// Degree in H_2(X) of the push-forward of a degree-a class of Z.
  long pushforward_degree(long a) const {
    auto hx = ambient.divisor_index();
    auto hz = divisor.divisor_index();
    if (!hx || !hz) return 0;
    return a * static_cast<long>(restriction[*hx].coefficient(*hz));
  }

  /// Checks degree preservation, ring compatibility of ι^* on basis pairs,
  /// and ∫_X [Z] ∪ α = ∫_Z ι^*α.
  void validate() const {
    if (restriction.size() != ambient.rank()) fail(ErrorKind::Internal, "restriction map has wrong size");
    for (const auto& a : ambient.basis()) {
      auto d = restriction[a.index].degree();
      if (d && *d != a.real_degree) fail(ErrorKind::Internal, "restriction is not degree preserving");
      for (const auto& b : ambient.basis()) {
        RingElement lhs = restrict(basis_product(ambient, a.index, b.index));
        RingElement rhs = cup(restriction[a.index], restriction[b.index]);
        if (!(lhs == rhs)) fail(ErrorKind::Internal, "restriction is not a ring map");
      }
      RingElement alpha = RingElement::basis(ambient, a.index);
      if (integrate(cup(divisor_class, alpha)) != integrate(restriction[a.index]))
        fail(ErrorKind::Internal, "[Z] does not represent the divisor");
    }
  }
};

/// P^{n-1} ⊂ P^n as a hyperplane (for n = 1, a point in P^1).
inline DivisorDescriptor hyperplane_divisor(int n) {
  Space x = Space::projective(n);
  Space z = n == 1 ? Space::point() : Space::projective(n - 1);
  std::vector<RingElement> res;
  for (int i = 0; i <= n; ++i) {
    RingElement r(z);
    if (i < static_cast<int>(z.rank())) r.add(i, 1);
    res.push_back(r);
  }
  RingElement nc1(z);
  if (auto idx = z.divisor_index()) nc1.add(*idx, 1);
  DivisorDescriptor d{x, z, res, RingElement::basis(x, 1), nc1, true, n == 1 ? "p1-pt" : "p" + std::to_string(n) + "-hyperplane"};
  d.validate();
  return d;
}

/// A smooth conic in P^2: Z = P^1, ι^*h = 2[pt], [Z] = 2h, normal degree 4.
inline DivisorDescriptor plane_conic_divisor() {
  Space x = Space::projective(2);
  Space z = Space::projective(1);
  std::vector<RingElement> res{RingElement::unit(z), RingElement::basis(z, 1, 2), RingElement(z)};
  DivisorDescriptor d{x, z, res, RingElement::basis(x, 1, 2), RingElement::basis(z, 1, 4), true, "p2-conic"};
  d.validate();
  return d;
}

}  // namespace gw
