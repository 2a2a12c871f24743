#include <gw/ring.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gw;

namespace {

RingElement el(const Space& s, const char* label) { return RingElement::parse(s, label); }

}  // namespace

TEST(Space, ProjectivePlaneBasis) {
  Space p2 = Space::projective(2);
  ASSERT_EQ(p2.rank(), 3u);
  EXPECT_EQ(p2.complex_dimension(), 2);
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (auto& b : p2.basis()) {
    labels.push_back(b.label);
    degrees.push_back(b.real_degree);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "h", "h^2"}));
  EXPECT_EQ(degrees, (std::vector<int>{0, 2, 4}));
}

TEST(Space, Point) {
  Space pt = Space::point();
  EXPECT_EQ(pt.rank(), 1u);
  EXPECT_EQ(pt.complex_dimension(), 0);
  EXPECT_FALSE(pt.h2_generator_name());
}

TEST(Space, Gr24BasisMatchesBoxEnumeration) {
  Space g = Space::grassmannian(2, 4);
  std::vector<std::string> labels;
  for (auto& b : g.basis()) labels.push_back(b.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "s[1]", "s[2]", "s[1,1]", "s[2,1]", "s[2,2]"}));
  EXPECT_EQ(g.complex_dimension(), 4);
}

TEST(Space, InvalidParameters) {
  EXPECT_THROW(Space::projective(0), Error);
  EXPECT_THROW(Space::grassmannian(0, 3), Error);
  EXPECT_THROW(Space::grassmannian(3, 3), Error);
  EXPECT_THROW(parse_space("gr:2"), Error);
  EXPECT_THROW(parse_space("torus"), Error);
}

TEST(Space, ParseDescriptors) {
  EXPECT_EQ(parse_space("pt"), Space::point());
  EXPECT_EQ(parse_space("pn:3"), Space::projective(3));
  EXPECT_EQ(parse_space("p2"), Space::projective(2));
  EXPECT_EQ(parse_space("gr:2:5"), Space::grassmannian(2, 5));
}

TEST(Space, DegreesWithinRange) {
  for (Space s : {Space::point(), Space::projective(3), Space::grassmannian(2, 5), Space::grassmannian(3, 6)})
    for (auto& b : s.basis()) {
      EXPECT_EQ(b.real_degree % 2, 0);
      EXPECT_LE(b.real_degree, 2 * s.complex_dimension());
    }
}

TEST(Cup, ProjectivePlane) {
  Space p2 = Space::projective(2);
  EXPECT_EQ(cup(el(p2, "h"), el(p2, "h")), el(p2, "h^2"));
  EXPECT_TRUE(cup(el(p2, "h^2"), el(p2, "h")).is_zero());
}

TEST(Cup, Gr24SigmaOneSquared) {
  Space g = Space::grassmannian(2, 4);
  EXPECT_EQ(cup(el(g, "s1"), el(g, "s1")), el(g, "s2") + el(g, "s11"));
}

TEST(Cup, SpaceMismatchThrows) {
  EXPECT_THROW(cup(RingElement::unit(Space::projective(1)), RingElement::unit(Space::projective(2))), Error);
}

TEST(Cup, GrassmannianAgreesWithTableauOracle) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {1, 4}}) {
    Space g = Space::grassmannian(k, n);
    for (auto& a : g.basis())
      for (auto& b : g.basis()) {
        RingElement expected(g);
        for (auto& [nu, c] : oracle::lr_product(a.shape, b.shape, k))
          if (schubert::fits(nu, k, n - k)) expected.add(g.find_shape(nu), c);
        EXPECT_EQ(basis_product(g, a.index, b.index), expected) << g.name() << " " << a.label << "*" << b.label;
      }
  }
}

TEST(Cup, AssociativeAndCommutative) {
  for (Space s : {Space::projective(3), Space::grassmannian(2, 4), Space::grassmannian(2, 5)}) {
    for (auto& a : s.basis())
      for (auto& b : s.basis()) {
        RingElement x = RingElement::basis(s, a.index), y = RingElement::basis(s, b.index);
        EXPECT_EQ(cup(x, y), cup(y, x));
        for (auto& c : s.basis()) {
          RingElement z = RingElement::basis(s, c.index);
          EXPECT_EQ(cup(cup(x, y), z), cup(x, cup(y, z)));
        }
      }
  }
}

TEST(Integrate, Normalization) {
  Space p2 = Space::projective(2);
  EXPECT_EQ(integrate(el(p2, "h^2")), 1);
  EXPECT_EQ(integrate(el(p2, "h")), 0);
  Space g = Space::grassmannian(2, 4);
  EXPECT_EQ(integrate(cup(el(g, "s2"), el(g, "s2"))), 1);
}

TEST(DualBasis, Tables) {
  Space p2 = Space::projective(2);
  EXPECT_EQ(dual_basis(p2), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(dual_basis(Space::point()), (std::vector<int>{0}));
  Space g = Space::grassmannian(2, 4);
  auto d = dual_basis(g);
  EXPECT_EQ(d[g.find("s1")], g.find("s21"));
  EXPECT_EQ(d[g.find("s2")], g.find("s2"));
  EXPECT_EQ(d[g.find("s11")], g.find("s11"));
}

TEST(DualBasis, InvolutionAndPermutationPairing) {
  for (Space s : {Space::point(), Space::projective(1), Space::projective(4), Space::grassmannian(2, 4),
                  Space::grassmannian(2, 6), Space::grassmannian(3, 6)}) {
    auto d = dual_basis(s);
    for (int a = 0; a < static_cast<int>(s.rank()); ++a) {
      EXPECT_EQ(d[d[a]], a);
      for (int b = 0; b < static_cast<int>(s.rank()); ++b)
        EXPECT_EQ(integrate(basis_product(s, a, b)), b == d[a] ? 1 : 0);
    }
  }
}

TEST(Divisor, LineInPlaneShriek) {
  auto div = hyperplane_divisor(2);
  EXPECT_EQ(div.shriek(RingElement::unit(div.divisor)), el(div.ambient, "h"));
  EXPECT_EQ(div.shriek(RingElement::point_class(div.divisor)), el(div.ambient, "h^2"));
  EXPECT_TRUE(div.shriek(RingElement(div.divisor)).is_zero());
}

TEST(Divisor, ConicShriek) {
  auto div = plane_conic_divisor();
  EXPECT_EQ(div.shriek(RingElement::unit(div.divisor)), el(div.ambient, "h") * 2);
  EXPECT_EQ(div.shriek(RingElement::point_class(div.divisor)), el(div.ambient, "h^2"));
  EXPECT_EQ(div.normal_degree(), 4);
  EXPECT_EQ(div.intersection(1), 2);
  EXPECT_EQ(div.pushforward_degree(1), 2);
}

TEST(Divisor, ProjectionFormulaExhaustive) {
  for (auto div : {hyperplane_divisor(1), hyperplane_divisor(2), hyperplane_divisor(3), plane_conic_divisor()}) {
    for (auto& b : div.divisor.basis()) {
      RingElement beta = RingElement::basis(div.divisor, b.index);
      RingElement up = div.shriek(beta);
      EXPECT_EQ(up.degree().value_or(-1), b.real_degree + 2);
      for (auto& a : div.ambient.basis()) {
        RingElement alpha = RingElement::basis(div.ambient, a.index);
        EXPECT_EQ(integrate(cup(up, alpha)), integrate(cup(beta, div.restrict(alpha))));
      }
    }
  }
}

TEST(Divisor, ValidateRejectsBrokenRestriction) {
  auto div = hyperplane_divisor(2);
  div.divisor_class = el(div.ambient, "h") * 3;
  EXPECT_THROW(div.validate(), Error);
}
