#include <gtest/gtest.h>

#include <random>

#include "a1h/ideal.hpp"
#include "a1h/parse.hpp"
#include "random_poly.hpp"

namespace a1h {
namespace {

RingPtr XY() { return Ring::base({"x", "y"}); }

Polynomial p(const char* s, const RingPtr& R = XY()) { return poly_parse(s, R); }

Ideal I(std::initializer_list<const char*> ss, const RingPtr& R = XY()) {
  std::vector<Polynomial> g;
  for (auto s : ss) g.push_back(poly_parse(s, R));
  return Ideal(R, std::move(g));
}

TEST(IdealMember, Basics) {
  EXPECT_TRUE(ideal_member(p("x*y + y^2"), I({"x", "y^2"})));
  EXPECT_FALSE(ideal_member(p("y"), I({"x", "y^2"})));
  EXPECT_TRUE(ideal_member(p("0"), I({})));
  EXPECT_FALSE(ideal_member(p("1"), I({})));
}

TEST(Quotient, RemovesKnownFactor) {
  Ideal Q = ideal_quotient(I({"x*(y^2+x)"}), p("x"));
  // Both inclusions by membership.
  EXPECT_TRUE(ideal_member(p("y^2+x"), Q));
  for (const auto& g : Q.generators()) EXPECT_TRUE(ideal_member(g, I({"y^2+x"})));
}

TEST(Quotient, GeneralCase) {
  // <x^2, x*y> : x = <x, y>
  Ideal Q = ideal_quotient(I({"x^2", "x*y"}), p("x"));
  EXPECT_TRUE(ideal_equal(Q, I({"x", "y"})));
  // f in I gives the unit ideal.
  EXPECT_TRUE(ideal_quotient(I({"x", "y"}), p("x+y")).is_unit());
  EXPECT_THROW(ideal_quotient(I({"x"}), p("0")), DomainError);
}

TEST(Saturate, StabilizesForCoprimePair) {
  Polynomial q = p("1+x*y"), pp = p("x^2");
  Ideal S = ideal_saturate(Ideal(XY(), {p("x") * q, pp}), q);
  EXPECT_TRUE(ideal_equal(S, I({"x"})));
  // x-power saturation of a monomial ideal.
  EXPECT_TRUE(ideal_equal(ideal_saturate(I({"x^3*y", "x^2*y^2"}), p("x")), I({"y"})));
  EXPECT_THROW(ideal_saturate(I({"x"}), p("0")), DomainError);
}

TEST(Saturate, CapIsEnforced) {
  // x^5 : x^∞ needs 5 proper quotients; with cap 2 it must fail loudly.
  EXPECT_THROW(ideal_saturate(I({"x^5"}), p("x"), 2), SaturationCapExceeded);
  EXPECT_TRUE(ideal_saturate(I({"x^5"}), p("x"), 8).is_unit());
}

TEST(Elimination, Examples) {
  auto R = Ring::with_homotopy({"x"});
  Ideal E = elimination_ideal(I({"T*x - 1"}, R), std::string(kHomotopyVar));
  EXPECT_TRUE(E.is_zero());
  EXPECT_FALSE(E.ring()->has_homotopy());
  // Independent check: no low-degree g(x) lies in <T*x - 1>.
  Ideal J = I({"T*x - 1"}, R);
  for (const char* g : {"x", "x^2", "x - 1", "x^3 + x", "1"}) EXPECT_FALSE(ideal_member(p(g, R), J));

  // <x - T, y - T^2> ∩ k[x, y] = <y - x^2>.
  auto R2 = Ring::with_homotopy({"x", "y"});
  Ideal E2 = elimination_ideal(I({"x - T", "y - T^2"}, R2), std::string(kHomotopyVar));
  EXPECT_TRUE(ideal_equal(E2, I({"y - x^2"})));
}

TEST(Intersect, Examples) {
  Ideal M = ideal_intersect(I({"x"}), I({"y"}));
  EXPECT_TRUE(ideal_equal(M, I({"x*y"})));
  Ideal N = ideal_intersect(I({"x^2", "y"}), I({"x", "y^2"}));
  EXPECT_TRUE(ideal_equal(N, I({"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(ideal_intersect(I({"x"}), I({})).is_zero());
}

TEST(Gcd, Examples) {
  EXPECT_EQ(poly_gcd(p("x^2*y"), p("x*y^2")), p("x*y"));
  EXPECT_EQ(poly_gcd(p("3*x + 6"), p("0")), p("x + 2"));
  Polynomial g = poly_gcd(p("x*(y^2+x)"), p("x^2"));
  EXPECT_EQ(g, p("x"));
  // Cross-check: exact quotients, and the cofactors share no factor.
  auto a = exact_divide(p("x*(y^2+x)"), g);
  auto b = exact_divide(p("x^2"), g);
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(poly_gcd(*a, *b).is_one());
  EXPECT_TRUE(poly_gcd(p("y^2+x"), p("x")).is_one());
  EXPECT_THROW(poly_gcd(p("0"), p("0")), DomainError);
  EXPECT_THROW(poly_gcd(p("x", Ring::with_homotopy({"x"})), p("T", Ring::with_homotopy({"x"}))),
               DomainError);
}

TEST(Lcm, Examples) {
  EXPECT_EQ(poly_lcm(p("x^2*y"), p("x*y^2")), p("x^2*y^2"));
  EXPECT_EQ(poly_lcm(p("x*(1+y)"), p("x^2")), p("x^2*(1+y)"));
}

TEST(Squarefree, Examples) {
  Polynomial f = p("x^2*(y^2+x)");
  Polynomial s = squarefree_part(f);
  EXPECT_EQ(s, p("x*(y^2+x)"));
  EXPECT_TRUE(exact_divide(f, s).has_value());
  EXPECT_TRUE(exact_divide(s.pow(f.total_degree()), f).has_value());
  for (const char* c : {"x", "y^2+x"}) EXPECT_FALSE(exact_divide(s, p(c).pow(2)).has_value());

  EXPECT_EQ(squarefree_part(p("x")), p("x"));
  EXPECT_EQ(squarefree_part(p("(1+y)^3")), p("y+1"));
  EXPECT_TRUE(squarefree_part(p("7")).is_one());
  EXPECT_THROW(squarefree_part(p("0")), DomainError);
}

class IdealProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{424242};
};

TEST_F(IdealProperties, QuotientAdjunction) {
  auto R = XY();
  for (int n = 0; n < 30; ++n) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(testing::random_nonzero(rng, R, 3, 3, 2));
    Ideal J(R, gens);
    Polynomial f = testing::random_nonzero(rng, R, 2, 2, 2);
    Ideal Q = ideal_quotient(J, f);
    for (const auto& g : Q.generators()) EXPECT_TRUE(ideal_member(g * f, J));
    for (int k = 0; k < 5; ++k) {
      Polynomial g = testing::random_poly(rng, R, 3, 3, 2);
      EXPECT_EQ(ideal_member(g, Q), ideal_member(g * f, J));
    }
    // Every generator multiple of J lies in the quotient.
    for (const auto& g : J.generators()) EXPECT_TRUE(ideal_member(g, Q));
  }
}

TEST_F(IdealProperties, RadicalSoundness) {
  auto R = XY();
  for (int n = 0; n < 40; ++n) {
    Polynomial a = testing::random_nonzero(rng, R, 2, 2, 2);
    Polynomial b = testing::random_nonzero(rng, R, 2, 2, 2);
    Polynomial f = (n % 2) ? a * a * b : a * b;
    if (f.total_degree() > 4 || f.is_constant()) continue;
    Polynomial s = squarefree_part(f);
    EXPECT_TRUE(ideal_member(s.pow(f.total_degree()), principal(f)));
    EXPECT_TRUE(ideal_member(f, principal(s)));
  }
}

TEST_F(IdealProperties, GcdDividesAndIsMaximal) {
  auto R = XY();
  for (int n = 0; n < 30; ++n) {
    Polynomial c = testing::random_nonzero(rng, R, 2, 2, 2);
    Polynomial a = testing::random_nonzero(rng, R, 2, 2, 2) * c;
    Polynomial b = testing::random_nonzero(rng, R, 2, 2, 2) * c;
    Polynomial g = poly_gcd(a, b);
    EXPECT_TRUE(exact_divide(a, g).has_value());
    EXPECT_TRUE(exact_divide(b, g).has_value());
    EXPECT_TRUE(exact_divide(g, c).has_value());
  }
}

}  // namespace
}  // namespace a1h
