#include <gtest/gtest.h>

#include "support.hpp"

using namespace qpsym;
using namespace qtest;

namespace {

// Least x + y w > 1 (w = sqrt d, or (1 + sqrt d)/2 when d = 1 mod 4) with
// norm +-1, by direct search over y. Returns (x, y) in sqrt-d coordinates.
std::optional<std::pair<Rational, Rational>> pell_search(long d, long bound) {
  bool one_mod_four = d % 4 == 1;
  for (long y = 1; y <= bound; ++y) {
    for (int s : {-1, 1}) {
      // x^2 + t x y - c y^2 = s, t = trace(w), c = -norm(w)
      Integer t = one_mod_four ? 1 : 0;
      Integer c = one_mod_four ? Integer((d - 1) / 4) : Integer(d);
      // x = (-t y + sqrt(t^2 y^2 + 4(c y^2 + s))) / 2
      Integer disc = t * t * y * y + 4 * (c * y * y + s);
      if (disc < 0) continue;
      Integer r = isqrt(disc);
      if (r * r != disc) continue;
      Integer twice_x = -t * y + r;
      if (twice_x % 2 != 0) continue;
      Integer x = twice_x / 2;
      if (x > bound) continue;
      if (one_mod_four) return std::pair{Rational(x) + make_rational(y, 2), make_rational(y, 2)};
      return std::pair{Rational(x), Rational(y)};
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Units, KnownValues) {
  EXPECT_EQ(quadratic_fundamental_unit(3).coords(), (std::vector<Rational>{2, 1}));
  EXPECT_EQ(quadratic_fundamental_unit(2).coords(), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(quadratic_fundamental_unit(5).coords(), (std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)}));
  EXPECT_EQ(quadratic_fundamental_unit(13).coords(), (std::vector<Rational>{make_rational(3, 2), make_rational(1, 2)}));
  EXPECT_EQ(quadratic_fundamental_unit(46).coords(), (std::vector<Rational>{24335, 3588}));
  EXPECT_EQ(quadratic_fundamental_unit(94).coords(), (std::vector<Rational>{2143295, 221064}));
}

TEST(Units, Errors) {
  try {
    quadratic_fundamental_unit(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquarefree);
  }
  try {
    quadratic_fundamental_unit(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
  NumberField f = cbrt2();
  try {
    unit_group(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GeneratorsRequired);
  }
  try {
    verify_supplied_unit(f, elem(f, {2, 1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAUnit);
  }
  try {
    verify_supplied_unit(f, elem(f, {-1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TorsionOnly);
  }
  try {
    unit_group(f, {elem(f, {-1, 1, 0}), elem(f, {-1, 1, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongGeneratorCount);
  }
}

TEST(Units, MinimalAgainstPellSearch) {
  for (long d = 2; d <= 50; ++d) {
    if (!is_squarefree(d)) continue;
    auto expected = pell_search(d, 100000);
    ASSERT_TRUE(expected) << d;
    auto [x, y] = quadratic_fundamental_unit_coords(d);
    EXPECT_EQ(x, expected->first) << "d = " << d;
    EXPECT_EQ(y, expected->second) << "d = " << d;
  }
}

TEST(Units, ContinuedFractionPeriodsUpTo1000) {
  for (long d = 2; d <= 1000; ++d) {
    if (!is_squarefree(d)) continue;
    bool one_mod_four = d % 4 == 1;
    SurdState start = one_mod_four ? SurdState{1, 2} : SurdState{0, 1};
    ContinuedFraction cf = expand_surd(d, start);
    ASSERT_GE(cf.period, 1u);
    const auto& a = cf.partial_quotients;
    // a_1 .. a_{l-1} is a palindrome and a_l = 2 a_0 - trace(w)
    for (std::size_t k = 1; k < cf.period; ++k) EXPECT_EQ(a[k], a[cf.period - k]) << d;
    EXPECT_EQ(a[cf.period], 2 * a[0] - (one_mod_four ? 1 : 0)) << d;
    FieldElement e = quadratic_fundamental_unit(d);
    EXPECT_TRUE(is_algebraic_unit(e));
    EXPECT_EQ(sign(e - FieldElement::one(e.field())), 1);
  }
}

TEST(Units, NonPowerBasisQuadraticFields) {
  // z^2 + z - 7: roots (-1 +- sqrt 29)/2; unit (5 + sqrt 29)/2 = 3 + delta
  NumberField f = make_field(ipoly({-7, 1, 1}), {Rational(2), Rational(3)});
  UnitGroup u = unit_group(f);
  ASSERT_EQ(u.generators.size(), 1u);
  EXPECT_EQ(u.generators[0].value, elem(f, {3, 1}));
  EXPECT_EQ(u.generators[0].provenance, UnitProvenance::computed);
  // z^2 - 12 is Q(sqrt 3) again; delta = 2 sqrt 3
  NumberField g = make_field(ipoly({-12, 0, 1}), {Rational(3), Rational(4)});
  EXPECT_EQ(unit_group(g).generators[0].value, elem(g, {2, make_rational(1, 2)}));
  // negative root selected: sqrt 3 = -delta
  NumberField h = make_field(ipoly({-3, 0, 1}), {Rational(-2), Rational(-1)});
  EXPECT_EQ(unit_group(h).generators[0].value, elem(h, {2, -1}));
}

TEST(Units, SuppliedTakesPrecedenceAndIsSignNormalized) {
  NumberField q = sqrt3();
  UnitGroup u = unit_group(q, {elem(q, {-2, -1})});
  EXPECT_EQ(u.generators[0].value, elem(q, {2, 1}));
  EXPECT_EQ(u.generators[0].provenance, UnitProvenance::supplied_assumed_fundamental);
  EXPECT_FALSE(u.all_computed());
}
