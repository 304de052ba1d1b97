#include <functional>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace qpsym;
using namespace qtest;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(MakeField, Validation) {
  EXPECT_EQ(kind_of([] { make_field(ipoly({-2, 1}), {Rational(1), Rational(3)}); }), ErrorKind::DegreeTooSmall);
  EXPECT_EQ(kind_of([] { make_field(ipoly({-3, 0, 2}), {Rational(1), Rational(2)}); }), ErrorKind::NotMonic);
  EXPECT_EQ(kind_of([] { make_field(ipoly({-4, 0, 1}), {Rational(1), Rational(3)}); }), ErrorKind::Reducible);
  EXPECT_EQ(kind_of([] { make_field(ipoly({6, 0, -5, 0, 1}), {Rational(1), Rational(2)}); }), ErrorKind::Reducible);
  EXPECT_EQ(kind_of([] { make_field(ipoly({1, 0, 0, 0, 1}), {Rational(0), Rational(1)}); }), ErrorKind::NoRealRoot);
  EXPECT_EQ(kind_of([] { make_field(ipoly({-3, 0, 1}), {Rational(-2), Rational(2)}); }), ErrorKind::NotIsolating);
  EXPECT_EQ(kind_of([] { make_field(ipoly({-3, 0, 1}), {Rational(2), Rational(3)}); }), ErrorKind::NotIsolating);
  EXPECT_EQ(kind_of([] { make_field(ipoly({-2, 0, 1}), {Rational(-1), Rational(1)}); }), ErrorKind::NotIsolating);
}

TEST(MakeField, IrreducibilityProofs) {
  EXPECT_EQ(cbrt2().irreducibility_proof(), IrreducibilityProof::rational_root_test);
  NumberField q = make_field(ipoly({-1, -1, 0, 0, 1}), {Rational(1), Rational(2)});
  EXPECT_EQ(q.irreducibility_proof(), IrreducibilityProof::modp_degree_patterns);
  // z^4 - 10z^2 + 1 (minimal polynomial of sqrt2 + sqrt3) factors mod every
  // prime, so only the exhaustive quadratic search can settle it.
  NumberField s = make_field(ipoly({1, 0, -10, 0, 1}), {Rational(3), Rational(4)});
  EXPECT_EQ(s.irreducibility_proof(), IrreducibilityProof::quadratic_factor_exhaustion);
  // (z^2 - 2)(z^2 - 3 z + 1) has no rational root
  EXPECT_EQ(kind_of([] { make_field(ipoly({-2, 6, -1, -3, 1}), {Rational(1), Rational(2)}); }), ErrorKind::Reducible);
}

TEST(FieldElement, CubeOfUnit) {
  NumberField f = cbrt2();
  FieldElement e = elem(f, {-1, 1, 0});
  EXPECT_EQ(e.pow(3), elem(f, {1, 3, -3}));
  EXPECT_EQ(to_string(e.pow(3)), "1 + 3d - 3d^2");
  EXPECT_EQ(e * e.inverse(), FieldElement::one(f));
  EXPECT_EQ(e.pow(-3) * e.pow(3), FieldElement::one(f));
}

// Frozen from an independent computer algebra system.
TEST(FieldElement, MinimalPolynomials) {
  NumberField f = cbrt2();
  EXPECT_EQ(minimal_polynomial(elem(f, {1, 1, 0})), ipoly({-3, 3, -3, 1}));
  EXPECT_EQ(minimal_polynomial(elem(f, {0, 0, make_rational(1, 2)})), ipoly({-1, 0, 0, 2}));
  EXPECT_EQ(minimal_polynomial(elem(f, {1, 3, -3})), ipoly({-1, 57, -3, 1}));
  EXPECT_EQ(minimal_polynomial(elem(f, {1, 1, 0}) / elem(f, {2, -1, 0})), ipoly({-1, 0, -6, 2}));
  EXPECT_EQ(minimal_polynomial(elem(f, {3, -1, 1})), ipoly({-47, 33, -9, 1}));
  EXPECT_EQ(minimal_polynomial(FieldElement::from_rational(f, make_rational(2, 3))), ipoly({-2, 3}));
  NumberField q = sqrt3();
  EXPECT_EQ(minimal_polynomial(elem(q, {0, 4})), ipoly({-48, 0, 1}));
  EXPECT_EQ(minimal_polynomial(elem(q, {make_rational(5, 2), make_rational(1, 2)})), ipoly({11, -10, 2}));
  EXPECT_EQ(minimal_polynomial(elem(q, {7, 4})), ipoly({1, -14, 1}));
}

TEST(FieldElement, NormsSignsAndSignatures) {
  NumberField q = sqrt3();
  EXPECT_EQ(norm(elem(q, {2, 1})), Rational(1));
  EXPECT_EQ(norm(elem(q, {0, 4})), Rational(-48));
  EXPECT_EQ(sign(elem(q, {-2, 1})), -1);
  EXPECT_EQ(sign(elem(q, {2, -1})), 1);
  EXPECT_EQ(sign(elem(q, {-7, 4})), -1);  // 4 sqrt3 = 6.93 < 7
  NumberField neg = make_field(ipoly({-3, 0, 1}), {Rational(-2), Rational(-1)});
  EXPECT_EQ(sign(FieldElement::generator(neg)), -1);
  Signature a = signature(sqrt3());
  EXPECT_EQ(a.r1, 2u);
  EXPECT_EQ(a.r2, 0u);
  EXPECT_EQ(a.unit_rank, 1u);
  Signature b = signature(cbrt2());
  EXPECT_EQ(b.r1, 1u);
  EXPECT_EQ(b.r2, 1u);
  EXPECT_EQ(b.unit_rank, 1u);
  Signature c = signature(make_field(ipoly({-1, -1, 0, 0, 1}), {Rational(1), Rational(2)}));
  EXPECT_EQ(c.r1, 2u);
  EXPECT_EQ(c.r2, 1u);
  EXPECT_EQ(c.unit_rank, 2u);
  EXPECT_EQ(to_decimal(elem(q, {2, 1}), 6), "3.732050");
  EXPECT_EQ(to_decimal(elem(cbrt2(), {0, 1, 0}), 9), "1.259921049");
}

TEST(FieldElement, MixingFieldsIsRejected) {
  FieldElement a = FieldElement::one(sqrt3());
  FieldElement b = FieldElement::one(quadratic_field(2));
  EXPECT_EQ(kind_of([&] { (void)(a + b); }), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind_of([&] { (void)(a == b); }), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind_of([&] { (void)FieldElement::zero(sqrt3()).inverse(); }), ErrorKind::DivisionByZero);
}

TEST(FieldProperties, Axioms) {
  Gen g(21);
  auto fields = sample_fields();
  for (int t = 0; t < 300; ++t) {
    const NumberField& f = g.pick(fields);
    FieldElement x = g.element(f), y = g.element(f), z = g.element(f);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x - x, FieldElement::zero(f));
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), FieldElement::one(f));
      EXPECT_EQ((y / x) * x, y);
    }
  }
}

TEST(FieldProperties, MinimalPolynomialVanishesAndDividesDegree) {
  Gen g(22);
  auto fields = sample_fields();
  for (int t = 0; t < 250; ++t) {
    const NumberField& f = g.pick(fields);
    FieldElement x = g.element(f, 5, 4);
    IntPolynomial p = minimal_polynomial(x);
    EXPECT_TRUE(evaluate(p, x).is_zero());
    EXPECT_EQ(static_cast<long>(f.degree()) % p.degree(), 0);
    EXPECT_GT(p.leading(), 0);
  }
}

TEST(FieldProperties, NormIsMultiplicative) {
  Gen g(23);
  auto fields = sample_fields();
  for (int t = 0; t < 250; ++t) {
    const NumberField& f = g.pick(fields);
    FieldElement x = g.element(f), y = g.element(f);
    EXPECT_EQ(norm(x * y), norm(x) * norm(y));
  }
}

TEST(FieldProperties, UnitsAreClosed) {
  Gen g(24);
  std::vector<std::pair<NumberField, FieldElement>> bases = {
      {sqrt3(), elem(sqrt3(), {2, 1})},
      {cbrt2(), elem(cbrt2(), {-1, 1, 0})},
      {quadratic_field(5), elem(quadratic_field(5), {make_rational(1, 2), make_rational(1, 2)})},
  };
  for (int t = 0; t < 200; ++t) {
    const auto& [f, u] = g.pick(bases);
    FieldElement a = u.pow(g.range(-4, 4));
    FieldElement b = u.pow(g.range(-4, 4));
    if (g.coin()) a = -a;
    EXPECT_TRUE(is_algebraic_unit(a * b));
    EXPECT_TRUE(is_algebraic_unit(a.inverse()));
    Rational n = norm(a * b);
    EXPECT_TRUE(n == 1 || n == -1);
  }
}

TEST(FieldProperties, ApproximationBracketsSign) {
  Gen g(25);
  auto fields = sample_fields();
  for (int t = 0; t < 200; ++t) {
    const NumberField& f = g.pick(fields);
    FieldElement x = g.element(f, 4, 3);
    RationalInterval iv = approximate(x, make_rational(1, 1000));
    EXPECT_LE(iv.width(), make_rational(1, 1000));
    int s = sign(x);
    if (iv.lo > 0) EXPECT_EQ(s, 1);
    if (iv.hi < 0) EXPECT_EQ(s, -1);
    EXPECT_EQ(sign(-x), -s);
  }
}
