#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace qpsym;
using namespace qtest;

TEST(Rational, ParseAndRender) {
  EXPECT_THROW(parse_rational("6/-4"), Error);
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(to_exact_string(parse_rational("-12/8")), "-3/2");
  EXPECT_EQ(to_exact_string(Rational(5)), "5/1");
  EXPECT_EQ(to_short_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational(" 7 "), Error);
  for (const char* bad : {"", "1/0", "a", "1/2/3", "--1", "1.5"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
  EXPECT_THROW(make_rational(1, 0), Error);
}

TEST(Rational, Helpers) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_of(make_rational(7, 2)), 3);
  EXPECT_EQ(isqrt(Integer(99)), 9);
  EXPECT_EQ(isqrt(Integer(100)), 10);
  EXPECT_EQ(lcm_of(4, 6), 12);
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_EQ(positive_divisors(12).size(), 6u);
  EXPECT_EQ(to_decimal_string(make_rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_decimal_string(make_rational(-7, 4), 3), "-1.750");
}

TEST(Polynomial, ArithmeticAndFormatting) {
  RatPolynomial a = to_rational(ipoly({-1, 0, 1}));
  RatPolynomial b = to_rational(ipoly({1, 1}));
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, to_rational(ipoly({-1, 1})));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, to_rational(ipoly({-1, 1}))), to_rational(ipoly({-1, 1})));
  EXPECT_EQ(to_string(ipoly({-1, 57, -3, 1})), "z^3 - 3z^2 + 57z - 1");
  EXPECT_EQ(to_string(ipoly({0, -1, 0, 2}), "x"), "2x^3 - x");
  EXPECT_EQ(ipoly({0, 0, 0}).degree(), -1);
  auto eg = extended_gcd(to_rational(ipoly({-2, 0, 1})), to_rational(ipoly({1, 1})));
  EXPECT_EQ(eg.s * to_rational(ipoly({-2, 0, 1})) + eg.t * to_rational(ipoly({1, 1})), eg.g);
  EXPECT_EQ(primitive_part(RatPolynomial({make_rational(-1, 2), Rational(0), make_rational(-3, 4)})), ipoly({2, 0, 3}));
}

// Counts frozen from an independent real-root counter.
TEST(Sturm, RootCounts) {
  EXPECT_EQ(sturm_real_root_count(ipoly({-2, 0, 0, 1})), 1u);
  EXPECT_EQ(sturm_real_root_count(ipoly({-1, -1, 0, 0, 1})), 2u);
  EXPECT_EQ(sturm_real_root_count(ipoly({1, -5, 0, 0, 0, 1})), 3u);
  EXPECT_EQ(sturm_real_root_count(ipoly({1, -3, 0, 1})), 3u);
  EXPECT_EQ(sturm_real_root_count(ipoly({-2, 0, 0, 0, 0, 0, 1})), 2u);
  EXPECT_EQ(sturm_real_root_count(ipoly({1, 0, 0, 0, 1})), 0u);
  EXPECT_EQ(sturm_real_root_count(ipoly({1, -5, 0, 0, 0, 1}), RationalInterval{Rational(0), Rational(1)}), 1u);
  EXPECT_EQ(sturm_real_root_count(ipoly({1, -3, 0, 1}), RationalInterval{Rational(-2), Rational(0)}), 1u);
  // repeated roots count once
  EXPECT_EQ(sturm_real_root_count(ipoly({1, -2, 1})), 1u);
}

TEST(Sturm, Errors) {
  EXPECT_THROW(sturm_real_root_count(IntPolynomial()), Error);
  try {
    sturm_real_root_count(ipoly({-2, 1}), RationalInterval{Rational(2), Rational(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EndpointIsRoot);
  }
  try {
    sturm_real_root_count(ipoly({-2, 1}), RationalInterval{Rational(3), Rational(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInterval);
  }
}

TEST(Sturm, RationalRootsAndRefinement) {
  auto roots = rational_roots(ipoly({-6, 1, 2}));  // (2z - 3)(z + 2)
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-2));
  EXPECT_EQ(roots[1], make_rational(3, 2));
  EXPECT_TRUE(rational_roots(ipoly({-2, 0, 1})).empty());
  RationalInterval iv = refine_root(ipoly({-2, 0, 1}), {Rational(1), Rational(2)}, make_rational(1, 1000000));
  EXPECT_LE(iv.width(), make_rational(1, 1000000));
  EXPECT_LT(iv.lo * iv.lo, Rational(2));
  EXPECT_GT(iv.hi * iv.hi, Rational(2));
}

TEST(Sturm, RandomProductsOfLinearFactors) {
  Gen g(11);
  for (int t = 0; t < 200; ++t) {
    int k = static_cast<int>(g.range(1, 4));
    std::set<long> distinct;
    IntPolynomial p = ipoly({1});
    for (int i = 0; i < k; ++i) {
      long r = g.range(-9, 9);
      distinct.insert(r);
      p = p * ipoly({-r, 1});
    }
    p = p * ipoly({1, 0, 1});  // no real roots
    EXPECT_EQ(sturm_real_root_count(p), distinct.size());
    auto rr = rational_roots(p);
    EXPECT_EQ(rr.size(), distinct.size());
  }
}

TEST(Matrix, DeterminantInverseRank) {
  RationalMatrix m = rmat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  EXPECT_EQ(determinant(m), Rational(-3));
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, RationalMatrix::identity(3));
  EXPECT_EQ(rank(rmat({{1, 2}, {2, 4}})), 1u);
  EXPECT_FALSE(inverse(rmat({{1, 2}, {2, 4}})));
  EXPECT_EQ(to_string(mat({{7, 1}, {48, 7}})), "[[7, 1], [48, 7]]");
  auto sol = solve_in_row_span({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}, {Rational(3), Rational(5)});
  ASSERT_TRUE(sol);
  EXPECT_EQ((*sol)[0], Rational(-2));
  EXPECT_EQ((*sol)[1], Rational(5));
}

// Expected bases from an independent Euclid-based row reduction.
TEST(Hnf, FrozenExamples) {
  EXPECT_EQ(hermite_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).h,
            mat({{2, 4, 4}, {0, 6, 0}, {0, 0, 12}}));
  EXPECT_EQ(hermite_normal_form(mat({{3, 1}, {1, 3}})).h, mat({{1, 3}, {0, 8}}));
  EXPECT_EQ(hermite_normal_form(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})).h, mat({{1, 2, 0}, {0, 3, 0}, {0, 0, 1}}));
  EXPECT_EQ(hermite_normal_form(mat({{0, 3, 5}, {0, 6, 1}, {2, 2, 2}})).h, mat({{2, 2, 2}, {0, 3, 5}, {0, 0, 9}}));
  EXPECT_EQ(row_lattice_basis(mat({{4, 6}, {6, 9}, {2, 3}})), mat({{2, 3}}));
  EXPECT_EQ(row_lattice_basis(mat({{12, 18, 6}, {8, 4, 10}})), mat({{4, 14, -4}, {0, 24, -18}}));
  EXPECT_THROW(hermite_normal_form(mat({{1, 2}, {2, 4}})), Error);
}

TEST(Hnf, TransformAndShape) {
  Gen g(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(g.range(1, 4));
    IntMatrix m = g.int_matrix(n, n, 9);
    if (determinant(m) == 0) continue;
    HermiteResult r = hermite_normal_form(m);
    EXPECT_TRUE(is_hermite_normal_form(r.h));
    EXPECT_EQ(r.u * m, r.h);
    Integer du = determinant(r.u);
    EXPECT_TRUE(du == 1 || du == -1);
    EXPECT_EQ(abs(determinant(r.h)), abs(determinant(m)));
    EXPECT_EQ(hermite_normal_form(r.h).h, r.h);  // idempotent
  }
}

// Canonicity: regenerating the same lattice through a unimodular change of
// basis gives the identical HNF.
TEST(Hnf, CanonicalUnderUnimodularRegeneration) {
  Gen g(4);
  int cases = 0;
  while (cases < 250) {
    std::size_t n = static_cast<std::size_t>(g.range(2, 4));
    IntMatrix m = g.int_matrix(n, n, 12);
    if (determinant(m) == 0) continue;
    ++cases;
    IntMatrix u = g.unimodular(n);
    EXPECT_EQ(hermite_normal_form(u * m).h, hermite_normal_form(m).h);
  }
}

TEST(Hnf, NonSquareGeneratingSets) {
  Gen g(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(g.range(2, 3));
    std::size_t extra = static_cast<std::size_t>(g.range(1, 3));
    IntMatrix m = g.int_matrix(n + extra, n, 7);
    IntMatrix b = row_lattice_basis(m);
    EXPECT_TRUE(is_hermite_normal_form(b));
    // every generator is an integer combination of the basis rows
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::vector<Rational>> basis;
      for (std::size_t k = 0; k < b.rows(); ++k) basis.push_back(to_rational(b).row(k));
      auto sol = solve_in_row_span(basis, to_rational(m).row(i));
      ASSERT_TRUE(sol);
      for (const auto& x : *sol) EXPECT_TRUE(is_integer(x));
    }
    // a shuffled copy produces the same basis
    IntMatrix shuffled = m;
    for (std::size_t i = shuffled.rows(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(g.range(0, static_cast<long>(i) - 1));
      auto ri = shuffled.row(i - 1);
      shuffled.set_row(i - 1, shuffled.row(j));
      shuffled.set_row(j, ri);
    }
    EXPECT_EQ(row_lattice_basis(shuffled), b);
  }
}

// Frozen from an independent computer algebra system.
TEST(MinPoly, MatrixExamples) {
  EXPECT_EQ(minimal_polynomial_of_matrix(rmat({{0, 1}, {1, 0}})), ipoly({-1, 0, 1}));
  EXPECT_EQ(minimal_polynomial_of_matrix(rmat({{2, 0}, {0, 2}})), ipoly({-2, 1}));
  EXPECT_EQ(minimal_polynomial_of_matrix(rmat({{7, 1}, {48, 7}})), ipoly({1, -14, 1}));
  EXPECT_EQ(minimal_polynomial_of_matrix(rmat({{1, 1, 1}, {-18, 1, -3}, {-18, 6, 1}})), ipoly({-1, 57, -3, 1}));
  // diag(1, 1, 2): minimal polynomial has degree 2, not 3
  EXPECT_EQ(minimal_polynomial_of_matrix(rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), ipoly({2, -3, 1}));
}

TEST(MinPoly, AnnihilatesRandomMatrices) {
  Gen g(6);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(g.range(1, 4));
    RationalMatrix m = to_rational(g.int_matrix(n, n, 5));
    IntPolynomial p = minimal_polynomial_of_matrix(m);
    EXPECT_GE(p.degree(), 1);
    EXPECT_LE(p.degree(), static_cast<long>(n));
    EXPECT_EQ(evaluate_at_matrix(p, m), RationalMatrix(n, n));
  }
}

TEST(ModP, FactorDegrees) {
  // z^4 + 1 splits into quadratics (or linears) mod every prime
  for (int p : {3, 5, 7, 11, 13}) {
    auto d = modp::factor_degrees(ipoly({1, 0, 0, 0, 1}), p);
    ASSERT_TRUE(d);
    for (int x : *d) EXPECT_LE(x, 2);
  }
  auto d = modp::factor_degrees(ipoly({-2, 0, 0, 1}), 7);  // 2 is not a cube mod 7
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, std::vector<int>{3});
}
