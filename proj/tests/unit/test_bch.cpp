#include <gtest/gtest.h>

#include <numbers>

#include "test_support.hpp"

namespace qslice {
namespace {

using testing::Rng;
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void expect_code(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

Quaternion commutator(const Quaternion& a, const Quaternion& b) { return a * b - b * a; }

TEST(Prodvec, DecompositionFormulaMatchesDirectProduct) {
  Rng rng(91);
  const Domain d = default_domain();
  for (int trial = 0; trial < 20; ++trial) {
    const SliceFunction f(polynomial_stem(d, testing::random_coefficients(rng, 3)));
    const SliceFunction g(polynomial_stem(d, testing::random_coefficients(rng, 3)));
    for (int n = 0; n < 10; ++n) {
      const Quaternion q = rng.quaternion(1.5);
      const Complex z = slice_parameter(q);
      const CQuaternion product = testing::matrix_product(f.stem()(z), g.stem()(z));
      const Complex oracle = vec_sq(product);
      EXPECT_LT(std::abs(prodvec_sym_direct(f, g, q) - oracle), 1e-10 * (1 + std::abs(oracle)));
      EXPECT_LT(std::abs(prodvec_sym(f, g, q) - oracle), 1e-8 * (1 + std::abs(oracle)));
    }
  }
  const SliceFunction real(constant_stem(d, Quaternion(1.0)));
  expect_code(ErrorCode::VanishingVectorPart, [&] { prodvec_sym(real, real, Quaternion(0.5)); });
}

TEST(Counterexample, ProductVectorPartIsNilpotent) {
  const Domain d = Domain::disk({0.0, 2.0}, 1.5);
  const SliceFunction f(polynomial_stem(d, {Quaternion(2.0, 0.5, 0.0, 0.0), Quaternion(0.0, 1.0, 0.0, 0.0)}));
  const SliceFunction g = construct_vanishing_counterexample(f);
  const SliceFunction fg = f * g;
  Rng rng(92);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = testing::point_in(d, rng);
    const Complex z = slice_parameter(q);
    EXPECT_LT(std::abs(prodvec_sym_direct(f, g, q)), 1e-10);
    EXPECT_LT(std::abs(prodvec_sym(f, g, q)), 1e-9);
    EXPECT_GT(abs(fg.stem()(z).vec()), 1e-2);
  }
  const SliceFunction tilted(polynomial_stem(d, {Quaternion(2.0, 0.5, 0.3, 0.0), Quaternion(0.0, 1.0, 0.0, 0.0)}));
  expect_code(ErrorCode::BadExampleInput, [&] { construct_vanishing_counterexample(tilted); });
  const SliceFunction real_domain(polynomial_stem(default_domain(), {Quaternion(2.0, 0.5, 0.0, 0.0)}));
  expect_code(ErrorCode::BadExampleInput, [&] { construct_vanishing_counterexample(real_domain); });
  const SliceFunction no_f1(constant_stem(d, Quaternion(2.0)));
  expect_code(ErrorCode::BadExampleInput, [&] { construct_vanishing_counterexample(no_f1); });
}

TEST(BchCondition, ClosedFormMatchesMatrixExponentials) {
  Rng rng(93);
  for (int n = 0; n < 500; ++n) {
    const CQuaternion F = rng.cquaternion(1.5), G = rng.cquaternion(1.5);
    const CQuaternion product = testing::matrix_product(testing::series_exp(F.vec()), testing::series_exp(G.vec()));
    const Complex oracle = vec_sq(product);
    EXPECT_LT(std::abs(bch_condition_value(F, G) - oracle), 1e-9 * (1 + std::abs(oracle)));
  }
  // n(F_v) = 0 falls back to the direct product
  const CQuaternion nil(0.0, 1.0, kI, 0.0);
  const CQuaternion G(0.2, 0.3, -0.1, 0.7);
  const Complex direct = vec_sq(testing::matrix_product(testing::series_exp(nil), testing::series_exp(G.vec())));
  EXPECT_LT(std::abs(bch_condition_value(nil, G) - direct), 1e-12);
}

TEST(BchCondition, ReportsRegimeAndAdmissibility) {
  const Domain d = Domain::disk(0.0, 1.0);
  const SliceFunction f(polynomial_stem(d, {Quaternion(0.1, 0.3, 0.0, 0.0), Quaternion(0.0, 0.2, 0.0, 0.0)}));
  const SliceFunction parallel = 2.0 * f + SliceFunction(constant_stem(d, Quaternion(1.0)));
  const BCHReport commuting = bch_condition(f, parallel);
  EXPECT_EQ(commuting.samples.size(), 64u);
  EXPECT_EQ(commuting.condition_values.size(), 64u);
  EXPECT_TRUE(commuting.admissible);
  EXPECT_EQ(commuting.regime, BchRegime::Commuting);
  const SliceFunction other(polynomial_stem(d, {Quaternion(0.0, 0.0, 0.4, 0.1)}));
  EXPECT_EQ(bch_condition(f, other).regime, BchRegime::Generic);

  const SliceFunction half_turn(constant_stem(d, Quaternion(0.0, kPi / 2, 0.0, 0.0)));
  const BCHReport bad = bch_condition(half_turn, half_turn);
  EXPECT_FALSE(bad.admissible);
  EXPECT_LT(bad.min_abs, 1e-12);
  expect_code(ErrorCode::NotExponential, [&] { bch_combine(half_turn, half_turn); });
  EXPECT_FALSE(bch_solve(half_turn, half_turn).h.has_value());
  expect_code(ErrorCode::DomainMismatch, [&] { bch_condition(f, SliceFunction(identity_stem(default_domain()))); });
}

TEST(BchCondition, PositiveOnTheRealAxis) {
  Rng rng(96);
  const Domain d = Domain::disk(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const StemFunction F = polynomial_stem(d, testing::random_coefficients(rng, 3));
    const StemFunction G = polynomial_stem(d, testing::random_coefficients(rng, 3));
    for (int k = 0; k <= 40; ++k) {
      const double x = -1.9 + 0.095 * k;
      const Complex value = bch_condition_value(F(x), G(x));
      EXPECT_LT(std::abs(value.imag()), 1e-12 * (1 + std::abs(value)));
      EXPECT_GT(value.real(), 0.0);
    }
  }
}

TEST(BchCombine, ProductOfExponentialsIsExponential) {
  Rng rng(94);
  for (const Domain& d : {Domain::disk(0.0, 1.5), Domain::disk({0.5, 2.0}, 1.5)}) {
    for (int trial = 0; trial < 4; ++trial) {
      const SliceFunction f(polynomial_stem(d, testing::random_coefficients(rng, 2, 0.4)));
      const SliceFunction g(polynomial_stem(d, testing::random_coefficients(rng, 2, 0.4)));
      const BCHReport report = bch_solve(f, g);
      ASSERT_TRUE(report.admissible);
      ASSERT_TRUE(report.h.has_value());
      const SliceFunction& h = *report.h;
      EXPECT_LT(stem_symmetry_defect(h.stem()), 1e-9);
      for (Complex z : domain_samples(d, 30)) {
        for (Complex w : {z, std::conj(z)}) {
          const CQuaternion lhs =
              testing::matrix_product(testing::series_exp(f.stem()(w)), testing::series_exp(g.stem()(w)));
          const CQuaternion rhs = testing::series_exp(h.stem()(w));
          EXPECT_LT(testing::dist(lhs, rhs), 1e-9 * (1 + abs(lhs)));
        }
      }
      for (int n = 0; n < 10; ++n) {
        const Quaternion q = testing::point_in(d, rng);
        const Quaternion lhs = (star_exp(f) * star_exp(g))(q);
        EXPECT_LT(testing::dist(star_exp(h)(q), lhs), 1e-9 * (1 + norm(lhs)));
      }
    }
  }
}

TEST(BchCombine, CommutingCaseAddsExponents) {
  const Domain d = Domain::disk(0.0, 1.0);
  const SliceFunction f(polynomial_stem(d, {Quaternion(0.1, 0.3, 0.0, 0.2), Quaternion(0.0, 0.2, 0.0, 0.0)}));
  const SliceFunction g_par = 0.5 * f + SliceFunction(constant_stem(d, Quaternion(0.4)));
  const SliceFunction h = bch_combine(f, g_par);
  for (Complex z : domain_samples(d, 20)) {
    EXPECT_LT(testing::dist(h.stem()(z), f.stem()(z) + g_par.stem()(z)), 1e-10);
  }
  EXPECT_EQ(bch_condition(f, g_par).regime, BchRegime::Commuting);
}

TEST(BchCombine, ConstantsFollowTheSeries) {
  Rng rng(95);
  const Domain d = Domain::disk(0.0, 1.0);
  for (int n = 0; n < 50; ++n) {
    const double scale = rng.uniform(0.01, 0.2);
    const Quaternion a = rng.quaternion(scale), b = rng.quaternion(scale);
    const SliceFunction h = bch_combine(SliceFunction(constant_stem(d, a)), SliceFunction(constant_stem(d, b)));
    const Quaternion got = h(Quaternion(0.2, 0.1, 0.0, 0.3));
    EXPECT_LT(testing::dist(quat_exp(got), quat_exp(a) * quat_exp(b)), 1e-12);
    // a + b + [a,b]/2 + ([a,[a,b]] + [b,[b,a]])/12 + O(|x|^4)
    const Quaternion series = a + b + 0.5 * commutator(a, b) +
                              (commutator(a, commutator(a, b)) + commutator(b, commutator(b, a))) / 12.0;
    const double bound = 2.0 * std::pow(norm(a) + norm(b), 4);
    EXPECT_LT(testing::dist(got, series), bound + 1e-14);
  }
}

}  // namespace
}  // namespace qslice
