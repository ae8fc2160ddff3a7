#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qslice {
namespace {

using testing::Rng;
const Complex kI{0.0, 1.0};

void expect_code(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<Quaternion> convolve(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t m = 0; m < b.size(); ++m) c[n + m] += testing::matrix_product(a[n], b[m]);
  }
  return c;
}

// g = 0.3 + 0.4 i + 0.3 j + 0.1 q i: n(g_v) = (0.4 + 0.1 z)^2 + 0.09 vanishes only at z = -4 +- 3i.
std::vector<Quaternion> small_log_coefficients() {
  return {Quaternion(0.3, 0.4, 0.3, 0.0), Quaternion(0.0, 0.1, 0.0, 0.0)};
}

// f = 1.5 + 0.8 i + 0.1 q j: n(f_v) = 0.64 + 0.01 z^2 and f^s stay away from 0 for |z| < 4.
std::vector<Quaternion> loggable_coefficients() {
  return {Quaternion(1.5, 0.8, 0.0, 0.0), Quaternion(0.0, 0.0, 0.1, 0.0)};
}

double stem_gap(const StemFunction& a, const StemFunction& b, const Domain& d) {
  double worst = 0.0;
  for (Complex z : domain_samples(d, 40)) {
    worst = std::max(worst, abs(a(z) - b(z)));
    worst = std::max(worst, abs(a(std::conj(z)) - b(std::conj(z))));
  }
  return worst;
}

TEST(StarExp, StemMatchesMatrixExponential) {
  Rng rng(81);
  const SliceFunction g(polynomial_stem(default_domain(), testing::random_coefficients(rng, 2, 0.7)));
  const SliceFunction e = star_exp(g);
  for (int n = 0; n < 50; ++n) {
    const Complex z = rng.complex(1.5);
    const CQuaternion expected = testing::series_exp(g.stem()(z));
    EXPECT_LT(testing::dist(e.stem()(z), expected), 1e-11 * (1 + abs(expected)));
  }
}

TEST(StarExp, MatchesTruncatedStarSeries) {
  Rng rng(82);
  const auto a = testing::random_coefficients(rng, 1, 0.5);
  const SliceFunction e = star_exp(SliceFunction(polynomial_stem(default_domain(), a)));
  std::vector<Quaternion> sum{Quaternion(1.0)}, power{Quaternion(1.0)};
  for (int n = 1; n < 30; ++n) {
    power = convolve(power, a);
    for (Quaternion& c : power) c = c / static_cast<double>(n);
    sum.resize(std::max(sum.size(), power.size()));
    for (std::size_t k = 0; k < power.size(); ++k) sum[k] += power[k];
  }
  for (int n = 0; n < 30; ++n) {
    const Quaternion q = rng.quaternion(0.8);
    const Quaternion expected = testing::direct_polynomial(sum, q);
    EXPECT_LT(testing::dist(e(q), expected), 1e-10 * (1 + norm(expected)));
  }
}

TEST(StarExp, RealCoefficientsReduceToPointwiseExp) {
  Rng rng(83);
  const std::vector<Quaternion> a{Quaternion(0.2), Quaternion(-0.7), Quaternion(0.3)};
  const SliceFunction e = star_exp(SliceFunction(polynomial_stem(default_domain(), a)));
  for (int n = 0; n < 50; ++n) {
    const Quaternion q = rng.quaternion(1.5);
    const Quaternion expected = quat_exp(testing::direct_polynomial(a, q));
    EXPECT_LT(testing::dist(e(q), expected), 1e-12 * (1 + norm(expected)));
  }
}

TEST(StarPower, MatchesConvolutionPowers) {
  Rng rng(84);
  const auto a = testing::random_coefficients(rng, 2);
  const SliceFunction f(polynomial_stem(default_domain(), a));
  std::vector<Quaternion> power{Quaternion(1.0)};
  for (int n = 0; n <= 5; ++n) {
    const SliceFunction p = star_power(f, n);
    for (int k = 0; k < 10; ++k) {
      const Quaternion q = rng.quaternion();
      const Quaternion expected = testing::direct_polynomial(power, q);
      EXPECT_LT(testing::dist(p(q), expected), 1e-10 * (1 + norm(expected)));
    }
    power = convolve(power, a);
  }
  expect_code(ErrorCode::InvalidArgument, [&] { star_power(f, -1); });
}

TEST(StarLog, PrincipalBranchInvertsSmallExponent) {
  for (const Domain& d : {Domain::disk(0.0, 1.5), Domain::disk({0.5, 2.0}, 1.5)}) {
    const SliceFunction g(polynomial_stem(d, small_log_coefficients()));
    const SliceFunction log = star_log(star_exp(g), branch_at_center(d));
    EXPECT_LT(stem_gap(log.stem(), g.stem(), d), 1e-9);
    Rng rng(85);
    for (int n = 0; n < 30; ++n) {
      const Quaternion q = testing::point_in(d, rng);
      EXPECT_LT(testing::dist(log(q), g(q)), 1e-9);
    }
  }
}

TEST(StarLog, RoundTripOnEveryBranch) {
  const Domain d = Domain::disk({0.0, 2.0}, 1.5);
  Rng rng(86);
  const SliceFunction f(polynomial_stem(d, loggable_coefficients()));
  for (long h1 = -2; h1 <= 2; ++h1) {
    for (long h2 = -1; h2 <= 1; ++h2) {
      const SliceFunction log = star_log(f, branch_at_center(d, {h1, h2}));
      const SliceFunction back = star_exp(log);
      for (int n = 0; n < 10; ++n) {
        const Quaternion q = testing::point_in(d, rng);
        EXPECT_LT(testing::dist(back(q), f(q)), 1e-9 * (1 + norm(f(q))));
      }
    }
  }
}

TEST(StarLog, SeedAtBasepoint) {
  const Domain d = Domain::disk({0.0, 2.0}, 1.5);
  const SliceFunction f(polynomial_stem(d, loggable_coefficients()));
  for (Complex base : {Complex(0.3, 2.2), Complex(-0.2, -1.5)}) {
    const BranchIndex h{2, -1};
    const SliceFunction log = star_log(f, {h, base, false});
    const LiftPoint fiber = rho_fibers(f.stem()(base))[0];
    const CQuaternion expected = rho(frak_e_preimage(fiber.u0, fiber.u1, fiber.s, h));
    EXPECT_LT(testing::dist(log.stem()(base), expected), 1e-9);
    EXPECT_LT(stem_symmetry_defect(log.stem()), 1e-9);
  }
}

TEST(StarLog, BranchesDifferByTranslation) {
  for (const Domain& d : {Domain::disk({0.0, 2.0}, 1.5), Domain::disk(0.0, 1.5)}) {
    const SliceFunction g(polynomial_stem(d, small_log_coefficients()));
    const SliceFunction f = star_exp(g);
    const LogBranchSpec base = branch_at_center(d);
    const SliceFunction principal = star_log(f, base);
    for (BranchIndex h : {BranchIndex{1, 0}, BranchIndex{1, -1}, BranchIndex{-2, 1}, BranchIndex{3, -3}}) {
      if (d.real_intersecting() && h.a() != 0) continue;
      const SliceFunction other = star_log(f, branch_at_center(d, h));
      const SliceFunction shifted = log_translate(principal, h, base.basepoint);
      EXPECT_LT(stem_gap(other.stem(), shifted.stem(), d), 1e-8) << h.h1 << "," << h.h2;
    }
  }
}

TEST(StarLog, RealDomain) {
  const Domain d = Domain::disk(0.0, 1.5);
  const SliceFunction f = star_exp(SliceFunction(polynomial_stem(d, small_log_coefficients())));
  const SliceFunction log = star_log(f, {{2, -2}, Complex(0.4, 0.8), true});
  for (double x : {-1.2, -0.3, 0.0, 0.9}) {
    EXPECT_LT(abs(CQuaternion(log.stem()(x).imag())), 1e-12) << x;
  }
  expect_code(ErrorCode::JNotDefined, [&] { star_log(f, {{1, 0}, 0.0, true}); });
  expect_code(ErrorCode::BadBranchSpec, [&] { star_log(f, {{}, 0.0, false}); });
  expect_code(ErrorCode::OutOfDomain, [&] { star_log(f, {{}, 3.0, true}); });
}

TEST(StarLog, RejectsSingularLocus) {
  // (q^2 + 4) i vanishes at q = 2i, inside this pair of disks.
  const Domain d = Domain::disk({0.0, 2.0}, 1.0);
  const SliceFunction f(polynomial_stem(d, {Quaternion(0, 4, 0, 0), Quaternion{}, Quaternion(0, 1, 0, 0)}));
  expect_code(ErrorCode::HitsVLocus, [&] { star_log(f, branch_at_center(d)); });
  const SliceFunction scalar(constant_stem(d, Quaternion(2.0)));
  expect_code(ErrorCode::HitsVLocus, [&] { star_log(scalar, branch_at_center(d)); });
}

TEST(LogTranslate, AdditiveAndExponentPreserving) {
  const Domain d = Domain::disk({0.0, 2.0}, 1.5);
  const SliceFunction g(polynomial_stem(d, small_log_coefficients()));
  const Complex base = d.center();
  Rng rng(87);
  for (int trial = 0; trial < 6; ++trial) {
    const BranchIndex h{rng.integer(-3, 3), rng.integer(-3, 3)};
    const BranchIndex k{rng.integer(-3, 3), rng.integer(-3, 3)};
    const SliceFunction twice = log_translate(log_translate(g, h, base), k, base);
    const SliceFunction once = log_translate(g, h + k, base);
    EXPECT_LT(stem_gap(twice.stem(), once.stem(), d), 1e-9);
    const SliceFunction e = star_exp(log_translate(g, h, base));
    EXPECT_LT(stem_gap(e.stem(), star_exp(g).stem(), d), 1e-9);
  }
  expect_code(ErrorCode::JNotDefined,
              [] { log_translate(SliceFunction(identity_stem(default_domain())), {1, 1}, 0.0); });
}

TEST(SqrtFvs, SquaresToSymmetrisedVectorPart) {
  const Domain d = Domain::disk({0.0, 2.0}, 1.5);
  const SliceFunction f(polynomial_stem(d, {Quaternion(0.1, 1.0, 0.0, 0.0), Quaternion(0.0, 0.0, 0.5, 0.2)}));
  const SliceFunction r = sqrt_fvs(f, d.center());
  const SliceFunction rm = sqrt_fvs(f, d.center(), -1);
  EXPECT_LT(std::abs(r.stem()(d.center()).z0 - std::sqrt(vec_sq(f.stem()(d.center())))), 1e-14);
  for (Complex z : domain_samples(d, 40)) {
    for (Complex w : {z, std::conj(z)}) {
      const CQuaternion v = r.stem()(w);
      EXPECT_LT(std::abs(v.z0 * v.z0 - vec_sq(f.stem()(w))), 1e-12);
      EXPECT_LT(abs(v.vec()), 1e-15);
      EXPECT_LT(std::abs(rm.stem()(w).z0 + v.z0), 1e-12);
    }
  }
  EXPECT_LT(stem_symmetry_defect(r.stem()), 1e-12);
}

TEST(SqrtFvs, Obstruction) {
  const Domain d = Domain::disk(0.0, 1.0);
  const SliceFunction f(identity_stem(d) * Quaternion::i());
  expect_code(ErrorCode::BranchObstruction, [&] { sqrt_fvs(f, 0.0); });
  const SliceFunction r = sqrt_fvs(f, 0.5);
  EXPECT_LT(std::abs(r.stem()(Complex(0.5, 0.3)).z0 - Complex(0.5, 0.3)), 1e-12);
  expect_code(ErrorCode::BranchObstruction, [&] { r.stem()(-0.5); });
}

TEST(StarRoot, PowersBackAndCoincidesModN) {
  const Domain d = Domain::disk({0.0, 2.0}, 1.5);
  const SliceFunction f(polynomial_stem(d, loggable_coefficients()));
  Rng rng(88);
  for (int n = 1; n <= 4; ++n) {
    const BranchIndex h{rng.integer(-2, 2), rng.integer(-2, 2)};
    const SliceFunction root = star_root(f, n, branch_at_center(d, h));
    EXPECT_LT(stem_gap(star_power(root, n).stem(), f.stem(), d), 1e-9 * (1 + abs(f.stem()(d.center()))));
    const SliceFunction same = star_root(f, n, branch_at_center(d, h + BranchIndex{n, -n}));
    EXPECT_LT(stem_gap(root.stem(), same.stem(), d), 1e-9);
    const SliceFunction same2 = star_root(f, n, branch_at_center(d, h + BranchIndex{0, n}));
    EXPECT_LT(stem_gap(root.stem(), same2.stem(), d), 1e-9);
    if (n >= 2) {
      const SliceFunction different = star_root(f, n, branch_at_center(d, h + BranchIndex{1, 0}));
      EXPECT_GT(stem_gap(root.stem(), different.stem(), d), 1e-3);
    }
  }
  expect_code(ErrorCode::BadOrder, [&] { star_root(f, 0, branch_at_center(d)); });
}

}  // namespace
}  // namespace qslice
