#include <cmath>
#include <limits>
#include <numbers>

#include "continuation.hpp"
#include "qslice/bch_deriv.hpp"
#include "qslice/error.hpp"

namespace qslice {

Complex prodvec_sym(const SliceFunction& f, const SliceFunction& g, const Quaternion& q) {
  const Complex z = slice_parameter(q);
  const CQuaternion F = f.stem()(z);
  const CQuaternion G = g.stem()(z);
  const Complex wf = vec_sq(F);
  if (std::abs(wf) <= kClassifyTolerance) throw Error(ErrorCode::VanishingVectorPart, "f_v^s vanishes at q");
  const Complex g1 = vec_dot(G, F) / wf;
  const CQuaternion perp = G.vec() - g1 * F.vec();
  const Complex lead = F.z0 * g1 + G.z0;
  return lead * lead * wf + sym(F) * vec_sq(perp);
}

Complex prodvec_sym_direct(const SliceFunction& f, const SliceFunction& g, const Quaternion& q) {
  const Complex z = slice_parameter(q);
  return vec_sq(f.stem()(z) * g.stem()(z));
}

SliceFunction construct_vanishing_counterexample(const SliceFunction& f) {
  const StemFunction F = f.stem();
  const Domain& d = F.domain();
  if (d.real_intersecting()) throw Error(ErrorCode::BadExampleInput, "the construction needs a domain off the real axis");
  for (Complex z : domain_samples(d, 32)) {
    const CQuaternion v = F.evaluate(z);
    const double scale = 1.0 + abs(v);
    if (std::abs(v.z2) + std::abs(v.z3) > 1e-12 * scale) {
      throw Error(ErrorCode::BadExampleInput, "f must take values in C_i (F2 = F3 = 0)");
    }
    if (std::abs(v.z0 * v.z0 + v.z1 * v.z1) <= kClassifyTolerance || std::abs(v.z1) <= kClassifyTolerance) {
      throw Error(ErrorCode::BadExampleInput, "f needs f0^2 + f1^2 != 0 != f1");
    }
  }
  return SliceFunction(-regular_conjugate(F) + ell_plus_stem(d) * Quaternion::j());
}

namespace {

// scalar and vector parts of epsilon(F_v) epsilon(G_v)
CQuaternion vector_exp_product(const CQuaternion& F, const CQuaternion& G) {
  return epsilon(F.vec()) * epsilon(G.vec());
}

bool parallel(const CQuaternion& F, const CQuaternion& G) {
  const CQuaternion fv = F.vec(), gv = G.vec();
  return abs(vec_cross(fv, gv)) <= 1e-10 * (1.0 + abs(fv) * abs(gv));
}

}  // namespace

Complex bch_condition_value(const CQuaternion& F, const CQuaternion& G) {
  const Complex wf = vec_sq(F);
  if (std::abs(wf) <= 1e-8) return vec_sq(vector_exp_product(F, G));
  const Complex wg = vec_sq(G);
  const Complex p = vec_dot(G, F);
  const EvenTrigPair tf = even_trig(wf);
  const EvenTrigPair tg = even_trig(wg);
  const Complex lead = p * tf.cosr * tg.sincr + tg.cosr * tf.sincr * wf;
  return (lead * lead + tg.sincr * tg.sincr * (wf * wg - p * p)) / wf;
}

BCHReport bch_condition(const SliceFunction& f, const SliceFunction& g, int samples, double tolerance) {
  const StemFunction F = f.stem();
  const StemFunction G = g.stem();
  if (!(F.domain() == G.domain())) throw Error(ErrorCode::DomainMismatch, "functions live on different domains");
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  BCHReport report;
  report.samples = domain_samples(F.domain(), samples);
  report.min_abs = std::numeric_limits<double>::infinity();
  bool commuting = true;
  for (Complex z : report.samples) {
    const CQuaternion fz = F.evaluate(z);
    const CQuaternion gz = G.evaluate(z);
    const Complex value = bch_condition_value(fz, gz);
    report.condition_values.push_back(value);
    report.min_abs = std::min(report.min_abs, std::abs(value));
    commuting = commuting && parallel(fz, gz);
  }
  report.admissible = report.min_abs >= tolerance;
  report.regime = commuting ? BchRegime::Commuting : BchRegime::Generic;
  return report;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Candidates +-t0 + 2 pi k nearest to `previous`.
std::optional<Complex> next_angle(Complex cos_theta, Complex previous) {
  const Complex t0 = std::acos(cos_theta);
  Complex best[2];
  for (int s = 0; s < 2; ++s) {
    const Complex base = s == 0 ? t0 : -t0;
    const double k = std::round((previous - base).real() / kTwoPi);
    best[s] = base + kTwoPi * k;
  }
  Complex near = best[0], far = best[1];
  if (std::abs(far - previous) < std::abs(near - previous)) std::swap(near, far);
  const double step = std::abs(near - previous);
  if (step >= 0.3) return std::nullopt;
  const bool same_square = std::abs(near * near - far * far) <= 1e-12 * (1.0 + std::norm(near));
  if (!same_square && std::abs(far - previous) <= 2.0 * step) return std::nullopt;
  return near;
}

}  // namespace

SliceFunction bch_combine(const SliceFunction& f, const SliceFunction& g, double tolerance) {
  const BCHReport report = bch_condition(f, g, 64, tolerance);
  if (!report.admissible) {
    throw Error(ErrorCode::NotExponential, "exp_*(f) * exp_*(g) is not a *-exponential on this domain");
  }
  const StemFunction F = f.stem();
  const StemFunction G = g.stem();
  const Domain d = F.domain();
  const Complex base = d.center();
  const Complex base_angle = std::acos(vector_exp_product(F.evaluate(base), G.evaluate(base)).z0);
  auto step = [F, G](Complex z, Complex previous) {
    return next_angle(vector_exp_product(F.evaluate(z), G.evaluate(z)).z0, previous);
  };
  return SliceFunction(StemFunction(d, [F, G, d, base, base_angle, step](Complex z) {
    const CQuaternion fz = F.evaluate(z);
    const CQuaternion gz = G.evaluate(z);
    const CQuaternion product = vector_exp_product(fz, gz);
    const Complex theta = detail::continue_in_domain(d, base, base_angle, z, step, ErrorCode::DegenerateAngle);
    const Complex sincr = even_trig(theta * theta).sincr;
    if (std::abs(sincr) < 1e-8) throw Error(ErrorCode::DegenerateAngle, "sin(theta) vanishes on the solution branch");
    CQuaternion h = product.vec() / sincr;
    h.z0 = fz.z0 + gz.z0;
    return h;
  }));
}

BCHReport bch_solve(const SliceFunction& f, const SliceFunction& g, int samples, double tolerance) {
  BCHReport report = bch_condition(f, g, samples, tolerance);
  if (report.admissible) report.h = bch_combine(f, g, tolerance);
  return report;
}

}  // namespace qslice
