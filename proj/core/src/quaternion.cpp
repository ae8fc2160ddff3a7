#include "qslice/quaternion.hpp"

#include <numbers>

#include "qslice/error.hpp"

namespace qslice {

Quaternion& Quaternion::operator+=(const Quaternion& o) { return *this = *this + o; }
Quaternion& Quaternion::operator-=(const Quaternion& o) { return *this = *this - o; }
Quaternion& Quaternion::operator*=(double s) { return *this = s * *this; }

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  const Quaternion cross = vec_cross(p, q);
  return {p.q0 * q.q0 - vec_dot(p, q),
          p.q0 * q.q1 + q.q0 * p.q1 + cross.q1,
          p.q0 * q.q2 + q.q0 * p.q2 + cross.q2,
          p.q0 * q.q3 + q.q0 * p.q3 + cross.q3};
}

double norm(const Quaternion& q) { return std::hypot(std::hypot(q.q0, q.q1), std::hypot(q.q2, q.q3)); }

double vec_norm(const Quaternion& q) { return std::hypot(q.q1, q.q2, q.q3); }

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0) throw Error(ErrorCode::InvalidArgument, "inverse of the zero quaternion");
  return conj(q) / n2;
}

ImagUnit ImagUnit::from_vector(double x1, double x2, double x3) {
  const double n = std::hypot(x1, x2, x3);
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "imaginary unit from zero vector");
  return ImagUnit(x1 / n, x2 / n, x3 / n);
}

ImagUnit ImagUnit::of(const Quaternion& q) {
  if (vec_norm(q) == 0.0) throw Error(ErrorCode::RealAxis, "real quaternion has no imaginary unit");
  return from_vector(q.q1, q.q2, q.q3);
}

Quaternion on_slice(double alpha, const ImagUnit& unit, double beta) {
  return Quaternion(alpha) + beta * unit.as_quaternion();
}

double sinc(double t) {
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  }
  return std::sin(t) / t;
}

namespace {

double cos_small_safe(double t) {
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 1.0 - t2 / 2.0 * (1.0 - t2 / 12.0);
  }
  return std::cos(t);
}

}  // namespace

Quaternion quat_exp(const Quaternion& q) {
  const double r = vec_norm(q);
  const double scale = std::exp(q.q0);
  const double s = scale * sinc(r);
  return {scale * cos_small_safe(r), s * q.q1, s * q.q2, s * q.q3};
}

Stratum exp_stratum(const Quaternion& q) {
  const double r = vec_norm(q);
  const double h = std::round(r / std::numbers::pi);
  if (std::abs(r - h * std::numbers::pi) <= kStratumTolerance) return Stratum::singular();
  return Stratum::regular(static_cast<int>(std::floor(r / std::numbers::pi)));
}

Quaternion tmap(const Quaternion& q) {
  const double beta = vec_norm(q);
  if (beta == 0.0) throw Error(ErrorCode::RealAxis, "tmap is undefined on the real axis");
  return on_slice(q.q0, ImagUnit::of(q), beta + std::numbers::pi);
}

}  // namespace qslice
