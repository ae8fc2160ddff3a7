#pragma once

#include <array>
#include <cmath>

namespace qslice {

/// Real quaternion q0 + q1 i + q2 j + q3 k.
///
/// Stored as a flat 4-tuple; no normalisation is cached so every invariant can
/// be checked directly from the fields.
struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d) : q0(a), q1(b), q2(c), q3(d) {}
  constexpr explicit Quaternion(double real) : q0(real) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double scalar() const { return q0; }
  constexpr Quaternion vec() const { return {0, q1, q2, q3}; }
  constexpr std::array<double, 4> to_array() const { return {q0, q1, q2, q3}; }

  constexpr bool operator==(const Quaternion&) const = default;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(double s);
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
}
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
constexpr Quaternion operator/(const Quaternion& a, double s) {
  return {a.q0 / s, a.q1 / s, a.q2 / s, a.q3 / s};
}

/// Hamilton product p0q0 - <p_v,q_v> + p0 q_v + q0 p_v + p_v x q_v.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }
constexpr double norm2(const Quaternion& q) {
  return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}
double norm(const Quaternion& q);
/// |q_v|
double vec_norm(const Quaternion& q);
/// Euclidean inner product of the vector parts.
constexpr double vec_dot(const Quaternion& p, const Quaternion& q) {
  return p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3;
}
/// Cross product of the vector parts, returned as a pure quaternion.
constexpr Quaternion vec_cross(const Quaternion& p, const Quaternion& q) {
  return {0.0, p.q2 * q.q3 - p.q3 * q.q2, p.q3 * q.q1 - p.q1 * q.q3, p.q1 * q.q2 - p.q2 * q.q1};
}
/// Multiplicative inverse; q must be non-zero.
Quaternion inverse(const Quaternion& q);

/// Point of the unit sphere S of imaginary units.
class ImagUnit {
 public:
  /// Normalises (x1, x2, x3); throws InvalidArgument on the zero vector.
  static ImagUnit from_vector(double x1, double x2, double x3);
  /// Unit of q's vector part; throws RealAxis when q is real.
  static ImagUnit of(const Quaternion& q);

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  double x3() const { return x3_; }
  Quaternion as_quaternion() const { return {0.0, x1_, x2_, x3_}; }

 private:
  ImagUnit(double a, double b, double c) : x1_(a), x2_(b), x3_(c) {}
  double x1_, x2_, x3_;
};

/// alpha + I beta
Quaternion on_slice(double alpha, const ImagUnit& unit, double beta);

/// sin(t)/t extended by 1 at the origin.
double sinc(double t);

/// e^{q0} (cos|q_v| + sinc(|q_v|) q_v).
Quaternion quat_exp(const Quaternion& q);

/// Position of q relative to the singular set of exp.
struct Stratum {
  enum class Kind { Regular, Singular };
  Kind kind = Kind::Singular;
  /// Index k with k*pi < |q_v| < (k+1)*pi; meaningful for Regular only.
  int k = 0;

  static Stratum regular(int k) { return {Kind::Regular, k}; }
  static Stratum singular() { return {Kind::Singular, 0}; }
  bool operator==(const Stratum&) const = default;
};

/// Absolute tolerance on |q_v| - h*pi used to report a boundary point as singular.
inline constexpr double kStratumTolerance = 1e-9;

Stratum exp_stratum(const Quaternion& q);

/// alpha + I(beta + pi) for q = alpha + I beta, beta > 0; throws RealAxis on real q.
Quaternion tmap(const Quaternion& q);

}  // namespace qslice
