#pragma once

#include <complex>

#include "qslice/quaternion.hpp"

namespace qslice {

using Complex = std::complex<double>;

/// Element z0 + z1 i + z2 j + z3 k of the complexified quaternions, z_l complex.
///
/// The complex unit of each coordinate commutes with i, j, k; the product is the
/// Hamilton product written over C.
struct CQuaternion {
  Complex z0{}, z1{}, z2{}, z3{};

  constexpr CQuaternion() = default;
  constexpr CQuaternion(Complex a, Complex b, Complex c, Complex d) : z0(a), z1(b), z2(c), z3(d) {}
  constexpr explicit CQuaternion(Complex scalar) : z0(scalar) {}
  /// Real embedding H -> C (x) H.
  constexpr explicit CQuaternion(const Quaternion& q) : z0(q.q0), z1(q.q1), z2(q.q2), z3(q.q3) {}

  constexpr Complex scalar() const { return z0; }
  constexpr CQuaternion vec() const { return {Complex{}, z1, z2, z3}; }

  /// Componentwise real parts (the even part of a stem value).
  Quaternion real() const { return {z0.real(), z1.real(), z2.real(), z3.real()}; }
  /// Componentwise imaginary parts (the odd part of a stem value).
  Quaternion imag() const { return {z0.imag(), z1.imag(), z2.imag(), z3.imag()}; }

  bool operator==(const CQuaternion&) const = default;

  CQuaternion& operator+=(const CQuaternion& o);
  CQuaternion& operator-=(const CQuaternion& o);
};

inline CQuaternion operator+(const CQuaternion& a, const CQuaternion& b) {
  return {a.z0 + b.z0, a.z1 + b.z1, a.z2 + b.z2, a.z3 + b.z3};
}
inline CQuaternion operator-(const CQuaternion& a, const CQuaternion& b) {
  return {a.z0 - b.z0, a.z1 - b.z1, a.z2 - b.z2, a.z3 - b.z3};
}
inline CQuaternion operator-(const CQuaternion& a) { return {-a.z0, -a.z1, -a.z2, -a.z3}; }
inline CQuaternion operator*(Complex s, const CQuaternion& a) {
  return {s * a.z0, s * a.z1, s * a.z2, s * a.z3};
}
inline CQuaternion operator*(const CQuaternion& a, Complex s) { return s * a; }
inline CQuaternion operator*(double s, const CQuaternion& a) { return Complex(s) * a; }
inline CQuaternion operator/(const CQuaternion& a, Complex s) {
  return {a.z0 / s, a.z1 / s, a.z2 / s, a.z3 / s};
}

CQuaternion cq_mul(const CQuaternion& z, const CQuaternion& w);
inline CQuaternion operator*(const CQuaternion& z, const CQuaternion& w) { return cq_mul(z, w); }

/// z^c = z0 - (z1 i + z2 j + z3 k).
inline CQuaternion conj_c(const CQuaternion& z) { return {z.z0, -z.z1, -z.z2, -z.z3}; }
/// Componentwise complex conjugation.
inline CQuaternion bar(const CQuaternion& z) {
  return {std::conj(z.z0), std::conj(z.z1), std::conj(z.z2), std::conj(z.z3)};
}
/// n(z) = z1^2 + z2^2 + z3^2 (no conjugation: the bilinear square).
inline Complex vec_sq(const CQuaternion& z) { return z.z1 * z.z1 + z.z2 * z.z2 + z.z3 * z.z3; }
/// z z^c = z0^2 + n(z).
inline Complex sym(const CQuaternion& z) { return z.z0 * z.z0 + vec_sq(z); }
/// Bilinear inner product of the vector parts.
inline Complex vec_dot(const CQuaternion& z, const CQuaternion& w) {
  return z.z1 * w.z1 + z.z2 * w.z2 + z.z3 * w.z3;
}
/// Bilinear cross product of the vector parts.
CQuaternion vec_cross(const CQuaternion& z, const CQuaternion& w);
/// Euclidean norm of C^4, used for every tolerance on C (x) H.
double abs(const CQuaternion& z);

/// Absolute tolerance for membership in V_{-1} and V_inf.
inline constexpr double kClassifyTolerance = 1e-10;

enum class Locus { Generic, InVminus1, InVinf, InBoth };

/// Position of z relative to V_{-1} = {z0^2 + n(z) = 0} and V_inf = {n(z) = 0}.
Locus classify(const CQuaternion& z, double tolerance = kClassifyTolerance);

/// cos(sqrt(w)) and sin(sqrt(w))/sqrt(w); both are even in the root so no
/// branch is ever chosen.
struct EvenTrigPair {
  Complex cosr;
  Complex sincr;
};

EvenTrigPair even_trig(Complex w);
/// Same pair evaluated from an explicit root r (any r with r^2 = w); used to
/// check branch independence.
EvenTrigPair even_trig_from_root(Complex root);

/// n-th power via the two-term recurrence of (x + iy)^n; n >= 1.
CQuaternion sigma_n(const CQuaternion& z, int n);

/// Exponential of the algebra: e^{z0} (cos sqrt(n(z)) + sin sqrt(n(z))/sqrt(n(z)) vec(z)).
CQuaternion epsilon(const CQuaternion& z);

/// Sum over m of (-1)^m z^m / (2m+1)!, so that nu(z^2) z = sin(z).
CQuaternion nu(const CQuaternion& z);

/// sin(z) in the algebra: sin(z0) cosh(sqrt n) + cos(z0) sinh(sqrt n)/sqrt n vec(z).
CQuaternion algebra_sin(const CQuaternion& z);

}  // namespace qslice
