#include "qslice/cquaternion.hpp"

#include <cmath>

#include "qslice/error.hpp"

namespace qslice {

CQuaternion& CQuaternion::operator+=(const CQuaternion& o) { return *this = *this + o; }
CQuaternion& CQuaternion::operator-=(const CQuaternion& o) { return *this = *this - o; }

CQuaternion vec_cross(const CQuaternion& z, const CQuaternion& w) {
  return {Complex{}, z.z2 * w.z3 - z.z3 * w.z2, z.z3 * w.z1 - z.z1 * w.z3, z.z1 * w.z2 - z.z2 * w.z1};
}

CQuaternion cq_mul(const CQuaternion& z, const CQuaternion& w) {
  const CQuaternion cross = vec_cross(z, w);
  return {z.z0 * w.z0 - vec_dot(z, w),
          z.z0 * w.z1 + w.z0 * z.z1 + cross.z1,
          z.z0 * w.z2 + w.z0 * z.z2 + cross.z2,
          z.z0 * w.z3 + w.z0 * z.z3 + cross.z3};
}

double abs(const CQuaternion& z) {
  return std::sqrt(std::norm(z.z0) + std::norm(z.z1) + std::norm(z.z2) + std::norm(z.z3));
}

Locus classify(const CQuaternion& z, double tolerance) {
  const bool minus_one = std::abs(sym(z)) <= tolerance;
  const bool infinity = std::abs(vec_sq(z)) <= tolerance;
  if (minus_one && infinity) return Locus::InBoth;
  if (minus_one) return Locus::InVminus1;
  if (infinity) return Locus::InVinf;
  return Locus::Generic;
}

namespace {

constexpr int kEvenSeriesTerms = 25;

EvenTrigPair even_series(Complex w) {
  // cos(sqrt w) = sum (-w)^k/(2k)!, sin(sqrt w)/sqrt w = sum (-w)^k/(2k+1)!
  Complex c{}, s{};
  Complex term = 1.0;  // (-w)^k / (2k)!
  for (int k = 0; k < kEvenSeriesTerms; ++k) {
    c += term;
    const Complex odd = term / static_cast<double>(2 * k + 1);
    s += odd;
    term = term * (-w) / static_cast<double>((2 * k + 1) * (2 * k + 2));
  }
  return {c, s};
}

}  // namespace

EvenTrigPair even_trig_from_root(Complex root) {
  const Complex w = root * root;
  if (std::abs(w) < 1.0) return even_series(w);
  return {std::cos(root), std::sin(root) / root};
}

EvenTrigPair even_trig(Complex w) {
  if (std::abs(w) < 1.0) return even_series(w);
  const Complex r = std::sqrt(w);
  return {std::cos(r), std::sin(r) / r};
}

CQuaternion sigma_n(const CQuaternion& z, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sigma_n needs n >= 1");
  // (x + iy)^m = P_m + i y Q_m with x = z0, y^2 = n(z)
  const Complex x = z.z0;
  const Complex y2 = vec_sq(z);
  Complex p = x;
  Complex q = 1.0;
  for (int m = 1; m < n; ++m) {
    const Complex next_p = x * p - y2 * q;
    const Complex next_q = p + x * q;
    p = next_p;
    q = next_q;
  }
  return {p, q * z.z1, q * z.z2, q * z.z3};
}

CQuaternion epsilon(const CQuaternion& z) {
  const EvenTrigPair t = even_trig(vec_sq(z));
  const Complex scale = std::exp(z.z0);
  const Complex odd = scale * t.sincr;
  return {scale * t.cosr, odd * z.z1, odd * z.z2, odd * z.z3};
}

namespace {

// sin(sqrt x)/sqrt x at a complex scalar.
Complex sincr(Complex x) { return even_trig(x).sincr; }

}  // namespace

CQuaternion nu(const CQuaternion& z) {
  const Complex x = z.z0;
  const Complex y2 = vec_sq(z);
  const Complex y = std::sqrt(y2);
  const double reach = std::abs(x) + std::abs(y);

  Complex even{}, odd{};
  if (reach <= 20.0 || std::abs(y) < 5e-3) {
    // Power series in the algebra, z^m = P_m + Q_m vec(z).
    Complex p = 1.0, q = 0.0;
    double factorial = 1.0;  // (2m+1)!
    for (int m = 0; m < 200; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const Complex dp = sign * p / factorial;
      const Complex dq = sign * q / factorial;
      even += dp;
      odd += dq;
      if (m > 4 && std::abs(dp) + std::abs(dq) <= 1e-18 * (std::abs(even) + std::abs(odd))) break;
      const Complex next_p = x * p - y2 * q;
      const Complex next_q = p + x * q;
      p = next_p;
      q = next_q;
      factorial *= static_cast<double>((2 * m + 2) * (2 * m + 3));
    }
  } else {
    // Two-point form: symmetric in the sign of y.
    const Complex iy = Complex(0.0, 1.0) * y;
    const Complex fa = sincr(x + iy);
    const Complex fb = sincr(x - iy);
    even = 0.5 * (fa + fb);
    odd = (fa - fb) / (2.0 * iy);
  }
  return {even, odd * z.z1, odd * z.z2, odd * z.z3};
}

CQuaternion algebra_sin(const CQuaternion& z) {
  const EvenTrigPair t = even_trig(-vec_sq(z));
  const Complex odd = std::cos(z.z0) * t.sincr;
  return {std::sin(z.z0) * t.cosr, odd * z.z1, odd * z.z2, odd * z.z3};
}

}  // namespace qslice
