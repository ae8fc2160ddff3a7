#pragma once

// Matrix-model reference computations for the verification suites. They never
// call the library routine under test.

#include <array>
#include <cmath>

#include "qslice/qslice.hpp"

namespace qslice::cli::oracle {

inline Quaternion matrix_product(const Quaternion& p, const Quaternion& q) {
  const double a = p.q0, b = p.q1, c = p.q2, d = p.q3;
  const double m[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  const double v[4] = {q.q0, q.q1, q.q2, q.q3};
  double out[4] = {};
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) out[r] += m[r][k] * v[k];
  }
  return {out[0], out[1], out[2], out[3]};
}

// 1 -> I, i -> diag(i, -i), j -> [[0, 1], [-1, 0]], k -> [[0, i], [i, 0]]
using Mat2 = std::array<std::array<Complex, 2>, 2>;

inline Mat2 to_matrix(const CQuaternion& z) {
  const Complex I(0.0, 1.0);
  return {{{z.z0 + I * z.z1, z.z2 + I * z.z3}, {-z.z2 + I * z.z3, z.z0 - I * z.z1}}};
}

inline CQuaternion from_matrix(const Mat2& m) {
  const Complex I(0.0, 1.0);
  return {(m[0][0] + m[1][1]) / 2.0, (m[0][0] - m[1][1]) / (2.0 * I), (m[0][1] - m[1][0]) / 2.0,
          (m[0][1] + m[1][0]) / (2.0 * I)};
}

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) c[r][s] = a[r][0] * b[0][s] + a[r][1] * b[1][s];
  }
  return c;
}

inline CQuaternion matrix_product(const CQuaternion& z, const CQuaternion& w) {
  return from_matrix(mul(to_matrix(z), to_matrix(w)));
}

inline CQuaternion matrix_power(const CQuaternion& z, int n) {
  Mat2 acc{{{1.0, 0.0}, {0.0, 1.0}}};
  for (int k = 0; k < n; ++k) acc = mul(acc, to_matrix(z));
  return from_matrix(acc);
}

inline CQuaternion series_exp(const CQuaternion& z) {
  int squarings = 0;
  for (double size = abs(z); size > 0.5; size /= 2.0) ++squarings;
  const Mat2 m = to_matrix(std::ldexp(1.0, -squarings) * z);
  Mat2 sum{{{1.0, 0.0}, {0.0, 1.0}}}, term = sum;
  for (int n = 1; n < 40; ++n) {
    term = mul(term, m);
    for (auto& row : term)
      for (auto& x : row) x /= static_cast<double>(n);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) sum[r][s] += term[r][s];
  }
  for (int k = 0; k < squarings; ++k) sum = mul(sum, sum);
  return from_matrix(sum);
}

/// e^{X} sum_m (-1)^m/(m+1)! ad_X^m(dX): derivative of e^{X(t)} by the
/// commutator series.
inline CQuaternion exp_derivative_series(const CQuaternion& x, const CQuaternion& dx, int terms = 60) {
  CQuaternion ad = dx, sum = dx;
  double factorial = 1.0;
  for (int m = 1; m < terms; ++m) {
    ad = matrix_product(x, ad) - matrix_product(ad, x);
    factorial *= static_cast<double>(m + 1);
    sum += ((m % 2 == 0 ? 1.0 : -1.0) / factorial) * ad;
  }
  return matrix_product(series_exp(x), sum);
}

}  // namespace qslice::cli::oracle
