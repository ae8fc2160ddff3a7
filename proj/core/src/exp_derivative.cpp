#include <cmath>

#include "qslice/bch_deriv.hpp"

namespace qslice {

Complex exp_derivative_a(Complex w) {
  if (std::abs(w) >= 1.0) return (1.0 - even_trig(4.0 * w).sincr) / w;
  // sum_{k>=1} (-1)^{k-1} 4^k w^{k-1} / (2k+1)!
  Complex sum = 0.0;
  Complex term = 4.0 / 6.0;
  for (int k = 1; k < 30; ++k) {
    sum += term;
    term *= -4.0 * w / static_cast<double>((2 * k + 2) * (2 * k + 3));
  }
  return sum;
}

Complex exp_derivative_b(Complex w) {
  const Complex s = even_trig(w).sincr;
  return s * s;
}

CQuaternion exp_stem_derivative(const CQuaternion& F, const CQuaternion& dF) {
  const CQuaternion fv = F.vec();
  const CQuaternion dv = dF.vec();
  const Complex w = vec_sq(fv);
  const CQuaternion bracket =
      dF + exp_derivative_a(w) * (vec_dot(fv, dv) * fv - w * dv) - exp_derivative_b(w) * vec_cross(fv, dv);
  return epsilon(F) * bracket;
}

Quaternion exp_slice_derivative(const SliceFunction& f, const Quaternion& q) {
  const Complex z = slice_parameter(q);
  const StemFunction& F = f.stem();
  const CQuaternion value = F(z);
  const CQuaternion slope = F.has_exact_derivative() ? F.exact_derivative().evaluate(z) : stem_derivative(F, z);
  return induced_value(exp_stem_derivative(value, slope), q);
}

DerivativeRegime derivative_regime(const SliceFunction& f, const Quaternion& q, double tolerance) {
  const Complex w = vec_sq(f.stem()(slice_parameter(q)));
  return std::abs(w) < tolerance ? DerivativeRegime::Degenerate : DerivativeRegime::ClosedForm;
}

}  // namespace qslice
