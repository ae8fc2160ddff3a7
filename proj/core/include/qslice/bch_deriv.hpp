#pragma once

#include <optional>
#include <vector>

#include "qslice/slice_function.hpp"

namespace qslice {

/// (f0 g1 + g0)^2 f_v^s + f^s g_perp^s at q, from the decomposition of g_v
/// along f_v. Equals (f*g)_v^s(q). Throws VanishingVectorPart when f_v^s(q) = 0.
Complex prodvec_sym(const SliceFunction& f, const SliceFunction& g, const Quaternion& q);

/// n(vec(F G)) at the slice parameter of q, computed directly.
Complex prodvec_sym_direct(const SliceFunction& f, const SliceFunction& g, const Quaternion& q);

/// g = -f^c + ell_+ * j, for which (f*g)_v^s vanishes identically.
/// f must preserve C_i (F2 = F3 = 0) with F0^2 + F1^2 != 0 != F1 on a domain
/// off the real axis; otherwise throws BadExampleInput.
SliceFunction construct_vanishing_counterexample(const SliceFunction& f);

inline constexpr double kBchTolerance = 1e-8;

enum class BchRegime { Commuting, Generic };

struct BCHReport {
  std::vector<Complex> samples;
  std::vector<Complex> condition_values;
  double min_abs = 0.0;
  bool admissible = false;
  BchRegime regime = BchRegime::Generic;
  std::optional<SliceFunction> h;
};

/// n(vec(epsilon(F_v) epsilon(G_v))) written through the decomposition of G_v
/// along F_v:
///   ([P cos_f sinc_g + cos_g sinc_f n(F_v)]^2 + sinc_g^2 (n(F_v) n(G_v) - P^2)) / n(F_v)
/// with P = <G_v, F_v>, cos_x = cos sqrt(n(X_v)), sinc_x = sin sqrt(n(X_v))/sqrt(n(X_v)).
/// Falls back to the direct product where n(F_v) vanishes.
Complex bch_condition_value(const CQuaternion& F, const CQuaternion& G);

/// Samples the condition over the domain; admissible iff min |value| >= tolerance.
BCHReport bch_condition(const SliceFunction& f, const SliceFunction& g, int samples = 64,
                        double tolerance = kBchTolerance);

/// h with exp_*(f) * exp_*(g) = exp_*(h): h0 = f0 + g0 and h_v = W / sinc(theta),
/// where (cos theta, W) = epsilon(F_v) epsilon(G_v) and theta is continued from
/// the domain center. Throws NotExponential (condition fails) or DegenerateAngle.
SliceFunction bch_combine(const SliceFunction& f, const SliceFunction& g, double tolerance = kBchTolerance);

/// Condition report with h filled in when admissible.
BCHReport bch_solve(const SliceFunction& f, const SliceFunction& g, int samples = 64,
                    double tolerance = kBchTolerance);

inline constexpr double kDegenerateTolerance = 1e-6;

enum class DerivativeRegime { ClosedForm, Degenerate };

/// (1 - sin(2 sqrt w)/(2 sqrt w))/w, entire in w.
Complex exp_derivative_a(Complex w);
/// ((1 - cos(2 sqrt w))/(2 sqrt w))/sqrt w = (sin sqrt w / sqrt w)^2.
Complex exp_derivative_b(Complex w);

/// d/dz epsilon(F) from F and dF/dz:
///   epsilon(F) [dF + A(w)(<F_v, dF_v> F_v - w dF_v) - B(w) F_v x dF_v],  w = n(F_v).
CQuaternion exp_stem_derivative(const CQuaternion& F, const CQuaternion& dF);

/// Slice derivative of exp_*(f) at q by the closed form.
Quaternion exp_slice_derivative(const SliceFunction& f, const Quaternion& q);

/// Degenerate when |f_v^s| < tolerance at q.
DerivativeRegime derivative_regime(const SliceFunction& f, const Quaternion& q,
                                   double tolerance = kDegenerateTolerance);

}  // namespace qslice
