#pragma once

#include "qslice/lift_cover.hpp"
#include "qslice/slice_function.hpp"

namespace qslice {

/// Branch selection for a *-logarithm.
///
/// `real_constraint` must equal whether the domain meets the real axis; on such
/// domains only indices with h1 + h2 = 0 exist.
struct LogBranchSpec {
  BranchIndex h;
  Complex basepoint;
  bool real_constraint = false;
};

/// Spec with the basepoint at the domain center.
LogBranchSpec branch_at_center(const Domain& d, BranchIndex h = {});

/// Stem z -> epsilon(F(z)).
SliceFunction star_exp(const SliceFunction& f);

/// f^{*n} through sigma_n on stem values; n >= 0.
SliceFunction star_power(const SliceFunction& f, int n);

/// Grid resolution per axis of the lift cache.
inline constexpr int kLogGridResolution = 64;

/// The *-logarithm selected by `spec`: epsilon(G(z)) = F(z), G continuous.
///
/// At the basepoint G is rho of frak_e_preimage(principal rho-fiber of F, h).
/// On domains meeting the real axis the seed is taken at the real projection of
/// the basepoint so that G is real there. The lift is cached on a grid over the
/// upper component and extended to the lower one by G(conj z) = bar(G(z)).
///
/// Throws HitsVLocus (F meets V_-1 or V_inf, or the domain encloses such a
/// point), BadBranchSpec, JNotDefined (h1 + h2 != 0 on a real domain),
/// OutOfDomain (basepoint), PathTooWild.
SliceFunction star_log(const SliceFunction& f, const LogBranchSpec& spec);

/// g + pi [(h1 + h2) J + (h1 - h2) g_v / sqrt(g_v^s)].
///
/// The root is continued from `basepoint` with the sign that makes
/// g_v / sqrt(g_v^s) equal, there, to the principal unit of exp_*(g)_v; with
/// this choice translations compose additively and match the lattice action on
/// logarithm branches. Throws JNotDefined when h1 + h2 != 0 on a real domain.
SliceFunction log_translate(const SliceFunction& g, BranchIndex h, Complex basepoint);

/// Continuous root of f_v^s with value sign * principal root at `basepoint`,
/// continued along segments from the basepoint. Throws BranchObstruction on a
/// zero of f_v^s.
SliceFunction sqrt_fvs(const SliceFunction& f, Complex basepoint, int sign = 1);

/// exp_*(star_log(f, spec) / n); throws BadOrder for n < 1.
SliceFunction star_root(const SliceFunction& f, int n, const LogBranchSpec& spec);

}  // namespace qslice
