#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qslice/cquaternion.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

/// Conjugation-invariant parameter domain in C.
///
/// A real center gives one disk meeting the real axis. A non-real center gives
/// the pair of disks around c and conj(c); the radius may not exceed |Im c| so
/// the two components stay disjoint. The stored center always has Im >= 0.
class Domain {
 public:
  static Domain disk(Complex center, double radius);

  Complex center() const { return center_; }
  double radius() const { return radius_; }
  bool real_intersecting() const { return real_; }

  bool contains(Complex z) const;
  /// Distance from z to the boundary of the component containing it; negative
  /// outside.
  double boundary_distance(Complex z) const;

  bool operator==(const Domain&) const = default;

 private:
  Domain(Complex center, double radius, bool real) : center_(center), radius_(radius), real_(real) {}
  Complex center_;
  double radius_;
  bool real_;
};

/// Disk of radius 8 around the origin; large enough for the usual entire
/// examples.
Domain default_domain();

/// Holomorphic F : U -> C (x) H with F(conj z) = bar(F(z)).
///
/// Immutable after construction and cheap to copy (shared state).
class StemFunction {
 public:
  using Evaluator = std::function<CQuaternion(Complex)>;
  using DerivativeBuilder = std::function<StemFunction()>;

  /// `polynomial` records right coefficients when F is a polynomial (empty
  /// otherwise); it is metadata for oracles and serialisation.
  StemFunction(Domain domain, Evaluator eval, DerivativeBuilder derivative = {},
               std::vector<Quaternion> polynomial = {});

  const Domain& domain() const;

  /// F(z); throws OutOfDomain when z is not in the domain.
  CQuaternion operator()(Complex z) const;
  /// F(z) without the domain check (quadrature circles, internal sampling).
  CQuaternion evaluate(Complex z) const;

  bool has_exact_derivative() const;
  /// dF/dz built from the node algebra; throws InvalidArgument if unavailable.
  StemFunction exact_derivative() const;

  /// Right coefficients a_n of F(z) = sum z^n a_n; null unless F is a
  /// polynomial node.
  const std::vector<Quaternion>* polynomial_coefficients() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// q = alpha + I beta  ->  F_ev(alpha + i beta) + I F_od(alpha + i beta).
class SliceFunction {
 public:
  explicit SliceFunction(StemFunction stem) : stem_(std::move(stem)) {}

  const StemFunction& stem() const { return stem_; }
  const Domain& domain() const { return stem_.domain(); }

  Quaternion operator()(const Quaternion& q) const;

 private:
  StemFunction stem_;
};

/// Slice parameter alpha + i |q_v| of q.
inline Complex slice_parameter(const Quaternion& q) { return {q.q0, vec_norm(q)}; }

/// Value of the function induced by the single stem value v at q.
Quaternion induced_value(const CQuaternion& v, const Quaternion& q);

// Node algebra for stems. Binary nodes require equal domains (DomainMismatch).

StemFunction constant_stem(const Domain& d, const Quaternion& value);
/// sum z^n a_n with right quaternion coefficients.
StemFunction polynomial_stem(const Domain& d, std::vector<Quaternion> coefficients);
StemFunction identity_stem(const Domain& d);
/// (i sgn Im z, 0, 0, 0); throws JNotDefined on domains meeting the real axis.
StemFunction j_stem(const Domain& d);
/// (1 - J i)/2 and (1 + J i)/2.
StemFunction ell_plus_stem(const Domain& d);
StemFunction ell_minus_stem(const Domain& d);

StemFunction operator+(const StemFunction& f, const StemFunction& g);
StemFunction operator-(const StemFunction& f, const StemFunction& g);
StemFunction operator-(const StemFunction& f);
/// Pointwise product in C (x) H.
StemFunction operator*(const StemFunction& f, const StemFunction& g);
/// Multiplication by a real scalar.
StemFunction operator*(double s, const StemFunction& f);
/// Right multiplication by a constant quaternion.
StemFunction operator*(const StemFunction& f, const Quaternion& a);

/// z -> epsilon(F(z)).
StemFunction exp_stem(const StemFunction& f);
StemFunction scalar_part(const StemFunction& f);
StemFunction vector_part(const StemFunction& f);
/// z -> F(z)^c.
StemFunction regular_conjugate(const StemFunction& f);
/// z -> F(z) F(z)^c = F0^2 + n(F_v).
StemFunction symmetrization(const StemFunction& f);
/// z -> n(F_v(z)).
StemFunction vector_symmetrization(const StemFunction& f);
/// Scalar stem from a complex function c(z) with c(conj z) = conj c(z).
StemFunction scalar_stem(const Domain& d, std::function<Complex(Complex)> c);

// Slice calculus on induced functions.

/// f(q); throws OutOfDomain.
Quaternion slice_eval(const SliceFunction& f, const Quaternion& q);

/// (I - K)((J - K)^{-1} vJ) - (I - J)((J - K)^{-1} vK); throws DegenerateUnits
/// when J = K.
Quaternion representation_formula(const Quaternion& vJ, const Quaternion& vK, const ImagUnit& J,
                                  const ImagUnit& K, const ImagUnit& I);

SliceFunction star_mul(const SliceFunction& f, const SliceFunction& g);
SliceFunction operator*(const SliceFunction& f, const SliceFunction& g);
SliceFunction operator+(const SliceFunction& f, const SliceFunction& g);
SliceFunction operator-(const SliceFunction& f, const SliceFunction& g);
SliceFunction operator*(double s, const SliceFunction& f);

struct StarParts {
  SliceFunction f0;
  SliceFunction fv;
  SliceFunction fc;
  SliceFunction fs;
  SliceFunction fvs;
};

StarParts star_decompose(const SliceFunction& f);

/// Number of trapezoid nodes of the Cauchy derivative; doubled until two
/// successive rules agree to kQuadratureSelfCheck.
inline constexpr int kQuadratureNodes = 32;
inline constexpr double kQuadratureSelfCheck = 1e-9;

/// dF/dz at z by Cauchy quadrature on radius min(0.1, dist/2); throws
/// NearBoundary when z is (almost) on the boundary.
CQuaternion stem_derivative(const StemFunction& f, Complex z);
/// Same on a prescribed radius.
CQuaternion stem_derivative(const StemFunction& f, Complex z, double radius, int nodes);

/// Slice derivative of f at q.
Quaternion slice_derivative(const SliceFunction& f, const Quaternion& q);
/// Stem of the slice derivative: exact node derivative when available,
/// quadrature otherwise.
StemFunction derivative_stem(const StemFunction& f);

/// F_od(alpha + i beta)/beta; throws RealAxis on real q.
Quaternion spherical_derivative(const SliceFunction& f, const Quaternion& q);

struct OrthDecomposition {
  SliceFunction g1;      // slice preserving
  SliceFunction g_perp;  // vector part orthogonal to f_v
};

/// g_v = g1 f_v + g_perp with <f_v, g_perp>_* = 0. g1 is extended across
/// isolated zeros of f_v^s by a Cauchy mean on a small circle.
/// Throws VanishingVectorPart when f_v^s vanishes identically and
/// NonIsolatedZero when a zero cannot be isolated.
OrthDecomposition orth_decompose(const SliceFunction& f, const SliceFunction& g);

/// Deterministic sample of parameters in the upper part of the domain (the
/// lower part follows by symmetry); used for domain-wide hypothesis checks.
std::vector<Complex> domain_samples(const Domain& d, int count);

/// Maximum of |F(conj z) - bar(F(z))| over `pairs` parameters of the domain.
double stem_symmetry_defect(const StemFunction& f, int pairs = 64);

}  // namespace qslice
