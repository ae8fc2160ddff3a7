#include <cmath>
#include <numbers>

#include "qslice/error.hpp"
#include "qslice/slice_function.hpp"

namespace qslice {

Quaternion slice_eval(const SliceFunction& f, const Quaternion& q) {
  return induced_value(f.stem()(slice_parameter(q)), q);
}

Quaternion representation_formula(const Quaternion& vJ, const Quaternion& vK, const ImagUnit& J,
                                  const ImagUnit& K, const ImagUnit& I) {
  const Quaternion j = J.as_quaternion();
  const Quaternion k = K.as_quaternion();
  const Quaternion i = I.as_quaternion();
  if (norm(j - k) < 1e-12) throw Error(ErrorCode::DegenerateUnits, "representation formula needs J != K");
  const Quaternion inv = inverse(j - k);
  return (i - k) * (inv * vJ) - (i - j) * (inv * vK);
}

SliceFunction star_mul(const SliceFunction& f, const SliceFunction& g) {
  return SliceFunction(f.stem() * g.stem());
}

SliceFunction operator*(const SliceFunction& f, const SliceFunction& g) { return star_mul(f, g); }
SliceFunction operator+(const SliceFunction& f, const SliceFunction& g) { return SliceFunction(f.stem() + g.stem()); }
SliceFunction operator-(const SliceFunction& f, const SliceFunction& g) { return SliceFunction(f.stem() - g.stem()); }
SliceFunction operator*(double s, const SliceFunction& f) { return SliceFunction(s * f.stem()); }

StarParts star_decompose(const SliceFunction& f) {
  const StemFunction& F = f.stem();
  return {SliceFunction(scalar_part(F)), SliceFunction(vector_part(F)), SliceFunction(regular_conjugate(F)),
          SliceFunction(symmetrization(F)), SliceFunction(vector_symmetrization(F))};
}

CQuaternion stem_derivative(const StemFunction& f, Complex z, double radius, int nodes) {
  CQuaternion sum;
  const double step = 2.0 * std::numbers::pi / nodes;
  for (int k = 0; k < nodes; ++k) {
    const Complex w = std::polar(1.0, step * k);
    sum += f.evaluate(z + radius * w) * std::conj(w);
  }
  return sum / Complex(nodes * radius);
}

CQuaternion stem_derivative(const StemFunction& f, Complex z) {
  const double dist = f.domain().boundary_distance(z);
  if (dist < 0.0) throw Error(ErrorCode::OutOfDomain, "derivative requested outside the domain");
  if (dist < 2e-5) throw Error(ErrorCode::NearBoundary, "too close to the domain boundary for quadrature");
  const double radius = std::min(0.1, dist / 2.0);
  int nodes = kQuadratureNodes;
  CQuaternion coarse = stem_derivative(f, z, radius, nodes);
  while (nodes < 16 * kQuadratureNodes) {
    nodes *= 2;
    const CQuaternion fine = stem_derivative(f, z, radius, nodes);
    if (abs(fine - coarse) <= kQuadratureSelfCheck * std::max(1.0, abs(fine))) return fine;
    coarse = fine;
  }
  return coarse;
}

Quaternion slice_derivative(const SliceFunction& f, const Quaternion& q) {
  return induced_value(stem_derivative(f.stem(), slice_parameter(q)), q);
}

StemFunction derivative_stem(const StemFunction& f) {
  if (f.has_exact_derivative()) return f.exact_derivative();
  return StemFunction(f.domain(), [f](Complex z) { return stem_derivative(f, z); });
}

Quaternion spherical_derivative(const SliceFunction& f, const Quaternion& q) {
  const double beta = vec_norm(q);
  if (beta == 0.0) throw Error(ErrorCode::RealAxis, "spherical derivative is undefined on the real axis");
  return f.stem()(slice_parameter(q)).imag() / beta;
}

namespace {

constexpr double kRatioThreshold = 1e-4;
constexpr int kMeanNodes = 32;

// <G_v, F_v>/n(F_v) where that quotient is well conditioned.
bool direct_ratio(const StemFunction& f, const StemFunction& g, Complex z, Complex& out) {
  const CQuaternion F = f.evaluate(z);
  const Complex w = vec_sq(F);
  const double scale = std::norm(F.z1) + std::norm(F.z2) + std::norm(F.z3);
  if (std::abs(w) < kRatioThreshold * scale || w == 0.0) return false;
  out = vec_dot(g.evaluate(z).vec(), F) / w;
  return true;
}

bool circle_mean(const StemFunction& f, const StemFunction& g, Complex z, double radius, Complex& mean) {
  Complex sum = 0.0;
  for (int k = 0; k < kMeanNodes; ++k) {
    Complex value;
    if (!direct_ratio(f, g, z + std::polar(radius, 2.0 * std::numbers::pi * k / kMeanNodes), value)) return false;
    sum += value;
  }
  mean = sum / static_cast<double>(kMeanNodes);
  return true;
}

// Value of the holomorphic extension of the ratio at an (isolated) zero of n(F_v).
Complex extended_ratio(const StemFunction& f, const StemFunction& g, Complex z) {
  double radius = std::min(0.05, 0.5 * f.domain().boundary_distance(z));
  for (int attempt = 0; attempt < 14 && radius > 1e-7; ++attempt, radius *= 0.5) {
    Complex outer, inner;
    if (!circle_mean(f, g, z, radius, outer) || !circle_mean(f, g, z, 0.6 * radius, inner)) continue;
    if (std::abs(outer - inner) <= 1e-9 * std::max(1.0, std::abs(outer))) return outer;
  }
  throw Error(ErrorCode::NonIsolatedZero, "zero of f_v^s could not be isolated on a small circle");
}

}  // namespace

OrthDecomposition orth_decompose(const SliceFunction& f, const SliceFunction& g) {
  const StemFunction F = f.stem();
  const StemFunction G = g.stem();
  if (!(F.domain() == G.domain())) throw Error(ErrorCode::DomainMismatch, "functions live on different domains");
  bool vanishing = true;
  for (Complex z : domain_samples(F.domain(), 32)) {
    if (std::abs(vec_sq(F.evaluate(z))) > 1e-12) {
      vanishing = false;
      break;
    }
  }
  if (vanishing) throw Error(ErrorCode::VanishingVectorPart, "f_v^s vanishes on the whole domain");

  auto ratio = [F, G](Complex z) {
    Complex r;
    if (direct_ratio(F, G, z, r)) return r;
    return extended_ratio(F, G, z);
  };
  StemFunction g1 = scalar_stem(F.domain(), ratio);
  StemFunction perp(F.domain(), [F, G, ratio](Complex z) {
    return G.evaluate(z).vec() - ratio(z) * F.evaluate(z).vec();
  });
  return {SliceFunction(std::move(g1)), SliceFunction(std::move(perp))};
}

}  // namespace qslice
