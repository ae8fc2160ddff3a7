#include "qslice/slice_function.hpp"

#include <cmath>
#include <numbers>

#include "qslice/error.hpp"

namespace qslice {

Domain Domain::disk(Complex center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "domain radius must be positive and finite");
  }
  if (center.imag() == 0.0) return Domain(center, radius, true);
  const double height = std::abs(center.imag());
  if (radius > height) {
    throw Error(ErrorCode::InvalidArgument,
                "disk around a non-real center must not reach the real axis (radius <= |Im c|)");
  }
  return Domain({center.real(), height}, radius, false);
}

bool Domain::contains(Complex z) const { return boundary_distance(z) > 0.0; }

double Domain::boundary_distance(Complex z) const {
  const double upper = radius_ - std::abs(z - center_);
  if (real_) return upper;
  return std::max(upper, radius_ - std::abs(z - std::conj(center_)));
}

Domain default_domain() { return Domain::disk(0.0, 8.0); }

struct StemFunction::Impl {
  Domain domain;
  Evaluator eval;
  DerivativeBuilder derivative;
  std::vector<Quaternion> polynomial;
};

StemFunction::StemFunction(Domain domain, Evaluator eval, DerivativeBuilder derivative,
                           std::vector<Quaternion> polynomial)
    : impl_(std::make_shared<const Impl>(
          Impl{domain, std::move(eval), std::move(derivative), std::move(polynomial)})) {}

const Domain& StemFunction::domain() const { return impl_->domain; }

CQuaternion StemFunction::operator()(Complex z) const {
  if (!impl_->domain.contains(z)) {
    throw Error(ErrorCode::OutOfDomain, "parameter lies outside the stem domain");
  }
  return impl_->eval(z);
}

CQuaternion StemFunction::evaluate(Complex z) const { return impl_->eval(z); }

bool StemFunction::has_exact_derivative() const { return static_cast<bool>(impl_->derivative); }

StemFunction StemFunction::exact_derivative() const {
  if (!impl_->derivative) throw Error(ErrorCode::InvalidArgument, "stem has no exact derivative");
  return impl_->derivative();
}

const std::vector<Quaternion>* StemFunction::polynomial_coefficients() const {
  return impl_->polynomial.empty() ? nullptr : &impl_->polynomial;
}

Quaternion induced_value(const CQuaternion& v, const Quaternion& q) {
  const double beta = vec_norm(q);
  if (beta == 0.0) return v.real();
  const Quaternion unit = q.vec() / beta;
  return v.real() + unit * v.imag();
}

Quaternion SliceFunction::operator()(const Quaternion& q) const { return slice_eval(*this, q); }

namespace {

void require_same_domain(const StemFunction& f, const StemFunction& g) {
  if (!(f.domain() == g.domain())) throw Error(ErrorCode::DomainMismatch, "stems live on different domains");
}

double imaginary_sign(Complex z) { return z.imag() > 0.0 ? 1.0 : -1.0; }

StemFunction zero_stem(const Domain& d) { return constant_stem(d, Quaternion{}); }

// Derivative builder of a node whose children all have exact derivatives.
template <class Build>
StemFunction::DerivativeBuilder when_exact(std::initializer_list<const StemFunction*> children, Build build) {
  for (const StemFunction* c : children) {
    if (!c->has_exact_derivative()) return {};
  }
  return build;
}

}  // namespace

StemFunction constant_stem(const Domain& d, const Quaternion& value) {
  const CQuaternion v(value);
  return StemFunction(d, [v](Complex) { return v; }, [d] { return zero_stem(d); }, {value});
}

StemFunction polynomial_stem(const Domain& d, std::vector<Quaternion> coefficients) {
  if (coefficients.empty()) coefficients.push_back(Quaternion{});
  std::vector<CQuaternion> c;
  c.reserve(coefficients.size());
  for (const Quaternion& a : coefficients) c.emplace_back(a);
  auto eval = [c](Complex z) {
    CQuaternion v = c.back();
    for (std::size_t n = c.size() - 1; n-- > 0;) v = z * v + c[n];
    return v;
  };
  auto derivative = [d, coefficients] {
    std::vector<Quaternion> dc;
    for (std::size_t n = 1; n < coefficients.size(); ++n) dc.push_back(static_cast<double>(n) * coefficients[n]);
    return polynomial_stem(d, dc);
  };
  return StemFunction(d, eval, derivative, std::move(coefficients));
}

StemFunction identity_stem(const Domain& d) { return polynomial_stem(d, {Quaternion{}, Quaternion(1.0)}); }

StemFunction j_stem(const Domain& d) {
  if (d.real_intersecting()) throw Error(ErrorCode::JNotDefined, "J is not defined on a domain meeting the real axis");
  return StemFunction(
      d, [](Complex z) { return CQuaternion(Complex(0.0, imaginary_sign(z))); },
      [d] { return zero_stem(d); });
}

StemFunction ell_plus_stem(const Domain& d) {
  if (d.real_intersecting()) throw Error(ErrorCode::JNotDefined, "ell_+ needs J, undefined on real domains");
  return StemFunction(
      d, [](Complex z) { return CQuaternion(0.5, Complex(0.0, -0.5 * imaginary_sign(z)), 0.0, 0.0); },
      [d] { return zero_stem(d); });
}

StemFunction ell_minus_stem(const Domain& d) {
  if (d.real_intersecting()) throw Error(ErrorCode::JNotDefined, "ell_- needs J, undefined on real domains");
  return StemFunction(
      d, [](Complex z) { return CQuaternion(0.5, Complex(0.0, 0.5 * imaginary_sign(z)), 0.0, 0.0); },
      [d] { return zero_stem(d); });
}

StemFunction operator+(const StemFunction& f, const StemFunction& g) {
  require_same_domain(f, g);
  return StemFunction(f.domain(), [f, g](Complex z) { return f.evaluate(z) + g.evaluate(z); },
                      when_exact({&f, &g}, [f, g] { return f.exact_derivative() + g.exact_derivative(); }));
}

StemFunction operator-(const StemFunction& f, const StemFunction& g) {
  require_same_domain(f, g);
  return StemFunction(f.domain(), [f, g](Complex z) { return f.evaluate(z) - g.evaluate(z); },
                      when_exact({&f, &g}, [f, g] { return f.exact_derivative() - g.exact_derivative(); }));
}

StemFunction operator-(const StemFunction& f) { return -1.0 * f; }

StemFunction operator*(const StemFunction& f, const StemFunction& g) {
  require_same_domain(f, g);
  return StemFunction(f.domain(), [f, g](Complex z) { return f.evaluate(z) * g.evaluate(z); },
                      when_exact({&f, &g}, [f, g] {
                        return f.exact_derivative() * g + f * g.exact_derivative();
                      }));
}

StemFunction operator*(double s, const StemFunction& f) {
  return StemFunction(f.domain(), [f, s](Complex z) { return s * f.evaluate(z); },
                      when_exact({&f}, [f, s] { return s * f.exact_derivative(); }));
}

StemFunction operator*(const StemFunction& f, const Quaternion& a) {
  const CQuaternion ca(a);
  return StemFunction(f.domain(), [f, ca](Complex z) { return f.evaluate(z) * ca; },
                      when_exact({&f}, [f, a] { return f.exact_derivative() * a; }));
}

StemFunction exp_stem(const StemFunction& f) {
  return StemFunction(f.domain(), [f](Complex z) { return epsilon(f.evaluate(z)); });
}

StemFunction scalar_part(const StemFunction& f) {
  return StemFunction(f.domain(), [f](Complex z) { return CQuaternion(f.evaluate(z).z0); },
                      when_exact({&f}, [f] { return scalar_part(f.exact_derivative()); }));
}

StemFunction vector_part(const StemFunction& f) {
  return StemFunction(f.domain(), [f](Complex z) { return f.evaluate(z).vec(); },
                      when_exact({&f}, [f] { return vector_part(f.exact_derivative()); }));
}

StemFunction regular_conjugate(const StemFunction& f) {
  return StemFunction(f.domain(), [f](Complex z) { return conj_c(f.evaluate(z)); },
                      when_exact({&f}, [f] { return regular_conjugate(f.exact_derivative()); }));
}

StemFunction symmetrization(const StemFunction& f) {
  return StemFunction(f.domain(), [f](Complex z) { return CQuaternion(sym(f.evaluate(z))); },
                      when_exact({&f}, [f] {
                        const StemFunction df = f.exact_derivative();
                        return df * regular_conjugate(f) + f * regular_conjugate(df);
                      }));
}

StemFunction vector_symmetrization(const StemFunction& f) {
  return StemFunction(f.domain(), [f](Complex z) { return CQuaternion(vec_sq(f.evaluate(z))); },
                      when_exact({&f}, [f] {
                        // n(F_v) = -F_v F_v
                        const StemFunction v = vector_part(f);
                        const StemFunction dv = vector_part(f.exact_derivative());
                        return -(dv * v + v * dv);
                      }));
}

StemFunction scalar_stem(const Domain& d, std::function<Complex(Complex)> c) {
  return StemFunction(d, [c = std::move(c)](Complex z) { return CQuaternion(c(z)); });
}

std::vector<Complex> domain_samples(const Domain& d, int count) {
  // Vogel spiral on 0.9 of the radius, folded into the upper half plane.
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double r = 0.9 * d.radius() * std::sqrt((k + 0.5) / count);
    Complex z = d.center() + std::polar(r, golden * k);
    if (d.real_intersecting()) z = {z.real(), std::abs(z.imag())};
    out.push_back(z);
  }
  return out;
}

double stem_symmetry_defect(const StemFunction& f, int pairs) {
  double worst = 0.0;
  for (Complex z : domain_samples(f.domain(), pairs)) {
    worst = std::max(worst, abs(f.evaluate(std::conj(z)) - bar(f.evaluate(z))));
  }
  return worst;
}

}  // namespace qslice
