#include "qslice/star_exp_log.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <optional>

#include "continuation.hpp"
#include "qslice/error.hpp"

namespace qslice {

namespace detail {

Complex continue_on_segment(Complex from, Complex to, Complex value, const BranchStep& step, ErrorCode failure) {
  const double min_step = std::ldexp(1.0, -kContinuationDepth);
  double t = 0.0;
  double h = 1.0;
  while (t < 1.0) {
    const double next = (1.0 - t <= h) ? 1.0 : t + h;
    // A step is taken only if going through the midpoint lands on the same
    // branch; this catches steps that jump over a branch point.
    std::optional<Complex> direct = step(from + next * (to - from), value);
    if (direct) {
      const std::optional<Complex> mid = step(from + (0.5 * (t + next)) * (to - from), value);
      const std::optional<Complex> via = mid ? step(from + next * (to - from), *mid) : std::nullopt;
      if (!via || std::abs(*via - *direct) > 1e-9 * (1.0 + std::abs(*direct))) direct.reset();
    }
    if (direct) {
      value = *direct;
      t = next;
      h = std::min(1.0, 2.0 * h);
    } else {
      h *= 0.5;
      if (h < min_step) throw Error(failure, "branch continuation refinement limit exceeded");
    }
  }
  return value;
}

Complex continue_in_domain(const Domain& d, Complex basepoint, Complex base_value, Complex z,
                           const BranchStep& step, ErrorCode failure) {
  if (d.real_intersecting()) return continue_on_segment(basepoint, z, base_value, step, failure);
  const bool base_low = basepoint.imag() < 0.0;
  const bool z_low = z.imag() < 0.0;
  const Complex b = base_low ? std::conj(basepoint) : basepoint;
  const Complex v = base_low ? std::conj(base_value) : base_value;
  const Complex value = continue_on_segment(b, z_low ? std::conj(z) : z, v, step, failure);
  return z_low ? std::conj(value) : value;
}

}  // namespace detail

LogBranchSpec branch_at_center(const Domain& d, BranchIndex h) {
  return {h, d.center(), d.real_intersecting()};
}

SliceFunction star_exp(const SliceFunction& f) { return SliceFunction(exp_stem(f.stem())); }

SliceFunction star_power(const SliceFunction& f, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "star_power needs n >= 0");
  const StemFunction F = f.stem();
  if (n == 0) return SliceFunction(constant_stem(F.domain(), Quaternion(1.0)));
  return SliceFunction(StemFunction(F.domain(), [F, n](Complex z) { return sigma_n(F.evaluate(z), n); }));
}

namespace {

LiftPoint conj_lift(const LiftPoint& p) { return {std::conj(p.u0), std::conj(p.u1), bar(p.s)}; }

CQuaternion generic_value(const StemFunction& F, Complex z) {
  const CQuaternion v = F.evaluate(z);
  if (classify(v) != Locus::Generic) {
    throw Error(ErrorCode::HitsVLocus, "f^s or f_v^s vanishes: stem value lies on V_-1 or V_inf");
  }
  return v;
}

// Lift of F along the segment a -> b starting from `start` over F(a).
LiftPoint lift_segment(const StemFunction& F, const LiftPoint& start, Complex a, Complex b) {
  LiftTracker tracker(start);
  auto curve = [&F, a, b](double t, const LiftPoint& near) {
    const auto fibers = rho_fibers(generic_value(F, a + t * (b - a)));
    return distance(fibers[0], near) <= distance(fibers[1], near) ? fibers[0] : fibers[1];
  };
  tracker.advance(curve, 0.0, 1.0);
  return tracker.lifted();
}

// Lifts of F on a grid over the upper component; the lower component follows
// by reflection.
class LogCache {
 public:
  LogCache(StemFunction F, Complex seed_point, const LiftPoint& seed) : F_(std::move(F)) {
    const Domain& d = F_.domain();
    const double r = d.radius();
    const Complex c = d.center();
    x0_ = c.real() - r;
    dx_ = 2.0 * r / (kLogGridResolution - 1);
    if (d.real_intersecting()) {
      y0_ = 0.0;
      dy_ = r / (kLogGridResolution - 1);
    } else {
      y0_ = c.imag() - r;
      dy_ = 2.0 * r / (kLogGridResolution - 1);
    }
    nodes_.resize(kLogGridResolution * kLogGridResolution);
    build(seed_point, seed);
  }

  CQuaternion operator()(Complex z) const {
    const bool low = z.imag() < 0.0;
    const Complex up = low ? std::conj(z) : z;
    const std::size_t k = nearest(up);
    const LiftPoint lift = lift_segment(F_, *nodes_[k], node(k), up);
    const CQuaternion g = rho(lift);
    return low ? bar(g) : g;
  }

 private:
  Complex node(std::size_t k) const {
    const auto ix = static_cast<double>(k % kLogGridResolution);
    const auto iy = static_cast<double>(k / kLogGridResolution);
    return {x0_ + ix * dx_, y0_ + iy * dy_};
  }

  bool inside(std::size_t k) const { return F_.domain().boundary_distance(node(k)) > 1e-12; }

  std::size_t nearest(Complex z) const {
    std::size_t best = nodes_.size();
    double best_d = std::numeric_limits<double>::infinity();
    const long cx = std::lround((z.real() - x0_) / dx_);
    const long cy = std::lround((z.imag() - y0_) / dy_);
    for (int ring = 1; ring <= kLogGridResolution && best == nodes_.size(); ring *= 2) {
      for (long iy = cy - ring; iy <= cy + ring; ++iy) {
        for (long ix = cx - ring; ix <= cx + ring; ++ix) {
          if (ix < 0 || iy < 0 || ix >= kLogGridResolution || iy >= kLogGridResolution) continue;
          const auto k = static_cast<std::size_t>(iy * kLogGridResolution + ix);
          if (!nodes_[k]) continue;
          const double dist = std::abs(node(k) - z);
          if (dist < best_d) {
            best_d = dist;
            best = k;
          }
        }
      }
    }
    if (best == nodes_.size()) throw Error(ErrorCode::PathTooWild, "no lifted grid node near query");
    return best;
  }

  void build(Complex seed_point, const LiftPoint& seed) {
    std::size_t first = nodes_.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!inside(k)) continue;
      const double dist = std::abs(node(k) - seed_point);
      if (dist < best) {
        best = dist;
        first = k;
      }
    }
    if (first == nodes_.size()) throw Error(ErrorCode::InvalidArgument, "domain too small for the lift grid");
    nodes_[first] = lift_segment(F_, seed, seed_point, node(first));

    std::deque<std::size_t> queue{first};
    while (!queue.empty()) {
      const std::size_t k = queue.front();
      queue.pop_front();
      for (std::size_t n : neighbours(k)) {
        if (nodes_[n] || !inside(n)) continue;
        nodes_[n] = lift_segment(F_, *nodes_[k], node(k), node(n));
        queue.push_back(n);
      }
    }
    // Every grid edge must agree with the stored lifts; a disagreement means
    // the domain encloses a point where the logarithm branches.
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!nodes_[k]) continue;
      for (std::size_t n : neighbours(k)) {
        if (n < k || !nodes_[n]) continue;
        const LiftPoint other = lift_segment(F_, *nodes_[k], node(k), node(n));
        if (distance(other, *nodes_[n]) > 1e-6 * (1.0 + std::abs(other.u0) + std::abs(other.u1))) {
          throw Error(ErrorCode::HitsVLocus, "domain encloses a branch point of the logarithm");
        }
      }
    }
  }

  std::vector<std::size_t> neighbours(std::size_t k) const {
    std::vector<std::size_t> out;
    const std::size_t n = kLogGridResolution;
    const std::size_t ix = k % n, iy = k / n;
    if (ix > 0) out.push_back(k - 1);
    if (ix + 1 < n) out.push_back(k + 1);
    if (iy > 0) out.push_back(k - n);
    if (iy + 1 < n) out.push_back(k + n);
    return out;
  }

  StemFunction F_;
  double x0_ = 0, dx_ = 0, y0_ = 0, dy_ = 0;
  std::vector<std::optional<LiftPoint>> nodes_;
};

}  // namespace

SliceFunction star_log(const SliceFunction& f, const LogBranchSpec& spec) {
  const StemFunction F = f.stem();
  const Domain& d = F.domain();
  if (spec.real_constraint != d.real_intersecting()) {
    throw Error(ErrorCode::BadBranchSpec, "realConstraint must match whether the domain meets the real axis");
  }
  if (d.real_intersecting() && spec.h.a() != 0) {
    throw Error(ErrorCode::JNotDefined, "on a domain meeting the real axis only h1 + h2 = 0 is admissible");
  }
  if (!d.contains(spec.basepoint)) throw Error(ErrorCode::OutOfDomain, "basepoint lies outside the domain");
  for (Complex z : domain_samples(d, 64)) generic_value(F, z);

  Complex seed_point = spec.basepoint;
  if (d.real_intersecting()) seed_point = spec.basepoint.real();
  const CQuaternion value = generic_value(F, seed_point);
  const LiftPoint fiber = rho_fibers(value)[0];
  LiftPoint seed = frak_e_preimage(fiber.u0, fiber.u1, fiber.s, spec.h);
  if (seed_point.imag() < 0.0) {
    seed_point = std::conj(seed_point);
    seed = conj_lift(seed);
  }
  auto cache = std::make_shared<const LogCache>(F, seed_point, seed);
  return SliceFunction(StemFunction(d, [cache](Complex z) { return (*cache)(z); }));
}

SliceFunction sqrt_fvs(const SliceFunction& f, Complex basepoint, int sign) {
  const StemFunction F = f.stem();
  const Domain d = F.domain();
  const Complex w0 = vec_sq(F(basepoint));
  if (std::abs(w0) <= kClassifyTolerance) throw Error(ErrorCode::BranchObstruction, "f_v^s vanishes at the basepoint");
  const Complex base = (sign < 0 ? -1.0 : 1.0) * std::sqrt(w0);
  auto step = [F](Complex z, Complex previous) -> std::optional<Complex> {
    const Complex w = vec_sq(F.evaluate(z));
    if (std::abs(w) <= kClassifyTolerance) throw Error(ErrorCode::BranchObstruction, "f_v^s vanishes on the path");
    Complex r = std::sqrt(w);
    if (std::abs(r + previous) < std::abs(r - previous)) r = -r;
    if (std::abs(r - previous) < 0.5 * std::abs(previous)) return r;
    return std::nullopt;
  };
  return SliceFunction(scalar_stem(d, [d, basepoint, base, step](Complex z) {
    return detail::continue_in_domain(d, basepoint, base, z, step, ErrorCode::BranchObstruction);
  }));
}

SliceFunction log_translate(const SliceFunction& g, BranchIndex h, Complex basepoint) {
  const StemFunction G = g.stem();
  const Domain& d = G.domain();
  if (d.real_intersecting() && h.a() != 0) {
    throw Error(ErrorCode::JNotDefined, "J is undefined on a domain meeting the real axis (needs h1 + h2 = 0)");
  }
  if (h == BranchIndex{}) return g;

  const CQuaternion g_star = G(basepoint);
  int sign = 1;
  const CQuaternion e = epsilon(g_star);
  if (std::abs(vec_sq(e)) > kClassifyTolerance) {
    const Complex along = vec_dot(g_star.vec(), rho_fibers(e)[0].s);
    const Complex principal = std::sqrt(vec_sq(g_star));
    if (std::abs(along + principal) < std::abs(along - principal)) sign = -1;
  }
  const StemFunction root = sqrt_fvs(g, basepoint, sign).stem();
  const double a = std::numbers::pi * static_cast<double>(h.a());
  const double b = std::numbers::pi * static_cast<double>(h.b());
  return SliceFunction(StemFunction(d, [G, root, a, b](Complex z) {
    const CQuaternion v = G.evaluate(z);
    CQuaternion out = v + (b / root.evaluate(z).z0) * v.vec();
    if (a != 0.0) out.z0 += Complex(0.0, z.imag() > 0.0 ? a : -a);
    return out;
  }));
}

SliceFunction star_root(const SliceFunction& f, int n, const LogBranchSpec& spec) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "root order must be at least 1");
  return star_exp((1.0 / n) * star_log(f, spec));
}

}  // namespace qslice
