#include "qslice/lift_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qslice/error.hpp"

namespace qslice {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// A target is on W when w0 + i w1 or w0 - i w1 vanishes.
void require_off_w(Complex alpha, Complex beta) {
  const double scale = std::max(1.0, std::max(std::abs(alpha), std::abs(beta)));
  if (std::min(std::abs(alpha), std::abs(beta)) <= 1e-12 * scale) {
    throw Error(ErrorCode::OnW, "target point lies on w0^2 + w1^2 = 0");
  }
}

// Log(w) shifted by 2 pi i k to the value nearest `reference`.
Complex nearest_log(Complex w, Complex reference) {
  Complex value = std::log(w);
  const double k = std::round((reference.imag() - value.imag()) / (2.0 * kPi));
  return value + Complex(0.0, 2.0 * kPi * k);
}

bool near_integer(Complex x, double& rounded) {
  rounded = std::round(x.real());
  return std::abs(x - Complex(rounded)) <= kMonodromyTolerance;
}

}  // namespace

double distance(const LiftPoint& a, const LiftPoint& b) {
  return std::abs(a.u0 - b.u0) + std::abs(a.u1 - b.u1) + abs(a.s - b.s);
}

bool is_imaginary_unit(const CQuaternion& s, double tolerance) {
  return std::abs(s.z0) <= tolerance && std::abs(vec_sq(s) - 1.0) <= tolerance;
}

CQuaternion rho(const LiftPoint& p) { return CQuaternion(p.u0) + p.u1 * p.s; }

std::array<LiftPoint, 2> rho_fibers(const CQuaternion& z) {
  const Complex n = vec_sq(z);
  if (std::abs(n) <= kClassifyTolerance) throw Error(ErrorCode::OnVinf, "n(z) = 0 has no rho-fiber");
  const Complex r = std::sqrt(n);
  const CQuaternion s = z.vec() / r;
  return {LiftPoint{z.z0, r, s}, LiftPoint{z.z0, -r, -s}};
}

LiftPoint frak_e(const LiftPoint& p) {
  const Complex scale = std::exp(p.u0);
  return {scale * std::cos(p.u1), scale * std::sin(p.u1), p.s};
}

LiftPoint frak_e_preimage(Complex w0, Complex w1, const CQuaternion& s, BranchIndex h) {
  const Complex alpha = w0 + kI * w1;
  const Complex beta = w0 - kI * w1;
  require_off_w(alpha, beta);
  const Complex la = std::log(alpha);
  const Complex lb = std::log(beta);
  return {0.5 * (la + lb) + Complex(0.0, static_cast<double>(h.a()) * kPi),
          (la - lb) / (2.0 * kI) + static_cast<double>(h.b()) * kPi, s};
}

bool DeckMap::is_deck_of_e() const {
  if (flip_) return false;
  return ((m0_ - m1_) % 2) == 0;
}

DeckMap DeckMap::after(const DeckMap& inner) const {
  // Gamma o Tr(m0, m1) = Tr(m0, -m1) o Gamma.
  const long m1 = flip_ ? -inner.m1_ : inner.m1_;
  return DeckMap(m0_ + inner.m0_, m1_ + m1, flip_ != inner.flip_);
}

LiftPoint DeckMap::operator()(const LiftPoint& p) const {
  LiftPoint q = p;
  if (flip_) {
    q.u1 = -q.u1;
    q.s = -q.s;
  }
  q.u0 += Complex(0.0, static_cast<double>(m0_) * kPi);
  q.u1 += static_cast<double>(m1_) * kPi;
  return q;
}

LiftPoint apply_deck(const LiftPoint& p, const DeckMap& d, bool require_deck) {
  if (require_deck && !d.is_deck_of_e()) {
    throw Error(ErrorCode::NotDeck, "map does not commute with e (shift parities differ or Gamma present)");
  }
  return d(p);
}

LiftTracker::LiftTracker(const LiftPoint& start)
    : lifted_(start),
      target_(frak_e(start)),
      log_alpha_(start.u0 + kI * start.u1),
      log_beta_(start.u0 - kI * start.u1) {}

bool LiftTracker::try_step(const LiftPoint& candidate) {
  const Complex alpha = candidate.u0 + kI * candidate.u1;
  const Complex beta = candidate.u0 - kI * candidate.u1;
  require_off_w(alpha, beta);
  const Complex la = nearest_log(alpha, log_alpha_);
  const Complex lb = nearest_log(beta, log_beta_);
  constexpr double kStep = kPi / 2.0;
  if (std::abs(la - log_alpha_) >= kStep || std::abs(lb - log_beta_) >= kStep) return false;
  if (abs(candidate.s - target_.s) >= 0.5) return false;
  log_alpha_ = la;
  log_beta_ = lb;
  target_ = candidate;
  lifted_ = {0.5 * (la + lb), (la - lb) / (2.0 * kI), candidate.s};
  return true;
}

void LiftTracker::advance(const TargetCurve& curve, double t0, double t1) {
  const double span = t1 - t0;
  if (span <= 0.0) return;
  const double min_step = std::ldexp(span, -kLiftMaxDepth);
  double t = t0;
  double step = span;
  while (t < t1) {
    const double next = (t1 - t <= step) ? t1 : t + step;
    if (try_step(curve(next, target_))) {
      t = next;
      step = std::min(span, 2.0 * step);
    } else {
      step *= 0.5;
      if (step < min_step) throw Error(ErrorCode::PathTooWild, "lift refinement limit exceeded");
    }
  }
}

LiftPoint interpolate(const SampledPath& path, std::size_t segment, double lambda) {
  const LiftPoint& p = path.points.at(segment);
  const LiftPoint& q = path.points.at(segment + 1);
  const double mu = 1.0 - lambda;
  CQuaternion s = mu * p.s + lambda * q.s;
  s.z0 = 0.0;
  const Complex n = vec_sq(s);
  if (std::abs(n) < 1e-6) throw Error(ErrorCode::PathTooWild, "path segment crosses n(s) = 0");
  return {mu * p.u0 + lambda * q.u0, mu * p.u1 + lambda * q.u1, s / std::sqrt(n)};
}

std::vector<LiftPoint> lift_path(const SampledPath& path, const LiftPoint& start) {
  if (path.size() == 0 || path.t.size() != path.size()) {
    throw Error(ErrorCode::InvalidArgument, "path needs matching, non-empty time and point lists");
  }
  const LiftPoint image = frak_e(start);
  const double scale = 1.0 + std::abs(image.u0) + std::abs(image.u1);
  if (!is_imaginary_unit(start.s) || distance(image, path.points.front()) > 1e-9 * scale) {
    throw Error(ErrorCode::BadStart, "start point is not on the fiber over path(0)");
  }
  std::vector<LiftPoint> lifts;
  lifts.reserve(path.size());
  lifts.push_back(start);
  LiftTracker tracker(start);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto curve = [&path, i](double lambda, const LiftPoint&) { return interpolate(path, i, lambda); };
    tracker.advance(curve, 0.0, 1.0);
    lifts.push_back(tracker.lifted());
  }
  return lifts;
}

BranchIndex monodromy_between(const LiftPoint& from, const LiftPoint& to) {
  if (abs(to.s - from.s) > kMonodromyTolerance) {
    throw Error(ErrorCode::NotALoop, "lifts end on different units s");
  }
  double a = 0.0, b = 0.0;
  const bool ok_a = near_integer((to.u0 - from.u0) / (kI * kPi), a);
  const bool ok_b = near_integer((to.u1 - from.u1) / kPi, b);
  const long ia = std::lround(a);
  const long ib = std::lround(b);
  if (!ok_a || !ok_b || ((ia - ib) % 2) != 0) {
    throw Error(ErrorCode::NotALoop, "lift displacement is not an integral monodromy");
  }
  return {(ia + ib) / 2, (ia - ib) / 2};
}

BranchIndex loop_monodromy(const SampledPath& loop, const LiftPoint& start) {
  if (loop.size() < 2) throw Error(ErrorCode::NotALoop, "a loop needs at least two samples");
  const LiftPoint& first = loop.points.front();
  const double scale = 1.0 + std::abs(first.u0) + std::abs(first.u1);
  if (distance(first, loop.points.back()) > kMonodromyTolerance * scale) {
    throw Error(ErrorCode::NotALoop, "path is not closed");
  }
  const std::vector<LiftPoint> lifts = lift_path(loop, start);
  return monodromy_between(lifts.front(), lifts.back());
}

RootGenerator root_generator(long a, long b, int n) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "root order must be positive");
  const double nn = static_cast<double>(n);
  return {BranchIndex{a, b}, std::exp(kI * (kPi * static_cast<double>(a + b) / nn)),
          std::exp(kI * (kPi * static_cast<double>(a - b) / nn))};
}

std::vector<RootGenerator> root_monodromy_generators(int n) {
  if (n < 2) throw Error(ErrorCode::BadOrder, "root monodromy needs n >= 2");
  std::vector<RootGenerator> out{root_generator(1, 1, n), root_generator(1, -1, n)};
  if (n % 2 == 0) out.push_back(root_generator(1, 0, n));
  return out;
}

LiftPoint root_cover(const LiftPoint& p, int n) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "root order must be positive");
  const double nn = static_cast<double>(n);
  return frak_e({p.u0 / nn, p.u1 / nn, p.s});
}

LiftPoint apply_root_generator(const RootGenerator& g, const LiftPoint& w) {
  const double c = g.eta.real();
  const double s = g.eta.imag();
  return {g.xi * (c * w.u0 - s * w.u1), g.xi * (s * w.u0 + c * w.u1), w.s};
}

}  // namespace qslice
