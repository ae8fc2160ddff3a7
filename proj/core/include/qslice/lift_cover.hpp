#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qslice/cquaternion.hpp"

namespace qslice {

/// Point ((u0, u1), s) of C^2 x S, where S = {s = vec(s) : n(s) = 1} are the
/// imaginary units of C (x) H. The same type carries points of the target
/// space (C^2 \ W) x S, with (u0, u1) read as (w0, w1).
struct LiftPoint {
  Complex u0{};
  Complex u1{};
  CQuaternion s{};
};

/// |u0 - v0| + |u1 - v1| + |s - t| in the C^4 norm.
double distance(const LiftPoint& a, const LiftPoint& b);

/// True when s has zero scalar part and n(s) = 1 within `tolerance`.
bool is_imaginary_unit(const CQuaternion& s, double tolerance = 1e-9);

/// Monodromy class (h1, h2) of the exponential lift; acts by
/// (u0, u1) -> (u0 + (h1 + h2) i pi, u1 + (h1 - h2) pi).
struct BranchIndex {
  long h1 = 0;
  long h2 = 0;

  long a() const { return h1 + h2; }
  long b() const { return h1 - h2; }

  bool operator==(const BranchIndex&) const = default;
  BranchIndex operator+(const BranchIndex& o) const { return {h1 + o.h1, h2 + o.h2}; }
  BranchIndex operator-(const BranchIndex& o) const { return {h1 - o.h1, h2 - o.h2}; }
  BranchIndex operator-() const { return {-h1, -h2}; }
};

/// rho((u0, u1), s) = u0 + u1 s.
CQuaternion rho(const LiftPoint& p);

/// The two rho-preimages ((z0, +-sqrt n(z)), +-vec(z)/sqrt n(z)), principal root
/// first. Throws OnVinf when n(z) vanishes.
std::array<LiftPoint, 2> rho_fibers(const CQuaternion& z);

/// e((u0, u1), s) = ((e^{u0} cos u1, e^{u0} sin u1), s).
LiftPoint frak_e(const LiftPoint& p);

/// Solution of e(u, s) = ((w0, w1), s) on the sheet selected by h, using the
/// principal logarithm of w0 +- i w1. Throws OnW when w0^2 + w1^2 vanishes.
LiftPoint frak_e_preimage(Complex w0, Complex w1, const CQuaternion& s, BranchIndex h);

/// Composition of a translation (u0, u1) -> (u0 + m0 i pi, u1 + m1 pi) with an
/// optional Gamma((u0, u1), s) = ((u0, -u1), -s) applied first.
///
/// T(a, b) = a T_1 + b T_{-1} is the translation (a + b, a - b); it equals the
/// monodromy action of BranchIndex{a, b}. A bare translation (m0, m1) commutes
/// with e exactly when m0 and m1 have the same parity.
class DeckMap {
 public:
  static DeckMap identity() { return {}; }
  static DeckMap gamma() { return DeckMap(0, 0, true); }
  static DeckMap T(long a, long b) { return DeckMap(a + b, a - b, false); }
  static DeckMap translation(long m0, long m1) { return DeckMap(m0, m1, false); }
  static DeckMap monodromy(BranchIndex h) { return T(h.h1, h.h2); }

  long shift_u0() const { return m0_; }
  long shift_u1() const { return m1_; }
  bool flips() const { return flip_; }

  /// Whether e o d == e.
  bool is_deck_of_e() const;

  /// (*this) o inner.
  DeckMap after(const DeckMap& inner) const;

  LiftPoint operator()(const LiftPoint& p) const;

  bool operator==(const DeckMap&) const = default;

 private:
  DeckMap() = default;
  DeckMap(long m0, long m1, bool flip) : m0_(m0), m1_(m1), flip_(flip) {}
  long m0_ = 0;
  long m1_ = 0;
  bool flip_ = false;
};

/// Applies d; with `require_deck` throws NotDeck if d does not commute with e.
LiftPoint apply_deck(const LiftPoint& p, const DeckMap& d, bool require_deck = false);

/// Ordered samples of a path in C^2 x S with parameters in [0, 1].
struct SampledPath {
  std::vector<double> t;
  std::vector<LiftPoint> points;

  std::size_t size() const { return points.size(); }
  void push_back(double time, const LiftPoint& p) {
    t.push_back(time);
    points.push_back(p);
  }
};

/// Curve in (C^2 \ W) x S on [0, 1]. `near` is the last accepted point; curves
/// that choose among several representatives (e.g. a rho-fiber) return the one
/// closest to it.
using TargetCurve = std::function<LiftPoint(double t, const LiftPoint& near)>;

inline constexpr int kLiftMaxDepth = 20;

/// Continuation of a lift through e by argument tracking of
/// alpha = w0 + i w1 and beta = w0 - i w1.
class LiftTracker {
 public:
  /// Starts at the lifted point `start`; its target is e(start).
  explicit LiftTracker(const LiftPoint& start);

  const LiftPoint& lifted() const { return lifted_; }
  const LiftPoint& target() const { return target_; }

  /// Moves along curve(t) for t in [t0, t1]. Successive accepted samples keep
  /// both arguments within pi/2 and s within 0.5; segments are bisected at most
  /// kLiftMaxDepth times. Throws OnW or PathTooWild.
  void advance(const TargetCurve& curve, double t0, double t1);

 private:
  bool try_step(const LiftPoint& candidate);

  LiftPoint lifted_;
  LiftPoint target_;
  Complex log_alpha_;
  Complex log_beta_;
};

/// Polyline interpolation of a sampled target path: (w0, w1) linearly, s
/// linearly then renormalised to S with the principal root of n(s).
/// Throws PathTooWild when the interpolated s approaches n(s) = 0.
LiftPoint interpolate(const SampledPath& path, std::size_t segment, double lambda);

/// Lifts every sample of `path` starting from `start`, which must satisfy
/// e(start) = path(0) (else BadStart).
std::vector<LiftPoint> lift_path(const SampledPath& path, const LiftPoint& start);

inline constexpr double kMonodromyTolerance = 1e-6;

/// Lattice element relating two lifts of the same target point; throws
/// NotALoop if the difference is not an integral monodromy.
BranchIndex monodromy_between(const LiftPoint& from, const LiftPoint& to);

/// Monodromy (h1, h2) of a closed path; throws NotALoop on open paths.
BranchIndex loop_monodromy(const SampledPath& loop, const LiftPoint& start);

/// Generator of the deck group of the n-th root cover, for the class cls.
struct RootGenerator {
  BranchIndex cls;  // (a, b) class representative
  Complex xi;       // e^{(a+b) i pi / n}
  Complex eta;      // e^{(a-b) i pi / n}
};

/// Generators for Z_n x Z_n: classes (1,1), (1,-1), plus (1,0) when n is even.
/// Throws BadOrder for n < 2.
std::vector<RootGenerator> root_monodromy_generators(int n);

/// e((u0/n, u1/n), s).
LiftPoint root_cover(const LiftPoint& p, int n);

/// xi * A_eta (w0, w1), with A_eta the real 2x2 rotation matrix of eta.
LiftPoint apply_root_generator(const RootGenerator& g, const LiftPoint& w);

/// Generator values for an arbitrary class (a, b).
RootGenerator root_generator(long a, long b, int n);

}  // namespace qslice
