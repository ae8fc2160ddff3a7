#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <random>

#include "oracles.hpp"

namespace qslice::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint32_t suite) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite};
    engine_.seed(seq);
  }
  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Quaternion quaternion(double s = 1.0) { return {s * uniform(), s * uniform(), s * uniform(), s * uniform()}; }
  Complex complex(double s = 1.0) { return {s * uniform(), s * uniform()}; }
  CQuaternion cquaternion(double s = 1.0) { return {complex(s), complex(s), complex(s), complex(s)}; }
  CQuaternion complex_unit() {
    for (;;) {
      const CQuaternion v{0.0, complex(), complex(), complex()};
      if (std::abs(vec_sq(v)) > 0.2) return v / std::sqrt(vec_sq(v));
    }
  }
  LiftPoint lift_point() { return {complex(), complex(), complex_unit()}; }
  std::vector<Quaternion> coefficients(int degree, double s = 1.0) {
    std::vector<Quaternion> c;
    for (int k = 0; k <= degree; ++k) c.push_back(quaternion(s));
    return c;
  }

 private:
  std::mt19937_64 engine_;
};

// Running maximum and mean of a residual.
struct Stat {
  double max = 0.0, sum = 0.0;
  int count = 0;
  void add(double r) {
    max = std::max(max, r);
    sum += r;
    ++count;
  }
};

struct Suite {
  json properties = json::array();
  bool pass = true;

  void residual(const std::string& name, const Stat& s, double tolerance, bool with_mean = false) {
    const bool ok = s.max <= tolerance;
    json p{{"name", name}, {"residual", s.max}, {"tolerance", tolerance}, {"pass", ok}};
    if (with_mean) p["mean"] = s.count ? s.sum / s.count : 0.0;
    properties.push_back(std::move(p));
    pass = pass && ok;
  }
  void separation(const std::string& name, double value, double threshold) {
    const bool ok = value >= threshold;
    properties.push_back({{"name", name}, {"separation", value}, {"threshold", threshold}, {"pass", ok}});
    pass = pass && ok;
  }
  void flag(const std::string& name, bool ok) {
    properties.push_back({{"name", name}, {"pass", ok}});
    pass = pass && ok;
  }
};

double dist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }
double dist(const CQuaternion& a, const CQuaternion& b) { return abs(a - b); }

Suite algebra(Rng& rng, const Options& opt) {
  Suite out;
  Stat mul, norms, cmul, powers, exps;
  for (int n = 0; n < 16 * opt.samples; ++n) {
    const Quaternion p = rng.quaternion(2.0), q = rng.quaternion(2.0);
    const double scale = norm(p) * norm(q);
    mul.add(dist(p * q, oracle::matrix_product(p, q)) / scale);
    norms.add(std::abs(norm(p * q) - scale) / scale);
    const CQuaternion z = rng.cquaternion(), w = rng.cquaternion();
    cmul.add(dist(z * w, oracle::matrix_product(z, w)) / (abs(z) * abs(w)));
    if (n % 8 == 0) {
      const int m = 1 + n / 8 % 6;
      const CQuaternion rhs = oracle::matrix_power(z, m);
      powers.add(dist(sigma_n(z, m), rhs) / (1.0 + abs(rhs)));
      const CQuaternion e = oracle::series_exp(z);
      exps.add(dist(epsilon(z), e) / (1.0 + abs(e)));
    }
  }
  out.residual("quaternion product", mul, opt.tol("algebra"));
  out.residual("norm multiplicativity", norms, opt.tol("algebra"));
  out.residual("complexified product", cmul, opt.tol("algebra"));
  out.residual("sigma_n", powers, opt.tol("epsilon"));
  out.residual("epsilon", exps, opt.tol("epsilon"));
  return out;
}

Suite covering(Rng& rng, const Options& opt) {
  Suite out;
  Stat commute, deck, period;
  double non_deck = 1e300;
  for (int n = 0; n < 4 * opt.samples; ++n) {
    const LiftPoint p = rng.lift_point();
    const CQuaternion lhs = epsilon(rho(p));
    commute.add(dist(lhs, rho(frak_e(p))) / abs(lhs));
    const long m0 = rng.integer(-5, 5), m1 = rng.integer(-5, 5);
    const LiftPoint base = frak_e(p);
    const double moved = distance(frak_e(DeckMap::translation(m0, m1)(p)), base) /
                         (std::abs(base.u0) + std::abs(base.u1));
    if ((m0 - m1) % 2 == 0) {
      deck.add(moved);
    } else {
      non_deck = std::min(non_deck, moved);
    }
    CQuaternion z = rng.cquaternion();
    const CQuaternion e = epsilon(z);
    z.z0 += 2.0 * kPi * kI;
    period.add(dist(epsilon(z), e) / abs(e));
  }
  out.residual("epsilon o rho = rho o e", commute, opt.tol("covering"));
  out.residual("deck translations", deck, opt.tol("covering"));
  out.separation("non-deck translations", non_deck, opt.tol("separation"));
  out.residual("2 pi i periodicity", period, opt.tol("covering"));

  // Monodromy of the two generating loops and of a contractible loop.
  const CQuaternion s(Quaternion::i());
  auto loop = [](const std::function<LiftPoint(double)>& at, int count) {
    SampledPath path;
    for (int k = 0; k <= count; ++k) path.push_back(static_cast<double>(k) / count, at(static_cast<double>(k) / count));
    return path;
  };
  const SampledPath circle = loop([&](double t) { return LiftPoint{std::cos(2 * kPi * t), std::sin(2 * kPi * t), s}; },
                                  4 * opt.samples);
  const SampledPath scalar = loop([&](double t) { return LiftPoint{std::exp(2 * kPi * kI * t), 0.0, s}; },
                                  4 * opt.samples);
  const SampledPath small = loop(
      [&](double t) { return LiftPoint{1.0 + 0.3 * std::exp(2 * kPi * kI * t), 0.2 * std::sin(2 * kPi * t), s}; },
      2 * opt.samples);
  out.flag("monodromy (cos, sin) = (1,-1)", loop_monodromy(circle, {0.0, 0.0, s}) == BranchIndex{1, -1});
  out.flag("monodromy (e^{2 pi i t}, 0) = (1,1)", loop_monodromy(scalar, {0.0, 0.0, s}) == BranchIndex{1, 1});
  out.flag("contractible loop", loop_monodromy(small, frak_e_preimage(1.3, 0.0, s, {})) == BranchIndex{});
  return out;
}

// Quadratic with F away from V_-1 and V_inf on d.
SliceFunction loggable(Rng& rng, const Domain& d) {
  for (;;) {
    const std::vector<Quaternion> c{rng.quaternion(0.8) + Quaternion(1.5), rng.quaternion(0.25), rng.quaternion(0.05)};
    const StemFunction F = polynomial_stem(d, c);
    bool ok = true;
    for (int ix = -30; ix <= 30 && ok; ++ix) {
      for (int iy = -30; iy <= 30 && ok; ++iy) {
        const Complex z = d.center() + Complex(ix, iy) * (d.radius() / 30.0);
        if (!d.contains(z)) continue;
        const CQuaternion v = F.evaluate(z);
        ok = std::abs(sym(v)) > 0.1 && std::abs(vec_sq(v)) > 0.1;
      }
    }
    if (ok) return SliceFunction(F);
  }
}

std::vector<Complex> both_components(const Domain& d, int count) {
  std::vector<Complex> out;
  for (Complex z : domain_samples(d, count)) {
    out.push_back(z);
    if (z.imag() != 0.0) out.push_back(std::conj(z));
  }
  return out;
}

Suite logarithms(Rng& rng, const Options& opt) {
  Suite out;
  Stat round_trip, translation, roots, real_part;
  const Domain d = Domain::disk({0.0, 2.5}, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    const SliceFunction f = loggable(rng, d);
    const StemFunction F = f.stem();
    const std::vector<Complex> at = both_components(d, opt.samples);
    const SliceFunction principal = star_log(f, branch_at_center(d));
    for (BranchIndex h : {BranchIndex{0, 0}, BranchIndex{1, 0}, BranchIndex{-1, 2}}) {
      const StemFunction G = star_log(f, branch_at_center(d, h)).stem();
      const StemFunction shifted = log_translate(principal, h, d.center()).stem();
      for (Complex z : at) {
        round_trip.add(dist(oracle::series_exp(G(z)), F(z)) / (1.0 + abs(F(z))));
        translation.add(dist(G(z), shifted(z)) / (1.0 + abs(G(z))));
      }
    }
    const int n = 2 + trial;
    const StemFunction R = star_root(f, n, branch_at_center(d, {1, 0})).stem();
    for (Complex z : at) roots.add(dist(oracle::matrix_power(R(z), n), F(z)) / (1.0 + abs(F(z))));
  }
  const Domain real = Domain::disk(0.0, 1.0);
  const SliceFunction f = loggable(rng, real);
  const StemFunction G = star_log(f, branch_at_center(real, {1, -1})).stem();
  for (int k = 0; k <= opt.samples; ++k) {
    const double x = -0.95 + 1.9 * k / opt.samples;
    real_part.add(norm(G(x).imag()));
    round_trip.add(dist(oracle::series_exp(G(x)), f.stem()(x)) / (1.0 + abs(f.stem()(x))));
  }
  bool rejected = false;
  try {
    star_log(f, branch_at_center(real, {1, 0}));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::JNotDefined;
  }
  out.residual("exp(log f) = f", round_trip, opt.tol("log"), true);
  out.residual("branch translation", translation, opt.tol("log"));
  out.residual("root^n = f", roots, opt.tol("root"), true);
  out.residual("log real on the real axis", real_part, opt.tol("log"));
  out.flag("unbalanced branch rejected on a real domain", rejected);
  return out;
}

Suite bch(Rng& rng, const Options& opt) {
  Suite out;
  Stat identity, example, product;
  const Domain wide = default_domain();
  for (int n = 0; n < 4 * opt.samples; ++n) {
    const SliceFunction f(polynomial_stem(wide, rng.coefficients(2)));
    const SliceFunction g(polynomial_stem(wide, rng.coefficients(2)));
    const Quaternion q = rng.quaternion();
    const Complex z = slice_parameter(q);
    const CQuaternion F = f.stem()(z), G = g.stem()(z);
    if (std::abs(vec_sq(F)) < 1e-3) continue;
    const Complex expected = vec_sq(oracle::matrix_product(F, G));
    identity.add(std::abs(prodvec_sym(f, g, q) - expected) / ((1.0 + abs(F) * abs(F)) * (1.0 + abs(G) * abs(G))));
  }
  out.residual("prodvec identity", identity, opt.tol("prodvec"));

  const Domain off = Domain::disk({0.0, 2.0}, 1.5);
  const SliceFunction fi(polynomial_stem(off, {Quaternion(2.0, 0.5, 0.0, 0.0), Quaternion(0.0, 1.0, 0.0, 0.0)}));
  const SliceFunction gi = construct_vanishing_counterexample(fi);
  double size = 0.0;
  for (Complex z : both_components(off, opt.samples)) {
    const CQuaternion fg = oracle::matrix_product(fi.stem()(z), gi.stem()(z));
    example.add(std::abs(vec_sq(fg)));
    size = std::max(size, abs(CQuaternion(0.0, fg.z1, fg.z2, fg.z3)));
  }
  out.residual("counterexample: vanishing (fg)_v^s", example, opt.tol("prodvec"));
  out.separation("counterexample: (fg)_v nonzero", size, opt.tol("separation"));

  const Domain d = Domain::disk(0.0, 1.5);
  int admissible = 0, attempts = 0;
  while (admissible < 4 && attempts < 200) {
    ++attempts;
    const SliceFunction f(polynomial_stem(d, rng.coefficients(2, 0.4)));
    const SliceFunction g(polynomial_stem(d, rng.coefficients(2, 0.4)));
    const BCHReport report = bch_solve(f, g, opt.samples, opt.tol("bch"));
    if (!report.admissible) continue;
    ++admissible;
    const StemFunction F = f.stem(), G = g.stem(), H = report.h->stem();
    for (Complex z : both_components(d, opt.samples)) {
      const CQuaternion lhs = oracle::matrix_product(oracle::series_exp(F(z)), oracle::series_exp(G(z)));
      product.add(dist(oracle::series_exp(H(z)), lhs) / (1.0 + abs(lhs)));
    }
  }
  out.flag("admissible pairs found", admissible == 4);
  out.residual("exp(f) * exp(g) = exp(h)", product, opt.tol("combine"), true);
  return out;
}

Suite derivative(Rng& rng, const Options& opt) {
  Suite out;
  Stat closed, commuting;
  const Domain d = default_domain();
  for (int trial = 0; trial < 8; ++trial) {
    const SliceFunction f(polynomial_stem(d, rng.coefficients(2, 0.5)));
    const StemFunction F = f.stem(), dF = F.exact_derivative();
    for (int n = 0; n < std::max(1, opt.samples / 8); ++n) {
      const Quaternion q = rng.quaternion(1.2);
      const Complex z = slice_parameter(q);
      const Quaternion expected = induced_value(oracle::exp_derivative_series(F(z), dF(z)), q);
      closed.add(dist(exp_slice_derivative(f, q), expected) / (1.0 + norm(expected)));
    }
  }
  // f_v^s vanishes on the sphere of units: f = c + v + q w, v orthogonal to w, |v| = |w|.
  for (int trial = 0; trial < 8; ++trial) {
    const Quaternion v = 0.7 * Quaternion(0.0, 1.0, 0.0, 0.0);
    const Quaternion w = 0.7 * Quaternion(0.0, 0.0, 1.0, 0.0);
    const SliceFunction f(polynomial_stem(d, {Quaternion(rng.uniform()) + v, w}));
    const StemFunction F = f.stem(), dF = F.exact_derivative();
    const ImagUnit I = ImagUnit::from_vector(rng.uniform(), rng.uniform(), rng.uniform() + 2.0);
    for (double eps : {0.0, 1e-7, -1e-7}) {
      const Quaternion q = on_slice(0.0, I, 1.0 + eps);
      const Complex z = slice_parameter(q);
      const Quaternion expected = induced_value(oracle::exp_derivative_series(F(z), dF(z)), q);
      closed.add(dist(exp_slice_derivative(f, q), expected) / (1.0 + norm(expected)));
    }
  }
  for (int trial = 0; trial < 8; ++trial) {
    const Quaternion u = ImagUnit::from_vector(rng.uniform(), rng.uniform(), rng.uniform() + 2.0).as_quaternion();
    const SliceFunction f(polynomial_stem(
        d, {Quaternion(rng.uniform()) + rng.uniform() * u, rng.uniform() * u, Quaternion(rng.uniform()) + rng.uniform() * u}));
    const SliceFunction expected = star_exp(f) * SliceFunction(f.stem().exact_derivative());
    for (int n = 0; n < std::max(1, opt.samples / 8); ++n) {
      const Quaternion q = rng.quaternion(1.2);
      commuting.add(dist(exp_slice_derivative(f, q), expected(q)) / (1.0 + norm(expected(q))));
    }
  }
  out.residual("closed form vs commutator series", closed, opt.tol("derivative"), true);
  out.residual("commuting reduction", commuting, opt.tol("commuting"));
  return out;
}

using Runner = Suite (*)(Rng&, const Options&);

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"algebra", algebra}, {"bch", bch}, {"covering", covering}, {"derivative", derivative}, {"log", logarithms}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : runners()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

json run_suites(const std::string& suite, const Options& opt) {
  json results = json::array();
  bool pass = true;
  bool found = false;
  for (std::uint32_t id = 0; id < runners().size(); ++id) {
    const auto& [name, run] = runners()[id];
    if (suite != "all" && suite != name) continue;
    found = true;
    Rng rng(opt.seed, id);
    const Suite s = run(rng, opt);
    results.push_back({{"suite", name}, {"properties", s.properties}, {"pass", s.pass}});
    pass = pass && s.pass;
  }
  if (!found) throw InputError("unknown suite \"" + suite + "\"");
  return {{"seed", opt.seed}, {"samples", opt.samples}, {"suites", std::move(results)}, {"pass", pass}};
}

}  // namespace qslice::cli
