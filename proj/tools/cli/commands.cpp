#include "commands.hpp"

#include <cstdio>
#include <sstream>

#include "suites.hpp"

namespace qslice::cli {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table{
      {"algebra", 1e-11},   {"bch", kBchTolerance}, {"combine", 1e-8},  {"commuting", 1e-12},
      {"covering", 1e-12},  {"deg", kDegenerateTolerance}, {"derivative", 1e-8},
      {"epsilon", 1e-10},   {"log", 1e-8},          {"monodromy", 1e-6}, {"prodvec", 1e-10},
      {"root", 1e-8},       {"separation", 1e-2},   {"symmetry", 1e-10},
  };
  return table;
}

double Options::tol(const std::string& key) const {
  if (auto it = tolerances.find(key); it != tolerances.end()) return it->second;
  return default_tolerances().at(key);
}

void Options::validate() const {
  if (samples < 1) throw InputError("--samples must be at least 1");
  for (const auto& [key, value] : tolerances) {
    if (!default_tolerances().count(key)) throw InputError("unknown tolerance key \"" + key + "\"");
    if (!(value > 0.0)) throw InputError("tolerance \"" + key + "\" must be positive");
  }
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void csv_row(std::ostringstream& out, Complex z, const CQuaternion& v, double residual) {
  out << num(z.real()) << ',' << num(z.imag());
  for (Complex c : {v.z0, v.z1, v.z2, v.z3}) out << ',' << num(c.real()) << ',' << num(c.imag());
  out << ',' << num(residual) << '\n';
}

const char* kGridHeader = "re,im,z0_re,z0_im,z1_re,z1_im,z2_re,z2_im,z3_re,z3_im,residual\n";

std::vector<Complex> grid(const Domain& d, int count) {
  std::vector<Complex> out;
  for (Complex z : domain_samples(d, count)) {
    out.push_back(z);
    if (z.imag() != 0.0) out.push_back(std::conj(z));
  }
  return out;
}

// Sampled stem of `result` with a residual per point, as JSON and CSV.
Output sampled(json head, const StemFunction& result, const std::function<double(Complex, const CQuaternion&)>& residual,
               const char* stat_name, const Options& opt) {
  json rows = json::array();
  std::ostringstream csv;
  csv << kGridHeader;
  double worst = 0.0, total = 0.0;
  const std::vector<Complex> points = grid(result.domain(), opt.samples);
  for (Complex z : points) {
    const CQuaternion v = result(z);
    const double r = residual(z, v);
    worst = std::max(worst, r);
    total += r;
    rows.push_back({{"z", to_json(z)}, {"value", to_json(v)}, {"residual", r}});
    csv_row(csv, z, v, r);
  }
  head["samples"] = std::move(rows);
  head[stat_name] = {{"max", worst}, {"mean", total / static_cast<double>(points.size())}, {"count", points.size()}};
  Output out{std::move(head), std::nullopt, kExitOk};
  if (opt.csv) out.csv = csv.str();
  return out;
}

void no_csv(const Options& opt, const char* verb) {
  if (opt.csv) throw InputError(std::string("--csv is only available for sample grids (not for ") + verb + ")");
}

LogBranchSpec spec_for(const Domain& d, BranchIndex h, std::optional<Complex> basepoint) {
  return {h, basepoint.value_or(d.center()), d.real_intersecting()};
}

}  // namespace

Output eval_cmd(const json& fn, const Quaternion& q, const Options& opt) {
  no_csv(opt, "eval");
  const SliceFunction f = function_from_json(fn);
  return {{{"verb", "eval"}, {"function", fn}, {"q", to_json(q)}, {"value", to_json(slice_eval(f, q))}}, std::nullopt,
          kExitOk};
}

Output log_cmd(const json& fn, BranchIndex h, std::optional<Complex> basepoint, const Options& opt) {
  const SliceFunction f = function_from_json(fn);
  const LogBranchSpec spec = spec_for(f.domain(), h, basepoint);
  const SliceFunction g = star_log(f, spec);
  const StemFunction F = f.stem();
  json head{{"verb", "log"},
            {"function", fn},
            {"domain", to_json(f.domain())},
            {"branch", to_json(h)},
            {"basepoint", to_json(spec.basepoint)}};
  return sampled(std::move(head), g.stem(),
                 [F](Complex z, const CQuaternion& v) { return abs(epsilon(v) - F(z)) / (1.0 + abs(F(z))); },
                 "roundTrip", opt);
}

Output root_cmd(const json& fn, int n, BranchIndex h, std::optional<Complex> basepoint, const Options& opt) {
  const SliceFunction f = function_from_json(fn);
  const LogBranchSpec spec = spec_for(f.domain(), h, basepoint);
  const SliceFunction r = star_root(f, n, spec);
  const StemFunction F = f.stem();
  json head{{"verb", "root"},       {"function", fn},        {"order", n},
            {"domain", to_json(f.domain())}, {"branch", to_json(h)}, {"basepoint", to_json(spec.basepoint)}};
  return sampled(std::move(head), r.stem(),
                 [F, n](Complex z, const CQuaternion& v) { return abs(sigma_n(v, n) - F(z)) / (1.0 + abs(F(z))); },
                 "powerResidual", opt);
}

Output bch_cmd(const json& fj, const json& gj, const Options& opt) {
  const SliceFunction f = function_from_json(fj);
  const SliceFunction g = function_from_json(gj);
  const BCHReport report = bch_solve(f, g, opt.samples, opt.tol("bch"));
  json values = json::array();
  json points = json::array();
  for (std::size_t k = 0; k < report.samples.size(); ++k) {
    points.push_back(to_json(report.samples[k]));
    values.push_back(to_json(report.condition_values[k]));
  }
  json head{{"verb", "bch"},
            {"f", fj},
            {"g", gj},
            {"samples", std::move(points)},
            {"conditionValues", std::move(values)},
            {"minAbs", report.min_abs},
            {"tolerance", opt.tol("bch")},
            {"admissible", report.admissible},
            {"regime", report.regime == BchRegime::Commuting ? "commuting" : "generic"}};
  if (!report.h) {
    Output out{std::move(head), std::nullopt, kExitOk};
    if (opt.csv) out.csv = std::string("re,im,condition_re,condition_im\n");
    if (opt.csv) {
      for (std::size_t k = 0; k < report.samples.size(); ++k) {
        *out.csv += num(report.samples[k].real()) + ',' + num(report.samples[k].imag()) + ',' +
                    num(report.condition_values[k].real()) + ',' + num(report.condition_values[k].imag()) + '\n';
      }
    }
    return out;
  }
  const StemFunction F = f.stem(), G = g.stem();
  Output out = sampled(
      std::move(head), report.h->stem(),
      [F, G](Complex z, const CQuaternion& v) {
        const CQuaternion lhs = epsilon(F(z)) * epsilon(G(z));
        return abs(epsilon(v) - lhs) / (1.0 + abs(lhs));
      },
      "productResidual", opt);
  out.data["h"] = std::move(out.data["samples"]);
  out.data["samples"] = json::array();
  for (Complex z : report.samples) out.data["samples"].push_back(to_json(z));
  return out;
}

Output dexp_cmd(const json& fj, const Quaternion& q, const Options& opt) {
  no_csv(opt, "dexp");
  const SliceFunction f = function_from_json(fj);
  const Quaternion closed = exp_slice_derivative(f, q);
  const Quaternion oracle = slice_derivative(star_exp(f), q);
  const double residual = norm(closed - oracle) / (1.0 + norm(oracle));
  const bool degenerate = derivative_regime(f, q, opt.tol("deg")) == DerivativeRegime::Degenerate;
  return {{{"verb", "dexp"},
           {"function", fj},
           {"q", to_json(q)},
           {"value", to_json(closed)},
           {"oracle", to_json(oracle)},
           {"residual", residual},
           {"regime", degenerate ? "degenerate" : "closedForm"}},
          std::nullopt,
          kExitOk};
}

Output lift_cmd(const json& pj, BranchIndex h, const Options& opt) {
  no_csv(opt, "lift");
  const SampledPath path = path_from_json(pj);
  const LiftPoint& w = path.points.front();
  const LiftPoint start = frak_e_preimage(w.u0, w.u1, w.s, h);
  const std::vector<LiftPoint> lifts = lift_path(path, start);
  json rows = json::array();
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    json row = to_json(lifts[k]);
    row["t"] = path.t[k];
    rows.push_back(std::move(row));
  }
  return {{{"verb", "lift"}, {"branch", to_json(h)}, {"lifts", std::move(rows)}}, std::nullopt, kExitOk};
}

Output monodromy_cmd(const json& pj, const Options& opt) {
  no_csv(opt, "monodromy");
  const SampledPath path = path_from_json(pj);
  const LiftPoint& w = path.points.front();
  const LiftPoint start = frak_e_preimage(w.u0, w.u1, w.s, {});
  const BranchIndex h = loop_monodromy(path, start);
  return {{{"verb", "monodromy"}, {"h1", h.h1}, {"h2", h.h2}, {"samples", path.size()}}, std::nullopt, kExitOk};
}

Output verify_cmd(const std::string& suite, const Options& opt) {
  no_csv(opt, "verify");
  json report = run_suites(suite, opt);
  const bool pass = report.at("pass").get<bool>();
  return {std::move(report), std::nullopt, pass ? kExitOk : kExitPropertyFailed};
}

}  // namespace qslice::cli
