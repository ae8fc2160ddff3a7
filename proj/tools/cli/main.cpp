#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "suites.hpp"

namespace {

using namespace qslice;
using namespace qslice::cli;

json function_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') return read_json_file(text.substr(1));
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return read_json_file(text);
  }
}

void emit(const Output& out, const std::string& path) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw InputError("cannot write " + path);
  }
  std::ostream& os = path.empty() ? std::cout : file;
  if (out.csv) {
    os << *out.csv;
  } else {
    os << out.data.dump(2) << '\n';
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfDomain:
      return kExitOutOfDomain;
    case ErrorCode::InvalidArgument:
    case ErrorCode::BadOrder:
    case ErrorCode::BadBranchSpec:
    case ErrorCode::BadExampleInput:
      return kExitBadInput;
    default:
      return kExitLibraryError;
  }
}

void report(const std::string& kind, const std::string& message) {
  std::cerr << "qslice: " << kind << ": " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice-regular functions over the quaternions: evaluation, *-logarithms, roots, BCH, lifts"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::vector<std::string> tol_args;
  std::string out_path;
  bool json_flag = false;
  app.add_option("--seed", opt.seed, "Random seed for verify")->capture_default_str();
  app.add_option("--samples", opt.samples, "Grid size per component / sample count")->capture_default_str();
  app.add_option("--tol", tol_args, "Tolerance override KEY=VAL (repeatable)");
  auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--csv", opt.csv, "CSV output for sample grids")->excludes(json_opt);
  app.add_option("--out", out_path, "Write output to a file");

  std::string fn_text, g_text, path_text, q_text, basepoint_text, suite = "all";
  long h1 = 0, h2 = 0;
  int order = 2;
  const char* fn_help = "Function descriptor: JSON text or a file name";

  auto* eval = app.add_subcommand("eval", "Evaluate a function at a quaternion");
  eval->add_option("--fn", fn_text, fn_help)->required();
  eval->add_option("--at,--q", q_text, "Quaternion a,b,c,d")->required();

  auto branch_flags = [&](CLI::App* cmd) {
    cmd->add_option("--h1", h1, "Branch index h1")->capture_default_str();
    cmd->add_option("--h2", h2, "Branch index h2")->capture_default_str();
  };

  auto* log = app.add_subcommand("log", "Sample a *-logarithm branch");
  log->add_option("--fn", fn_text, fn_help)->required();
  branch_flags(log);
  log->add_option("--basepoint", basepoint_text, "Complex basepoint re,im (default: domain center)");

  auto* root = app.add_subcommand("root", "Sample an n-th *-root branch");
  root->add_option("--fn", fn_text, fn_help)->required();
  root->add_option("-n,--order", order, "Root order")->required();
  branch_flags(root);
  root->add_option("--basepoint", basepoint_text, "Complex basepoint re,im (default: domain center)");

  auto* bch = app.add_subcommand("bch", "Admissibility and combination of exp(f) exp(g)");
  bch->add_option("--f", fn_text, fn_help)->required();
  bch->add_option("--g", g_text, fn_help)->required();

  auto* dexp = app.add_subcommand("dexp", "Slice derivative of exp(f) at a quaternion");
  dexp->add_option("--f,--fn", fn_text, fn_help)->required();
  dexp->add_option("--at", q_text, "Quaternion a,b,c,d")->required();

  auto* lift = app.add_subcommand("lift", "Lift a sampled path through the exponential cover");
  lift->add_option("--path", path_text, "Path JSON text or file")->required();
  branch_flags(lift);

  auto* mono = app.add_subcommand("monodromy", "Monodromy class of a sampled loop");
  mono->add_option("--path", path_text, "Path JSON text or file")->required();

  auto* verify = app.add_subcommand("verify", "Run a randomized self-check suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    for (const std::string& t : tol_args) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw InputError("--tol expects KEY=VAL, got \"" + t + "\"");
      try {
        opt.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw InputError("bad tolerance value in \"" + t + "\"");
      }
    }
    opt.validate();
    const std::optional<Complex> basepoint =
        basepoint_text.empty() ? std::nullopt : std::optional<Complex>(parse_complex(basepoint_text));

    Output out;
    if (*eval) {
      out = eval_cmd(function_arg(fn_text), parse_quaternion(q_text), opt);
    } else if (*log) {
      out = log_cmd(function_arg(fn_text), BranchIndex{h1, h2}, basepoint, opt);
    } else if (*root) {
      out = root_cmd(function_arg(fn_text), order, BranchIndex{h1, h2}, basepoint, opt);
    } else if (*bch) {
      out = bch_cmd(function_arg(fn_text), function_arg(g_text), opt);
    } else if (*dexp) {
      out = dexp_cmd(function_arg(fn_text), parse_quaternion(q_text), opt);
    } else if (*lift) {
      out = lift_cmd(function_arg(path_text), BranchIndex{h1, h2}, opt);
    } else if (*mono) {
      out = monodromy_cmd(function_arg(path_text), opt);
    } else {
      out = verify_cmd(suite, opt);
    }
    emit(out, out_path);
    return out.exit_code;
  } catch (const InputError& e) {
    report("input error", e.what());
    return kExitBadInput;
  } catch (const Error& e) {
    report("error", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report("error", e.what());
    return kExitLibraryError;
  }
}
