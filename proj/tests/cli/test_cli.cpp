#include <gtest/gtest.h>

#include <numbers>

#include "commands.hpp"
#include "suites.hpp"

namespace {

using namespace qslice;
using namespace qslice::cli;

json parse(const char* text) { return json::parse(text); }

Quaternion value_of(const Output& out) { return quaternion_from_json(out.data.at("value")); }

TEST(Descriptor, NodesAndDomain) {
  const SliceFunction f = function_from_json(parse(R"({"kind":"add","args":[
      {"kind":"poly","coeffs":[[1,0,0,0],[0,1,0,0]]},
      {"kind":"mul","args":[{"kind":"identity"},{"kind":"const","value":[0,0,1,0]}]}],
      "domain":{"center":[0,3],"radius":1,"realIntersecting":false}})"));
  EXPECT_FALSE(f.domain().real_intersecting());
  EXPECT_DOUBLE_EQ(f.domain().radius(), 1.0);
  // 1 + q i + q j at q = 3k
  const Quaternion q(0.0, 0.0, 0.0, 3.0);
  const Quaternion expected = Quaternion(1.0) + q * Quaternion::i() + q * Quaternion::j();
  EXPECT_LT(norm(f(q) - expected), 1e-12);
}

TEST(Descriptor, Rejects) {
  EXPECT_THROW(function_from_json(parse(R"({"kind":"poly","coeffs":[]})")), InputError);
  EXPECT_THROW(function_from_json(parse(R"({"kind":"const","value":[1,2]})")), InputError);
  EXPECT_THROW(function_from_json(parse(R"({"kind":"sin"})")), InputError);
  EXPECT_THROW(function_from_json(parse(R"({"kind":"identity","domain":{"center":0,"radius":1,"realIntersecting":false}})")),
               InputError);
  EXPECT_THROW(parse_quaternion("1,2,3"), InputError);
  EXPECT_THROW(parse_quaternion("[1,2,x,4]"), InputError);
}

TEST(Parse, QuaternionAndComplexForms) {
  EXPECT_EQ(parse_quaternion("1,2,3,4"), Quaternion(1, 2, 3, 4));
  EXPECT_EQ(parse_quaternion("[1, 2, 3, 4]"), Quaternion(1, 2, 3, 4));
  EXPECT_EQ(parse_complex("0.5,0.2"), Complex(0.5, 0.2));
  EXPECT_EQ(parse_complex("-2"), Complex(-2.0, 0.0));
}

TEST(Eval, IdentityEchoesInput) {
  const Output out = eval_cmd(parse(R"({"kind":"identity"})"), {1, 2, 0, 0}, {});
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.data.at("value"), parse("[1.0, 2.0, 0.0, 0.0]"));
  EXPECT_EQ(out.data.at("q"), parse("[1.0, 2.0, 0.0, 0.0]"));
}

TEST(Eval, ExpAtHalfTurn) {
  const Output out = eval_cmd(parse(R"({"kind":"exp","arg":{"kind":"identity"}})"),
                              {0, std::numbers::pi / 2, 0, 0}, {});
  EXPECT_LT(norm(value_of(out) - Quaternion(0, 1, 0, 0)), 1e-15);
}

TEST(Eval, PolynomialMatchesLibraryBytes) {
  const json fn = parse(R"({"kind":"poly","coeffs":[[0.3,-1,2,0.5],[1,0.25,0,-0.75],[0,0,0.5,1]]})");
  const Quaternion q(0.4, -0.3, 1.1, 0.7);
  const Quaternion direct = slice_eval(SliceFunction(polynomial_stem(
                                           default_domain(), {{0.3, -1, 2, 0.5}, {1, 0.25, 0, -0.75}, {0, 0, 0.5, 1}})),
                                       q);
  EXPECT_EQ(eval_cmd(fn, q, {}).data.at("value").dump(), to_json(direct).dump());
}

TEST(Eval, OutOfDomainIsALibraryError) {
  try {
    eval_cmd(parse(R"({"kind":"identity","domain":{"center":0,"radius":1}})"), {3, 0, 0, 0}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfDomain);
  }
}

TEST(Options, Validation) {
  Options opt;
  opt.samples = 0;
  EXPECT_THROW(opt.validate(), InputError);
  opt.samples = 4;
  opt.tolerances["log"] = -1.0;
  EXPECT_THROW(opt.validate(), InputError);
  opt.tolerances = {{"unheard_of", 1.0}};
  EXPECT_THROW(opt.validate(), InputError);
  opt.tolerances = {{"bch", 1e-6}};
  EXPECT_NO_THROW(opt.validate());
  EXPECT_EQ(opt.tol("bch"), 1e-6);
  EXPECT_EQ(opt.tol("log"), default_tolerances().at("log"));
}

TEST(Csv, OnlyForSampleGrids) {
  Options opt;
  opt.csv = true;
  opt.samples = 4;
  EXPECT_THROW(eval_cmd(parse(R"({"kind":"identity"})"), {1, 0, 0, 0}, opt), InputError);
  EXPECT_THROW(verify_cmd("algebra", opt), InputError);
  const Output out =
      log_cmd(parse(R"({"kind":"poly","coeffs":[[1.5,0.8,0,0],[0,0,0.1,0]],"domain":{"center":[0,2.5],"radius":1}})"),
              {1, 0}, std::nullopt, opt);
  ASSERT_TRUE(out.csv.has_value());
  EXPECT_EQ(out.csv->rfind("re,im,", 0), 0u);
  EXPECT_EQ(std::count(out.csv->begin(), out.csv->end(), '\n'), 1 + out.data.at("samples").size());
}

TEST(Log, RoundTripStatistics) {
  Options opt;
  opt.samples = 16;
  const Output out =
      log_cmd(parse(R"({"kind":"poly","coeffs":[[1.5,0.8,0,0],[0,0,0.1,0]],"domain":{"center":[0,2.5],"radius":1}})"),
              {1, -1}, Complex(0.2, 2.6), opt);
  EXPECT_LT(out.data.at("roundTrip").at("max").get<double>(), 1e-10);
  EXPECT_EQ(out.data.at("roundTrip").at("count").get<int>(), 32);
}

TEST(Verify, DeterministicAndPassing) {
  Options opt;
  opt.seed = 7;
  opt.samples = 16;
  const Output a = verify_cmd("all", opt);
  const Output b = verify_cmd("all", opt);
  EXPECT_EQ(a.data.dump(), b.data.dump());
  EXPECT_EQ(a.exit_code, kExitOk);
  std::vector<std::string> order;
  for (const json& s : a.data.at("suites")) order.push_back(s.at("suite"));
  EXPECT_EQ(order, (std::vector<std::string>{"algebra", "bch", "covering", "derivative", "log"}));
  opt.seed = 8;
  EXPECT_NE(verify_cmd("all", opt).data.dump(), a.data.dump());
}

TEST(Verify, BchSuiteCarriesCounterexample) {
  const json report = verify_cmd("bch", {}).data;
  bool found = false;
  for (const json& p : report.at("suites")[0].at("properties")) {
    found = found || p.at("name").get<std::string>().rfind("counterexample", 0) == 0;
  }
  EXPECT_TRUE(found);
}

TEST(Verify, FailingToleranceGivesExitOne) {
  Options opt;
  opt.samples = 8;
  opt.tolerances = {{"algebra", 1e-30}};
  const Output out = verify_cmd("algebra", opt);
  EXPECT_EQ(out.exit_code, kExitPropertyFailed);
  EXPECT_FALSE(out.data.at("pass").get<bool>());
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(verify_cmd("nope", {}), InputError); }

}  // namespace
