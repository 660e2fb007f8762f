#include <doctest.h>

#include "commands.hpp"
#include "novel_alg.hpp"
#include "serialize.hpp"

using namespace cms;

namespace {

const RatFunc l = RatFunc::lambda();

CommandResult run_cmd(Command c, std::function<void(RunConfig&)> setup) {
  RunConfig cfg;
  cfg.command = c;
  setup(cfg);
  return run(cfg);
}

Json first_line(const std::string& out) { return Json::parse(out.substr(0, out.find('\n'))); }

}  // namespace

TEST_CASE("JSON schemas") {
  CHECK(to_json(l.scaled(2) / (l + 1)).dump() == R"({"num":["0","2"],"den":["1","1"]})");
  CHECK(to_json(make_rational(-3, 4)).dump() == R"("-3/4")");
  MuVector m(3);
  m.set(0, 2, 2);
  CHECK(to_json(m).dump() == R"({"1,2":0,"1,3":2,"2,3":0})");
  CHECK(mu_from_json(to_json(m), 3) == m);
  const SymPoly phi = jack_novel({2, 1, 0}).phi;
  const Json j = to_json(phi);
  CHECK(j["basis"] == "M");
  CHECK(j["terms"][0]["key"] == Json::array({2, 1, 0}));
  CHECK(sympoly_from_json(j) == phi);
  CHECK(ratfunc_from_json(to_json(1 / (l * l + 3))) == 1 / (l * l + 3));
  VerificationReport r = exact_report("x", 3, true);
  CHECK(to_json(r).dump() ==
        R"({"identity":"x","samples":3,"max_rel_residual":0.0,"tolerance":0.0,"pass":true,"seed":null})");
}

TEST_CASE("display strings") {
  SymPoly p(2, Basis::M);
  p.add_term({2, 0}, 1);
  p.add_term({1, 1}, l.scaled(2) / (l + 1));
  CHECK(to_display(p) == "m[2,0] + (2*l/(l + 1))*m[1,1]");
  SymPoly q(2, Basis::M);
  q.add_term({1, 0}, -l);
  CHECK(to_display(q) == "-l*m[1,0]");
  CHECK(to_display(SymPoly(2, Basis::M)) == "0");
}

TEST_CASE("argument parsing") {
  CHECK(parse_weight("2, 1,0") == Weight{2, 1, 0});
  CHECK(parse_weight("1,-1") == Weight{1, -1});
  CHECK_THROWS_AS(parse_weight("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_weight("x"), UsageError);
  CHECK_FALSE(parse_lambda("sym").has_value());
  CHECK(*parse_lambda("1.7") == make_rational(17, 10));
  CHECK(*parse_lambda("3/4") == make_rational(3, 4));
  CHECK_THROWS_AS(parse_lambda("fast"), UsageError);
  std::map<std::string, double> t;
  parse_tolerance("1e-7", t);
  parse_tolerance("quadrature=1e-9", t);
  CHECK(t.at("") == 1e-7);
  CHECK(t.at("quadrature") == 1e-9);
  CHECK_THROWS_AS(parse_tolerance("-1", t), UsageError);
}

TEST_CASE("jack command") {
  auto r = run_cmd(Command::Jack, [](RunConfig& c) {
    c.N = 2;
    c.n = {2, 0};
    c.algo = "both";
  });
  REQUIRE(r.status == ExitCode::Ok);
  Json j = first_line(r.out);
  CHECK(j["equal_after_normalization"] == true);
  CHECK(sympoly_from_json(j["results"][0]["phi"]) == jack_novel({2, 0}).phi);

  r = run_cmd(Command::Jack, [](RunConfig& c) {
    c.N = 2;
    c.n = {1, 0};
    c.lambda = BigRational(1);
  });
  j = first_line(r.out);
  CHECK(rational_from_json(j["energy"]["num"][0]) == make_rational(5, 2));
  CHECK(j["display"]["phi"] == "m[1,0]");

  r = run_cmd(Command::Jack, [](RunConfig& c) { c.n = {0, 2}; });
  CHECK(r.status == ExitCode::Usage);
  r = run_cmd(Command::Jack, [](RunConfig& c) {
    c.n = {2, 0};
    c.N = 3;
  });
  CHECK(r.status == ExitCode::Usage);
  r = run_cmd(Command::Jack, [](RunConfig& c) {
    c.n = {2, 0};
    c.algo = "fast";
  });
  CHECK(r.status == ExitCode::Usage);
  r = run_cmd(Command::Jack, [](RunConfig& c) {
    c.n = {2, 1, 0};
    c.basis_s = true;
    c.algo = "sutherland";
  });
  CHECK(first_line(r.out)["display"]["phi"] == "S[2,1,0] + (l/(2*l + 1))*S[1,1,1]");
}

TEST_CASE("pn command") {
  auto r = run_cmd(Command::Pn, [](RunConfig& c) {
    c.N = 2;
    c.n = {1, 0};
  });
  CHECK(first_line(r.out)["display"] == "l*m[1,0]");
  r = run_cmd(Command::Pn, [](RunConfig& c) { c.n = {1, -1}; });
  CHECK(r.status == ExitCode::Ok);
  CHECK(first_line(r.out)["display"] == "0");
  CHECK(first_line(r.out)["reason"] == "support condition violated");
  r = run_cmd(Command::Pn, [](RunConfig& c) { c.n = {0}; });
  CHECK(first_line(r.out)["display"] == "1");
}

TEST_CASE("spectrum command") {
  auto r = run_cmd(Command::Spectrum, [](RunConfig& c) {
    c.N = 2;
    c.degree = 2;
    c.lambda = BigRational(1);
    c.output = OutputFormat::Table;
  });
  CHECK(r.out == "[2,0] -> 6\n[1,1] -> 2\n");
  r = run_cmd(Command::Spectrum, [](RunConfig& c) {
    c.N = 3;
    c.degree = 0;
    c.lambda = BigRational(2);
  });
  CHECK(first_line(r.out)["rows"][0]["value"] == "0");
  r = run_cmd(Command::Spectrum, [](RunConfig& c) {
    c.N = 2;
    c.degree = 1;
  });
  CHECK(r.status == ExitCode::Usage);
}

TEST_CASE("verify command") {
  auto r = run_cmd(Command::Verify, [](RunConfig& c) {
    c.suite = "exact";
    c.n_max = 2;
    c.deg_max = 3;
  });
  CHECK_MESSAGE(r.status == ExitCode::Ok, r.out);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines >= 10);
  CHECK(first_line(r.out).contains("max_rel_residual"));

  r = run_cmd(Command::Verify, [](RunConfig& c) {
    c.suite = "numeric";
    c.lambda = make_rational(-1, 2);
  });
  CHECK(r.status == ExitCode::Usage);

  // An impossible tolerance must surface as a verification failure, not a crash.
  r = run_cmd(Command::Verify, [](RunConfig& c) {
    c.suite = "numeric";
    c.lambda = BigRational(1);
    c.n_max = 2;
    c.deg_max = 2;
    c.tolerance["ground_state"] = 1e-30;
  });
  CHECK(r.status == ExitCode::VerifyFailed);
}

TEST_CASE("output is byte-stable") {
  auto once = [] {
    return run_cmd(Command::Verify, [](RunConfig& c) {
             c.suite = "numeric";
             c.lambda = make_rational(17, 10);
             c.seed = 7;
             c.n_max = 2;
             c.deg_max = 2;
           })
        .out;
  };
  CHECK(once() == once());
}
