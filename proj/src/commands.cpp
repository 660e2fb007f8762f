#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "novel_alg.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "suites.hpp"
#include "sutherland_alg.hpp"

namespace cms {

std::optional<BigRational> parse_lambda(std::string_view text) {
  if (text == "sym" || text.empty()) return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("--lambda must be \"sym\", an integer, \"p/q\" or an exact decimal, got \"" +
                     std::string(text) + "\"");
  }
}

Weight parse_weight(std::string_view text) {
  Weight n;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view part = text.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int v = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size())
      throw UsageError("--n must be a comma-separated list of integers");
    n.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (n.empty()) throw UsageError("--n must not be empty");
  return n;
}

Command parse_command(std::string_view name) {
  if (name == "jack") return Command::Jack;
  if (name == "pn") return Command::Pn;
  if (name == "verify") return Command::Verify;
  if (name == "spectrum") return Command::Spectrum;
  throw UsageError("unknown command \"" + std::string(name) + "\"");
}

void parse_tolerance(std::string_view text, std::map<std::string, double>& into) {
  const auto eq = text.find('=');
  const std::string key = eq == std::string_view::npos ? "" : std::string(text.substr(0, eq));
  const std::string value(eq == std::string_view::npos ? text : text.substr(eq + 1));
  try {
    std::size_t used = 0;
    const double t = std::stod(value, &used);
    if (used != value.size() || !(t > 0)) throw std::invalid_argument("bad");
    into[key] = t;
  } catch (const std::exception&) {
    throw UsageError("--tolerance must be a positive number or name=number");
  }
}

namespace {

std::string lambda_label(const std::optional<BigRational>& l) { return l ? to_string(*l) : "sym"; }

Weight checked_weight(const RunConfig& c) {
  if (c.n.empty()) throw UsageError("--n is required");
  if (c.N != 0 && c.N != c.n.size())
    throw UsageError("--N " + std::to_string(c.N) + " does not match the length of --n");
  return c.n;
}

SymPoly present(const SymPoly& p, const RunConfig& c) {
  SymPoly q = c.lambda ? specialize(p, *c.lambda) : p;
  return c.basis_s ? convert_basis(q, Basis::S) : q;
}

RatFunc present(const RatFunc& f, const RunConfig& c) { return c.lambda ? RatFunc(f.eval(*c.lambda)) : f; }

struct Presented {
  EigenResult r;
  Json json;
  std::string table;
};

Presented present(EigenResult r, const RunConfig& c) {
  r.phi = present(r.phi, c);
  r.energy = present(r.energy, c);
  r.excitation_energy = present(r.excitation_energy, c);
  Json j = to_json(r);
  j["lambda"] = lambda_label(c.lambda);
  j["display"] = Json{{"phi", to_display(r.phi)},
                      {"energy", to_string(r.energy)},
                      {"excitation_energy", to_string(r.excitation_energy)}};
  std::string t = "algorithm = " + std::string(to_string(r.algorithm)) + "\n" + "phi = " + to_display(r.phi) +
                  "\n" + "E = " + to_string(r.energy) + "\n" + "E' = " + to_string(r.excitation_energy) + "\n";
  return {std::move(r), std::move(j), std::move(t)};
}

CommandResult cmd_jack(const RunConfig& c) {
  const Weight n = checked_weight(c);
  if (!is_sorted_partition(n)) throw UsageError("--n must be weakly decreasing and non-negative");
  if (c.algo != "sutherland" && c.algo != "novel" && c.algo != "both")
    throw UsageError("--algo must be sutherland, novel or both");
  CommandResult out;
  const std::string header = "n = " + to_display(n) + "\nlambda = " + lambda_label(c.lambda) + "\n";
  if (c.algo != "both") {
    auto p = present(c.algo == "sutherland" ? jack_sutherland(n) : jack_novel(n), c);
    out.out = c.output == OutputFormat::Json ? p.json.dump() + "\n" : header + p.table;
    return out;
  }
  const EigenResult s = jack_sutherland(n), v = jack_novel(n);
  const bool equal = leading_monic_normalize(s.phi, n) == leading_monic_normalize(v.phi, n);
  auto ps = present(s, c), pv = present(v, c);
  if (c.output == OutputFormat::Json) {
    Json j{{"n", n},
           {"lambda", lambda_label(c.lambda)},
           {"results", Json::array({ps.json, pv.json})},
           {"equal_after_normalization", equal}};
    out.out = j.dump() + "\n";
  } else {
    out.out = header + ps.table + pv.table + "equal_after_normalization = " + (equal ? "true" : "false") + "\n";
  }
  if (!equal) {
    out.status = ExitCode::Internal;
    out.error = "the two algorithms disagree";
  }
  return out;
}

CommandResult cmd_pn(const RunConfig& c) {
  const Weight n = checked_weight(c);
  PFunction p = pfun(n);
  p.poly = present(p.poly, c);
  CommandResult out;
  Json j = to_json(p);
  j["lambda"] = lambda_label(c.lambda);
  j["display"] = to_display(p.poly);
  if (c.output == OutputFormat::Json) {
    out.out = j.dump() + "\n";
  } else {
    out.out = "P" + to_display(n) + " = " + to_display(p.poly) + "\n";
    if (j.contains("reason")) out.out += "reason = " + j["reason"].get<std::string>() + "\n";
  }
  return out;
}

CommandResult cmd_spectrum(const RunConfig& c) {
  if (!c.lambda) throw UsageError("spectrum needs a numeric --lambda");
  if (!(*c.lambda > 0)) throw UsageError("spectrum requires lambda > 0");
  if (c.N == 0) throw UsageError("--N is required");
  if (c.degree < 0) throw UsageError("--degree must be non-negative");
  const auto table = oracle::hprime_spectrum(c.degree, c.N, *c.lambda);
  CommandResult out;
  if (c.output == OutputFormat::Json) {
    out.out = to_json(table).dump() + "\n";
  } else {
    for (const auto& r : table.rows) out.out += to_display(r.key) + " -> " + to_string(r.value) + "\n";
  }
  return out;
}

double tolerance_for(const RunConfig& c, const std::string& key, double fallback) {
  if (auto it = c.tolerance.find(key); it != c.tolerance.end()) return it->second;
  if (auto it = c.tolerance.find(""); it != c.tolerance.end()) return it->second;
  return fallback;
}

std::vector<VerificationReport> exact_suite(const RunConfig& c) {
  const std::size_t N = c.n_max;
  const int d = c.deg_max;
  const std::size_t small = std::min<std::size_t>(N, 3);
  std::vector<VerificationReport> r;
  r.push_back(suites::equivalence(N, d));
  r.push_back(suites::eigenrelation(N, d));
  r.push_back(suites::worked_cases());
  r.push_back(suites::schur_degeneration(N, d));
  r.push_back(suites::a_corrections_vanish(N, d));
  r.push_back(suites::ground_energy_forms(100));
  r.push_back(suites::energy_decomposition(N, d));
  r.push_back(suites::prop1_range(N, d));
  r.push_back(suites::support_vanishing(small, 3));
  r.push_back(suites::degree_conservation(small, 3));
  r.push_back(suites::enumeration_vs_box(small, 3));
  r.push_back(suites::gap_identities(1000, c.seed));
  std::vector<BigRational> lambdas{make_rational(1, 10), make_rational(1, 2), 1, make_rational(3, 2), 10};
  if (c.lambda) lambdas = {*c.lambda};
  r.push_back(suites::gap_positivity(lambdas));
  r.push_back(suites::spectrum_diagonal(N, d, c.lambda.value_or(1)));
  return r;
}

std::vector<VerificationReport> numeric_suite(const RunConfig& c) {
  std::vector<BigRational> lambdas{make_rational(1, 2), 1, make_rational(17, 10), 2};
  if (c.lambda) lambdas = {*c.lambda};
  std::vector<VerificationReport> r;
  for (const BigRational& l : lambdas) {
    const double ld = l.get_d();
    for (std::size_t N : {2u, 3u}) {
      FdOptions o;
      o.seed = c.seed;
      o.tolerance = tolerance_for(c, "ground_state", 1e-6);
      r.push_back(check_fact1(N, ld, o));
      o.tolerance = tolerance_for(c, "kernel", 1e-6);
      r.push_back(check_fact2(N, ld, o));
    }
  }
  r.push_back(check_cot_identity(1000, c.seed, tolerance_for(c, "cot", 1e-12)));
  r.push_back(check_log_derivative(1000, c.seed, tolerance_for(c, "log_derivative", 1e-12)));
  r.push_back(check_geom_expansion(0.5, 1.0, 60, tolerance_for(c, "geom", 1e-10)));
  r.push_back(check_geom_expansion(1.0, 0.0, 80, tolerance_for(c, "geom", 1e-10)));
  for (const BigRational& l : lambdas) {
    FdOptions o;
    o.seed = c.seed;
    o.samples = 20;
    o.tolerance = tolerance_for(c, "eigenfunction", 1e-5);
    r.push_back(suites::end_to_end(std::min<std::size_t>(c.n_max, 3), std::min(c.deg_max, 4), l, o));
  }
  for (int l : {1, 2}) r.push_back(suites::quadrature(l, 2, 3, 5, c.seed, tolerance_for(c, "quadrature", 1e-8)));
  return r;
}

std::string table_line(const VerificationReport& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "  samples=%ld residual=%.3g tol=%.3g", r.samples, r.max_rel_residual, r.tolerance);
  std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.identity + buf;
  if (!r.detail.empty()) s += "  (" + r.detail + ")";
  return s + "\n";
}

CommandResult cmd_verify(const RunConfig& c) {
  if (c.lambda && !(*c.lambda > 0)) throw UsageError("verify requires lambda > 0");
  if (c.suite != "exact" && c.suite != "numeric" && c.suite != "all")
    throw UsageError("--suite must be exact, numeric or all");
  if (c.n_max < 1) throw UsageError("--N-max must be at least 1");
  if (c.deg_max < 0) throw UsageError("--deg-max must be non-negative");
  std::vector<VerificationReport> reports;
  if (c.suite != "numeric") reports = exact_suite(c);
  if (c.suite != "exact")
    for (auto& r : numeric_suite(c)) reports.push_back(std::move(r));
  CommandResult out;
  for (const auto& r : reports) {
    out.out += c.output == OutputFormat::Json ? to_json(r).dump() + "\n" : table_line(r);
    if (!r.pass) out.status = ExitCode::VerifyFailed;
  }
  if (out.status != ExitCode::Ok) out.error = "verification failed";
  return out;
}

}  // namespace

CommandResult run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::Jack: return cmd_jack(config);
      case Command::Pn: return cmd_pn(config);
      case Command::Spectrum: return cmd_spectrum(config);
      case Command::Verify: return cmd_verify(config);
    }
    return {ExitCode::Usage, {}, "unknown command"};
  } catch (const PoleError& e) {
    return {ExitCode::Usage, {}, std::string("lambda hits a pole: ") + e.what()};
  } catch (const InternalError& e) {
    return {ExitCode::Internal, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    return {ExitCode::Usage, {}, e.what()};
  } catch (const std::exception& e) {
    return {ExitCode::Internal, {}, e.what()};
  }
}

}  // namespace cms
