// Command-line front end; talks to the library only through its C API.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sutherland/sutherland.h>

namespace {

struct Options {
  std::map<std::string, std::string> values;

  void add(CLI::App& cmd, const std::string& name, const std::string& help) {
    cmd.add_option("--" + name, values[name], help);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials and exact eigenfunctions of the quantum Sutherland model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sl_version()));

  Options opt;
  auto* jack = app.add_subcommand("jack", "eigenfunction Phi_n with E_n and E'_n");
  auto* pn = app.add_subcommand("pn", "the building block P_n");
  auto* verify = app.add_subcommand("verify", "run identity checks, one JSON line per identity");
  auto* spectrum = app.add_subcommand("spectrum", "diagonal of H' on a degree-d space at numeric lambda");

  for (auto* cmd : {jack, pn, spectrum}) opt.add(*cmd, "N", "number of particles");
  for (auto* cmd : {jack, pn}) {
    opt.add(*cmd, "n", "weight as a comma list, e.g. 2,1,0");
    opt.add(*cmd, "basis", "M (default) or S");
  }
  for (auto* cmd : {jack, pn, verify, spectrum})
    opt.add(*cmd, "lambda", "\"sym\" (default), integer, p/q or exact decimal");
  for (auto* cmd : {jack, pn, verify, spectrum}) opt.add(*cmd, "output", "json (default) or table");
  opt.add(*jack, "algo", "sutherland, novel (default) or both");
  opt.add(*verify, "suite", "exact, numeric or all (default)");
  opt.add(*verify, "seed", "random seed for sampled checks");
  opt.add(*verify, "N-max", "largest N for range checks (default 3)");
  opt.add(*verify, "deg-max", "largest degree for range checks (default 4)");
  std::vector<std::string> tolerances;
  verify->add_option("--tolerance", tolerances, "value, or name=value for one identity family");
  opt.add(*spectrum, "degree", "total degree d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : SL_USAGE;
  }

  sl_config* config = sl_config_new();
  if (!config) return SL_INTERNAL;
  auto set = [&](const std::string& key, const std::string& value) {
    if (sl_config_set(config, key.c_str(), value.c_str()) == SL_OK) return true;
    std::fprintf(stderr, "error: %s\n", sl_config_error(config));
    return false;
  };
  bool ok = true;
  for (const auto& [key, value] : opt.values)
    if (!value.empty()) ok = ok && set(key, value);
  for (const auto& t : tolerances) ok = ok && set("tolerance", t);
  if (!ok) {
    sl_config_free(config);
    return SL_USAGE;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  sl_result* result = nullptr;
  const sl_status status = sl_run(command.c_str(), config, &result);
  std::fputs(sl_result_output(result), stdout);
  if (status != SL_OK) std::fprintf(stderr, "error: %s\n", sl_result_error(result));
  sl_result_free(result);
  sl_config_free(config);
  return status;
}
