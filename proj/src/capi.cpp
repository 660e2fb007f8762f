#include <sutherland/sutherland.h>

#include <charconv>
#include <new>
#include <string>

#include "commands.hpp"

struct sl_config {
  cms::RunConfig config;
  std::string error;
};

struct sl_result {
  cms::CommandResult result;
};

namespace {

sl_status to_status(cms::ExitCode c) { return static_cast<sl_status>(static_cast<int>(c)); }

template <class T>
T parse_number(const std::string& text, const char* flag) {
  T v{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw cms::UsageError(std::string("--") + flag + " expects an integer, got \"" + text + "\"");
  return v;
}

void apply(cms::RunConfig& c, const std::string& key, const std::string& value) {
  using namespace cms;
  if (key == "N") {
    c.N = parse_number<std::size_t>(value, "N");
  } else if (key == "n") {
    c.n = parse_weight(value);
  } else if (key == "algo") {
    c.algo = value;
  } else if (key == "lambda") {
    c.lambda = parse_lambda(value);
  } else if (key == "basis") {
    if (value != "M" && value != "S") throw UsageError("--basis must be M or S");
    c.basis_s = value == "S";
  } else if (key == "suite") {
    c.suite = value;
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(value, "seed");
  } else if (key == "tolerance") {
    parse_tolerance(value, c.tolerance);
  } else if (key == "output") {
    if (value != "json" && value != "table") throw UsageError("--output must be json or table");
    c.output = value == "json" ? OutputFormat::Json : OutputFormat::Table;
  } else if (key == "degree") {
    c.degree = parse_number<int>(value, "degree");
  } else if (key == "N-max") {
    c.n_max = parse_number<std::size_t>(value, "N-max");
  } else if (key == "deg-max") {
    c.deg_max = parse_number<int>(value, "deg-max");
  } else {
    throw UsageError("unknown option \"" + key + "\"");
  }
}

sl_status finish(cms::CommandResult r, sl_result** out) {
  const sl_status s = to_status(r.status);
  if (out) *out = new (std::nothrow) sl_result{std::move(r)};
  return s;
}

}  // namespace

extern "C" {

sl_config* sl_config_new(void) { return new (std::nothrow) sl_config{}; }

void sl_config_free(sl_config* config) { delete config; }

sl_status sl_config_set(sl_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return SL_USAGE;
  try {
    apply(config->config, key, value);
    config->error.clear();
    return SL_OK;
  } catch (const std::exception& e) {
    config->error = e.what();
    return SL_USAGE;
  }
}

const char* sl_config_error(const sl_config* config) { return config ? config->error.c_str() : ""; }

sl_status sl_run(const char* command, const sl_config* config, sl_result** out) {
  if (!command || !config) return finish({cms::ExitCode::Usage, {}, "null command or config"}, out);
  try {
    cms::RunConfig c = config->config;
    c.command = cms::parse_command(command);
    return finish(cms::run(c), out);
  } catch (const cms::UsageError& e) {
    return finish({cms::ExitCode::Usage, {}, e.what()}, out);
  } catch (const std::exception& e) {
    return finish({cms::ExitCode::Internal, {}, e.what()}, out);
  }
}

sl_status sl_result_status(const sl_result* result) {
  return result ? to_status(result->result.status) : SL_INTERNAL;
}

const char* sl_result_output(const sl_result* result) { return result ? result->result.out.c_str() : ""; }

const char* sl_result_error(const sl_result* result) { return result ? result->result.error.c_str() : ""; }

void sl_result_free(sl_result* result) { delete result; }

static std::string join(const int* n, size_t N) {
  std::string s;
  for (size_t i = 0; i < N; ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s;
}

sl_status sl_jack(const int* n, size_t N, const char* algo, const char* lambda, sl_result** out) {
  if (!n || N == 0) return finish({cms::ExitCode::Usage, {}, "empty weight"}, out);
  sl_config cfg;
  if (sl_config_set(&cfg, "n", join(n, N).c_str()) != SL_OK ||
      (algo && sl_config_set(&cfg, "algo", algo) != SL_OK) ||
      (lambda && sl_config_set(&cfg, "lambda", lambda) != SL_OK))
    return finish({cms::ExitCode::Usage, {}, cfg.error}, out);
  return sl_run("jack", &cfg, out);
}

sl_status sl_pfun(const int* n, size_t N, const char* lambda, sl_result** out) {
  if (!n || N == 0) return finish({cms::ExitCode::Usage, {}, "empty weight"}, out);
  sl_config cfg;
  if (sl_config_set(&cfg, "n", join(n, N).c_str()) != SL_OK ||
      (lambda && sl_config_set(&cfg, "lambda", lambda) != SL_OK))
    return finish({cms::ExitCode::Usage, {}, cfg.error}, out);
  return sl_run("pn", &cfg, out);
}

sl_status sl_spectrum(size_t N, int degree, const char* lambda, sl_result** out) {
  sl_config cfg;
  cfg.config.N = N;
  cfg.config.degree = degree;
  if (lambda && sl_config_set(&cfg, "lambda", lambda) != SL_OK)
    return finish({cms::ExitCode::Usage, {}, cfg.error}, out);
  return sl_run("spectrum", &cfg, out);
}

const char* sl_version(void) { return "1.0.0"; }

}  // extern "C"
