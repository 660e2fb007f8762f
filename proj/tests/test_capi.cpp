// Exercises the shared library through its public C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <sutherland/sutherland.h>

TEST_CASE("config setters validate input") {
  sl_config* c = sl_config_new();
  REQUIRE(c != nullptr);
  CHECK(sl_config_set(c, "n", "2,0") == SL_OK);
  CHECK(sl_config_set(c, "lambda", "1/2") == SL_OK);
  CHECK(sl_config_set(c, "lambda", "oops") == SL_USAGE);
  CHECK(std::string(sl_config_error(c)).find("lambda") != std::string::npos);
  CHECK(sl_config_set(c, "colour", "red") == SL_USAGE);
  CHECK(sl_config_set(c, "output", "xml") == SL_USAGE);
  CHECK(sl_config_set(nullptr, "n", "1") == SL_USAGE);
  sl_config_free(c);
}

TEST_CASE("jack through the C API") {
  const int n[] = {2, 0};
  sl_result* r = nullptr;
  CHECK(sl_jack(n, 2, "both", nullptr, &r) == SL_OK);
  const std::string out = sl_result_output(r);
  CHECK(out.find("\"equal_after_normalization\":true") != std::string::npos);
  CHECK(out.find("m[2,0] + (2*l/(l + 1))*m[1,1]") != std::string::npos);
  CHECK(std::string(sl_result_error(r)).empty());
  sl_result_free(r);

  const int bad[] = {0, 2};
  CHECK(sl_jack(bad, 2, nullptr, nullptr, &r) == SL_USAGE);
  CHECK(sl_result_status(r) == SL_USAGE);
  CHECK(std::string(sl_result_error(r)).find("weakly decreasing") != std::string::npos);
  sl_result_free(r);
  CHECK(sl_jack(n, 0, nullptr, nullptr, nullptr) == SL_USAGE);
}

TEST_CASE("pn and spectrum through the C API") {
  const int n[] = {1, -1};
  sl_result* r = nullptr;
  CHECK(sl_pfun(n, 2, "sym", &r) == SL_OK);
  CHECK(std::string(sl_result_output(r)).find("support condition violated") != std::string::npos);
  sl_result_free(r);
  CHECK(sl_spectrum(2, 1, "3", &r) == SL_OK);
  CHECK(std::string(sl_result_output(r)).find("\"value\":\"4\"") != std::string::npos);
  sl_result_free(r);
  CHECK(sl_spectrum(2, 1, nullptr, &r) == SL_USAGE);
  sl_result_free(r);
}

TEST_CASE("generic runner") {
  sl_config* c = sl_config_new();
  sl_config_set(c, "suite", "exact");
  sl_config_set(c, "N-max", "2");
  sl_config_set(c, "deg-max", "2");
  sl_result* r = nullptr;
  CHECK(sl_run("verify", c, &r) == SL_OK);
  sl_result_free(r);
  CHECK(sl_run("dance", c, &r) == SL_USAGE);
  sl_result_free(r);
  sl_config_set(c, "lambda", "-1/2");
  CHECK(sl_run("verify", c, &r) == SL_USAGE);
  sl_result_free(r);
  sl_config_free(c);
  CHECK(std::string(sl_version()).size() > 0);
}
