#include <doctest.h>

#include <numbers>

#include "kernel_verify.hpp"
#include "novel_alg.hpp"

using namespace cms;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("ground state on the fixed branch") {
  Configuration c{{pi, 0.0}, {}, 0.3};
  CHECK(std::abs(eval_psi0(c, 2.0) - 1.0) < 1e-12);
  c.x = {0.0, pi};
  CHECK(std::abs(eval_psi0(c, 1.0) - 1.0) < 1e-12);
  c.x = {0.0, 0.1};
  CHECK_THROWS_AS(eval_psi0(c, 1.0), std::domain_error);
  // Negative sine picks up the phase e^{iπλ}.
  CHECK(std::abs(psi_power(-pi, 0.5) - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("random configurations respect the separation") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto c = random_configuration(3, true, 0.3, rng);
    CHECK_NOTHROW(require_separated(c));
    for (double v : c.x) CHECK(std::abs(v) <= pi);
  }
  CHECK(circle_distance(3.0, -3.0) == doctest::Approx(2 * pi - 6.0));
}

TEST_CASE("ground state identity") {
  for (double lambda : {0.5, 1.0, 1.7, 2.0})
    for (std::size_t N : {1u, 2u, 3u}) {
      const auto r = check_fact1(N, lambda);
      CHECK_MESSAGE(r.pass, r.identity << " residual " << r.max_rel_residual);
    }
  CHECK_THROWS_AS(check_fact1(2, -0.5), std::invalid_argument);
}

TEST_CASE("kernel identity") {
  for (double lambda : {0.5, 1.0, 1.7, 2.0})
    for (std::size_t N : {1u, 2u, 3u}) {
      const auto r = check_fact2(N, lambda);
      CHECK_MESSAGE(r.pass, r.identity << " residual " << r.max_rel_residual);
    }
}

TEST_CASE("Richardson differences converge at fourth order") {
  // Large steps so truncation, not rounding, dominates.
  FdOptions coarse;
  coarse.h = 0.2;
  coarse.samples = 20;
  coarse.seed = 3;
  FdOptions fine = coarse;
  fine.h = 0.1;
  const double ratio = check_fact1(3, 1.5, coarse).max_rel_residual / check_fact1(3, 1.5, fine).max_rel_residual;
  CHECK(ratio > 10.0);
  CHECK(ratio < 24.0);
}

TEST_CASE("trigonometric identities") {
  CHECK(check_cot_identity(1000).pass);
  CHECK(check_log_derivative(1000).pass);
  auto cot = [](double t) { return std::cos(t) / std::sin(t); };
  const double x = pi / 3, z = -2 * pi / 3;
  CHECK(std::abs(cot(x) * cot(x) + 2 * cot(x) * cot(z) - 1) < 1e-12);
}

TEST_CASE("geometric expansion of the pair potential") {
  CHECK(check_geom_expansion(0.5, 1.0, 60).pass);
  CHECK(check_geom_expansion(1.0, 0.0, 80).pass);
  CHECK(check_geom_expansion(0.5, 1.0, 400).pass);
  CHECK_FALSE(check_geom_expansion(0.5, 1.0, 0).pass);
  CHECK(geom_tail_bound(0.5, 60) < 1e-10);
  CHECK_THROWS(check_geom_expansion(0.0, 1.0, 10));
}

TEST_CASE("end-to-end eigenfunctions") {
  FdOptions opt;
  opt.tolerance = 1e-5;
  opt.samples = 20;
  for (const Weight& n : {Weight{2, 0}, Weight{2, 1, 0}, Weight{3, 1, 0}, Weight{2, 2}})
    for (const BigRational& x : {make_rational(1, 2), BigRational(1), BigRational(2)}) {
      const EigenResult r = jack_novel(n);
      const auto rep = check_eigenfunction(r.phi, r.energy.eval(x).get_d(), x, opt);
      CHECK_MESSAGE(rep.pass, "residual " << rep.max_rel_residual);
    }
  // A wrong eigenvalue must be caught.
  const EigenResult r = jack_novel({2, 1, 0});
  CHECK_FALSE(check_eigenfunction(r.phi, r.energy.eval(1).get_d() + 0.1, 1, opt).pass);
}
