#include <doctest.h>

#include <random>

#include "kernel_verify.hpp"
#include "novel_alg.hpp"
#include "oracle.hpp"
#include "spectra.hpp"

using namespace cms;
using namespace cms::oracle;

namespace {

SymPoly mono(const PartitionKey& k) {
  SymPoly p(k.size(), Basis::M);
  p.add_term(k, 1);
  return p;
}

}  // namespace

TEST_CASE("Schur polynomials") {
  CHECK(schur({1, 0}, 2) == mono({1, 0}));
  CHECK(schur({2, 0}, 2) == mono({2, 0}) + mono({1, 1}));
  CHECK(schur({1, 1}, 2) == mono({1, 1}));
  CHECK(schur({0, 0, 0}, 3) == mono({0, 0, 0}));
  CHECK_THROWS(schur({0, 1}, 2));
  for (std::size_t N = 1; N <= 3; ++N)
    for (int d = 0; d <= 4; ++d)
      for (const auto& n : partitions(d, N)) CHECK(schur(n, N) == schur_jacobi_trudi(n, N));
}

TEST_CASE("spectrum of H' from its triangular matrix") {
  auto t = hprime_spectrum(2, 2, 1);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].key == PartitionKey{2, 0});
  CHECK(t.rows[0].value == 6);
  CHECK(t.rows[1].value == 2);
  t = hprime_spectrum(1, 2, 3);
  CHECK(t.rows.at(0).value == 4);
  t = hprime_spectrum(0, 3, 2);
  CHECK(t.rows.at(0).key == PartitionKey{0, 0, 0});
  CHECK(t.rows.at(0).value == 0);
  CHECK_THROWS(hprime_spectrum(2, 2, 0));
  for (std::size_t N = 1; N <= 4; ++N)
    for (int d = 0; d <= 6; ++d) {
      const auto table = hprime_spectrum(d, N, make_rational(3, 7));
      const auto keys = partitions(d, N);
      REQUIRE(table.rows.size() == keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i)
        CHECK(table.rows[i].value == excitation_energy(keys[i]).eval(make_rational(3, 7)));
    }
}

TEST_CASE("quadrature examples") {
  const double x1[1] = {0.7};
  CHECK(std::abs(pfun_quadrature({2}, 1, x1) - std::polar(1.0, 1.4)) < 1e-8);
  const double x0[2] = {0.0, 0.0};
  CHECK(std::abs(pfun_quadrature({1, 0}, 2, x0) - 4.0) < 1e-8);
  const double x2[2] = {0.3, -1.2};
  CHECK(std::abs(pfun_quadrature({1, -1}, 1, x2)) < 1e-8);
  CHECK_THROWS_AS(pfun_quadrature({1, 0}, 0, x2), std::invalid_argument);
  QuadratureOptions small;
  small.grid = 8;
  CHECK_THROWS_AS(pfun_quadrature({1, 0}, 1, x2, small), std::invalid_argument);
}

TEST_CASE("quadrature converges to the symbolic value") {
  std::mt19937_64 rng(2);
  const auto c = random_configuration(2, false, 0.3, rng);
  for (int l0 : {1, 2})
    for (const Weight& n : {Weight{2, 1}, Weight{3, 0}, Weight{1, 1}}) {
      const auto exact = evaluate(pfun(n).poly, c.x, l0);
      // Grid refinement at fixed eps until the 1e-8 floor.
      QuadratureOptions q;
      q.eps = 0.25;
      double prev = -1;
      for (int grid : {40, 80, 160}) {
        q.grid = grid;
        const double dev = std::abs(pfun_quadrature(n, l0, c.x, q) - exact);
        if (prev > 1e-8) CHECK(dev <= prev / 10);
        prev = dev;
      }
      CHECK(prev < 1e-8);
      // The contour can shrink toward the torus without changing the value.
      for (double eps : {0.1, 0.05}) {
        QuadratureOptions a, b;
        a.eps = eps;
        b.eps = eps / 2;
        CHECK(std::abs(pfun_quadrature(n, l0, c.x, a) - pfun_quadrature(n, l0, c.x, b)) < 1e-6);
      }
    }
}
