#include <doctest.h>

#include <random>

#include "spectra.hpp"

using namespace cms;

namespace {
const RatFunc l = RatFunc::lambda();
}

TEST_CASE("ground energy") {
  CHECK(ground_energy(2) == (l * l).scaled(make_rational(1, 2)));
  CHECK(ground_energy(2).eval(1) == make_rational(1, 2));
  CHECK(ground_energy(3).eval(2) == 8);
  CHECK(ground_energy(1).is_zero());
  for (std::size_t N = 1; N <= 100; ++N) CHECK(ground_energy(N) == ground_energy_sum_form(N));
}

TEST_CASE("excitation and total energies") {
  CHECK(excitation_energy({0, 0, 0}).is_zero());
  CHECK(excitation_energy({2, 0}) == l.scaled(2) + 4);
  CHECK_THROWS_AS(excitation_energy({0, 2}), std::invalid_argument);
  CHECK(total_energy({1, 0}).eval(1) == make_rational(5, 2));
  CHECK(total_energy({1, 0}) == 1 + l + (l * l).scaled(make_rational(1, 2)));
  CHECK(momentum_shift({0, 0}) == std::vector<RatFunc>{l.scaled(make_rational(1, 2)), l.scaled(make_rational(-1, 2))});
  CHECK(momentum_shift({1, 0, 0}) == std::vector<RatFunc>{1 + l, 0, -l});
  for (std::size_t N = 1; N <= 4; ++N)
    for (int d = 0; d <= 6; ++d)
      for (const auto& n : partitions(d, N)) CHECK(total_energy(n) == excitation_energy(n) + ground_energy(N));
}

TEST_CASE("gap formula examples") {
  MuVector m(2);
  m.set(0, 1, 1);
  CHECK(gap_sutherland({2, 0}, m) == 2 + l.scaled(2));
  CHECK(gap_novel({1, 0}, m) == 4 + l.scaled(2));
  CHECK(gap_sutherland({2, 0}, MuVector(2)).is_zero());
  CHECK(gap_novel({1, 0}, MuVector(2)).is_zero());
  MuVector m3(3);
  m3.set(0, 2, 1);
  CHECK(gap_novel({2, 1, 0}, m3) == 6 + l.scaled(4));
}

TEST_CASE("gap formulas equal direct energy differences") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick_N(2, 4), entry(-5, 5), mu_entry(0, 3);
  for (int i = 0; i < 1000; ++i) {
    Weight n(pick_N(rng));
    for (int& v : n) v = entry(rng);
    MuVector m(n.size());
    for (std::size_t p = 0; p < m.pair_count(); ++p) m[p] = mu_entry(rng);
    const Weight mw = project_mu(m);
    CHECK(gap_sutherland(n, m) == excitation_energy_extended(n) - excitation_energy_extended(sub(n, mw)));
    CHECK(gap_novel(n, m) == total_energy(add(n, mw)) - total_energy(n));
  }
}

TEST_CASE("novel gaps are positive on the support set") {
  for (const BigRational& x : {make_rational(1, 10), make_rational(1, 2), BigRational(1), make_rational(3, 2), BigRational(10)})
    for (std::size_t N = 2; N <= 4; ++N)
      for (int d = 0; d <= 6; ++d)
        for (const auto& n : partitions(d, N))
          for (const auto& m : enumerate_support_mu(n))
            if (!m.is_zero()) CHECK(gap_novel(n, m).eval(x) > 0);
}
