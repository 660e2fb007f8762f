#include "spectra.hpp"

namespace cms {

namespace {
LambdaPoly lin(const BigRational& c0, const BigRational& c1) {
  return LambdaPoly(std::vector<BigRational>{c0, c1});
}
}  // namespace

RatFunc coupling_gamma() { return RatFunc(LambdaPoly(std::vector<BigRational>{0, -2, 2})); }

Energy ground_energy(std::size_t N) {
  const long n = static_cast<long>(N);
  return RatFunc(LambdaPoly::monomial(make_rational(n * (n * n - 1), 12), 2));
}

Energy ground_energy_sum_form(std::size_t N) {
  BigRational acc = 0;
  const long n = static_cast<long>(N);
  for (long j = 1; j <= n; ++j) {
    const long d = n + 1 - 2 * j;
    acc += make_rational(d * d, 4);
  }
  return RatFunc(LambdaPoly::monomial(acc, 2));
}

Energy excitation_energy(const Weight& n) {
  if (!is_sorted_partition(n))
    throw std::invalid_argument("excitation_energy needs n1 >= ... >= nN >= 0");
  return excitation_energy_extended(n);
}

Energy excitation_energy_extended(const Weight& n) {
  const long N = static_cast<long>(n.size());
  BigRational c0 = 0, c1 = 0;
  for (long j = 1; j <= N; ++j) {
    const long v = n[j - 1];
    c0 += v * v;
    c1 += (N + 1 - 2 * j) * v;
  }
  return RatFunc(lin(c0, c1));
}

std::vector<RatFunc> momentum_shift(const Weight& n) {
  const long N = static_cast<long>(n.size());
  std::vector<RatFunc> out;
  out.reserve(n.size());
  for (long j = 1; j <= N; ++j)
    out.emplace_back(lin(n[j - 1], make_rational(N + 1 - 2 * j, 2)));
  return out;
}

Energy total_energy(const Weight& n) {
  RatFunc acc;
  for (const auto& p : momentum_shift(n)) acc += p * p;
  return acc;
}

Energy gap_sutherland(const Weight& n, const MuVector& mu) {
  const Weight m = sub(n, project_mu(mu));
  BigRational c0 = 0, c1 = 0;
  std::size_t p = 0;
  for (auto [j, k] : index_pairs(n.size())) {
    const long mjk = mu[p++];
    if (mjk == 0) continue;
    c0 += mjk * (static_cast<long>(m[j]) - m[k] + n[j] - n[k]);
    c1 += mjk * 2 * static_cast<long>(k - j);
  }
  return RatFunc(lin(c0, c1));
}

Energy gap_novel(const Weight& n, const MuVector& mu) {
  const Weight muw = project_mu(mu);
  BigRational c0 = 0, c1 = 0;
  for (int v : muw) c0 += static_cast<long>(v) * v;
  std::size_t p = 0;
  for (auto [j, k] : index_pairs(n.size())) {
    const long mjk = mu[p++];
    if (mjk == 0) continue;
    c0 += 2 * mjk * (static_cast<long>(n[j]) - n[k]);
    c1 += 2 * mjk * static_cast<long>(k - j);
  }
  return RatFunc(lin(c0, c1));
}

}  // namespace cms
