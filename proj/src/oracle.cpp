#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cms::oracle {

namespace {

// Integer multivariate polynomial, exponent vector → coefficient.
using IntPoly = std::map<std::vector<int>, mpz_class>;

void add_term(IntPoly& p, const std::vector<int>& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_term(out, e, ca * cb);
    }
  return out;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Exact division by (z_i − z_k), i < k, by lex-leading-term reduction.
IntPoly divide_by_difference(IntPoly f, std::size_t i, std::size_t k) {
  IntPoly q;
  while (!f.empty()) {
    auto lead = std::prev(f.end());  // lex-largest exponent
    std::vector<int> e = lead->first;
    const mpz_class c = lead->second;
    if (e[i] == 0) throw std::logic_error("bialternant is not divisible by the Vandermonde factor");
    --e[i];
    add_term(q, e, c);
    std::vector<int> a = e, b = e;
    ++a[i];
    ++b[k];
    add_term(f, a, -c);
    add_term(f, b, c);
  }
  return q;
}

SymPoly to_sympoly(const IntPoly& p, std::size_t N) {
  SymPoly out(N, Basis::M);
  for (const auto& [e, c] : p) {
    PartitionKey key = sort_descending(e);
    auto it = p.find(key);
    if (it == p.end() || it->second != c) throw std::logic_error("oracle polynomial is not symmetric");
    if (key == e) out.add_term(key, RatFunc(BigRational(c)));
  }
  return out;
}

IntPoly complete_homogeneous(int k, std::size_t N) {
  IntPoly h;
  if (k < 0) return h;
  std::vector<int> e(N, 0);
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 == N) {
      e[i] = left;
      add_term(h, e, 1);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return h;
}

void require_partition(const PartitionKey& n, std::size_t N) {
  if (n.size() != N || !is_sorted_partition(n)) throw std::invalid_argument("schur needs a partition with N parts");
}

}  // namespace

SymPoly schur(const PartitionKey& n, std::size_t N) {
  require_partition(n, N);
  std::vector<std::size_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly alt;
  do {
    std::vector<int> e(N, 0);
    for (std::size_t j = 0; j < N; ++j) e[perm[j]] = n[j] + static_cast<int>(N - 1 - j);
    add_term(alt, e, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = i + 1; k < N; ++k) alt = divide_by_difference(std::move(alt), i, k);
  return to_sympoly(alt, N);
}

SymPoly schur_jacobi_trudi(const PartitionKey& n, std::size_t N) {
  require_partition(n, N);
  // Only rows with nonzero parts matter; the remaining block is the identity.
  std::size_t len = 0;
  while (len < N && n[len] > 0) ++len;
  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly det;
  do {
    IntPoly term{{std::vector<int>(N, 0), mpz_class(permutation_sign(perm))}};
    for (std::size_t i = 0; i < len && !term.empty(); ++i)
      term = mul(term, complete_homogeneous(n[i] - static_cast<int>(i) + static_cast<int>(perm[i]), N));
    for (const auto& [e, c] : term) add_term(det, e, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return to_sympoly(det, N);
}

SpectrumTable hprime_spectrum(int degree, std::size_t N, const BigRational& lambda0) {
  if (!(lambda0 > 0)) throw std::invalid_argument("hprime_spectrum requires lambda > 0");
  SpectrumTable table{degree, N, lambda0, {}};
  const auto basis = partitions(degree, N);  // descending lex: dominance-compatible
  for (std::size_t col = 0; col < basis.size(); ++col) {
    SymPoly m(N, Basis::M);
    m.add_term(basis[col], RatFunc(1));
    const SymPoly image = specialize(apply_hprime(m), lambda0);
    for (const auto& [key, c] : image.terms()) {
      auto row = std::find(basis.begin(), basis.end(), key);
      if (row == basis.end()) throw std::logic_error("H' left the degree-" + std::to_string(degree) + " space");
      if (static_cast<std::size_t>(row - basis.begin()) < col || !dominance_leq(key, basis[col]))
        throw std::logic_error("H' matrix is not triangular in dominance order");
    }
    table.rows.push_back({basis[col], image.coeff(basis[col]).eval(0)});
  }
  return table;
}

std::complex<double> pfun_quadrature(const Weight& n, int lambda0, std::span<const double> x,
                                     const QuadratureOptions& opt) {
  using cplx = std::complex<double>;
  const std::size_t N = n.size();
  if (lambda0 <= 0) throw std::invalid_argument("pfun_quadrature needs a positive integer lambda");
  if (x.size() != N) throw std::invalid_argument("pfun_quadrature: wrong number of angles");
  if (!(opt.eps > 0)) throw std::invalid_argument("pfun_quadrature needs eps > 0");
  long absn = 0;
  for (int v : n) absn += std::abs(v);
  const int min_grid = static_cast<int>(8 * (absn + static_cast<long>(N)));
  const int grid = opt.grid > 0 ? opt.grid : std::max(min_grid, static_cast<int>(std::ceil(36.0 / opt.eps)));
  if (grid < min_grid) throw std::invalid_argument("pfun_quadrature grid must be at least 8(|n|+N)");

  std::vector<cplx> z(N);
  for (std::size_t k = 0; k < N; ++k) z[k] = std::polar(1.0, x[k]);
  std::vector<cplx> unit(grid);
  for (int t = 0; t < grid; ++t) unit[t] = std::polar(1.0, 2 * std::numbers::pi * t / grid);

  auto integrand = [&](const std::vector<int>& idx) {
    std::vector<cplx> xi(N);
    for (std::size_t j = 0; j < N; ++j) xi[j] = std::exp(opt.eps * double(j + 1)) * unit[idx[j]];
    cplx num = 1.0, den = 1.0, mono = 1.0;
    for (std::size_t j = 0; j < N; ++j) {
      mono *= std::pow(xi[j], n[j]);
      for (std::size_t k = j + 1; k < N; ++k) num *= 1.0 - xi[j] / xi[k];
      for (std::size_t k = 0; k < N; ++k) den *= 1.0 - z[k] / xi[j];
    }
    cplx ratio = 1.0;
    for (int p = 0; p < lambda0; ++p) ratio *= num / den;
    return mono * ratio;
  };

  // Partial sums per first index, then pairwise reduction for a fixed summation order.
  std::vector<cplx> partial(grid, 0.0);
  std::vector<int> idx(N, 0);
  long long total = 1;
  for (std::size_t j = 0; j < N; ++j) total *= grid;
  for (long long c = 0; c < total; ++c) {
    long long rem = c;
    for (std::size_t j = N; j-- > 0;) {
      idx[j] = static_cast<int>(rem % grid);
      rem /= grid;
    }
    partial[N > 0 ? idx[0] : 0] += integrand(idx);
  }
  while (partial.size() > 1) {
    std::vector<cplx> next((partial.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] = partial[2 * i] + (2 * i + 1 < partial.size() ? partial[2 * i + 1] : 0.0);
    partial.swap(next);
  }
  return partial[0] / double(total);
}

}  // namespace cms::oracle
