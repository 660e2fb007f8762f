#include "novel_alg.hpp"

#include <mutex>
#include <shared_mutex>

namespace cms {

namespace {

using MonoPoly = std::map<std::vector<int>, LambdaPoly>;

// binom(λ, k)(−1)^k and binom(−λ, k)(−1)^k = binom(λ+k−1, k).
LambdaPoly signed_binom(unsigned k, bool negative_lambda) {
  static std::mutex mu;
  static std::vector<LambdaPoly> pos, neg;
  std::lock_guard lock(mu);
  auto& table = negative_lambda ? neg : pos;
  while (table.size() <= k) {
    const unsigned i = static_cast<unsigned>(table.size());
    LambdaPoly b = negative_lambda ? binom_neg_lambda(i) : binom_lambda(i);
    if (i % 2 == 1) b = -b;
    table.push_back(std::move(b));
  }
  return table[k];
}

void add_into(MonoPoly& m, const std::vector<int>& e, const LambdaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Calls f(parts) for every vector of `count` non-negative ints summing to `total`.
template <class F>
void for_each_composition(int total, std::size_t count, F&& f) {
  std::vector<int> parts(count, 0);
  if (count == 0) {
    if (total == 0) f(parts);
    return;
  }
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 == count) {
      parts[i] = left;
      f(parts);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

// Backward induction over j = N−1 … 0 choosing μ_{ℓj} (ℓ < j); calls
// leaf(mu, r) where r_j = Σ_ℓ ν_{ℓj} is what is left for the ν column.
template <class Leaf>
void for_each_mu_solution(const Weight& n, Leaf&& leaf) {
  const std::size_t N = n.size();
  MuVector mu(N);
  std::vector<int> r(N, 0);
  auto level = [&](auto& self, std::size_t j) -> void {
    long budget = n[j];
    for (std::size_t l = j + 1; l < N; ++l) budget += mu.at(j, l);
    if (budget < 0) return;
    for (int used = 0; used <= budget; ++used) {
      for_each_composition(used, j, [&](const std::vector<int>& parts) {
        for (std::size_t l = 0; l < j; ++l) mu.set(l, j, parts[l]);
        r[j] = static_cast<int>(budget - used);
        if (j == 0)
          leaf(mu, r);
        else
          self(self, j - 1);
      });
    }
    for (std::size_t l = 0; l < j; ++l) mu.set(l, j, 0);
  };
  if (N > 0) level(level, N - 1);
}

LambdaPoly mu_weight(const MuVector& mu) {
  LambdaPoly w(1);
  for (int v : mu.values())
    if (v != 0) w *= signed_binom(static_cast<unsigned>(v), false);
  return w;
}

// g_r in N variables, as full monomials.
MonoPoly deformed_complete(int r, std::size_t N) {
  MonoPoly g;
  for_each_composition(r, N, [&](const std::vector<int>& nu) {
    LambdaPoly c(1);
    for (int v : nu)
      if (v != 0) c *= signed_binom(static_cast<unsigned>(v), true);
    add_into(g, nu, c);
  });
  return g;
}

MonoPoly multiply(const MonoPoly& a, const MonoPoly& b) {
  MonoPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_into(out, e, ca * cb);
    }
  return out;
}

// Π_j g_{r_j} restricted to weakly decreasing exponents (the m-basis coefficients).
const std::map<PartitionKey, LambdaPoly>& g_product(std::vector<int> r) {
  static std::shared_mutex mu;
  static std::map<std::vector<int>, std::map<PartitionKey, LambdaPoly>> cache;
  const std::size_t N = r.size();
  r = sort_descending(r);
  r.push_back(static_cast<int>(N));  // cache key also carries N
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  MonoPoly acc{{std::vector<int>(N, 0), LambdaPoly(1)}};
  for (std::size_t j = 0; j < N; ++j)
    if (r[j] != 0) acc = multiply(acc, deformed_complete(r[j], N));
  std::map<PartitionKey, LambdaPoly> sorted;
  for (auto& [e, c] : acc)
    if (is_sorted_partition(e)) sorted.emplace(e, std::move(c));
  std::unique_lock lock(mu);
  return cache.emplace(std::move(r), std::move(sorted)).first->second;
}

}  // namespace

std::vector<PSolution> enumerate_p_solutions(const Weight& n) {
  const std::size_t N = n.size();
  std::vector<PSolution> out;
  // Expand every μ-leaf into all ν columns with the prescribed column sums.
  for_each_mu_solution(n, [&](const MuVector& mu, const std::vector<int>& r) {
    std::vector<int> nu(N * N, 0);
    auto col = [&](auto& self, std::size_t j) -> void {
      if (j == N) {
        out.push_back({mu, nu});
        return;
      }
      for_each_composition(r[j], N, [&](const std::vector<int>& c) {
        for (std::size_t l = 0; l < N; ++l) nu[l * N + j] = c[l];
        self(self, j + 1);
      });
    };
    col(col, 0);
  });
  return out;
}

LambdaPoly solution_weight(const PSolution& s) {
  LambdaPoly w = mu_weight(s.mu);
  for (int v : s.nu)
    if (v != 0) w *= signed_binom(static_cast<unsigned>(v), true);
  return w;
}

SymPoly pfun_explicit(const Weight& n) {
  const std::size_t N = n.size();
  std::map<PartitionKey, LambdaPoly> acc;
  for (const auto& s : enumerate_p_solutions(n)) {
    std::vector<int> e(N, 0);
    for (std::size_t l = 0; l < N; ++l)
      for (std::size_t j = 0; j < N; ++j) e[l] += s.nu[l * N + j];
    if (!is_sorted_partition(e)) continue;
    acc[e] += solution_weight(s);
  }
  SymPoly p(N, Basis::M);
  for (auto& [k, c] : acc) p.add_term(k, RatFunc(c));
  return p;
}

PFunction pfun(const Weight& n) {
  static std::shared_mutex mu;
  static std::map<Weight, SymPoly> cache;
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return {n, it->second};
  }
  SymPoly p(n.size(), Basis::M);
  if (support_ok(n)) {
    std::map<PartitionKey, LambdaPoly> acc;
    for_each_mu_solution(n, [&](const MuVector& m, const std::vector<int>& r) {
      const LambdaPoly w = mu_weight(m);
      for (const auto& [k, c] : g_product(r)) acc[k] += w * c;
    });
    for (auto& [k, c] : acc) p.add_term(k, RatFunc(c));
  }
  std::unique_lock lock(mu);
  cache.emplace(n, p);
  return {n, std::move(p)};
}

ATable a_coeffs(const Weight& n) {
  if (!is_sorted_partition(n)) throw std::invalid_argument("a_coeffs needs n1 >= ... >= nN >= 0");
  ATable table{n, {}};
  const RatFunc gamma = coupling_gamma();
  const auto pairs = index_pairs(n.size());
  // enumerate_support_mu orders by total, so every μ − νE_jk precedes μ.
  for (const MuVector& mu : enumerate_support_mu(n)) {
    if (mu.is_zero()) {
      table.entries.emplace(mu, RatFunc(1));
      continue;
    }
    RatFunc sum;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      MuVector prev = mu;
      for (int nu = 1; nu <= mu[p]; ++nu) {
        prev[p] = mu[p] - nu;
        auto it = table.entries.find(prev);
        if (it != table.entries.end()) sum += it->second.scaled(BigRational(nu));
      }
    }
    if (sum.is_zero()) {
      table.entries.emplace(mu, RatFunc());
      continue;
    }
    table.entries.emplace(mu, sum * gamma / gap_novel(n, mu));
  }
  return table;
}

EigenResult jack_novel(const Weight& n) {
  if (!is_sorted_partition(n)) throw std::invalid_argument("jack_novel needs n1 >= ... >= nN >= 0");
  const ATable table = a_coeffs(n);
  std::map<Weight, RatFunc> by_weight;
  for (const auto& [mu, a] : table.entries)
    if (!a.is_zero()) by_weight[add(n, project_mu(mu))] += a;

  SymPoly phi(n.size(), Basis::M);
  for (const auto& [w, a] : by_weight)
    if (!a.is_zero()) phi += pfun(w).poly * a;

  EigenResult r{n, total_energy(n), {}, {}, Algorithm::Novel};
  r.excitation_energy = r.energy - ground_energy(n.size());
  r.phi = leading_monic_normalize(phi, n);
  require_eigenpair(r.phi, r.excitation_energy, "jack_novel");
  return r;
}

VerificationReport check_prop1(const Weight& n) {
  const SymPoly p = pfun(n).poly;
  const SymPoly lhs = apply_hprime(p);
  SymPoly rhs = p * (total_energy(n) - ground_energy(n.size()));
  const RatFunc gamma = coupling_gamma();
  long corrections = 0;
  for (auto [j, k] : index_pairs(n.size())) {
    for (int nu = 1;; ++nu) {
      Weight m = n;
      m[j] += nu;
      m[k] -= nu;
      // Tail sums of n + νE_jk only decrease with ν.
      if (!support_ok(m)) break;
      const SymPoly q = pfun(m).poly;
      if (!q.is_zero()) ++corrections;
      rhs -= q * gamma.scaled(BigRational(nu));
    }
  }
  std::string detail = "nonzero correction terms: " + std::to_string(corrections);
  return exact_report("prop1_exact", 1, lhs == rhs, detail);
}

}  // namespace cms
