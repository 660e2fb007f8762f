#include "sutherland_alg.hpp"

namespace cms {

void require_eigenpair(const SymPoly& phi, const Energy& eigenvalue, const char* who) {
  const SymPoly lhs = apply_hprime(phi);
  const SymPoly rhs = convert_basis(phi, Basis::M) * eigenvalue;
  if (!(lhs == rhs)) throw InternalError(std::string(who) + ": exact eigen-check H'Phi = E'Phi failed");
}

MuVector simple_root_mu(const PartitionKey& n, const PartitionKey& p) {
  MuVector mu(n.size());
  long partial = 0;
  for (std::size_t j = 0; j + 1 < n.size(); ++j) {
    partial += n[j] - p[j];
    if (partial < 0) throw std::invalid_argument("simple_root_mu: p is not dominated by n");
    mu.set(j, j + 1, static_cast<int>(partial));
  }
  if (degree(n) != degree(p)) throw std::invalid_argument("simple_root_mu: degrees differ");
  return mu;
}

std::vector<std::pair<PartitionKey, RatFunc>> hprime_action_on_S(const PartitionKey& n) {
  if (!is_sorted_partition(n)) throw std::invalid_argument("hprime_action_on_S needs a partition");
  std::map<PartitionKey, RatFunc, std::greater<>> acc;
  acc[n] = excitation_energy(n);
  const RatFunc lam = RatFunc::lambda();
  for (auto [j, k] : index_pairs(n.size())) {
    const int d = n[j] - n[k];
    for (int nu = 1; nu <= d - 1; ++nu) {
      Weight m = n;
      m[j] -= nu;
      m[k] += nu;
      acc[sort_descending(m)] += lam.scaled(BigRational(d));
    }
  }
  std::vector<std::pair<PartitionKey, RatFunc>> out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, c);
  return out;
}

CTable sutherland_coefficients(const PartitionKey& n) {
  if (!is_sorted_partition(n)) throw std::invalid_argument("Sutherland recursion needs n1 >= ... >= nN >= 0");
  const Energy top = excitation_energy(n);
  CTable table{n, {}};

  // Pending S-coefficients of H'Φ on not-yet-visited partitions, filled as each
  // coefficient becomes final. Descending lex order visits every m before anything
  // strictly dominance-below it.
  std::map<PartitionKey, RatFunc, std::greater<>> pending;
  for (const auto& p : partitions(static_cast<int>(degree(n)), n.size())) {
    if (p > n || !dominance_leq(p, n)) continue;
    RatFunc c;
    if (p == n) {
      c = RatFunc(1);
    } else {
      auto it = pending.find(p);
      if (it == pending.end()) continue;
      const MuVector mu = simple_root_mu(n, p);
      const Energy gap = gap_sutherland(n, mu);
      if (!(gap == top - excitation_energy(p)))
        throw InternalError("gap_sutherland disagrees with the energy difference");
      c = it->second / gap;
      pending.erase(it);
    }
    if (c.is_zero()) continue;
    table.entries.emplace(simple_root_mu(n, p), c);
    for (const auto& [q, a] : hprime_action_on_S(p))
      if (q != p) pending[q] += a * c;
  }
  return table;
}

EigenResult jack_sutherland(const Weight& n) {
  if (!is_sorted_partition(n)) throw std::invalid_argument("jack_sutherland needs n1 >= ... >= nN >= 0");
  const CTable table = sutherland_coefficients(n);
  SymPoly phi_s(n.size(), Basis::S);
  for (const auto& [mu, c] : table.entries) phi_s.add_term(sub(n, project_mu(mu)), c);
  SymPoly phi = leading_monic_normalize(phi_s, n);

  EigenResult r{n, total_energy(n), excitation_energy(n), std::move(phi), Algorithm::Sutherland};
  require_eigenpair(r.phi, r.excitation_energy, "jack_sutherland");
  return r;
}

}  // namespace cms
