#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eigen.hpp"

namespace cms {

/// c-coefficients of Φ_n = Σ c_μ S_{n−μ̲}. Each dominated partition p is stored under its
/// simple-root decomposition μ_{j,j+1} = Σ_{i≤j} (n_i − p_i).
struct CTable {
  Weight root;
  std::map<MuVector, RatFunc> entries;
};

/// Simple-root MuVector with n − μ̲ = p. Requires p ≤ n in dominance order.
MuVector simple_root_mu(const PartitionKey& n, const PartitionKey& p);

/// H'S_n = E'_n S_n + λ Σ_{j<k} (n_j − n_k) Σ_{ν=1}^{n_j−n_k−1} S_{n−νE_jk}, keys sorted,
/// like terms combined, descending key order.
std::vector<std::pair<PartitionKey, RatFunc>> hprime_action_on_S(const PartitionKey& n);

/// Triangular recursion for the c-coefficients.
CTable sutherland_coefficients(const PartitionKey& n);

/// Φ_n and E_n by Sutherland's recursion; the result passes the exact eigen-check.
EigenResult jack_sutherland(const Weight& n);

}  // namespace cms
