#pragma once

#include <map>
#include <vector>

#include "eigen.hpp"
#include "report.hpp"

namespace cms {

/// 𝒫_n as a symmetric polynomial (M basis); zero when the support condition fails.
struct PFunction {
  Weight n;
  SymPoly poly;
};

/// One solution of n_j + Σ_{ℓ>j} μ_{jℓ} = Σ_ℓ ν_{ℓj} + Σ_{ℓ<j} μ_{ℓj} (all j).
/// nu is row-major N×N: nu[ℓ*N + j] = ν_{ℓj}; z_ℓ carries exponent Σ_j ν_{ℓj}.
struct PSolution {
  MuVector mu;
  std::vector<int> nu;
};

/// All solutions, found by fixing the equations for j = N, N−1, …, 1 in turn.
std::vector<PSolution> enumerate_p_solutions(const Weight& n);

/// Product weight Π binom(λ, μ)(−1)^μ Π binom(−λ, ν)(−1)^ν of one solution.
LambdaPoly solution_weight(const PSolution& s);

/// 𝒫_n summed directly over enumerate_p_solutions (slow reference path).
SymPoly pfun_explicit(const Weight& n);

/// 𝒫_n; the ν-sums of each column are collapsed into the λ-deformed complete
/// homogeneous polynomials g_r(z) = Σ_{|ν|=r} Π_k binom(λ+ν_k−1, ν_k) z^ν.
/// Results are cached per weight (thread-safe).
PFunction pfun(const Weight& n);

struct ATable {
  Weight root;
  std::map<MuVector, RatFunc> entries;
};

/// a-coefficients over enumerate_support_mu(n):
/// (E_{n+μ̲} − E_n) a_μ = γ Σ_{j<k} Σ_{ν=1}^{μ_jk} ν a_{μ−νE_jk}, a_0 = 1.
ATable a_coeffs(const Weight& n);

/// Φ_n = Σ a_μ 𝒫_{n+μ̲}, normalized to coefficient 1 on m_n; passes the exact eigen-check.
EigenResult jack_novel(const Weight& n);

/// Exact check of H'𝒫_n = (E_n − E₀)𝒫_n − γ Σ_{j<k} Σ_{ν≥1} ν 𝒫_{n+νE_jk}.
VerificationReport check_prop1(const Weight& n);

}  // namespace cms
