#pragma once

#include "exactring.hpp"
#include "weights.hpp"

namespace cms {

/// Energies are polynomials in λ; kept as RatFunc so they compose with the coefficient field.
using Energy = RatFunc;

/// γ = 2λ(λ−1), the coupling in front of the 1/sin² potential.
RatFunc coupling_gamma();

/// E₀ = λ² N (N² − 1) / 12.
Energy ground_energy(std::size_t N);
/// Σ_j (λ²/4)(N + 1 − 2j)²; equal to ground_energy(N).
Energy ground_energy_sum_form(std::size_t N);

/// E'_n = Σ n_j² + λ Σ_j (N + 1 − 2j) n_j for sorted n; throws std::invalid_argument otherwise.
Energy excitation_energy(const Weight& n);
/// Same expression applied verbatim to any n ∈ ℤ^N (no ordering requirement).
Energy excitation_energy_extended(const Weight& n);

/// P_j = n_j + λ[(N + 1)/2 − j].
std::vector<RatFunc> momentum_shift(const Weight& n);
/// E_n = Σ_j P_j².
Energy total_energy(const Weight& n);

/// E'_n − E'_{n−μ̲} in its manifestly positive form.
Energy gap_sutherland(const Weight& n, const MuVector& mu);
/// E_{n+μ̲} − E_n in its manifestly positive form.
Energy gap_novel(const Weight& n, const MuVector& mu);

}  // namespace cms
