#pragma once

#include <cstdint>
#include <vector>

#include "kernel_verify.hpp"
#include "report.hpp"

// Range-wide verification runs shared by the `verify` command and the acceptance binary.
namespace cms::suites {

/// Sorted weights with 1 ≤ N ≤ n_max parts and total degree ≤ deg_max.
std::vector<Weight> sorted_range(std::size_t n_max, int deg_max);

/// Monic jack_sutherland(n) == monic jack_novel(n) exactly, over sorted_range.
VerificationReport equivalence(std::size_t n_max, int deg_max);
/// apply_hprime(Φ) == E'Φ for Φ from both algorithms, recomputed here.
VerificationReport eigenrelation(std::size_t n_max, int deg_max);
/// Φ_(2,0) and Φ_(2,1,0) against their closed forms.
VerificationReport worked_cases();
/// Φ at λ=1 equals the oracle Schur polynomial.
VerificationReport schur_degeneration(std::size_t n_max, int deg_max);
/// Every a-coefficient with μ ≠ 0 vanishes at λ=1.
VerificationReport a_corrections_vanish(std::size_t n_max, int deg_max);
/// E₀ in product form equals the pairwise-sum form for N = 1..n_max.
VerificationReport ground_energy_forms(std::size_t n_max);
/// E_n = E'_n + E₀ over sorted_range.
VerificationReport energy_decomposition(std::size_t n_max, int deg_max);
/// check_prop1 for every weight in sorted_range; fails on the first failing n.
VerificationReport prop1_range(std::size_t n_max, int deg_max);

/// Every n ∈ [−box, box]^N (N ≤ n_max): 𝒫_n == 0 whenever the support condition fails.
VerificationReport support_vanishing(std::size_t n_max, int box);
/// Every nonzero term of 𝒫_n has degree Σ n_j.
VerificationReport degree_conservation(std::size_t n_max, int box);
/// enumerate_p_solutions equals a brute-force scan of the bounded (μ, ν) box.
VerificationReport enumeration_vs_box(std::size_t n_max, int box);

/// Both gap formulas against direct energy differences on random (n, μ).
VerificationReport gap_identities(long instances, std::uint64_t seed);
/// Both gaps positive at each λ₀ for sorted n (N ≤ 4, |n| ≤ 6) and all nonzero support μ.
VerificationReport gap_positivity(const std::vector<BigRational>& lambdas);
/// hprime_spectrum diagonal equals the excitation energies at λ₀ as multisets.
VerificationReport spectrum_diagonal(std::size_t n_max, int deg_max, const BigRational& lambda0);

/// Finite-difference H(ΦΨ₀) = EΦΨ₀ for every weight in sorted_range, at λ₀.
VerificationReport end_to_end(std::size_t n_max, int deg_max, const BigRational& lambda0, const FdOptions& opt);
/// pfun_quadrature vs evaluate(pfun) at `configs` random points, all sorted and unsorted
/// weights with N parts, entries in [−deg_max, deg_max] and Σ|n_j| ≤ deg_max.
VerificationReport quadrature(int lambda0, std::size_t N, int deg_max, long configs, std::uint64_t seed,
                              double tolerance = 1e-8);

}  // namespace cms::suites
