#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sympoly.hpp"

// Referees that share no code path with either eigenfunction algorithm.
namespace cms::oracle {

/// s_n via the bialternant det(z_i^{n_j+N−j}) / det(z_i^{N−j}), divided out exactly.
SymPoly schur(const PartitionKey& n, std::size_t N);

/// s_n = det(h_{n_i − i + j}) with h_k the complete homogeneous polynomials.
SymPoly schur_jacobi_trudi(const PartitionKey& n, std::size_t N);

struct SpectrumRow {
  PartitionKey key;
  BigRational value;
};

struct SpectrumTable {
  int degree = 0;
  std::size_t N = 0;
  BigRational lambda0;
  std::vector<SpectrumRow> rows;
};

/// Matrix of apply_hprime on span{m_p : p ⊢ degree, ≤ N parts} at λ₀, checked to be
/// triangular in dominance order; rows carry the diagonal. Throws std::logic_error on a
/// triangularity violation.
SpectrumTable hprime_spectrum(int degree, std::size_t N, const BigRational& lambda0);

struct QuadratureOptions {
  int grid = 0;  ///< points per circle; 0 selects max(8(|n|+N), ⌈36/ε⌉)
  double eps = 0.25;
};

/// Trapezoidal evaluation of the torus integral defining 𝒫_n at integer λ₀, along
/// ξ_j = e^{εj} e^{i y_j}. Throws std::invalid_argument for non-positive λ₀ or a too-small grid.
std::complex<double> pfun_quadrature(const Weight& n, int lambda0, std::span<const double> x,
                                     const QuadratureOptions& opt = {});

}  // namespace cms::oracle
