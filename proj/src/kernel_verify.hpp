#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "report.hpp"
#include "sympoly.hpp"

namespace cms {

/// Sample points on the circle. All distances |x_j − x_k|, and |x_j − y_k| when y is
/// present, exceed `delta` modulo 2π.
struct Configuration {
  std::vector<double> x;
  std::vector<double> y;
  double delta = 0.3;
};

/// Circular distance in [0, π].
double circle_distance(double a, double b);
/// Throws std::domain_error if the separation invariant is violated.
void require_separated(const Configuration& c);
/// Rejection-samples angles in [−π, π].
Configuration random_configuration(std::size_t N, bool with_y, double delta, std::mt19937_64& rng);

/// sin(r/2)^λ on the branch lim_{ε↓0} sin(r/2 + iε)^λ: the phase is e^{iπλ} where the sine is negative.
std::complex<double> psi_power(double r, double lambda);
/// V(r) = 1 / (4 sin²(r/2)).
double pair_potential(double r);

/// Ψ₀(x) = Π_{j<k} ψ(x_k − x_j)^λ.
std::complex<double> eval_psi0(const Configuration& c, double lambda);
/// F(x; y) with every ψ power on the same branch as eval_psi0.
std::complex<double> eval_kernel(std::span<const double> x, std::span<const double> y, double lambda);

struct FdOptions {
  long samples = 100;
  double h = 1e-4;
  double delta = 0.3;
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
};

/// HΨ₀ = E₀Ψ₀ with Richardson-extrapolated central differences.
VerificationReport check_fact1(std::size_t N, double lambda, const FdOptions& opt = {});
/// Σ_j (∂²_{x_j} − ∂²_{y_j}) F = γ Σ_{j<k} (V(x_k−x_j) − V(y_j−y_k)) F.
VerificationReport check_fact2(std::size_t N, double lambda, const FdOptions& opt = {});
/// cot x cot y + cot x cot z + cot y cot z = 1 for x + y + z = 0.
VerificationReport check_cot_identity(long samples, std::uint64_t seed = 1, double tolerance = 1e-12);
/// ψ'/ψ = ½ cot(r/2), with ψ' from a complex-step derivative.
VerificationReport check_log_derivative(long samples, std::uint64_t seed = 1, double tolerance = 1e-12);
/// 1/(4 sin²((y+iε)/2)) = −Σ_{ν≥1} ν e^{iνy − νε}, truncated at K. Passes when the deviation is
/// below both the analytic tail bound and `tolerance`.
VerificationReport check_geom_expansion(double eps, double y, int K, double tolerance = 1e-10);
/// Analytic bound 2 e^{−(K+1)ε}(K+2)/(1 − e^{−ε})² on the truncated tail.
double geom_tail_bound(double eps, int K);
/// H(ΦΨ₀) = E ΦΨ₀ at random points, Φ's coefficients specialized at λ₀.
VerificationReport check_eigenfunction(const SymPoly& phi, double energy, const BigRational& lambda0,
                                       const FdOptions& opt);

}  // namespace cms
