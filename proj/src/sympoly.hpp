#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>

#include "exactring.hpp"
#include "weights.hpp"

namespace cms {

/// m: monomial symmetric functions; S: full permutation sums S_n = Σ_P Π z_{Pj}^{n_j}.
enum class Basis { M, S };

/// Symmetric polynomial in z_j = e^{i x_j} with coefficients in ℚ(λ).
/// Keys are weakly decreasing, iterated in descending lexicographic order.
class SymPoly {
public:
  using TermMap = std::map<PartitionKey, RatFunc, std::greater<>>;

  SymPoly() = default;
  SymPoly(std::size_t n, Basis basis) : n_(n), basis_(basis) {}

  std::size_t size() const { return n_; }
  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Zero for keys that are absent.
  RatFunc coeff(const PartitionKey& key) const;
  /// Adds c to the coefficient of `key`; zero results are erased.
  void add_term(const PartitionKey& key, const RatFunc& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const RatFunc& s);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const RatFunc& s) { return a *= s; }
  friend SymPoly operator*(const RatFunc& s, SymPoly a) { return a *= s; }
  friend bool operator==(const SymPoly& a, const SymPoly& b);

private:
  std::size_t n_ = 0;
  Basis basis_ = Basis::M;
  TermMap terms_;
};

/// Π_v (multiplicity of v in key)!, the factor in S_key = factor · m_key.
BigRational multiplicity_factor(const PartitionKey& key);

SymPoly convert_basis(const SymPoly& p, Basis target);

/// Every coefficient specialized at λ = λ₀ (still stored as RatFunc constants).
/// Throws PoleError if a coefficient has a pole at λ₀.
SymPoly specialize(const SymPoly& p, const BigRational& lambda0);

/// Σ c · (basis element) at z_j = e^{i x_j}, coefficients specialized at λ₀.
std::complex<double> evaluate(const SymPoly& p, std::span<const double> x, const BigRational& lambda0);

/// Precomputed double-precision form for repeated evaluation.
class NumericSymPoly {
public:
  NumericSymPoly(const SymPoly& p, const BigRational& lambda0);
  std::complex<double> operator()(std::span<const double> x) const;

private:
  std::size_t n_;
  std::vector<std::pair<std::vector<int>, double>> monomials_;
};

/// p divided by its coefficient on m_n, returned in the M basis.
/// Throws std::domain_error when that coefficient is zero.
SymPoly leading_monic_normalize(const SymPoly& p, const PartitionKey& n);

/// H' = Σ_j D_j² + λ Σ_{j<k} (z_j+z_k)/(z_j−z_k) (D_j − D_k), D_j = z_j ∂/∂z_j,
/// applied by exact Laurent-polynomial manipulation. Result in M basis.
SymPoly apply_hprime(const SymPoly& p);

/// Expansion into ordinary monomials (exponent vector → coefficient).
std::map<std::vector<int>, RatFunc> expand_monomials(const SymPoly& p);

/// Distinct permutations of a key.
std::vector<std::vector<int>> distinct_permutations(const PartitionKey& key);

}  // namespace cms
