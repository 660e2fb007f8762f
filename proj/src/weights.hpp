#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cms {

/// Integer exponent vector n ∈ ℤ^N. Entries may be negative.
using Weight = std::vector<int>;
/// Weakly decreasing exponent vector; used as the label of symmetric basis elements.
using PartitionKey = std::vector<int>;

/// Non-negative coefficients μ_{jk} (j < k) of a combination Σ μ_{jk} E_{jk} of root vectors.
/// Indices are 0-based in code; serialization uses 1-based "j,k".
class MuVector {
public:
  MuVector() = default;
  explicit MuVector(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t pair_count() const { return v_.size(); }
  std::size_t pair_index(std::size_t j, std::size_t k) const;

  int at(std::size_t j, std::size_t k) const { return v_[pair_index(j, k)]; }
  void set(std::size_t j, std::size_t k, int value);
  int& operator[](std::size_t pair) { return v_[pair]; }
  int operator[](std::size_t pair) const { return v_[pair]; }
  const std::vector<int>& values() const { return v_; }

  bool is_zero() const;
  long total() const;

  friend auto operator<=>(const MuVector&, const MuVector&) = default;

private:
  std::size_t n_ = 0;
  std::vector<int> v_;
};

/// (j, k) pairs with j < k in the storage order used by MuVector.
std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n);

/// E_{jk}: +1 at j, −1 at k (0-based). Throws std::out_of_range unless j < k < n.
Weight root_vector(std::size_t j, std::size_t k, std::size_t n);
/// μ̲ = Σ μ_{jk} E_{jk}; always sums to zero.
Weight project_mu(const MuVector& mu);
/// Componentwise a_{jk} ≤ b_{jk}.
bool mu_leq(const MuVector& a, const MuVector& b);

/// Partial-sum order on partitions of the same total. Throws std::invalid_argument otherwise.
bool dominance_leq(const PartitionKey& m, const PartitionKey& n);

/// Every tail sum n_j + … + n_N is non-negative.
bool support_ok(const Weight& n);
bool is_sorted_partition(const Weight& n);
PartitionKey sort_descending(Weight n);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
long degree(const Weight& n);

/// All μ with support_ok(n + μ̲), for n satisfying n₁ ≥ … ≥ n_N ≥ 0.
/// Scans the box μ_{jk} ≤ n_{j+1} + … + n_N.
std::vector<MuVector> enumerate_support_mu(const Weight& n);

/// All partitions of `total` into at most `parts` parts, padded with zeros to length `parts`,
/// in descending lexicographic order (a linear extension of dominance).
std::vector<PartitionKey> partitions(int total, std::size_t parts);

}  // namespace cms
