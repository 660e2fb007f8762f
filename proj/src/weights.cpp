#include "weights.hpp"

#include <algorithm>
#include <numeric>

namespace cms {

MuVector::MuVector(std::size_t n) : n_(n), v_(n * (n - (n > 0 ? 1 : 0)) / 2, 0) {}

std::size_t MuVector::pair_index(std::size_t j, std::size_t k) const {
  if (!(j < k && k < n_)) throw std::out_of_range("pair index out of range");
  // Row-major over j < k.
  return j * n_ - j * (j + 1) / 2 + (k - j - 1);
}

void MuVector::set(std::size_t j, std::size_t k, int value) {
  if (value < 0) throw std::invalid_argument("mu entries must be non-negative");
  v_[pair_index(j, k)] = value;
}

bool MuVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

long MuVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) out.emplace_back(j, k);
  return out;
}

Weight root_vector(std::size_t j, std::size_t k, std::size_t n) {
  if (!(j < k && k < n)) throw std::out_of_range("root_vector requires j < k < N");
  Weight e(n, 0);
  e[j] = 1;
  e[k] = -1;
  return e;
}

Weight project_mu(const MuVector& mu) {
  Weight w(mu.size(), 0);
  std::size_t p = 0;
  for (auto [j, k] : index_pairs(mu.size())) {
    w[j] += mu[p];
    w[k] -= mu[p];
    ++p;
  }
  return w;
}

bool mu_leq(const MuVector& a, const MuVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mu vectors of different size");
  for (std::size_t p = 0; p < a.pair_count(); ++p)
    if (a[p] > b[p]) return false;
  return true;
}

bool dominance_leq(const PartitionKey& m, const PartitionKey& n) {
  if (m.size() != n.size() || degree(m) != degree(n))
    throw std::invalid_argument("dominance order needs equal length and total degree");
  long sm = 0, sn = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    sm += m[i];
    sn += n[i];
    if (sm > sn) return false;
  }
  return true;
}

bool support_ok(const Weight& n) {
  long tail = 0;
  for (auto it = n.rbegin(); it != n.rend(); ++it) {
    tail += *it;
    if (tail < 0) return false;
  }
  return true;
}

bool is_sorted_partition(const Weight& n) {
  for (std::size_t i = 0; i + 1 < n.size(); ++i)
    if (n[i] < n[i + 1]) return false;
  return n.empty() || n.back() >= 0;
}

PartitionKey sort_descending(Weight n) {
  std::sort(n.begin(), n.end(), std::greater<>());
  return n;
}

Weight add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

long degree(const Weight& n) { return std::accumulate(n.begin(), n.end(), 0L); }

std::vector<MuVector> enumerate_support_mu(const Weight& n) {
  if (!is_sorted_partition(n))
    throw std::invalid_argument("enumerate_support_mu needs n1 >= ... >= nN >= 0");
  const std::size_t N = n.size();
  std::vector<int> tail(N + 1, 0);
  for (std::size_t j = N; j-- > 0;) tail[j] = tail[j + 1] + n[j];
  auto pairs = index_pairs(N);
  std::vector<int> bound;
  for (auto [j, k] : pairs) bound.push_back(tail[j + 1]);

  std::vector<MuVector> out;
  MuVector mu(N);
  // Odometer over the box.
  while (true) {
    if (support_ok(add(n, project_mu(mu)))) out.push_back(mu);
    std::size_t p = 0;
    for (; p < pairs.size(); ++p) {
      if (mu[p] < bound[p]) {
        ++mu[p];
        break;
      }
      mu[p] = 0;
    }
    if (p == pairs.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const MuVector& a, const MuVector& b) {
    return a.total() != b.total() ? a.total() < b.total() : a < b;
  });
  return out;
}

namespace {
void partitions_rec(int remaining, int max_part, std::size_t slots, PartitionKey& cur,
                    std::vector<PartitionKey>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 0; --p) {
    if (static_cast<long>(p) * static_cast<long>(slots) < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<PartitionKey> partitions(int total, std::size_t parts) {
  std::vector<PartitionKey> out;
  if (total < 0 || parts == 0) return out;
  PartitionKey cur;
  partitions_rec(total, total, parts, cur, out);
  return out;
}

}  // namespace cms
