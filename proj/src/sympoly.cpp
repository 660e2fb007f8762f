#include "sympoly.hpp"

#include <algorithm>
#include <cmath>

namespace cms {

RatFunc SymPoly::coeff(const PartitionKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RatFunc() : it->second;
}

void SymPoly::add_term(const PartitionKey& key, const RatFunc& c) {
  if (c.is_zero()) return;
  if (key.size() != n_) throw std::invalid_argument("term key has wrong length");
  for (std::size_t i = 0; i + 1 < key.size(); ++i)
    if (key[i] < key[i + 1]) throw std::invalid_argument("term key is not weakly decreasing");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.n_ != n_ || o.basis_ != basis_) {
    if (o.n_ != n_) throw std::invalid_argument("adding symmetric polynomials in different N");
    return *this += convert_basis(o, basis_);
  }
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) { return *this += o * RatFunc(-1); }

SymPoly& SymPoly::operator*=(const RatFunc& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  if (a.n_ != b.n_) return false;
  if (a.basis_ != b.basis_) return convert_basis(a, Basis::M).terms_ == convert_basis(b, Basis::M).terms_;
  return a.terms_ == b.terms_;
}

BigRational multiplicity_factor(const PartitionKey& key) {
  mpz_class f = 1;
  std::size_t i = 0;
  while (i < key.size()) {
    std::size_t j = i;
    while (j < key.size() && key[j] == key[i]) ++j;
    mpz_class m;
    mpz_fac_ui(m.get_mpz_t(), j - i);
    f *= m;
    i = j;
  }
  return BigRational(f);
}

SymPoly convert_basis(const SymPoly& p, Basis target) {
  if (p.basis() == target) return p;
  SymPoly out(p.size(), target);
  for (const auto& [k, c] : p.terms()) {
    const BigRational f = multiplicity_factor(k);
    // S_k = f m_k.
    out.add_term(k, target == Basis::M ? c.scaled(f) : c.scaled(BigRational(1) / f));
  }
  return out;
}

SymPoly specialize(const SymPoly& p, const BigRational& lambda0) {
  SymPoly out(p.size(), p.basis());
  for (const auto& [k, c] : p.terms()) out.add_term(k, RatFunc(c.eval(lambda0)));
  return out;
}

std::vector<std::vector<int>> distinct_permutations(const PartitionKey& key) {
  std::vector<int> v(key);
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

NumericSymPoly::NumericSymPoly(const SymPoly& p, const BigRational& lambda0) : n_(p.size()) {
  const SymPoly m = convert_basis(p, Basis::M);
  for (const auto& [k, c] : m.terms()) {
    const double v = c.eval(lambda0).get_d();
    for (auto& e : distinct_permutations(k)) monomials_.emplace_back(std::move(e), v);
  }
}

std::complex<double> NumericSymPoly::operator()(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("evaluate: wrong number of angles");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : monomials_) {
    double phase = 0.0;
    for (std::size_t i = 0; i < n_; ++i) phase += e[i] * x[i];
    acc += c * std::polar(1.0, phase);
  }
  return acc;
}

std::complex<double> evaluate(const SymPoly& p, std::span<const double> x, const BigRational& lambda0) {
  return NumericSymPoly(p, lambda0)(x);
}

SymPoly leading_monic_normalize(const SymPoly& p, const PartitionKey& n) {
  SymPoly m = convert_basis(p, Basis::M);
  const RatFunc lead = m.coeff(n);
  if (lead.is_zero()) throw std::domain_error("leading coefficient on m_n is zero");
  const RatFunc inv = RatFunc(1) / lead;
  return m * inv;
}

std::map<std::vector<int>, RatFunc> expand_monomials(const SymPoly& p) {
  std::map<std::vector<int>, RatFunc> out;
  const SymPoly m = convert_basis(p, Basis::M);
  for (const auto& [k, c] : m.terms())
    for (auto& e : distinct_permutations(k)) out.emplace(std::move(e), c);
  return out;
}

namespace {

using MonoMap = std::map<std::vector<int>, RatFunc>;

void accumulate(MonoMap& m, const std::vector<int>& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// (z_j+z_k)/(z_j−z_k) · q for q antisymmetric under j↔k.
MonoMap cross_term(const MonoMap& q, std::size_t j, std::size_t k) {
  MonoMap quotient;
  for (const auto& [a, c] : q) {
    if (a[j] == a[k]) throw std::logic_error("apply_hprime: antisymmetric part has a j=k diagonal term");
    if (a[j] < a[k]) {
      std::vector<int> partner = a;
      std::swap(partner[j], partner[k]);
      auto it = q.find(partner);
      if (it == q.end() || !(it->second == -c))
        throw std::logic_error("apply_hprime: division by (z_j - z_k) is not exact");
      continue;
    }
    // (z_j^d − z_k^d)/(z_j − z_k) = Σ_{t<d} z_j^{d−1−t} z_k^t, times (z_j z_k)^{a_k}.
    const int d = a[j] - a[k];
    std::vector<int> e = a;
    for (int t = 0; t < d; ++t) {
      e[j] = a[k] + d - 1 - t;
      e[k] = a[k] + t;
      accumulate(quotient, e, c);
    }
  }
  MonoMap out;
  for (const auto& [a, c] : quotient) {
    std::vector<int> e = a;
    ++e[j];
    accumulate(out, e, c);
    e = a;
    ++e[k];
    accumulate(out, e, c);
  }
  return out;
}

}  // namespace

SymPoly apply_hprime(const SymPoly& p) {
  const std::size_t N = p.size();
  const MonoMap f = expand_monomials(p);

  MonoMap result;
  for (const auto& [a, c] : f) {
    long s = 0;
    for (int v : a) s += static_cast<long>(v) * v;
    accumulate(result, a, c.scaled(BigRational(s)));
  }
  const RatFunc lam = RatFunc::lambda();
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j + 1; k < N; ++k) {
      MonoMap q;
      for (const auto& [a, c] : f)
        if (a[j] != a[k]) accumulate(q, a, c.scaled(BigRational(a[j] - a[k])));
      for (const auto& [a, c] : cross_term(q, j, k)) accumulate(result, a, c * lam);
    }
  }

  SymPoly out(N, Basis::M);
  for (const auto& [a, c] : result) {
    PartitionKey key = sort_descending(a);
    auto it = result.find(key);
    if (it == result.end() || !(it->second == c))
      throw std::logic_error("apply_hprime: result is not symmetric");
    if (key == a) out.add_term(key, c);
  }
  return out;
}

}  // namespace cms
