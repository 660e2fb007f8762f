#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cms {

/// Arbitrary-precision rational, always stored in canonical form.
using BigRational = mpq_class;

/// Canonical num/den; den must be nonzero.
BigRational make_rational(long num, long den);
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);

class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Dense polynomial in the formal coupling λ with rational coefficients.
/// Index = power of λ; the zero polynomial has no coefficients.
class LambdaPoly {
public:
  LambdaPoly() = default;
  LambdaPoly(long c) : LambdaPoly(BigRational(c)) {}  // NOLINT(implicit)
  LambdaPoly(const BigRational& c);                   // NOLINT(implicit)
  explicit LambdaPoly(std::vector<BigRational> coeffs);

  /// The monomial c·λ^k.
  static LambdaPoly monomial(const BigRational& c, std::size_t k);
  static LambdaPoly lambda() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRational& leading() const { return c_.back(); }
  BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }
  const std::vector<BigRational>& coeffs() const { return c_; }

  BigRational eval(const BigRational& x) const;
  double eval(double x) const;

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);
  LambdaPoly& operator*=(const BigRational& s);

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over ℚ. Throws std::domain_error for a zero divisor.
  static void divmod(const LambdaPoly& a, const LambdaPoly& b, LambdaPoly& q, LambdaPoly& r);
  /// Monic gcd (zero only if both inputs are zero).
  static LambdaPoly gcd(const LambdaPoly& a, const LambdaPoly& b);

  LambdaPoly monic() const;

private:
  void trim();
  std::vector<BigRational> c_;
};

/// λ(λ−1)⋯(λ−k+1)/k!
LambdaPoly binom_lambda(unsigned k);
/// (−λ)(−λ−1)⋯(−λ−k+1)/k!
LambdaPoly binom_neg_lambda(unsigned k);

/// Reduced rational function num/den of λ with monic denominator.
/// Equal values have identical representations.
class RatFunc {
public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                    // NOLINT(implicit)
  RatFunc(const BigRational& c) : num_(c), den_(1) {}      // NOLINT(implicit)
  RatFunc(LambdaPoly p) : num_(std::move(p)), den_(1) {}   // NOLINT(implicit)
  RatFunc(LambdaPoly num, LambdaPoly den);

  static RatFunc lambda() { return RatFunc(LambdaPoly::lambda()); }

  const LambdaPoly& num() const { return num_; }
  const LambdaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Exact value at λ = x; throws PoleError when den(x) = 0.
  BigRational eval(const BigRational& x) const;

  RatFunc operator-() const;
  /// Multiplication by a constant; no gcd work needed.
  RatFunc scaled(const BigRational& s) const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void normalize();
  LambdaPoly num_;
  LambdaPoly den_;
};

/// Human-readable form in the variable name `var`, e.g. "2*l/(1 + l)".
std::string to_string(const LambdaPoly& p, std::string_view var = "l");
std::string to_string(const RatFunc& f, std::string_view var = "l");

}  // namespace cms
