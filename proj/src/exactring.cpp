#include "exactring.hpp"

#include <algorithm>
#include <sstream>

namespace cms {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  // Decimal notation "1.25" / "-0.5" is parsed exactly.
  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    std::string intpart = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !intpart.empty() && intpart[0] == '-';
    if (neg || (!intpart.empty() && intpart[0] == '+')) intpart.erase(0, 1);
    if (intpart.empty()) intpart = "0";
    if (frac.empty() && intpart.empty()) throw bad();
    for (char c : intpart + frac)
      if (c < '0' || c > '9') throw bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class whole(intpart + frac, 10);
    BigRational q(whole, scale);
    q.canonicalize();
    return neg ? BigRational(-q) : q;
  }
  BigRational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- LambdaPoly

LambdaPoly::LambdaPoly(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

LambdaPoly::LambdaPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::monomial(const BigRational& c, std::size_t k) {
  if (c == 0) return {};
  LambdaPoly p;
  p.c_.assign(k + 1, BigRational(0));
  p.c_[k] = c;
  return p;
}

void LambdaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational LambdaPoly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double LambdaPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return LambdaPoly(std::move(out));
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) { return *this = *this * o; }

LambdaPoly& LambdaPoly::operator*=(const BigRational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

void LambdaPoly::divmod(const LambdaPoly& a, const LambdaPoly& b, LambdaPoly& q, LambdaPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  q = LambdaPoly();
  if (a.degree() < b.degree()) return;
  std::vector<BigRational> qc(a.degree() - b.degree() + 1, BigRational(0));
  const BigRational& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = r.degree() - b.degree();
    BigRational f = r.leading() / lb;
    qc[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q = LambdaPoly(std::move(qc));
}

LambdaPoly LambdaPoly::monic() const {
  if (is_zero()) return {};
  LambdaPoly r = *this;
  r *= BigRational(1) / leading();
  return r;
}

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly primitive_part(const LambdaPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_num() * (l / c.get_den()));
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b (deg a >= deg b), leaves result in a.
void pseudo_rem(IntPoly& a, const IntPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
}

}  // namespace

LambdaPoly LambdaPoly::gcd(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return LambdaPoly(1);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    pseudo_rem(x, y);
    std::swap(x, y);
    if (!y.empty() && y.size() == 1) return LambdaPoly(1);
  }
  std::vector<BigRational> out;
  out.reserve(x.size());
  for (auto& c : x) out.emplace_back(c);
  return LambdaPoly(std::move(out)).monic();
}

LambdaPoly binom_lambda(unsigned k) {
  LambdaPoly p(1);
  for (unsigned i = 0; i < k; ++i)
    p *= LambdaPoly(std::vector<BigRational>{BigRational(-static_cast<long>(i)), BigRational(1)});
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  p *= BigRational(1, 1) / BigRational(f);
  return p;
}

LambdaPoly binom_neg_lambda(unsigned k) {
  LambdaPoly p(1);
  for (unsigned i = 0; i < k; ++i)
    p *= LambdaPoly(std::vector<BigRational>{BigRational(-static_cast<long>(i)), BigRational(-1)});
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  p *= BigRational(1, 1) / BigRational(f);
  return p;
}

// ------------------------------------------------------------------ RatFunc

RatFunc::RatFunc(LambdaPoly num, LambdaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LambdaPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    LambdaPoly g = LambdaPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      LambdaPoly q, r;
      LambdaPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      LambdaPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  if (den_.leading() != 1) {
    BigRational s = BigRational(1) / den_.leading();
    num_ *= s;
    den_ *= s;
  }
}

BigRational RatFunc::eval(const BigRational& x) const {
  BigRational d = den_.eval(x);
  if (d == 0) throw PoleError("rational function has a pole at lambda = " + to_string(x));
  return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::scaled(const BigRational& s) const {
  if (s == 0) return RatFunc();
  RatFunc r = *this;
  r.num_ *= s;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    if (num_.is_zero()) den_ = LambdaPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  if (is_zero()) return *this;
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

// ----------------------------------------------------------------- printing

std::string to_string(const LambdaPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    BigRational c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    BigRational a = neg ? BigRational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << to_string(a);
      continue;
    }
    if (a != 1) os << to_string(a) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::string to_string(const RatFunc& f, std::string_view var) {
  auto wrap = [&](const LambdaPoly& p) {
    std::string s = to_string(p, var);
    bool simple = p.coeffs().size() <= 1 ||
                  (std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                 [](const BigRational& c) { return c != 0; }) == 1 &&
                   s.find('/') == std::string::npos);
    return simple ? s : "(" + s + ")";
  };
  if (f.den() == LambdaPoly(1)) return to_string(f.num(), var);
  // Display with integer coefficients in the denominator.
  mpz_class l = 1;
  for (const auto& c : f.den().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  LambdaPoly num = f.num(), den = f.den();
  num *= BigRational(l);
  den *= BigRational(l);
  return wrap(num) + "/" + wrap(den);
}

}  // namespace cms
