#include "qsa/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qsa {

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t RatPoly::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

RatPoly RatPoly::shifted_down(std::size_t k) const {
  RatPoly r;
  if (k >= c_.size()) return r;
  r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  return r;
}

RatPoly RatPoly::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  RatPoly r;
  r.c_.assign(k, mpq_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

RatPoly RatPoly::scaled(const mpq_class& s) const {
  if (s == 0) return {};
  RatPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& quo, RatPoly& rem) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  rem = a;
  quo = RatPoly();
  if (a.degree() < b.degree()) return;
  quo.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpq_class(0));
  const mpq_class& lb = b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    mpq_class f = rem.lead() / lb;
    quo.c_[shift] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem.c_[shift + j] -= f * b.c_[j];
    rem.trim();
  }
  quo.trim();
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(mpq_class(1) / a.lead());
}

mpq_class RatPoly::primitive_factor() const {
  if (is_zero()) return mpq_class(1);
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : c_) {
    mpz_class n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  if (lead() < 0) f = -f;
  return f;
}

std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : den_(RatPoly::constant(1)) {}

Scalar::Scalar(long v) : num_(RatPoly::constant(v)), den_(RatPoly::constant(1)) {}

Scalar::Scalar(const mpq_class& v) : num_(RatPoly::constant(v)), den_(RatPoly::constant(1)) {}

Scalar::Scalar(long shift, RatPoly num, RatPoly den, bool trusted)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (!trusted) normalize();
}

Scalar Scalar::fraction(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  return Scalar(0, num, den, false);
}

Scalar Scalar::q_power(long k) {
  return Scalar(k, RatPoly::constant(1), RatPoly::constant(1), true);
}

void Scalar::normalize() {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = RatPoly::constant(1);
    return;
  }
  const std::size_t vn = num_.valuation();
  const std::size_t vd = den_.valuation();
  if (vn) num_ = num_.shifted_down(vn);
  if (vd) den_ = den_.shifted_down(vd);
  shift_ += static_cast<long>(vn) - static_cast<long>(vd);
  if (den_.degree() > 0) {
    RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      RatPoly q, r;
      RatPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      RatPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  mpq_class f = den_.primitive_factor();
  if (f != 1) {
    den_ = den_.scaled(f);
    num_ = num_.scaled(f);
  }
}

Scalar Scalar::canonical() const {
  Scalar s(shift_, num_, den_, false);
  return s;
}

std::optional<long> Scalar::as_q_power() const {
  if (is_zero()) throw ArithmeticError("as_q_power of zero");
  if (num_.is_one() && den_.is_one()) return shift_;
  return std::nullopt;
}

Scalar Scalar::operator-() const {
  if (is_zero()) return *this;
  return Scalar(shift_, -num_, den_, true);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  mpq_class f = num_.primitive_factor();
  return Scalar(-shift_, den_.scaled(f), num_.scaled(f), true);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.den_.is_one() && b.den_.is_one()) {
    return Scalar(a.shift_ + b.shift_, a.num_ * b.num_, RatPoly::constant(1), true);
  }
  return Scalar(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_, false);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long s = std::min(a.shift_, b.shift_);
  const auto ua = static_cast<std::size_t>(a.shift_ - s);
  const auto ub = static_cast<std::size_t>(b.shift_ - s);
  if (a.den_ == b.den_) {
    RatPoly n = a.num_.shifted_up(ua) + b.num_.shifted_up(ub);
    if (n.is_zero()) return Scalar();
    if (a.den_.is_one()) {
      const std::size_t v = n.valuation();
      return Scalar(s + static_cast<long>(v), n.shifted_down(v), a.den_, true);
    }
    return Scalar(s, std::move(n), a.den_, false);
  }
  RatPoly n = (a.num_ * b.den_).shifted_up(ua) + (b.num_ * a.den_).shifted_up(ub);
  return Scalar(s, std::move(n), a.den_ * b.den_, false);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

RatPoly Scalar::plain_numerator() const {
  return shift_ > 0 ? num_.shifted_up(static_cast<std::size_t>(shift_)) : num_;
}

RatPoly Scalar::plain_denominator() const {
  return shift_ < 0 ? den_.shifted_up(static_cast<std::size_t>(-shift_)) : den_;
}

// ---------------------------------------------------------------- printing

namespace {

std::string term_string(const mpq_class& c, long power) {
  std::ostringstream os;
  if (power == 0) {
    os << c.get_str();
    return os.str();
  }
  if (c == -1) {
    os << '-';
  } else if (c != 1) {
    os << c.get_str() << '*';
  }
  os << 'q';
  if (power != 1) os << '^' << power;
  return os.str();
}

}  // namespace

std::string to_string(const RatPoly& p, long shift) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const mpq_class& c = p[i];
    if (c == 0) continue;
    std::string t = term_string(c, shift + static_cast<long>(i));
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

bool Scalar::prints_negative() const {
  return !is_zero() && num_[0] < 0;
}

bool Scalar::is_atomic() const {
  if (!den_.is_one()) return false;
  std::size_t nonzero = 0;
  for (const auto& c : num_.coeffs()) nonzero += (c != 0);
  return nonzero <= 1;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  const std::string n = qsa::to_string(num_, shift_);
  if (den_.is_one()) return n;
  std::size_t n_terms = 0;
  for (const auto& c : num_.coeffs()) n_terms += (c != 0);
  std::string out = n_terms > 1 ? "(" + n + ")" : n;
  // A lone rational coefficient like 3/2 must be grouped before another '/'.
  if (n_terms == 1 && num_[0].get_den() != 1) out = "(" + n + ")";
  std::size_t d_terms = 0;
  for (const auto& c : den_.coeffs()) d_terms += (c != 0);
  const std::string d = qsa::to_string(den_);
  out += "/";
  out += d_terms > 1 ? "(" + d + ")" : d;
  return out;
}

}  // namespace qsa
