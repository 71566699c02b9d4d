#include "hopfint/scalars.hpp"

#include <algorithm>
#include <sstream>

#include "hopfint/errors.hpp"

namespace hopfint {

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  }
  return 0;
}

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) != 0; }));
}

bool Poly::is_monic_monomial() const {
  return !c_.empty() && c_.back() == 1 && term_count() == 1;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::shift_up(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shift_down(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = a;
  Poly quo;
  if (a.degree() < b.degree()) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                Rational(0));
  const Rational& lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational f = rem.leading() / lb;
    quo.c_[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      rem.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
    }
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Poly r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    Rational a = abs(c_[k]);
    bool neg = sgn(c_[k]) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.term_count() == 1) {
    Rational lc = den.leading();
    int k = den.degree();
    if (lc != 1) num *= Rational(1 / lc);
    RatFunc r(std::move(num), Poly::monomial(1, k), 0);
    r.reduce_monomial_den();
    return r;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  Rational lc = den.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::q_pow(int k) {
  if (k >= 0) return RatFunc(Poly::monomial(1, k));
  return RatFunc(Poly(1), Poly::monomial(1, -k), 0);
}

void RatFunc::reduce_monomial_den() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  int s = std::min(num_.valuation(), den_.degree());
  if (s > 0) {
    num_ = num_.shift_down(s);
    den_ = den_.shift_down(s);
  }
}

bool RatFunc::is_one() const {
  return den_.degree() == 0 && num_.degree() == 0 && num_.leading() == 1;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Poly n = den_;
  Poly d = num_;
  Rational lc = d.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  return RatFunc(std::move(n), std::move(d), 0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  bool mono_a = den_.is_monic_monomial();
  bool mono_b = o.den_.is_monic_monomial();
  if (mono_a && mono_b) {
    int ka = den_.degree();
    int kb = o.den_.degree();
    if (ka == kb) {
      num_ += o.num_;
    } else if (ka > kb) {
      num_ += o.num_.shift_up(ka - kb);
    } else {
      num_ = num_.shift_up(kb - ka) + o.num_;
      den_ = o.den_;
    }
    reduce_monomial_den();
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = Poly(1);
      return *this;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
    return *this;
  }
  Poly g = Poly::gcd(den_, o.den_);
  Poly da = Poly::divmod(den_, g).first;
  Poly db = Poly::divmod(o.den_, g).first;
  return *this = normalize(num_ * db + o.num_ * da, da * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  bool mono_a = den_.is_monic_monomial();
  bool mono_b = o.den_.is_monic_monomial();
  if (mono_a && mono_b) {
    num_ *= o.num_;
    int k = den_.degree() + o.den_.degree();
    den_ = Poly::monomial(1, k);
    if (k > 0) reduce_monomial_den();
    return *this;
  }
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly na = g1.degree() > 0 ? Poly::divmod(num_, g1).first : num_;
  Poly db = g1.degree() > 0 ? Poly::divmod(o.den_, g1).first : o.den_;
  Poly nb = g2.degree() > 0 ? Poly::divmod(o.num_, g2).first : o.num_;
  Poly da = g2.degree() > 0 ? Poly::divmod(den_, g2).first : den_;
  num_ = na * nb;
  den_ = da * db;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational RatFunc::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (sgn(d) == 0) {
    throw PoleAtPoint(to_string() + " at q = " + q0.get_str());
  }
  return num_.eval(q0) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

bool RatFunc::needs_parens_as_factor() const {
  return den_.degree() == 0 && num_.term_count() > 1;
}

bool RatFunc::has_negative_sign() const {
  return num_.term_count() == 1 && sgn(num_.leading()) < 0;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) {
  return os << r.to_string();
}

RatFunc rf_normalize(const Poly& num, const Poly& den) {
  return RatFunc::normalize(num, den);
}

Rational rf_eval(const RatFunc& x, const Rational& q0) { return x.eval(q0); }

}  // namespace hopfint
