#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hopfint {

using Rational = mpq_class;

std::string to_string(const Rational& r);

// Dense univariate polynomial in q, ascending coefficients, never with a
// trailing zero coefficient. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: integers embed as constants
  Poly(const Rational& c);  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  static Poly q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest power with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  std::size_t term_count() const;
  bool is_monic_monomial() const;
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Multiply or divide by q^k. shift_down requires valuation() >= k.
  Poly shift_up(int k) const;
  Poly shift_down(int k) const;

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);
  Poly monic() const;

  Rational eval(const Rational& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Element of Q(q) in canonical form: gcd(num, den) = 1, den monic, zero is
// 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT

  static RatFunc normalize(Poly num, Poly den);
  static RatFunc q() { return RatFunc(Poly::q()); }
  // q^k for any integer k.
  static RatFunc q_pow(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  // Only meaningful when is_constant().
  Rational constant() const { return num_.coeff(0); }

  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws PoleAtPoint when the denominator vanishes at q0.
  Rational eval(const Rational& q0) const;

  // Reduced fraction of expanded polynomials, e.g. "(1 - q^2)/(1 + q^2)".
  std::string to_string() const;
  // True when to_string() needs parentheses to act as a product factor.
  bool needs_parens_as_factor() const;
  // Single-term numerator with a negative coefficient.
  bool has_negative_sign() const;

 private:
  RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce_monomial_den();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& r);

// Free-function spellings of the arithmetic, mirroring the operation names of
// the library interface.
RatFunc rf_normalize(const Poly& num, const Poly& den);
Rational rf_eval(const RatFunc& x, const Rational& q0);

}  // namespace hopfint
