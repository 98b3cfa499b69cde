#pragma once

// Exact arithmetic in Q[q, q^-1] and its fraction field Q(q).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qalt {

using Rational = mpq_class;

/// Raised when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite sum of c_k q^k with rational c_k and integer k.
///
/// Stored densely between the lowest and highest nonzero exponent; the first
/// and last stored coefficients are never zero and the zero polynomial stores
/// nothing.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Rational c);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}  // NOLINT

  static LaurentPolynomial monomial(Rational c, int exponent);
  static LaurentPolynomial q() { return monomial(1, 1); }
  static LaurentPolynomial from_terms(const std::map<int, Rational>& terms);
  /// Coefficients of q^low, q^(low+1), ...; zeros at either end are trimmed.
  static LaurentPolynomial from_dense(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest exponent with nonzero coefficient. Undefined for zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int exponent) const;
  const Rational& leading_coeff() const { return coeffs_.back(); }
  const Rational& trailing_coeff() const { return coeffs_.front(); }
  const std::vector<Rational>& dense() const { return coeffs_; }
  std::map<int, Rational> terms() const;

  LaurentPolynomial shifted(int by) const;
  Rational evaluate(const Rational& t) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  LaurentPolynomial operator-() const;
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Text form such as "1/2*q^-1-3+q^2"; "0" for zero.
  std::string to_string() const;
  static LaurentPolynomial parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Element of K = Q(q) in canonical form num/den.
///
/// The denominator is an ordinary polynomial with nonzero constant term and
/// leading coefficient 1, coprime to the numerator; the numerator carries any
/// power of q. Structural equality is therefore field equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}     // NOLINT
  RationalFunction(LaurentPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Reduces num/den to canonical form. Throws std::domain_error on den = 0.
  static RationalFunction normalize(LaurentPolynomial num, LaurentPolynomial den);
  static RationalFunction q() { return RationalFunction(LaurentPolynomial::q()); }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)", e.g. "(q^2-1)/(1)".
  std::string to_string() const;
  static RationalFunction parse(std::string_view text);

 private:
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den, int /*trusted*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

/// Nonzero rational value substituted for q.
class SpecializationPoint {
 public:
  explicit SpecializationPoint(Rational t);
  const Rational& value() const { return t_; }
  std::string to_string() const { return t_.get_str(); }
  friend bool operator==(const SpecializationPoint&, const SpecializationPoint&) = default;

 private:
  Rational t_;
};

/// f(t). Throws PoleError when the denominator vanishes at t.
Rational specialize(const RationalFunction& f, const SpecializationPoint& t);

/// Monic gcd of two polynomials (nonnegative exponents only); gcd(0, 0) = 0.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Quotient and remainder of polynomial division; both inputs must have
/// nonnegative exponents and b must be nonzero.
std::pair<LaurentPolynomial, LaurentPolynomial> polynomial_divmod(const LaurentPolynomial& a,
                                                                  const LaurentPolynomial& b);

// Frequently used constants.
const RationalFunction& q_minus_qinv();  // q - q^-1
const RationalFunction& q_plus_qinv();   // q + q^-1

}  // namespace qalt
