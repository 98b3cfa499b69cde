#include "qalt/qfield.hpp"

#include <algorithm>
#include <cctype>

namespace qalt {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

// Dense polynomial helpers; index i is the coefficient of q^i.
using Dense = std::vector<Rational>;

void trim_back(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by monic-normalized division by b (b nonzero, trimmed).
void dense_rem(Dense& a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Rational& lead = b.back();
  Rational factor;
  while (a.size() > db && !a.empty()) {
    factor = a.back() / lead;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim_back(a);
  }
}

Dense dense_gcd(Dense a, Dense b) {
  trim_back(a);
  trim_back(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    dense_rem(a, b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

LaurentPolynomial laurent_from_dense(int low, Dense coeffs) {
  return LaurentPolynomial::from_dense(low, std::move(coeffs));
}

// Strips the q-power: p = q^k * rest with rest(0) != 0.
std::pair<int, LaurentPolynomial> split_power(const LaurentPolynomial& p) {
  return {p.low_degree(), p.shifted(-p.low_degree())};
}

// Exact quotient of polynomials known to divide.
LaurentPolynomial exact_quotient(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto [quot, rem] = polynomial_divmod(a, b);
  if (!rem.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return quot;
}

// a / g for a Laurent polynomial a and a polynomial g dividing it.
LaurentPolynomial laurent_quotient(const LaurentPolynomial& a, const LaurentPolynomial& g) {
  if (g.high_degree() == 0) return a * Rational(1 / g.trailing_coeff());
  auto [k, rest] = split_power(a);
  return exact_quotient(rest, g).shifted(k);
}

LaurentPolynomial laurent_gcd_with(const LaurentPolynomial& a, const LaurentPolynomial& den) {
  if (den.high_degree() == 0 || a.is_monomial()) return LaurentPolynomial(1);
  return polynomial_gcd(split_power(a).second, den);
}

}  // namespace

// ---------------------------------------------------------------- Laurent

LaurentPolynomial::LaurentPolynomial(Rational c) {
  c.canonicalize();
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPolynomial LaurentPolynomial::monomial(Rational c, int exponent) {
  LaurentPolynomial p(std::move(c));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::map<int, Rational>& terms) {
  if (terms.empty()) return {};
  const int low = terms.begin()->first;
  const int high = terms.rbegin()->first;
  Dense coeffs(static_cast<std::size_t>(high - low + 1));
  for (const auto& [e, c] : terms) {
    auto& slot = coeffs[static_cast<std::size_t>(e - low)];
    slot = c;
    slot.canonicalize();
  }
  return from_dense(low, std::move(coeffs));
}

LaurentPolynomial LaurentPolynomial::from_dense(int low, std::vector<Rational> coeffs) {
  LaurentPolynomial p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPolynomial::trim() {
  trim_back(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

bool LaurentPolynomial::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

const Rational& LaurentPolynomial::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return zero_rational();
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Rational> LaurentPolynomial::terms() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

Rational LaurentPolynomial::evaluate(const Rational& t) const {
  if (is_zero()) return 0;
  if (t == 0 && low_ < 0) throw PoleError("Laurent polynomial evaluated at q = 0");
  // Horner on the dense part, then scale by t^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  if (low_ != 0) {
    Rational power = 1;
    const Rational base = low_ > 0 ? t : Rational(1 / t);
    for (int i = 0; i < std::abs(low_); ++i) power *= base;
    acc *= power;
  }
  return acc;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int low = std::min(low_, o.low_);
  const int high = std::max(high_degree(), o.high_degree());
  if (low < low_ || high > high_degree()) {
    Dense grown(static_cast<std::size_t>(high - low + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      grown[static_cast<std::size_t>(low_ - low) + i] = std::move(coeffs_[i]);
    coeffs_ = std::move(grown);
    low_ = low;
  }
  const auto offset = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[offset + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  return *this += -o;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Dense out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return laurent_from_dense(a.low_ + b.low_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    std::string term;
    if (e == 0) {
      term = c.get_str();
    } else {
      const std::string power = e == 1 ? "q" : "q^" + std::to_string(e);
      if (c == 1) term = power;
      else if (c == -1) term = "-" + power;
      else term = c.get_str() + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  std::map<int, Rational> terms;
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("malformed Laurent polynomial: " + s); };
  auto read_int = [&](std::string& into) {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail();
    into = s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty() || pos != 0) {
      fail();
    }
    Rational coeff = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num;
      read_int(num);
      std::string lit = num;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den;
        read_int(den);
        lit += "/" + den;
      }
      coeff = Rational(lit);
      coeff.canonicalize();
      if (pos < s.size() && s[pos] == '*') ++pos;
      else if (pos < s.size() && s[pos] == 'q') fail();
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e;
        read_int(e);
        exponent = std::stoi(e);
      }
    }
    terms[exponent] += sign * coeff;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail();
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return from_terms(terms);
}

std::pair<LaurentPolynomial, LaurentPolynomial> polynomial_divmod(const LaurentPolynomial& a,
                                                                  const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!a.is_zero() && a.low_degree() < 0) || b.low_degree() < 0)
    throw std::invalid_argument("polynomial_divmod expects nonnegative exponents");
  if (a.is_zero()) return {{}, {}};
  Dense rem(static_cast<std::size_t>(a.high_degree() + 1));
  for (std::size_t i = 0; i < a.dense().size(); ++i)
    rem[static_cast<std::size_t>(a.low_degree()) + i] = a.dense()[i];
  Dense den(static_cast<std::size_t>(b.high_degree() + 1));
  for (std::size_t i = 0; i < b.dense().size(); ++i)
    den[static_cast<std::size_t>(b.low_degree()) + i] = b.dense()[i];
  const std::size_t db = den.size() - 1;
  if (rem.size() <= db) return {{}, a};
  Dense quot(rem.size() - db);
  const Rational& lead = den.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] / lead;
    const std::size_t shift = k - db;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= factor * den[i];
    quot[shift] = std::move(factor);
  }
  rem.resize(db);
  return {laurent_from_dense(0, std::move(quot)), laurent_from_dense(0, std::move(rem))};
}

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto to_dense = [](const LaurentPolynomial& p) {
    if (p.is_zero()) return Dense{};
    if (p.low_degree() < 0) throw std::invalid_argument("polynomial_gcd expects nonnegative exponents");
    Dense d(static_cast<std::size_t>(p.high_degree() + 1));
    for (std::size_t i = 0; i < p.dense().size(); ++i)
      d[static_cast<std::size_t>(p.low_degree()) + i] = p.dense()[i];
    return d;
  };
  return laurent_from_dense(0, dense_gcd(to_dense(a), to_dense(b)));
}

// -------------------------------------------------------- RationalFunction

RationalFunction RationalFunction::normalize(LaurentPolynomial num, LaurentPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return {};
  const int shift = den.low_degree();
  den = den.shifted(-shift);
  num = num.shifted(-shift);
  if (den.high_degree() == 0) {
    const Rational inv = 1 / den.trailing_coeff();
    return RationalFunction(num * inv, LaurentPolynomial(1), 0);
  }
  const LaurentPolynomial g = laurent_gcd_with(num, den);
  if (g.high_degree() > 0) {
    num = laurent_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational inv = 1 / den.leading_coeff();
  num *= inv;
  den *= inv;
  return RationalFunction(std::move(num), std::move(den), 0);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  auto [k, rest] = split_power(num_);
  const Rational inv = 1 / rest.leading_coeff();
  return RationalFunction((den_ * inv).shifted(-k), rest * inv, 0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const bool mine_one = den_.is_one();
  const bool other_one = o.den_.is_one();
  if (mine_one && other_one) {
    num_ += o.num_;
    return *this;
  }
  // a + c/d with polynomial a: gcd(a d + c, d) = gcd(c, d) = 1.
  if (mine_one) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (other_one) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = normalize(num_ + o.num_, den_);
    return *this;
  }
  const LaurentPolynomial g = polynomial_gcd(den_, o.den_);
  if (g.high_degree() == 0) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = LaurentPolynomial(1);
    return *this;
  }
  const LaurentPolynomial mine_cof = exact_quotient(den_, g);
  const LaurentPolynomial other_cof = exact_quotient(o.den_, g);
  *this = normalize(num_ * other_cof + o.num_ * mine_cof, mine_cof * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel: (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1)).
  const LaurentPolynomial g1 = laurent_gcd_with(num_, o.den_);
  const LaurentPolynomial g2 = laurent_gcd_with(o.num_, den_);
  LaurentPolynomial a = g1.high_degree() > 0 ? laurent_quotient(num_, g1) : num_;
  LaurentPolynomial c = g2.high_degree() > 0 ? laurent_quotient(o.num_, g2) : o.num_;
  LaurentPolynomial b = g2.high_degree() > 0 ? exact_quotient(den_, g2) : den_;
  LaurentPolynomial d = g1.high_degree() > 0 ? exact_quotient(o.den_, g1) : o.den_;
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, 0);
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() >= 2 && s.front() == '(') {
    const std::size_t close = s.find(')');
    if (close == std::string::npos || close + 2 >= s.size() || s[close + 1] != '/' ||
        s[close + 2] != '(' || s.back() != ')')
      throw std::invalid_argument("malformed rational function: " + s);
    return normalize(LaurentPolynomial::parse(s.substr(1, close - 1)),
                     LaurentPolynomial::parse(s.substr(close + 3, s.size() - close - 4)));
  }
  return RationalFunction(LaurentPolynomial::parse(s));
}

// ------------------------------------------------------------ specialize

SpecializationPoint::SpecializationPoint(Rational t) : t_(std::move(t)) {
  t_.canonicalize();
  if (t_ == 0) throw std::invalid_argument("specialization point must be nonzero");
}

Rational specialize(const RationalFunction& f, const SpecializationPoint& t) {
  const Rational den = f.denominator().evaluate(t.value());
  if (den == 0)
    throw PoleError("pole of " + f.to_string() + " at q = " + t.to_string());
  return f.numerator().evaluate(t.value()) / den;
}

const RationalFunction& q_minus_qinv() {
  static const RationalFunction v(LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::monomial(1, -1));
  return v;
}

const RationalFunction& q_plus_qinv() {
  static const RationalFunction v(LaurentPolynomial::monomial(1, 1) + LaurentPolynomial::monomial(1, -1));
  return v;
}

}  // namespace qalt
