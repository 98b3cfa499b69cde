#include <doctest.h>

#include <random>
#include <set>

#include "qalt/hecke.hpp"

using namespace qalt;

namespace doctest {
template <>
struct StringMaker<HeckeElement> {
  static String convert(const HeckeElement& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<RationalFunction> {
  static String convert(const RationalFunction& f) { return f.to_string().c_str(); }
};
}  // namespace doctest

namespace {

const RationalFunction& a_coef() {
  static const RationalFunction c = q_minus_qinv();
  return c;
}

HeckeElement one(int r) { return HeckeElement::identity(r); }
HeckeElement T(int r, int i) { return generator(r, i); }
HeckeElement Tp(int r, int i) { return tprime(r, i); }
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

// Product of transpositions composed as functions, independent of the library.
Permutation compose_letters(int r, const std::vector<int>& letters) {
  Permutation p(r);
  for (int k = 0; k < r; ++k) p[k] = k;
  for (int a : letters) {
    // (p * s_a)(x) = p(s_a(x))
    Permutation next = p;
    for (int x = 0; x < r; ++x) {
      int sx = x == a - 1 ? a : x == a ? a - 1 : x;
      next[x] = p[sx];
    }
    p = next;
  }
  return p;
}

RationalFunction random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-3, 3), e(-2, 2);
  RationalFunction c = RationalFunction(LaurentPolynomial::monomial(small(rng), e(rng)));
  if (rng() % 3 == 0) c /= q_plus_qinv();
  return c;
}

HeckeElement random_element(int r, std::mt19937_64& rng, int terms) {
  const auto& basis = HeckeBasis::of(r);
  HeckeElement x(r);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int k = 0; k < terms; ++k) x.add_to(pick(rng), random_coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("word_to_permutation examples") {
  CHECK(word_to_permutation(NormalFormWord::identity(4)) == Permutation{0, 1, 2, 3});
  CHECK(word_to_permutation(NormalFormWord({1})) == Permutation{1, 0});
  // s1 s2 s1 is the reversal
  CHECK(word_to_permutation(NormalFormWord({1, 2})) == Permutation{2, 1, 0});
  CHECK_THROWS_AS(NormalFormWord({2}), std::invalid_argument);
  CHECK_THROWS_AS(NormalFormWord({0, -1}), std::invalid_argument);
}

TEST_CASE("normal-form words biject onto S_r with reduced encodings") {
  std::size_t factorial = 1;
  for (int r = 1; r <= 7; ++r) {
    if (r > 1) factorial *= static_cast<std::size_t>(r);
    const auto& basis = HeckeBasis::of(r);
    CHECK(basis.size() == factorial);
    std::set<Permutation> seen;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
      const auto& w = basis.word(idx);
      const Permutation p = compose_letters(r, w.letters());
      CHECK(p == basis.permutation(idx));
      CHECK(permutation_length(p) == w.length());
      CHECK(basis.index(w) == idx);
      seen.insert(p);
    }
    CHECK(seen.size() == factorial);
  }
}

TEST_CASE("multiply examples") {
  CHECK(T(2, 1) * T(2, 1) == a_coef() * T(2, 1) + one(2));
  CHECK(T(3, 1) * (T(3, 2) * T(3, 1)) == T(3, 2) * (T(3, 1) * T(3, 2)));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(4, rng, 5);
    CHECK(one(4) * x == x);
    CHECK(x * one(4) == x);
  }
  CHECK_THROWS_AS(multiply(one(3), one(4)), std::invalid_argument);
  CHECK_THROWS_AS(generator(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(tprime(3, 0), std::invalid_argument);
}

TEST_CASE("length-additive products follow the permutation product") {
  for (int r = 2; r <= 4; ++r) {
    const auto& basis = HeckeBasis::of(r);
    for (std::size_t u = 0; u < basis.size(); ++u) {
      for (std::size_t v = 0; v < basis.size(); ++v) {
        std::vector<int> letters = basis.letters(u);
        letters.insert(letters.end(), basis.letters(v).begin(), basis.letters(v).end());
        const Permutation p = compose_letters(r, letters);
        if (permutation_length(p) != basis.length(u) + basis.length(v)) continue;
        const auto prod = HeckeElement::basis_word(basis.word(u)) * HeckeElement::basis_word(basis.word(v));
        CHECK(prod == HeckeElement::basis_word(basis.word(basis.index_of(p))));
      }
    }
  }
}

TEST_CASE("relations (A1)-(A3) and (A'1)-(A'3) for r <= 6") {
  const RationalFunction c2 = (q_minus_qinv() / q_plus_qinv()) * (q_minus_qinv() / q_plus_qinv());
  for (int r = 2; r <= 6; ++r) {
    for (int i = 1; i < r; ++i) {
      CHECK(T(r, i) * T(r, i) == a_coef() * T(r, i) + one(r));
      CHECK(Tp(r, i) * Tp(r, i) == one(r));
      if (i + 1 < r) {
        CHECK(T(r, i) * T(r, i + 1) * T(r, i) == T(r, i + 1) * T(r, i) * T(r, i + 1));
        const auto lhs = Tp(r, i) * Tp(r, i + 1) * Tp(r, i);
        const auto rhs = Tp(r, i + 1) * Tp(r, i) * Tp(r, i + 1) - c2 * (Tp(r, i) - Tp(r, i + 1));
        CHECK(lhs == rhs);
      }
      for (int j = i + 2; j < r; ++j) {
        CHECK(T(r, i) * T(r, j) == T(r, j) * T(r, i));
        CHECK(Tp(r, i) * Tp(r, j) == Tp(r, j) * Tp(r, i));
      }
    }
  }
}

TEST_CASE("multiply is associative on random triples") {
  std::mt19937_64 rng(2);
  for (int r = 2; r <= 5; ++r) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto x = random_element(r, rng, 3), y = random_element(r, rng, 3),
                 z = random_element(r, rng, 3);
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("tprime examples") {
  const auto t = Tp(2, 1);
  CHECK(t.coeff(NormalFormWord({0})) == -(q_minus_qinv() / q_plus_qinv()));
  CHECK(t.coeff(NormalFormWord({1})) == RationalFunction(2) / q_plus_qinv());
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i < r; ++i) {
      HeckeElement back = q_plus_qinv() * Tp(r, i) + HeckeElement::identity(r, q_minus_qinv());
      back *= RationalFunction(Rational(1, 2));
      CHECK(back == T(r, i));
    }
}

TEST_CASE("goldman involution") {
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i < r; ++i) {
      CHECK(goldman(T(r, i)) == HeckeElement::identity(r, q_minus_qinv()) - T(r, i));
      CHECK(goldman(Tp(r, i)) == -Tp(r, i));
    }
  std::mt19937_64 rng(3);
  for (int r = 2; r <= 5; ++r) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto x = random_element(r, rng, 4), y = random_element(r, rng, 4);
      CHECK(goldman(goldman(x)) == x);
      CHECK(goldman(x * y) == goldman(x) * goldman(y));
    }
  }
}

TEST_CASE("goldman eigenprojections") {
  CHECK(goldman_eigenproject(Tp(3, 1), 1).is_zero());
  CHECK(goldman_eigenproject(one(3), 1) == one(3));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(4, rng, 6);
    const auto plus = goldman_eigenproject(x, 1), minus = goldman_eigenproject(x, -1);
    CHECK(plus + minus == x);
    CHECK(goldman(plus) == plus);
    CHECK(goldman(minus) == -minus);
  }
  CHECK_THROWS_AS(goldman_eigenproject(one(2), 0), std::invalid_argument);
}

TEST_CASE("T' basis change") {
  const auto y = to_tprime_basis(T(2, 1));
  CHECK(y.coeff(NormalFormWord({0})) == q_minus_qinv() / RationalFunction(2));
  CHECK(y.coeff(NormalFormWord({1})) == q_plus_qinv() / RationalFunction(2));
  CHECK(to_tprime_basis(one(4)) == TPrimeExpansion::identity(4));

  for (int r = 2; r <= 5; ++r) {
    const auto& basis = HeckeBasis::of(r);
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
      const auto x = HeckeElement::basis_word(basis.word(idx));
      CHECK(from_tprime_basis(to_tprime_basis(x)) == x);
      const auto tw = TPrimeExpansion::basis_word(basis.word(idx));
      CHECK(to_tprime_basis(from_tprime_basis(tw)) == tw);
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(5, rng, 5);
    CHECK(from_tprime_basis(to_tprime_basis(x)) == x);
  }
}

TEST_CASE("left multiplication in T' coordinates matches the T basis") {
  std::mt19937_64 rng(6);
  for (int r = 2; r <= 4; ++r) {
    const auto& basis = HeckeBasis::of(r);
    for (int i = 1; i < r; ++i)
      for (std::size_t w = 0; w < basis.size(); ++w) {
        const auto y = TPrimeExpansion::basis_word(basis.word(w));
        CHECK(from_tprime_basis(left_multiply_tprime(i, y)) ==
              left_multiply_tprime(i, from_tprime_basis(y)));
      }
  }
}
