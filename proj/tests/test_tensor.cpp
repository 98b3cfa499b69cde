#include <doctest.h>

#include <random>

#include "qalt/tensor.hpp"

using namespace qalt;

namespace {

struct Case {
  int m, n, r;
};

// every (m, n) with m, n <= 2 and (m+n)^r <= bound, for r in [r_lo, r_hi]
std::vector<Case> small_cases(int r_lo, int r_hi, std::size_t bound) {
  std::vector<Case> out;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      std::size_t d = 1;
      for (int r = 1; r <= r_hi; ++r) {
        d *= static_cast<std::size_t>(m + n);
        if (r >= r_lo && d <= bound) out.push_back({m, n, r});
      }
    }
  return out;
}

std::string label(const Case& c) {
  return "(" + std::to_string(c.m) + "," + std::to_string(c.n) + "," + std::to_string(c.r) + ")";
}

OperatorMatrix I(const GradedSpace& s) { return OperatorMatrix::identity(s.dim()); }
OperatorMatrix scal(const GradedSpace& s, const RationalFunction& c) { return OperatorMatrix::scalar(s.dim(), c); }

HeckeElement random_element(int r, std::mt19937_64& rng, int terms) {
  const auto& basis = HeckeBasis::of(r);
  HeckeElement x(r);
  for (int k = 0; k < terms; ++k) {
    RationalFunction c(LaurentPolynomial::monomial(static_cast<long>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1));
    if (rng() % 4 == 0) c /= q_plus_qinv();
    x.add_to(rng() % basis.size(), c);
  }
  return x;
}

}  // namespace

TEST_CASE("graded space indexing") {
  const GradedSpace s(1, 2, 3);
  CHECK(s.dim() == 27);
  CHECK(s.letters(0) == TensorIndex{1, 1, 1});
  CHECK(s.letters(1) == TensorIndex{1, 1, 2});
  CHECK(s.letters(26) == TensorIndex{3, 3, 3});
  for (std::size_t k = 0; k < s.dim(); ++k) CHECK(s.index(s.letters(k)) == k);
  CHECK(s.degree(1) == 0);
  CHECK(s.degree(2) == 1);
  CHECK(s.degree_of(s.index({2, 1, 3})) == 2);
  CHECK_THROWS_AS(GradedSpace(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(GradedSpace(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(s.index({1, 4, 1}), std::invalid_argument);
}

TEST_CASE("root datum") {
  const RootDatum d(2, 2);
  CHECK(d.rank() == 3);
  CHECK(d.parity(1) == 0);
  CHECK(d.parity(2) == 1);
  CHECK(d.parity(3) == 0);
  CHECK(d.ell(1) == 1);
  CHECK(d.ell(3) == -1);
  CHECK_THROWS_AS(d.parity(4), std::invalid_argument);
  // Cartan entries <h_i, alpha_j> = (alpha_i, alpha_j) / l_i: 2 on even diagonals, 0 on the odd one
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n < 2) continue;
      const RootDatum rd(m, n);
      for (int i = 1; i <= rd.rank(); ++i)
        for (int j = 1; j <= rd.rank(); ++j) {
          const int aij = rd.root_pairing(i, j) - rd.root_pairing(i, j + 1);
          const int cartan = aij * rd.ell(i);  // l_i = +-1
          if (i == j) CHECK(cartan == (rd.parity(i) ? 0 : 2));
          else if (i == m && j == m + 1) CHECK(cartan == 1);  // odd row reads (-1, 0, 1)
          else CHECK(cartan <= 0);
          CHECK(aij == rd.root_pairing(j, i) - rd.root_pairing(j, i + 1));  // symmetric form
        }
    }
}

TEST_CASE("pi_T diagonal entries") {
  const GradedSpace even(1, 0, 2), odd(0, 1, 2);
  CHECK(pi_T(1, even).get(0, 0) == RationalFunction::q());
  CHECK(pi_T(1, odd).get(0, 0) == -RationalFunction::q().inverse());
  const GradedSpace s(1, 1, 2);
  CHECK(pi_Tprime(1, s).get(3, 3) == RationalFunction(-1));  // v2 (x) v2 with |v2| = 1
  CHECK(pi_Tprime(1, s).get(0, 0) == RationalFunction(1));
  CHECK_THROWS_AS(pi_T(2, s), std::invalid_argument);
  CHECK_THROWS_AS(pi_T(0, s), std::invalid_argument);
}

TEST_CASE("pi_r satisfies (A1)-(A3) and (A'1)-(A'3)") {
  const RationalFunction a = q_minus_qinv(), c = q_minus_qinv() / q_plus_qinv();
  for (const auto& k : small_cases(2, 4, 256)) {
    CAPTURE(label(k));
    const GradedSpace s(k.m, k.n, k.r);
    std::vector<OperatorMatrix> T, Tp;
    for (int i = 1; i < k.r; ++i) {
      T.push_back(pi_T(i, s));
      Tp.push_back(pi_Tprime(i, s));
    }
    for (int i = 0; i + 1 < k.r; ++i) {
      CHECK(T[i] * T[i] == a * T[i] + I(s));
      CHECK(Tp[i] * Tp[i] == I(s));
      CHECK(Tp[i] == (RationalFunction(2) * T[i] - scal(s, a)) * scal(s, q_plus_qinv().inverse()));
      CHECK(pi_U(i + 1, s) == q_plus_qinv() * Tp[i]);
      if (i + 2 < k.r) {
        CHECK(T[i] * T[i + 1] * T[i] == T[i + 1] * T[i] * T[i + 1]);
        CHECK(Tp[i] * Tp[i + 1] * Tp[i] == Tp[i + 1] * Tp[i] * Tp[i + 1] - (c * c) * (Tp[i] - Tp[i + 1]));
      }
      for (int j = i + 2; j + 1 < k.r; ++j) {
        CHECK(T[i] * T[j] == T[j] * T[i]);
        CHECK(Tp[i] * Tp[j] == Tp[j] * Tp[i]);
      }
    }
  }
}

TEST_CASE("rho one-site action") {
  const GradedSpace s(2, 1, 1);
  const auto e1 = rho_generator({RhoGenerator::Kind::e, 1}, s);
  CHECK(e1.nnz() == 1);
  CHECK(e1.get(0, 1) == RationalFunction(1));
  const auto f2 = rho_generator({RhoGenerator::Kind::f, 2}, s);
  CHECK(f2.nnz() == 1);
  CHECK(f2.get(2, 1) == RationalFunction(1));
  const auto q3 = rho_generator({RhoGenerator::Kind::qh, 3}, s);
  CHECK(q3.get(2, 2) == RationalFunction::q());
  CHECK(q3.get(0, 0) == RationalFunction(1));
  CHECK_THROWS_AS(rho_generator({RhoGenerator::Kind::e, 3}, s), std::invalid_argument);
  CHECK_THROWS_AS(rho_generator({RhoGenerator::Kind::qh, 0}, s), std::invalid_argument);
  CHECK(RhoGenerator::parse("f(2)") == RhoGenerator{RhoGenerator::Kind::f, 2});
  CHECK(RhoGenerator::parse("sigma").kind == RhoGenerator::Kind::sigma);
  CHECK_THROWS_AS(RhoGenerator::parse("g(1)"), std::invalid_argument);
  CHECK_THROWS_AS(RhoGenerator::parse("e(x)"), std::invalid_argument);
  for (const auto& g : rho_generators(2, 2)) CHECK(RhoGenerator::parse(g.label()) == g);
}

TEST_CASE("rho_r(sigma) and rho_r(q^h) are diagonal") {
  for (const auto& k : small_cases(1, 3, 64)) {
    const GradedSpace s(k.m, k.n, k.r);
    const auto sigma = rho_generator({RhoGenerator::Kind::sigma, 0}, s);
    CHECK(sigma * sigma == I(s));
    for (std::size_t x = 0; x < s.dim(); ++x) CHECK(sigma.get(x, x) == RationalFunction(s.degree_of(x) % 2 ? -1 : 1));
    for (int b = 1; b <= k.m + k.n; ++b) {
      const auto qh = rho_generator({RhoGenerator::Kind::qh, b}, s);
      std::vector<int> w(k.m + k.n, 0);
      w[b - 1] = -1;
      CHECK(qh * rho_weight(w, s) == I(s));
      CHECK(qh.nnz() == s.dim());
    }
  }
}

TEST_CASE("rho_r respects (Q3), (Q5) and (Q8)") {
  for (const auto& k : small_cases(1, 3, 64)) {
    CAPTURE(label(k));
    if (k.m + k.n < 2) continue;
    const GradedSpace s(k.m, k.n, k.r);
    const RootDatum d(k.m, k.n);
    const auto sigma = rho_generator({RhoGenerator::Kind::sigma, 0}, s);
    for (int i = 1; i <= d.rank(); ++i) {
      const auto ei = rho_generator({RhoGenerator::Kind::e, i}, s);
      const auto fi = rho_generator({RhoGenerator::Kind::f, i}, s);
      CHECK_FALSE(ei.is_zero());
      const int sgn = d.parity(i) ? -1 : 1;
      CHECK(ei * sigma == RationalFunction(sgn) * (sigma * ei));
      CHECK(fi * sigma == RationalFunction(sgn) * (sigma * fi));
      std::vector<int> up(k.m + k.n), down(k.m + k.n);
      for (int j = 1; j <= k.m + k.n; ++j) {
        up[j - 1] = d.root_pairing(i, j);
        down[j - 1] = -up[j - 1];
      }
      const auto K = rho_weight(up, s), Kinv = rho_weight(down, s);
      const RationalFunction ql = RationalFunction(LaurentPolynomial::monomial(1, d.ell(i))) -
                                  RationalFunction(LaurentPolynomial::monomial(1, -d.ell(i)));
      for (int j = 1; j <= d.rank(); ++j) {
        const auto fj = rho_generator({RhoGenerator::Kind::f, j}, s);
        const int super = d.parity(i) * d.parity(j) ? -1 : 1;
        const auto bracket = ei * fj - RationalFunction(super) * (fj * ei);
        if (i == j) CHECK(bracket == ql.inverse() * (K - Kinv));
        else CHECK(bracket.is_zero());
      }
      // (Q3) for the dual basis weights: q^{h_b} e_i = q^{<h_b, alpha_i>} e_i q^{h_b}
      for (int b = 1; b <= k.m + k.n; ++b) {
        const auto qh = rho_generator({RhoGenerator::Kind::qh, b}, s);
        const int pairing = (b == i) - (b == i + 1);
        CHECK(qh * ei == RationalFunction(LaurentPolynomial::monomial(1, pairing)) * (ei * qh));
      }
    }
  }
}

TEST_CASE("pi_r(T_i) commutes with every rho_r generator") {
  std::vector<Case> cases = small_cases(2, 3, 64);
  for (const Case& extra : {Case{2, 2, 2}}) cases.push_back(extra);
  for (const auto& k : cases) {
    CAPTURE(label(k));
    const GradedSpace s(k.m, k.n, k.r);
    for (const auto& g : rho_generators(k.m, k.n)) {
      CAPTURE(g.label());
      const auto x = rho_generator(g, s);
      for (int i = 1; i < k.r; ++i) {
        const auto t = pi_T(i, s);
        CHECK(t * x == x * t);
      }
    }
  }
}

TEST_CASE("phi tensor power") {
  const GradedSpace one(1, 1, 1);
  const auto p1 = phi_tensor(one);
  CHECK(p1.get(1, 0) == RationalFunction(1));
  CHECK(p1.get(0, 1) == RationalFunction(1));
  CHECK(p1.nnz() == 2);
  CHECK_THROWS_AS(phi_tensor(GradedSpace(2, 1, 2)), std::invalid_argument);
  for (int m = 1; m <= 2; ++m)
    for (int r = 1; r <= 4; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      const GradedSpace s(m, m, r);
      const auto phi = phi_tensor(s);
      const int sign = (r * (r - 1) / 2) % 2 ? -1 : 1;
      CHECK(phi * phi == scal(s, RationalFunction(sign)));
      for (int i = 1; i < r; ++i) {
        const auto tp = pi_Tprime(i, s);
        CHECK(tp * phi == -(phi * tp));
      }
    }
}

TEST_CASE("represent is an algebra map") {
  std::mt19937_64 rng(31);
  for (const auto& k : std::vector<Case>{{1, 1, 3}, {2, 0, 3}, {1, 1, 2}, {1, 2, 3}}) {
    CAPTURE(label(k));
    const GradedSpace s(k.m, k.n, k.r);
    CHECK(represent(HeckeElement::identity(k.r), s) == I(s));
    for (int i = 1; i < k.r; ++i) {
      CHECK(represent(generator(k.r, i), s) == pi_T(i, s));
      CHECK(represent(tprime(k.r, i), s) == pi_Tprime(i, s));
    }
    for (int trial = 0; trial < 4; ++trial) {
      const auto x = random_element(k.r, rng, 3), y = random_element(k.r, rng, 3);
      CHECK(represent(multiply(x, y), s) == represent(x, s) * represent(y, s));
    }
  }
  CHECK_THROWS_AS(represent(HeckeElement::identity(3), GradedSpace(1, 1, 2)), std::invalid_argument);
  const GradedSpace s(1, 1, 3);
  const auto mats = basis_word_matrices(s);
  const auto& basis = HeckeBasis::of(3);
  for (std::size_t w = 0; w < basis.size(); ++w)
    CHECK(mats[w] == represent(HeckeElement::basis_word(basis.word(w)), s));
}

TEST_CASE("conjugation by phi realizes the Goldman involution") {
  std::mt19937_64 rng(32);
  for (const auto& k : std::vector<Case>{{1, 1, 2}, {1, 1, 3}, {2, 2, 2}}) {
    CAPTURE(label(k));
    const GradedSpace s(k.m, k.n, k.r);
    const auto phi = phi_tensor(s);
    for (int trial = 0; trial < 4; ++trial) {
      const auto x = random_element(k.r, rng, 4);
      const auto px = represent(x, s);
      // phi pi(x) = pi(g(x)) phi; on the fixed part phi commutes
      CHECK(phi * px == represent(goldman(x), s) * phi);
      const auto even = represent(goldman_eigenproject(x, 1), s);
      CHECK(phi * even == even * phi);
    }
  }
}

TEST_CASE("specialization") {
  const SpecializationPoint one(1);
  // m = 1, n = 0: pi(T_i) at q = 1 is the plain transposition of sites
  const GradedSpace flat(1, 0, 3);
  for (int i = 1; i < 3; ++i) CHECK(specialize_matrix(pi_T(i, flat), one) == RationalMatrix::identity(1));
  const GradedSpace even(3, 0, 2);
  const auto t1 = specialize_matrix(pi_T(1, even), one);
  for (std::size_t col = 0; col < even.dim(); ++col) {
    auto u = even.letters(col);
    std::swap(u[0], u[1]);
    CHECK(t1.row(even.index(u)) == RationalMatrix::Row{{col, Rational(1)}});
  }
  for (const auto& k : small_cases(2, 4, 256)) {
    CAPTURE(label(k));
    const GradedSpace s(k.m, k.n, k.r);
    for (int i = 1; i < k.r; ++i) {
      CHECK(specialize_matrix(pi_Tprime(i, s), one) == sign_permutation(i, s));
      CHECK(specialize_matrix(pi_T(i, s), one) == sign_permutation(i, s));
    }
  }
  const SpecializationPoint t(Rational(3, 2));
  CHECK(specialize_matrix(I(GradedSpace(1, 1, 2)), t) == RationalMatrix::identity(4));
  OperatorMatrix bad(3);
  bad.set(1, 2, RationalFunction(1) / (RationalFunction::q() - RationalFunction(Rational(3, 2))));
  try {
    specialize_matrix(bad, t);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("entry (1, 2)") != std::string::npos);
  }
}

TEST_CASE("matrix dumps round-trip") {
  const GradedSpace s(1, 1, 3);
  for (int i = 1; i < 3; ++i) {
    const auto m = pi_Tprime(i, s);
    CHECK(parse_matrix_dump(dump_matrix(m), s.dim()) == m);
  }
  const auto text = dump_matrix(pi_T(1, GradedSpace(1, 0, 2)));
  CHECK(text.rfind("0 0 ", 0) == 0);
  CHECK(dump_matrix(pi_T(1, s), 3).size() < dump_matrix(pi_T(1, s)).size());
  std::size_t lines = 0;
  for (char ch : dump_matrix(pi_T(1, s), 3)) lines += ch == '\n';
  CHECK(lines == 3);
  CHECK_THROWS_AS(parse_matrix_dump("0 9 1\n", 8), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_dump("zero\n", 8), std::invalid_argument);
}
