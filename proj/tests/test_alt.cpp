#include <doctest.h>

#include <chrono>
#include <random>

#include "qalt/alt.hpp"

using namespace qalt;

namespace {

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

void require_all(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.actual << " " << c.witness);
    CHECK(c.passed);
  }
}

HeckeElement random_element(int r, std::mt19937_64& rng, int terms) {
  const auto& basis = HeckeBasis::of(r);
  HeckeElement x(r);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int k = 0; k < terms; ++k) x.add_to(pick(rng), RationalFunction(c(rng)));
  return x;
}

std::size_t factorial(int r) {
  std::size_t f = 1;
  for (int k = 2; k <= r; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

}  // namespace

TEST_CASE("even basis sizes") {
  CHECK(enumerate_even_basis(2).words.size() == 1);
  CHECK(enumerate_even_basis(2).words[0] == NormalFormWord::identity(2));
  CHECK(enumerate_even_basis(3).words.size() == 3);
  CHECK(enumerate_even_basis(4).words.size() == 12);
  for (int r = 2; r <= 6; ++r) {
    CHECK(enumerate_even_basis(r).words.size() == factorial(r) / 2);
    CHECK(enumerate_odd_basis(r).size() == factorial(r) / 2);
    for (const auto& w : enumerate_even_basis(r).words) CHECK(w.parity() == 0);
  }
  CHECK_THROWS_AS(enumerate_even_basis(1), std::invalid_argument);
}

TEST_CASE("membership in H^1") {
  CHECK(is_in_alt(HeckeElement::identity(3)));
  CHECK_FALSE(is_in_alt(tprime(3, 1)));
  CHECK(is_in_alt(tprime(3, 1) * tprime(3, 2)));
  // the Goldman criterion agrees with even T'-support
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + trial % 3;
    HeckeElement x = random_element(r, rng, 3);
    if (trial % 2) x = goldman_eigenproject(x, 1);
    CHECK(is_in_alt(x) == has_even_tprime_support(x));
    CHECK(is_in_alt(x) == goldman_eigenproject(x, -1).is_zero());
  }
}

TEST_CASE("even T'-words are Goldman fixed and odd ones are negated") {
  for (int r = 2; r <= 4; ++r) {
    for (const auto& w : enumerate_even_basis(r).words) CHECK(is_in_alt(tprime_word(w)));
    for (const auto& w : enumerate_odd_basis(r)) CHECK(goldman(tprime_word(w)) == -tprime_word(w));
  }
}

TEST_CASE("X generators and relations (B1)-(B4), r <= 6") {
  CHECK_THROWS_AS(x_generator(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(x_generator(4, 0), std::invalid_argument);
  CHECK(x_generator(4, 2) == tprime(4, 1) * tprime(4, 3));
  for (int r = 3; r <= 6; ++r) require_all(check_x_relations(r));
}

TEST_CASE("Hecke relation suite, r <= 6") {
  for (int r = 2; r <= 6; ++r) require_all(check_hecke_relations(r));
}

TEST_CASE("even closure, r <= 5") {
  for (int r = 2; r <= 5; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = verify_even_closure(r, true);
    MESSAGE("r=" << r << " closure in "
                 << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");
    CHECK(rep.even == factorial(r) / 2);
    CHECK(rep.odd == factorial(r) / 2);
    CHECK(rep.parity_swap.passed);
    CHECK(rep.pairs.passed);
  }
}

TEST_CASE("crossed product of H") {
  for (int r = 2; r <= 4; ++r) {
    const auto rep = verify_crossed_product_H(r);
    CHECK(rep.exhaustive);
    CHECK(rep.dim_even == factorial(r) / 2);
    CHECK(rep.dim_odd == factorial(r) / 2);
    require_all(rep.checks);
  }
  const auto sampled = verify_crossed_product_H(5, 7, 4);
  CHECK_FALSE(sampled.exhaustive);
  require_all(sampled.checks);
}

TEST_CASE("a broken action is reported with a witness") {
  auto sys = hecke_crossed_system(3);
  sys.act = [](int s, const HeckeElement& a) { return s == 1 ? a : multiply(tprime(3, 1), a); };
  std::vector<HeckeElement> samples{tprime(3, 1) * tprime(3, 2)};
  const auto checks = check_crossed_system(sys, samples);
  CHECK_FALSE(all_passed(checks));
  bool witnessed = false;
  for (const auto& c : checks)
    if (!c.passed) witnessed = witnessed || !c.witness.empty();
  CHECK(witnessed);
}
