#include <doctest.h>

#include <algorithm>

#include "qalt/suites.hpp"

using namespace qalt;

namespace {

const IdentityCheck* find_check(const SuiteReport& rep, const std::string& prefix) {
  for (const auto& c : rep.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

std::string obs(const SuiteReport& rep, const std::string& key) { return rep.observations.at(key).get<std::string>(); }

void require_pass(const SuiteReport& rep) {
  for (const auto& c : rep.checks) {
    INFO(rep.suite, ": ", c.name, " actual ", c.actual, "\n", c.witness);
    CHECK(c.passed);
  }
  CHECK(rep.passed());
}

SuiteOptions specialized(std::uint64_t seed = 0) {
  SuiteOptions o;
  o.mode = RankMode::specialized;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("hecke suite for r = 2, 3, 4") {
  const std::string even[] = {"1", "3", "12"};
  for (int r = 2; r <= 4; ++r) {
    const auto rep = suite_hecke(r);
    require_pass(rep);
    CHECK(obs(rep, "even_basis_size") == even[r - 2]);
    CHECK(obs(rep, "odd_basis_size") == even[r - 2]);
    CHECK(find_check(rep, "(A1)") != nullptr);
    CHECK(find_check(rep, "(A'2)") != nullptr);
    CHECK(find_check(rep, "(2.1)") != nullptr);
    if (r >= 3) CHECK(find_check(rep, "(B1)") != nullptr);
  }
}

TEST_CASE("hecke suite bounds") {
  CHECK_THROWS_AS(suite_hecke(1), std::invalid_argument);
  try {
    suite_hecke(7);
    FAIL("expected a size bound refusal");
  } catch (const SizeBoundError& e) {
    CHECK(e.required() == 7);
    CHECK(std::string(e.what()).find("--bound 7") != std::string::npos);
  }
}

TEST_CASE("alt suite omits the (A) relations") {
  const auto rep = suite_alt(4);
  require_pass(rep);
  CHECK(rep.suite == "alt");
  CHECK(find_check(rep, "(A1)") == nullptr);
  CHECK(find_check(rep, "(B3)") != nullptr);
}

TEST_CASE("schur-weyl suite") {
  struct Case {
    int m, n, r;
    const char* dim_a;
  };
  for (const Case c : {Case{1, 1, 2, "2"}, Case{1, 1, 3, "6"}, Case{2, 0, 3, "5"}, Case{1, 0, 2, "1"}}) {
    const auto rep = suite_schur_weyl(c.m, c.n, c.r);
    require_pass(rep);
    CHECK(obs(rep, "dim_A") == c.dim_a);
    CHECK(find_check(rep, "commutant(A_q) = B_q") != nullptr);
    CHECK(find_check(rep, "commutant(B_q) = A_q") != nullptr);
  }
  CHECK(obs(suite_schur_weyl(1, 1, 2), "dim_B") == "8");
}

TEST_CASE("alt-centralizer suite for m = n") {
  const auto rep = suite_alt_centralizer(1, 1, 2);
  require_pass(rep);
  CHECK(obs(rep, "dim_C") == "1");
  CHECK(obs(rep, "dim_D") == "16");
  CHECK(obs(rep, "dim_B") == "8");
  CHECK(find_check(rep, "D_q = B_q (+) phi B_q") != nullptr);
  CHECK(find_check(rep, "psi_1/alpha_1: (2.1)") != nullptr);
  CHECK(find_check(rep, "iota_1") != nullptr);

  const auto rep3 = suite_alt_centralizer(1, 1, 3);
  require_pass(rep3);
  CHECK(obs(rep3, "dim_A") == "6");
  CHECK(obs(rep3, "dim_C") == "3");
  CHECK(obs(rep3, "dim_D") == "24");
}

TEST_CASE("alt-centralizer suite for (2,0,3) splits as Theorem 6.1 says") {
  const auto rep = suite_alt_centralizer(2, 0, 3);
  require_pass(rep);
  CHECK(obs(rep, "dim_A") == "5");
  CHECK(obs(rep, "dim_C") == "3");
  CHECK(obs(rep, "dim_A0_from_ranks") == "4");
  CHECK(obs(rep, "dim_A1_from_ranks") == "1");
  // m != n: the structure of D_q is only observed
  CHECK(find_check(rep, "D_q = B_q") == nullptr);
  CHECK(std::any_of(rep.notes.begin(), rep.notes.end(), [](const IdentityCheck& c) { return c.name.find("m != n") != std::string::npos; }));
  // m^2 >= r: no A_q = C_q check
  CHECK(find_check(rep, "A_q = C_q") == nullptr);
}

TEST_CASE("specialized mode on (2,2,2)") {
  const auto rep = suite_alt_centralizer(2, 2, 2, specialized(3));
  require_pass(rep);
  CHECK(obs(rep, "dim_B") == "128");
  CHECK(obs(rep, "dim_D") == "256");
  CHECK(rep.parameters.at("points").size() == 2);
  CHECK(find_check(rep, "specialization points agree") != nullptr);
  CHECK(rep.parameters.at("points") != suite_alt_centralizer(2, 2, 2, specialized(4)).parameters.at("points"));
}

TEST_CASE("specialization suite") {
  SuiteOptions o;
  o.points = {SpecializationPoint(Rational(2)), SpecializationPoint(Rational(3, 2))};
  for (int r = 2; r <= 4; ++r) {
    const auto rep = suite_specialization(1, 1, r, o);
    require_pass(rep);
    CHECK(find_check(rep, "dim C_t = dim C_q at q = 3/2") != nullptr);
  }
  const auto rep = suite_specialization(1, 1, 3, o);
  CHECK(find_check(rep, "pi_r(T_i) at q = 1 equals the sign permutation")->passed);
  CHECK(find_check(rep, "pi_r(T_i)^2 = 1 at q = 1")->passed);
  CHECK(obs(rep, "dim_A_at_1") == "6");
}

TEST_CASE("size bounds") {
  try {
    suite_schur_weyl(2, 2, 4);
    FAIL("expected a size bound refusal");
  } catch (const SizeBoundError& e) {
    CHECK(e.required() == 256);
  }
  CHECK_THROWS_AS(suite_alt_centralizer(3, 3, 4, specialized()), SizeBoundError);
  CHECK_THROWS_AS(suite_alt_centralizer(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(suite_schur_weyl(0, 0, 2), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  SuiteOptions o;
  o.seed = 5;
  CHECK(suite_alt_centralizer(1, 1, 3, o).to_json().dump() == suite_alt_centralizer(1, 1, 3, o).to_json().dump());
  CHECK(suite_hecke(5, o).to_json().dump() == suite_hecke(5, o).to_json().dump());
  CHECK(suite_schur_weyl(1, 1, 3, specialized(9)).to_json().dump() ==
        suite_schur_weyl(1, 1, 3, specialized(9)).to_json().dump());
}

TEST_CASE("report json") {
  SuiteReport rep;
  rep.suite = "x";
  rep.checks.push_back({"good", true, "1", "1", ""});
  CHECK(rep.to_json().at("status") == "pass");
  CHECK_FALSE(rep.to_json().at("checks")[0].contains("witness"));
  rep.checks.push_back({"bad", false, "1", "2", "0 0 q"});
  const auto j = rep.to_json();
  CHECK(j.at("status") == "fail");
  CHECK(j.at("checks")[1].at("status") == "fail");
  CHECK(j.at("checks")[1].at("witness") == "0 0 q");
  CHECK(j.at("checks")[1].at("expected") == "1");
}
