#pragma once

// End-to-end verification suites. Each suite returns a deterministic report
// of named checks; overall status is pass iff every check passes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qalt/commutant.hpp"
#include "qalt/crossed.hpp"

namespace qalt {

struct SuiteOptions {
  RankMode mode = RankMode::exact;
  std::uint64_t seed = 0;
  std::vector<SpecializationPoint> points;  // empty: drawn from the seed
  std::size_t bound = 0;                    // 0: the default for the suite and mode

  /// Largest admissible (m+n)^r: 64 in exact mode, 256 in specialized mode.
  std::size_t space_bound() const { return bound ? bound : mode == RankMode::exact ? 64 : 256; }
  /// Largest admissible r for the Hecke suite.
  int rank_bound() const { return bound ? static_cast<int>(bound) : 6; }
};

/// Parameters outside the configured size bound; the message names the bound
/// that would admit them.
class SizeBoundError : public std::invalid_argument {
 public:
  SizeBoundError(const std::string& what, std::size_t required) : std::invalid_argument(what), required_(required) {}
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json observations = nlohmann::ordered_json::object();
  std::vector<IdentityCheck> checks;
  std::vector<IdentityCheck> notes;  // informational; never affect the status

  bool passed() const { return all_passed(checks); }
  nlohmann::ordered_json to_json() const;
};

/// Witness dumps keep at most this many matrix entries.
inline constexpr std::size_t kWitnessEntries = 50;

/// Relations, even basis counts, Prop 3.6 closure and Theorem 3.9, 2 <= r <= rank_bound().
SuiteReport suite_hecke(int r, const SuiteOptions& options = {});
/// The H^1 part of suite_hecke: (B) relations, counts, closure and Theorem 3.9.
SuiteReport suite_alt(int r, const SuiteOptions& options = {});
/// Theorem 4.1 double commutant and dim A_q = sum of d_lambda^2 (Theorem 4.2).
SuiteReport suite_schur_weyl(int m, int n, int r, const SuiteOptions& options = {});
/// C_q, D_q = End_C(V^r), Theorem 5.8, the m = n crossed product and Theorem 6.1 / Corollary 6.2.
SuiteReport suite_alt_centralizer(int m, int n, int r, const SuiteOptions& options = {});
/// Generic ranks survive q -> t; q = 1 gives the sign permutation action.
SuiteReport suite_specialization(int m, int n, int r, const SuiteOptions& options = {});

}  // namespace qalt
