#pragma once

// The q-alternating subalgebra H^1 of H_{K,r}(q): the +1 eigenspace of the
// Goldman involution, spanned by even T'-normal-form words.

#include <cstdint>
#include <string>
#include <vector>

#include "qalt/crossed.hpp"
#include "qalt/hecke.hpp"

namespace qalt {

struct EvenBasis {
  int rank = 0;
  std::vector<NormalFormWord> words;  // even-length T'-normal-form words, basis order
};

/// Throws std::invalid_argument for r < 2.
EvenBasis enumerate_even_basis(int r);
std::vector<NormalFormWord> enumerate_odd_basis(int r);

/// goldman(x) == x.
bool is_in_alt(const HeckeElement& x);
/// The T'-expansion of x is supported on even words only.
bool has_even_tprime_support(const HeckeElement& x);

/// X_i = T'_1 T'_{i+1}, 1 <= i <= r-2.
HeckeElement x_generator(int r, int i);

/// psi_0(-1)(x) = T'_1 x T'_1.
HeckeElement conjugate_by_tprime1(const HeckeElement& x);

/// The crossed system (H^1, Z2, psi_0, alpha_0 = 1) of (3.2)/(3.3).
Z2CrossedSystem<HeckeElement> hecke_crossed_system(int r);

/// Relations (B1)-(B4) for X_1, ..., X_{r-2}.
std::vector<IdentityCheck> check_x_relations(int r);

/// Relations (A1)-(A3) for T_i and (A'1)-(A'3) for T'_i.
std::vector<IdentityCheck> check_hecke_relations(int r);

struct EvenClosureReport {
  int rank = 0;
  std::size_t even = 0, odd = 0;
  /// every T'_i maps each T'-basis word onto words of the opposite parity
  IdentityCheck parity_swap;
  /// explicit products of all pairs of even words (only when requested)
  IdentityCheck pairs;
};

/// Prop 3.6 closure. The parity-swap certificate covers every product of an
/// even number of T' factors; all_pairs additionally expands each product.
EvenClosureReport verify_even_closure(int r, bool all_pairs);

struct CrossedProductReport {
  int rank = 0;
  std::size_t dim_even = 0, dim_odd = 0;
  bool exhaustive = false;  // all basis pairs rather than seeded samples
  std::vector<IdentityCheck> checks;
  bool passed() const { return all_passed(checks); }
};

/// Theorem 3.9: H = H^1 + H^1 T'_1 with dims (r!/2, r!/2), the crossed-system
/// axioms for (psi_0, alpha_0) and the four multiplication formulas of iota_0.
/// Basis pairs are used exhaustively for r <= exhaustive_limit; beyond that
/// `samples` seeded sparse elements of H^1.
CrossedProductReport verify_crossed_product_H(int r, std::uint64_t seed = 0, int samples = 6,
                                              int exhaustive_limit = 4);

}  // namespace qalt
