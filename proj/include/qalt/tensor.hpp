#pragma once

// The graded tensor space V^{(x)r} with the matrices of pi_r, rho_r and the
// signed flip phi^{(x)r}. Basis tensors are ordered lexicographically.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qalt/hecke.hpp"
#include "qalt/linalg.hpp"

namespace qalt {

using OperatorMatrix = SparseMatrix<RationalFunction>;
using RationalMatrix = SparseMatrix<Rational>;

/// Letters (k_1, ..., k_r), each in 1..m+n.
using TensorIndex = std::vector<int>;

class GradedSpace {
 public:
  /// Requires m, n >= 0, m + n >= 1, r >= 1 and (m+n)^r <= 4096.
  GradedSpace(int m, int n, int r);

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  int local_dim() const { return m_ + n_; }
  std::size_t dim() const { return dim_; }
  /// |v_k| for 1 <= k <= m+n.
  int degree(int k) const { return k > m_ ? 1 : 0; }
  /// Sum of the letter degrees of the basis tensor with this index.
  int degree_of(std::size_t idx) const;

  TensorIndex letters(std::size_t idx) const;
  std::size_t index(const TensorIndex& letters) const;
  std::string to_string() const;

 private:
  int m_, n_, r_;
  std::size_t dim_;
};

/// Root data of U_q^sigma(gl(m,n)); simple roots indexed by I = {1..m+n-1}.
class RootDatum {
 public:
  RootDatum(int m, int n);
  int rank() const { return m_ + n_ - 1; }
  /// p(i) = 1 iff i = m.
  int parity(int i) const;
  int ell(int i) const { return i <= m_ ? 1 : -1; }
  /// (eps_a, eps_b)
  int form(int a, int b) const;
  /// (alpha_i, eps_j) = ell_i <h_i, eps_j>: the exponent of q^{ell_i h_i} on v_j.
  int root_pairing(int i, int j) const;

 private:
  void require_index(int i) const;
  int m_, n_;
};

OperatorMatrix pi_T(int i, const GradedSpace& space);
OperatorMatrix pi_Tprime(int i, const GradedSpace& space);
/// (q + q^-1) pi_r(T'_i) = 2 pi_r(T_i) - (q - q^-1): same algebra, Laurent entries.
OperatorMatrix pi_U(int i, const GradedSpace& space);
/// pi_r(T'_1 T'_{i+1}) for 1 <= i <= r-2.
OperatorMatrix pi_X(int i, const GradedSpace& space);
/// (q + q^-1)^2 pi_r(X_i).
OperatorMatrix pi_X_scaled(int i, const GradedSpace& space);

struct RhoGenerator {
  enum class Kind { sigma, qh, e, f };
  Kind kind = Kind::sigma;
  int index = 0;  // b for qh (dual basis weight), i in I for e and f

  std::string label() const;  // "sigma", "qh(2)", "e(1)", "f(1)"
  /// Throws std::invalid_argument on an unknown label.
  static RhoGenerator parse(std::string_view label);
  friend bool operator==(const RhoGenerator&, const RhoGenerator&) = default;
};

/// sigma, qh(1..m+n), e(i), f(i) for i in I.
std::vector<RhoGenerator> rho_generators(int m, int n);
/// Throws std::invalid_argument on an index outside the root datum.
OperatorMatrix rho_generator(const RhoGenerator& g, const GradedSpace& space);
/// rho_r(q^h) for h with eps_j(h) = weights[j-1].
OperatorMatrix rho_weight(const std::vector<int>& weights, const GradedSpace& space);

/// Signed tensor power of v_i -> v_{2m-i+1}. Throws std::invalid_argument if m != n.
OperatorMatrix phi_tensor(const GradedSpace& space);

/// Linear extension of pi_r over the normal-form basis.
OperatorMatrix represent(const HeckeElement& x, const GradedSpace& space);

/// pi_r(T_w) for every normal-form word, in HeckeBasis index order.
std::vector<OperatorMatrix> basis_word_matrices(const GradedSpace& space);

/// Entrywise q -> t. Throws PoleError naming the offending entry.
RationalMatrix specialize_matrix(const OperatorMatrix& m, const SpecializationPoint& t);

/// q = 1 limit of pi_r(T'_i): the signed transposition of sites i and i+1,
/// built directly from the letters.
RationalMatrix sign_permutation(int i, const GradedSpace& space);

/// "row col value" per line in row-major order; limit = 0 writes every entry.
std::string dump_matrix(const OperatorMatrix& m, std::size_t limit = 0);
std::string dump_matrix(const RationalMatrix& m, std::size_t limit = 0);
OperatorMatrix parse_matrix_dump(std::string_view text, std::size_t dim);

}  // namespace qalt
