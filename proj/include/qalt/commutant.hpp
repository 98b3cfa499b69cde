#pragma once

// Subalgebra closure, commutants and certified ranks for operator algebras on
// V^{(x)r}. Every routine is templated on the field so the same code runs over
// K = Q(q) (exact mode) and over Q after q -> t (specialized mode).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalt/crossed.hpp"
#include "qalt/linalg.hpp"
#include "qalt/tensor.hpp"

namespace qalt {

template <class F>
struct BasicAlgebraBasis {
  std::size_t dim = 0;                        // ambient (m+n)^r
  std::vector<SparseMatrix<F>> elements;      // linearly independent
  std::vector<SparseMatrix<F>> generators;    // generating set, when known
  bool closed = false;

  std::size_t size() const { return elements.size(); }
};

using AlgebraBasis = BasicAlgebraBasis<RationalFunction>;
using RationalAlgebraBasis = BasicAlgebraBasis<Rational>;

/// Thrown when span_closure does not stabilize within dim^2 rounds.
class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
EchelonSpan<F> flat_span(const BasicAlgebraBasis<F>& a) {
  EchelonSpan<F> span(a.dim * a.dim);
  for (const auto& e : a.elements) span.insert(e.flatten());
  return span;
}

namespace detail {

template <class F>
void require_dims(std::size_t dim, const std::vector<SparseMatrix<F>>& ms) {
  for (const auto& m : ms)
    if (m.dim() != dim)
      throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(m.dim()) + " vs " + std::to_string(dim));
}

}  // namespace detail

/// Basis of the unital subalgebra generated by gens. Candidates g * b are
/// reduced against the span in insertion order (breadth first).
template <class F>
BasicAlgebraBasis<F> span_closure(std::size_t dim, const std::vector<SparseMatrix<F>>& gens) {
  detail::require_dims(dim, gens);
  BasicAlgebraBasis<F> out;
  out.dim = dim;
  out.generators = gens;
  EchelonSpan<F> span(dim * dim);
  std::vector<std::size_t> frontier;
  auto offer = [&](SparseMatrix<F> m) {
    if (!span.insert(m.flatten())) return;
    frontier.push_back(out.elements.size());
    out.elements.push_back(std::move(m));
  };
  offer(SparseMatrix<F>::identity(dim));
  for (const auto& g : gens) offer(g);
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > dim * dim) throw ClosureError("span closure did not stabilize after dim^2 rounds");
    const std::vector<std::size_t> current = std::move(frontier);
    frontier.clear();
    for (std::size_t b : current)
      for (const auto& g : gens) offer(g * out.elements[b]);
  }
  out.closed = true;
  return out;
}

namespace detail {

// Rows of the linear system X G - sign * G X = 0 in the unknowns X (row-major).
template <class F>
void commutation_rows(const SparseMatrix<F>& g, int sign, EchelonSpan<F>& system) {
  const std::size_t n = g.dim();
  std::vector<SparseVector<F>> cols(n);  // column c of g as (b, g_bc)
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& [c, x] : g.row(b)) cols[c].emplace_back(b, x);
  std::map<std::size_t, F> acc;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      acc.clear();
      for (const auto& [b, x] : cols[c]) acc[a * n + b] += x;      // (X G)_ac
      for (const auto& [b, x] : g.row(a)) {                         // (G X)_ac
        if (sign > 0) acc[b * n + c] -= x;
        else acc[b * n + c] += x;
      }
      SparseVector<F> row;
      for (auto& [k, x] : acc)
        if (!field_is_zero(x)) row.emplace_back(k, std::move(x));
      if (!row.empty()) system.insert(row);
    }
}

template <class F>
BasicAlgebraBasis<F> solve_commutation(std::size_t dim, const std::vector<SparseMatrix<F>>& gens, int sign) {
  require_dims(dim, gens);
  EchelonSpan<F> system(dim * dim);
  for (const auto& g : gens) commutation_rows(g, sign, system);
  BasicAlgebraBasis<F> out;
  out.dim = dim;
  for (const auto& v : system.nullspace()) out.elements.push_back(SparseMatrix<F>::unflatten(dim, v));
  return out;
}

}  // namespace detail

/// {X : X Y = Y X for every generator Y}; the generators of a are used when
/// recorded, otherwise its elements.
template <class F>
BasicAlgebraBasis<F> commutant_of(std::size_t dim, const std::vector<SparseMatrix<F>>& gens) {
  auto out = detail::solve_commutation(dim, gens, +1);
  out.closed = true;  // a commutant is an algebra
  return out;
}

template <class F>
BasicAlgebraBasis<F> commutant_basis(const BasicAlgebraBasis<F>& a) {
  return commutant_of(a.dim, a.generators.empty() ? a.elements : a.generators);
}

/// {f : g f = -f g for every g in gens}; a linear subspace, not an algebra.
template <class F>
BasicAlgebraBasis<F> anticommutant_basis(std::size_t dim, const std::vector<SparseMatrix<F>>& gens) {
  if (gens.empty()) throw std::invalid_argument("anticommutant needs at least one operator");
  return detail::solve_commutation(dim, gens, -1);
}

template <class F>
bool span_contains(const EchelonSpan<F>& span, const SparseMatrix<F>& m) {
  return span.contains(m.flatten());
}

/// Index of the first element of b outside span(a), if any.
template <class F>
std::optional<std::size_t> first_outside(const BasicAlgebraBasis<F>& a, const BasicAlgebraBasis<F>& b) {
  if (a.dim != b.dim) throw std::invalid_argument("ambient dimension mismatch");
  const EchelonSpan<F> span = flat_span(a);
  for (std::size_t k = 0; k < b.elements.size(); ++k)
    if (!span_contains(span, b.elements[k])) return k;
  return std::nullopt;
}

/// span(a) = span(b), decided by membership in both directions.
template <class F>
bool span_equal(const BasicAlgebraBasis<F>& a, const BasicAlgebraBasis<F>& b) {
  return !first_outside(a, b) && !first_outside(b, a);
}

/// whole = part1 (+) part2: dimensions add up, the concatenated family is
/// independent, and it spans whole.
template <class F>
bool direct_sum_check(const BasicAlgebraBasis<F>& whole, const BasicAlgebraBasis<F>& part1,
                      const BasicAlgebraBasis<F>& part2) {
  if (whole.dim != part1.dim || whole.dim != part2.dim) throw std::invalid_argument("ambient dimension mismatch");
  if (part1.size() + part2.size() != whole.size()) return false;
  EchelonSpan<F> joint(whole.dim * whole.dim);
  for (const auto* part : {&part1, &part2})
    for (const auto& e : part->elements)
      if (!joint.insert(e.flatten())) return false;
  for (const auto& e : whole.elements)
    if (!span_contains(joint, e)) return false;
  return true;
}

template <class F>
BasicAlgebraBasis<F> specialize_basis(const AlgebraBasis& a, const SpecializationPoint& t);

template <>
inline RationalAlgebraBasis specialize_basis<Rational>(const AlgebraBasis& a, const SpecializationPoint& t) {
  RationalAlgebraBasis out;
  out.dim = a.dim;
  out.closed = false;  // independence and closure may fail at special points
  for (const auto& e : a.elements) out.elements.push_back(specialize_matrix(e, t));
  for (const auto& g : a.generators) out.generators.push_back(specialize_matrix(g, t));
  return out;
}

// ------------------------------------------------------------ ranks

enum class RankMode { exact, specialized };

std::string to_string(RankMode mode);
/// "exact" or "specialized"; throws std::invalid_argument otherwise.
RankMode parse_rank_mode(const std::string& text);

/// Raised when specialization points disagree in specialized mode.
class RankDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankCertificate {
  std::size_t rank = 0;
  std::vector<SpecializationPoint> points;  // each gives exactly this rank
  bool exact = false;                       // confirmed by fraction-free elimination over K
};

/// Deterministic stream of rational points avoiding q in {0, 1, -1}.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed);
  SpecializationPoint next();

 private:
  std::uint64_t state_;
};

struct RankOptions {
  RankMode mode = RankMode::specialized;
  std::uint64_t seed = 0;
  std::size_t num_points = 2;
  /// Fixed points replace drawn ones; a pole at a fixed point is an error.
  std::vector<SpecializationPoint> fixed_points;
  std::size_t max_redraws = 32;
};

/// Rank of the span of the matrices. Specialized mode requires agreement of
/// all points (RankDisagreement otherwise). Exact mode computes the rank by
/// Bareiss elimination and redraws points that fall below it.
RankCertificate rank_with_certificate(const std::vector<OperatorMatrix>& matrices, const RankOptions& options);

// ------------------------------------------------------------ m = n structure

/// omega(f) = (-1)^{r(r-1)/2} phi f phi.
template <class F>
SparseMatrix<F> omega(const SparseMatrix<F>& f, const SparseMatrix<F>& phi, int r) {
  const int sign = (r * (r - 1) / 2) % 2 ? -1 : 1;
  return F(sign) * (phi * f * phi);
}

/// (B_q, Z2, psi_1, alpha_1) with psi_1(-1) = omega and alpha_1(-1,-1) = (-1)^{r(r-1)/2}.
/// in_base tests membership in the span of b.
template <class F>
Z2CrossedSystem<SparseMatrix<F>> alt_crossed_system(const SparseMatrix<F>& phi, int r, const BasicAlgebraBasis<F>& b) {
  using M = SparseMatrix<F>;
  const std::size_t dim = phi.dim();
  const auto shared_phi = std::make_shared<const M>(phi);
  const auto span = std::make_shared<const EchelonSpan<F>>(flat_span(b));
  const F sign((r * (r - 1) / 2) % 2 ? -1 : 1);
  Z2CrossedSystem<M> sys;
  sys.one = M::identity(dim);
  sys.act = [shared_phi, r](int s, const M& f) { return s == 1 ? f : omega(f, *shared_phi, r); };
  sys.cocycle = [dim, sign](int s, int t) { return M::scalar(dim, s == -1 && t == -1 ? sign : F(1)); };
  sys.cocycle_inverse = sys.cocycle;  // values are +-I
  sys.mul = [](const M& x, const M& y) { return x * y; };
  sys.equal = [](const M& x, const M& y) { return x == y; };
  sys.in_base = [span](const M& x) { return span_contains(*span, x); };
  return sys;
}

}  // namespace qalt
