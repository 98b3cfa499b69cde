#pragma once

// Sparse exact linear algebra over a field F (RationalFunction or Rational).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qalt/qfield.hpp"

namespace qalt {

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const RationalFunction& x) { return x.is_zero(); }
inline std::string field_to_string(const Rational& x) { return x.get_str(); }
inline std::string field_to_string(const RationalFunction& x) { return x.to_string(); }

/// Sorted (index, value) pairs with no zero values.
template <class F>
using SparseVector = std::vector<std::pair<std::size_t, F>>;

/// Square matrix stored as sorted sparse rows.
template <class F>
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, F>>;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t dim) : dim_(dim), rows_(dim) {}
  static SparseMatrix identity(std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, F(1));
    return m;
  }
  static SparseMatrix scalar(std::size_t dim, const F& c) {
    SparseMatrix m(dim);
    if (!field_is_zero(c))
      for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, c);
    return m;
  }

  std::size_t dim() const { return dim_; }
  const Row& row(std::size_t r) const { return rows_[r]; }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  F get(std::size_t r, std::size_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? it->second : F();
  }

  void add_to(std::size_t r, std::size_t c, const F& v) {
    if (field_is_zero(v)) return;
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (field_is_zero(it->second)) row.erase(it);
    } else {
      row.insert(it, {c, v});
    }
  }

  void set(std::size_t r, std::size_t c, const F& v) {
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (field_is_zero(v)) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      row.insert(it, {c, v});
    }
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    a.require_same_dim(b);
    SparseMatrix out(a.dim_);
    std::vector<F> acc(a.dim_);
    std::vector<char> touched(a.dim_, 0);
    std::vector<std::size_t> cols;
    for (std::size_t r = 0; r < a.dim_; ++r) {
      cols.clear();
      for (const auto& [k, x] : a.rows_[r]) {
        for (const auto& [c, y] : b.rows_[k]) {
          if (!touched[c]) {
            touched[c] = 1;
            cols.push_back(c);
            acc[c] = x * y;
          } else {
            acc[c] += x * y;
          }
        }
      }
      std::sort(cols.begin(), cols.end());
      Row& row = out.rows_[r];
      for (std::size_t c : cols) {
        touched[c] = 0;
        if (!field_is_zero(acc[c])) row.emplace_back(c, std::move(acc[c]));
        acc[c] = F();
      }
    }
    return out;
  }

  SparseMatrix& operator+=(const SparseMatrix& o) { return combine(o, false); }
  SparseMatrix& operator-=(const SparseMatrix& o) { return combine(o, true); }
  SparseMatrix& operator*=(const F& c) {
    if (field_is_zero(c)) return *this = SparseMatrix(dim_);
    for (auto& row : rows_)
      for (auto& e : row) e.second *= c;
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const F& c, SparseMatrix a) { return a *= c; }
  SparseMatrix operator-() const {
    SparseMatrix m = *this;
    for (auto& row : m.rows_)
      for (auto& e : row) e.second = -e.second;
    return m;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

  /// Row-major flattening; entry (r, c) has index r * dim + c.
  SparseVector<F> flatten() const {
    SparseVector<F> v;
    v.reserve(nnz());
    for (std::size_t r = 0; r < dim_; ++r)
      for (const auto& [c, x] : rows_[r]) v.emplace_back(r * dim_ + c, x);
    return v;
  }
  static SparseMatrix unflatten(std::size_t dim, const SparseVector<F>& v) {
    SparseMatrix m(dim);
    for (const auto& [idx, x] : v) m.rows_[idx / dim].emplace_back(idx % dim, x);
    return m;
  }

  /// Entrywise image; zero images are dropped.
  template <class G, class Fn>
  SparseMatrix<G> map(Fn&& fn) const {
    SparseMatrix<G> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (const auto& [c, x] : rows_[r]) {
        G y = fn(x, r, c);
        if (!field_is_zero(y)) out.add_to(r, c, y);
      }
    return out;
  }

  void require_same_dim(const SparseMatrix& o) const {
    if (o.dim_ != dim_)
      throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                                  std::to_string(o.dim_));
  }

 private:
  SparseMatrix& combine(const SparseMatrix& o, bool subtract) {
    require_same_dim(o);
    for (std::size_t r = 0; r < dim_; ++r) {
      if (o.rows_[r].empty()) continue;
      Row merged;
      merged.reserve(rows_[r].size() + o.rows_[r].size());
      auto a = rows_[r].begin(), ae = rows_[r].end();
      auto b = o.rows_[r].begin(), be = o.rows_[r].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
          merged.emplace_back(b->first, subtract ? F(-b->second) : b->second);
          ++b;
        } else {
          F s = subtract ? F(a->second - b->second) : F(a->second + b->second);
          if (!field_is_zero(s)) merged.emplace_back(a->first, std::move(s));
          ++a, ++b;
        }
      }
      rows_[r] = std::move(merged);
    }
    return *this;
  }

  std::size_t dim_ = 0;
  std::vector<Row> rows_;
};

/// Incrementally built row echelon form. Every stored row has leading entry 1
/// at its pivot column and no other row shares that pivot. Candidates are
/// reduced in insertion order, always eliminating the lowest column first.
template <class F>
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t length) : length_(length), pivot_row_(length, kNone) {}

  std::size_t length() const { return length_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector<F>>& rows() const { return rows_; }

  /// Residue of v modulo the span. With stop_at_free the reduction stops at
  /// the first non-pivot column (enough to decide membership).
  SparseVector<F> reduce(const SparseVector<F>& v, bool stop_at_free = false) const {
    std::map<std::size_t, F> acc;
    for (const auto& [i, x] : v) {
      check_index(i);
      if (!field_is_zero(x)) acc.emplace_hint(acc.end(), i, x);
    }
    auto it = acc.begin();
    while (it != acc.end()) {
      const std::size_t col = it->first;
      const std::size_t p = pivot_row_[col];
      if (p == kNone) {
        if (stop_at_free) break;
        ++it;
        continue;
      }
      const F factor = it->second;
      it = acc.erase(it);
      const auto& row = rows_[p];
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto [pos, inserted] = acc.try_emplace(row[k].first);
        if (inserted) {
          pos->second = -(factor * row[k].second);
        } else {
          pos->second -= factor * row[k].second;
          if (field_is_zero(pos->second)) acc.erase(pos);
        }
      }
      it = acc.lower_bound(col);
    }
    return SparseVector<F>(std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v, true).empty(); }

  /// Adds v to the span; returns false when it was already dependent.
  bool insert(const SparseVector<F>& v) {
    SparseVector<F> res = reduce(v);
    if (res.empty()) return false;
    const F lead = res.front().second;
    if (!(lead == F(1)))
      for (auto& e : res) e.second /= lead;
    pivot_row_[res.front().first] = rows_.size();
    rows_.push_back(std::move(res));
    return true;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& r : rows_) p.push_back(r.front().first);
    return p;
  }

  /// Basis of {x : row . x = 0 for every stored row}, one vector per free
  /// column in increasing order, with a 1 at that column.
  std::vector<SparseVector<F>> nullspace() const {
    // bring the rows to reduced echelon form, largest pivot first
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    EchelonSpan reduced(length_);
    std::vector<std::vector<std::pair<std::size_t, F>>> by_free(length_);
    for (std::size_t k : order) {
      const auto& row = rows_[k];
      SparseVector<F> tail(row.begin() + 1, row.end());
      tail = reduced.reduce(tail);
      const std::size_t pivot = row.front().first;
      SparseVector<F> full;
      full.reserve(tail.size() + 1);
      full.emplace_back(pivot, F(1));
      for (auto& e : tail) {
        by_free[e.first].emplace_back(pivot, -e.second);
        full.push_back(std::move(e));
      }
      reduced.pivot_row_[pivot] = reduced.rows_.size();
      reduced.rows_.push_back(std::move(full));
    }
    std::vector<SparseVector<F>> basis;
    for (std::size_t col = 0; col < length_; ++col) {
      if (pivot_row_[col] != kNone) continue;
      SparseVector<F> v = std::move(by_free[col]);
      v.emplace_back(col, F(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void check_index(std::size_t i) const {
    if (i >= length_) throw std::out_of_range("vector index beyond span length");
  }

  std::size_t length_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseVector<F>> rows_;
};

template <class F>
std::size_t rank_of(const std::vector<SparseVector<F>>& vectors, std::size_t length) {
  EchelonSpan<F> span(length);
  for (const auto& v : vectors) span.insert(v);
  return span.rank();
}

/// Rank by fraction-free (Bareiss) elimination over Q[q, q^-1]: rows are
/// first cleared of denominators, then every update is an exact division by
/// the previous pivot.
std::size_t bareiss_rank(const std::vector<SparseVector<RationalFunction>>& rows, std::size_t length);

}  // namespace qalt
