#include "qalt/linalg.hpp"

namespace qalt {

namespace {

using LRow = std::map<std::size_t, LaurentPolynomial>;

LaurentPolynomial exact_laurent_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return a;
  const int ka = a.low_degree(), kb = b.low_degree();
  auto [quot, rem] = polynomial_divmod(a.shifted(-ka), b.shifted(-kb));
  if (!rem.is_zero()) throw std::logic_error("Bareiss step left a remainder");
  return quot.shifted(ka - kb);
}

// Row scaled by the lcm of its denominators.
LRow clear_denominators(const SparseVector<RationalFunction>& v) {
  LaurentPolynomial lcm(1);
  for (const auto& [i, x] : v) {
    const LaurentPolynomial& d = x.denominator();
    if (d.is_one()) continue;
    const LaurentPolynomial g = polynomial_gcd(lcm, d);
    lcm = lcm * polynomial_divmod(d, g).first;
  }
  LRow row;
  for (const auto& [i, x] : v) row.emplace(i, x.numerator() * polynomial_divmod(lcm, x.denominator()).first);
  return row;
}

}  // namespace

std::size_t bareiss_rank(const std::vector<SparseVector<RationalFunction>>& rows, std::size_t length) {
  std::vector<LRow> work;
  for (const auto& v : rows) {
    for (const auto& [i, x] : v)
      if (i >= length) throw std::out_of_range("vector index beyond length");
    if (!v.empty()) work.push_back(clear_denominators(v));
  }
  LaurentPolynomial prev(1);
  std::size_t rank = 0;
  while (!work.empty()) {
    // sparsest remaining row supplies the pivot at its first column
    std::size_t best = 0;
    for (std::size_t k = 1; k < work.size(); ++k)
      if (work[k].size() < work[best].size()) best = k;
    LRow pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    const std::size_t col = pivot.begin()->first;
    const LaurentPolynomial p = pivot.begin()->second;
    std::vector<LRow> next;
    next.reserve(work.size());
    for (auto& row : work) {
      auto hit = row.find(col);
      LRow updated;
      if (hit == row.end()) {
        for (auto& [c, x] : row) updated.emplace(c, exact_laurent_div(p * x, prev));
      } else {
        const LaurentPolynomial f = hit->second;
        row.erase(hit);
        for (const auto& [c, x] : row) updated.emplace(c, p * x);
        for (auto it = std::next(pivot.begin()); it != pivot.end(); ++it) {
          auto [pos, inserted] = updated.try_emplace(it->first);
          pos->second -= f * it->second;
        }
        for (auto it = updated.begin(); it != updated.end();) {
          if (it->second.is_zero()) {
            it = updated.erase(it);
          } else {
            it->second = exact_laurent_div(it->second, prev);
            ++it;
          }
        }
      }
      if (!updated.empty()) next.push_back(std::move(updated));
    }
    work = std::move(next);
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace qalt
