#include "qalt/hecke.hpp"

#include <numeric>
#include <optional>

namespace qalt {

namespace {

constexpr int kMaxRank = 8;

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("Hecke rank must lie in [1, " + std::to_string(kMaxRank) + "]");
}

void check_generator(int rank, int i) {
  if (i < 1 || i > rank - 1)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for rank " +
                                std::to_string(rank));
}

// Coefficients of T'_i: T'_i T_w = a T_{s_i w} -/+ b T_w depending on ascent.
const RationalFunction& tp_a() {
  static const RationalFunction a = RationalFunction(2) / q_plus_qinv();
  return a;
}
const RationalFunction& tp_b() {
  static const RationalFunction b = q_minus_qinv() / q_plus_qinv();
  return b;
}

}  // namespace

NormalFormWord::NormalFormWord(std::vector<int> descents) : descents_(std::move(descents)) {
  check_rank(rank());
  for (std::size_t i = 0; i < descents_.size(); ++i)
    if (descents_[i] < 0 || descents_[i] > static_cast<int>(i) + 1)
      throw std::invalid_argument("descent c_" + std::to_string(i + 1) + " out of range");
}

NormalFormWord NormalFormWord::identity(int rank) {
  check_rank(rank);
  return NormalFormWord(std::vector<int>(rank - 1, 0));
}

int NormalFormWord::length() const { return std::accumulate(descents_.begin(), descents_.end(), 0); }

std::vector<int> NormalFormWord::letters() const {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(descents_.size()); ++i)
    for (int k = 0; k < descents_[i - 1]; ++k) out.push_back(i - k);
  return out;
}

std::string NormalFormWord::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < descents_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(descents_[i]);
  }
  return out + "]";
}

Permutation word_to_permutation(const NormalFormWord& w) {
  Permutation p(w.rank());
  std::iota(p.begin(), p.end(), 0);
  for (int a : w.letters()) std::swap(p[a - 1], p[a]);  // right multiplication by s_a
  return p;
}

int permutation_length(const Permutation& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}

// ---------------------------------------------------------------------------

HeckeBasis::HeckeBasis(int rank) : rank_(rank) {
  check_rank(rank);
  // odometer over descent vectors, lexicographic in (c_1, ..., c_{r-1})
  std::vector<int> c(rank - 1, 0);
  while (true) {
    words_.emplace_back(c);
    int pos = rank - 2;
    while (pos >= 0 && c[pos] == pos + 1) c[pos--] = 0;
    if (pos < 0) break;
    ++c[pos];
  }
  for (std::size_t idx = 0; idx < words_.size(); ++idx) {
    perms_.push_back(word_to_permutation(words_[idx]));
    letters_.push_back(words_[idx].letters());
    if (!perm_index_.emplace(perms_.back(), idx).second)
      throw std::logic_error("normal-form words are not distinct as permutations");
  }
  identity_ = 0;

  const std::size_t n = words_.size(), gens = rank > 1 ? rank - 1 : 0;
  left_.resize(gens * n);
  right_.resize(gens * n);
  left_up_.resize(gens * n);
  right_up_.resize(gens * n);
  for (int i = 1; i <= static_cast<int>(gens); ++i) {
    for (std::size_t idx = 0; idx < n; ++idx) {
      const Permutation& p = perms_[idx];
      // s_i w swaps the values i-1, i; w s_i swaps the positions i-1, i
      Permutation l = p, r = p;
      auto a = std::find(l.begin(), l.end(), i - 1), b = std::find(l.begin(), l.end(), i);
      const bool left_up = a < b;
      std::iter_swap(a, b);
      std::swap(r[i - 1], r[i]);
      left_[slot(i, idx)] = perm_index_.at(l);
      left_up_[slot(i, idx)] = left_up;
      right_[slot(i, idx)] = perm_index_.at(r);
      right_up_[slot(i, idx)] = p[i - 1] < p[i];
    }
  }
}

const HeckeBasis& HeckeBasis::of(int rank) {
  check_rank(rank);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HeckeBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_unique<HeckeBasis>(rank);
  return *slot;
}

std::size_t HeckeBasis::index(const NormalFormWord& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("word rank does not match basis rank");
  // position in the odometer order: mixed radix with digit i in base i+1
  std::size_t idx = 0;
  for (std::size_t i = 0; i < w.descents().size(); ++i)
    idx = idx * (i + 2) + static_cast<std::size_t>(w.descents()[i]);
  return idx;
}

std::size_t HeckeBasis::index_of(const Permutation& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) throw std::invalid_argument("not a permutation of the basis rank");
  return it->second;
}

// ---------------------------------------------------------------------------

HeckeElement generator(int rank, int i) {
  check_generator(rank, i);
  std::vector<int> c(rank - 1, 0);
  c[i - 1] = 1;
  return HeckeElement::basis_word(NormalFormWord(c));
}

HeckeElement tprime(int rank, int i) {
  return left_multiply_tprime(i, HeckeElement::identity(rank));
}

HeckeElement left_multiply(int i, const HeckeElement& x) {
  check_generator(x.rank(), i);
  const auto& basis = HeckeBasis::of(x.rank());
  HeckeElement out(x.rank());
  for (const auto& [w, c] : x.indexed_terms()) {
    out.add_to(basis.left_neighbor(i, w), c);
    if (!basis.left_ascent(i, w)) out.add_to(w, q_minus_qinv() * c);
  }
  return out;
}

HeckeElement right_multiply(const HeckeElement& x, int i) {
  check_generator(x.rank(), i);
  const auto& basis = HeckeBasis::of(x.rank());
  HeckeElement out(x.rank());
  for (const auto& [w, c] : x.indexed_terms()) {
    out.add_to(basis.right_neighbor(i, w), c);
    if (!basis.right_ascent(i, w)) out.add_to(w, q_minus_qinv() * c);
  }
  return out;
}

// T'_i T_w = a T_{s_i w} - b T_w on an ascent, a T_{s_i w} + b T_w on a descent.
HeckeElement left_multiply_tprime(int i, const HeckeElement& x) {
  check_generator(x.rank(), i);
  const auto& basis = HeckeBasis::of(x.rank());
  HeckeElement out(x.rank());
  for (const auto& [w, c] : x.indexed_terms()) {
    out.add_to(basis.left_neighbor(i, w), tp_a() * c);
    const RationalFunction bc = tp_b() * c;
    out.add_to(w, basis.left_ascent(i, w) ? -bc : bc);
  }
  return out;
}

HeckeElement right_multiply_tprime(const HeckeElement& x, int i) {
  check_generator(x.rank(), i);
  const auto& basis = HeckeBasis::of(x.rank());
  HeckeElement out(x.rank());
  for (const auto& [w, c] : x.indexed_terms()) {
    out.add_to(basis.right_neighbor(i, w), tp_a() * c);
    const RationalFunction bc = tp_b() * c;
    out.add_to(w, basis.right_ascent(i, w) ? -bc : bc);
  }
  return out;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  a.require_same_rank(b);
  const auto& basis = HeckeBasis::of(a.rank());
  HeckeElement out(a.rank());
  // expand the sparser factor into generator letters
  if (a.support_size() <= b.support_size()) {
    for (const auto& [u, c] : a.indexed_terms()) {
      HeckeElement t = b;
      const auto& letters = basis.letters(u);
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) t = left_multiply(*it, t);
      out += c * std::move(t);
    }
  } else {
    for (const auto& [u, c] : b.indexed_terms()) {
      HeckeElement t = a;
      for (int letter : basis.letters(u)) t = right_multiply(t, letter);
      out += c * std::move(t);
    }
  }
  return out;
}

HeckeElement power(const HeckeElement& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  HeckeElement out = HeckeElement::identity(a.rank());
  for (int k = 0; k < exponent; ++k) out = multiply(out, a);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Goldman images of basis words, memoized per rank.
class GoldmanTable {
 public:
  const HeckeElement& image(int rank, std::size_t idx) {
    std::lock_guard lock(mu_);
    return image_locked(rank, idx);
  }

 private:
  const HeckeElement& image_locked(int rank, std::size_t idx) {
    auto& row = cache_[rank];
    const auto& basis = HeckeBasis::of(rank);
    if (row.empty()) row.resize(basis.size());
    if (!row[idx]) {
      if (basis.length(idx) == 0) {
        row[idx] = HeckeElement::identity(rank);
      } else {
        // T_w = T_a T_{s_a w} with a the first letter; hat(T_a) = (q-q^-1) - T_a
        const int a = basis.letters(idx).front();
        HeckeElement tail = image_locked(rank, basis.left_neighbor(a, idx));
        HeckeElement img = q_minus_qinv() * tail;
        img -= left_multiply(a, tail);
        row[idx] = std::move(img);
      }
    }
    return *row[idx];
  }

  std::mutex mu_;
  std::map<int, std::vector<std::optional<HeckeElement>>> cache_;
};

GoldmanTable& goldman_table() {
  static GoldmanTable t;
  return t;
}

// U_i = (q + q^-1) T'_i = 2 T_i - (q - q^-1) keeps every coefficient in
// Q[q, q^-1]; U-words are memoized on letter suffixes.
HeckeElement left_multiply_u(int i, const HeckeElement& x) {
  HeckeElement out = left_multiply(i, x);
  out *= RationalFunction(2);
  out -= q_minus_qinv() * x;
  return out;
}

class UWordTable {
 public:
  HeckeElement word(int rank, const std::vector<int>& letters) {
    std::lock_guard lock(mu_);
    return suffix(rank, letters, 0);
  }

  // U_i U_w in U-coordinates, memoized per (rank, i, w).
  HeckeElement::Terms product(int rank, int i, std::size_t w) {
    std::lock_guard lock(mu_);
    auto& row = products_[rank];
    const auto key = std::make_pair(i, w);
    auto it = row.find(key);
    if (it != row.end()) return it->second;
    const auto& basis = HeckeBasis::of(rank);
    HeckeElement x = left_multiply_u(i, suffix(rank, basis.letters(w), 0));
    return row.emplace(key, coordinates_locked(std::move(x))).first->second;
  }

  HeckeElement::Terms coordinates(HeckeElement x) {
    std::lock_guard lock(mu_);
    return coordinates_locked(std::move(x));
  }

 private:
  const HeckeElement& suffix(int rank, const std::vector<int>& letters, std::size_t from) {
    std::vector<int> key(letters.begin() + static_cast<std::ptrdiff_t>(from), letters.end());
    auto& row = cache_[rank];
    auto it = row.find(key);
    if (it != row.end()) return it->second;
    HeckeElement value = from == letters.size()
                             ? HeckeElement::identity(rank)
                             : left_multiply_u(letters[from], suffix(rank, letters, from + 1));
    return row.emplace(std::move(key), std::move(value)).first->second;
  }

  // U_w = 2^l(w) T_w + (shorter words): peel off the longest terms.
  HeckeElement::Terms coordinates_locked(HeckeElement rest) {
    const auto& basis = HeckeBasis::of(rest.rank());
    HeckeElement::Terms out;
    while (!rest.is_zero()) {
      std::size_t best = rest.indexed_terms().begin()->first;
      for (const auto& [w, c] : rest.indexed_terms())
        if (basis.length(w) > basis.length(best)) best = w;
      Rational scale(1);
      mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), static_cast<unsigned long>(basis.length(best)));
      const RationalFunction y = rest.indexed_terms().at(best) * RationalFunction(scale);
      rest -= y * suffix(rest.rank(), basis.letters(best), 0);
      out.emplace(best, y);
    }
    return out;
  }

  std::mutex mu_;
  std::map<int, std::map<std::vector<int>, HeckeElement>> cache_;
  std::map<int, std::map<std::pair<int, std::size_t>, HeckeElement::Terms>> products_;
};

UWordTable& u_table() {
  static UWordTable t;
  return t;
}

// (q + q^-1)^k for k of either sign.
RationalFunction qpq_power(int k) {
  static std::mutex mu;
  static std::map<int, RationalFunction> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  RationalFunction base = k >= 0 ? q_plus_qinv() : q_plus_qinv().inverse(), out(1);
  for (int j = 0; j < (k >= 0 ? k : -k); ++j) out *= base;
  return cache.emplace(k, out).first->second;
}

}  // namespace

HeckeElement goldman(const HeckeElement& x) {
  HeckeElement out(x.rank());
  for (const auto& [w, c] : x.indexed_terms()) out += c * goldman_table().image(x.rank(), w);
  return out;
}

HeckeElement goldman_eigenproject(const HeckeElement& x, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  HeckeElement g = goldman(x);
  HeckeElement out = sign == 1 ? x + g : x - g;
  return out *= RationalFunction(Rational(1, 2));
}

HeckeElement tprime_word(const NormalFormWord& w) {
  HeckeElement x = u_table().word(w.rank(), w.letters());
  return x *= qpq_power(-w.length());
}

TPrimeExpansion to_tprime_basis(const HeckeElement& x) {
  const auto& basis = HeckeBasis::of(x.rank());
  TPrimeExpansion out(x.rank());
  for (const auto& [w, y] : u_table().coordinates(x)) out.add_to(w, y * qpq_power(basis.length(w)));
  return out;
}

HeckeElement from_tprime_basis(const TPrimeExpansion& y) {
  const auto& basis = HeckeBasis::of(y.rank());
  HeckeElement out(y.rank());
  for (const auto& [w, c] : y.indexed_terms())
    out += (c * qpq_power(-basis.length(w))) * u_table().word(y.rank(), basis.letters(w));
  return out;
}

TPrimeExpansion left_multiply_tprime(int i, const TPrimeExpansion& y) {
  check_generator(y.rank(), i);
  const auto& basis = HeckeBasis::of(y.rank());
  TPrimeExpansion out(y.rank());
  // T'_i T'_w = (q+q^-1)^(-1-l(w)) U_i U_w and U_v = (q+q^-1)^l(v) T'_v
  for (const auto& [w, c] : y.indexed_terms())
    for (const auto& [v, d] : u_table().product(y.rank(), i, w))
      out.add_to(v, c * d * qpq_power(basis.length(v) - 1 - basis.length(w)));
  return out;
}

TPrimeExpansion::Terms tprime_left_multiplication_column(int rank, int i, std::size_t w) {
  check_generator(rank, i);
  const auto& basis = HeckeBasis::of(rank);
  TPrimeExpansion::Terms out;
  for (const auto& [v, d] : u_table().product(rank, i, w))
    out.emplace(v, d * qpq_power(basis.length(v) - 1 - basis.length(w)));
  return out;
}

}  // namespace qalt
