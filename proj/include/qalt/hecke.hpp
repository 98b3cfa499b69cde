#pragma once

// The Iwahori-Hecke algebra of type A_{r-1} over K = Q(q).
//
// Basis elements are indexed by normal-form words M_1 M_2 ... M_{r-1} with
// M_i = T_i T_{i-1} ... T_{i-c_i+1}; a word is stored as its descent vector
// (c_1, ..., c_{r-1}). Multiplication uses the length rule on the underlying
// permutations; the defining relations are checked, not used for rewriting.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qalt/qfield.hpp"

namespace qalt {

/// One-line notation with values 0..r-1: perm[p] is the image of p.
using Permutation = std::vector<int>;

class NormalFormWord {
 public:
  /// Throws std::invalid_argument unless 0 <= c_i <= i for every i.
  explicit NormalFormWord(std::vector<int> descents);
  static NormalFormWord identity(int rank);

  int rank() const { return static_cast<int>(descents_.size()) + 1; }
  const std::vector<int>& descents() const { return descents_; }
  int length() const;
  int parity() const { return length() % 2; }
  /// Generator indices (1-based) of M_1 M_2 ... M_{r-1}, left to right.
  std::vector<int> letters() const;
  std::string to_string() const;

  friend auto operator<=>(const NormalFormWord&, const NormalFormWord&) = default;
  friend bool operator==(const NormalFormWord&, const NormalFormWord&) = default;

 private:
  std::vector<int> descents_;
};

/// The permutation s_{a_1} s_{a_2} ... s_{a_k} spelled by the word's letters.
Permutation word_to_permutation(const NormalFormWord& w);

/// Number of inversions.
int permutation_length(const Permutation& p);

/// Static tables for the r! basis words of one rank. Instances are cached
/// and immutable apart from internally synchronized memo tables.
class HeckeBasis {
 public:
  static const HeckeBasis& of(int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return words_.size(); }
  std::size_t identity_index() const { return identity_; }
  const NormalFormWord& word(std::size_t idx) const { return words_[idx]; }
  std::size_t index(const NormalFormWord& w) const;
  const Permutation& permutation(std::size_t idx) const { return perms_[idx]; }
  std::size_t index_of(const Permutation& p) const;
  const std::vector<int>& letters(std::size_t idx) const { return letters_[idx]; }
  int length(std::size_t idx) const { return static_cast<int>(letters_[idx].size()); }

  /// Index of s_i w and whether the length goes up.
  std::size_t left_neighbor(int i, std::size_t idx) const { return left_[slot(i, idx)]; }
  bool left_ascent(int i, std::size_t idx) const { return left_up_[slot(i, idx)]; }
  /// Index of w s_i and whether the length goes up.
  std::size_t right_neighbor(int i, std::size_t idx) const { return right_[slot(i, idx)]; }
  bool right_ascent(int i, std::size_t idx) const { return right_up_[slot(i, idx)]; }

  explicit HeckeBasis(int rank);

 private:
  std::size_t slot(int i, std::size_t idx) const {
    return static_cast<std::size_t>(i - 1) * words_.size() + idx;
  }

  int rank_;
  std::size_t identity_ = 0;
  std::vector<NormalFormWord> words_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<int>> letters_;
  std::map<Permutation, std::size_t> perm_index_;
  std::vector<std::size_t> left_, right_;
  std::vector<bool> left_up_, right_up_;
};

/// Finite K-linear combination of basis words of a fixed rank. The tag
/// distinguishes the T-normal-form basis from the T'-normal-form basis.
template <class BasisTag>
class WordCombination {
 public:
  using Terms = std::map<std::size_t, RationalFunction>;

  explicit WordCombination(int rank) : rank_(rank) { HeckeBasis::of(rank); }
  WordCombination(int rank, Terms terms) : rank_(rank), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  }
  static WordCombination basis_word(const NormalFormWord& w, RationalFunction c = RationalFunction(1)) {
    WordCombination x(w.rank());
    x.add_to(HeckeBasis::of(w.rank()).index(w), c);
    return x;
  }
  static WordCombination identity(int rank, RationalFunction c = RationalFunction(1)) {
    return basis_word(NormalFormWord::identity(rank), std::move(c));
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  /// Coefficients keyed by basis index (see HeckeBasis::word).
  const Terms& indexed_terms() const { return terms_; }
  std::vector<std::pair<NormalFormWord, RationalFunction>> terms() const {
    std::vector<std::pair<NormalFormWord, RationalFunction>> out;
    const auto& basis = HeckeBasis::of(rank_);
    for (const auto& [idx, c] : terms_) out.emplace_back(basis.word(idx), c);
    return out;
  }
  RationalFunction coeff(const NormalFormWord& w) const {
    auto it = terms_.find(HeckeBasis::of(rank_).index(w));
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add_to(std::size_t idx, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WordCombination& operator+=(const WordCombination& o) {
    require_same_rank(o);
    for (const auto& [idx, c] : o.terms_) add_to(idx, c);
    return *this;
  }
  WordCombination& operator-=(const WordCombination& o) {
    require_same_rank(o);
    for (const auto& [idx, c] : o.terms_) add_to(idx, -c);
    return *this;
  }
  WordCombination& operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, v] : terms_) v *= c;
    return *this;
  }
  friend WordCombination operator+(WordCombination a, const WordCombination& b) { return a += b; }
  friend WordCombination operator-(WordCombination a, const WordCombination& b) { return a -= b; }
  friend WordCombination operator*(const RationalFunction& c, WordCombination a) { return a *= c; }
  WordCombination operator-() const {
    WordCombination x = *this;
    for (auto& [idx, v] : x.terms_) v = -v;
    return x;
  }
  friend bool operator==(const WordCombination& a, const WordCombination& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& basis = HeckeBasis::of(rank_);
    for (const auto& [idx, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_string() + "*" + basis.word(idx).to_string();
    }
    return out;
  }

  void require_same_rank(const WordCombination& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("rank mismatch between Hecke elements");
  }

 private:
  int rank_;
  Terms terms_;
};

struct TBasisTag {};
struct TPrimeBasisTag {};

/// Element of H_{K,r}(q) in the T-normal-form basis.
using HeckeElement = WordCombination<TBasisTag>;
/// Coordinates with respect to the T'-normal-form basis.
using TPrimeExpansion = WordCombination<TPrimeBasisTag>;

/// T_i, 1 <= i <= r-1.
HeckeElement generator(int rank, int i);
/// T'_i = (2 T_i - (q - q^-1)) / (q + q^-1).
HeckeElement tprime(int rank, int i);

HeckeElement left_multiply(int i, const HeckeElement& x);          // T_i x
HeckeElement right_multiply(const HeckeElement& x, int i);         // x T_i
HeckeElement left_multiply_tprime(int i, const HeckeElement& x);   // T'_i x
HeckeElement right_multiply_tprime(const HeckeElement& x, int i);  // x T'_i

/// Product in H_{K,r}(q). Throws std::invalid_argument on rank mismatch.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
HeckeElement power(const HeckeElement& a, int exponent);

/// Goldman involution, T_i -> (q - q^-1) - T_i, extended multiplicatively.
HeckeElement goldman(const HeckeElement& x);
/// (x + sign * goldman(x)) / 2 for sign = +1 or -1.
HeckeElement goldman_eigenproject(const HeckeElement& x, int sign);

/// T'-normal-form word T'_{a_1} ... T'_{a_k} expanded in the T basis.
HeckeElement tprime_word(const NormalFormWord& w);
TPrimeExpansion to_tprime_basis(const HeckeElement& x);
HeckeElement from_tprime_basis(const TPrimeExpansion& y);

/// T'_i y computed directly in T'-coordinates.
TPrimeExpansion left_multiply_tprime(int i, const TPrimeExpansion& y);
/// T'-coordinates of T'_i T'_w for the basis word with index w (memoized).
TPrimeExpansion::Terms tprime_left_multiplication_column(int rank, int i, std::size_t w);

}  // namespace qalt
