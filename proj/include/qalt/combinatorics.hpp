#pragma once

// Partitions, (m,n)-hooks and the dimension predictions for A_q and C_q.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qalt {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  /// lambda_j for 1-based j; 0 beyond the last row.
  int part(int j) const { return j >= 1 && j <= length() ? parts[j - 1] : 0; }
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of r, descending lexicographic order: (r) first, (1^r) last.
std::vector<Partition> enumerate_partitions(int r);
Partition conjugate(const Partition& lambda);
/// lambda_j <= n for every j > m.
bool is_hook(const Partition& lambda, int m, int n);

struct HookClassification {
  int m = 0, n = 0, r = 0;
  std::vector<Partition> hooks;  // H(m,n;r)
  std::vector<Partition> h0;     // conjugate also a hook
  std::vector<Partition> h1;     // hooks \ h0
};

/// Throws std::invalid_argument when m + n < 1 or r < 1.
HookClassification hook_classify(int m, int n, int r);

/// Number of standard tableaux of shape lambda (hook length formula).
std::uint64_t d_lambda(const Partition& lambda);

enum class HookClass { h0_pair, h0_selfconj, h1 };
std::string to_string(HookClass c);

struct LambdaRecord {
  Partition lambda;
  std::uint64_t d = 0;
  HookClass cls = HookClass::h1;
};

struct DimensionReport {
  int m = 0, n = 0, r = 0;
  std::vector<LambdaRecord> records;  // one per hook partition, enumeration order
  std::uint64_t dimA = 0, dimA0 = 0, dimA1 = 0;
  std::uint64_t dimC = 0, dimC0 = 0, dimC1 = 0;
};

/// dimA = sum over hooks of d^2; dimC merges each pair {lambda, lambda'} in H0
/// into one d^2, splits self-conjugate shapes into 2 (d/2)^2 and keeps H1.
/// Requires r >= 2. Throws std::logic_error if a self-conjugate shape has odd d.
DimensionReport predicted_dimensions(int m, int n, int r);

}  // namespace qalt
