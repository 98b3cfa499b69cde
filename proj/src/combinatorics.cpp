#include "qalt/combinatorics.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qalt {

namespace {

constexpr int kMaxSize = 20;  // r! for the hook length formula stays exact in mpz; d fits 64 bits

void extend(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(int r) {
  if (r < 1 || r > kMaxSize) throw std::invalid_argument("partition size out of range");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(r, r, prefix, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  Partition mu;
  const int cols = lambda.length() ? lambda.parts.front() : 0;
  for (int c = 1; c <= cols; ++c) {
    int rows = 0;
    for (int p : lambda.parts) rows += p >= c;
    mu.parts.push_back(rows);
  }
  return mu;
}

bool is_hook(const Partition& lambda, int m, int n) {
  return lambda.part(m + 1) <= n;  // parts are decreasing, so row m+1 decides
}

HookClassification hook_classify(int m, int n, int r) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
  HookClassification h{m, n, r, {}, {}, {}};
  for (auto& lambda : enumerate_partitions(r)) {
    if (!is_hook(lambda, m, n)) continue;
    (is_hook(conjugate(lambda), m, n) ? h.h0 : h.h1).push_back(lambda);
    h.hooks.push_back(std::move(lambda));
  }
  return h;
}

std::uint64_t d_lambda(const Partition& lambda) {
  const int r = lambda.size();
  if (r > kMaxSize) throw std::invalid_argument("partition too large");
  const Partition mu = conjugate(lambda);
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= r; ++k) num *= k;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) den *= lambda.part(i) - j + mu.part(j) - i + 1;
  const mpz_class d = num / den;
  return d.get_ui();
}

std::string to_string(HookClass c) {
  switch (c) {
    case HookClass::h0_pair: return "h0-pair";
    case HookClass::h0_selfconj: return "h0-selfconj";
    case HookClass::h1: return "h1";
  }
  return "?";
}

DimensionReport predicted_dimensions(int m, int n, int r) {
  if (r < 2) throw std::invalid_argument("dimension predictions need r >= 2");
  const HookClassification h = hook_classify(m, n, r);
  DimensionReport rep;
  rep.m = m, rep.n = n, rep.r = r;
  for (const auto& lambda : h.hooks) {
    LambdaRecord rec{lambda, d_lambda(lambda), HookClass::h1};
    const std::uint64_t sq = rec.d * rec.d;
    rep.dimA += sq;
    if (std::find(h.h0.begin(), h.h0.end(), lambda) == h.h0.end()) {
      rep.dimA1 += sq;
      rep.dimC1 += sq;
    } else if (conjugate(lambda) == lambda) {
      rec.cls = HookClass::h0_selfconj;
      if (rec.d % 2) throw std::logic_error("self-conjugate " + lambda.to_string() + " has odd d");
      rep.dimA0 += sq;
      rep.dimC0 += 2 * (rec.d / 2) * (rec.d / 2);
    } else {
      rec.cls = HookClass::h0_pair;
      rep.dimA0 += sq;
      // lambda and lambda' restrict to the same simple module: count the pair once
      if (conjugate(lambda) < lambda) rep.dimC0 += sq;
    }
    rep.records.push_back(std::move(rec));
  }
  rep.dimC = rep.dimC0 + rep.dimC1;
  return rep;
}

}  // namespace qalt
