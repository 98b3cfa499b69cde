#pragma once

// Checks for Z2 = {1, -1} crossed systems (A, Z2, psi, alpha) and for the
// multiplication law of the crossed product realized inside a larger algebra.

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qalt {

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string expected;
  std::string actual;
  std::string witness;  // first failing instance, empty on success
};

inline bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

template <class E>
struct Z2CrossedSystem {
  std::function<E(int, const E&)> act;       // psi(sigma)(a)
  std::function<E(int, int)> cocycle;        // alpha(sigma, tau)
  std::function<E(int, int)> cocycle_inverse;
  std::function<E(const E&, const E&)> mul;
  std::function<bool(const E&, const E&)> equal;
  std::function<bool(const E&)> in_base;     // membership in A
  E one;
};

namespace detail {

inline const int kZ2[2] = {1, -1};

inline std::string sig(int s) { return s == 1 ? "1" : "-1"; }

class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::size_t cases) : check_{std::move(name), true, "", "", ""} {
    check_.expected = "holds on " + std::to_string(cases) + " cases";
  }
  void record(bool ok, const std::string& where) {
    ++count_;
    if (ok || !check_.passed) {
      if (!ok) ++failures_;
      return;
    }
    check_.passed = false;
    ++failures_;
    check_.witness = where;
  }
  IdentityCheck done() {
    check_.actual = check_.passed ? check_.expected
                                  : std::to_string(failures_) + " of " + std::to_string(count_) + " cases fail";
    return check_;
  }

 private:
  IdentityCheck check_;
  std::size_t count_ = 0, failures_ = 0;
};

}  // namespace detail

/// Axioms (2.1)-(2.3) plus: psi(sigma) maps samples into A and is
/// multiplicative on sample pairs, alpha takes unit values in A.
template <class E>
std::vector<IdentityCheck> check_crossed_system(const Z2CrossedSystem<E>& sys, const std::vector<E>& samples) {
  using detail::kZ2;
  using detail::sig;
  std::vector<IdentityCheck> out;
  const std::size_t n = samples.size();

  {
    detail::CheckBuilder c("weak action preserves the base algebra", 2 * n);
    for (int s : kZ2)
      for (std::size_t k = 0; k < n; ++k) c.record(sys.in_base(sys.act(s, samples[k])), "sigma=" + sig(s) + " a#" + std::to_string(k));
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("weak action is an algebra map", 2 * n * n + 2);
    for (int s : kZ2) {
      c.record(sys.equal(sys.act(s, sys.one), sys.one), "sigma=" + sig(s) + " on 1");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          c.record(sys.equal(sys.act(s, sys.mul(samples[i], samples[j])),
                             sys.mul(sys.act(s, samples[i]), sys.act(s, samples[j]))),
                   "sigma=" + sig(s) + " a#" + std::to_string(i) + " b#" + std::to_string(j));
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("cocycle values are units of the base algebra", 4);
    for (int s : kZ2)
      for (int t : kZ2) {
        const E a = sys.cocycle(s, t), ai = sys.cocycle_inverse(s, t);
        c.record(sys.in_base(a) && sys.equal(sys.mul(a, ai), sys.one) && sys.equal(sys.mul(ai, a), sys.one),
                 "alpha(" + sig(s) + "," + sig(t) + ")");
      }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("(2.1) psi(s)psi(t) = alpha(s,t) psi(st) alpha(s,t)^-1", 4 * n);
    for (int s : kZ2)
      for (int t : kZ2)
        for (std::size_t k = 0; k < n; ++k) {
          const E lhs = sys.act(s, sys.act(t, samples[k]));
          const E rhs = sys.mul(sys.mul(sys.cocycle(s, t), sys.act(s * t, samples[k])), sys.cocycle_inverse(s, t));
          c.record(sys.equal(lhs, rhs), "s=" + sig(s) + " t=" + sig(t) + " a#" + std::to_string(k));
        }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("(2.2) cocycle identity", 8);
    for (int s1 : kZ2)
      for (int s2 : kZ2)
        for (int s3 : kZ2) {
          const E lhs = sys.mul(sys.act(s1, sys.cocycle(s2, s3)), sys.cocycle(s1, s2 * s3));
          const E rhs = sys.mul(sys.cocycle(s1, s2), sys.cocycle(s1 * s2, s3));
          c.record(sys.equal(lhs, rhs), "(" + sig(s1) + "," + sig(s2) + "," + sig(s3) + ")");
        }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("(2.3) normalized cocycle", 4);
    for (int s : kZ2) {
      c.record(sys.equal(sys.cocycle(s, 1), sys.one), "alpha(" + sig(s) + ",1)");
      c.record(sys.equal(sys.cocycle(1, s), sys.one), "alpha(1," + sig(s) + ")");
    }
    out.push_back(c.done());
  }
  return out;
}

/// The four formulas (a1 g_s)(a2 g_t) = a1 psi(s)(a2) alpha(s,t) g_st, where
/// g_s is the image of u_s in the ambient algebra.
template <class E>
IdentityCheck check_crossed_multiplication(const Z2CrossedSystem<E>& sys, const std::function<E(int)>& g,
                                           const std::vector<std::pair<E, E>>& pairs, const std::string& name) {
  using detail::kZ2;
  using detail::sig;
  detail::CheckBuilder c(name, 4 * pairs.size());
  for (int s : kZ2)
    for (int t : kZ2) {
      const E gs = g(s), gt = g(t), gst = g(s * t), alpha = sys.cocycle(s, t);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [a1, a2] = pairs[k];
        const E lhs = sys.mul(sys.mul(a1, gs), sys.mul(a2, gt));
        const E rhs = sys.mul(sys.mul(sys.mul(a1, sys.act(s, a2)), alpha), gst);
        c.record(sys.equal(lhs, rhs), "s=" + sig(s) + " t=" + sig(t) + " pair#" + std::to_string(k));
      }
    }
  return c.done();
}

}  // namespace qalt
