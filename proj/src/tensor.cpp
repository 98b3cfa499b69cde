#include "qalt/tensor.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qalt {

namespace {

constexpr std::size_t kMaxDim = 4096;

RationalFunction qpow(int e) { return RationalFunction(LaurentPolynomial::monomial(1, e)); }

std::size_t stride(const GradedSpace& s, int pos) {  // pos is 0-based
  std::size_t st = 1;
  for (int p = pos + 1; p < s.r(); ++p) st *= static_cast<std::size_t>(s.local_dim());
  return st;
}

void require_site(const GradedSpace& s, int i) {
  if (i < 1 || i >= s.r())
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(s.r() - 1));
}

struct Emit {
  int k, l;
  RationalFunction c;
};

// Id^{i-1} (x) op (x) Id^{r-i-1} where op(v_k (x) v_l) = sum of emitted terms.
template <class Fn>
OperatorMatrix two_site(const GradedSpace& s, int i, Fn op) {
  require_site(s, i);
  const std::size_t st0 = stride(s, i - 1), st1 = stride(s, i);
  const std::size_t d = static_cast<std::size_t>(s.local_dim());
  OperatorMatrix out(s.dim());
  std::vector<Emit> terms;
  for (std::size_t col = 0; col < s.dim(); ++col) {
    const int k = static_cast<int>(col / st0 % d) + 1, l = static_cast<int>(col / st1 % d) + 1;
    const std::size_t base = col - (k - 1) * st0 - (l - 1) * st1;
    terms.clear();
    op(k, l, terms);
    for (const auto& t : terms) out.add_to(base + (t.k - 1) * st0 + (t.l - 1) * st1, col, t.c);
  }
  return out;
}

// One-site operator sending v_j to sign * q^exp * v_target (target 0 kills v_j).
struct SiteOp {
  std::vector<int> target, sign, exp;  // indexed by j - 1

  static SiteOp diagonal(int d) {
    SiteOp op;
    op.target.resize(d);
    op.sign.assign(d, 1);
    op.exp.assign(d, 0);
    for (int j = 1; j <= d; ++j) op.target[j - 1] = j;
    return op;
  }
};

// Plain (unsigned) tensor product of one-site monomial operators.
OperatorMatrix site_product(const GradedSpace& s, const std::vector<const SiteOp*>& sites) {
  OperatorMatrix out(s.dim());
  for (std::size_t col = 0; col < s.dim(); ++col) {
    const TensorIndex u = s.letters(col);
    TensorIndex v(u.size());
    int sign = 1, e = 0;
    bool dead = false;
    for (int p = 0; p < s.r() && !dead; ++p) {
      const SiteOp& op = *sites[p];
      const int j = u[p] - 1;
      v[p] = op.target[j];
      dead = v[p] == 0;
      sign *= op.sign[j];
      e += op.exp[j];
    }
    if (dead) continue;
    out.add_to(s.index(v), col, RationalFunction(LaurentPolynomial::monomial(sign, e)));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ GradedSpace

GradedSpace::GradedSpace(int m, int n, int r) : m_(m), n_(n), r_(r), dim_(1) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
  if (r < 1) throw std::invalid_argument("need r >= 1");
  for (int k = 0; k < r; ++k) {
    dim_ *= static_cast<std::size_t>(m + n);
    if (dim_ > kMaxDim) throw std::invalid_argument("tensor space dimension exceeds " + std::to_string(kMaxDim));
  }
}

int GradedSpace::degree_of(std::size_t idx) const {
  int total = 0;
  for (int k : letters(idx)) total += degree(k);
  return total;
}

TensorIndex GradedSpace::letters(std::size_t idx) const {
  if (idx >= dim_) throw std::out_of_range("tensor index out of range");
  TensorIndex out(r_);
  const std::size_t d = static_cast<std::size_t>(local_dim());
  for (int p = r_ - 1; p >= 0; --p) {
    out[p] = static_cast<int>(idx % d) + 1;
    idx /= d;
  }
  return out;
}

std::size_t GradedSpace::index(const TensorIndex& letters) const {
  if (static_cast<int>(letters.size()) != r_) throw std::invalid_argument("tensor index has wrong length");
  std::size_t idx = 0;
  for (int k : letters) {
    if (k < 1 || k > local_dim()) throw std::invalid_argument("tensor letter out of range");
    idx = idx * static_cast<std::size_t>(local_dim()) + static_cast<std::size_t>(k - 1);
  }
  return idx;
}

std::string GradedSpace::to_string() const {
  return "V(" + std::to_string(m_) + "|" + std::to_string(n_) + ")^" + std::to_string(r_);
}

// ------------------------------------------------------------ RootDatum

RootDatum::RootDatum(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
}

void RootDatum::require_index(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple root index " + std::to_string(i) + " not in I");
}

int RootDatum::parity(int i) const {
  require_index(i);
  return i == m_ ? 1 : 0;
}

int RootDatum::form(int a, int b) const {
  if (a != b) return 0;
  return a <= m_ ? 1 : -1;
}

int RootDatum::root_pairing(int i, int j) const {
  require_index(i);
  return form(i, j) - form(i + 1, j);
}

// ------------------------------------------------------------ pi_r

OperatorMatrix pi_T(int i, const GradedSpace& space) {
  const RationalFunction qq = RationalFunction::q(), qi = -qpow(-1), a = q_minus_qinv();
  return two_site(space, i, [&](int k, int l, std::vector<Emit>& out) {
    const int sign = space.degree(k) && space.degree(l) ? -1 : 1;
    if (k == l) {
      out.push_back({k, l, space.degree(k) ? qi : qq});
      return;
    }
    out.push_back({l, k, RationalFunction(sign)});
    if (k < l) out.push_back({k, l, a});
  });
}

OperatorMatrix pi_Tprime(int i, const GradedSpace& space) {
  const RationalFunction two = RationalFunction(2) / q_plus_qinv(), b = q_minus_qinv() / q_plus_qinv();
  return two_site(space, i, [&](int k, int l, std::vector<Emit>& out) {
    if (k == l) {
      out.push_back({k, l, RationalFunction(space.degree(k) ? -1 : 1)});
      return;
    }
    const int sign = space.degree(k) && space.degree(l) ? -1 : 1;
    out.push_back({l, k, sign * two});
    out.push_back({k, l, k < l ? b : -b});
  });
}

OperatorMatrix pi_U(int i, const GradedSpace& space) {
  const RationalFunction a = q_minus_qinv(), s = q_plus_qinv();
  return two_site(space, i, [&](int k, int l, std::vector<Emit>& out) {
    if (k == l) {
      out.push_back({k, l, space.degree(k) ? -s : s});
      return;
    }
    const int sign = space.degree(k) && space.degree(l) ? -1 : 1;
    out.push_back({l, k, RationalFunction(2 * sign)});
    out.push_back({k, l, k < l ? a : -a});
  });
}

OperatorMatrix pi_X(int i, const GradedSpace& space) {
  if (i < 1 || i > space.r() - 2) throw std::invalid_argument("X_i needs 1 <= i <= r-2");
  return pi_Tprime(1, space) * pi_Tprime(i + 1, space);
}

OperatorMatrix pi_X_scaled(int i, const GradedSpace& space) {
  if (i < 1 || i > space.r() - 2) throw std::invalid_argument("X_i needs 1 <= i <= r-2");
  return pi_U(1, space) * pi_U(i + 1, space);
}

// ------------------------------------------------------------ rho_r

std::string RhoGenerator::label() const {
  switch (kind) {
    case Kind::sigma: return "sigma";
    case Kind::qh: return "qh(" + std::to_string(index) + ")";
    case Kind::e: return "e(" + std::to_string(index) + ")";
    case Kind::f: return "f(" + std::to_string(index) + ")";
  }
  return "?";
}

RhoGenerator RhoGenerator::parse(std::string_view label) {
  if (label == "sigma") return {Kind::sigma, 0};
  const auto open = label.find('(');
  if (open == std::string_view::npos || label.back() != ')')
    throw std::invalid_argument("unknown generator label: " + std::string(label));
  const std::string head(label.substr(0, open)), body(label.substr(open + 1, label.size() - open - 2));
  Kind kind;
  if (head == "qh") kind = Kind::qh;
  else if (head == "e") kind = Kind::e;
  else if (head == "f") kind = Kind::f;
  else throw std::invalid_argument("unknown generator label: " + std::string(label));
  std::size_t used = 0;
  int idx = 0;
  try {
    idx = std::stoi(body, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != body.size()) throw std::invalid_argument("bad generator index: " + std::string(label));
  return {kind, idx};
}

std::vector<RhoGenerator> rho_generators(int m, int n) {
  std::vector<RhoGenerator> out{{RhoGenerator::Kind::sigma, 0}};
  for (int b = 1; b <= m + n; ++b) out.push_back({RhoGenerator::Kind::qh, b});
  for (int i = 1; i < m + n; ++i) out.push_back({RhoGenerator::Kind::e, i});
  for (int i = 1; i < m + n; ++i) out.push_back({RhoGenerator::Kind::f, i});
  return out;
}

OperatorMatrix rho_weight(const std::vector<int>& weights, const GradedSpace& space) {
  const int d = space.local_dim();
  if (static_cast<int>(weights.size()) != d) throw std::invalid_argument("weight vector needs m+n entries");
  SiteOp op = SiteOp::diagonal(d);
  op.exp = weights;
  return site_product(space, std::vector<const SiteOp*>(space.r(), &op));
}

OperatorMatrix rho_generator(const RhoGenerator& g, const GradedSpace& space) {
  const int d = space.local_dim();
  const RootDatum datum(space.m(), space.n());
  switch (g.kind) {
    case RhoGenerator::Kind::sigma: {
      SiteOp op = SiteOp::diagonal(d);
      for (int j = 1; j <= d; ++j) op.sign[j - 1] = space.degree(j) ? -1 : 1;
      return site_product(space, std::vector<const SiteOp*>(space.r(), &op));
    }
    case RhoGenerator::Kind::qh: {
      if (g.index < 1 || g.index > d) throw std::invalid_argument("weight index out of range: " + g.label());
      std::vector<int> w(d, 0);
      w[g.index - 1] = 1;
      return rho_weight(w, space);
    }
    case RhoGenerator::Kind::e:
    case RhoGenerator::Kind::f:
      break;
  }
  const int i = g.index;
  if (i < 1 || i > datum.rank()) throw std::invalid_argument("generator index not in I: " + g.label());
  const bool odd = datum.parity(i) == 1;
  SiteOp mover = SiteOp::diagonal(d), before = SiteOp::diagonal(d), after = SiteOp::diagonal(d);
  for (int j = 1; j <= d; ++j) mover.target[j - 1] = 0;
  if (g.kind == RhoGenerator::Kind::e) {
    // sigma^{p(i)} on earlier sites, q^{-l_i h_i} on later ones
    mover.target[i] = i;  // v_{i+1} -> v_i
    for (int j = 1; j <= d; ++j) {
      if (odd && space.degree(j)) before.sign[j - 1] = -1;
      after.exp[j - 1] = -datum.root_pairing(i, j);
    }
  } else {
    // sigma^{p(i)} q^{l_i h_i} on earlier sites, Id on later ones
    mover.target[i - 1] = i + 1;  // v_i -> v_{i+1}
    for (int j = 1; j <= d; ++j) {
      if (odd && space.degree(j)) before.sign[j - 1] = -1;
      before.exp[j - 1] = datum.root_pairing(i, j);
    }
  }
  OperatorMatrix out(space.dim());
  std::vector<const SiteOp*> sites(space.r());
  for (int k = 0; k < space.r(); ++k) {
    for (int p = 0; p < space.r(); ++p) sites[p] = p < k ? &before : p == k ? &mover : &after;
    out += site_product(space, sites);
  }
  return out;
}

// ------------------------------------------------------------ phi

OperatorMatrix phi_tensor(const GradedSpace& space) {
  if (space.m() != space.n()) throw std::invalid_argument("phi needs m = n");
  const int m = space.m(), r = space.r();
  OperatorMatrix out(space.dim());
  for (std::size_t col = 0; col < space.dim(); ++col) {
    TensorIndex u = space.letters(col);
    // (-1)^{sum_{i>=2} sum_{j<i} |u_j|}: site j (1-based) is counted r - j times
    int parity = 0;
    for (int j = 1; j <= r; ++j) parity += space.degree(u[j - 1]) * (r - j);
    for (int& k : u) k = 2 * m - k + 1;
    out.add_to(space.index(u), col, RationalFunction(parity % 2 ? -1 : 1));
  }
  return out;
}

// ------------------------------------------------------------ represent

std::vector<OperatorMatrix> basis_word_matrices(const GradedSpace& space) {
  const auto& basis = HeckeBasis::of(space.r());
  std::vector<OperatorMatrix> gens;
  for (int i = 1; i < space.r(); ++i) gens.push_back(pi_T(i, space));
  std::vector<std::size_t> order(basis.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return basis.length(a) < basis.length(b); });
  std::vector<OperatorMatrix> out(basis.size());
  for (std::size_t w : order) {
    if (basis.length(w) == 0) {
      out[w] = OperatorMatrix::identity(space.dim());
      continue;
    }
    // T_w = T_a T_{s_a w} with a the first letter of w
    const int a = basis.letters(w).front();
    out[w] = gens[a - 1] * out[basis.left_neighbor(a, w)];
  }
  return out;
}

OperatorMatrix represent(const HeckeElement& x, const GradedSpace& space) {
  if (x.rank() != space.r())
    throw std::invalid_argument("rank mismatch: element of H_" + std::to_string(x.rank()) + " on " + space.to_string());
  const auto& basis = HeckeBasis::of(space.r());
  std::vector<OperatorMatrix> gens;
  for (int i = 1; i < space.r(); ++i) gens.push_back(pi_T(i, space));
  std::map<std::size_t, OperatorMatrix> memo;
  memo.emplace(basis.identity_index(), OperatorMatrix::identity(space.dim()));
  auto word_matrix = [&](auto&& self, std::size_t w) -> const OperatorMatrix& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    const int a = basis.letters(w).front();
    OperatorMatrix m = gens[a - 1] * self(self, basis.left_neighbor(a, w));
    return memo.emplace(w, std::move(m)).first->second;
  };
  OperatorMatrix out(space.dim());
  for (const auto& [w, c] : x.indexed_terms()) out += c * word_matrix(word_matrix, w);
  return out;
}

// ------------------------------------------------------------ specialization

RationalMatrix specialize_matrix(const OperatorMatrix& m, const SpecializationPoint& t) {
  return m.map<Rational>([&](const RationalFunction& x, std::size_t r, std::size_t c) {
    try {
      return specialize(x, t);
    } catch (const PoleError& e) {
      throw PoleError("entry (" + std::to_string(r) + ", " + std::to_string(c) + "): " + e.what());
    }
  });
}

RationalMatrix sign_permutation(int i, const GradedSpace& space) {
  require_site(space, i);
  RationalMatrix out(space.dim());
  for (std::size_t col = 0; col < space.dim(); ++col) {
    TensorIndex u = space.letters(col);
    const int k = u[i - 1], l = u[i];
    // a coincident odd pair picks up the sign too: (-1)^{|v_k||v_l|}
    const int sign = space.degree(k) && space.degree(l) ? -1 : 1;
    std::swap(u[i - 1], u[i]);
    out.add_to(space.index(u), col, Rational(sign));
  }
  return out;
}

// ------------------------------------------------------------ dumps

namespace {

template <class F>
std::string dump_impl(const SparseMatrix<F>& m, std::size_t limit) {
  std::ostringstream os;
  std::size_t written = 0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, x] : m.row(r)) {
      if (limit && written == limit) return os.str();
      os << r << ' ' << c << ' ' << field_to_string(x) << '\n';
      ++written;
    }
  return os.str();
}

}  // namespace

std::string dump_matrix(const OperatorMatrix& m, std::size_t limit) { return dump_impl(m, limit); }
std::string dump_matrix(const RationalMatrix& m, std::size_t limit) { return dump_impl(m, limit); }

OperatorMatrix parse_matrix_dump(std::string_view text, std::size_t dim) {
  OperatorMatrix out(dim);
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::size_t r = 0, c = 0;
    std::string rest;
    if (!(ls >> r >> c) || !std::getline(ls, rest))
      throw std::invalid_argument("dump line " + std::to_string(lineno) + ": expected 'row col value'");
    if (r >= dim || c >= dim) throw std::invalid_argument("dump line " + std::to_string(lineno) + ": index out of range");
    out.set(r, c, RationalFunction::parse(rest));
  }
  return out;
}

}  // namespace qalt
