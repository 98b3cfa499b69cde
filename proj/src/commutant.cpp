#include "qalt/commutant.hpp"

namespace qalt {

std::string to_string(RankMode mode) { return mode == RankMode::exact ? "exact" : "specialized"; }

RankMode parse_rank_mode(const std::string& text) {
  if (text == "exact") return RankMode::exact;
  if (text == "specialized") return RankMode::specialized;
  throw std::invalid_argument("unknown mode '" + text + "' (expected exact or specialized)");
}

PointSampler::PointSampler(std::uint64_t seed) : state_(seed) {}

SpecializationPoint PointSampler::next() {
  for (;;) {
    // splitmix64 keeps the stream identical across platforms
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const long num = static_cast<long>(z % 97) - 48;
    const long den = static_cast<long>((z >> 32) % 23) + 1;
    Rational t(num, den);
    t.canonicalize();
    if (t == 0 || t == 1 || t == -1) continue;
    return SpecializationPoint(t);
  }
}

namespace {

std::vector<SparseVector<Rational>> specialized_rows(const std::vector<OperatorMatrix>& ms, const SpecializationPoint& t) {
  std::vector<SparseVector<Rational>> rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) rows.push_back(specialize_matrix(m, t).flatten());
  return rows;
}

}  // namespace

RankCertificate rank_with_certificate(const std::vector<OperatorMatrix>& matrices, const RankOptions& options) {
  if (matrices.empty()) throw std::invalid_argument("rank certificate needs at least one matrix");
  const std::size_t dim = matrices.front().dim();
  for (const auto& m : matrices) m.require_same_dim(matrices.front());
  const std::size_t length = dim * dim;

  RankCertificate cert;
  std::optional<std::size_t> exact;
  if (options.mode == RankMode::exact) {
    // elimination over K; fraction-free Bareiss blows up on long Laurent entries
    EchelonSpan<RationalFunction> span(length);
    for (const auto& m : matrices) span.insert(m.flatten());
    exact = span.rank();
    cert.exact = true;
    cert.rank = *exact;
  }

  std::vector<std::size_t> ranks;
  auto evaluate = [&](const SpecializationPoint& t) { return rank_of(specialized_rows(matrices, t), length); };
  if (!options.fixed_points.empty()) {
    for (const auto& t : options.fixed_points) {
      ranks.push_back(evaluate(t));  // PoleError propagates: fixed points are not redrawn
      cert.points.push_back(t);
    }
  } else {
    PointSampler sampler(options.seed);
    std::size_t redraws = 0;
    while (cert.points.size() < options.num_points) {
      const SpecializationPoint t = sampler.next();
      std::size_t rk = 0;
      try {
        rk = evaluate(t);
      } catch (const PoleError&) {
        if (++redraws > options.max_redraws) throw;
        continue;
      }
      if (exact && rk != *exact) {
        // a non-generic point; the exact rank arbitrates
        if (++redraws > options.max_redraws)
          throw RankDisagreement("no specialization point reproduces the exact rank " + std::to_string(*exact));
        continue;
      }
      ranks.push_back(rk);
      cert.points.push_back(t);
    }
  }
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const std::size_t expected = exact ? *exact : ranks.front();
    if (ranks[k] != expected) {
      throw RankDisagreement("rank " + std::to_string(ranks[k]) + " at q = " + cert.points[k].to_string() +
                             " differs from " + std::to_string(expected) + (exact ? " (exact)" : "; rerun in exact mode"));
    }
  }
  if (!exact) cert.rank = ranks.front();
  return cert;
}

}  // namespace qalt
