#include "stgr/exact.hpp"

#include <algorithm>
#include <map>

namespace stgr {

std::vector<std::int64_t> bound_matrix(const DistanceMatrix& dist, const Rational& alpha) {
  std::vector<std::int64_t> bound(dist.d.size(), 0);
  for (int u = 1; u <= dist.n; ++u) {
    for (int v = 1; v <= dist.n; ++v) {
      bound[static_cast<std::size_t>(u) * (dist.n + 1) + v] = floor_mul(alpha, dist.at(u, v));
    }
  }
  return bound;
}

namespace {

// delta^exp capped at cap+1 to avoid overflow.
std::int64_t pow_capped(std::int64_t delta, int exp, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / delta) return cap + 1;
    r *= delta;
  }
  return r;
}

}  // namespace

std::optional<Labeling> exact_decide(const Graph& g, int delta, const Rational& alpha,
                                     std::int64_t budget) {
  if (delta < 1) throw error("delta must be at least 1");
  if (alpha < Rational(1)) throw error("alpha must be at least 1");
  if (g.m() == 0) return Labeling{delta, {}};

  std::int64_t leaves = pow_capped(delta, g.m() - 1, budget);
  if (leaves > budget) {
    throw budget_error("search budget exceeded: delta^(m-1) = " + std::to_string(delta) +
                       "^" + std::to_string(g.m() - 1) + " > " + std::to_string(budget));
  }

  auto dist = all_pairs_distances(g);
  auto bound = bound_matrix(dist, alpha);

  std::vector<int> labels(g.m(), 1);  // labels[0] stays 1 throughout
  while (true) {
    Labeling cand{delta, labels};
    if (within_bound(g, cand, bound)) {
      auto rep = evaluate_stretch(g, cand);
      if (rep.stretch <= alpha) return cand;
      throw error("internal: witness failed verification");
    }
    int pos = g.m() - 1;
    while (pos >= 1 && labels[pos] == delta) {
      labels[pos] = 1;
      --pos;
    }
    if (pos < 1) break;
    ++labels[pos];
  }
  return std::nullopt;
}

std::vector<Rational> candidate_alphas(int diam, int delta) {
  if (delta < 1) throw error("delta must be at least 1");
  if (diam < 0) throw error("negative diameter");
  std::vector<Rational> out;
  if (diam == 0) {
    out.push_back(Rational(1));
    return out;
  }
  for (int d = 1; d <= diam; ++d) {
    for (std::int64_t k = d; k <= static_cast<std::int64_t>(delta) * d; ++k) {
      out.push_back(Rational(k, d));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OptimizeResult exact_optimize(const Graph& g, int delta, std::int64_t budget) {
  if (delta < 1) throw error("delta must be at least 1");
  if (g.m() == 0) return {Rational(1), Labeling{delta, {}}};

  auto mt = metrics(g);
  std::map<std::pair<std::int64_t, std::int64_t>, bool> memo;
  auto feasible = [&](const Rational& a) {
    auto key = std::make_pair(a.num, a.den);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool f = exact_decide(g, delta, a, budget).has_value();
    memo[key] = f;
    return f;
  };

  Rational best(delta);  // always feasible: any constant labeling
  for (int d = 1; d <= mt.diameter; ++d) {
    std::int64_t lo = d, hi = static_cast<std::int64_t>(delta) * d;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (feasible(Rational(mid, d))) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    Rational cand(lo, d);
    if (cand < best) best = cand;
  }

  auto witness = exact_decide(g, delta, best, budget);
  if (!witness) throw error("internal: optimum not feasible on re-decide");
  return {best, *witness};
}

}  // namespace stgr
