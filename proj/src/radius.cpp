#include "stgr/radius.hpp"

#include <algorithm>

namespace stgr {

RadiusResult radius_label(const Graph& g, int delta, std::optional<int> root) {
  if (delta < 1) throw error("delta must be at least 1");
  auto dist = all_pairs_distances(g);
  auto mt = metrics(g, dist);

  int r = 0;
  if (root) {
    r = *root;
    if (r < 1 || r > g.n) throw error("vertex id out of range");
    if (mt.ecc[r] != mt.radius) {
      throw error("root " + std::to_string(r) + " has eccentricity " +
                  std::to_string(mt.ecc[r]) + ", radius is " + std::to_string(mt.radius));
    }
  } else {
    for (int v = 1; v <= g.n; ++v) {
      if (mt.ecc[v] == mt.radius) {
        r = v;
        break;
      }
    }
  }

  RadiusResult res;
  res.root = r;
  res.layers = bfs_layers(g, r);
  int half_up = (delta + 1) / 2;  // ceil(delta/2)
  std::vector<int> labels(g.m());
  for (int i = 0; i < g.m(); ++i) {
    auto [u, v] = g.edges[i];
    int lu = res.layers.layer[u], lv = res.layers.layer[v];
    if (lu == lv) {
      labels[i] = delta;
    } else {
      int depth = std::max(lu, lv);
      labels[i] = (depth % 2 == 1) ? half_up : delta;
    }
  }
  res.labeling = make_labeling(g, delta, std::move(labels));
  return res;
}

BoundCertificate bound_certificate(const Graph& g, int delta) {
  if (delta < 1) throw error("delta must be at least 1");
  auto mt = metrics(g);
  BoundCertificate cert;
  cert.delta = delta;
  cert.radius = mt.radius;
  cert.diameter = mt.diameter;
  for (int l = 2; l <= mt.diameter; ++l) {
    Rational b = (l <= mt.radius + 1)
                     ? Rational(static_cast<std::int64_t>(delta) * l - (delta - 1), l)
                     : Rational(static_cast<std::int64_t>(mt.radius) * delta + 1, l);
    // Every duration is at least the distance, so no bound below 1 is
    // meaningful; the far-distance formula dips under 1 only when delta = 1,
    // where the true per-pair ratio is exactly 1.
    cert.per_distance.push_back({l, std::max(b, Rational{1}, std::less<>())});
  }
  cert.overall = Rational(1, 1);
  for (auto& [l, b] : cert.per_distance) cert.overall = std::max(cert.overall, b, std::less<>());
  return cert;
}

bool improved_bound_applies(const Graph& g, int root) {
  if (root < 1 || root > g.n) throw error("vertex id out of range");
  auto dist = all_pairs_distances(g);
  auto mt = metrics(g, dist);
  if (mt.ecc[root] != mt.radius) {
    throw error("root " + std::to_string(root) + " has eccentricity " +
                std::to_string(mt.ecc[root]) + ", radius is " + std::to_string(mt.radius));
  }
  int rad = mt.radius;
  if (rad < 2 || rad >= mt.diameter) return false;
  for (int u = 1; u <= g.n; ++u) {
    for (int v = u + 1; v <= g.n; ++v) {
      if (dist.at(u, v) != rad + 1) continue;
      if (dist.at(root, u) + dist.at(root, v) >= 2 * rad) return false;
    }
  }
  return true;
}

TreeGuarantee tree_guarantees(const Graph& g, int delta) {
  if (delta < 1) throw error("delta must be at least 1");
  if (g.m() != g.n - 1) throw error("not a tree");
  TreeGuarantee tg;
  tg.upper = Rational(delta + 1, 2);
  for (int v = 1; v <= g.n; ++v) tg.max_degree = std::max(tg.max_degree, g.degree(v));
  tg.optimal = tg.max_degree >= delta + 1;
  return tg;
}

}  // namespace stgr
