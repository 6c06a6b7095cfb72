#include "stgr/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "stgr/errors.hpp"

namespace stgr {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

// Edge accumulator that drops duplicates (first insertion wins).
struct EdgeBag {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  bool add(int a, int b) {
    auto key = ordered(a, b);
    if (!seen.insert(key).second) return false;
    edges.push_back(key);
    return true;
  }
  bool has(int a, int b) const { return seen.count(ordered(a, b)) != 0; }
};

}  // namespace

int SunglassesGadget::pu(int i) const {
  if (i == 0) return u;
  if (i == delta) return v;
  return 2 + i;
}

int SunglassesGadget::pv(int i) const {
  if (i == 0) return v;
  if (i == delta) return u;
  return 1 + delta + i;
}

SunglassesGadget sunglasses_gadget(int delta) {
  if (delta < 3) throw error("delta must be at least 3 for a sunglasses gadget");
  SunglassesGadget sg;
  sg.delta = delta;
  const bool odd = delta % 2 != 0;
  const int vertical = odd ? (delta + 1) / 2 : delta / 2;

  struct Rec {
    int a, b, label, zz;
    EdgeRole role;
  };
  std::vector<Rec> recs;
  EdgeBag bag;
  auto add = [&](int a, int b, EdgeRole role, int label, int zz) {
    if (bag.add(a, b)) recs.push_back(Rec{a, b, label, zz, role});
  };

  // Base cycle: two chronological paths, u -> v along the p^{u,*} row and
  // v -> u along the p^{v,*} row, each labeled 1..delta in traversal order.
  for (int i = 1; i <= delta; ++i) {
    add(sg.pu(i - 1), sg.pu(i), EdgeRole::Cycle, i, 0);
    add(sg.pv(i - 1), sg.pv(i), EdgeRole::Cycle, i, 0);
  }

  if (odd) {
    int lo = (delta - 1) / 2, hi = (delta + 1) / 2;
    add(sg.pu(lo), sg.pv(hi), EdgeRole::Shortcut, vertical, 0);
    add(sg.pv(lo), sg.pu(hi), EdgeRole::Shortcut, vertical, 0);
  } else {
    int hd = delta / 2;
    add(sg.pu(hd - 1), sg.pv(hd + 1), EdgeRole::Shortcut, vertical, 0);
    add(sg.pv(hd - 1), sg.pu(hd + 1), EdgeRole::Shortcut, vertical, 0);
  }

  // Parallel edges; for small delta these coincide with shortcuts (delta in
  // {3,5,6}) or with each other (delta = 4, the single central edge).
  add(sg.pu(2), sg.pv(delta - 2), EdgeRole::Parallel, vertical, 0);
  add(sg.pv(2), sg.pu(delta - 2), EdgeRole::Parallel, vertical, 0);

  const int zz_hi = odd ? (delta - 3) / 2 : delta / 2 - 1;
  for (int i = 1; i <= zz_hi; ++i) {
    add(sg.pu(i), sg.pv(delta - i - 1), EdgeRole::Zigzag, i, i);
    add(sg.pu(i + 1), sg.pv(delta - i), EdgeRole::Zigzag, i, i);
    add(sg.pv(i), sg.pu(delta - i - 1), EdgeRole::Zigzag, i, i);
    add(sg.pv(i + 1), sg.pu(delta - i), EdgeRole::Zigzag, i, i);
  }

  sg.graph = make_graph(2 * delta, bag.edges);
  const std::size_t m = sg.graph.edges.size();
  sg.role.assign(m, EdgeRole::Cycle);
  sg.zigzag_index.assign(m, 0);
  sg.natural_label.assign(m, 0);
  for (const Rec& r : recs) {
    int e = sg.graph.edge_index(r.a, r.b);
    sg.role[e] = r.role;
    sg.zigzag_index[e] = r.zz;
    sg.natural_label[e] = r.label;
  }

  if (odd) {
    sg.central = {sg.pu((delta - 1) / 2), sg.pu((delta + 1) / 2), sg.pv((delta - 1) / 2),
                  sg.pv((delta + 1) / 2)};
  } else {
    sg.central = {sg.pu(delta / 2), sg.pv(delta / 2)};
  }
  std::sort(sg.central.begin(), sg.central.end());
  return sg;
}

Labeling sunglasses_labeling(const SunglassesGadget& sg) {
  return make_labeling(sg.graph, sg.delta, sg.natural_label);
}

std::vector<ZigzagPath> zigzag_paths(const SunglassesGadget& sg) {
  std::vector<ZigzagPath> paths;
  bool any_zigzag = false;
  for (EdgeRole r : sg.role)
    if (r == EdgeRole::Zigzag) any_zigzag = true;
  if (!any_zigzag) return paths;

  const int d = sg.delta;
  for (int start : {sg.pu(1), sg.pu(d - 1), sg.pv(1), sg.pv(d - 1)}) {
    ZigzagPath p;
    p.start = start;
    p.vertices.push_back(start);
    int cur = start, prev_edge = -1;
    for (int want = 1;; ++want) {
      int next_edge = -1, next_vertex = -1;
      for (auto [nbr, e] : sg.graph.adj[cur]) {
        if (e == prev_edge || sg.role[e] != EdgeRole::Zigzag) continue;
        if (sg.zigzag_index[e] != want) continue;
        next_edge = e;
        next_vertex = nbr;
        break;
      }
      if (next_edge < 0) break;
      p.edge_indices.push_back(next_edge);
      p.vertices.push_back(next_vertex);
      prev_edge = next_edge;
      cur = next_vertex;
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

std::array<ChronoCycle, 2> chronological_cycles(const SunglassesGadget& sg) {
  const int d = sg.delta;
  const bool odd = d % 2 != 0;
  const int a_top = odd ? (d - 1) / 2 : d / 2 - 1;  // last own-side index
  const int b_low = odd ? (d + 1) / 2 : d / 2 + 1;  // first opposite-side index

  auto build = [&](bool from_u) {
    ChronoCycle c;
    auto own = [&](int i) { return from_u ? sg.pu(i) : sg.pv(i); };
    auto opp = [&](int i) { return from_u ? sg.pv(i) : sg.pu(i); };
    for (int i = 0; i <= a_top; ++i) c.vertices.push_back(own(i));
    for (int i = b_low; i <= d - 1; ++i) c.vertices.push_back(opp(i));
    const std::size_t k = c.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
      int x = c.vertices[i], y = c.vertices[(i + 1) % k];
      c.edge_indices.push_back(sg.graph.edge_index(x, y));
    }
    return c;
  };
  return {build(true), build(false)};
}

namespace {

void check_has_nonneighbor(const Graph& g) {
  for (int v = 1; v <= g.n; ++v) {
    if (static_cast<int>(g.adj[v].size()) >= g.n - 1)
      throw error("vertex " + std::to_string(v) + " has no non-neighbor");
  }
}

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= g.n; ++u)
    for (int v = u + 1; v <= g.n; ++v)
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace

ReductionInstance reduce_3col_diam2(const Graph& g3col) {
  check_has_nonneighbor(g3col);
  ReductionInstance inst;
  inst.family = ReductionFamily::Diam2;
  inst.delta = 3;
  inst.alpha = Rational(1, 1);
  inst.provenance = g3col;

  const int n = g3col.n;
  inst.center = n + 1;
  inst.center2 = n + 2;
  int next = n + 3;

  EdgeBag bag;
  for (int v = 1; v <= n; ++v) bag.add(inst.center, v);
  for (int v = 1; v <= n; ++v) bag.add(inst.center2, v);

  for (auto [u, v] : non_edges(g3col)) {
    ReductionInstance::Diamond dia;
    dia.u = u;
    dia.v = v;
    dia.x_uv = next++;
    dia.x_vu = next++;
    bag.add(u, dia.x_uv);
    bag.add(u, dia.x_vu);
    bag.add(v, dia.x_uv);
    bag.add(v, dia.x_vu);
    bag.add(dia.x_uv, dia.x_vu);
    inst.X.push_back(dia.x_uv);
    inst.X.push_back(dia.x_vu);
    inst.diamonds.push_back(dia);
  }

  // Clique on the two centers plus all diamond vertices.
  std::vector<int> clique;
  clique.push_back(inst.center);
  clique.push_back(inst.center2);
  for (int x : inst.X) clique.push_back(x);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) bag.add(clique[i], clique[j]);

  inst.g = make_graph(next - 1, bag.edges);
  inst.gadget_label.assign(inst.g.edges.size(), 0);
  return inst;
}

ReductionInstance reduce_3col(const Graph& g3col, int delta) {
  if (delta < 3) throw error("delta must be at least 3 for the coloring reduction");
  check_has_nonneighbor(g3col);

  ReductionInstance inst;
  inst.family = delta == 3 ? ReductionFamily::Tight3 : ReductionFamily::General;
  inst.delta = delta;
  inst.alpha = Rational(delta, 2);
  inst.provenance = g3col;

  const int n = g3col.n;
  const bool odd = delta % 2 != 0;
  inst.center = n + 1;
  int next = n + 2;
  for (int j = 1; j <= delta - 3; ++j) inst.vstar.push_back(next++);

  EdgeBag bag;
  for (int v = 1; v <= n; ++v) bag.add(inst.center, v);
  for (int w : inst.vstar) bag.add(inst.center, w);

  const SunglassesGadget tmpl = sunglasses_gadget(delta);
  struct PendingEdge {
    int a, b, label;
  };
  std::vector<PendingEdge> gadget_edges;

  for (auto [u, v] : non_edges(g3col)) {
    ReductionInstance::EmbeddedGadget eg;
    eg.dock_u = u;
    eg.dock_v = v;
    eg.pu.assign(delta + 1, 0);
    eg.pv.assign(delta + 1, 0);
    eg.pu[0] = u;
    eg.pv[0] = v;
    eg.pu[delta] = v;
    eg.pv[delta] = u;
    for (int i = 1; i <= delta - 1; ++i) eg.pu[i] = next++;
    for (int i = 1; i <= delta - 1; ++i) eg.pv[i] = next++;

    auto map_vertex = [&](int t) {
      if (t == tmpl.u) return u;
      if (t == tmpl.v) return v;
      if (t <= 1 + delta) return eg.pu[t - 2];      // template p^{u,i} = 2 + i
      return eg.pv[t - 1 - delta];                  // template p^{v,i} = 1 + delta + i
    };

    for (std::size_t e = 0; e < tmpl.graph.edges.size(); ++e) {
      auto [ta, tb] = tmpl.graph.edges[e];
      int a = map_vertex(ta), b = map_vertex(tb);
      if (bag.add(a, b)) gadget_edges.push_back(PendingEdge{a, b, tmpl.natural_label[e]});
    }
    for (int tc : tmpl.central) eg.centrals.push_back(map_vertex(tc));
    std::sort(eg.centrals.begin(), eg.centrals.end());
    for (int x : eg.centrals) inst.X.push_back(x);
    for (int i = 1; i <= delta - 1; ++i) {
      if (!std::count(eg.centrals.begin(), eg.centrals.end(), eg.pu[i])) inst.Y.push_back(eg.pu[i]);
      if (!std::count(eg.centrals.begin(), eg.centrals.end(), eg.pv[i])) inst.Y.push_back(eg.pv[i]);
    }
    inst.gadgets.push_back(std::move(eg));
  }

  if (!odd) {
    for (std::size_t i = 0; i < inst.X.size(); ++i)
      for (std::size_t j = i + 1; j < inst.X.size(); ++j) bag.add(inst.X[i], inst.X[j]);
  }
  if (delta == 4) {
    for (int i = 0; i < 3; ++i) inst.c123.push_back(next++);
    for (int ci : inst.c123) {
      bag.add(inst.center, ci);
      for (int x : inst.X) bag.add(ci, x);
    }
    bag.add(inst.c123[0], inst.c123[1]);
    bag.add(inst.c123[0], inst.c123[2]);
    bag.add(inst.c123[1], inst.c123[2]);
  }
  if (odd) {
    for (int x : inst.X) {
      (void)x;
      inst.Xhat.push_back(next++);
    }
    for (std::size_t i = 0; i < inst.Xhat.size(); ++i) {
      for (int x : inst.X) bag.add(inst.Xhat[i], x);
      for (std::size_t j = i + 1; j < inst.Xhat.size(); ++j) bag.add(inst.Xhat[i], inst.Xhat[j]);
      if (inst.family == ReductionFamily::Tight3) bag.add(inst.Xhat[i], inst.center);
    }
  }

  inst.g = make_graph(next - 1, bag.edges);
  inst.gadget_label.assign(inst.g.edges.size(), 0);
  for (const auto& pe : gadget_edges)
    inst.gadget_label[inst.g.edge_index(pe.a, pe.b)] = pe.label;
  return inst;
}

namespace {

void check_coloring(const ReductionInstance& inst, const std::vector<int>& chi) {
  const Graph& g = inst.provenance;
  if (static_cast<int>(chi.size()) != g.n)
    throw error("coloring has " + std::to_string(chi.size()) + " entries, expected " +
                std::to_string(g.n));
  std::array<bool, 4> used{};
  for (int v = 1; v <= g.n; ++v) {
    int c = chi[v - 1];
    if (c < 1 || c > 3)
      throw error("color of vertex " + std::to_string(v) + " is " + std::to_string(c) +
                  ", expected a value in [1,3]");
    used[c] = true;
  }
  if (!(used[1] && used[2] && used[3])) throw error("coloring must use all three colors");
  for (auto [u, v] : g.edges) {
    if (chi[u - 1] == chi[v - 1])
      throw error("coloring is not proper: adjacent vertices " + std::to_string(u) + " and " +
                  std::to_string(v) + " share color " + std::to_string(chi[u - 1]));
  }
}

}  // namespace

Labeling coloring_to_labeling(const ReductionInstance& inst, const std::vector<int>& chi) {
  check_coloring(inst, chi);
  const Graph& g = inst.g;
  const int n_prov = inst.provenance.n;
  std::vector<int> labels(g.edges.size(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (inst.gadget_label[e] > 0) labels[e] = inst.gadget_label[e];

  if (inst.family == ReductionFamily::Diam2) {
    std::map<std::pair<int, int>, int> diamond_side;
    for (const auto& d : inst.diamonds) {
      diamond_side[{d.u, d.x_uv}] = 1;
      diamond_side[{d.v, d.x_vu}] = 1;
      diamond_side[{d.u, d.x_vu}] = 3;
      diamond_side[{d.v, d.x_uv}] = 3;
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [a, b] = g.edges[e];
      if (b <= n_prov) throw error("internal: unexpected edge inside provenance vertex set");
      if (a <= n_prov) {
        if (b == inst.center)
          labels[e] = chi[a - 1];
        else if (b == inst.center2)
          labels[e] = 4 - chi[a - 1];
        else {
          auto it = diamond_side.find({a, b});
          if (it == diamond_side.end()) throw error("internal: unmatched diamond edge");
          labels[e] = it->second;
        }
      } else {
        labels[e] = 2;  // clique on the centers and diamond vertices
      }
    }
    return make_labeling(g, inst.delta, labels);
  }

  const int l2 = inst.delta % 2 == 0 ? inst.delta / 2 : (inst.delta + 1) / 2;
  const int l1 = l2 - 1, l3 = l2 + 1;
  const std::array<int, 4> ell{0, l1, l2, l3};

  std::vector<char> in_xhat(g.n + 1, 0), in_x(g.n + 1, 0), in_c123(g.n + 1, 0);
  std::vector<int> vstar_index(g.n + 1, 0), c123_index(g.n + 1, 0), partner(g.n + 1, 0);
  for (int x : inst.X) in_x[x] = 1;
  for (std::size_t i = 0; i < inst.Xhat.size(); ++i) {
    in_xhat[inst.Xhat[i]] = 1;
    partner[inst.Xhat[i]] = inst.X[i];
  }
  for (std::size_t j = 0; j < inst.vstar.size(); ++j) vstar_index[inst.vstar[j]] = static_cast<int>(j) + 1;
  for (std::size_t i = 0; i < inst.c123.size(); ++i) {
    in_c123[inst.c123[i]] = 1;
    c123_index[inst.c123[i]] = static_cast<int>(i) + 1;
  }

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (labels[e] != 0) continue;
    auto [a, b] = g.edges[e];
    if (in_xhat[a] || in_xhat[b]) {
      bool pairing = (in_xhat[a] && partner[a] == b) || (in_xhat[b] && partner[b] == a);
      labels[e] = pairing ? l1 : l2;
      continue;
    }
    if (in_c123[a] || in_c123[b]) {
      if (in_c123[a] && in_c123[b]) {
        int i = std::min(c123_index[a], c123_index[b]);
        int j = std::max(c123_index[a], c123_index[b]);
        labels[e] = (i == 1 && j == 2) ? 3 : (i == 1 && j == 3) ? 2 : 1;
      } else if (a == inst.center || b == inst.center) {
        labels[e] = c123_index[a == inst.center ? b : a];
      } else {
        int i = c123_index[in_c123[a] ? a : b];
        labels[e] = i == 3 ? 2 : 4;
      }
      continue;
    }
    if (a == inst.center || b == inst.center) {
      int w = a == inst.center ? b : a;
      if (w <= n_prov)
        labels[e] = ell[chi[w - 1]];
      else if (vstar_index[w] > 0)
        labels[e] = vstar_index[w] <= l1 - 1 ? vstar_index[w] : vstar_index[w] + 3;
      else
        throw error("internal: unmatched center edge");
      continue;
    }
    if (in_x[a] && in_x[b]) {
      labels[e] = l2;
      continue;
    }
    throw error("internal: unlabeled edge in reduction instance");
  }
  return make_labeling(g, inst.delta, labels);
}

ExtractedColoring labeling_to_coloring(const ReductionInstance& inst, const Labeling& lab) {
  if (static_cast<int>(lab.labels.size()) != static_cast<int>(inst.g.edges.size()))
    throw error("labeling does not match the instance graph");
  ExtractedColoring out;
  out.color.assign(inst.provenance.n, 0);
  for (int v = 1; v <= inst.provenance.n; ++v)
    out.color[v - 1] = lab.labels[inst.g.edge_index(inst.center, v)];
  out.proper = true;
  for (auto [u, v] : inst.provenance.edges)
    if (out.color[u - 1] == out.color[v - 1]) out.proper = false;
  return out;
}

}  // namespace stgr
