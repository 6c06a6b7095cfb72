#include "stgr/local_search.hpp"

#include <algorithm>
#include <set>

namespace stgr {

namespace {

void check_task(const RelabelTask& task) {
  if (static_cast<int>(task.base.labels.size()) != task.g.m()) {
    throw error("label vector length does not match edge count");
  }
  if (task.alpha0 < Rational(1)) throw error("alpha0 must be at least 1");
  int prev = -1;
  for (int e : task.free_edges) {
    if (e < 0 || e >= task.g.m()) throw error("free edge index out of range");
    if (e <= prev) throw error("free edges must be ascending and distinct");
    prev = e;
  }
}

}  // namespace

ZoneSystem zone_system(const Graph& g, const Labeling& lab, const std::vector<int>& free_edges) {
  if (free_edges.empty()) throw error("free edge set must be nonempty");
  std::vector<char> is_free(g.m(), 0);
  std::vector<char> touched(g.n + 1, 0);
  for (int e : free_edges) {
    if (e < 0 || e >= g.m()) throw error("free edge index out of range");
    is_free[e] = 1;
    touched[g.edges[e].first] = 1;
    touched[g.edges[e].second] = 1;
  }

  std::set<int> adjacent_labels;
  for (int e = 0; e < g.m(); ++e) {
    if (is_free[e]) continue;
    if (touched[g.edges[e].first] || touched[g.edges[e].second]) {
      adjacent_labels.insert(lab.labels[e]);
    }
  }

  ZoneSystem zs;
  zs.delta = lab.delta;
  if (adjacent_labels.empty()) {  // F = E (or nothing fixed nearby): one open zone
    zs.shift = 0;
    zs.zones.push_back({1, lab.delta, false});
    return zs;
  }

  int lmin = *adjacent_labels.begin();
  zs.shift = 1 - lmin;  // rotate so the smallest adjacent label becomes 1
  for (int l : adjacent_labels) {
    zs.boundary.push_back((l - 1 + zs.shift % lab.delta + lab.delta) % lab.delta + 1);
  }
  std::sort(zs.boundary.begin(), zs.boundary.end());

  int t = static_cast<int>(zs.boundary.size());
  for (int j = 0; j < t; ++j) {
    zs.zones.push_back({zs.boundary[j], zs.boundary[j], true});
    int hi = (j + 1 < t) ? zs.boundary[j + 1] - 1 : lab.delta;
    zs.zones.push_back({zs.boundary[j] + 1, hi, false});
  }
  return zs;
}

namespace {

// Ordered set partitions of `elems`, group count capped at max_groups.
// Elements are inserted in order; each either joins an existing group or
// opens a new group at any position, which yields every ordered partition
// exactly once.
bool ordered_partitions(const std::vector<int>& elems, int max_groups,
                        std::vector<std::vector<int>>& current, std::size_t idx,
                        const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  if (idx == elems.size()) return visit(current);
  int e = elems[idx];
  for (std::size_t gi = 0; gi < current.size(); ++gi) {
    current[gi].push_back(e);
    if (!ordered_partitions(elems, max_groups, current, idx + 1, visit)) return false;
    current[gi].pop_back();
  }
  if (static_cast<int>(current.size()) < max_groups) {
    for (std::size_t pos = 0; pos <= current.size(); ++pos) {
      current.insert(current.begin() + pos, {e});
      if (!ordered_partitions(elems, max_groups, current, idx + 1, visit)) return false;
      current.erase(current.begin() + pos);
    }
  }
  return true;
}

}  // namespace

std::uint64_t enumerate_profiles(int k, const ZoneSystem& zs,
                                 const std::function<bool(const ZoneProfile&)>& visit) {
  int nz = static_cast<int>(zs.zones.size());
  std::vector<int> usable;
  for (int z = 0; z < nz; ++z) {
    if (zs.zone_size(z) > 0) usable.push_back(z);
  }

  std::uint64_t count = 0;
  bool stop = false;

  ZoneProfile prof;
  prof.zone_of.assign(k, -1);
  prof.groups.assign(nz, {});

  // per-zone member lists for the current allocation
  std::vector<std::vector<int>> members(nz);

  std::function<void(int)> alloc = [&](int pos) {
    if (stop) return;
    if (pos == k) {
      // orderings: singleton zones have one forced group; open zones range
      // over ordered partitions capped at the zone width
      std::vector<int> open_zones;
      for (int z : usable) {
        if (members[z].empty()) continue;
        if (zs.zones[z].singleton) {
          prof.groups[z] = {members[z]};
        } else {
          open_zones.push_back(z);
        }
      }
      std::function<bool(std::size_t)> per_zone = [&](std::size_t zi) -> bool {
        if (zi == open_zones.size()) {
          ++count;
          return visit(prof);
        }
        int z = open_zones[zi];
        std::vector<std::vector<int>> cur;
        return ordered_partitions(members[z], zs.zone_size(z), cur, 0,
                                  [&](const std::vector<std::vector<int>>& parts) {
                                    prof.groups[z] = parts;
                                    bool cont = per_zone(zi + 1);
                                    prof.groups[z].clear();
                                    return cont;
                                  });
      };
      if (!per_zone(0)) stop = true;
      for (int z : usable) prof.groups[z].clear();
      return;
    }
    for (int z : usable) {
      prof.zone_of[pos] = z;
      members[z].push_back(pos);
      alloc(pos + 1);
      members[z].pop_back();
      if (stop) return;
    }
  };

  if (k == 0) {
    ZoneProfile empty;
    empty.groups.assign(nz, {});
    visit(empty);
    return 1;
  }
  alloc(0);
  return count;
}

namespace {

struct AssignmentSearch {
  const Graph& g;
  const ZoneSystem& zs;
  const std::vector<int>& free_edges;
  const DistanceMatrix& dist;
  const std::vector<std::int64_t>& bound;
  Labeling work;  // normalized labels, mutated in place
  std::int64_t budget;
  std::int64_t used = 0;
  int zmax;

  void charge(std::int64_t units = 1) {
    used += units;
    if (used > budget) throw budget_error("search budget exceeded in relabel");
  }

  void apply_group(const std::vector<int>& group, int label) {
    for (int pos : group) work.labels[free_edges[pos]] = label;
  }

  bool feasible_now() {
    charge();
    return within_bound(g, work, bound);
  }

  // Exhaustive strictly-increasing placement of the zone's groups.
  bool place_exhaustive(const std::vector<int>& open_zones,
                        const std::vector<const std::vector<std::vector<int>>*>& zone_groups,
                        std::size_t zi) {
    if (zi == open_zones.size()) return feasible_now();
    const auto& groups = *zone_groups[zi];
    const auto& zone = zs.zones[open_zones[zi]];
    int r = static_cast<int>(groups.size());
    std::vector<int> posv(r);
    std::function<bool(int, int)> rec = [&](int gi, int lowest) -> bool {
      if (gi == r) return place_exhaustive(open_zones, zone_groups, zi + 1);
      for (int p = lowest; p <= zone.hi - (r - gi - 1); ++p) {
        apply_group(groups[gi], p);
        if (rec(gi + 1, p + 1)) return true;
      }
      return false;
    };
    return rec(0, zone.lo);
  }

  // One pass of per-group binary search for zones too wide to exhaust; the
  // final assignment is verified, so this path can miss but never lies.
  bool place_binary_search(const std::vector<int>& open_zones,
                           const std::vector<const std::vector<std::vector<int>>*>& zone_groups) {
    struct Slot {
      int zone, group;
      int label;
    };
    std::vector<std::vector<Slot>> per_zone(open_zones.size());
    for (std::size_t zi = 0; zi < open_zones.size(); ++zi) {
      const auto& zone = zs.zones[open_zones[zi]];
      const auto& groups = *zone_groups[zi];
      int r = static_cast<int>(groups.size());
      if (r > zs.zone_size(open_zones[zi])) return false;
      for (int gi = 0; gi < r; ++gi) {
        per_zone[zi].push_back({open_zones[zi], gi, zone.lo + gi});
        apply_group(groups[gi], zone.lo + gi);
      }
    }
    for (std::size_t zi = 0; zi < open_zones.size(); ++zi) {
      const auto& zone = zs.zones[open_zones[zi]];
      const auto& groups = *zone_groups[zi];
      auto& slots = per_zone[zi];
      int r = static_cast<int>(slots.size());
      for (int gi = 0; gi < r; ++gi) {
        int lo = (gi == 0) ? zone.lo : slots[gi - 1].label + 1;
        int hi = (gi + 1 < r) ? slots[gi + 1].label - 1 : zone.hi;
        while (lo < hi) {
          int mid = lo + (hi - lo) / 2;
          apply_group(groups[gi], mid);
          if (feasible_now()) {
            hi = mid;
          } else {
            lo = mid + 1;
          }
        }
        slots[gi].label = lo;
        apply_group(groups[gi], lo);
      }
    }
    return feasible_now();
  }

  bool try_profile(const ZoneProfile& prof) {
    std::vector<int> open_zones;
    std::vector<const std::vector<std::vector<int>>*> zone_groups;
    bool exhaustive = true;
    for (int z = 0; z < static_cast<int>(zs.zones.size()); ++z) {
      if (prof.groups[z].empty()) continue;
      if (zs.zones[z].singleton) {
        apply_group(prof.groups[z][0], zs.zones[z].lo);
        continue;
      }
      if (static_cast<int>(prof.groups[z].size()) > zs.zone_size(z)) return false;
      open_zones.push_back(z);
      zone_groups.push_back(&prof.groups[z]);
      if (zs.zone_size(z) > zmax) exhaustive = false;
    }
    if (open_zones.empty()) return feasible_now();
    if (exhaustive) return place_exhaustive(open_zones, zone_groups, 0);
    return place_binary_search(open_zones, zone_groups);
  }
};

}  // namespace

std::optional<Labeling> fixed_edges_relabel(const RelabelTask& task, const SearchOptions& opts) {
  check_task(task);
  const Graph& g = task.g;

  if (task.free_edges.empty()) {
    auto rep = evaluate_stretch(g, task.base);
    if (rep.stretch <= task.alpha0) return task.base;
    return std::nullopt;
  }

  ZoneSystem zs = zone_system(g, task.base, task.free_edges);
  Labeling norm = rotate_labeling(task.base, zs.shift);

  auto dist = all_pairs_distances(g);
  auto bound = bound_matrix(dist, task.alpha0);

  AssignmentSearch search{g,     zs,           task.free_edges, dist, bound,
                          norm,  opts.budget,  0,               opts.zone_exhaustive_max};

  std::optional<Labeling> found;
  enumerate_profiles(static_cast<int>(task.free_edges.size()), zs,
                     [&](const ZoneProfile& prof) {
                       search.charge();
                       if (search.try_profile(prof)) {
                         found = search.work;
                         return false;
                       }
                       return true;
                     });

  if (!found) return std::nullopt;
  Labeling out = rotate_labeling(*found, -zs.shift);
  auto rep = evaluate_stretch(g, out);
  if (rep.stretch > task.alpha0) throw error("internal: relabel witness failed verification");
  return out;
}

std::optional<Labeling> brute_force_relabel(const RelabelTask& task, std::int64_t budget) {
  check_task(task);
  const Graph& g = task.g;
  int kf = static_cast<int>(task.free_edges.size());

  std::int64_t leaves = 1;
  for (int i = 0; i < kf; ++i) {
    if (leaves > budget / task.base.delta) {
      leaves = budget + 1;
      break;
    }
    leaves *= task.base.delta;
  }
  if (leaves > budget) {
    throw budget_error("search budget exceeded: delta^|F| > " + std::to_string(budget));
  }

  auto dist = all_pairs_distances(g);
  auto bound = bound_matrix(dist, task.alpha0);

  Labeling work = task.base;
  for (int e : task.free_edges) work.labels[e] = 1;
  while (true) {
    if (within_bound(g, work, bound)) {
      auto rep = evaluate_stretch(g, work);
      if (rep.stretch > task.alpha0) throw error("internal: witness failed verification");
      return work;
    }
    int pos = kf - 1;
    while (pos >= 0 && work.labels[task.free_edges[pos]] == task.base.delta) {
      work.labels[task.free_edges[pos]] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++work.labels[task.free_edges[pos]];
  }
  return std::nullopt;
}

std::optional<Labeling> ls_decide(const Graph& g, const Labeling& base, int k,
                                  const Rational& alpha0, const SearchOptions& opts) {
  if (k < 0) throw error("k must be nonnegative");
  if (alpha0 < Rational(1)) throw error("alpha0 must be at least 1");
  if (static_cast<int>(base.labels.size()) != g.m()) {
    throw error("label vector length does not match edge count");
  }

  auto rep = evaluate_stretch(g, base);
  if (rep.stretch <= alpha0) return base;

  int m = g.m();
  std::vector<int> comb;
  for (int s = 1; s <= std::min(k, m); ++s) {
    comb.assign(s, 0);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      RelabelTask task{g, base, comb, alpha0};
      auto r = fixed_edges_relabel(task, opts);
      if (r) return r;
      // next combination in lexicographic order
      int i = s - 1;
      while (i >= 0 && comb[i] == m - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

HittingSetInstance build_hitting_set_ls_instance(int universe,
                                                 const std::vector<std::vector<int>>& sets,
                                                 int k) {
  if (universe < 1) throw error("universe must be nonempty");
  if (k < 1) throw error("k must be at least 1");
  if (sets.empty()) throw error("no hyperedges");

  std::vector<std::vector<int>> cleaned;
  bool small = false;
  for (const auto& s : sets) {
    if (s.empty()) throw error("empty hyperedge");
    std::vector<int> c = s;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int e : c) {
      if (e < 1 || e > universe) throw error("hyperedge element out of range");
    }
    if (static_cast<int>(c.size()) < k) small = true;
    cleaned.push_back(std::move(c));
  }

  HittingSetInstance inst;
  inst.k = k;
  inst.has_small_hyperedge = small;

  int nsets = static_cast<int>(cleaned.size());
  int center = universe + nsets + 1;
  int n = universe + nsets + 1 + (k + 1);
  for (int u = 1; u <= universe; ++u) inst.element_ids.push_back(u);
  for (int j = 0; j < nsets; ++j) inst.set_ids.push_back(universe + 1 + j);
  inst.center = center;
  for (int a = 0; a < k + 1; ++a) inst.pendant_ids.push_back(center + 1 + a);

  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < nsets; ++j) {
    for (int u : cleaned[j]) edges.push_back({u, inst.set_ids[j]});
  }
  for (int i = 0; i < nsets; ++i) {
    for (int j = i + 1; j < nsets; ++j) edges.push_back({inst.set_ids[i], inst.set_ids[j]});
  }
  for (int u = 1; u <= universe; ++u) edges.push_back({u, center});
  for (int p : inst.pendant_ids) edges.push_back({center, p});

  inst.g = make_graph(n, std::move(edges));
  inst.lab = constant_labeling(inst.g, 2, 1);

  auto mt = metrics(inst.g);
  auto cands = candidate_alphas(mt.diameter, 2);
  Rational target(5, 3);
  Rational best(1, 1);
  for (const auto& c : cands) {
    if (c < target && best < c) best = c;
  }
  inst.alpha0 = best;
  inst.initial_stretch = evaluate_stretch(inst.g, inst.lab).stretch;
  return inst;
}

}  // namespace stgr
