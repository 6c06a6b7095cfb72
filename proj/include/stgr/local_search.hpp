#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stgr/exact.hpp"
#include "stgr/graph.hpp"
#include "stgr/rational.hpp"
#include "stgr/temporal.hpp"

namespace stgr {

// Relabel a chosen edge set F while every other label stays fixed, aiming
// for stretch <= alpha0.
struct RelabelTask {
  Graph g;
  Labeling base;                // labels on free edges are ignored
  std::vector<int> free_edges;  // ascending edge indices
  Rational alpha0{1, 1};
};

// Zones over [1, delta] induced by the labels of the edges adjacent to F
// (sharing an endpoint, not in F). Labels are first rotated so the smallest
// adjacent label becomes 1; `shift` records that rotation so witnesses can
// be rotated back. With boundary labels l_1 < ... < l_t the zones are
// {l_1}, {l_1+1..l_2-1}, {l_2}, ..., {l_t}, {l_t+1..delta}; even-indexed
// gaps may be empty. When F covers all edges there is a single open zone
// [1, delta].
struct ZoneSystem {
  int delta = 1;
  int shift = 0;
  std::vector<int> boundary;
  struct Zone {
    int lo = 1, hi = 0;  // inclusive; empty when lo > hi
    bool singleton = false;
  };
  std::vector<Zone> zones;

  int zone_size(int z) const { return zones[z].hi - zones[z].lo + 1; }
};

ZoneSystem zone_system(const Graph& g, const Labeling& lab, const std::vector<int>& free_edges);

// Which zone each free edge lands in plus, per zone, the relative order of
// its edges with equality marks (an ordered partition into groups of equal
// label). Edges in a singleton zone are pinned to that zone's label.
struct ZoneProfile {
  std::vector<int> zone_of;                           // per free-edge position
  std::vector<std::vector<std::vector<int>>> groups;  // per zone: ordered groups
};

// Visits every profile of k free edges over the zone system in a fixed
// deterministic order; allocations into empty zones are skipped, as are
// orderings with more groups than a zone has labels. `visit` returns false
// to stop early. Returns the number of profiles visited.
std::uint64_t enumerate_profiles(int k, const ZoneSystem& zs,
                                 const std::function<bool(const ZoneProfile&)>& visit);

struct SearchOptions {
  std::int64_t budget = kDefaultBudget;
  // Open zones at most this wide are searched exhaustively; wider zones fall
  // back to a per-group binary search whose outcome is verified.
  int zone_exhaustive_max = 32;
};

// Searches labels for the free edges conforming to some profile so that the
// whole labeling has stretch <= alpha0. Returns the first witness in
// profile order, already rotated back and verified by evaluate_stretch.
std::optional<Labeling> fixed_edges_relabel(const RelabelTask& task, const SearchOptions& opts = {});

// Oracle: plain delta^|F| enumeration in lexicographic order.
std::optional<Labeling> brute_force_relabel(const RelabelTask& task,
                                            std::int64_t budget = kDefaultBudget);

// Local search decision: is there a labeling of stretch <= alpha0 differing
// from base on at most k edges? Subsets are tried by ascending size, then
// lexicographically; the identity (F empty) counts as a candidate.
std::optional<Labeling> ls_decide(const Graph& g, const Labeling& base, int k,
                                  const Rational& alpha0, const SearchOptions& opts = {});

// Hitting-set instance: incidence graph of (universe, sets) with the set
// vertices forming a clique, a center adjacent to every element, and k+1
// pendants on the center. All labels 1, delta = 2; the initial stretch is
// 5/3 and improving below it with at most k relabels is possible iff a
// hitting set of size <= k exists. alpha0 is the largest candidate value
// strictly below 5/3.
struct HittingSetInstance {
  Graph g;
  Labeling lab;
  int k = 1;
  Rational alpha0{1, 1};
  Rational initial_stretch{1, 1};
  int center = 0;
  std::vector<int> element_ids;
  std::vector<int> set_ids;
  std::vector<int> pendant_ids;
  bool has_small_hyperedge = false;  // some hyperedge has fewer than k elements
};

HittingSetInstance build_hitting_set_ls_instance(int universe,
                                                 const std::vector<std::vector<int>>& sets,
                                                 int k);

}  // namespace stgr
