#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stgr/graph.hpp"
#include "stgr/rational.hpp"

namespace stgr {

// A periodic labeling: labels[i] in [1, delta] is the label of edge i of the
// owning graph. Edge i is active at times labels[i] + j*delta for all j >= 0.
struct Labeling {
  int delta = 1;
  std::vector<int> labels;
};

Labeling make_labeling(const Graph& g, int delta, std::vector<int> labels);
Labeling constant_labeling(const Graph& g, int delta, int value);

// Cyclic shift of every label by c (c may be negative); stretch-invariant.
Labeling rotate_labeling(const Labeling& lab, int c);

// Time spent at a vertex between traversing an edge labeled `prev` and the
// next edge labeled `next`:  next - prev if next > prev, delta + next - prev
// otherwise (a full period when the labels coincide).
int waiting_time(int prev, int next, int delta);

// Duration of traversing a fixed path whose consecutive edge labels are
// given: 1 plus the waiting times over the internal vertices.
std::int64_t path_duration(std::span<const int> labels, int delta);

// Fastest temporal path duration from u to v (0 for u == v). For each edge
// {u,w} with label l the engine runs an earliest-arrival relaxation started
// at w at time l and takes the best arrival(v) - l + 1 over first edges.
std::int64_t fastest_duration(const Graph& g, const Labeling& lab, int u, int v);

// Durations from u to every vertex, same engine, one relaxation per
// incident edge.
std::vector<std::int64_t> fastest_durations_from(const Graph& g, const Labeling& lab, int u);

struct DurationMatrix {
  int n = 0;
  std::vector<std::int64_t> d;  // (n+1)*(n+1) row-major, 1-based

  std::int64_t at(int u, int v) const { return d[static_cast<std::size_t>(u) * (n + 1) + v]; }
  std::int64_t& at(int u, int v) { return d[static_cast<std::size_t>(u) * (n + 1) + v]; }
};

// threads > 1 splits the per-source computations; results are identical for
// any thread count.
DurationMatrix all_pairs_durations(const Graph& g, const Labeling& lab, int threads = 1);

struct StretchReport {
  int delta = 1;
  DurationMatrix durations;
  DistanceMatrix distances;
  Rational stretch{1, 1};
  std::pair<int, int> worst_pair{0, 0};

  Rational per_pair(int u, int v) const {
    return Rational(durations.at(u, v), distances.at(u, v));
  }
};

// Max over ordered pairs u != v of duration/distance. Distance-1 pairs
// always contribute exactly 1 and cannot exceed the maximum. Ties resolve
// to the lexicographically smallest ordered pair.
StretchReport evaluate_stretch(const Graph& g, const Labeling& lab, int threads = 1);

// True iff every ordered pair satisfies duration <= bound_flat[u][v], where
// bound_flat is a row-major (n+1)^2 matrix (normally floor(alpha * dist)).
// Shared fast path for the exact solver and local search; aborts early on
// the first violated source vertex.
bool within_bound(const Graph& g, const Labeling& lab,
                  const std::vector<std::int64_t>& bound_flat);

}  // namespace stgr
