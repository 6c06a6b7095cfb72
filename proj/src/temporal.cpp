#include "stgr/temporal.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <thread>

namespace stgr {

Labeling make_labeling(const Graph& g, int delta, std::vector<int> labels) {
  if (delta < 1) throw error("delta must be at least 1");
  if (static_cast<int>(labels.size()) != g.m()) {
    throw error("label vector length does not match edge count");
  }
  for (int l : labels) {
    if (l < 1 || l > delta) throw error("label out of range");
  }
  return Labeling{delta, std::move(labels)};
}

Labeling constant_labeling(const Graph& g, int delta, int value) {
  if (value < 1 || value > delta) throw error("label out of range");
  return Labeling{delta, std::vector<int>(g.m(), value)};
}

Labeling rotate_labeling(const Labeling& lab, int c) {
  Labeling out = lab;
  int delta = lab.delta;
  int shift = ((c % delta) + delta) % delta;
  for (int& l : out.labels) l = (l - 1 + shift) % delta + 1;
  return out;
}

int waiting_time(int prev, int next, int delta) {
  if (delta < 1) throw error("delta must be at least 1");
  if (prev < 1 || prev > delta || next < 1 || next > delta) throw error("label out of range");
  int diff = next - prev;
  return diff > 0 ? diff : delta + diff;
}

std::int64_t path_duration(std::span<const int> labels, int delta) {
  if (labels.empty()) throw error("path must have at least one edge");
  std::int64_t dur = 1;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    dur += waiting_time(labels[i], labels[i + 1], delta);
  }
  return dur;
}

namespace {

// Earliest-arrival relaxation over the whole vertex set, started at vertex
// `start` with arrival time `t0`. Traversing an edge labeled l from arrival
// time a departs (and arrives) at the smallest time > a congruent to
// l mod delta. Arrival times are monotone under relaxation, so a Dijkstra
// queue suffices.
void earliest_arrivals(const Graph& g, const Labeling& lab, int start, std::int64_t t0,
                       std::vector<std::int64_t>& arrival) {
  const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
  arrival.assign(g.n + 1, INF);
  arrival[start] = t0;
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({t0, start});
  while (!pq.empty()) {
    auto [a, v] = pq.top();
    pq.pop();
    if (a != arrival[v]) continue;
    for (auto [w, e] : g.adj[v]) {
      int l = lab.labels[e];
      std::int64_t rem = ((a - l) % lab.delta + lab.delta) % lab.delta;
      std::int64_t t = a + (lab.delta - rem);  // smallest time > a, congruent to l
      if (t < arrival[w]) {
        arrival[w] = t;
        pq.push({t, w});
      }
    }
  }
}

}  // namespace

std::vector<std::int64_t> fastest_durations_from(const Graph& g, const Labeling& lab, int u) {
  const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(g.n + 1, INF);
  best[u] = 0;
  std::vector<std::int64_t> arrival;
  for (auto [w, e] : g.adj[u]) {
    int l = lab.labels[e];
    earliest_arrivals(g, lab, w, l, arrival);
    for (int v = 1; v <= g.n; ++v) {
      if (v == u || arrival[v] == INF) continue;
      std::int64_t dur = arrival[v] - l + 1;
      best[v] = std::min(best[v], dur);
    }
  }
  return best;
}

std::int64_t fastest_duration(const Graph& g, const Labeling& lab, int u, int v) {
  if (u < 1 || u > g.n || v < 1 || v > g.n) throw error("vertex id out of range");
  if (u == v) return 0;
  return fastest_durations_from(g, lab, u)[v];
}

DurationMatrix all_pairs_durations(const Graph& g, const Labeling& lab, int threads) {
  DurationMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<std::size_t>(g.n + 1) * (g.n + 1), 0);
  auto run = [&](int lo, int hi) {
    for (int u = lo; u < hi; ++u) {
      auto row = fastest_durations_from(g, lab, u);
      for (int v = 1; v <= g.n; ++v) dm.at(u, v) = (v == u) ? 0 : row[v];
    }
  };
  int t = std::max(1, threads);
  if (t == 1 || g.n < 2 * t) {
    run(1, g.n + 1);
  } else {
    std::vector<std::thread> pool;
    int chunk = (g.n + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      int lo = 1 + i * chunk;
      int hi = std::min(g.n + 1, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return dm;
}

StretchReport evaluate_stretch(const Graph& g, const Labeling& lab, int threads) {
  if (static_cast<int>(lab.labels.size()) != g.m()) {
    throw error("label vector length does not match edge count");
  }
  StretchReport rep;
  rep.delta = lab.delta;
  rep.distances = all_pairs_distances(g);
  rep.durations = all_pairs_durations(g, lab, threads);
  rep.stretch = Rational(1, 1);
  rep.worst_pair = {0, 0};
  for (int u = 1; u <= g.n; ++u) {
    for (int v = 1; v <= g.n; ++v) {
      if (u == v) continue;
      if (rep.worst_pair.first == 0) rep.worst_pair = {u, v};
      int dist = rep.distances.at(u, v);
      if (dist <= 1) continue;  // ratio is exactly 1, never above the running max
      Rational r(rep.durations.at(u, v), dist);
      if (r > rep.stretch) {
        rep.stretch = r;
        rep.worst_pair = {u, v};
      }
    }
  }
  return rep;
}

bool within_bound(const Graph& g, const Labeling& lab,
                  const std::vector<std::int64_t>& bound_flat) {
  const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> arrival;
  for (int u = 1; u <= g.n; ++u) {
    std::vector<std::int64_t> best(g.n + 1, INF);
    for (auto [w, e] : g.adj[u]) {
      int l = lab.labels[e];
      earliest_arrivals(g, lab, w, l, arrival);
      for (int v = 1; v <= g.n; ++v) {
        if (v == u) continue;
        std::int64_t dur = arrival[v] - l + 1;
        best[v] = std::min(best[v], dur);
      }
    }
    for (int v = 1; v <= g.n; ++v) {
      if (v == u) continue;
      if (best[v] > bound_flat[static_cast<std::size_t>(u) * (g.n + 1) + v]) return false;
    }
  }
  return true;
}

}  // namespace stgr
