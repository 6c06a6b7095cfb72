#include "stgr/generators.hpp"

#include <limits>
#include <utility>
#include <vector>

#include "stgr/errors.hpp"

namespace stgr {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw error("internal: zero bound for random draw");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % bound;
}

int Rng::range(int lo, int hi) {
  if (lo > hi) throw error("internal: empty range for random draw");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi) - lo + 1));
}

Probability parse_probability(const std::string& text) {
  auto fail = [&]() -> Probability {
    throw error("invalid probability '" + text + "': expected a decimal in [0,1] or p/q");
  };
  if (text.empty()) fail();
  Probability p;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) fail();
    for (char c : ns + ds)
      if (c < '0' || c > '9') fail();
    try {
      p.num = std::stoll(ns);
      p.den = std::stoll(ds);
    } catch (const std::exception&) {
      fail();
    }
    if (p.den <= 0 || p.num < 0 || p.num > p.den) fail();
    return p;
  }
  auto dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) fail();
  for (char c : whole + frac)
    if (c < '0' || c > '9') fail();
  if (frac.size() > 9) frac = frac.substr(0, 9);  // finer precision is ignored
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t num = 0;
  try {
    num = (whole.empty() ? 0 : std::stoll(whole)) * den + (frac.empty() ? 0 : std::stoll(frac));
  } catch (const std::exception&) {
    fail();
  }
  p.num = num;
  p.den = den;
  if (p.num > p.den) fail();
  return p;
}

Graph gen_path(int n) {
  if (n < 1) throw error("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw error("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return make_graph(n, edges);
}

Graph gen_star(int n) {
  if (n < 2) throw error("star needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return make_graph(n, edges);
}

Graph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw error("tree needs n >= 1");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(rng.range(1, v - 1), v);
  return make_graph(n, edges);
}

Graph gen_gnp(int n, const Probability& p, std::uint64_t seed, int max_retries) {
  if (n < 1) throw error("gnp needs n >= 1");
  if (max_retries < 1) throw error("gnp needs a positive retry budget");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p.den))) < p.num)
          edges.emplace_back(u, v);
    try {
      return make_graph(n, edges);
    } catch (const error&) {
      // disconnected draw; resample
    }
  }
  throw error("gnp sample stayed disconnected after " + std::to_string(max_retries) +
              " attempts; raise p or the retry budget");
}

Graph random_connected_graph(int n, int extra_edges, Rng& rng) {
  if (n < 1) throw error("graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(rng.range(1, v - 1), v);
  Graph g = make_graph(n, edges);
  for (int t = 0; t < extra_edges; ++t) {
    std::vector<std::pair<int, int>> missing;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) break;
    auto pick = missing[rng.below(missing.size())];
    edges.push_back(pick);
    g = make_graph(n, edges);
  }
  return g;
}

Labeling random_labeling(const Graph& g, int delta, Rng& rng) {
  std::vector<int> labels(g.edges.size());
  for (auto& l : labels) l = rng.range(1, delta);
  return make_labeling(g, delta, labels);
}

}  // namespace stgr
