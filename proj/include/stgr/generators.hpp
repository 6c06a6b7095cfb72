#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "stgr/graph.hpp"
#include "stgr/temporal.hpp"

namespace stgr {

// Deterministic random source. All sampling goes through below()/range(),
// whose outputs depend only on the seed and the call sequence, so generated
// instances are byte-stable across runs and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi);

 private:
  std::mt19937_64 gen_;
};

// Exact probability num/den with 0 <= num <= den. Parsed from "0.4"-style
// decimals or "2/5"-style fractions; comparisons never go through floats.
struct Probability {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Probability parse_probability(const std::string& text);

Graph gen_path(int n);   // n >= 1
Graph gen_cycle(int n);  // n >= 3
Graph gen_star(int n);   // n >= 2, center vertex 1

// Random tree via uniform attachment; deterministic for fixed seed.
Graph gen_tree(int n, std::uint64_t seed);

// G(n,p) resampled until connected, up to max_retries attempts.
Graph gen_gnp(int n, const Probability& p, std::uint64_t seed, int max_retries = 64);

// Random spanning tree plus up to extra_edges additional distinct edges.
Graph random_connected_graph(int n, int extra_edges, Rng& rng);

Labeling random_labeling(const Graph& g, int delta, Rng& rng);

}  // namespace stgr
