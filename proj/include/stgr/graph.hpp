#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stgr/errors.hpp"

namespace stgr {

// Simple connected undirected graph. Vertex ids are 1-based, matching the
// file format; edges are stored as (u, v) with u < v in ascending order and
// referenced elsewhere by their index in `edges`.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  // adj[v] lists (neighbor, edge index), sorted by neighbor id.
  std::vector<std::vector<std::pair<int, int>>> adj;

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  // Index into `edges`, or -1 if not present.
  int edge_index(int u, int v) const;
};

// Validates ids, rejects self-loops and duplicates, requires connectivity.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // (n+1)*(n+1), row-major, 1-based; d[u][u] = 0

  int at(int u, int v) const { return d[static_cast<std::size_t>(u) * (n + 1) + v]; }
  int& at(int u, int v) { return d[static_cast<std::size_t>(u) * (n + 1) + v]; }
};

DistanceMatrix all_pairs_distances(const Graph& g);

struct Metrics {
  std::vector<int> ecc;  // 1-based
  int radius = 0;
  int diameter = 0;
};

Metrics metrics(const Graph& g, const DistanceMatrix& dist);
Metrics metrics(const Graph& g);

// BFS layers from a root: layer[root] = 0, layer of v = dist(root, v).
struct Layering {
  int root = 0;
  std::vector<int> layer;  // 1-based
  int depth = 0;           // eccentricity of root
};

Layering bfs_layers(const Graph& g, int root);

// Parsed contents of a graph file. `delta` is the period from the header
// (0 for coloring inputs), `labels` is present iff the edge lines carried
// labels, indexed like Graph::edges.
struct ParsedGraph {
  Graph g;
  int delta = 0;
  std::optional<std::vector<int>> labels;
  bool coloring_input = false;  // header was "p col"
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_string(const std::string& text);
ParsedGraph parse_graph_file(const std::string& path);

// Canonical serialization: header line then edge lines in ascending order.
// parse(serialize(g)) reproduces the graph exactly.
std::string serialize_graph(const Graph& g, int delta,
                            const std::vector<int>* labels = nullptr);
std::string serialize_coloring_graph(const Graph& g);

}  // namespace stgr
