#include "stgr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace stgr {

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it != edges.end() && *it == std::make_pair(u, v)) {
    return static_cast<int>(it - edges.begin());
  }
  return -1;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw error("graph must have at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw error("vertex id out of range");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      throw error("duplicate edge {" + std::to_string(edges[i].first) + "," +
                  std::to_string(edges[i].second) + "}");
    }
  }

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n + 1, {});
  for (int i = 0; i < g.m(); ++i) {
    auto [u, v] = g.edges[i];
    g.adj[u].push_back({v, i});
    g.adj[v].push_back({u, i});
  }
  for (int v = 1; v <= n; ++v) std::sort(g.adj[v].begin(), g.adj[v].end());

  // connectivity
  std::vector<char> seen(n + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : g.adj[v]) {
      (void)e;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n) throw error("disconnected graph");
  return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<std::size_t>(g.n + 1) * (g.n + 1), -1);
  std::vector<int> dist(g.n + 1);
  for (int s = 1; s <= g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : g.adj[v]) {
        (void)e;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    for (int v = 1; v <= g.n; ++v) dm.at(s, v) = dist[v];
  }
  return dm;
}

Metrics metrics(const Graph& g, const DistanceMatrix& dist) {
  Metrics mt;
  mt.ecc.assign(g.n + 1, 0);
  mt.radius = g.n;  // upper bound, tightened below
  mt.diameter = 0;
  for (int v = 1; v <= g.n; ++v) {
    int e = 0;
    for (int w = 1; w <= g.n; ++w) e = std::max(e, dist.at(v, w));
    mt.ecc[v] = e;
    mt.radius = std::min(mt.radius, e);
    mt.diameter = std::max(mt.diameter, e);
  }
  return mt;
}

Metrics metrics(const Graph& g) { return metrics(g, all_pairs_distances(g)); }

Layering bfs_layers(const Graph& g, int root) {
  if (root < 1 || root > g.n) throw error("vertex id out of range");
  Layering lay;
  lay.root = root;
  lay.layer.assign(g.n + 1, -1);
  lay.layer[root] = 0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : g.adj[v]) {
      (void)e;
      if (lay.layer[w] < 0) {
        lay.layer[w] = lay.layer[v] + 1;
        lay.depth = std::max(lay.depth, lay.layer[w]);
        q.push(w);
      }
    }
  }
  return lay;
}

namespace {

[[noreturn]] void syntax_error(int line_no, const std::string& what) {
  throw error("line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
  }
  try {
    out = std::stoll(tok);
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool coloring = false;
  long long n = 0, m = 0, delta = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> labels;
  int labeled = -1;  // -1 unknown, 0 unlabeled, 1 labeled
  long long edges_seen = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank line
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) syntax_error(line_no, "syntax error: duplicate header");
      std::string fmt;
      if (!(ls >> fmt)) syntax_error(line_no, "syntax error: missing format");
      std::string t1, t2, t3, rest;
      if (fmt == "stgr") {
        if (!(ls >> t1 >> t2 >> t3)) syntax_error(line_no, "syntax error: header needs n, m, delta");
        if (ls >> rest) syntax_error(line_no, "syntax error: trailing tokens in header");
        if (!parse_int(t1, n) || !parse_int(t2, m) || !parse_int(t3, delta)) {
          syntax_error(line_no, "syntax error: malformed header");
        }
        if (delta < 1) syntax_error(line_no, "syntax error: delta must be at least 1");
      } else if (fmt == "col") {
        coloring = true;
        if (!(ls >> t1 >> t2)) syntax_error(line_no, "syntax error: header needs n, m");
        if (ls >> rest) syntax_error(line_no, "syntax error: trailing tokens in header");
        if (!parse_int(t1, n) || !parse_int(t2, m)) {
          syntax_error(line_no, "syntax error: malformed header");
        }
      } else {
        syntax_error(line_no, "syntax error: unknown format '" + fmt + "'");
      }
      if (n < 1) syntax_error(line_no, "syntax error: n must be positive");
      if (m < 0) syntax_error(line_no, "syntax error: negative edge count");
      have_header = true;
      continue;
    }
    if (kind == "e") {
      if (!have_header) syntax_error(line_no, "syntax error: edge before header");
      std::string su, sv;
      if (!(ls >> su >> sv)) syntax_error(line_no, "syntax error: edge needs two endpoints");
      long long u, v;
      if (!parse_int(su, u) || !parse_int(sv, v)) {
        syntax_error(line_no, "syntax error: malformed edge line");
      }
      std::string sl;
      bool has_label = static_cast<bool>(ls >> sl);
      std::string rest;
      if (ls >> rest) syntax_error(line_no, "syntax error: trailing tokens on edge line");

      if (u == v) syntax_error(line_no, "self-loop at vertex " + std::to_string(u));
      if (u < 1 || v < 1 || u > n || v > n) syntax_error(line_no, "vertex id out of range");
      if (u > v) syntax_error(line_no, "syntax error: endpoints must satisfy u < v");

      if (coloring && has_label) {
        syntax_error(line_no, "syntax error: labels not allowed in coloring input");
      }
      if (labeled == -1) {
        labeled = has_label ? 1 : 0;
      } else if ((labeled == 1) != has_label) {
        syntax_error(line_no, "syntax error: either all edges carry labels or none");
      }
      if (has_label) {
        long long lab;
        if (!parse_int(sl, lab)) syntax_error(line_no, "syntax error: malformed label");
        if (lab < 1 || lab > delta) syntax_error(line_no, "label out of range");
        labels.push_back(static_cast<int>(lab));
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      ++edges_seen;
      if (edges_seen > m) syntax_error(line_no, "syntax error: more edge lines than m");
      continue;
    }
    syntax_error(line_no, "syntax error: unknown line type '" + kind + "'");
  }

  if (!have_header) throw error("line 1: syntax error: missing header");
  if (edges_seen != m) {
    throw error("line " + std::to_string(line_no) + ": syntax error: expected " +
                std::to_string(m) + " edge lines, got " + std::to_string(edges_seen));
  }

  ParsedGraph pg;
  pg.coloring_input = coloring;
  pg.delta = coloring ? 0 : static_cast<int>(delta);

  // Labels are attached to edges by position before sorting; re-associate
  // them with the canonical edge order used by make_graph.
  if (labeled == 1) {
    std::vector<std::pair<std::pair<int, int>, int>> tagged(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) tagged[i] = {edges[i], labels[i]};
    pg.g = make_graph(static_cast<int>(n), edges);
    std::vector<int> ordered(pg.g.m());
    for (auto& [e, lab] : tagged) {
      int idx = pg.g.edge_index(e.first, e.second);
      ordered[idx] = lab;
    }
    pg.labels = std::move(ordered);
  } else {
    pg.g = make_graph(static_cast<int>(n), edges);
  }
  return pg;
}

ParsedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g, int delta, const std::vector<int>* labels) {
  if (labels && static_cast<int>(labels->size()) != g.m()) {
    throw error("label vector length does not match edge count");
  }
  std::ostringstream out;
  out << "p stgr " << g.n << " " << g.m() << " " << delta << "\n";
  for (int i = 0; i < g.m(); ++i) {
    out << "e " << g.edges[i].first << " " << g.edges[i].second;
    if (labels) out << " " << (*labels)[i];
    out << "\n";
  }
  return out.str();
}

std::string serialize_coloring_graph(const Graph& g) {
  std::ostringstream out;
  out << "p col " << g.n << " " << g.m() << "\n";
  for (int i = 0; i < g.m(); ++i) {
    out << "e " << g.edges[i].first << " " << g.edges[i].second << "\n";
  }
  return out.str();
}

}  // namespace stgr
