#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stgr/graph.hpp"
#include "stgr/rational.hpp"
#include "stgr/temporal.hpp"

namespace stgr {

enum class EdgeRole { Cycle, Shortcut, Parallel, Zigzag };

// The sunglasses gadget on docking points u, v: a cycle of length 2*delta
// through u and v (two "chronological" u-v paths of delta edges each) plus
// shortcut, parallel and zigzag edges. Vertex ids: u = 1, v = 2, then
// p^{u,1..delta-1}, then p^{v,1..delta-1}. Where a parallel edge coincides
// with an existing edge (delta in {4,5,6}) the earlier role is kept.
struct SunglassesGadget {
  int delta = 3;
  Graph graph;
  int u = 1, v = 2;
  std::vector<EdgeRole> role;     // per edge index
  std::vector<int> zigzag_index;  // per edge index; 0 unless the edge is zigzag
  std::vector<int> natural_label; // per edge index: the label the gadget labeling assigns
  std::vector<int> central;       // ascending ids; 4 vertices for odd delta, 2 for even

  // p^{u,i} / p^{v,i} for i in [0, delta]; index 0 is the vertex itself and
  // index delta is the opposite docking point.
  int pu(int i) const;
  int pv(int i) const;
};

SunglassesGadget sunglasses_gadget(int delta);  // delta >= 3

// Chronological paths get labels 1..delta in traversal order, zigzag edges
// carry their index, and every other (vertical) edge gets (delta+1)/2 for
// odd delta and delta/2 for even delta.
Labeling sunglasses_labeling(const SunglassesGadget& sg);

// The four maximal zigzag-only paths that start at p^{a,1} or p^{a,delta-1};
// each must end at a central vertex with labels 1, 2, ... in order. Empty
// for delta = 3 (no zigzag edges).
struct ZigzagPath {
  int start = 0;
  std::vector<int> vertices;
  std::vector<int> edge_indices;
};
std::vector<ZigzagPath> zigzag_paths(const SunglassesGadget& sg);

// C^u and C^v: the cycle through a's chronological prefix, one shortcut and
// b's chronological suffix. delta vertices for odd delta, delta-1 for even.
struct ChronoCycle {
  std::vector<int> vertices;      // starts at the docking point
  std::vector<int> edge_indices;  // consecutive, closing back to the start
};
std::array<ChronoCycle, 2> chronological_cycles(const SunglassesGadget& sg);

enum class ReductionFamily { Diam2, Tight3, General };

// Instance of the labeling problem produced from a 3-coloring input.
struct ReductionInstance {
  ReductionFamily family = ReductionFamily::Tight3;
  int delta = 3;
  Rational alpha{1, 1};  // target stretch to decide
  Graph g;
  Graph provenance;

  int center = 0;   // c, adjacent to every provenance vertex
  int center2 = 0;  // c* (Diam2 only)
  std::vector<int> vstar;  // auxiliary star leaves (General, delta-3 of them)
  std::vector<int> X;      // central vertices over all gadgets
  std::vector<int> Y;      // gadget-internal non-central vertices
  std::vector<int> Xhat;   // companions of X (odd delta), Xhat[i] pairs with X[i]
  std::vector<int> c123;   // delta == 4 auxiliary triangle

  struct EmbeddedGadget {
    int dock_u = 0, dock_v = 0;
    // pu[i] / pv[i] for i in [0, delta]: instance ids of the gadget roster,
    // with pu[0] = dock_u, pv[0] = dock_v, pu[delta] = dock_v, pv[delta] = dock_u.
    std::vector<int> pu, pv;
    std::vector<int> centrals;  // ascending instance ids
  };
  std::vector<EmbeddedGadget> gadgets;  // per provenance non-edge, lexicographic

  struct Diamond {
    int u = 0, v = 0;      // provenance non-edge
    int x_uv = 0, x_vu = 0;
  };
  std::vector<Diamond> diamonds;  // Diam2 only

  std::vector<int> gadget_label;  // per instance edge: sunglasses label, 0 otherwise
};

// Diameter-2 construction with target stretch 1, delta = 3. Requires every
// input vertex to have a non-neighbor.
ReductionInstance reduce_3col_diam2(const Graph& g3col);

// Radius-2 family with target stretch delta/2 for delta >= 3. Requires every
// input vertex to have a non-neighbor.
ReductionInstance reduce_3col(const Graph& g3col, int delta);

// The labeling the constructions pair with a proper 3-coloring chi
// (1-based, values in {1,2,3}, all three colors used).
Labeling coloring_to_labeling(const ReductionInstance& inst, const std::vector<int>& chi);

struct ExtractedColoring {
  std::vector<int> color;  // 1-based over provenance vertices
  bool proper = false;
};
ExtractedColoring labeling_to_coloring(const ReductionInstance& inst, const Labeling& lab);

}  // namespace stgr
