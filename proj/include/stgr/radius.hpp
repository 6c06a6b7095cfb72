#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stgr/graph.hpp"
#include "stgr/rational.hpp"
#include "stgr/temporal.hpp"

namespace stgr {

// Labeling produced by the layered construction: BFS layers from a
// minimum-eccentricity root; edges reaching layer i from layer i-1 get
// ceil(delta/2) when i is odd and delta when i is even; edges inside a
// layer get delta.
struct RadiusResult {
  int root = 0;
  Layering layers;
  Labeling labeling;
};

// root, when provided, must have eccentricity equal to the radius.
// Otherwise the smallest-id vertex of minimum eccentricity is used.
RadiusResult radius_label(const Graph& g, int delta, std::optional<int> root = std::nullopt);

// Per-distance worst-case guarantees for the construction:
//   distance l <= radius+1 : delta - (delta-1)/l
//   distance l >= radius+2 : (radius*delta + 1)/l
// The overall bound is the maximum over l in [2, diameter]; 1 when the
// diameter is at most 1.
struct BoundCertificate {
  int delta = 1;
  int radius = 0;
  int diameter = 0;
  std::vector<std::pair<int, Rational>> per_distance;  // (distance, bound), distance in [2, diameter]
  Rational overall{1, 1};
};

BoundCertificate bound_certificate(const Graph& g, int delta);

// True iff 2 <= radius < diameter and every pair at distance radius+1 has
// dist(root,u) + dist(root,v) < 2*radius; under these conditions the
// construction achieves stretch at most delta - (delta-1)/radius.
bool improved_bound_applies(const Graph& g, int root);

struct TreeGuarantee {
  Rational upper{1, 1};  // (delta+1)/2
  bool optimal = false;  // max degree >= delta+1 forces the optimum to equal the bound
  int max_degree = 0;
};

TreeGuarantee tree_guarantees(const Graph& g, int delta);

}  // namespace stgr
