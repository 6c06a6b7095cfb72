#pragma once

#include <json.hpp>

#include "stgr/gadgets.hpp"
#include "stgr/graph.hpp"
#include "stgr/radius.hpp"
#include "stgr/rational.hpp"
#include "stgr/temporal.hpp"

namespace stgr {

// Reports use nlohmann's ordered_json so field order (and therefore the
// serialized bytes) is fixed by construction order.
using json = nlohmann::ordered_json;

json to_json(const Rational& r);  // {"num": .., "den": ..}

// {delta, n, m, stretch, worst_pair}; durations/distances matrices included
// when with_matrices is set (row-major over 1-based ids, diagonal zero).
json to_json(const Graph& g, const StretchReport& report, bool with_matrices = false);

json to_json(const BoundCertificate& cert);

// Role map of a gadget: vertices, per-edge roles/labels, centrals, paths.
json to_json(const SunglassesGadget& sg);

// Structural role map of a reduction instance.
json to_json(const ReductionInstance& inst);

std::string dump_report(const json& j);  // 2-space indent + trailing newline

}  // namespace stgr
