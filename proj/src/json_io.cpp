#include "stgr/json_io.hpp"

namespace stgr {

namespace {

const char* role_name(EdgeRole r) {
  switch (r) {
    case EdgeRole::Cycle: return "cycle";
    case EdgeRole::Shortcut: return "shortcut";
    case EdgeRole::Parallel: return "parallel";
    case EdgeRole::Zigzag: return "zigzag";
  }
  return "unknown";
}

const char* family_name(ReductionFamily f) {
  switch (f) {
    case ReductionFamily::Diam2: return "diameter2";
    case ReductionFamily::Tight3: return "tight3";
    case ReductionFamily::General: return "general";
  }
  return "unknown";
}

}  // namespace

json to_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

json to_json(const Graph& g, const StretchReport& report, bool with_matrices) {
  json j;
  j["delta"] = report.delta;
  j["n"] = g.n;
  j["m"] = g.m();
  j["stretch"] = to_json(report.stretch);
  j["worst_pair"] = json::array({report.worst_pair.first, report.worst_pair.second});
  if (with_matrices) {
    json dur = json::array(), dist = json::array();
    for (int u = 1; u <= g.n; ++u) {
      json dur_row = json::array(), dist_row = json::array();
      for (int v = 1; v <= g.n; ++v) {
        dur_row.push_back(report.durations.at(u, v));
        dist_row.push_back(report.distances.at(u, v));
      }
      dur.push_back(std::move(dur_row));
      dist.push_back(std::move(dist_row));
    }
    j["durations"] = std::move(dur);
    j["distances"] = std::move(dist);
  }
  return j;
}

json to_json(const BoundCertificate& cert) {
  json j;
  j["delta"] = cert.delta;
  j["radius"] = cert.radius;
  j["diameter"] = cert.diameter;
  json per = json::array();
  for (const auto& [dist, bound] : cert.per_distance)
    per.push_back(json{{"distance", dist}, {"bound", to_json(bound)}});
  j["per_distance"] = std::move(per);
  j["overall"] = to_json(cert.overall);
  return j;
}

json to_json(const SunglassesGadget& sg) {
  json j;
  j["delta"] = sg.delta;
  j["n"] = sg.graph.n;
  j["m"] = sg.graph.m();
  j["docking"] = json::array({sg.u, sg.v});
  j["central_vertices"] = sg.central;
  json edges = json::array();
  for (std::size_t e = 0; e < sg.graph.edges.size(); ++e) {
    json row;
    row["u"] = sg.graph.edges[e].first;
    row["v"] = sg.graph.edges[e].second;
    row["role"] = role_name(sg.role[e]);
    row["label"] = sg.natural_label[e];
    if (sg.zigzag_index[e] > 0) row["zigzag_index"] = sg.zigzag_index[e];
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  json zz = json::array();
  for (const auto& p : zigzag_paths(sg)) zz.push_back(p.vertices);
  j["zigzag_paths"] = std::move(zz);
  json cycles = json::array();
  for (const auto& c : chronological_cycles(sg)) cycles.push_back(c.vertices);
  j["chronological_cycles"] = std::move(cycles);
  return j;
}

json to_json(const ReductionInstance& inst) {
  json j;
  j["family"] = family_name(inst.family);
  j["delta"] = inst.delta;
  j["alpha"] = to_json(inst.alpha);
  j["n"] = inst.g.n;
  j["m"] = inst.g.m();
  j["provenance_n"] = inst.provenance.n;
  j["provenance_m"] = inst.provenance.m();
  j["center"] = inst.center;
  if (inst.center2 > 0) j["center2"] = inst.center2;
  if (!inst.vstar.empty()) j["vstar"] = inst.vstar;
  j["X"] = inst.X;
  if (!inst.Y.empty()) j["Y"] = inst.Y;
  if (!inst.Xhat.empty()) j["Xhat"] = inst.Xhat;
  if (!inst.c123.empty()) j["c123"] = inst.c123;
  if (!inst.gadgets.empty()) {
    json rows = json::array();
    for (const auto& eg : inst.gadgets) {
      json row;
      row["dock_u"] = eg.dock_u;
      row["dock_v"] = eg.dock_v;
      row["pu"] = std::vector<int>(eg.pu.begin() + 1, eg.pu.end() - 1);
      row["pv"] = std::vector<int>(eg.pv.begin() + 1, eg.pv.end() - 1);
      row["centrals"] = eg.centrals;
      rows.push_back(std::move(row));
    }
    j["gadgets"] = std::move(rows);
  }
  if (!inst.diamonds.empty()) {
    json rows = json::array();
    for (const auto& d : inst.diamonds)
      rows.push_back(json{{"u", d.u}, {"v", d.v}, {"x_uv", d.x_uv}, {"x_vu", d.x_vu}});
    j["diamonds"] = std::move(rows);
  }
  return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace stgr
