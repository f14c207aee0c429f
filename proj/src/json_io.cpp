#include "rainbow/json_io.hpp"

namespace rainbow {

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

nlohmann::json witness_to_json(const CaseWitness& w) {
  nlohmann::json j;
  j["label"] = std::string(to_string(w.label));
  j["root"] = optional_json(w.root);
  j["layer_sizes"] = w.layer_sizes;
  if (w.u) j["u"] = *w.u;
  if (w.v) j["v"] = *w.v;
  if (w.v1) j["v1"] = *w.v1;
  if (w.neighbors_of_u) j["V_u"] = *w.neighbors_of_u;
  if (w.dominating_set) j["D"] = *w.dominating_set;
  if (w.part_sizes) j["part_sizes"] = *w.part_sizes;
  if (w.label == CaseLabel::NO_BOUND) j["pendant_layer_counts"] = w.pendant_layer_counts;
  if (w.fallback) j["fallback"] = *w.fallback;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

nlohmann::json certificate_to_json(const BoundCertificate& cert) {
  nlohmann::json j;
  j["case"] = std::string(to_string(cert.witness.label));
  j["claimed_bound"] = optional_json(cert.claimed_bound);
  j["colors_used"] = cert.colors_used();
  j["verified"] = cert.verified;
  j["lower_bound"] = cert.lower_bound;
  auto coloring = nlohmann::json::array();
  if (cert.coloring) {
    const auto& edges = cert.coloring->edges();
    const auto& colors = cert.coloring->colors();
    for (std::size_t i = 0; i < edges.size(); ++i)
      coloring.push_back({edges[i].u, edges[i].v, colors[i]});
  }
  j["coloring"] = coloring;
  j["witness"] = witness_to_json(cert.witness);
  return j;
}

nlohmann::json analysis_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["n"] = r.order;
  j["m"] = r.size;
  j["connected"] = r.connected;
  j["component_sizes"] = r.component_sizes;
  j["diameter"] = optional_json(r.diameter);
  j["triangle_free"] = r.triangle_free;
  j["claw_free"] = r.claw_free;
  j["bridges"] = r.bridges.size();
  j["bridge_edges"] = edges_json(r.bridges);
  j["min_degree"] = r.min_degree;
  j["root"] = optional_json(r.root);
  j["layer_sizes"] = r.layer_sizes;
  j["pendant_layer_counts"] = r.pendant_layer_counts;
  j["high_degree_count"] = r.high_degree_count;
  return j;
}

}  // namespace rainbow
