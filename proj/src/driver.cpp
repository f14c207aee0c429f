#include <array>
#include <utility>

#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

struct LabelInfo {
  CaseLabel label;
  std::string_view name;
  std::optional<int> bound;
};

constexpr std::array<LabelInfo, 20> kLabels{{
    {CaseLabel::THM31_CASE1, "THM31_CASE1", 4},
    {CaseLabel::THM31_SUB21, "THM31_SUB21", 4},
    {CaseLabel::THM31_SUB22, "THM31_SUB22", 4},
    {CaseLabel::PROP32_TREE, "PROP32_TREE", 3},
    {CaseLabel::PROP35_DISCONNECTED, "PROP35_DISCONNECTED", 4},
    {CaseLabel::THM41_P4, "THM41_P4", 3},
    {CaseLabel::THM41_SUB11, "THM41_SUB11", 5},
    {CaseLabel::THM41_SUB12, "THM41_SUB12", 4},
    {CaseLabel::THM41_SUB13, "THM41_SUB13", 4},
    {CaseLabel::THM41_SUB21, "THM41_SUB21", 5},
    {CaseLabel::THM41_SUB22, "THM41_SUB22", 5},
    {CaseLabel::THM41_SUB23, "THM41_SUB23", 4},
    {CaseLabel::THM41_CASE3, "THM41_CASE3", 5},
    {CaseLabel::PROP43_CASE1, "PROP43_CASE1", 3},
    {CaseLabel::PROP43_CASE2, "PROP43_CASE2", 5},
    {CaseLabel::PROP44_CASE1, "PROP44_CASE1", 2},
    {CaseLabel::PROP44_CASE2, "PROP44_CASE2", 6},
    {CaseLabel::CLOSED_FORM, "CLOSED_FORM", std::nullopt},
    {CaseLabel::SEARCH_FALLBACK, "SEARCH_FALLBACK", std::nullopt},
    {CaseLabel::NO_BOUND, "NO_BOUND", std::nullopt},
}};

const LabelInfo& info(CaseLabel label) {
  for (const auto& entry : kLabels)
    if (entry.label == label) return entry;
  throw Error(ErrorKind::Internal, "unknown case label");
}

BoundCertificate closed_form_certificate(const Graph& g) {
  BoundCertificate cert;
  cert.input_graph = g;
  cert.target_graph = g;
  cert.witness.label = CaseLabel::CLOSED_FORM;
  cert.claimed_bound = rc_closed_form(g);
  cert.coloring = color_closed_form(g);
  cert.verified = static_cast<bool>(verify_rainbow_connected(g, *cert.coloring));
  cert.lower_bound = lower_bounds(g);
  return cert;
}

BoundCertificate no_bound_certificate(const Graph& g, const Graph& h, std::string note) {
  BoundCertificate cert;
  cert.input_graph = g;
  cert.target_graph = g;
  cert.witness.label = CaseLabel::NO_BOUND;
  cert.witness.note = std::move(note);
  const auto report = analyze(h);
  cert.witness.root = report.root;
  cert.witness.layer_sizes = report.layer_sizes;
  cert.witness.pendant_layer_counts =
      report.connected ? report.pendant_layer_counts : std::vector<int>{report.high_degree_count};
  cert.lower_bound = lower_bounds(g);
  return cert;
}

}  // namespace

std::string_view to_string(CaseLabel label) { return info(label).name; }

std::optional<CaseLabel> case_label_from_string(std::string_view name) {
  for (const auto& entry : kLabels)
    if (entry.name == name) return entry.label;
  return std::nullopt;
}

std::optional<int> case_bound(CaseLabel label) { return info(label).bound; }

// g is the graph being coloured; the cases are phrased in terms of its
// complement h.
BoundCertificate rc_upper_bound_driver(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph not connected");
  if (g.order() == 1) return closed_form_certificate(g);
  const Graph h = complement(g);

  auto relabel = [&](BoundCertificate cert) {
    cert.input_graph = g;
    return cert;
  };

  const auto comps = components(h);
  if (comps.size() >= 2) {
    const bool trivial_pair =
        comps.size() == 2 && (comps[0].size() == 1 || comps[1].size() == 1);
    if (!trivial_pair) return relabel(color_complement_of_disconnected(h));
    if (comps[0].size() == 1 && comps[1].size() == 1) return closed_form_certificate(g);
    if (is_triangle_free(h)) return relabel(color_complement_trivial_plus_component(h));
    return no_bound_certificate(
        g, h, "complement is an isolated vertex plus a component containing a triangle");
  }

  const int d = *diameter(h);
  if (d >= 4) return relabel(color_complement_of_diam_ge4(h));
  if (d == 3) {
    if (is_triangle_free(h)) return relabel(color_complement_diam3_trianglefree(h));
    return no_bound_certificate(g, h, "complement has diameter 3 and contains a triangle");
  }
  if (d == 2) {
    if (is_triangle_free(h)) return relabel(color_complement_diam2_trianglefree(h));
    return no_bound_certificate(g, h, "complement has diameter 2 and contains a triangle");
  }
  // A connected complement of diameter at most 1 is complete, which leaves g
  // without edges; impossible for connected g with n >= 2.
  throw Error(ErrorKind::Internal, "connected graph with complete complement");
}

}  // namespace rainbow
