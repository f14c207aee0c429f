// rainbow: analyze graphs, build complement colourings, verify colourings,
// run the exact solver and process graph6 corpora.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/json_io.hpp"

using namespace rainbow;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kParse = 2, kNoBound = 3, kPrecondition = 4, kResource = 5,
            kInternal = 6 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Coverage:
      return kParse;
    case ErrorKind::NotConnected:
    case ErrorKind::Precondition:
    case ErrorKind::InvalidArgument:
      return kPrecondition;
    case ErrorKind::ResourceLimit:
      return kResource;
    case ErrorKind::Internal:
      break;
  }
  return kInternal;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

bool is_graph6_path(const std::string& path) {
  return path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return in;
}

// First non-blank line for graph6, the whole file for edge lists.
Graph load_graph(const std::string& path, const std::string& format) {
  auto in = open_input(path);
  const bool g6 = format == "graph6" || (format == "auto" && is_graph6_path(path));
  if (!g6) return read_edge_list(in);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) return from_graph6(line);
  throw Error(ErrorKind::Parse, path + ": no graph6 line found");
}

json analysis_document(const Graph& g) {
  json j = analysis_to_json(analyze(g));
  j["complement"] = analysis_to_json(analyze(complement(g)));
  return j;
}

int cmd_analyze(const std::string& input, const std::string& format) {
  emit(analysis_document(load_graph(input, format)));
  return kOk;
}

BoundCertificate run_method(const Graph& g, const std::string& method) {
  if (method == "auto") return rc_upper_bound_driver(g);
  // forced routes colour g as the complement of h
  const Graph h = complement(g);
  if (method == "thm31") return color_complement_of_diam_ge4(h);
  if (method == "prop32") return color_complement_of_tree(h);
  if (method == "prop35") return color_complement_of_disconnected(h);
  if (method == "thm41") return color_complement_diam3_trianglefree(h);
  if (method == "prop43") return color_complement_diam2_trianglefree(h);
  if (method == "prop44") return color_complement_trivial_plus_component(h);
  throw Error(ErrorKind::InvalidArgument, "unknown method " + method);
}

int cmd_color(const std::string& input, const std::string& format, const std::string& method,
              const std::string& out_path) {
  const Graph g = load_graph(input, format);
  const auto cert = run_method(g, method);
  emit(certificate_to_json(cert));
  if (!out_path.empty() && cert.coloring) {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
    write_coloring(out, *cert.coloring);
  }
  if (cert.witness.label == CaseLabel::NO_BOUND) return kNoBound;
  return cert.verified ? kOk : kFalse;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& format) {
  const Graph g = load_graph(graph_path, format);
  auto in = open_input(coloring_path);
  const auto col = read_coloring(in, g);
  const auto verdict = verify_rainbow_connected(g, col);
  json j{{"rainbow_connected", verdict.rainbow_connected}, {"colors", col.num_colors()}};
  if (verdict.witness) j["witness"] = {verdict.witness->first, verdict.witness->second};
  emit(j);
  return verdict ? kOk : kFalse;
}

int cmd_exact(const std::string& input, const std::string& format, const SearchConfig& cfg) {
  const Graph g = load_graph(input, format);
  const auto result = exact_rc(g, cfg);
  if (result.known()) {
    emit({{"rc", *result.value}, {"lower_bound", result.lower_bound}});
    return kOk;
  }
  emit({{"unknown", {result.low, result.high}}, {"lower_bound", result.lower_bound}});
  std::cerr << "time budget exhausted; rc lies in [" << result.low << ", " << result.high
            << "]\n";
  return kResource;
}

int cmd_batch(const std::string& input, bool with_exact, const SearchConfig& cfg) {
  auto in = open_input(input);
  std::map<std::string, int> cases;
  json failures = json::array();
  int records = 0, parse_failures = 0, errors = 0;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (line.empty() || line == "\r") continue;
    ++records;
    json rec{{"line", line_no}};
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const Error& e) {
      ++parse_failures;
      rec["error"] = e.what();
      rec["error_kind"] = "parse";
      emit(rec);
      continue;
    }
    rec["n"] = g.order();
    rec["m"] = g.size();
    try {
      const auto cert = rc_upper_bound_driver(g);
      const std::string label(to_string(cert.witness.label));
      ++cases[label];
      rec["case"] = label;
      rec["claimed_bound"] = cert.claimed_bound ? json(*cert.claimed_bound) : json(nullptr);
      rec["colors_used"] = cert.colors_used();
      rec["lower_bound"] = cert.lower_bound;
      const bool no_bound = cert.witness.label == CaseLabel::NO_BOUND;
      // NO_BOUND carries no colouring, so there is nothing to verify
      rec["verified"] = no_bound ? json(nullptr) : json(cert.verified);
      bool failed = !no_bound && !cert.verified;
      if (with_exact && g.size() <= cfg.max_edges) {
        const auto exact = exact_rc(g, cfg);
        if (exact.known()) {
          rec["exact_rc"] = *exact.value;
          if (!no_bound && *exact.value > cert.colors_used()) failed = true;
          if (*exact.value < cert.lower_bound) failed = true;
        } else {
          rec["exact_unknown"] = {exact.low, exact.high};
        }
      }
      if (failed) failures.push_back(line_no);
    } catch (const Error& e) {
      rec["error"] = e.what();
      if (e.kind() == ErrorKind::NotConnected) {
        rec["error_kind"] = "not_connected";
      } else {
        rec["error_kind"] = "internal";
        failures.push_back(line_no);
        ++errors;
      }
    }
    emit(rec);
  }
  emit({{"summary",
         {{"records", records},
          {"cases", cases},
          {"parse_failures", parse_failures},
          {"errors", errors},
          {"failures", failures}}}});
  return failures.empty() ? kOk : kFalse;
}

int cmd_generate(int n, bool connected, bool random, int count, double p, std::uint64_t seed) {
  auto keep = [&](const Graph& g) { return !connected || is_connected(g); };
  if (!random) {
    enumerate_graphs(n, keep, [](const Graph& g) { std::cout << to_graph6(g) << '\n'; });
    return kOk;
  }
  GraphSampler sampler(seed);
  for (int produced = 0; produced < count;) {
    Graph g = sampler.gnp(n, p);
    if (!keep(g)) continue;
    std::cout << to_graph6(g) << '\n';
    ++produced;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow colourings of complement graphs"};
  app.require_subcommand(1);

  std::string input, coloring, format = "auto", method = "auto", out_path;
  SearchConfig cfg;
  double time_budget = 0;
  bool with_exact = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-edges", cfg.max_edges, "edge cap for the exhaustive search")
        ->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", time_budget, "wall-clock budget in seconds");
    sub->add_flag("--parallel", cfg.parallel, "split the search across threads");
  };

  auto* analyze = app.add_subcommand("analyze", "structure of a graph and its complement");
  analyze->add_option("input", input)->required();
  add_format(analyze);

  auto* color = app.add_subcommand("color", "certificate for an upper bound on rc");
  color->add_option("input", input)->required();
  color->add_option("--method", method, "construction to force")
      ->check(CLI::IsMember({"auto", "thm31", "prop32", "prop35", "thm41", "prop43", "prop44"}));
  color->add_option("--out", out_path, "write the colouring here");
  add_format(color);

  auto* verify = app.add_subcommand("verify", "check a colouring for rainbow connectivity");
  verify->add_option("graph", input)->required();
  verify->add_option("coloring", coloring)->required();
  add_format(verify);

  auto* exact = app.add_subcommand("exact", "exact rainbow connection number");
  exact->add_option("input", input)->required();
  add_format(exact);
  add_search(exact);

  auto* batch = app.add_subcommand("batch", "certificates for every line of a graph6 file");
  batch->add_option("input", input)->required();
  batch->add_flag("--with-exact", with_exact, "also run the exact solver when small enough");
  add_search(batch);

  int gen_n = 5, gen_count = 100;
  bool gen_connected = false, gen_random = false;
  double gen_p = 0.5;
  std::uint64_t seed = 20240601;
  auto* generate = app.add_subcommand("generate", "graph6 lines for small or random graphs");
  generate->add_option("--n", gen_n)->required()->check(CLI::Range(0, kMaxGraph6Order));
  generate->add_flag("--connected", gen_connected);
  generate->add_flag("--random", gen_random, "sample G(n,p) instead of enumerating");
  generate->add_option("--count", gen_count)->check(CLI::NonNegativeNumber);
  generate->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);
  if (time_budget > 0) cfg.time_budget = time_budget;

  try {
    if (*analyze) return cmd_analyze(input, format);
    if (*color) return cmd_color(input, format, method, out_path);
    if (*verify) return cmd_verify(input, coloring, format);
    if (*exact) return cmd_exact(input, format, cfg);
    if (*batch) return cmd_batch(input, with_exact, cfg);
    if (*generate)
      return cmd_generate(gen_n, gen_connected, gen_random, gen_count, gen_p, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kOk;
}
