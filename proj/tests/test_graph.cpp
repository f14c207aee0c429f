#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_io.hpp"
#include "test_support.hpp"

using namespace rainbow;
using namespace testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Internal;
}

std::string parse_message(std::string_view line) {
  try {
    from_graph6(line);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("construction rejects loops and bad endpoints, collapses duplicates") {
  CHECK(kind_of([] { Graph(3, {{1, 1}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::InvalidArgument);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("complement") {
  CHECK(complement(complete(4)) == Graph(4));
  CHECK(complement(complement(petersen())) == petersen());
  Graph c5c = complement(cycle(5));
  CHECK(c5c.size() == 5);
  CHECK(canonical_mask(c5c) == canonical_mask(cycle(5)));

  GraphSampler sampler(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = sampler.gnp(9 + i % 70, 0.3);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() == g.order() * (g.order() - 1) / 2);
  }
}

TEST_CASE("bfs layers") {
  auto p5 = bfs_layers(path(5), 0);
  CHECK(p5.sizes() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(p5.depth == 4);
  auto k4 = bfs_layers(complete(4), 2);
  CHECK(k4.sizes() == std::vector<int>{1, 3});
  CHECK(k4.depth == 1);
  for (int x = 0; x < 6; ++x) CHECK(bfs_layers(cycle(6), x).sizes() == std::vector<int>{1, 2, 2, 1});
  CHECK(kind_of([] { bfs_layers(Graph(3, {{0, 1}}), 0); }) == ErrorKind::NotConnected);

  auto c7 = bfs_layers(cycle(7), 0);
  CHECK(c7.even_class == VertexSet{0, 2, 5});
  CHECK(c7.odd_class == VertexSet{1, 3, 4, 6});
}

TEST_CASE("layer invariants on random connected graphs") {
  GraphSampler sampler(11);
  int tested = 0;
  while (tested < 200) {
    Graph g = sampler.gnp(12, 0.25);
    if (!is_connected(g)) continue;
    ++tested;
    int max_depth = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      auto L = bfs_layers(g, x);
      int total = 0;
      for (const auto& layer : L.layers) total += static_cast<int>(layer.size());
      CHECK(total == g.order());
      for (int i = 1; i <= L.depth; ++i)
        for (Vertex v : L.layers[i]) {
          bool back = false;
          for (Vertex w : L.layers[i - 1]) back = back || g.adjacent(v, w);
          CHECK(back);
        }
      max_depth = std::max(max_depth, L.depth);
    }
    CHECK(diameter(g) == max_depth);
    Vertex root = select_root(g);
    CHECK(eccentricity(g, root) == max_depth);
    for (Vertex x = 0; x < root; ++x) CHECK(eccentricity(g, x) < max_depth);
  }
}

TEST_CASE("diameter of disconnected graphs is reported as missing") {
  CHECK_FALSE(diameter(Graph(3, {{0, 1}})).has_value());
  CHECK(diameter(Graph(1)) == 0);
}

TEST_CASE("analysis") {
  auto p4 = analyze(path(4));
  CHECK(p4.diameter == 3);
  CHECK(p4.bridges.size() == 3);
  CHECK(p4.triangle_free);

  auto claw = analyze(star(3));
  CHECK_FALSE(claw.claw_free);
  CHECK(claw.bridges.size() == 3);

  auto pet = analyze(petersen());
  CHECK(pet.diameter == 2);
  CHECK(pet.triangle_free);
  CHECK(pet.bridges.empty());
  CHECK(pet.claw_free == false);

  // two triangles joined by an edge: exactly one bridge
  Graph dumbbell(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(bridges(dumbbell) == std::vector<Edge>{{2, 3}});
  CHECK_FALSE(is_triangle_free(dumbbell));
}

TEST_CASE("triangle-free matches the common-neighbour definition") {
  GraphSampler sampler(3);
  for (int i = 0; i < 300; ++i) {
    Graph g = sampler.gnp(8, 0.2 + 0.001 * i);
    bool naive = true;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        for (Vertex w = 0; w < g.order(); ++w)
          if (g.adjacent(u, v) && g.adjacent(u, w) && g.adjacent(v, w)) naive = false;
    CHECK(is_triangle_free(g) == naive);
  }
}

TEST_CASE("bridges agree with edge deletion") {
  GraphSampler sampler(5);
  for (int i = 0; i < 200; ++i) {
    Graph g = sampler.gnp(9, 0.25);
    auto base = components(g).size();
    std::vector<Edge> naive;
    for (const auto& e : g.edges())
      if (components(g.without_edge(e.u, e.v)).size() > base) naive.push_back(e);
    CHECK(bridges(g) == naive);
  }
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(petersen()) == "IheA@GUAo");
  CHECK(from_graph6("Bg\n") == path(3));
  CHECK(from_graph6("?") == Graph(0));
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(1);
  GraphSampler sampler(2);
  for (int n = 0; n <= kMaxGraph6Order; ++n) {
    Graph g = sampler.gnp(n, 0.4);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK(kind_of([] { to_graph6(Graph(63)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("graph6 parse errors are distinct") {
  auto bad_byte = parse_message("B\x7f");
  auto long_form = parse_message("~??~");
  auto truncated = parse_message("D");
  CHECK(bad_byte.find("byte 1") != std::string::npos);
  CHECK(long_form.find("long-form") != std::string::npos);
  CHECK(truncated.find("truncated") != std::string::npos);
  CHECK(bad_byte != long_form);
  CHECK(long_form != truncated);
  CHECK(parse_message("BgA").find("trailing") != std::string::npos);
  CHECK(parse_message("").size() > 0);
}

TEST_CASE("edge list") {
  std::istringstream in("# P4\n4 3\n0 1\n\n1 2\n# middle\n2 3\n");
  CHECK(read_edge_list(in) == path(4));

  std::ostringstream out;
  write_edge_list(out, petersen());
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == petersen());

  for (const char* bad : {"3 2\n0 1\n", "3 1\n0 3\n", "3 2\n0 1\n1 0\n", "x\n", "3 1\n1 1\n",
                          "3 1\n0 1 2\n"}) {
    std::istringstream s(bad);
    CHECK(kind_of([&] { read_edge_list(s); }) == ErrorKind::Parse);
  }
  std::istringstream dup("3 2\n0 1\n1 0\n");
  try {
    read_edge_list(dup);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("induced subgraphs and set helpers") {
  Graph g = cycle(6);
  Graph sub = induced_subgraph(g, std::vector<Vertex>{0, 1, 2, 4});
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(set_union({0, 3}, {1, 3}) == VertexSet{0, 1, 3});
  CHECK(set_difference({0, 1, 3}, {1}) == VertexSet{0, 3});
  CHECK(contains({0, 2, 5}, 5));
  CHECK(components(Graph(4, {{2, 3}})) == std::vector<VertexSet>{{0}, {1}, {2, 3}});
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_tree(cycle(5)));
  CHECK(is_complete(complete(5)));
}
