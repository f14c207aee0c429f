#include <algorithm>
#include <numeric>

#include "completion_search.hpp"
#include "multipartite_scheme.hpp"
#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

std::vector<int> MultipartiteShape::sizes() const {
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(static_cast<int>(p.size()));
  return out;
}

int MultipartiteShape::small_side() const {
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) s += static_cast<int>(parts[i].size());
  return s;
}

int MultipartiteShape::large_side() const {
  return parts.empty() ? 0 : static_cast<int>(parts.back().size());
}

namespace {

void sort_parts(std::vector<VertexSet>& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

// r^s saturated at `cap`; used to compare against t without overflow.
long long saturating_power(long long r, int s, long long cap) {
  long long acc = 1;
  for (int i = 0; i < s; ++i) {
    if (acc > cap / r) return cap;
    acc *= r;
  }
  return acc;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_unit(const std::vector<int>& vec) {
  int ones = 0;
  for (int x : vec) {
    if (x == 1) ++ones;
    else if (x != 0) return false;
  }
  return ones == 1;
}

// t distinct colour vectors of length s over {0..r-1}: the s unit vectors
// first (they separate every pair of coordinates), then the remaining vectors
// in lexicographic order. Requires s <= t <= r^s and r >= 2.
std::vector<std::vector<int>> separating_vectors(int s, int t, int r) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < s; ++i) {
    std::vector<int> e(s, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  std::vector<int> digits(s, 0);
  while (static_cast<int>(out.size()) < t) {
    if (!is_unit(digits)) out.push_back(digits);
    int pos = s - 1;
    while (pos >= 0 && ++digits[pos] == r) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

void apply_vectors(ColoringBuilder& builder, const VertexSet& side,
                   const VertexSet& other, const std::vector<std::vector<int>>& vectors) {
  for (std::size_t j = 0; j < other.size(); ++j)
    for (std::size_t i = 0; i < side.size(); ++i)
      builder.set(side[i], other[j], vectors[j][i]);
}

// |small| = s >= 2, |large| = t >= s. Returns the colour count.
int bipartite_scheme(ColoringBuilder& builder, const VertexSet& small,
                     const VertexSet& large) {
  const int s = static_cast<int>(small.size());
  const int t = static_cast<int>(large.size());
  const int r = ceil_root(t, s);
  if (r <= 4) {
    apply_vectors(builder, small, large, separating_vectors(s, t, r));
    return r;
  }
  // t > 4^s: unit vectors, one hub (2,3,2,...,2), and every remaining vertex
  // on (0,1,0,...,0). Two remaining vertices meet through the hub on the
  // path x - small[0] - hub - small[1] - y with colours 0,2,3,1.
  auto vectors = separating_vectors(s, s, 2);
  std::vector<int> hub(s, 2);
  hub[1] = 3;
  vectors.push_back(hub);
  std::vector<int> bulk(s, 0);
  bulk[1] = 1;
  while (static_cast<int>(vectors.size()) < t) vectors.push_back(bulk);
  apply_vectors(builder, small, large, vectors);
  return 4;
}

}  // namespace

namespace detail {

int apply_multipartite_scheme(ColoringBuilder& builder, std::vector<VertexSet> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const VertexSet& p) { return p.empty(); }),
              parts.end());
  sort_parts(parts);
  const int k = static_cast<int>(parts.size());
  if (k <= 1) return 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) builder.set_between(parts[i], parts[j], 0);

  const VertexSet& large = parts.back();
  const int t = static_cast<int>(large.size());
  if (t == 1) return 1;
  VertexSet small;
  for (int i = 0; i + 1 < k; ++i) small.insert(small.end(), parts[i].begin(), parts[i].end());
  const int s = static_cast<int>(small.size());

  if (k == 2) {
    if (s == 1) {  // star: every edge is a bridge
      for (int j = 0; j < t; ++j) builder.set(small[0], large[j], j);
      return t;
    }
    return bipartite_scheme(builder, small, large);
  }

  if (s > t) {
    // Two colours: colour-1 edges must give the vertices of each part
    // pairwise distinct colour-1 neighbourhoods. large[j] pairs with the
    // j-th vertex of `small`; the remaining vertices of each small part are
    // told apart by one colour-1 edge each to a paired vertex outside it.
    for (int j = 0; j < t; ++j) builder.set(large[j], small[j], 1);
    for (int p = 0; p + 1 < k; ++p) {
      VertexSet unpaired, others;
      for (Vertex v : parts[p]) {
        auto pos = std::find(small.begin(), small.end(), v) - small.begin();
        if (pos >= t) unpaired.push_back(v);
      }
      for (int j = 0; j < t; ++j)
        if (!contains(parts[p], small[j])) others.push_back(small[j]);
      for (std::size_t i = 1; i < unpaired.size(); ++i)
        builder.set(unpaired[i], others[i - 1], 1);
    }
    return 2;
  }

  const int r = ceil_root(t, s);
  if (r <= 3) {
    apply_vectors(builder, small, large, separating_vectors(s, t, r));
    return r;
  }
  // t > 3^s: unit vectors plus a bulk vector equal to the unit vector of b,
  // where a = parts[0][0] and b = parts[1][0] are adjacent; two bulk
  // vertices meet on x - a - b - y with colours 0,2,1.
  const Vertex a = parts[0][0];
  const Vertex b = parts[1][0];
  const auto b_pos = std::find(small.begin(), small.end(), b) - small.begin();
  auto vectors = separating_vectors(s, s, 2);
  while (static_cast<int>(vectors.size()) < t) vectors.push_back(vectors[b_pos]);
  apply_vectors(builder, small, large, vectors);
  builder.set(a, b, 2);
  return 3;
}

}  // namespace detail

std::optional<MultipartiteShape> recognize_complete_multipartite(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  Graph h = complement(g);
  MultipartiteShape shape;
  for (auto& comp : components(h)) {
    long size = static_cast<long>(comp.size());
    long inner = 0;
    for (Vertex v : comp) inner += h.degree(v);
    if (inner != size * (size - 1)) return std::nullopt;
    shape.parts.push_back(std::move(comp));
  }
  sort_parts(shape.parts);
  return shape;
}

int ceil_root(long long t, int s) {
  if (t <= 1) return 1;
  if (s == 1) return static_cast<int>(t);
  long long r = 1;
  while (saturating_power(r, s, t) < t) ++r;
  return static_cast<int>(r);
}

int rc_complete_bipartite(int s, int t) {
  if (s < 2 || s > t)
    throw Error(ErrorKind::InvalidArgument, "complete bipartite formula needs 2 <= s <= t");
  return std::min(ceil_root(t, s), 4);
}

int rc_complete_multipartite(std::span<const int> sizes_in) {
  std::vector<int> sizes(sizes_in.begin(), sizes_in.end());
  if (sizes.size() < 2 || std::any_of(sizes.begin(), sizes.end(), [](int x) { return x < 1; }))
    throw Error(ErrorKind::InvalidArgument, "need at least two non-empty parts");
  std::sort(sizes.begin(), sizes.end());
  const int t = sizes.back();
  const int s = std::accumulate(sizes.begin(), sizes.end() - 1, 0);
  if (t == 1) return 1;
  if (sizes.size() == 2) return s == 1 ? t : rc_complete_bipartite(s, t);
  if (s > t) return 2;
  return std::min(ceil_root(t, s), 3);
}

std::optional<int> rc_closed_form(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph not connected");
  if (g.order() <= 1) return 0;
  if (is_complete(g)) return 1;
  if (is_tree(g)) return g.size();
  if (is_cycle(g)) return (g.order() + 1) / 2;
  if (auto shape = recognize_complete_multipartite(g); shape && shape->part_count() >= 2)
    return rc_complete_multipartite(shape->sizes());
  return std::nullopt;
}

Graph complete_multipartite(std::span<const int> sizes) {
  std::vector<int> start{0};
  for (int s : sizes) start.push_back(start.back() + s);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j)
      for (int u = start[i]; u < start[i + 1]; ++u)
        for (int v = start[j]; v < start[j + 1]; ++v) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
  return Graph(start.back(), edges);
}

EdgeColoring color_complete_bipartite(int s, int t) {
  if (s < 2 || s > t)
    throw Error(ErrorKind::InvalidArgument, "complete bipartite colouring needs 2 <= s <= t");
  const int sizes[] = {s, t};
  Graph g = complete_multipartite(sizes);
  auto shape = recognize_complete_multipartite(g);
  return color_complete_multipartite(*shape, g);
}

EdgeColoring color_complete_multipartite(const MultipartiteShape& shape, const Graph& g) {
  auto actual = recognize_complete_multipartite(g);
  auto expected = shape;
  sort_parts(expected.parts);
  if (!actual || actual->parts != expected.parts || shape.part_count() < 2)
    throw Error(ErrorKind::Precondition,
                "graph is not the complete multipartite graph of the given shape");
  ColoringBuilder builder(g);
  const int r = detail::apply_multipartite_scheme(builder, expected.parts);
  auto col = builder.build();
  if (verify_rainbow_connected(g, col)) return col;
  std::vector<int> free(g.size(), -1);
  if (auto found = detail::complete_coloring(g, free, r, false)) return *found;
  throw Error(ErrorKind::Internal, "multipartite search exhausted below the closed form");
}

std::optional<EdgeColoring> color_closed_form(const Graph& g) {
  auto value = rc_closed_form(g);
  if (!value) return std::nullopt;
  if (g.order() <= 1 || is_complete(g)) return uniform_coloring(g);
  if (is_tree(g)) return distinct_coloring(g);
  if (is_cycle(g)) {
    ColoringBuilder builder(g);
    Vertex prev = 0, cur = g.neighbors(0)[0];
    builder.set(prev, cur, 0);
    for (int i = 1; i < g.order(); ++i) {
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      builder.set(cur, next, i % *value);
      prev = cur;
      cur = next;
    }
    auto col = builder.build();
    if (verify_rainbow_connected(g, col)) return col;
    std::vector<int> free(g.size(), -1);
    if (auto found = detail::complete_coloring(g, free, *value, false)) return found;
    throw Error(ErrorKind::Internal, "cycle colouring failed");
  }
  return color_complete_multipartite(*recognize_complete_multipartite(g), g);
}

}  // namespace rainbow
