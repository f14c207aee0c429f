#include "rainbow/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorKind::InvalidArgument,
                  "edge endpoint out of range: " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    if (e.u == e.v)
      throw Error(ErrorKind::InvalidArgument,
                  "self loop at vertex " + std::to_string(e.u));
    if (!adjacent(e.u, e.v)) set_bit(e.u, e.v, true);
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.push_back({std::min(a, b), std::max(a, b)});
  *this = Graph(n, list);
}

void Graph::set_bit(Vertex u, Vertex v, bool on) {
  auto flip = [&](Vertex a, Vertex b) {
    auto& w = bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (b & 63);
    if (on) w |= mask; else w &= ~mask;
  };
  if (adjacent(u, v) == on) return;
  flip(u, v);
  flip(v, u);
  m_ += on ? 1 : -1;
}

int Graph::degree(Vertex v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (auto w = r[i]; w; w &= w - 1)
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorKind::InvalidArgument, "invalid edge");
  Graph g = *this;
  g.set_bit(u, v, true);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorKind::InvalidArgument, "invalid edge");
  Graph g = *this;
  g.set_bit(u, v, false);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.n_);
  const int n = g.n_;
  for (Vertex u = 0; u < n; ++u) {
    auto src = g.row(u);
    auto* dst = h.bits_.data() + static_cast<std::size_t>(u) * h.words_;
    for (std::size_t i = 0; i < h.words_; ++i) dst[i] = ~src[i];
    // clear padding bits and the diagonal
    if (n % 64) dst[h.words_ - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    dst[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }
  h.m_ = n * (n - 1) / 2 - g.m_;
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph(static_cast<int>(vertices.size()), edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    auto dist = bfs_distances(g, s);
    VertexSet comp;
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[v] >= 0) {
        comp.push_back(v);
        seen[v] = true;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

int eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) throw Error(ErrorKind::NotConnected, "graph not connected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int diam = 0;
  for (Vertex v = 0; v < g.order(); ++v) diam = std::max(diam, eccentricity(g, v));
  return diam;
}

Vertex select_root(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph not connected");
  Vertex best = 0;
  int best_ecc = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    int e = eccentricity(g, v);
    if (e > best_ecc) {
      best_ecc = e;
      best = v;
    }
  }
  return best;
}

std::vector<int> LayerDecomposition::sizes() const {
  std::vector<int> out;
  for (const auto& layer : layers) out.push_back(static_cast<int>(layer.size()));
  return out;
}

LayerDecomposition bfs_layers(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order())
    throw Error(ErrorKind::InvalidArgument, "root out of range");
  auto dist = bfs_distances(g, root);
  LayerDecomposition out;
  out.root = root;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] < 0) throw Error(ErrorKind::NotConnected, "graph not connected");
    out.depth = std::max(out.depth, dist[v]);
  }
  out.layers.resize(out.depth + 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    out.layers[dist[v]].push_back(v);
    (dist[v] % 2 == 0 ? out.even_class : out.odd_class).push_back(v);
  }
  out.even_parts = (out.depth + 2) / 2;
  out.odd_parts = (out.depth + 1) / 2;
  return out;
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace rainbow
