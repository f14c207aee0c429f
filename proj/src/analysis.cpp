#include "rainbow/analysis.hpp"

#include <algorithm>
#include <bit>

namespace rainbow {

std::vector<Edge> bridges(const Graph& g) {
  // Iterative Tarjan low-link.
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<VertexSet> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<std::size_t> next(n, 0);
  std::vector<Edge> out;
  int timer = 0;

  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Vertex u = stack.back();
      if (next[u] < adj[u].size()) {
        Vertex w = adj[u][next[u]++];
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (Vertex p = parent[u]; p >= 0) {
        low[p] = std::min(low[p], low[u]);
        if (low[u] > disc[p]) out.push_back({std::min(p, u), std::max(p, u)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    auto ru = g.row(u), rv = g.row(v);
    for (std::size_t i = 0; i < ru.size(); ++i)
      if (ru[i] & rv[i]) return false;
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  const int n = g.order();
  const auto words = static_cast<std::size_t>(g.words_per_row());
  std::vector<std::uint64_t> pool(words);
  for (Vertex c = 0; c < n; ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) continue;
        // a third neighbour of c adjacent to neither a nor b
        auto rc = g.row(c), ra = g.row(a), rb = g.row(b);
        for (std::size_t w = 0; w < words; ++w) pool[w] = rc[w] & ~ra[w] & ~rb[w];
        pool[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
        pool[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
        if (std::any_of(pool.begin(), pool.end(), [](auto w) { return w != 0; }))
          return false;
      }
    }
  }
  return true;
}

AnalysisReport analyze(const Graph& g) {
  AnalysisReport r;
  const int n = g.order();
  r.order = n;
  r.size = g.size();
  auto comps = components(g);
  for (const auto& c : comps) r.component_sizes.push_back(static_cast<int>(c.size()));
  r.connected = comps.size() <= 1;
  r.diameter = diameter(g);
  r.triangle_free = is_triangle_free(g);
  r.claw_free = is_claw_free(g);
  r.bridges = bridges(g);
  r.min_degree = n == 0 ? 0 : g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    r.min_degree = std::min(r.min_degree, g.degree(v));
    if (g.degree(v) == n - 2) ++r.high_degree_count;
  }
  if (r.connected && n > 0) {
    auto layers = bfs_layers(g, select_root(g));
    r.root = layers.root;
    r.layer_sizes = layers.sizes();
    for (const auto& layer : layers.layers) {
      r.pendant_layer_counts.push_back(static_cast<int>(std::count_if(
          layer.begin(), layer.end(), [&](Vertex v) { return g.degree(v) == n - 2; })));
    }
  }
  return r;
}

}  // namespace rainbow
