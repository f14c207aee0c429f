#include "rainbow/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "rainbow/analysis.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> found{false};
  std::atomic<bool> timed_out{false};
};

// Depth-first search over canonical colourings. A partial colouring is
// abandoned as soon as two bridges share a colour or some pair cannot be
// joined even when every uncoloured edge is treated as a private colour.
class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, int k, Shared& shared)
      : g_(g), reach_(g), k_(k), shared_(shared), colors_(g.size(), -1) {
    is_bridge_.assign(colors_.size(), 0);
    for (const auto& e : bridges(g)) is_bridge_[reach_.index().id(e.u, e.v)] = 1;
  }

  // Extends the given prefix (canonical colours for edges 0..prefix.size()-1).
  bool run(const std::vector<int>& prefix) {
    int top = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (conflicts(static_cast<int>(i), prefix[i])) return false;
      colors_[i] = prefix[i];
      top = std::max(top, prefix[i]);
    }
    if (!feasible()) return false;
    return descend(prefix.size(), top);
  }

 private:
  bool feasible() {
    return !reach_.first_disconnected_pair(colors_, k_, k_).has_value();
  }

  bool conflicts(int edge, int color) const {
    if (!is_bridge_[edge]) return false;
    for (int i = 0; i < edge; ++i)
      if (is_bridge_[i] && colors_[i] == color) return true;
    return false;
  }

  bool out_of_time() {
    if (shared_.found.load(std::memory_order_relaxed)) return true;
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    if (++nodes_ % 1024 == 0 && shared_.deadline && Clock::now() > *shared_.deadline) {
      shared_.timed_out = true;
      return true;
    }
    return false;
  }

  bool descend(std::size_t i, int top) {
    if (i == colors_.size()) {
      EdgeColoring col(g_.order(), g_.edges(), colors_);
      return static_cast<bool>(verify_rainbow_connected(g_, col));
    }
    if (out_of_time()) return false;
    const int limit = std::min(top + 1, k_ - 1);
    for (int c = 0; c <= limit; ++c) {
      if (conflicts(static_cast<int>(i), c)) continue;
      colors_[i] = c;
      if (feasible() && descend(i + 1, std::max(top, c))) return true;
    }
    colors_[i] = -1;
    return false;
  }

  const Graph& g_;
  RainbowReachability reach_;
  int k_;
  Shared& shared_;
  std::vector<int> colors_;
  std::vector<char> is_bridge_;
  std::uint64_t nodes_ = 0;
};

// Canonical colour prefixes of the first `depth` edges.
std::vector<std::vector<int>> canonical_prefixes(int depth, int k) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < depth; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out) {
      int top = p.empty() ? -1 : *std::max_element(p.begin(), p.end());
      for (int c = 0; c <= std::min(top + 1, k - 1); ++c) {
        next.push_back(p);
        next.back().push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_limits(const Graph& g, const SearchConfig& cfg) {
  if (cfg.max_edges < 1) throw Error(ErrorKind::InvalidArgument, "max_edges must be >= 1");
  if (g.size() > cfg.max_edges)
    throw Error(ErrorKind::ResourceLimit,
                "graph has " + std::to_string(g.size()) + " edges, more than max_edges = " +
                    std::to_string(cfg.max_edges) + "; raise --max-edges (with a time budget)");
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph not connected");
}

Decision search(const Graph& g, int k, const SearchConfig& cfg,
                std::optional<Clock::time_point> deadline) {
  if (g.order() <= 1) return Decision::Yes;
  if (static_cast<int>(bridges(g).size()) > k) return Decision::No;
  if (k >= g.size()) return Decision::Yes;  // every edge its own colour

  Shared shared;
  shared.deadline = deadline;
  const unsigned workers = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (workers == 1) {
    CanonicalSearch s(g, k, shared);
    if (s.run({})) return Decision::Yes;
  } else {
    int depth = 0;
    while (depth < g.size() && canonical_prefixes(depth, k).size() < 8 * workers) ++depth;
    const auto prefixes = canonical_prefixes(depth, k);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < prefixes.size();) {
          if (shared.found || shared.timed_out) return;
          CanonicalSearch s(g, k, shared);
          if (s.run(prefixes[i])) shared.found = true;
        }
      });
    for (auto& t : pool) t.join();
    if (shared.found) return Decision::Yes;
  }
  return shared.timed_out ? Decision::Unknown : Decision::No;
}

std::optional<Clock::time_point> deadline_of(const SearchConfig& cfg) {
  if (!cfg.time_budget) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*cfg.time_budget));
}

}  // namespace

Decision is_rainbow_connectable(const Graph& g, int k, const SearchConfig& cfg) {
  check_limits(g, cfg);
  if (k < 1 && g.order() > 1) return Decision::No;
  return search(g, k, cfg, deadline_of(cfg));
}

ExactResult exact_rc(const Graph& g, const SearchConfig& cfg) {
  check_limits(g, cfg);
  ExactResult result;
  if (g.order() <= 1) {
    result.value = 0;
    return result;
  }
  result.lower_bound = lower_bounds(g);
  result.high = g.size();
  const auto deadline = deadline_of(cfg);
  for (int k = std::max(1, result.lower_bound);; ++k) {
    result.low = k;
    switch (search(g, k, cfg, deadline)) {
      case Decision::Yes:
        result.value = k;
        result.high = k;
        return result;
      case Decision::Unknown:
        return result;
      case Decision::No:
        break;
    }
  }
}

// ---------------------------------------------------------------------------

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.push_back({u, v});
  return Graph(n, edges);
}

void enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter,
                      const std::function<void(const Graph&)>& sink) {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw Error(ErrorKind::InvalidArgument,
                "exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                    "; use GraphSampler for larger orders");
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (!filter || filter(g)) sink(g);
  }
}

Graph GraphSampler::gnp(int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng_)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph GraphSampler::tree(int n) {
  if (n < 2) return Graph(std::max(n, 0));
  std::vector<int> code(n - 2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int& c : code) c = pick(rng_);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    --degree[leaf];
    --degree[c];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.push_back({last[0], last[1]});
  return Graph(n, edges);
}

}  // namespace rainbow
