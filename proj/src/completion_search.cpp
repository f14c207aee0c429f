#include "completion_search.hpp"

#include <algorithm>
#include <vector>

#include "rainbow/analysis.hpp"

namespace rainbow::detail {

namespace {

class Completion {
 public:
  Completion(const Graph& g, std::span<const int> fixed, int fresh, bool reuse_fixed,
             CompletionLimits limits)
      : reach_(g), colors_(fixed.begin(), fixed.end()), limits_(limits) {
    for (int c : colors_) fixed_palette_ = std::max(fixed_palette_, c + 1);
    palette_ = fixed_palette_ + fresh;
    fresh_ = fresh;
    reuse_fixed_ = reuse_fixed;
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (colors_[i] < 0) free_.push_back(static_cast<int>(i));
    is_bridge_.assign(colors_.size(), 0);
    for (const auto& e : bridges(g)) is_bridge_[reach_.index().id(e.u, e.v)] = 1;
  }

  bool run() { return feasible() && descend(0, 0); }

  std::vector<int> colors() const { return colors_; }

 private:
  bool feasible() {
    return !reach_.first_disconnected_pair(colors_, palette_, palette_).has_value();
  }

  bool bridge_conflict(int edge, int color) const {
    if (!is_bridge_[edge]) return false;
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (static_cast<int>(i) != edge && is_bridge_[i] && colors_[i] == color) return true;
    return false;
  }

  bool descend(std::size_t depth, int fresh_used) {
    if (++nodes_ > limits_.max_nodes) return false;
    if (depth == free_.size()) return true;  // feasible() with no wildcards left
    const int edge = free_[depth];
    std::vector<int> options;
    if (reuse_fixed_)
      for (int c = 0; c < fixed_palette_; ++c) options.push_back(c);
    for (int f = 0; f < std::min(fresh_used + 1, fresh_); ++f)
      options.push_back(fixed_palette_ + f);
    for (int c : options) {
      if (bridge_conflict(edge, c)) continue;
      colors_[edge] = c;
      const int used = c >= fixed_palette_
                           ? std::max(fresh_used, c - fixed_palette_ + 1)
                           : fresh_used;
      if (feasible() && descend(depth + 1, used)) return true;
      if (nodes_ > limits_.max_nodes) break;
    }
    colors_[edge] = -1;
    return false;
  }

  RainbowReachability reach_;
  std::vector<int> colors_;
  std::vector<int> free_;
  std::vector<char> is_bridge_;
  CompletionLimits limits_;
  int fixed_palette_ = 0;
  int palette_ = 0;
  int fresh_ = 0;
  bool reuse_fixed_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<EdgeColoring> complete_coloring(const Graph& g, std::span<const int> fixed,
                                              int fresh, bool reuse_fixed,
                                              CompletionLimits limits) {
  Completion search(g, fixed, fresh, reuse_fixed, limits);
  if (!search.run()) return std::nullopt;
  return EdgeColoring(g.order(), g.edges(), search.colors());
}

}  // namespace rainbow::detail
