// Misra & Gries, "A constructive proof of Vizing's theorem" (1992): colour
// edges one at a time; for an uncoloured edge (u, v) build a maximal fan at
// u, flip a two-coloured alternating path at u, then rotate a prefix of the
// fan so that the freed colour lands on its last edge.

#include <algorithm>
#include <limits>
#include <map>

#include "georeduce/combinat.hpp"
#include "georeduce/errors.hpp"

namespace georeduce::combinat {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Colorer {
 public:
  explicit Colorer(const Graph& g)
      : g_(g),
        palette_(g.max_degree() + 1),
        color_(g.edges().size(), kNone) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      index_[g.edges()[e]] = e;
    }
  }

  EdgeColoring run() {
    for (std::size_t e = 0; e < g_.edges().size(); ++e) {
      const auto [u, v] = g_.edges()[e];
      color_edge(u, v);
    }
    return {color_};
  }

 private:
  std::size_t edge(std::size_t a, std::size_t b) const {
    return index_.at(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::size_t other(std::size_t e, std::size_t a) const {
    const auto& [x, y] = g_.edges()[e];
    return x == a ? y : x;
  }
  bool is_free(std::size_t v, std::size_t c) const {
    for (std::size_t e : g_.incident(v)) {
      if (color_[e] == c) return false;
    }
    return true;
  }
  std::size_t first_free(std::size_t v) const {
    for (std::size_t c = 0; c < palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw Error(ErrorCode::kInvalidInput, "no free colour (palette too small)");
  }

  std::vector<std::size_t> maximal_fan(std::size_t u, std::size_t v) const {
    std::vector<std::size_t> fan{v};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t e : g_.incident(u)) {
        const std::size_t w = other(e, u);
        if (color_[e] == kNone) continue;
        if (std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
        if (!is_free(fan.back(), color_[e])) continue;
        fan.push_back(w);
        grew = true;
        break;
      }
    }
    return fan;
  }

  // Swap colours c and d along the maximal c/d path that starts at u.
  void invert_path(std::size_t u, std::size_t c, std::size_t d) {
    std::vector<std::size_t> path;
    std::size_t at = u;
    std::size_t want = d;
    std::size_t came_from = kNone;
    for (;;) {
      std::size_t next = kNone;
      for (std::size_t e : g_.incident(at)) {
        if (e != came_from && color_[e] == want) {
          next = e;
          break;
        }
      }
      if (next == kNone) break;
      path.push_back(next);
      came_from = next;
      at = other(next, at);
      want = (want == d) ? c : d;
    }
    for (std::size_t e : path) color_[e] = (color_[e] == c) ? d : c;
  }

  void color_edge(std::size_t u, std::size_t v) {
    std::vector<std::size_t> fan = maximal_fan(u, v);
    const std::size_t c = first_free(u);
    const std::size_t d = first_free(fan.back());
    if (c != d) invert_path(u, c, d);

    // First fan vertex w with d free such that fan[0..w] is still a fan.
    std::size_t w = 0;
    for (;; ++w) {
      if (w > 0) {
        const std::size_t ce = color_[edge(u, fan[w])];
        if (ce == kNone || !is_free(fan[w - 1], ce)) {
          throw Error(ErrorCode::kInvalidInput, "fan invariant broken");
        }
      }
      if (is_free(fan[w], d)) break;
      if (w + 1 == fan.size()) {
        throw Error(ErrorCode::kInvalidInput, "no rotatable fan prefix");
      }
    }
    for (std::size_t i = 0; i < w; ++i) {
      color_[edge(u, fan[i])] = color_[edge(u, fan[i + 1])];
    }
    color_[edge(u, fan[w])] = d;
  }

  const Graph& g_;
  std::size_t palette_;
  std::vector<std::size_t> color_;
  std::map<Edge, std::size_t> index_;
};

}  // namespace

EdgeColoring vizing_edge_color(const Graph& g) { return Colorer(g).run(); }

EdgeColoring edge_color(const Graph& g) {
  if (g.max_degree() > kMaxReductionDegree) {
    throw Error(ErrorCode::kDegreeViolation, "maximum degree exceeds 3");
  }
  return vizing_edge_color(g);
}

}  // namespace georeduce::combinat
