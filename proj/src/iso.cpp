#include "graphsq/iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphsq {

namespace {

using Coloring = std::vector<int>;

// Equitable refinement: recolor by (own color, sorted neighbor colors)
// until the number of cells stops growing. Cell order is derived from the
// signatures only, so the result commutes with relabeling.
void refine(const Graph& g, Coloring& color) {
  const std::size_t n = g.order();
  std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
  int cells = *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.clear();
      s.push_back(color[v]);
      for (Vertex u : g.neighbors(v)) s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++next;
      color[sig[i].second] = next;
    }
    if (next + 1 == cells) return;
    cells = next + 1;
  }
}

Coloring individualize(const Graph& g, const Coloring& color, Vertex v) {
  Coloring c(color.size());
  for (Vertex w = 0; w < c.size(); ++w) c[w] = 2 * color[w] + (w == v ? 0 : 1);
  // Compress to consecutive ranks.
  std::vector<int> used(c);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& x : c) x = static_cast<int>(std::lower_bound(used.begin(), used.end(), x) - used.begin());
  refine(g, c);
  return c;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    Coloring c(n_, 0);
    refine(g_, c);
    visit(c, 0);
    std::vector<Vertex> lab(n_);
    for (Vertex v = 0; v < n_; ++v) lab[v] = static_cast<Vertex>(best_.color[v]);
    return lab;
  }

 private:
  struct Leaf {
    Coloring color;
    std::vector<bool> code;
    std::vector<Vertex> path;
  };

  std::vector<bool> encode(const Coloring& color) const {
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[color[v]] = v;
    std::vector<bool> code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (Vertex j = 1; j < n_; ++j)
      for (Vertex i = 0; i < j; ++i) code.push_back(g_.adjacent(inv[i], inv[j]));
    return code;
  }

  // Automorphism carrying leaf `from` onto the current leaf coloring.
  std::vector<Vertex> automorphism(const Coloring& from, const Coloring& to) const {
    std::vector<Vertex> inv(n_), gamma(n_);
    for (Vertex v = 0; v < n_; ++v) inv[to[v]] = v;
    for (Vertex v = 0; v < n_; ++v) gamma[v] = inv[from[v]];
    return gamma;
  }

  // Level to resume at when gamma maps the stored leaf's path onto the
  // current path, or -1.
  int jump_level(const std::vector<Vertex>& gamma, const std::vector<Vertex>& stored) const {
    if (stored.size() != path_.size()) return -1;
    for (std::size_t i = 0; i < path_.size(); ++i)
      if (gamma[stored[i]] != path_[i]) return -1;
    std::size_t common = 0;
    while (common < path_.size() && stored[common] == path_[common]) ++common;
    return static_cast<int>(common);
  }

  void record(std::vector<Vertex> gamma) {
    if (generators_.size() < 256) generators_.push_back(std::move(gamma));
  }

  void leaf(const Coloring& color) {
    auto code = encode(color);
    if (!have_first_) {
      first_ = {color, code, path_};
      best_ = first_;
      have_first_ = true;
      return;
    }
    if (code == first_.code) {
      auto gamma = automorphism(first_.color, color);
      jump_ = jump_level(gamma, first_.path);
      record(std::move(gamma));
      return;
    }
    if (code == best_.code) {
      auto gamma = automorphism(best_.color, color);
      jump_ = jump_level(gamma, best_.path);
      record(std::move(gamma));
      return;
    }
    if (code > best_.code) best_ = {color, std::move(code), path_};
  }

  void visit(const Coloring& color, int level) {
    // Target cell: the first non-singleton cell in color order.
    std::vector<std::size_t> size(n_, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (!explored.empty() && in_explored_orbit(v, explored)) continue;
      path_.push_back(v);
      visit(individualize(g_, color, v), level + 1);
      path_.pop_back();
      explored.push_back(v);
      if (jump_ >= 0) {
        if (jump_ < level) return;
        jump_ = -1;
      }
    }
  }

  bool in_explored_orbit(Vertex v, const std::vector<Vertex>& explored) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    if (!any) return false;
    auto root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex w) { return uf.find(w) == root; });
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> generators_;
  Leaf first_, best_;
  bool have_first_ = false;
  int jump_ = -1;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalOrderCap)
    throw std::invalid_argument("canonical_form supports order <= " + std::to_string(kCanonicalOrderCap));
  if (g.order() == 1) return {0};
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

Graph canonical_graph(const Graph& g) {
  auto lab = canonical_labeling(g);
  return g.relabeled(lab);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), map_(h.order(), kFree), used_(g.order(), 0) {
    // Match order: repeatedly take the unplaced vertex with most placed
    // neighbors, breaking ties by degree.
    std::vector<char> placed(h.order(), 0);
    std::vector<int> placed_nbrs(h.order(), 0);
    for (std::size_t step = 0; step < h.order(); ++step) {
      Vertex best = 0;
      bool found = false;
      for (Vertex v = 0; v < h.order(); ++v) {
        if (placed[v]) continue;
        if (!found || placed_nbrs[v] > placed_nbrs[best] ||
            (placed_nbrs[v] == placed_nbrs[best] && h.degree(v) > h.degree(best))) {
          best = v;
          found = true;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex u : h.neighbors(best)) ++placed_nbrs[u];
    }
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kFree = UINT32_MAX;

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex hv = order_[depth];
    for (Vertex gv = 0; gv < g_.order(); ++gv) {
      if (used_[gv] || g_.degree(gv) < h_.degree(hv)) continue;
      bool ok = true;
      for (Vertex hu : h_.neighbors(hv)) {
        if (map_[hu] != kFree && !g_.adjacent(gv, map_[hu])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_[hv] = gv;
      used_[gv] = 1;
      if (extend(depth + 1)) return true;
      map_[hv] = kFree;
      used_[gv] = 0;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order() || h.size() > g.size()) return false;
  auto dg = degree_sequence(g);
  auto dh = degree_sequence(h);
  for (std::size_t i = 0; i < dh.size(); ++i)
    if (dh[i] > dg[i]) return false;
  return SubgraphMatcher(g, h).run();
}

}  // namespace graphsq
