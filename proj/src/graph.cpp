#include "graphsq/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphsq {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  Graph g;
  g.neighbors_.assign(n, {});
  g.matrix_.assign(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") has endpoint outside [0," +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (g.matrix_[u * n + v]) continue;
    g.matrix_[u * n + v] = g.matrix_[v * n + u] = 1;
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> e;
  e.reserve(edge_count_);
  for (auto [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
  return from_edges(order(), e);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_, kUnreachable) {
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    auto* row = &dist_[static_cast<std::size_t>(s) * n_];
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
}

DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

Graph power(const Graph& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("graph power requires k >= 1");
  if (k == 1) return g;
  DistanceMatrix d(g);
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (d.within(u, v, k)) e.emplace_back(u, v);
  return Graph::from_edges(g.order(), e);
}

Hops diameter(const Graph& g) {
  DistanceMatrix d(g);
  unsigned best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto h = d.at(u, v);
      if (!h) return std::nullopt;
      best = std::max(best, *h);
    }
  }
  return best;
}

std::optional<unsigned> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge (u,w) closes a cycle of length
  // at most dist(u)+dist(w)+1, and the minimum over all roots is exact.
  const auto n = g.order();
  std::optional<unsigned> best;
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::size_t head = 0, tail = 0;
    dist[s] = 0;
    parent[s] = -1;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          queue[tail++] = w;
        } else if (parent[u] != static_cast<int>(w)) {
          auto len = static_cast<unsigned>(dist[u] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

Vertex coalesced_label(std::size_t g1_order, Vertex v1, Vertex v2, Vertex x) {
  if (x == v2) return v1;
  return static_cast<Vertex>(g1_order + (x < v2 ? x : x - 1));
}

Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 >= g1.order() || v2 >= g2.order())
    throw std::invalid_argument("coalesce: vertex index out of range");
  std::vector<Edge> e = g1.edges();
  for (auto [a, b] : g2.edges())
    e.emplace_back(coalesced_label(g1.order(), v1, v2, a),
                   coalesced_label(g1.order(), v1, v2, b));
  return Graph::from_edges(g1.order() + g2.order() - 1, e);
}

std::pair<Graph, Graph> relocate_branch(const Graph& h1, Vertex v_old, Vertex v_new,
                                        const Graph& h2, Vertex w) {
  if (v_old == v_new) throw std::invalid_argument("relocate_branch: v_old == v_new");
  if (v_old >= h1.order() || v_new >= h1.order() || w >= h2.order())
    throw std::invalid_argument("relocate_branch: vertex index out of range");
  return {coalesce(h1, v_old, h2, w), coalesce(h1, v_new, h2, w)};
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  for (Vertex v = 0; v < g.order(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  s.average = Rational(2 * g.size(), g.order());
  return s;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> keep;
  for (auto [u, v] : g.edges()) {
    bool drop = std::any_of(removed.begin(), removed.end(), [&](const Edge& r) {
      return (r.first == u && r.second == v) || (r.first == v && r.second == u);
    });
    if (!drop) keep.emplace_back(u, v);
  }
  return Graph::from_edges(g.order(), keep);
}

Graph with_edges(const Graph& g, std::span<const Edge> added) {
  auto e = g.edges();
  e.insert(e.end(), added.begin(), added.end());
  return Graph::from_edges(g.order(), e);
}

Graph with_vertex(const Graph& g, std::span<const Vertex> attach) {
  auto e = g.edges();
  auto n = static_cast<Vertex>(g.order());
  for (Vertex a : attach) e.emplace_back(a, n);
  return Graph::from_edges(g.order() + 1, e);
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735ULL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: order exceeds format limit");
  }
}

std::size_t sextet(char c) {
  auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) throw Graph6Error("graph6: byte out of range 63..126");
  return b - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = g.order();
  put_size(out, n);
  unsigned acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw Graph6Error("graph6: empty input");
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw Graph6Error("graph6: truncated size header");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet(text[pos]);
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated size header");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text[pos]);
  }
  if (n == 0) throw Graph6Error("graph6: graphs with zero vertices are not supported");
  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw Graph6Error("graph6: truncated adjacency data");
  if (text.size() - pos > nbytes) throw Graph6Error("graph6: trailing bytes after adjacency data");
  std::vector<Edge> e;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      auto byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1U) e.emplace_back(i, j);
    }
  }
  // Validate padding bytes that carry no adjacency bits as well.
  for (std::size_t b = pos; b < text.size(); ++b) sextet(text[b]);
  return Graph::from_edges(n, e);
}

}  // namespace graphsq
