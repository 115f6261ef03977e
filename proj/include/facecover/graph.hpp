#ifndef FACECOVER_GRAPH_HPP
#define FACECOVER_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "facecover/embedding.hpp"

namespace facecover {

/// Abstract simple graph with roots (no embedding).
struct RootedGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbour lists
  RootSet roots;

  static RootedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    RootedGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedInput("edge endpoint out of range");
      if (u == v) continue;
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
  }
  static RootedGraph of(const RotationEmbedding& e) {
    RootedGraph g;
    g.n = e.num_vertices();
    g.adj = e.adjacency();
    g.roots = e.roots();
    return g;
  }
  bool adjacent(int u, int v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
};

/// Strong product: (a,b) ~ (a',b') when each coordinate is equal or adjacent
/// and the pairs differ. Vertex (a,b) gets id a * h.n + b.
inline RootedGraph strong_product(const RootedGraph& g, const RootedGraph& h) {
  std::vector<std::pair<int, int>> edges;
  auto close = [](const RootedGraph& x, int a, int b) { return a == b || x.adjacent(a, b); };
  int n = g.n * h.n;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (close(g, p / h.n, q / h.n) && close(h, p % h.n, q % h.n)) edges.emplace_back(p, q);
  return RootedGraph::from_edges(n, edges);
}

/// Connected components restricted to vertices with alive[v] != 0.
inline std::vector<int> components(const std::vector<std::vector<int>>& adj, const std::vector<char>& alive,
                                   int* count = nullptr) {
  int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (alive[w] && comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

/// True when the alive vertices induce a connected graph (vacuous if none).
inline bool induced_connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& alive) {
  int c = 0;
  components(adj, alive, &c);
  return c <= 1;
}

/// Vertex connectivity is at least k (k <= 4), by deleting every set of
/// k-1 vertices and testing connectivity. Graphs on at most k vertices must
/// be complete.
inline bool is_k_connected(const std::vector<std::vector<int>>& adj, int k) {
  int n = static_cast<int>(adj.size());
  if (n <= k) {
    for (int v = 0; v < n; ++v)
      if (static_cast<int>(adj[v].size()) != n - 1) return false;
    return n >= 1 && (n > 1 || k <= 1);
  }
  std::vector<char> alive(n, 1);
  std::vector<int> removed;
  auto rec = [&](auto&& self, int start, int left) -> bool {
    if (left == 0) return induced_connected(adj, alive);
    for (int v = start; v < n; ++v) {
      alive[v] = 0;
      bool ok = self(self, v + 1, left - 1);
      alive[v] = 1;
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, k - 1);
}

/// Up to `want` internally vertex-disjoint s-t paths via unit vertex
/// capacities (s and t must be non-adjacent or the direct edge is one path).
inline std::vector<std::vector<int>> disjoint_paths(const std::vector<std::vector<int>>& adj, int s, int t, int want) {
  int n = static_cast<int>(adj.size());
  // Split v into v_in = 2v, v_out = 2v+1.
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n);
  auto add = [&](int a, int b, int c) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, c});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? want : 1);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) add(2 * v + 1, 2 * w, 1);
  int flow = 0;
  while (flow < want) {
    std::vector<int> via(2 * n, -1);
    std::queue<int> q;
    q.push(2 * s + 1);
    via[2 * s + 1] = -2;
    while (!q.empty() && via[2 * t] == -1) {
      int x = q.front();
      q.pop();
      for (int a : out[x])
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
    }
    if (via[2 * t] == -1) break;
    for (int x = 2 * t; x != 2 * s + 1;) {
      int a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  std::vector<std::vector<int>> paths;
  for (int k = 0; k < flow; ++k) {
    std::vector<int> p{s};
    int x = 2 * s + 1;
    while (x != 2 * t) {
      int next = -1;
      for (int a : out[x])
        if ((a & 1) == 0 && arcs[a].cap == 0 && arcs[a].to != x - 1 && (arcs[a].to & 1) == 0) {
          next = a;
          break;
        }
      if (next < 0) break;
      arcs[next].cap = 1;  // consume
      int w = arcs[next].to / 2;
      p.push_back(w);
      x = 2 * w + 1;
      if (w == t) break;
    }
    paths.push_back(p);
  }
  return paths;
}

}  // namespace facecover

#endif  // FACECOVER_GRAPH_HPP
