#ifndef FACECOVER_EMBEDDING_HPP
#define FACECOVER_EMBEDDING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "facecover/error.hpp"

namespace facecover {

// Darts and flags are plain integers. Edge k owns dart 2k ("k+", leaving
// edge.u) and dart 2k+1 ("k-", leaving edge.v). Each dart has two flags
// 2d (side 0) and 2d+1 (side 1); side 1 faces the next dart of the rotation.
inline constexpr int dart_of_edge(int edge, bool plus) { return 2 * edge + (plus ? 0 : 1); }
inline constexpr int edge_of_dart(int dart) { return dart / 2; }
inline constexpr int opposite(int dart) { return dart ^ 1; }
inline constexpr int flag_of(int dart, int side) { return 2 * dart + side; }
inline constexpr int dart_of_flag(int flag) { return flag / 2; }

struct Edge {
  int u = 0;
  int v = 0;
  int sig = 1;  // +1 or -1
};

/// Distinguished vertex subset. Kept sorted and duplicate free.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }
  static RootSet all(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return RootSet(std::move(v));
  }

  bool contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<int>& vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  std::vector<char> mask(int n) const {
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (int r : vertices_) m[r] = 1;
    return m;
  }

  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::vector<int> vertices_;
};

/// A multigraph cellularly embedded in a closed surface, given as a rotation
/// system with edge signatures. Loops and parallel edges are allowed.
class RotationEmbedding {
 public:
  RotationEmbedding() = default;
  RotationEmbedding(int num_vertices, std::vector<Edge> edges, std::vector<std::vector<int>> rotation)
      : n_(num_vertices), edges_(std::move(edges)), rot_(std::move(rotation)) {
    validate();
    reindex();
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_flags() const { return 4 * num_edges(); }

  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int signature(int e) const { return edges_[e].sig; }
  int tail(int d) const { return (d & 1) ? edges_[d / 2].v : edges_[d / 2].u; }
  int head(int d) const { return tail(opposite(d)); }
  bool is_loop(int e) const { return edges_[e].u == edges_[e].v; }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  /// Position of dart d in the rotation of its tail.
  int position(int d) const { return pos_[d]; }
  int next_dart(int d) const {
    const auto& r = rot_[tail(d)];
    return r[(pos_[d] + 1) % r.size()];
  }
  int prev_dart(int d) const {
    const auto& r = rot_[tail(d)];
    return r[(pos_[d] + r.size() - 1) % r.size()];
  }

  const RootSet& roots() const { return roots_; }
  void set_roots(RootSet roots) {
    for (int r : roots)
      if (r < 0 || r >= n_) throw MalformedInput("root " + std::to_string(r) + " is not a vertex");
    roots_ = std::move(roots);
  }

  /// Neighbours of v without multiplicity, loops excluded.
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int d : rot_[v]) {
      int w = head(d);
      if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Simple adjacency lists (loops and parallel edges collapsed).
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj[v] = neighbors(v);
    return adj;
  }

  bool is_simple() const {
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
      if (e.u == e.v) return false;
      seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : rot_[v]) {
        int w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  /// Reverse the local orientation at v. Signatures of non-loop edges at v
  /// flip; the embedded surface is unchanged.
  void flip_vertex(int v) {
    std::reverse(rot_[v].begin(), rot_[v].end());
    for (int d : rot_[v]) {
      int e = edge_of_dart(d);
      if (!is_loop(e)) edges_[e].sig = -edges_[e].sig;
    }
    reindex();
  }

  /// Flip local orientations along a BFS spanning forest so that every tree
  /// edge has signature +1. Orientable embeddings end up all +1.
  void normalize_signatures() {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : rot_[v]) {
          int w = head(d);
          if (seen[w]) continue;
          seen[w] = 1;
          if (edges_[edge_of_dart(d)].sig < 0) flip_vertex(w);
          q.push(w);
        }
      }
    }
  }

  bool all_signatures_positive() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sig > 0; });
  }

  void validate() const {
    if (n_ < 0) throw MalformedInput("negative vertex count");
    if (static_cast<int>(rot_.size()) != n_) throw MalformedInput("rotation count differs from vertex count");
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw MalformedInput("edge " + std::to_string(k) + " has an endpoint out of range");
      if (e.sig != 1 && e.sig != -1) throw MalformedInput("edge " + std::to_string(k) + " has a bad signature");
    }
    std::vector<int> seen(edges_.size() * 2, 0);
    for (int v = 0; v < n_; ++v) {
      for (int d : rot_[v]) {
        if (d < 0 || d >= num_darts()) throw MalformedInput("rotation of " + std::to_string(v) + " names unknown dart");
        if (tail(d) != v)
          throw MalformedInput("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                               " but leaves " + std::to_string(tail(d)));
        if (seen[d]++) throw MalformedInput("dart " + std::to_string(d) + " appears twice in rotations");
      }
    }
    for (std::size_t d = 0; d < seen.size(); ++d)
      if (!seen[d]) throw MalformedInput("dart " + std::to_string(d) + " missing from rotations");
  }

  friend bool operator==(const RotationEmbedding& a, const RotationEmbedding& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size() || a.rot_ != b.rot_) return false;
    for (std::size_t k = 0; k < a.edges_.size(); ++k)
      if (a.edges_[k].u != b.edges_[k].u || a.edges_[k].v != b.edges_[k].v || a.edges_[k].sig != b.edges_[k].sig)
        return false;
    return a.roots_ == b.roots_;
  }

 private:
  void reindex() {
    pos_.assign(edges_.size() * 2, -1);
    for (int v = 0; v < n_; ++v)
      for (std::size_t i = 0; i < rot_[v].size(); ++i) pos_[rot_[v][i]] = static_cast<int>(i);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> pos_;
  RootSet roots_;
};

/// True when b describes the same embedded graph as a with identical vertex
/// and edge ids, up to the choice of local orientation at each vertex and of
/// the starting dart in each rotation. This is dart-level equality of
/// embeddings.
inline bool same_embedding(const RotationEmbedding& a, const RotationEmbedding& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (int k = 0; k < a.num_edges(); ++k)
    if (a.edge(k).u != b.edge(k).u || a.edge(k).v != b.edge(k).v) return false;
  // flip[v]: +1 same local orientation, -1 reversed, 0 undetermined (degree <= 2).
  std::vector<int> flip(static_cast<std::size_t>(a.num_vertices()), 0);
  for (int v = 0; v < a.num_vertices(); ++v) {
    const auto& ra = a.rotation(v);
    const auto& rb = b.rotation(v);
    if (ra.size() != rb.size()) return false;
    if (ra.empty()) continue;
    auto it = std::find(rb.begin(), rb.end(), ra[0]);
    if (it == rb.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - rb.begin());
    std::size_t n = ra.size();
    bool forward = true, backward = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (ra[i] != rb[(off + i) % n]) forward = false;
      if (ra[i] != rb[(off + n - i) % n]) backward = false;
    }
    if (!forward && !backward) return false;
    if (forward != backward) flip[v] = forward ? 1 : -1;
  }
  // Resolve undetermined vertices from the signature constraints.
  std::vector<std::vector<std::pair<int, int>>> cons(static_cast<std::size_t>(a.num_vertices()));
  for (int k = 0; k < a.num_edges(); ++k) {
    const Edge& e = a.edge(k);
    if (e.u == e.v) {
      if (b.edge(k).sig != e.sig) return false;
      continue;
    }
    int rel = e.sig * b.edge(k).sig;  // flip[u] * flip[v] must equal rel
    cons[e.u].emplace_back(e.v, rel);
    cons[e.v].emplace_back(e.u, rel);
  }
  auto propagate = [&](int s) {
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, rel] : cons[v]) {
        int want = flip[v] * rel;
        if (flip[w] == 0) {
          flip[w] = want;
          stack.push_back(w);
        } else if (flip[w] != want) {
          return false;
        }
      }
    }
    return true;
  };
  for (int v = 0; v < a.num_vertices(); ++v)
    if (flip[v] != 0 && !propagate(v)) return false;
  for (int v = 0; v < a.num_vertices(); ++v)
    if (flip[v] == 0) {
      flip[v] = 1;
      if (!propagate(v)) return false;
    }
  return true;
}

}  // namespace facecover

#endif  // FACECOVER_EMBEDDING_HPP
