#ifndef FACECOVER_BUILD_HPP
#define FACECOVER_BUILD_HPP

#include <map>
#include <utility>
#include <vector>

#include "facecover/embedding.hpp"
#include "facecover/gem.hpp"

namespace facecover {

/// Glue polygons into a closed surface. Each face is a closed vertex walk;
/// face i side k runs from faces[i][k] to faces[i][k+1]. Sides are paired by
/// edge label: `labels[i][k]` if given, otherwise the unordered vertex pair
/// (which then must occur exactly twice). Sides glued in the same direction
/// produce a twisted edge. Signatures are normalized along a spanning tree.
inline RotationEmbedding from_faces(int n, const std::vector<std::vector<int>>& faces,
                                    const std::vector<std::vector<int>>& labels = {}) {
  struct Side {
    int face, idx;
  };
  Gem gem;
  std::vector<int> base(faces.size());
  std::vector<int> vertex_of;
  std::map<std::pair<int, int>, std::vector<Side>> by_key;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    int len = static_cast<int>(f.size());
    if (len == 0) throw MalformedInput("empty face");
    base[i] = gem.size();
    for (int k = 0; k < len; ++k) {
      int a = f[k], b = f[(k + 1) % len];
      if (a < 0 || a >= n || b < 0 || b >= n) throw MalformedInput("face vertex out of range");
      gem.add_flag(-1, false);
      gem.add_flag(-1, false);
      vertex_of.push_back(a);
      vertex_of.push_back(b);
      std::pair<int, int> key = labels.empty() ? std::pair<int, int>{std::min(a, b), std::max(a, b)}
                                               : std::pair<int, int>{labels[i][k], -1};
      by_key[key].push_back({static_cast<int>(i), k});
    }
    for (int k = 0; k < len; ++k) {
      int x0 = base[i] + 2 * k, x1 = x0 + 1;
      gem.a0[x0] = x1;
      gem.a0[x1] = x0;
      int y = base[i] + 2 * ((k + 1) % len);
      gem.a1[x1] = y;
      gem.a1[y] = x1;
    }
  }
  for (auto& [key, sides] : by_key) {
    if (sides.size() != 2) throw MalformedInput("edge does not lie on exactly two face sides");
    int x = base[sides[0].face] + 2 * sides[0].idx;
    int y = base[sides[1].face] + 2 * sides[1].idx;
    if (vertex_of[x] != vertex_of[y]) y ^= 1;
    if (vertex_of[x] != vertex_of[y] || vertex_of[x ^ 1] != vertex_of[y ^ 1])
      throw MalformedInput("glued sides have different ends");
    gem.a2[x] = y;
    gem.a2[y] = x;
    gem.a2[x ^ 1] = y ^ 1;
    gem.a2[y ^ 1] = x ^ 1;
  }
  GemEmbedding ge = to_embedding(gem);
  const RotationEmbedding& e = ge.embedding;
  std::vector<int> vid(e.num_vertices());
  std::vector<char> used(n, 0);
  for (int v = 0; v < e.num_vertices(); ++v) {
    vid[v] = vertex_of[ge.flag_to_gem[flag_of(e.rotation(v)[0], 0)]];
    if (used[vid[v]]++) throw MalformedInput("faces pinch at vertex " + std::to_string(vid[v]));
  }
  if (e.num_vertices() != n) throw MalformedInput("some vertex lies on no face");
  std::vector<std::vector<int>> rot(n);
  std::vector<Edge> edges(e.num_edges());
  for (int v = 0; v < n; ++v) rot[vid[v]] = e.rotation(v);
  for (int k = 0; k < e.num_edges(); ++k) edges[k] = {vid[e.edge(k).u], vid[e.edge(k).v], e.edge(k).sig};
  RotationEmbedding out(n, std::move(edges), std::move(rot));
  out.normalize_signatures();
  return out;
}

/// Build from a simple graph and per-vertex cyclic neighbour orders
/// (orientable, all signatures +1).
inline RotationEmbedding from_neighbor_rotations(const std::vector<std::vector<int>>& nbr) {
  int n = static_cast<int>(nbr.size());
  std::map<std::pair<int, int>, int> id;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int w : nbr[u])
      if (u < w) {
        id[{u, w}] = static_cast<int>(edges.size());
        edges.push_back({u, w, 1});
      }
  std::vector<std::vector<int>> rot(n);
  for (int u = 0; u < n; ++u)
    for (int w : nbr[u]) {
      auto it = id.find({std::min(u, w), std::max(u, w)});
      if (it == id.end()) throw MalformedInput("asymmetric neighbour lists");
      rot[u].push_back(dart_of_edge(it->second, u < w));
    }
  return RotationEmbedding(n, std::move(edges), std::move(rot));
}

}  // namespace facecover

#endif  // FACECOVER_BUILD_HPP
