#ifndef FACECOVER_FACES_HPP
#define FACECOVER_FACES_HPP

#include <algorithm>
#include <vector>

#include "facecover/embedding.hpp"
#include "facecover/gem.hpp"

namespace facecover {

/// Face boundary walks of an embedding. Face ids follow the smallest flag of
/// each face orbit, so they are stable for a given rotation system.
struct FaceTrace {
  std::vector<std::vector<int>> walks;  // darts, each traversed tail -> head
  std::vector<int> face_of_flag;        // indexed by flag 2d+b

  int size() const { return static_cast<int>(walks.size()); }
  int face_of_dart_side(int dart, int side) const { return face_of_flag[flag_of(dart, side)]; }

  /// Vertices in walk order (a vertex repeats if the face meets it twice).
  std::vector<int> walk_vertices(const RotationEmbedding& g, int f) const {
    std::vector<int> out;
    out.reserve(walks[f].size());
    for (int d : walks[f]) out.push_back(g.tail(d));
    return out;
  }
  std::vector<int> vertex_set(const RotationEmbedding& g, int f) const {
    auto v = walk_vertices(g, f);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
  /// The two faces on either side of an edge (equal for a one-face edge).
  std::pair<int, int> faces_of_edge(int e) const {
    return {face_of_flag[flag_of(2 * e, 0)], face_of_flag[flag_of(2 * e, 1)]};
  }
  /// Faces incident with each vertex, without repetition.
  std::vector<std::vector<int>> faces_at_vertices(const RotationEmbedding& g) const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) {
      for (int d : g.rotation(v))
        for (int b = 0; b < 2; ++b) out[v].push_back(face_of_flag[flag_of(d, b)]);
      std::sort(out[v].begin(), out[v].end());
      out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
    }
    return out;
  }
};

inline FaceTrace trace_faces_of_gem(const Gem& gem) {
  FaceTrace ft;
  int nf = 0;
  ft.face_of_flag = orbits(gem, 0, 1, &nf);
  ft.walks.assign(nf, {});
  std::vector<char> started(nf, 0);
  for (int x = 0; x < gem.size(); ++x) {
    if (!gem.alive(x)) continue;
    int f = ft.face_of_flag[x];
    if (started[f]) continue;
    started[f] = 1;
    int y = x;
    do {
      ft.walks[f].push_back(dart_of_flag(y));
      y = gem.a1[gem.a0[y]];
    } while (y != x);
  }
  return ft;
}

/// Face tracing with signature-aware traversal.
inline FaceTrace trace_faces(const RotationEmbedding& g) {
  g.validate();
  return trace_faces_of_gem(to_gem(g));
}

/// 2 + |E| - |V| - |F|, applied as-is (cellularity is not checked).
inline int euler_genus(const RotationEmbedding& g) {
  return 2 + g.num_edges() - g.num_vertices() - trace_faces(g).size();
}

inline bool is_orientable(const RotationEmbedding& g) {
  auto types = classify_components(to_gem(g));
  return std::all_of(types.begin(), types.end(), [](const SurfaceType& t) { return t.orientable; });
}

/// Dual embedding in the same surface. Dual vertex i is face i of g (as
/// numbered by trace_faces) and dual edge k crosses edge k of g.
inline RotationEmbedding dual(const RotationEmbedding& g) {
  Gem gem = to_gem(g);
  std::swap(gem.a0, gem.a2);
  return to_embedding(gem).embedding;
}

/// Isomorphism of connected embedded graphs as maps: a bijection on flags
/// commuting with all three involutions (reflections allowed).
inline bool isomorphic(const RotationEmbedding& a, const RotationEmbedding& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (a.num_edges() == 0) return true;
  Gem ga = to_gem(a), gb = to_gem(b);
  int n = ga.size();
  for (int start = 0; start < n; ++start) {
    std::vector<int> map(n, -1), inv(n, -1);
    std::vector<int> stack{0};
    map[0] = start;
    inv[start] = 0;
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3 && ok; ++k) {
        int y = ga.involution(k, x), my = gb.involution(k, map[x]);
        if (map[y] < 0) {
          if (inv[my] >= 0) {
            ok = false;
          } else {
            map[y] = my;
            inv[my] = y;
            stack.push_back(y);
          }
        } else if (map[y] != my) {
          ok = false;
        }
      }
    }
    if (ok && std::find(map.begin(), map.end(), -1) == map.end()) return true;
  }
  return false;
}

}  // namespace facecover

#endif  // FACECOVER_FACES_HPP
