#ifndef FACECOVER_GEM_HPP
#define FACECOVER_GEM_HPP

#include <algorithm>
#include <array>
#include <vector>

#include "facecover/embedding.hpp"
#include "facecover/error.hpp"

namespace facecover {

// Flag-level (graph-encoded map) representation used for surgery. Every flag
// is fixed by three fixed-point-free involutions:
//   a0 swaps the two ends of an edge side,
//   a1 swaps the two flags of a corner,
//   a2 swaps the two sides of a dart.
// Vertices are <a1,a2>-orbits, edges <a0,a2>-orbits, faces <a0,a1>-orbits.
// Flags are never renumbered by the surgery helpers; removed flags are marked
// dead (a0 == -1), so every flag id stays a stable handle through a pipeline.
struct Gem {
  std::vector<int> a0, a1, a2;
  std::vector<int> origin;  // base flag this flag descends from, -1 if none
  std::vector<char> cap;    // flag lies on a cap (capped cuff) face

  int size() const { return static_cast<int>(a0.size()); }
  bool alive(int x) const { return a0[x] >= 0; }
  int involution(int which, int x) const { return which == 0 ? a0[x] : which == 1 ? a1[x] : a2[x]; }

  int add_flag(int org, bool is_cap) {
    a0.push_back(-1);
    a1.push_back(-1);
    a2.push_back(-1);
    origin.push_back(org);
    cap.push_back(is_cap ? 1 : 0);
    return size() - 1;
  }
  void kill(int x) { a0[x] = a1[x] = a2[x] = -1; }

  void check() const {
    for (int x = 0; x < size(); ++x) {
      if (!alive(x)) continue;
      for (int k = 0; k < 3; ++k) {
        int y = involution(k, x);
        if (y < 0 || y >= size() || !alive(y) || involution(k, y) != x)
          throw InvariantViolation("gem involution a" + std::to_string(k) + " broken at flag " + std::to_string(x));
      }
      if (a0[x] == x || a2[x] == x) throw InvariantViolation("gem involution has a fixed point");
    }
  }
};

inline Gem to_gem(const RotationEmbedding& g) {
  Gem gem;
  int nf = g.num_flags();
  gem.a0.assign(nf, -1);
  gem.a1.assign(nf, -1);
  gem.a2.assign(nf, -1);
  gem.origin.resize(nf);
  gem.cap.assign(nf, 0);
  for (int x = 0; x < nf; ++x) gem.origin[x] = x;
  for (int d = 0; d < g.num_darts(); ++d) {
    gem.a2[flag_of(d, 0)] = flag_of(d, 1);
    gem.a2[flag_of(d, 1)] = flag_of(d, 0);
    int o = opposite(d);
    int sig = g.signature(edge_of_dart(d));
    for (int b = 0; b < 2; ++b) gem.a0[flag_of(d, b)] = flag_of(o, sig > 0 ? 1 - b : b);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      int a = flag_of(r[i], 1);
      int b = flag_of(r[(i + 1) % r.size()], 0);
      gem.a1[a] = b;
      gem.a1[b] = a;
    }
  }
  return gem;
}

/// Orbit labels of the subgroup generated by two involutions. Dead flags get
/// label -1. Labels are assigned in order of the smallest flag of each orbit.
inline std::vector<int> orbits(const Gem& gem, int i, int j, int* count = nullptr) {
  std::vector<int> label(gem.size(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < gem.size(); ++s) {
    if (!gem.alive(s) || label[s] >= 0) continue;
    label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k : {i, j}) {
        int y = gem.involution(k, x);
        if (label[y] < 0) {
          label[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

/// Connected components of the flag graph (all three involutions).
inline std::vector<int> gem_components(const Gem& gem, int* count = nullptr) {
  std::vector<int> label(gem.size(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < gem.size(); ++s) {
    if (!gem.alive(s) || label[s] >= 0) continue;
    label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        int y = gem.involution(k, x);
        if (label[y] < 0) {
          label[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

struct SurfaceType {
  int euler_genus = 0;
  bool orientable = true;
  int cuffs = 0;  // number of cap faces
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

/// Topological type of each component of a gem. Cap faces are counted as
/// faces (the surface is the capped one) and reported separately as cuffs.
inline std::vector<SurfaceType> classify_components(const Gem& gem) {
  int nc = 0;
  auto comp = gem_components(gem, &nc);
  int nv = 0, ne = 0, nf = 0;
  auto vl = orbits(gem, 1, 2, &nv);
  auto el = orbits(gem, 0, 2, &ne);
  auto fl = orbits(gem, 0, 1, &nf);
  std::vector<long> V(nc, 0), E(nc, 0), F(nc, 0);
  std::vector<SurfaceType> out(nc);
  std::vector<char> sv(nv, 0), se(ne, 0), sf(nf, 0);
  for (int x = 0; x < gem.size(); ++x) {
    if (!gem.alive(x)) continue;
    int c = comp[x];
    if (!sv[vl[x]]) sv[vl[x]] = 1, ++V[c];
    if (!se[el[x]]) se[el[x]] = 1, ++E[c];
    if (!sf[fl[x]]) {
      sf[fl[x]] = 1;
      ++F[c];
      if (gem.cap[x]) ++out[c].cuffs;
    }
  }
  // Orientable iff the flag graph is bipartite.
  std::vector<int> color(gem.size(), -1);
  std::vector<int> stack;
  for (int s = 0; s < gem.size(); ++s) {
    if (!gem.alive(s) || color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        int y = gem.involution(k, x);
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          out[comp[x]].orientable = false;
        }
      }
    }
  }
  for (int c = 0; c < nc; ++c) out[c].euler_genus = static_cast<int>(2 - V[c] + E[c] - F[c]);
  return out;
}

/// Result of converting a gem back into a rotation system. flag_to_gem maps
/// each flag 2d+b of the new embedding to the gem flag it came from.
struct GemEmbedding {
  RotationEmbedding embedding;
  std::vector<int> flag_to_gem;
  std::vector<int> gem_to_flag;
};

inline GemEmbedding to_embedding(const Gem& gem) {
  gem.check();
  int ne = 0, nv = 0;
  auto el = orbits(gem, 0, 2, &ne);
  auto vl = orbits(gem, 1, 2, &nv);
  // Darts: a2-pairs. The k+ dart of an edge is the pair holding its smallest flag.
  std::vector<int> first_flag(ne, -1);
  for (int x = 0; x < gem.size(); ++x)
    if (gem.alive(x) && first_flag[el[x]] < 0) first_flag[el[x]] = x;
  std::vector<int> dart_of(gem.size(), -1);
  for (int e = 0; e < ne; ++e) {
    int x = first_flag[e];
    dart_of[x] = dart_of[gem.a2[x]] = 2 * e;
    int y = gem.a0[x];
    if (dart_of[y] >= 0) throw InvariantViolation("degenerate edge orbit in gem");
    dart_of[y] = dart_of[gem.a2[y]] = 2 * e + 1;
  }
  std::vector<int> side(gem.size(), -1);
  std::vector<std::vector<int>> rot(nv);
  std::vector<char> done(nv, 0);
  std::vector<int> tail_of_dart(2 * ne, -1);
  for (int s = 0; s < gem.size(); ++s) {
    if (!gem.alive(s) || done[vl[s]]) continue;
    int v = vl[s];
    done[v] = 1;
    int x = s;
    do {
      side[x] = 0;
      int y = gem.a2[x];
      side[y] = 1;
      rot[v].push_back(dart_of[x]);
      tail_of_dart[dart_of[x]] = v;
      x = gem.a1[y];
    } while (x != s);
  }
  std::vector<Edge> edges(ne);
  for (int e = 0; e < ne; ++e) {
    edges[e].u = tail_of_dart[2 * e];
    edges[e].v = tail_of_dart[2 * e + 1];
    int x = first_flag[e];
    if (side[x] != 1) x = gem.a2[x];
    edges[e].sig = side[gem.a0[x]] == 0 ? 1 : -1;
  }
  GemEmbedding out{RotationEmbedding(nv, std::move(edges), std::move(rot)), {}, {}};
  out.flag_to_gem.assign(4 * ne, -1);
  out.gem_to_flag.assign(gem.size(), -1);
  for (int x = 0; x < gem.size(); ++x) {
    if (!gem.alive(x)) continue;
    int f = flag_of(dart_of[x], side[x]);
    out.flag_to_gem[f] = x;
    out.gem_to_flag[x] = f;
  }
  return out;
}

namespace detail {
// Remove the four flags of an edge, re-linking involution `relink` (a1) by
// skipping through `via` (a2 for deletion, a0 for contraction).
inline void remove_edge_flags(Gem& gem, int x, int via) {
  std::array<int, 4> fl{x, gem.a0[x], gem.a2[x], gem.a0[gem.a2[x]]};
  auto dead = [&fl](int f) { return f == fl[0] || f == fl[1] || f == fl[2] || f == fl[3]; };
  std::array<int, 4> outside{};
  for (int i = 0; i < 4; ++i) outside[i] = gem.a1[fl[i]];
  for (int i = 0; i < 4; ++i) {
    int y = outside[i];
    if (dead(y)) continue;
    int z = fl[i];
    // Walk via -> a1 until a live flag is reached.
    int w = gem.a1[gem.involution(via, z)];
    int guard = 0;
    while (dead(w)) {
      w = gem.a1[gem.involution(via, w)];
      if (++guard > 8) throw InvariantViolation("edge removal would isolate a vertex");
    }
    gem.a1[y] = w;
  }
  for (int f : fl) gem.kill(f);
}
}  // namespace detail

/// Delete the edge holding flag x. The edge must not be a bridge-like
/// degree-1 attachment (deleting the last edge at a vertex is refused).
inline void delete_edge(Gem& gem, int x) { detail::remove_edge_flags(gem, x, 2); }

/// Contract the edge holding flag x. The edge must not be a loop.
inline void contract_edge(Gem& gem, int x) { detail::remove_edge_flags(gem, x, 0); }

}  // namespace facecover

#endif  // FACECOVER_GEM_HPP
