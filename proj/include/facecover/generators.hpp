#ifndef FACECOVER_GENERATORS_HPP
#define FACECOVER_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "facecover/build.hpp"
#include "facecover/embedding.hpp"
#include "facecover/faces.hpp"
#include "facecover/graph.hpp"

namespace facecover {

/// Windmill of even parameter t >= 6. Vertex ids: z = 0, then per vane i
/// the paths a, b, c, where a_{i,1} = u_i, b_{i,1} = v_i, c_{i,1} = u_{i+1}.
/// Roots are b_{i,j} for odd j. The hub lies inside, vanes point outward.
inline RotationEmbedding windmill(int t) {
  if (t < 6 || t % 2 != 0) throw PreconditionError("windmill needs an even parameter >= 6");
  int p = t / 2, q = t / 5, len = 2 * q;
  int next = 1;
  std::vector<int> u(p), v(p);
  for (int i = 0; i < p; ++i) {
    u[i] = next++;
    v[i] = next++;
  }
  std::vector<std::vector<int>> a(p, std::vector<int>(len)), b = a, c = a;
  for (int i = 0; i < p; ++i) {
    a[i][0] = u[i];
    b[i][0] = v[i];
    c[i][0] = u[(i + 1) % p];
    for (int j = 1; j < len; ++j) {
      a[i][j] = next++;
      b[i][j] = next++;
      c[i][j] = next++;
    }
  }
  int n = next;
  std::vector<std::vector<int>> faces;
  std::vector<int> outer;
  for (int i = 0; i < p; ++i) {
    faces.push_back({0, u[i], v[i]});
    faces.push_back({0, v[i], u[(i + 1) % p]});
    for (int j = 0; j + 1 < len; ++j) {
      faces.push_back({a[i][j], a[i][j + 1], b[i][j + 1], b[i][j]});
      faces.push_back({b[i][j], b[i][j + 1], c[i][j + 1], c[i][j]});
    }
    faces.push_back({a[i][len - 1], b[i][len - 1], c[i][len - 1]});
    for (int j = 0; j < len; ++j) outer.push_back(a[i][j]);
    for (int j = len - 1; j > 0; --j) outer.push_back(c[i][j]);
  }
  faces.push_back(outer);
  RotationEmbedding g = from_faces(n, faces);
  std::vector<int> roots;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < len; j += 2) roots.push_back(b[i][j]);
  g.set_roots(RootSet(roots));
  return g;
}

/// Bagel B_n = K2 strong C_p on the torus, n = 2p, all vertices rooted.
/// Vertex ids: v_i = i, w_i = p + i.
inline RotationEmbedding bagel(int n) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("bagel needs an even parameter >= 6");
  int p = n / 2;
  auto V = [p](int i) { return ((i % p) + p) % p; };
  auto W = [p](int i) { return p + ((i % p) + p) % p; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < p; ++i) {
    faces.push_back({V(i), V(i + 1), W(i + 1)});
    faces.push_back({V(i), W(i + 1), W(i)});
    faces.push_back({W(i), W(i + 1), V(i + 2), V(i + 1)});
  }
  RotationEmbedding g = from_faces(n, faces);
  g.set_roots(RootSet::all(n));
  return g;
}

inline RootedGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return RootedGraph::from_edges(n, e);
}

inline RootedGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return RootedGraph::from_edges(n, e);
}

/// Wheel: rim 0..n-1, hub n, all rim vertices rooted.
inline RotationEmbedding wheel(int n) {
  if (n < 3) throw PreconditionError("wheel needs at least 3 rim vertices");
  std::vector<std::vector<int>> faces;
  std::vector<int> rim;
  for (int i = 0; i < n; ++i) {
    faces.push_back({n, i, (i + 1) % n});
    rim.push_back(n - 1 - i);
  }
  faces.push_back(rim);
  RotationEmbedding g = from_faces(n + 1, faces);
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  g.set_roots(RootSet(r));
  return g;
}

inline RotationEmbedding tetrahedron() { return from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

inline RotationEmbedding icosahedron() {
  std::vector<std::vector<int>> faces;
  auto U = [](int k) { return 1 + ((k % 5) + 5) % 5; };
  auto L = [](int k) { return 6 + ((k % 5) + 5) % 5; };
  for (int k = 0; k < 5; ++k) {
    faces.push_back({0, U(k), U(k + 1)});
    faces.push_back({U(k), L(k), U(k + 1)});
    faces.push_back({U(k + 1), L(k), L(k + 1)});
    faces.push_back({11, L(k + 1), L(k)});
  }
  return from_faces(12, faces);
}

/// Triangulated m x m grid on the torus (one diagonal per square).
inline RotationEmbedding torus_grid(int m) {
  if (m < 3) throw PreconditionError("torus_grid needs m >= 3");
  auto id = [m](int i, int j) { return ((i % m) + m) % m * m + ((j % m) + m) % m; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  RotationEmbedding g = from_faces(m * m, faces);
  g.set_roots(RootSet::all(m * m));
  return g;
}

/// Triangulated m x m grid on the Klein bottle: crossing the seam i = m
/// reflects the second coordinate.
inline RotationEmbedding klein_grid(int m) {
  if (m < 5) throw PreconditionError("klein_grid needs m >= 5");
  auto id = [m](int i, int j) {
    if (i >= m) {
      i -= m;
      j = -j;
    }
    return i * m + ((j % m) + m) % m;
  };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  RotationEmbedding g = from_faces(m * m, faces);
  g.set_roots(RootSet::all(m * m));
  return g;
}

/// Triangulated k x k planar grid plus an apex (id k*k) joined to the
/// boundary: a triangulation of the sphere. Grid vertex (i, j) has id
/// i * k + j. Roots are the vertices with both coordinates odd, which are
/// pairwise on no common face.
inline RotationEmbedding apex_grid(int k) {
  if (k < 3) throw PreconditionError("apex_grid needs k >= 3");
  auto id = [k](int i, int j) { return i * k + j; };
  int apex = k * k;
  std::vector<std::vector<int>> faces;
  for (int i = 0; i + 1 < k; ++i)
    for (int j = 0; j + 1 < k; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  std::vector<int> ring;
  for (int j = 0; j + 1 < k; ++j) ring.push_back(id(0, j));
  for (int i = 0; i + 1 < k; ++i) ring.push_back(id(i, k - 1));
  for (int j = k - 1; j > 0; --j) ring.push_back(id(k - 1, j));
  for (int i = k - 1; i > 0; --i) ring.push_back(id(i, 0));
  for (std::size_t a = 0; a < ring.size(); ++a) faces.push_back({apex, ring[(a + 1) % ring.size()], ring[a]});
  RotationEmbedding g = from_faces(k * k + 1, faces);
  std::vector<int> roots;
  for (int i = 1; i < k; i += 2)
    for (int j = 1; j < k; j += 2) roots.push_back(id(i, j));
  g.set_roots(RootSet(roots));
  return g;
}

/// Seeded random 3-connected planar triangulation on n >= 4 vertices:
/// stacked insertions followed by degree-safe random edge flips.
inline RotationEmbedding random_triangulation(int n, unsigned seed, double root_fraction = 0.5) {
  if (n < 4) throw PreconditionError("random_triangulation needs n >= 4");
  std::mt19937 rng(seed);
  // nbr[v]: cyclic neighbour order; face a->b->c has c right after a at b.
  std::vector<std::vector<int>> nbr(n);
  nbr[0] = {3, 1, 2};
  nbr[1] = {0, 3, 2};
  nbr[2] = {1, 3, 0};
  nbr[3] = {1, 0, 2};
  auto insert_after = [&](int v, int after, int x) {
    auto it = std::find(nbr[v].begin(), nbr[v].end(), after);
    nbr[v].insert(it + 1, x);
  };
  auto succ = [&](int v, int w) {
    auto& r = nbr[v];
    auto it = std::find(r.begin(), r.end(), w);
    ++it;
    return it == r.end() ? r.front() : *it;
  };
  auto pick_face = [&](int k) {
    // random dart a->b among current vertices; face a->b->c.
    std::uniform_int_distribution<int> dv(0, k - 1);
    int a = dv(rng);
    std::uniform_int_distribution<int> dd(0, static_cast<int>(nbr[a].size()) - 1);
    int b = nbr[a][dd(rng)];
    int c = succ(b, a);
    return std::array<int, 3>{a, b, c};
  };
  for (int x = 4; x < n; ++x) {
    auto [a, b, c] = pick_face(x);
    insert_after(b, a, x);
    insert_after(c, b, x);
    insert_after(a, c, x);
    nbr[x] = {c, b, a};
  }
  auto adjacent = [&](int u, int v) { return std::find(nbr[u].begin(), nbr[u].end(), v) != nbr[u].end(); };
  int flips = 3 * n;
  for (int k = 0; k < flips; ++k) {
    std::uniform_int_distribution<int> dv(0, n - 1);
    int u = dv(rng);
    std::uniform_int_distribution<int> dd(0, static_cast<int>(nbr[u].size()) - 1);
    int v = nbr[u][dd(rng)];
    int w = succ(v, u);  // face u->v->w
    int x = succ(u, v);  // face v->u->x
    if (w == x || adjacent(w, x) || nbr[u].size() <= 3 || nbr[v].size() <= 3) continue;
    nbr[u].erase(std::find(nbr[u].begin(), nbr[u].end(), v));
    nbr[v].erase(std::find(nbr[v].begin(), nbr[v].end(), u));
    insert_after(w, v, x);
    insert_after(x, u, w);
  }
  RotationEmbedding g = from_neighbor_rotations(nbr);
  std::vector<int> roots;
  std::bernoulli_distribution coin(root_fraction);
  for (int v = 0; v < n; ++v)
    if (coin(rng)) roots.push_back(v);
  if (roots.empty()) roots.push_back(0);
  g.set_roots(RootSet(roots));
  return g;
}

/// Lattice points of the diamond grid of parameter r.
inline std::vector<std::pair<int, int>> diamond_points(int r) {
  std::vector<std::pair<int, int>> pts;
  for (int j = r; j >= -r; --j)
    for (int i = -r; i <= r; ++i)
      if (std::abs(i) + std::abs(j) <= r && ((i + r) % 2 + 2) % 2 == 1 && ((j % 2) + 2) % 2 == 1) pts.emplace_back(i, j);
  return pts;
}

/// Planar diamond grid D_r with vertices indexed as in diamond_points.
inline RotationEmbedding diamond_grid(int r) {
  if (r < 3) throw PreconditionError("diamond grid needs r >= 3");
  auto pts = diamond_points(r);
  std::map<std::pair<int, int>, int> id;
  for (std::size_t k = 0; k < pts.size(); ++k) id[pts[k]] = static_cast<int>(k);
  // Counter-clockwise neighbour order: east, north, west, south.
  const int dx[4] = {2, 0, -2, 0}, dy[4] = {0, 2, 0, -2};
  std::vector<std::vector<int>> nbr(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (int s = 0; s < 4; ++s) {
      auto it = id.find({pts[k].first + dx[s], pts[k].second + dy[s]});
      if (it != id.end()) nbr[k].push_back(it->second);
    }
  // Clockwise at each vertex so that inner faces trace counter-clockwise.
  for (auto& l : nbr) std::reverse(l.begin(), l.end());
  return from_neighbor_rotations(nbr);
}

/// Structural hint for the projective diamond grid: a K4-subdivision with
/// branch vertices, its six paths, the face sets of its three faces and of
/// three protecting disks.
struct ProjectiveHint {
  std::vector<int> branch;                    // 4 vertices
  std::vector<std::vector<int>> paths;        // vertex sequences between branch vertices
  std::vector<std::vector<int>> inner_faces;  // face ids of each K4 face region
  std::vector<std::vector<int>> outer_faces;  // face ids of each protecting disk
};

struct ProjectiveGrid {
  RotationEmbedding graph;
  std::vector<std::pair<int, int>> coords;  // representative lattice point per vertex
  std::vector<std::vector<int>> faces;      // face vertex walks as built (face id order of trace_faces differs)
  ProjectiveHint hint;                      // empty unless r is even and at least 8
};

/// Projective diamond grid P_r. Antipodal boundary points are identified;
/// `simple` drops one edge of each of the two corner digons.
inline ProjectiveGrid projective_diamond_grid(int r, bool simple = true) {
  if (r < 3) throw PreconditionError("projective diamond grid needs r >= 3");
  auto pts = diamond_points(r);
  std::map<std::pair<int, int>, int> lattice;
  for (std::size_t k = 0; k < pts.size(); ++k) lattice[pts[k]] = static_cast<int>(k);
  // Vertex ids after identification.
  std::vector<int> vid(pts.size(), -1);
  ProjectiveGrid out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto [i, j] = pts[k];
    if (std::abs(i) + std::abs(j) == r) {
      int o = lattice.at({-i, -j});
      if (vid[o] >= 0) {
        vid[k] = vid[o];
        continue;
      }
    }
    vid[k] = static_cast<int>(out.coords.size());
    out.coords.push_back(pts[k]);
  }
  int n = static_cast<int>(out.coords.size());
  // Lattice edge labels.
  std::map<std::pair<int, int>, int> edge_label;
  auto label = [&](int a, int b) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = edge_label.find(key);
    if (it != edge_label.end()) return it->second;
    int l = static_cast<int>(edge_label.size());
    edge_label[key] = l;
    return l;
  };
  std::vector<std::vector<int>> lat_faces, lat_labels;  // faces as lattice point ids, side labels
  for (auto [i, j] : pts) {
    auto a = lattice.find({i, j}), b = lattice.find({i + 2, j}), c = lattice.find({i + 2, j + 2}),
         d = lattice.find({i, j + 2});
    if (b != lattice.end() && c != lattice.end() && d != lattice.end()) {
      std::vector<int> f{a->second, b->second, c->second, d->second};
      lat_labels.push_back({label(f[0], f[1]), label(f[1], f[2]), label(f[2], f[3]), label(f[3], f[0])});
      lat_faces.push_back(f);
    }
  }
  // Outer walk of D_r, counter-clockwise.
  RotationEmbedding dr = diamond_grid(r);
  {
    Gem gem = to_gem(dr);
    int nf = 0;
    auto fl = orbits(gem, 0, 1, &nf);
    std::vector<int> len(nf, 0);
    for (int x = 0; x < gem.size(); ++x) ++len[fl[x]];
    int outer = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());
    int start = -1;
    for (int x = 0; x < gem.size() && start < 0; ++x)
      if (fl[x] == outer) start = x;
    std::vector<int> walk;
    int y = start;
    do {
      walk.push_back(dr.tail(dart_of_flag(y)));
      y = gem.a1[gem.a0[y]];
    } while (y != start);
    auto on_rim = [&](int k) { return std::abs(pts[k].first) + std::abs(pts[k].second) == r; };
    // Rotate so that the walk starts at a rim vertex.
    auto first = std::find_if(walk.begin(), walk.end(), on_rim);
    std::rotate(walk.begin(), first, walk.end());
    std::vector<std::vector<int>> arcs;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      if (on_rim(walk[k])) {
        if (!arcs.empty()) arcs.back().push_back(walk[k]);
        arcs.push_back({walk[k]});
      } else {
        arcs.back().push_back(walk[k]);
      }
    }
    arcs.back().push_back(walk[0]);
    std::set<int> used;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (used.count(static_cast<int>(k))) continue;
      auto [i0, j0] = pts[arcs[k].front()];
      int anti = lattice.at({-i0, -j0});
      std::size_t m = 0;
      while (m < arcs.size() && (arcs[m].front() != anti || m == k)) ++m;
      if (m == arcs.size()) throw InvariantViolation("antipodal arc missing");
      used.insert(static_cast<int>(k));
      used.insert(static_cast<int>(m));
      std::vector<int> f, l;
      for (std::size_t s = 0; s + 1 < arcs[k].size(); ++s) {
        f.push_back(arcs[k][s]);
        l.push_back(label(arcs[k][s], arcs[k][s + 1]));
      }
      for (std::size_t s = arcs[m].size() - 1; s > 0; --s) {
        f.push_back(arcs[m][s]);
        l.push_back(label(arcs[m][s], arcs[m][s - 1]));
      }
      lat_faces.push_back(f);
      lat_labels.push_back(l);
    }
  }
  std::vector<std::vector<int>> faces, labels;
  for (std::size_t k = 0; k < lat_faces.size(); ++k) {
    std::vector<int> f;
    for (int x : lat_faces[k]) f.push_back(vid[x]);
    faces.push_back(f);
    labels.push_back(lat_labels[k]);
  }
  if (simple) {
    for (std::size_t k = 0; k < faces.size(); ++k) {
      if (faces[k].size() != 2) continue;
      int keep = labels[k][0], drop = labels[k][1];
      for (std::size_t o = 0; o < faces.size(); ++o)
        if (o != k)
          for (int& l : labels[o])
            if (l == drop) l = keep;
      faces[k].clear();
      labels[k].clear();
    }
    std::vector<std::vector<int>> f2, l2;
    for (std::size_t k = 0; k < faces.size(); ++k)
      if (!faces[k].empty()) {
        f2.push_back(faces[k]);
        l2.push_back(labels[k]);
      }
    faces.swap(f2);
    labels.swap(l2);
  }
  out.graph = from_faces(n, faces, labels);
  out.faces = faces;
  if (r % 2 == 0 && r >= 8) {
    int b = r / 3;
    if (b % 2 == 0) --b;
    auto at = [&](int i, int j) { return vid[lattice.at({i, j})]; };
    // Lattice walk along a row (dj = 0) or a column (di = 0), endpoints included.
    auto walk = [&](int i0, int j0, int i1, int j1) {
      std::vector<int> p;
      int di = (i1 > i0) - (i1 < i0), dj = (j1 > j0) - (j1 < j0);
      for (int i = i0, j = j0;; i += 2 * di, j += 2 * dj) {
        p.push_back(at(i, j));
        if (i == i1 && j == j1) break;
      }
      return p;
    };
    auto join = [](std::vector<int> a, const std::vector<int>& c) {
      a.insert(a.end(), c.begin() + 1, c.end());
      return a;
    };
    int e = r - b;
    ProjectiveHint& h = out.hint;
    h.branch = {at(-b, b), at(b, b), at(b, -b), at(-b, -b)};
    h.paths = {walk(-b, b, b, b), walk(b, b, b, -b), walk(b, -b, -b, -b), walk(-b, -b, -b, b),
               join(walk(b, b, e, b), walk(-e, -b, -b, -b)), join(walk(-b, b, -b, e), walk(b, -e, b, -b))};
    const RotationEmbedding& g = out.graph;
    FaceTrace ft = trace_faces(g);
    std::set<std::pair<int, int>> cut;
    for (auto& p : h.paths)
      for (std::size_t k = 0; k + 1 < p.size(); ++k) cut.insert({std::min(p[k], p[k + 1]), std::max(p[k], p[k + 1])});
    std::vector<int> parent(ft.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int found = 0;
    for (int ed = 0; ed < g.num_edges(); ++ed) {
      int u = g.edge(ed).u, v = g.edge(ed).v;
      if (cut.count({std::min(u, v), std::max(u, v)})) {
        ++found;
        continue;
      }
      auto [f1, f2] = ft.faces_of_edge(ed);
      parent[find(f1)] = find(f2);
    }
    if (found != static_cast<int>(cut.size())) throw InvariantViolation("hint path uses a missing edge");
    std::map<int, std::vector<int>> groups;
    for (int f = 0; f < ft.size(); ++f) groups[find(f)].push_back(f);
    if (groups.size() != 3) throw InvariantViolation("hint subdivision does not have three faces");
    auto at_v = ft.faces_at_vertices(g);
    for (auto& [key, fs] : groups) {
      h.inner_faces.push_back(fs);
      std::set<int> grown;
      for (int f : fs)
        for (int v : ft.vertex_set(g, f)) grown.insert(at_v[v].begin(), at_v[v].end());
      h.outer_faces.emplace_back(grown.begin(), grown.end());
    }
  }
  return out;
}

}  // namespace facecover

#endif  // FACECOVER_GENERATORS_HPP
