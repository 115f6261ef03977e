#ifndef FACECOVER_SCHNYDER_HPP
#define FACECOVER_SCHNYDER_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "facecover/embedding.hpp"
#include "facecover/faces.hpp"
#include "facecover/graph.hpp"

namespace facecover {

/// Three in-arborescences with barycentric lattice coordinates. Index i in
/// 0..2 stands for tree i+1 of the usual notation; coordinates are integer
/// numerators over `denominator` = f - 1.
struct SchnyderWood {
  std::array<int, 3> special{};                 // a_1, a_2, a_3
  std::array<std::vector<int>, 3> parent;       // -1 at the root
  std::vector<std::array<long, 3>> coord;       // numerators
  long denominator = 1;
  int outer_face = -1;

  static int prev(int i) { return (i + 2) % 3; }
  static int next(int i) { return (i + 1) % 3; }
};

namespace detail {

// Neighbour rotations of an orientable embedding: c = succ_b(a) means the
// face walk a -> b -> c.
inline std::vector<std::vector<int>> neighbor_rotations(const RotationEmbedding& g) {
  std::vector<std::vector<int>> nbr(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int d : g.rotation(v)) nbr[v].push_back(g.head(d));
  return nbr;
}

inline bool biconnected_or_edge(const std::vector<std::vector<int>>& adj, const std::vector<char>& alive) {
  int n = static_cast<int>(adj.size());
  int count = 0;
  for (int v = 0; v < n; ++v) count += alive[v];
  if (count <= 1) return count == 1;
  if (!induced_connected(adj, alive)) return false;
  if (count == 2) return true;
  // Articulation points by Tarjan's lowpoint.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0, root = -1;
  for (int v = 0; v < n && root < 0; ++v)
    if (alive[v]) root = v;
  bool ok = true;
  int root_children = 0;
  struct Frame {
    int v, parent;
    std::size_t it;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  disc[root] = low[root] = timer++;
  while (!stack.empty() && ok) {
    Frame& fr = stack.back();
    if (fr.it < adj[fr.v].size()) {
      int w = adj[fr.v][fr.it++];
      if (!alive[w] || w == fr.parent) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        if (fr.v == root) ++root_children;
        stack.push_back({w, fr.v, 0});
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
    } else {
      int v = fr.v, p = fr.parent;
      stack.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) ok = false;
      }
    }
  }
  return ok && root_children <= 1;
}

}  // namespace detail

/// Peeling order for a 3-connected plane graph with v1 v2 on the outer face:
/// sets V_1 = {v1, v2}, V_2, ..., V_K = {vn}. Each later set is a singleton or
/// a chain on the contour. Ties go to the smallest vertex id.
struct CanonicalOrder {
  int v1 = -1, v2 = -1, vn = -1;
  std::vector<std::vector<int>> sets;  // in forward order, sets[0] = {v1, v2}
};

inline CanonicalOrder canonical_order(const RotationEmbedding& g, int v1, int v2, int vn, int outer_dart,
                                      int outer_next) {
  int n = g.num_vertices();
  auto nbr = detail::neighbor_rotations(g);
  // Orient the rotations so that the outer walk turns from `outer_dart` to
  // `outer_next`.
  {
    const auto& r = nbr[g.head(outer_dart)];
    std::size_t k = std::find(r.begin(), r.end(), g.tail(outer_dart)) - r.begin();
    if (r[(k + 1) % r.size()] != outer_next)
      for (auto& x : nbr) std::reverse(x.begin(), x.end());
  }
  auto adj = g.adjacency();
  std::vector<char> alive(n, 1), removed(n, 0);
  auto succ = [&](int b, int a) {
    const auto& r = nbr[b];
    std::size_t k = std::find(r.begin(), r.end(), a) - r.begin();
    for (std::size_t s = 1; s <= r.size(); ++s) {
      int c = r[(k + s) % r.size()];
      if (alive[c]) return c;
    }
    return -1;
  };
  // Outer dart: u -> w with {u, w} = {v1, v2}, outer face on its walk.
  int ou = g.tail(outer_dart), ow = g.head(outer_dart);
  auto contour = [&]() {
    std::vector<int> walk{ou};
    int a = ou, b = ow;
    while (b != ou) {
      walk.push_back(b);
      int c = succ(b, a);
      a = b;
      b = c;
      if (walk.size() > static_cast<std::size_t>(4 * n)) throw InvariantViolation("outer walk does not close");
    }
    // walk runs ou, ow, ..., back; contour from v1 to v2 avoiding edge v1v2.
    std::vector<int> path(walk.begin() + 1, walk.end());
    path.push_back(ou);
    if (path.front() != v1) std::reverse(path.begin(), path.end());
    return path;  // ow ... ou oriented to start at v1
  };
  auto alive_deg = [&](int v) {
    int d = 0;
    for (int w : adj[v]) d += alive[w];
    return d;
  };
  auto has_removed_nbr = [&](int v) {
    for (int w : adj[v])
      if (removed[w]) return true;
    return false;
  };
  CanonicalOrder co{v1, v2, vn, {}};
  std::vector<std::vector<int>> rev;
  int left = n;
  bool first = true;
  while (left > 2) {
    auto c = contour();
    if (c.front() != v1 || c.back() != v2) throw InvariantViolation("contour does not run from v1 to v2");
    std::vector<int> chosen;
    auto try_remove = [&](const std::vector<int>& set) {
      for (int v : set) alive[v] = 0;
      bool ok = detail::biconnected_or_edge(adj, alive);
      for (int v : set) alive[v] = 1;
      return ok;
    };
    if (first) {
      chosen = {vn};
      if (!try_remove(chosen)) throw PreconditionError("graph minus the third special vertex is not 2-connected");
      first = false;
    } else {
      // Candidates in order of smallest id.
      std::vector<std::vector<int>> cands;
      for (std::size_t k = 1; k + 1 < c.size(); ++k) {
        int z = c[k];
        if (!has_removed_nbr(z)) continue;
        if (alive_deg(z) >= 3) {
          cands.push_back({z});
        } else if (alive_deg(z) == 2) {
          // maximal chain of degree-2 contour vertices through z
          std::size_t a = k, b = k;
          while (a > 1 && alive_deg(c[a - 1]) == 2) --a;
          while (b + 2 < c.size() && alive_deg(c[b + 1]) == 2) ++b;
          if (a != k) continue;  // report each chain once, from its left end
          std::vector<int> ch(c.begin() + static_cast<long>(a), c.begin() + static_cast<long>(b) + 1);
          bool all = std::all_of(ch.begin(), ch.end(), has_removed_nbr);
          if (all) cands.push_back(ch);
        }
      }
      std::sort(cands.begin(), cands.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
      });
      for (auto& cand : cands)
        if (try_remove(cand)) {
          chosen = cand;
          break;
        }
      if (chosen.empty()) throw PreconditionError("no peeling order: graph is not 3-connected");
    }
    for (int v : chosen) {
      alive[v] = 0;
      removed[v] = 1;
    }
    left -= static_cast<int>(chosen.size());
    rev.push_back(chosen);
  }
  co.sets.push_back({v1, v2});
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) co.sets.push_back(*it);
  return co;
}

/// Check the three tree conditions (roots at the specials, arborescences,
/// one parent per tree inside the coordinate wedge) and the lattice property.
/// Returns an empty string on success, otherwise the first violation.
inline std::string check_schnyder_wood(const RotationEmbedding& g, const SchnyderWood& w) {
  int n = g.num_vertices();
  auto adj = g.adjacency();
  for (int i = 0; i < 3; ++i) {
    int a = w.special[i];
    if (w.parent[i][a] != -1) return "special vertex has a parent in its own tree";
    for (int v = 0; v < n; ++v) {
      if (v == a) continue;
      int p = w.parent[i][v];
      if (p < 0 || !std::binary_search(adj[v].begin(), adj[v].end(), p))
        return "tree " + std::to_string(i + 1) + ": bad parent at " + std::to_string(v);
      int steps = 0, x = v;
      while (x != a) {
        x = w.parent[i][x];
        if (x < 0 || ++steps > n) return "tree " + std::to_string(i + 1) + " is not an arborescence";
      }
    }
    for (int k = 0; k < 3; ++k)
      if (w.coord[a][k] != (k == i ? w.denominator : 0)) return "special vertex not at a corner";
  }
  for (int v = 0; v < n; ++v) {
    long s = 0;
    for (int k = 0; k < 3; ++k) {
      if (w.coord[v][k] < 0) return "negative coordinate";
      s += w.coord[v][k];
    }
    if (s != w.denominator) return "coordinates of " + std::to_string(v) + " do not sum to 1";
  }
  for (int i = 0; i < 3; ++i) {
    int ip = SchnyderWood::prev(i), in = SchnyderWood::next(i);
    for (int v = 0; v < n; ++v) {
      if (v == w.special[i]) continue;
      int inside = 0, which = -1;
      for (int u : adj[v])
        if (w.coord[u][ip] <= w.coord[v][ip] && w.coord[u][in] <= w.coord[v][in]) {
          ++inside;
          which = u;
        }
      if (inside != 1 || which != w.parent[i][v])
        return "wedge condition fails for tree " + std::to_string(i + 1) + " at vertex " + std::to_string(v);
    }
  }
  return {};
}

/// Schnyder wood with exact lattice coordinates (face counting). The three
/// special vertices must lie on `outer_face`, two of them consecutive on it.
inline SchnyderWood compute_schnyder_wood(const RotationEmbedding& g0, int outer_face, int a1, int a2, int a3) {
  RotationEmbedding g = g0;
  g.normalize_signatures();
  if (!g.all_signatures_positive() || euler_genus(g) != 0) throw PreconditionError("embedding is not planar");
  if (!g.is_simple()) throw PreconditionError("graph is not simple");
  int n = g.num_vertices();
  if (a1 == a2 || a2 == a3 || a1 == a3) throw PreconditionError("special vertices must be distinct");
  FaceTrace ft = trace_faces(g);
  int outer = -1;
  {
    // Face ids may move when vertices are flipped; match by edge set.
    FaceTrace ft0 = trace_faces(g0);
    if (outer_face < 0 || outer_face >= ft0.size()) throw PreconditionError("unknown outer face");
    auto edges_of = [](const std::vector<int>& walk) {
      std::vector<int> es;
      for (int d : walk) es.push_back(edge_of_dart(d));
      std::sort(es.begin(), es.end());
      return es;
    };
    auto want = edges_of(ft0.walks[outer_face]);
    for (int f = 0; f < ft.size() && outer < 0; ++f)
      if (edges_of(ft.walks[f]) == want) outer = f;
    if (outer < 0) throw InvariantViolation("outer face lost after normalization");
  }
  const auto& walk = ft.walks[outer];
  std::vector<int> wv;
  for (int d : walk) wv.push_back(g.tail(d));
  std::array<int, 3> sp{a1, a2, a3};
  for (int a : sp)
    if (std::find(wv.begin(), wv.end(), a) == wv.end()) throw PreconditionError("special vertices not on one face");
  // A dart of the outer walk joining two specials.
  int od = -1, third = -1, after = -1;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    int d = walk[k];
    int u = g.tail(d), x = g.head(d);
    bool su = std::find(sp.begin(), sp.end(), u) != sp.end(), sx = std::find(sp.begin(), sp.end(), x) != sp.end();
    if (su && sx) {
      od = d;
      after = g.head(walk[(k + 1) % walk.size()]);
      for (int a : sp)
        if (a != u && a != x) third = a;
      break;
    }
  }
  if (od < 0) throw PreconditionError("no two special vertices are consecutive on the outer face");
  // Orientation: the face walk of `od` is the outer face.
  int v1 = g.tail(od), v2 = g.head(od), vn = third;
  CanonicalOrder co = canonical_order(g, v1, v2, vn, od, after);
  auto adj = g.adjacency();
  // out[k][v]: k = 0 toward v1, 1 toward v2, 2 toward vn.
  std::array<std::vector<int>, 3> out;
  for (auto& o : out) o.assign(n, -1);
  std::vector<int> contour{v1, v2};
  std::vector<int> rank(n, 0);
  for (std::size_t s = 0; s < co.sets.size(); ++s)
    for (std::size_t k = 0; k < co.sets[s].size(); ++k) rank[co.sets[s][k]] = static_cast<int>(s);
  auto adjacent = [&](int x, int y) { return std::binary_search(adj[x].begin(), adj[x].end(), y); };
  // Contour vertices strictly between l and r become interior. Neighbours
  // of z point to it; the others point along the contour to a neighbour
  // placed later (left one first).
  auto cover = [&](int l, int r, int z) {
    for (int k = l + 1; k < r; ++k) {
      int c = contour[k];
      if (z >= 0 && adjacent(z, c))
        out[2][c] = z;
      else if (rank[contour[k - 1]] > rank[c])
        out[2][c] = contour[k - 1];
      else if (rank[contour[k + 1]] > rank[c])
        out[2][c] = contour[k + 1];
      else
        throw InvariantViolation("covered contour vertex has no later neighbour");
    }
  };
  for (std::size_t s = 1; s < co.sets.size(); ++s) {
    const auto& set = co.sets[s];
    if (set.size() == 1) {
      int z = set[0];
      int l = -1, r = -1;
      for (std::size_t k = 0; k < contour.size(); ++k)
        if (adjacent(z, contour[k])) {
          if (l < 0) l = static_cast<int>(k);
          r = static_cast<int>(k);
        }
      if (l < 0 || l == r) throw InvariantViolation("singleton has fewer than two contour neighbours");
      out[0][z] = contour[l];
      out[1][z] = contour[r];
      cover(l, r, z);
      std::vector<int> nc(contour.begin(), contour.begin() + l + 1);
      nc.push_back(z);
      nc.insert(nc.end(), contour.begin() + r, contour.end());
      contour.swap(nc);
    } else {
      std::vector<int> ch = set;
      auto attach = [&](int z) {
        for (std::size_t k = 0; k < contour.size(); ++k)
          if (adjacent(z, contour[k])) return static_cast<int>(k);
        return -1;
      };
      int l = attach(ch.front()), r = attach(ch.back());
      if (l > r) {
        std::reverse(ch.begin(), ch.end());
        std::swap(l, r);
      }
      if (l < 0 || l == r) throw InvariantViolation("chain does not attach to the contour");
      cover(l, r, -1);
      for (std::size_t k = 0; k < ch.size(); ++k) {
        out[0][ch[k]] = k == 0 ? contour[l] : ch[k - 1];
        out[1][ch[k]] = k + 1 == ch.size() ? contour[r] : ch[k + 1];
      }
      std::vector<int> nc(contour.begin(), contour.begin() + l + 1);
      nc.insert(nc.end(), ch.begin(), ch.end());
      nc.insert(nc.end(), contour.begin() + r, contour.end());
      contour.swap(nc);
    }
  }
  std::size_t top = std::find(contour.begin(), contour.end(), vn) - contour.begin();
  for (std::size_t k = 0; k < contour.size(); ++k) {
    int v = contour[k];
    if (v == vn) continue;
    out[2][v] = k < top ? contour[k + 1] : contour[k - 1];
  }
  out[1][v1] = v2;
  out[0][v2] = v1;
  // Map trees to the caller's labels.
  SchnyderWood w;
  w.special = sp;
  w.outer_face = outer_face;
  std::array<int, 3> roots{v1, v2, vn};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (roots[k] == sp[i]) w.parent[i] = out[k];
  // Coordinates by face counting.
  int f = ft.size();
  w.denominator = f - 1;
  w.coord.assign(n, {0, 0, 0});
  // Outer walk arcs between specials.
  std::vector<int> on_arc(g.num_edges(), -1);  // arc index i: arc avoiding special i
  {
    std::size_t len = walk.size();
    std::size_t start = 0;
    while (std::find(sp.begin(), sp.end(), g.tail(walk[start])) == sp.end()) ++start;
    std::vector<int> touched;
    int from = g.tail(walk[start]);
    for (std::size_t s = 0; s < len; ++s) {
      int d = walk[(start + s) % len];
      touched.push_back(edge_of_dart(d));
      int h = g.head(d);
      if (std::find(sp.begin(), sp.end(), h) != sp.end()) {
        int avoid = -1;
        for (int i = 0; i < 3; ++i)
          if (sp[i] != from && sp[i] != h) avoid = i;
        for (int e : touched) on_arc[e] = avoid;
        touched.clear();
        from = h;
      }
    }
  }
  std::vector<int> wall(g.num_edges(), -1), seen(f, -1);
  int stamp = 0;
  auto edge_between = [&](int x, int y) {
    for (int d : g.rotation(x))
      if (g.head(d) == y) return edge_of_dart(d);
    return -1;
  };
  for (int v = 0; v < n; ++v) {
    int sv = -1;
    for (int i = 0; i < 3; ++i)
      if (sp[i] == v) sv = i;
    if (sv >= 0) {
      w.coord[v][sv] = w.denominator;
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      ++stamp;
      for (int j : {SchnyderWood::prev(i), SchnyderWood::next(i)})
        for (int x = v; x != sp[j]; x = w.parent[j][x]) wall[edge_between(x, w.parent[j][x])] = stamp;
      std::vector<int> stack;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (on_arc[e] != i || wall[e] == stamp) continue;
        for (int b = 0; b < 2; ++b) {
          int h = ft.face_of_flag[flag_of(2 * e, b)];
          if (h != outer && seen[h] != stamp) {
            seen[h] = stamp;
            stack.push_back(h);
          }
        }
      }
      long count = 0;
      while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        ++count;
        for (int d : ft.walks[h]) {
          int e = edge_of_dart(d);
          if (wall[e] == stamp) continue;
          for (int b = 0; b < 2; ++b) {
            int h2 = ft.face_of_flag[flag_of(d, b)];
            if (h2 != outer && seen[h2] != stamp) {
              seen[h2] = stamp;
              stack.push_back(h2);
            }
          }
        }
      }
      w.coord[v][i] = count;
    }
  }
  std::string err = check_schnyder_wood(g, w);
  if (!err.empty()) throw InvariantViolation("Schnyder wood check failed: " + err);
  return w;
}

/// Choose an outer face and specials: the face of maximum size that has
/// two consecutive non-root vertices if possible, preferring non-roots.
struct WoodChoice {
  int face;
  int a1, a2, a3;
};

inline WoodChoice choose_specials(const RotationEmbedding& g, const RootSet& roots) {
  FaceTrace ft = trace_faces(g);
  WoodChoice best{-1, -1, -1, -1};
  int best_score = -1;
  for (int f = 0; f < ft.size(); ++f) {
    auto wv = ft.walk_vertices(g, f);
    int len = static_cast<int>(wv.size());
    for (int k = 0; k < len; ++k) {
      int x = wv[k], y = wv[(k + 1) % len];
      for (int m = 0; m < len; ++m) {
        int z = wv[m];
        if (z == x || z == y) continue;
        int score = !roots.contains(x) + !roots.contains(y) + !roots.contains(z);
        if (score > best_score) {
          best_score = score;
          best = {f, x, y, z};
        }
      }
    }
    if (best_score == 3) break;
  }
  return best;
}

enum class Order { less, greater, incomparable, equal };

/// u <=_i v iff u == v or u_{i-1} < v_{i-1} and u_{i+1} < v_{i+1}.
inline Order dominance(const SchnyderWood& w, int u, int v, int i) {
  if (u == v) return Order::equal;
  int p = SchnyderWood::prev(i), q = SchnyderWood::next(i);
  const auto &cu = w.coord[u], &cv = w.coord[v];
  if (cu[p] < cv[p] && cu[q] < cv[q]) return Order::less;
  if (cv[p] < cu[p] && cv[q] < cu[q]) return Order::greater;
  return Order::incomparable;
}

/// Antichain partition by longest-chain height, plus one longest chain.
struct MirskyPartition {
  std::vector<std::vector<int>> antichains;  // by height, 0 = minimal elements
  std::vector<int> chain;                    // increasing
};

inline MirskyPartition mirsky_partition(const SchnyderWood& w, int i, const std::vector<int>& ground) {
  int m = static_cast<int>(ground.size());
  std::vector<int> order(ground.begin(), ground.end());
  // Sorting by the sum of the two compared coordinates is a linear extension.
  int p = SchnyderWood::prev(i), q = SchnyderWood::next(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    long sa = w.coord[a][p] + w.coord[a][q], sb = w.coord[b][p] + w.coord[b][q];
    return sa != sb ? sa < sb : a < b;
  });
  std::vector<int> height(m, 1), pred(m, -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < x; ++y)
      if (dominance(w, order[y], order[x], i) == Order::less && height[y] + 1 > height[x]) {
        height[x] = height[y] + 1;
        pred[x] = y;
      }
  MirskyPartition out;
  int h = m ? *std::max_element(height.begin(), height.end()) : 0;
  out.antichains.assign(h, {});
  for (int x = 0; x < m; ++x) out.antichains[height[x] - 1].push_back(order[x]);
  for (auto& a : out.antichains) std::sort(a.begin(), a.end());
  if (m) {
    int x = static_cast<int>(std::max_element(height.begin(), height.end()) - height.begin());
    for (; x >= 0; x = pred[x]) out.chain.push_back(order[x]);
    std::reverse(out.chain.begin(), out.chain.end());
  }
  return out;
}

/// Vertices of S together with all their ancestors in tree i.
inline std::vector<int> ancestors_subtree(const SchnyderWood& w, int i, const std::vector<int>& S) {
  int n = static_cast<int>(w.parent[i].size());
  std::vector<char> in(n, 0);
  for (int s : S)
    for (int x = s; x >= 0 && !in[x]; x = w.parent[i][x]) in[x] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace facecover

#endif  // FACECOVER_SCHNYDER_HPP
