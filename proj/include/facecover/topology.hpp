#ifndef FACECOVER_TOPOLOGY_HPP
#define FACECOVER_TOPOLOGY_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "facecover/build.hpp"
#include "facecover/cut.hpp"
#include "facecover/embedding.hpp"
#include "facecover/faces.hpp"
#include "facecover/gem.hpp"
#include "facecover/graph.hpp"

namespace facecover {

/// A surface with boundary given by a set of faces of a host embedding.
struct Region {
  std::vector<int> faces;                    // sorted face ids
  std::vector<std::vector<int>> boundary;    // cuffs as darts of the host, region on their side
  std::vector<std::vector<int>> cuff_vertices;
  int euler_genus = 0;
  bool orientable = true;
  int cuffs = 0;

  SurfaceType type() const { return {euler_genus, orientable, cuffs}; }
  bool contains(int f) const { return std::binary_search(faces.begin(), faces.end(), f); }
};

/// Classify the closure of a face set. Throws PreconditionError when the
/// closure is disconnected or is not a surface with boundary contoured by
/// cycles (two boundary arcs pinching at a vertex).
inline Region classify_region(const RotationEmbedding& g, const FaceTrace& ft, std::vector<int> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty()) throw PreconditionError("empty region");
  std::vector<char> in(ft.size(), 0);
  for (int f : faces) {
    if (f < 0 || f >= ft.size()) throw PreconditionError("region names an unknown face");
    in[f] = 1;
  }
  Gem gem = to_gem(g);
  int n0 = gem.size();
  std::vector<char> marked(n0, 0);
  for (int x = 0; x < n0; ++x) {
    if (!in[ft.face_of_flag[x]]) continue;
    if (!in[ft.face_of_flag[gem.a2[x]]]) marked[x] = 1;
  }
  std::vector<char> keep(n0, 0);
  for (int x = 0; x < n0; ++x) keep[x] = in[ft.face_of_flag[x]];
  // Re-point a2 of boundary flags before killing outside flags.
  auto star = detail::cap_marked(gem, marked);
  for (int x = 0; x < n0; ++x)
    if (!keep[x]) gem.kill(x);
  gem.check();
  int ncomp = 0;
  gem_components(gem, &ncomp);
  if (ncomp != 1) throw PreconditionError("region closure is not connected");
  int nv = 0;
  auto vl = orbits(gem, 1, 2, &nv);
  std::vector<int> copy_of(g.num_vertices(), -1);
  for (int x = 0; x < n0; ++x) {
    if (!keep[x]) continue;
    int v = g.tail(dart_of_flag(x));
    if (copy_of[v] < 0)
      copy_of[v] = vl[x];
    else if (copy_of[v] != vl[x])
      throw PreconditionError("region pinches at vertex " + std::to_string(v));
  }
  Region r;
  r.faces = faces;
  auto t = classify_components(gem)[0];
  r.euler_genus = t.euler_genus;
  r.orientable = t.orientable;
  r.cuffs = t.cuffs;
  // Boundary cycles from cap faces.
  std::vector<char> seen(gem.size(), 0);
  for (int x = 0; x < n0; ++x) {
    if (!marked[x] || seen[star[x]]) continue;
    std::vector<int> darts, verts;
    int y = star[x];
    do {
      seen[y] = 1;
      seen[gem.a0[y]] = 1;
      int base = gem.a2[y];
      darts.push_back(dart_of_flag(base));
      verts.push_back(g.tail(dart_of_flag(base)));
      y = gem.a1[gem.a0[y]];
    } while (y != star[x]);
    r.boundary.push_back(darts);
    r.cuff_vertices.push_back(verts);
  }
  return r;
}

inline Region classify_region(const RotationEmbedding& g, const std::vector<int>& faces) {
  return classify_region(g, trace_faces(g), faces);
}

/// Nested pair test: inner lies in the interior of outer and every component
/// of outer minus the interior of inner is a sphere with boundary sharing
/// exactly one cuff with inner.
inline bool is_nested_pair(const RotationEmbedding& g, const FaceTrace& ft, const std::vector<int>& inner_faces,
                           const std::vector<int>& outer_faces) {
  Region inner, outer;
  try {
    inner = classify_region(g, ft, inner_faces);
    outer = classify_region(g, ft, outer_faces);
  } catch (const PreconditionError&) {
    return false;
  }
  for (int f : inner.faces)
    if (!outer.contains(f)) return false;
  if (inner.cuffs == 0) return inner.faces == outer.faces;
  auto at = ft.faces_at_vertices(g);
  for (int f : inner.faces)
    for (int v : ft.vertex_set(g, f))
      for (int h : at[v])
        if (!outer.contains(h)) return false;
  std::vector<int> rest;
  for (int f : outer.faces)
    if (!inner.contains(f)) rest.push_back(f);
  if (rest.empty()) return false;
  // Components of the closed remainder, faces linked through shared vertices.
  std::map<int, int> idx;
  for (std::size_t k = 0; k < rest.size(); ++k) idx[rest[k]] = static_cast<int>(k);
  std::vector<int> parent(rest.size());
  for (std::size_t k = 0; k < rest.size(); ++k) parent[k] = static_cast<int>(k);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    int first = -1;
    for (int h : at[v]) {
      auto it = idx.find(h);
      if (it == idx.end()) continue;
      if (first < 0)
        first = it->second;
      else
        parent[find(it->second)] = find(first);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (std::size_t k = 0; k < rest.size(); ++k) comps[find(static_cast<int>(k))].push_back(rest[k]);
  for (auto& [root, fs] : comps) {
    Region c;
    try {
      c = classify_region(g, ft, fs);
    } catch (const PreconditionError&) {
      return false;
    }
    if (c.euler_genus != 0) return false;
    int shared = 0;
    for (const auto& cyc : c.boundary) {
      int d = cyc.front();
      int side = ft.face_of_flag[flag_of(d, 0)];
      int other = ft.face_of_flag[flag_of(d, 1)];
      int across = c.contains(side) ? other : side;
      if (c.contains(side) && c.contains(other)) across = -1;
      if (across >= 0 && inner.contains(across)) ++shared;
    }
    if (shared != 1) return false;
  }
  return true;
}

inline bool is_nested_pair(const RotationEmbedding& g, const std::vector<int>& inner, const std::vector<int>& outer) {
  return is_nested_pair(g, trace_faces(g), inner, outer);
}

/// Direct polyhedrality check: simple graph, every facial walk is a cycle,
/// and two facial cycles meet in nothing, one vertex, or one common edge.
inline bool check_polyhedral(const RotationEmbedding& g) {
  if (!g.is_simple() || g.num_vertices() < 4 || !g.is_connected()) return false;
  FaceTrace ft = trace_faces(g);
  std::vector<std::vector<int>> vs(ft.size());
  std::vector<std::set<int>> es(ft.size());
  for (int f = 0; f < ft.size(); ++f) {
    vs[f] = ft.vertex_set(g, f);
    if (vs[f].size() != ft.walks[f].size() || vs[f].size() < 3) return false;
    for (int d : ft.walks[f]) es[f].insert(edge_of_dart(d));
  }
  auto at = ft.faces_at_vertices(g);
  for (int f = 0; f < ft.size(); ++f) {
    std::map<int, std::vector<int>> common;  // other face -> shared vertices
    for (int v : vs[f])
      for (int h : at[v])
        if (h > f) common[h].push_back(v);
    for (auto& [h, shared] : common) {
      if (shared.size() == 1) continue;
      if (shared.size() > 2) return false;
      bool edge = false;
      for (int e : es[f])
        if (es[h].count(e)) {
          const Edge& ed = g.edge(e);
          edge = (ed.u == shared[0] && ed.v == shared[1]) || (ed.u == shared[1] && ed.v == shared[0]);
        }
      if (!edge) return false;
    }
  }
  return true;
}

/// Decides contractibility of cycles of a fixed embedding by growing both
/// sides of the cycle through the dual at once. A side that closes off
/// first is classified by its Euler characteristic; the other side by
/// complement. Faces in `blocked` (cuffs) never belong to a disk.
class CycleTester {
 public:
  explicit CycleTester(const RotationEmbedding& g, std::vector<int> blocked = {})
      : g_(g), ft_(trace_faces(g)), mark_(ft_.size(), {0, 0}), blocked_(ft_.size(), 0) {
    for (int f : blocked) blocked_[f] = 1;
    chi_total_ = g.num_vertices() - g.num_edges() + ft_.size();
    edge_mark_.assign(g.num_edges(), 0);
    vert_mark_.assign(g.num_vertices(), 0);
    blocked_total_ = static_cast<int>(std::count(blocked_.begin(), blocked_.end(), 1));
  }

  const FaceTrace& faces() const { return ft_; }
  const RotationEmbedding& graph() const { return g_; }

  /// Cycle given as a dart sequence (validated).
  bool contractible(const std::vector<int>& darts) {
    cycle_vertices(g_, darts);
    ++stamp_;
    for (int d : darts) edge_mark_[edge_of_dart(d)] = stamp_;
    // Seeds: the faces on the two sides of the first dart.
    int d0 = darts.front();
    int fa = ft_.face_of_flag[flag_of(d0, 0)];
    int fb = ft_.face_of_flag[flag_of(d0, 1)];
    if (fa == fb) return false;  // both sides are one face: nonseparating
    std::deque<int> qa{fa}, qb{fb};
    std::vector<int> sa{fa}, sb{fb};
    set_mark(fa, 1);
    set_mark(fb, 2);
    std::size_t ia = 0, ib = 0;
    while (true) {
      bool a_done = ia == sa.size(), b_done = ib == sb.size();
      if (a_done || b_done) {
        const auto& side = a_done ? sa : sb;
        bool blocked_side = false;
        int nb = 0;
        for (int f : side) nb += blocked_[f];
        blocked_side = nb > 0;
        int chi = chi_of(side, darts);
        if (chi == 1 && !blocked_side) return true;
        int chi_other = chi_total_ - chi;
        return chi_other == 1 && nb == blocked_total_;
      }
      // Expand the smaller frontier by one face.
      bool grow_a = (sa.size() - ia) <= (sb.size() - ib);
      auto& s = grow_a ? sa : sb;
      auto& i = grow_a ? ia : ib;
      int me = grow_a ? 1 : 2;
      int f = s[i++];
      for (int d : ft_.walks[f]) {
        if (edge_mark_[edge_of_dart(d)] == stamp_) continue;
        for (int b = 0; b < 2; ++b) {
          int h = ft_.face_of_flag[flag_of(d, b)];
          int m = get_mark(h);
          if (m == 0) {
            set_mark(h, me);
            s.push_back(h);
          } else if (m != me) {
            return false;  // both sides connected: nonseparating
          }
        }
      }
    }
  }

 private:
  int get_mark(int f) const { return mark_[f].first == stamp_ ? mark_[f].second : 0; }
  void set_mark(int f, int m) { mark_[f] = {stamp_, m}; }

  int chi_of(const std::vector<int>& side, const std::vector<int>&) {
    ++vstamp_;
    int V = 0, E = 0;
    for (int f : side)
      for (int d : ft_.walks[f]) {
        int e = edge_of_dart(d);
        if (edge_seen_.size() < edge_mark_.size()) edge_seen_.assign(edge_mark_.size(), 0);
        if (edge_seen_[e] != vstamp_) {
          edge_seen_[e] = vstamp_;
          ++E;
        }
        int v = g_.tail(d);
        if (vert_mark_[v] != vstamp_) {
          vert_mark_[v] = vstamp_;
          ++V;
        }
      }
    return V - E + static_cast<int>(side.size());
  }

  const RotationEmbedding& g_;
  FaceTrace ft_;
  std::vector<std::pair<int, int>> mark_;
  std::vector<char> blocked_;
  std::vector<int> edge_mark_, vert_mark_, edge_seen_;
  int stamp_ = 0, vstamp_ = 0;
  int chi_total_ = 0, blocked_total_ = 0;
};

/// Marker for the face-width of a sphere embedding.
struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

struct FaceWidth {
  std::variant<Infinity, int> value;
  std::vector<int> noose;  // alternating vertex / face ids: v0 f0 v1 f1 ...
  bool infinite() const { return std::holds_alternative<Infinity>(value); }
  int finite() const { return std::get<int>(value); }
};

/// Radial graph: vertices 0..V-1 are the graph's vertices, V+f the faces;
/// one edge per corner. Embedded in the same surface.
struct RadialGraph {
  RotationEmbedding graph;
  int num_graph_vertices = 0;
};

inline RadialGraph radial_graph(const RotationEmbedding& g, const FaceTrace& ft) {
  Gem gem = to_gem(g);
  int nv = g.num_vertices();
  auto corner = [&](int x) { return std::min(x, gem.a1[x]); };
  std::vector<std::vector<int>> faces, labels;
  for (int e = 0; e < g.num_edges(); ++e) {
    int x = flag_of(2 * e, 0);
    int ax = gem.a0[x], a2ax = gem.a2[ax], a2x = gem.a2[x];
    faces.push_back({g.tail(dart_of_flag(x)), nv + ft.face_of_flag[x], g.tail(dart_of_flag(ax)),
                     nv + ft.face_of_flag[a2ax]});
    labels.push_back({corner(x), corner(ax), corner(a2ax), corner(a2x)});
  }
  return {from_faces(nv + ft.size(), faces, labels), nv};
}

namespace detail {
// Shortest cycle through `s` that the predicate rejects as contractible,
// among cycles formed by two BFS-tree paths and one edge.
template <class Accept>
std::vector<int> shortest_cycle_through(const RotationEmbedding& h, int s, int bound, const std::vector<char>& usable,
                                        Accept&& noncontractible) {
  int n = h.num_vertices();
  std::vector<int> dist(n, -1), pdart(n, -1), branch(n, -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : h.rotation(v)) {
      int w = h.head(d);
      if (!usable[w] || dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      pdart[w] = d;
      branch[w] = v == s ? w : branch[v];
      q.push(w);
    }
  }
  struct Cand {
    int len, edge;
  };
  std::vector<Cand> cands;
  for (int e = 0; e < h.num_edges(); ++e) {
    int x = h.edge(e).u, y = h.edge(e).v;
    if (x == y || dist[x] < 0 || dist[y] < 0) continue;
    if (pdart[x] >= 0 && edge_of_dart(pdart[x]) == e) continue;
    if (pdart[y] >= 0 && edge_of_dart(pdart[y]) == e) continue;
    if (x != s && y != s && branch[x] == branch[y]) continue;
    int len = dist[x] + dist[y] + 1;
    if (len < bound) cands.push_back({len, e});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.len < b.len; });
  for (const Cand& c : cands) {
    if (c.len >= bound) break;
    int x = h.edge(c.edge).u, y = h.edge(c.edge).v;
    std::vector<int> up;  // s -> x
    for (int v = x; v != s; v = h.tail(pdart[v])) up.push_back(pdart[v]);
    std::reverse(up.begin(), up.end());
    up.push_back(dart_of_edge(c.edge, true));
    for (int v = y; v != s; v = h.tail(pdart[v])) up.push_back(opposite(pdart[v]));
    if (noncontractible(up)) return up;
  }
  return {};
}
}  // namespace detail

/// Face-width via shortest noncontractible cycles of the radial graph.
inline FaceWidth face_width(const RotationEmbedding& g) {
  FaceWidth out;
  if (euler_genus(g) == 0) {
    out.value = Infinity{};
    return out;
  }
  FaceTrace ft = trace_faces(g);
  RadialGraph rg = radial_graph(g, ft);
  const RotationEmbedding& h = rg.graph;
  CycleTester tester(h);
  std::vector<char> usable(h.num_vertices(), 1);
  int best = h.num_vertices() + 1;
  std::vector<int> best_cycle;
  for (int s = 0; s < rg.num_graph_vertices; ++s) {
    auto c = detail::shortest_cycle_through(h, s, best, usable,
                                            [&](const std::vector<int>& cyc) { return !tester.contractible(cyc); });
    if (!c.empty() && static_cast<int>(c.size()) < best) {
      best = static_cast<int>(c.size());
      best_cycle = c;
    }
  }
  if (best_cycle.empty()) throw InvariantViolation("no noncontractible radial cycle on a non-sphere surface");
  out.value = best / 2;
  for (int d : best_cycle) {
    int v = h.tail(d);
    out.noose.push_back(v < rg.num_graph_vertices ? v : v - rg.num_graph_vertices);
  }
  // Start the noose at a graph vertex.
  if (h.tail(best_cycle.front()) >= rg.num_graph_vertices) std::rotate(out.noose.begin(), out.noose.begin() + 1, out.noose.end());
  return out;
}

/// Shortest noncontractible cycle of the graph itself (as darts), avoiding
/// the vertices with avoid[v] != 0; cuff faces are treated as holes.
/// Returns an empty vector when none exists.
inline std::vector<int> shortest_noncontractible_cycle(const RotationEmbedding& g, const std::vector<int>& cuff_faces,
                                                       const std::vector<char>& avoid,
                                                       bool require_nonseparating = false) {
  CycleTester tester(g, cuff_faces);
  std::vector<char> usable(g.num_vertices(), 1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!avoid.empty() && avoid[v]) usable[v] = 0;
  int best = g.num_vertices() + 1;
  std::vector<int> best_cycle;
  CutSurface base;
  bool have_base = false;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (!usable[s]) continue;
    auto c = detail::shortest_cycle_through(g, s, best, usable, [&](const std::vector<int>& cyc) {
      if (tester.contractible(cyc)) return false;
      if (!require_nonseparating) return true;
      if (!have_base) {
        base = uncut(g);
        base.cap_faces = cuff_faces;
        std::sort(base.cap_faces.begin(), base.cap_faces.end());
        base.cap_source.assign(base.cap_faces.size(), -1);
        have_base = true;
      }
      CutSurface cs = cut_along(base, {cyc});
      return classify_cut(cs).size() == 1;
    });
    if (!c.empty() && static_cast<int>(c.size()) < best) {
      best = static_cast<int>(c.size());
      best_cycle = c;
    }
  }
  return best_cycle;
}

}  // namespace facecover

#endif  // FACECOVER_TOPOLOGY_HPP
