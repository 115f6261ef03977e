#ifndef FACECOVER_PIPELINE_HPP
#define FACECOVER_PIPELINE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "facecover/cut.hpp"
#include "facecover/dichotomy.hpp"
#include "facecover/faces.hpp"
#include "facecover/gem.hpp"
#include "facecover/generators.hpp"
#include "facecover/graph.hpp"
#include "facecover/model.hpp"
#include "facecover/setcover.hpp"
#include "facecover/topology.hpp"

namespace facecover {

/// A piece of a surface cover: a region and the protective region around it.
struct CoverPiece {
  std::vector<int> S;  // nest-tree vertices, empty for the projective route
  Region inner;
  Region outer;
  std::string kind;   // "sphere" or "projective"
  std::string label;  // A1, A2, B, or K4-face index
};

/// Minor of G living in the capped outer region: inner part kept, each
/// component of the remaining outer vertices contracted to a single vertex.
struct PieceMinor {
  RotationEmbedding graph;             // roots = roots of G inside the inner region
  std::vector<std::vector<int>> lift;  // minor vertex -> vertices of G it stands for
  std::vector<int> phi;                // minor face -> face of G
  int contracted = 0;                  // number of component vertices
};

namespace detail {

inline std::vector<int> vertices_of_faces(const RotationEmbedding& g, const FaceTrace& ft, const std::vector<int>& faces) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int f : faces)
    for (int d : ft.walks[f]) in[g.tail(d)] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace detail

/// Contract the part of the outer region that lies outside the inner one.
/// Throws PreconditionError when the minor is not simple and 3-connected or
/// a contracted vertex has degree below 3.
inline PieceMinor contract_outside(const RotationEmbedding& g, const FaceTrace& ft, const Region& inner,
                                   const Region& outer) {
  for (int f : inner.faces)
    if (!outer.contains(f)) throw PreconditionError("inner region is not inside the outer one");
  int n = g.num_vertices();
  std::vector<char> in_outer(ft.size(), 0);
  for (int f : outer.faces) in_outer[f] = 1;
  std::vector<char> in_pi(n, 0), in_plus(n, 0);
  for (int v : detail::vertices_of_faces(g, ft, inner.faces)) in_pi[v] = 1;
  for (int v : detail::vertices_of_faces(g, ft, outer.faces)) in_plus[v] = 1;

  Gem gem = to_gem(g);
  int n0 = gem.size();
  std::vector<char> marked(n0, 0), keep(n0, 0);
  for (int x = 0; x < n0; ++x) {
    keep[x] = in_outer[ft.face_of_flag[x]];
    if (keep[x] && !in_outer[ft.face_of_flag[gem.a2[x]]]) marked[x] = 1;
  }
  detail::cap_marked(gem, marked);
  for (int x = 0; x < n0; ++x)
    if (!keep[x]) gem.kill(x);

  auto edge_flag = [&](int e) {
    for (int b = 0; b < 4; ++b)
      if (gem.alive(4 * e + b)) return 4 * e + b;
    return -1;
  };
  // Components of the outside vertices through edges still present.
  std::vector<int> comp(n, -1);
  int nc = 0;
  std::vector<std::vector<int>> comp_vertices;
  std::vector<char> tree_edge(g.num_edges(), 0);
  for (int s = 0; s < n; ++s) {
    if (!in_plus[s] || in_pi[s] || comp[s] >= 0) continue;
    comp_vertices.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = nc;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp_vertices.back().push_back(v);
      for (int d : g.rotation(v)) {
        int w = g.head(d), e = edge_of_dart(d);
        if (edge_flag(e) < 0 || !in_plus[w] || in_pi[w] || comp[w] >= 0) continue;
        comp[w] = nc;
        tree_edge[e] = 1;
        q.push(w);
      }
    }
    ++nc;
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (tree_edge[e]) contract_edge(gem, edge_flag(e));
  // Loops inside a component, then duplicate edges to the same inner vertex.
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.num_edges(); ++e) {
    int x = edge_flag(e);
    if (x < 0) continue;
    int u = g.edge(e).u, v = g.edge(e).v;
    if (comp[u] >= 0 && comp[v] >= 0) {
      if (comp[u] != comp[v]) throw InvariantViolation("two outside components are adjacent");
      delete_edge(gem, x);
      continue;
    }
    if (comp[u] < 0 && comp[v] < 0) continue;
    int c = comp[u] >= 0 ? comp[u] : comp[v];
    int a = comp[u] >= 0 ? v : u;
    if (!seen.insert({c, a}).second) delete_edge(gem, x);
  }
  GemEmbedding ge = to_embedding(gem);
  PieceMinor out;
  out.contracted = nc;
  RotationEmbedding& h = ge.embedding;
  int hn = h.num_vertices();
  out.lift.assign(hn, {});
  const int none = -(nc + 1);
  std::vector<int> g_of(hn, none);  // G vertex, or -(1 + component)
  for (int v = 0; v < hn; ++v) {
    for (int d : h.rotation(v)) {
      for (int b = 0; b < 2 && g_of[v] == none; ++b) {
        int x = ge.flag_to_gem[flag_of(d, b)];
        if (x < 0 || x >= n0) continue;
        int gv = g.tail(dart_of_flag(x));
        g_of[v] = comp[gv] >= 0 ? -(1 + comp[gv]) : gv;
      }
      if (g_of[v] != none) break;
    }
    if (g_of[v] == none) throw InvariantViolation("minor vertex without origin");
    out.lift[v] = g_of[v] >= 0 ? std::vector<int>{g_of[v]} : comp_vertices[-(1 + g_of[v])];
  }
  std::vector<int> roots;
  for (int v = 0; v < hn; ++v)
    if (g_of[v] >= 0 && g.roots().contains(g_of[v])) roots.push_back(v);
  h.set_roots(RootSet(roots));
  if (!h.is_simple()) throw PreconditionError("contracted minor is not simple");
  for (int v = 0; v < hn; ++v)
    if (g_of[v] < 0 && static_cast<int>(h.neighbors(v).size()) < 3)
      throw PreconditionError("contracted vertex has degree below 3");
  if (!is_k_connected(h.adjacency(), 3)) throw PreconditionError("contracted minor is not 3-connected");
  // phi: a face of G meeting the inner region in the same vertices.
  FaceTrace fh = trace_faces(h);
  auto at = ft.faces_at_vertices(g);
  out.phi.assign(fh.size(), -1);
  for (int f = 0; f < fh.size(); ++f) {
    std::vector<int> p;
    for (int v : fh.vertex_set(h, f))
      if (g_of[v] >= 0) p.push_back(g_of[v]);
    std::sort(p.begin(), p.end());
    if (p.empty()) throw InvariantViolation("minor face without inner vertices");
    for (int cand : at[p.front()]) {
      if (!in_outer[cand]) continue;
      std::vector<int> q;
      for (int v : ft.vertex_set(g, cand))
        if (in_pi[v]) q.push_back(v);
      if (q == p) {
        out.phi[f] = cand;
        break;
      }
    }
    if (out.phi[f] < 0) throw InvariantViolation("no face of G matches minor face " + std::to_string(f));
  }
  out.graph = std::move(h);
  return out;
}

/// Images in G of a face cover of the minor.
inline std::vector<int> lift_cover(const PieceMinor& m, const FaceCover& c) {
  std::vector<int> out;
  for (int f : c.faces) {
    if (f < 0 || f >= static_cast<int>(m.phi.size())) throw PreconditionError("cover names an unknown minor face");
    out.push_back(m.phi[f]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Branch sets of a minor's model expanded to vertices of G.
inline RootedK2tModel lift_model(const PieceMinor& m, const RootedK2tModel& model) {
  auto expand = [&](const std::vector<int>& set) {
    std::vector<int> out;
    for (int v : set) out.insert(out.end(), m.lift[v].begin(), m.lift[v].end());
    std::sort(out.begin(), out.end());
    return out;
  };
  RootedK2tModel r;
  r.centers = {expand(model.centers[0]), expand(model.centers[1])};
  for (auto& s : model.satellites) r.satellites.push_back(expand(s));
  return r;
}

/// Three disk pieces from the faces of a cellular K4-subdivision of the
/// projective plane and their one-layer protective disks.
inline std::vector<CoverPiece> projective_cover(const RotationEmbedding& g, const FaceTrace& ft,
                                                const ProjectiveHint& hint) {
  if (euler_genus(g) != 1 || is_orientable(g)) throw PreconditionError("projective route needs a projective-plane embedding");
  if (hint.inner_faces.size() != 3 || hint.outer_faces.size() != 3)
    throw PreconditionError("no K4-subdivision hint with three faces");
  std::vector<char> hit(ft.size(), 0);
  std::vector<CoverPiece> out;
  for (int i = 0; i < 3; ++i) {
    CoverPiece p;
    p.inner = classify_region(g, ft, hint.inner_faces[i]);
    p.outer = classify_region(g, ft, hint.outer_faces[i]);
    if (p.inner.euler_genus != 0 || p.inner.cuffs != 1 || p.outer.euler_genus != 0 || p.outer.cuffs != 1)
      throw PreconditionError("hint face " + std::to_string(i) + " does not give two disks");
    if (!is_nested_pair(g, ft, p.inner.faces, p.outer.faces))
      throw PreconditionError("hint face " + std::to_string(i) + " is not protected by its outer disk");
    p.kind = "sphere";
    p.label = "K4 face " + std::to_string(i + 1);
    for (int f : p.inner.faces) hit[f] = 1;
    out.push_back(std::move(p));
  }
  if (std::count(hit.begin(), hit.end(), 1) != ft.size()) throw PreconditionError("hint faces do not cover the surface");
  return out;
}

/// Disjoint cycles whose removal leaves a sphere with boundary.
struct Planarization {
  CutSurface cut;
  std::vector<std::vector<int>> cycles;  // vertices of G
  std::vector<char> one_sided;
  std::vector<int> cuff_faces;   // cap face ids of the cut graph
  std::vector<int> cuff_cycle;   // index into cycles per cuff
  std::vector<int> face_origin;  // cut-graph face -> face of G, -1 on caps
};

/// Cut along shortest noncontractible cycles that avoid earlier cuts until
/// the cut graph is a sphere with boundary. Throws PreconditionError on a
/// plane input or when no further disjoint cycle exists.
inline Planarization planarize(const RotationEmbedding& g) {
  int eg = euler_genus(g);
  if (eg == 0) throw PreconditionError("embedding is already planar");
  Planarization p;
  p.cut = uncut(g);
  for (int round = 0; round < eg; ++round) {
    auto types = classify_cut(p.cut);
    if (types.size() == 1 && types[0].euler_genus == 0) break;
    const RotationEmbedding& h = p.cut.graph;
    FaceTrace ft = trace_faces(h);
    std::vector<char> avoid(h.num_vertices(), 0);
    for (int f : p.cut.cap_faces)
      for (int d : ft.walks[f]) avoid[h.tail(d)] = 1;
    auto cyc = shortest_noncontractible_cycle(h, p.cut.cap_faces, avoid, true);
    if (cyc.empty()) throw PreconditionError("no noncontractible cycle disjoint from earlier cuts");
    std::vector<int> vs;
    for (int d : cyc) vs.push_back(p.cut.vertex_origin[h.tail(d)]);
    p.cut = cut_along(p.cut, {cyc});
    p.cycles.push_back(vs);
  }
  auto types = classify_cut(p.cut);
  if (types.size() != 1 || types[0].euler_genus != 0) throw PreconditionError("cutting did not reach a sphere with boundary");
  p.cuff_faces = p.cut.cap_faces;
  p.cuff_cycle = p.cut.cap_source;
  p.one_sided.assign(p.cycles.size(), 0);
  for (std::size_t c = 0; c < p.cycles.size(); ++c)
    p.one_sided[c] = std::count(p.cuff_cycle.begin(), p.cuff_cycle.end(), static_cast<int>(c)) == 1;
  const RotationEmbedding& h = p.cut.graph;
  FaceTrace ft = trace_faces(h), fg = trace_faces(g);
  p.face_origin.assign(ft.size(), -1);
  for (int x = 0; x < h.num_flags(); ++x) {
    int o = p.cut.flag_origin[x];
    if (o >= 0 && !p.cut.is_cap_face(ft.face_of_flag[x])) p.face_origin[ft.face_of_flag[x]] = fg.face_of_flag[o];
  }
  return p;
}

/// Nested disks around each cuff of the cut graph. disks[i][j] is the face
/// set of the j-th disk around cuff i (j = 0 is the cap itself) and
/// cycles[i][j] the vertices of its boundary.
struct NestSystem {
  std::vector<std::vector<std::vector<int>>> disks;
  std::vector<std::vector<std::vector<int>>> cycles;
  int depth = 0;
  int requested = 0;
  std::string stop_reason;
};

/// Grow all nests in rounds: the next disk is the previous one plus every
/// face meeting it, with enclosed holes filled. A round that would pinch a
/// disk, touch another nest or swallow the rest of the surface is dropped.
inline NestSystem find_nests(const Planarization& p, int depth_request) {
  const RotationEmbedding& h = p.cut.graph;
  FaceTrace ft = trace_faces(h);
  int nf = ft.size();
  int k = static_cast<int>(p.cuff_faces.size());
  auto at = ft.faces_at_vertices(h);
  std::vector<std::vector<int>> face_nbrs(nf);
  for (int e = 0; e < h.num_edges(); ++e) {
    auto [a, b] = ft.faces_of_edge(e);
    if (a != b) {
      face_nbrs[a].push_back(b);
      face_nbrs[b].push_back(a);
    }
  }
  NestSystem ns;
  ns.requested = depth_request;
  ns.disks.assign(k, {});
  ns.cycles.assign(k, {});
  std::vector<std::vector<char>> in(k, std::vector<char>(nf, 0));
  for (int i = 0; i < k; ++i) {
    in[i][p.cuff_faces[i]] = 1;
    ns.disks[i].push_back({p.cuff_faces[i]});
    std::vector<int> cyc;
    for (int d : ft.walks[p.cuff_faces[i]]) cyc.push_back(h.tail(d));
    ns.cycles[i].push_back(cyc);
  }
  while (ns.depth < depth_request) {
    std::vector<std::vector<char>> next = in;
    std::vector<Region> regions(k);
    std::string why;
    for (int i = 0; i < k && why.empty(); ++i) {
      auto& d = next[i];
      for (int f = 0; f < nf; ++f)
        if (in[i][f])
          for (int v : ft.vertex_set(h, f))
            for (int x : at[v]) d[x] = 1;
      // Complement components; keep the one holding the other cuffs, or
      // the largest when there is a single cuff.
      std::vector<int> comp(nf, -1);
      int nc = 0;
      std::vector<int> size;
      for (int s = 0; s < nf; ++s) {
        if (d[s] || comp[s] >= 0) continue;
        size.push_back(0);
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
          int f = stack.back();
          stack.pop_back();
          ++size[nc];
          for (int x : face_nbrs[f])
            if (!d[x] && comp[x] < 0) {
              comp[x] = nc;
              stack.push_back(x);
            }
        }
        ++nc;
      }
      if (nc == 0) {
        why = "disk around cuff " + std::to_string(i) + " would cover the surface";
        break;
      }
      int keep = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
      for (int o = 0; o < k; ++o)
        if (o != i) {
          int c = comp[p.cuff_faces[o]];
          if (c < 0) {
            why = "nests around cuffs " + std::to_string(i) + " and " + std::to_string(o) + " collide";
            break;
          }
          keep = c;
        }
      if (!why.empty()) break;
      for (int f = 0; f < nf; ++f)
        if (comp[f] >= 0 && comp[f] != keep) d[f] = 1;
      // Closures of different nests must stay vertex-disjoint.
      std::vector<char> mine(h.num_vertices(), 0);
      for (int f = 0; f < nf; ++f)
        if (d[f])
          for (int v : ft.vertex_set(h, f)) mine[v] = 1;
      for (int o = 0; o < i && why.empty(); ++o)
        for (int f = 0; f < nf && why.empty(); ++f)
          if (next[o][f])
            for (int v : ft.vertex_set(h, f))
              if (mine[v]) {
                why = "nests around cuffs " + std::to_string(o) + " and " + std::to_string(i) + " touch";
                break;
              }
      if (!why.empty()) break;
      std::vector<int> faces;
      for (int f = 0; f < nf; ++f)
        if (d[f]) faces.push_back(f);
      try {
        regions[i] = classify_region(h, ft, faces);
      } catch (const PreconditionError& e) {
        why = std::string("disk around cuff ") + std::to_string(i) + " pinches: " + e.what();
        break;
      }
      if (regions[i].euler_genus != 0 || regions[i].cuffs != 1)
        why = "region around cuff " + std::to_string(i) + " is not a disk";
    }
    if (!why.empty()) {
      ns.stop_reason = why;
      break;
    }
    // Separating the last nest from the others also needs room left over.
    for (int i = 0; i < k; ++i) {
      for (int o = i + 1; o < k; ++o)
        for (int f = 0; f < nf; ++f)
          if (next[i][f] && next[o][f]) why = "nests overlap";
    }
    if (!why.empty()) {
      ns.stop_reason = why;
      break;
    }
    in = next;
    for (int i = 0; i < k; ++i) {
      ns.disks[i].push_back(regions[i].faces);
      ns.cycles[i].push_back(regions[i].cuff_vertices.at(0));
    }
    ++ns.depth;
  }
  if (ns.stop_reason.empty()) ns.stop_reason = "requested depth reached";
  return ns;
}

/// Spider dual to the nest cycles: leaf per cuff, one vertex per annulus,
/// and the root for everything outside the last disks.
struct NestTree {
  int root = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> leaves;              // per cuff
  std::vector<std::vector<int>> legs;   // legs[i][j]: vertex at distance j from leaf i (j <= d)
  std::vector<std::vector<int>> faces;  // cut-graph faces per tree vertex
  int size() const { return static_cast<int>(adj.size()); }
};

inline NestTree build_nest_tree(const Planarization& p, const NestSystem& ns) {
  int d = ns.depth;
  if (d < 1) throw PreconditionError("nest tree needs depth at least 1");
  int k = static_cast<int>(ns.disks.size());
  std::set<std::vector<int>> seen;
  for (int i = 0; i < k; ++i)
    for (auto c : ns.cycles[i]) {
      std::sort(c.begin(), c.end());
      if (!seen.insert(c).second) throw PreconditionError("duplicate nest cycle");
    }
  int nf = trace_faces(p.cut.graph).size();
  NestTree t;
  t.adj.assign(1, {});
  t.faces.assign(1, {});
  std::vector<char> used(nf, 0);
  t.legs.assign(k, {});
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= d; ++j) {
      int v = t.size();
      t.adj.emplace_back();
      t.faces.emplace_back();
      for (int f : ns.disks[i][j])
        if (!used[f]) {
          used[f] = 1;
          t.faces[v].push_back(f);
        }
      if (j > 0) {
        int u = t.legs[i].back();
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
      }
      t.legs[i].push_back(v);
    }
    t.leaves.push_back(t.legs[i][0]);
    t.adj[t.legs[i][d]].push_back(t.root);
    t.adj[t.root].push_back(t.legs[i][d]);
  }
  for (int f = 0; f < nf; ++f)
    if (!used[f]) t.faces[t.root].push_back(f);
  if (t.faces[t.root].empty()) throw InvariantViolation("nest tree root has no faces");
  return t;
}

/// Faces of G in the union of f(u) over U (caps dropped), classified in G.
inline Region region_of(const NestTree& t, const Planarization& p, const RotationEmbedding& g, const FaceTrace& fg,
                        const std::vector<int>& U) {
  if (U.empty()) throw PreconditionError("empty tree vertex set");
  std::vector<int> faces;
  for (int u : U)
    for (int f : t.faces[u])
      if (p.face_origin[f] >= 0) faces.push_back(p.face_origin[f]);
  return classify_region(g, fg, faces);
}

/// Cut-graph region of an internal vertex set, without projection.
inline Region region_in_cut(const NestTree& t, const Planarization& p, const std::vector<int>& U) {
  if (U.empty()) throw PreconditionError("empty tree vertex set");
  std::vector<char> in(t.size(), 0);
  for (int u : U) in[u] = 1;
  std::vector<int> stack{U[0]}, reached{U[0]};
  std::vector<char> seen(t.size(), 0);
  seen[U[0]] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adj[v])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
        reached.push_back(w);
      }
  }
  if (reached.size() != std::set<int>(U.begin(), U.end()).size()) throw PreconditionError("tree vertex set is disconnected");
  std::vector<int> faces;
  for (int u : U) faces.insert(faces.end(), t.faces[u].begin(), t.faces[u].end());
  return classify_region(p.cut.graph, faces);
}

struct PiecePartition {
  std::vector<CoverPiece> pieces;
  int k = 0;  // number of B pieces
};

/// Cover pieces: one per one-sided cuff (A1), one per pair of cuffs from the
/// same two-sided cycle (A2), one per component of the rest of the tree (B).
inline PiecePartition partition_cover_pieces(const NestTree& t, const Planarization& p, const RotationEmbedding& g,
                                             const FaceTrace& fg, int d) {
  // Leaves carry only cap faces, so a radius of 1 would let B+ swallow the
  // A sets; 2 is the least radius with faces left outside both B+ and A+.
  int reach = std::max(2, d / 3);
  if (d < 3) throw PreconditionError("nest depth below 3 leaves no room for the A sets");
  if (d > static_cast<int>(t.legs.at(0).size()) - 1) throw PreconditionError("tree is shallower than the requested depth");
  int k = static_cast<int>(t.leaves.size());
  std::vector<char> in_a(t.size(), 0);
  auto closed_nbhd = [&](const std::vector<int>& S) {
    std::set<int> out(S.begin(), S.end());
    for (int v : S) out.insert(t.adj[v].begin(), t.adj[v].end());
    return std::vector<int>(out.begin(), out.end());
  };
  PiecePartition out;
  auto add = [&](std::vector<int> S, const std::string& label) {
    std::sort(S.begin(), S.end());
    CoverPiece c;
    c.S = S;
    c.inner = region_of(t, p, g, fg, S);
    c.outer = region_of(t, p, g, fg, closed_nbhd(S));
    c.kind = c.inner.orientable && c.inner.euler_genus == 0 ? "sphere" : "projective";
    c.label = label;
    out.pieces.push_back(std::move(c));
  };
  auto a_set = [&](int i) {
    std::vector<int> S(t.legs[i].begin(), t.legs[i].begin() + reach + 1);
    for (int v : S) in_a[v] = 1;
    return S;
  };
  std::vector<char> done(k, 0);
  for (int i = 0; i < k; ++i) {
    if (done[i]) continue;
    int c = p.cuff_cycle[i];
    done[i] = 1;
    if (p.one_sided[c]) {
      add(a_set(i), "A1");
      continue;
    }
    int mate = -1;
    for (int o = i + 1; o < k; ++o)
      if (!done[o] && p.cuff_cycle[o] == c) mate = o;
    if (mate < 0) throw InvariantViolation("two-sided cycle with a single cuff");
    done[mate] = 1;
    auto S = a_set(i), S2 = a_set(mate);
    S.insert(S.end(), S2.begin(), S2.end());
    add(S, "A2");
  }
  std::vector<char> seen(t.size(), 0);
  for (int s = 0; s < t.size(); ++s) {
    if (in_a[s] || seen[s]) continue;
    std::vector<int> S{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : t.adj[v])
        if (!in_a[w] && !seen[w]) {
          seen[w] = 1;
          S.push_back(w);
          stack.push_back(w);
        }
    }
    add(S, "B");
    ++out.k;
  }
  return out;
}

struct PieceRun {
  CoverPiece piece;
  bool nested = false;
  int minor_vertices = 0;
  int minor_edges = 0;
  int contracted = 0;
  bool minor_3connected = false;
  std::string branch;  // dichotomy branch, or "direct" when covered in G
  int piece_cover = 0;
  std::string note;
};

struct GenusOptions {
  int depth_request = 49;
  int min_depth = 3;
  const ProjectiveHint* hint = nullptr;
  DichotomyOptions dichotomy{120, 200'000, true};  // pieces settle for the best cover found quickly
};

struct GenusResult {
  Certificate certificate;
  std::string route;  // projective, nests, fallback
  bool fallback = false;
  int genus = 0;
  int face_width = 0;
  int depth_requested = 0;
  int depth_achieved = 0;
  int k = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<PieceRun> runs;
  std::string report;
};

namespace detail {

inline FaceCover cover_of_roots(const RotationEmbedding& g, const std::vector<int>& roots, long budget, bool* optimal) {
  RotationEmbedding h = g;
  h.set_roots(RootSet(roots));
  SearchStats st;
  FaceCover c = min_face_cover(h, roots.size() <= 200 ? CoverMode::exact : CoverMode::greedy, &st, budget);
  if (optimal) *optimal = st.optimal;
  return c;
}

}  // namespace detail

/// Face cover or rooted K_{2,t} model for a 3-connected graph on a surface
/// other than the sphere, assembled from plane pieces. Falls back to a
/// direct cover of G when the face-width or nest depth is too small.
inline GenusResult genus_face_cover(const RotationEmbedding& g, int t, const GenusOptions& opt = {}) {
  if (t < 1) throw PreconditionError("t must be positive");
  GenusResult res;
  res.genus = euler_genus(g);
  res.depth_requested = opt.depth_request;
  if (res.genus < 1) throw PreconditionError("embedding is planar; use the plane dichotomy");
  if (!g.is_simple()) throw PreconditionError("graph is not simple");
  if (!is_k_connected(g.adjacency(), 3)) throw PreconditionError("graph is not 3-connected");
  FaceTrace fg = trace_faces(g);
  std::ostringstream rep;
  auto fw = face_width(g);
  res.face_width = std::get<int>(fw.value);
  rep << "euler genus " << res.genus << ", face-width " << res.face_width << ", roots " << g.roots().size() << ", t "
      << t << "\n";
  auto fallback = [&](const std::string& why) {
    bool opt_ok = false;
    FaceCover c = detail::cover_of_roots(g, g.roots().vertices(), opt.dichotomy.cover_node_budget, &opt_ok);
    res.certificate = c;
    res.route = "fallback";
    res.fallback = true;
    rep << "fallback: " << why << "\ndirect cover of size " << c.size() << (opt_ok ? " (minimum)" : "") << "\n";
    res.report = rep.str();
    return res;
  };
  if (res.face_width < 3) return fallback("face-width below 3");

  std::vector<CoverPiece> pieces;
  if (res.genus == 1 && !is_orientable(g)) {
    if (!opt.hint) return fallback("no K4-subdivision hint for the projective plane");
    try {
      pieces = projective_cover(g, fg, *opt.hint);
    } catch (const PreconditionError& e) {
      return fallback(e.what());
    }
    res.route = "projective";
  } else {
    Planarization p;
    try {
      p = planarize(g);
    } catch (const PreconditionError& e) {
      return fallback(std::string("planarization failed: ") + e.what());
    }
    res.cycles = p.cycles;
    for (std::size_t c = 0; c < p.cycles.size(); ++c)
      rep << "planarizing cycle " << c + 1 << " (" << (p.one_sided[c] ? "one" : "two") << "-sided), length "
          << p.cycles[c].size() << "\n";
    NestSystem ns = find_nests(p, opt.depth_request);
    res.depth_achieved = ns.depth;
    rep << "nest depth " << ns.depth << " of " << opt.depth_request << " requested (" << ns.stop_reason << ")\n";
    if (ns.depth < opt.min_depth) return fallback("nest depth below " + std::to_string(opt.min_depth));
    NestTree tree = build_nest_tree(p, ns);
    PiecePartition part = partition_cover_pieces(tree, p, g, fg, ns.depth);
    res.k = part.k;
    if (part.k > res.genus) throw InvariantViolation("more B pieces than the Euler genus");
    if (static_cast<int>(part.pieces.size()) > 2 * res.genus) throw InvariantViolation("more than 2g cover pieces");
    pieces = std::move(part.pieces);
    res.route = "nests";
  }

  std::vector<char> covered(fg.size(), 0);
  std::vector<int> lifted;
  for (auto& piece : pieces) {
    for (int f : piece.inner.faces) covered[f] = 1;
    PieceRun run;
    run.piece = piece;
    run.nested = is_nested_pair(g, fg, piece.inner.faces, piece.outer.faces);
    if (!run.nested) throw InvariantViolation("piece " + piece.label + " is not a nested pair");
    std::vector<int> inner_roots;
    for (int v : detail::vertices_of_faces(g, fg, piece.inner.faces))
      if (g.roots().contains(v)) inner_roots.push_back(v);
    std::vector<int> images;
    bool direct = piece.kind != "sphere";
    if (!direct) {
      try {
        PieceMinor m = contract_outside(g, fg, piece.inner, piece.outer);
        run.minor_vertices = m.graph.num_vertices();
        run.minor_edges = m.graph.num_edges();
        run.contracted = m.contracted;
        run.minor_3connected = true;
        DichotomyResult dr = plane_dichotomy(m.graph, t, opt.dichotomy);
        run.branch = dr.branch;
        if (auto* model = std::get_if<RootedK2tModel>(&dr.certificate)) {
          RootedK2tModel lm = lift_model(m, *model);
          RootedGraph rg = RootedGraph::of(g);
          Verdict v = verify_model(rg, lm);
          if (!v.ok) throw InvariantViolation("lifted model fails: " + v.diagnostics.front());
          res.certificate = lm;
          res.runs.push_back(run);
          rep << "piece " << piece.label << " returned a rooted K_{2," << t << "} model\n";
          res.report = rep.str();
          return res;
        }
        images = lift_cover(m, std::get<FaceCover>(dr.certificate));
      } catch (const PreconditionError& e) {
        run.note = e.what();
        direct = true;
      }
    } else {
      run.note = "no plane reduction for this kind";
    }
    if (direct) {
      run.branch = "direct";
      images = detail::cover_of_roots(g, inner_roots, opt.dichotomy.cover_node_budget, nullptr).faces;
    }
    run.piece_cover = static_cast<int>(images.size());
    lifted.insert(lifted.end(), images.begin(), images.end());
    res.runs.push_back(run);
  }
  if (std::count(covered.begin(), covered.end(), 1) != fg.size())
    throw InvariantViolation("inner regions do not cover the surface");
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
  FaceCover cover{lifted};
  Verdict v = verify_cover(g, fg, cover);
  if (!v.ok) throw InvariantViolation("lifted cover fails: " + v.diagnostics.front());
  rep << "pieces " << res.runs.size() << ", B pieces " << res.k << "\n";
  rep << "label  kind        genus  orientable  cuffs  faces  minor(n,e)  branch  cover\n";
  for (auto& r : res.runs) {
    rep << r.piece.label << "  " << r.piece.kind << "  " << r.piece.inner.euler_genus << "  "
        << (r.piece.inner.orientable ? "yes" : "no") << "  " << r.piece.inner.cuffs << "  " << r.piece.inner.faces.size()
        << "  (" << r.minor_vertices << "," << r.minor_edges << ")  " << r.branch << "  " << r.piece_cover;
    if (!r.note.empty()) rep << "  [" << r.note << "]";
    rep << "\n";
  }
  rep << "lifted cover of size " << cover.size() << "\n";
  res.certificate = cover;
  res.report = rep.str();
  return res;
}

}  // namespace facecover

#endif  // FACECOVER_PIPELINE_HPP
