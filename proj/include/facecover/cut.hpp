#ifndef FACECOVER_CUT_HPP
#define FACECOVER_CUT_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "facecover/embedding.hpp"
#include "facecover/faces.hpp"
#include "facecover/gem.hpp"

namespace facecover {

/// An embedded graph obtained from a base embedding by cutting along cycles.
/// Every cut leaves holes; each hole is closed by a cap face so that `graph`
/// is again a closed-surface embedding. Cap faces are the cuffs.
struct CutSurface {
  RotationEmbedding graph;
  std::vector<int> flag_origin;    // flag of graph -> flag of base, -1 on cap sides
  std::vector<int> vertex_origin;  // vertex of graph -> vertex of base
  std::vector<int> cap_faces;      // face ids (trace_faces(graph)) of caps, sorted
  std::vector<int> cap_source;     // per entry of cap_faces: index of the cut cycle
  int cycles_cut = 0;

  int dart_origin(int d) const {
    int f = flag_origin[flag_of(d, 0)];
    if (f < 0) f = flag_origin[flag_of(d, 1)];
    return f < 0 ? -1 : dart_of_flag(f);
  }
  bool is_cap_face(int f) const { return std::binary_search(cap_faces.begin(), cap_faces.end(), f); }
};

/// Trivial cut surface: nothing cut yet.
inline CutSurface uncut(const RotationEmbedding& g) {
  CutSurface s;
  s.graph = g;
  s.flag_origin.resize(g.num_flags());
  std::iota(s.flag_origin.begin(), s.flag_origin.end(), 0);
  s.vertex_origin.resize(g.num_vertices());
  std::iota(s.vertex_origin.begin(), s.vertex_origin.end(), 0);
  return s;
}

/// Check that `darts` is a closed walk without repeated vertices and return its vertices.
inline std::vector<int> cycle_vertices(const RotationEmbedding& g, const std::vector<int>& darts) {
  if (darts.empty()) throw PreconditionError("empty cycle");
  std::vector<int> vs;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    int d = darts[i];
    if (d < 0 || d >= g.num_darts()) throw PreconditionError("cycle names an unknown dart");
    int nd = darts[(i + 1) % darts.size()];
    if (g.head(d) != g.tail(nd)) throw PreconditionError("cycle darts do not form a closed walk");
    vs.push_back(g.tail(d));
  }
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("cycle repeats a vertex");
  if (darts.size() == 2 && edge_of_dart(darts[0]) == edge_of_dart(darts[1]))
    throw PreconditionError("cycle traverses an edge twice");
  return vs;
}

/// Dart sequence of a cycle given by its vertices, for graphs where
/// consecutive vertices are joined by a unique edge.
inline std::vector<int> darts_of_vertex_cycle(const RotationEmbedding& g, const std::vector<int>& vs) {
  std::vector<int> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int u = vs[i], w = vs[(i + 1) % vs.size()];
    int found = -1;
    for (int d : g.rotation(u))
      if (g.head(d) == w && (found < 0 || vs.size() > 2)) {
        if (found >= 0) throw PreconditionError("ambiguous cycle: parallel edges");
        found = d;
      }
    if (vs.size() == 2 && i == 1) {
      for (int d : g.rotation(u))
        if (g.head(d) == w && edge_of_dart(d) != edge_of_dart(out[0])) found = d;
    }
    if (found < 0) throw PreconditionError("cycle vertices not adjacent");
    out.push_back(found);
  }
  return out;
}

namespace detail {
// Close every hole left after breaking a2 at the marked flags: each marked
// flag f gets a cap partner f*, a0 between partners mirrors a0, and a1 of f*
// joins the partner of the next marked flag around the vertex.
inline std::vector<int> cap_marked(Gem& gem, const std::vector<char>& marked) {
  int n0 = static_cast<int>(marked.size());
  std::vector<int> star(n0, -1);
  for (int f = 0; f < n0; ++f)
    if (marked[f]) star[f] = gem.add_flag(-1, true);
  for (int f = 0; f < n0; ++f) {
    if (!marked[f]) continue;
    int y = gem.a1[f];
    int guard = 0;
    while (!marked[y]) {
      y = gem.a1[gem.a2[y]];
      if (++guard > n0) throw InvariantViolation("cap walk did not close");
    }
    gem.a1[star[f]] = star[y];
    gem.a0[star[f]] = star[gem.a0[f]];
  }
  for (int f = 0; f < n0; ++f) {
    if (!marked[f]) continue;
    gem.a2[f] = star[f];
    gem.a2[star[f]] = f;
  }
  return star;
}
}  // namespace detail

/// Cut a surface along pairwise vertex-disjoint cycles (dart sequences in
/// s.graph) avoiding existing cuffs. A two-sided cycle leaves two cuffs, a
/// one-sided cycle one cuff of twice its length.
inline CutSurface cut_along(const CutSurface& s, const std::vector<std::vector<int>>& cycles) {
  const RotationEmbedding& g = s.graph;
  FaceTrace ft = trace_faces(g);
  std::vector<char> cap_flag(g.num_flags(), 0);
  for (int x = 0; x < g.num_flags(); ++x) cap_flag[x] = s.is_cap_face(ft.face_of_flag[x]) ? 1 : 0;
  std::vector<int> owner(g.num_vertices(), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int v : cycle_vertices(g, cycles[c])) {
      if (owner[v] >= 0) throw PreconditionError("cut cycles are not vertex-disjoint");
      owner[v] = static_cast<int>(c);
      for (int d : g.rotation(v))
        if (cap_flag[flag_of(d, 0)] || cap_flag[flag_of(d, 1)]) throw PreconditionError("cut cycle touches a cuff");
    }
  }
  Gem gem = to_gem(g);
  for (int x = 0; x < gem.size(); ++x) {
    gem.origin[x] = s.flag_origin[x];
    gem.cap[x] = cap_flag[x];
  }
  std::vector<char> marked(gem.size(), 0);
  std::vector<int> flag_cycle(gem.size(), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int d : cycles[c])
      for (int b = 0; b < 2; ++b)
        for (int x : {flag_of(d, b), flag_of(opposite(d), b)}) {
          marked[x] = 1;
          flag_cycle[x] = static_cast<int>(c);
        }
  auto star = detail::cap_marked(gem, marked);
  std::vector<int> label(gem.size(), -1);  // cap source label per gem flag
  for (std::size_t k = 0; k < s.cap_faces.size(); ++k)
    for (int x = 0; x < g.num_flags(); ++x)
      if (ft.face_of_flag[x] == s.cap_faces[k]) label[x] = s.cap_source[k];
  for (int x = 0; x < static_cast<int>(marked.size()); ++x)
    if (marked[x]) label[star[x]] = s.cycles_cut + flag_cycle[x];
  gem.check();
  GemEmbedding ge = to_embedding(gem);
  CutSurface out;
  out.graph = ge.embedding;
  out.cycles_cut = s.cycles_cut + static_cast<int>(cycles.size());
  out.flag_origin.assign(out.graph.num_flags(), -1);
  for (int f = 0; f < out.graph.num_flags(); ++f) out.flag_origin[f] = gem.origin[ge.flag_to_gem[f]];
  out.vertex_origin.assign(out.graph.num_vertices(), -1);
  for (int v = 0; v < out.graph.num_vertices(); ++v) {
    for (int d : out.graph.rotation(v)) {
      for (int b = 0; b < 2 && out.vertex_origin[v] < 0; ++b) {
        int gf = ge.flag_to_gem[flag_of(d, b)];
        if (gf < s.graph.num_flags()) out.vertex_origin[v] = s.vertex_origin[g.tail(dart_of_flag(gf))];
      }
      if (out.vertex_origin[v] >= 0) break;
    }
  }
  FaceTrace nft = trace_faces(out.graph);
  std::vector<int> face_label(nft.size(), -1);
  for (int f = 0; f < out.graph.num_flags(); ++f) {
    int gf = ge.flag_to_gem[f];
    if (gem.cap[gf]) face_label[nft.face_of_flag[f]] = label[gf];
  }
  for (int f = 0; f < nft.size(); ++f)
    if (face_label[f] >= 0) {
      out.cap_faces.push_back(f);
      out.cap_source.push_back(face_label[f]);
    }
  return out;
}

inline CutSurface cut_along(const RotationEmbedding& g, const std::vector<std::vector<int>>& cycles) {
  return cut_along(uncut(g), cycles);
}

/// Identify every pair of cut copies again and drop the caps. Returns the
/// base embedding with base vertex and edge ids (orientations may differ).
inline RotationEmbedding reglue(const CutSurface& s, const RotationEmbedding& base) {
  int nf = base.num_flags();
  std::vector<int> back(nf, -1);  // base flag -> cut flag
  for (int f = 0; f < s.graph.num_flags(); ++f) {
    int o = s.flag_origin[f];
    if (o < 0) continue;
    if (back[o] >= 0) throw InvariantViolation("two cut flags share an origin");
    back[o] = f;
  }
  if (std::find(back.begin(), back.end(), -1) != back.end()) throw InvariantViolation("base flag lost in cut");
  Gem cg = to_gem(s.graph);
  Gem gem;
  gem.a0.assign(nf, -1);
  gem.a1.assign(nf, -1);
  gem.a2.assign(nf, -1);
  gem.origin.resize(nf);
  gem.cap.assign(nf, 0);
  Gem bg = to_gem(base);
  for (int o = 0; o < nf; ++o) {
    int x = back[o];
    gem.origin[o] = o;
    gem.a0[o] = s.flag_origin[cg.a0[x]];
    gem.a1[o] = s.flag_origin[cg.a1[x]];
    // a2 partners were separated by the cut; re-identify by original dart.
    int y = cg.a2[x];
    gem.a2[o] = s.flag_origin[y] >= 0 ? s.flag_origin[y] : bg.a2[o];
    if (gem.a1[o] < 0) throw InvariantViolation("regluing met a cap flag on a vertex corner");
  }
  GemEmbedding ge = to_embedding(gem);
  // Relabel vertices to base ids.
  const RotationEmbedding& e = ge.embedding;
  std::vector<int> vid(e.num_vertices(), -1);
  for (int v = 0; v < e.num_vertices(); ++v) {
    int gf = ge.flag_to_gem[flag_of(e.rotation(v)[0], 0)];
    vid[v] = base.tail(dart_of_flag(gf));
  }
  std::vector<std::vector<int>> rot(base.num_vertices());
  std::vector<Edge> edges(e.num_edges());
  for (int v = 0; v < e.num_vertices(); ++v) rot[vid[v]] = e.rotation(v);
  for (int k = 0; k < e.num_edges(); ++k) edges[k] = {vid[e.edge(k).u], vid[e.edge(k).v], e.edge(k).sig};
  return RotationEmbedding(base.num_vertices(), std::move(edges), std::move(rot));
}

/// Type of each component of a cut surface with its cuffs.
inline std::vector<SurfaceType> classify_cut(const CutSurface& s) {
  Gem gem = to_gem(s.graph);
  FaceTrace ft = trace_faces_of_gem(gem);
  for (int x = 0; x < gem.size(); ++x) gem.cap[x] = s.is_cap_face(ft.face_of_flag[x]) ? 1 : 0;
  return classify_components(gem);
}

/// Contractible iff cutting leaves a disk: a component of genus 0 whose
/// only cuff came from this cycle. One-sided cycles are never contractible.
inline bool is_contractible(const CutSurface& s, const std::vector<int>& cycle) {
  CutSurface c = cut_along(s, {cycle});
  Gem gem = to_gem(c.graph);
  FaceTrace ft = trace_faces_of_gem(gem);
  int ncomp = 0;
  auto comp = gem_components(gem, &ncomp);
  std::vector<int> fresh(ncomp, 0), old(ncomp, 0);
  int fresh_total = 0;
  for (std::size_t k = 0; k < c.cap_faces.size(); ++k) {
    int f = c.cap_faces[k];
    int x = flag_of(ft.walks[f][0], 0);
    if (ft.face_of_flag[x] != f) x ^= 1;
    if (c.cap_source[k] == s.cycles_cut) {
      ++fresh[comp[x]];
      ++fresh_total;
    } else {
      ++old[comp[x]];
    }
  }
  if (fresh_total != 2) return false;
  for (int x = 0; x < gem.size(); ++x) gem.cap[x] = c.is_cap_face(ft.face_of_flag[x]) ? 1 : 0;
  auto types = classify_components(gem);
  for (int k = 0; k < ncomp; ++k)
    if (fresh[k] == 1 && old[k] == 0 && types[k].euler_genus == 0) return true;
  return false;
}

inline bool is_contractible(const RotationEmbedding& g, const std::vector<int>& cycle) {
  return is_contractible(uncut(g), cycle);
}

}  // namespace facecover

#endif  // FACECOVER_CUT_HPP
