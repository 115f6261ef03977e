#include <gtest/gtest.h>

#include <set>

#include "facecover/generators.hpp"
#include "facecover/pipeline.hpp"

using namespace facecover;

namespace {

ProjectiveGrid rooted_p16() {
  auto pg = projective_diamond_grid(16);
  pg.graph.set_roots(RootSet::all(pg.graph.num_vertices()));
  return pg;
}

std::vector<int> roots_on(const RotationEmbedding& g, const FaceTrace& ft, int f, const std::vector<char>& mask) {
  std::vector<int> out;
  for (int v : ft.vertex_set(g, f))
    if (mask[v] && g.roots().contains(v)) out.push_back(v);
  return out;
}

// Minor faces and their images carry the same inner roots.
void expect_faithful_lift(const RotationEmbedding& g, const FaceTrace& fg, const CoverPiece& p, const PieceMinor& m) {
  std::vector<char> inner(g.num_vertices(), 0);
  for (int f : p.inner.faces)
    for (int v : fg.vertex_set(g, f)) inner[v] = 1;
  FaceTrace fh = trace_faces(m.graph);
  for (int f = 0; f < fh.size(); ++f) {
    std::vector<int> in_h;
    for (int v : fh.vertex_set(m.graph, f))
      if (m.lift[v].size() == 1 && m.graph.roots().contains(v)) in_h.push_back(m.lift[v][0]);
    std::sort(in_h.begin(), in_h.end());
    EXPECT_EQ(in_h, roots_on(g, fg, m.phi[f], inner)) << "minor face " << f;
  }
}

}  // namespace

TEST(ContractOutside, WholeSphereIsIdentity) {
  auto g = icosahedron();
  g.set_roots(RootSet::all(12));
  auto ft = trace_faces(g);
  std::vector<int> all(ft.size());
  std::iota(all.begin(), all.end(), 0);
  Region r = classify_region(g, ft, all);
  PieceMinor m = contract_outside(g, ft, r, r);
  EXPECT_EQ(m.contracted, 0);
  EXPECT_EQ(m.graph.num_vertices(), 12);
  EXPECT_EQ(m.graph.num_edges(), 30);
  std::set<int> images(m.phi.begin(), m.phi.end());
  EXPECT_EQ(static_cast<int>(images.size()), ft.size());
}

TEST(ContractOutside, DiskWithRingAroundIt) {
  auto pg = rooted_p16();
  auto& g = pg.graph;
  auto ft = trace_faces(g);
  auto pieces = projective_cover(g, ft, pg.hint);
  ASSERT_EQ(pieces.size(), 3u);
  for (auto& p : pieces) {
    PieceMinor m = contract_outside(g, ft, p.inner, p.outer);
    EXPECT_EQ(euler_genus(m.graph), 0);
    EXPECT_TRUE(is_k_connected(m.graph.adjacency(), 3));
    EXPECT_TRUE(check_polyhedral(m.graph));
    EXPECT_GE(m.contracted, 1);
    for (int v = 0; v < m.graph.num_vertices(); ++v)
      if (m.lift[v].size() > 1) EXPECT_GE(m.graph.degree(v), 3);
    expect_faithful_lift(g, ft, p, m);
  }
}

TEST(ContractOutside, RejectsThinProtection) {
  // A lone face as both inner and outer region caps to a non-3-connected minor.
  auto pg = rooted_p16();
  auto ft = trace_faces(pg.graph);
  Region r = classify_region(pg.graph, ft, {pg.hint.inner_faces[0][0]});
  EXPECT_THROW(contract_outside(pg.graph, ft, r, r), PreconditionError);
}

TEST(ProjectiveCover, P16HintGivesThreeNestedDisks) {
  auto pg = rooted_p16();
  auto ft = trace_faces(pg.graph);
  auto pieces = projective_cover(pg.graph, ft, pg.hint);
  std::vector<char> hit(ft.size(), 0);
  for (auto& p : pieces) {
    EXPECT_EQ(p.inner.type(), (SurfaceType{0, true, 1}));
    EXPECT_EQ(p.outer.type(), (SurfaceType{0, true, 1}));
    EXPECT_TRUE(is_nested_pair(pg.graph, ft, p.inner.faces, p.outer.faces));
    for (int f : p.inner.faces) hit[f] = 1;
  }
  EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), ft.size());
}

TEST(ProjectiveCover, Errors) {
  auto t = torus_grid(6);
  EXPECT_THROW(projective_cover(t, trace_faces(t), ProjectiveHint{}), PreconditionError);
  auto small = projective_diamond_grid(6);
  EXPECT_TRUE(small.hint.branch.empty());
  EXPECT_THROW(projective_cover(small.graph, trace_faces(small.graph), small.hint), PreconditionError);
}

TEST(Planarize, TorusAndErrors) {
  auto g = torus_grid(10);
  Planarization p = planarize(g);
  ASSERT_EQ(p.cycles.size(), 1u);
  EXPECT_FALSE(p.one_sided[0]);
  EXPECT_EQ(p.cuff_faces.size(), 2u);
  auto types = classify_cut(p.cut);
  ASSERT_EQ(types.size(), 1u);
  EXPECT_EQ(types[0].euler_genus, 0);
  EXPECT_THROW(planarize(icosahedron()), PreconditionError);
}

TEST(Planarize, ProjectivePlaneHasOneCuff) {
  auto g = projective_diamond_grid(8).graph;
  Planarization p = planarize(g);
  ASSERT_EQ(p.cycles.size(), 1u);
  EXPECT_TRUE(p.one_sided[0]);
  EXPECT_EQ(p.cuff_faces.size(), 1u);
}

TEST(Nests, TorusTreeAndPieces) {
  auto g = torus_grid(16);
  auto fg = trace_faces(g);
  Planarization p = planarize(g);
  NestSystem ns = find_nests(p, 49);
  EXPECT_GE(ns.depth, 5);
  EXPECT_LT(ns.depth, 49);
  // Nest cycles pairwise vertex-disjoint.
  std::set<int> used;
  std::size_t total = 0;
  for (auto& nest : ns.cycles)
    for (auto& c : nest) {
      total += c.size();
      used.insert(c.begin(), c.end());
    }
  EXPECT_EQ(used.size(), total);
  NestTree t = build_nest_tree(p, ns);
  EXPECT_EQ(t.size(), 2 * (ns.depth + 1) + 1);
  EXPECT_EQ(t.leaves.size(), 2u);
  PiecePartition part = partition_cover_pieces(t, p, g, fg, ns.depth);
  EXPECT_LE(static_cast<int>(part.pieces.size()), 2 * euler_genus(g));
  EXPECT_LE(part.k, euler_genus(g));
  std::vector<char> hit(fg.size(), 0);
  for (auto& piece : part.pieces) {
    EXPECT_EQ(piece.kind, "sphere");
    EXPECT_EQ(piece.inner.euler_genus, 0);
    EXPECT_TRUE(is_nested_pair(g, fg, piece.inner.faces, piece.outer.faces)) << piece.label;
    for (int f : piece.inner.faces) hit[f] = 1;
  }
  EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), fg.size());
}

TEST(Nests, InternalVertexSetsAreSpheresWithBoundary) {
  auto g = torus_grid(12);
  Planarization p = planarize(g);
  NestTree t = build_nest_tree(p, find_nests(p, 49));
  std::vector<char> leaf(t.size(), 0);
  for (int l : t.leaves) leaf[l] = 1;
  // Every connected set of internal tree vertices up to six vertices.
  std::set<std::vector<int>> sets;
  std::vector<std::vector<int>> frontier;
  for (int v = 0; v < t.size(); ++v)
    if (!leaf[v]) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& U : frontier) {
      if (!sets.insert(U).second) continue;
      if (U.size() == 6) continue;
      for (int u : U)
        for (int w : t.adj[u])
          if (!leaf[w] && std::find(U.begin(), U.end(), w) == U.end()) {
            auto V = U;
            V.push_back(w);
            std::sort(V.begin(), V.end());
            next.push_back(V);
          }
    }
    frontier.swap(next);
  }
  EXPECT_GT(sets.size(), 20u);
  for (auto& U : sets) {
    int boundary = 0;
    for (int u : U)
      for (int w : t.adj[u]) boundary += std::find(U.begin(), U.end(), w) == U.end();
    Region r = region_in_cut(t, p, U);
    EXPECT_EQ(r.type(), (SurfaceType{0, true, boundary}));
  }
  EXPECT_THROW(region_in_cut(t, p, {t.legs[0][2], t.legs[1][2]}), PreconditionError);
}

TEST(Nests, TinyInstanceStopsEarly) {
  auto g = torus_grid(5);
  Planarization p = planarize(g);
  NestSystem ns = find_nests(p, 49);
  EXPECT_LT(ns.depth, 3);
  EXPECT_FALSE(ns.stop_reason.empty());
  GenusResult r = genus_face_cover(g, 3);
  EXPECT_TRUE(r.fallback);
  auto fg = trace_faces(g);
  EXPECT_TRUE(verify_cover(g, fg, std::get<FaceCover>(r.certificate)).ok);
}

TEST(Nests, DuplicateCycleIsRejected) {
  auto g = torus_grid(10);
  Planarization p = planarize(g);
  NestSystem ns = find_nests(p, 3);
  ns.cycles[1][1] = ns.cycles[0][1];
  EXPECT_THROW(build_nest_tree(p, ns), PreconditionError);
}

TEST(GenusCover, ProjectiveRoute) {
  auto pg = rooted_p16();
  GenusOptions o;
  o.hint = &pg.hint;
  GenusResult r = genus_face_cover(pg.graph, 5, o);
  EXPECT_EQ(r.route, "projective");
  EXPECT_EQ(r.runs.size(), 3u);
  ASSERT_TRUE(std::holds_alternative<FaceCover>(r.certificate));
  EXPECT_TRUE(verify_cover(pg.graph, trace_faces(pg.graph), std::get<FaceCover>(r.certificate)).ok);
  for (auto& run : r.runs) {
    EXPECT_TRUE(run.nested);
    EXPECT_TRUE(run.minor_3connected);
  }
}

TEST(GenusCover, WithoutHintFallsBack) {
  auto pg = rooted_p16();
  GenusResult r = genus_face_cover(pg.graph, 5);
  EXPECT_TRUE(r.fallback);
  EXPECT_TRUE(verify_cover(pg.graph, trace_faces(pg.graph), std::get<FaceCover>(r.certificate)).ok);
}

TEST(GenusCover, BagelFallsBackOnFaceWidth) {
  auto b = bagel(14);
  b.set_roots(RootSet::all(b.num_vertices()));
  GenusResult r = genus_face_cover(b, 5);
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.face_width, 2);
  EXPECT_TRUE(verify_cover(b, trace_faces(b), std::get<FaceCover>(r.certificate)).ok);
}

TEST(GenusCover, KleinBottleGrid) {
  auto g = klein_grid(10);
  GenusResult r = genus_face_cover(g, 3);
  EXPECT_EQ(r.route, "nests");
  EXPECT_LE(r.k, r.genus);
  if (auto* c = std::get_if<FaceCover>(&r.certificate)) {
    EXPECT_TRUE(verify_cover(g, trace_faces(g), *c).ok);
  } else {
    auto m = std::get<RootedK2tModel>(r.certificate);
    EXPECT_TRUE(verify_model(RootedGraph::of(g), m).ok);
  }
}

TEST(GenusCover, TorusModelIsLifted) {
  // All roots on a large torus grid: a plane piece has enough
  // face-independent roots for a model, which lifts to G.
  auto g = torus_grid(24);
  GenusResult r = genus_face_cover(g, 3);
  ASSERT_TRUE(std::holds_alternative<RootedK2tModel>(r.certificate)) << r.report;
  auto m = std::get<RootedK2tModel>(r.certificate);
  EXPECT_EQ(m.t(), 3);
  EXPECT_TRUE(verify_model(RootedGraph::of(g), m).ok);
}
