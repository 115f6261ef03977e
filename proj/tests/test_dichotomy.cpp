#include <gtest/gtest.h>

#include <map>

#include "facecover/dichotomy.hpp"
#include "facecover/generators.hpp"

using namespace facecover;

namespace {

SchnyderWood wood_of(const RotationEmbedding& g) {
  WoodChoice wc = choose_specials(g, g.roots());
  return compute_schnyder_wood(g, wc.face, wc.a1, wc.a2, wc.a3);
}

bool is_special(const SchnyderWood& w, int v) {
  return v == w.special[0] || v == w.special[1] || v == w.special[2];
}

}  // namespace

TEST(SmallT, K4AndBagel) {
  auto k4 = RootedGraph::of(tetrahedron());
  k4.roots = RootSet({0});
  auto m1 = small_t_model(k4, 1);
  EXPECT_EQ(m1.t(), 1);
  EXPECT_TRUE(verify_model(k4, m1).ok);
  auto b8 = RootedGraph::of(bagel(8));
  b8.roots = RootSet({0, 2});
  auto m2 = small_t_model(b8, 2);
  EXPECT_EQ(m2.t(), 2);
  EXPECT_TRUE(verify_model(b8, m2).ok);
  k4.roots = RootSet();
  EXPECT_THROW(small_t_model(k4, 1), PreconditionError);
}

TEST(ChainModel, FourRootsOnAChain) {
  auto g = apex_grid(9);
  auto w = wood_of(g);
  auto rg = RootedGraph::of(g);
  std::vector<int> ground;
  for (int r : g.roots().vertices())
    if (!is_special(w, r)) ground.push_back(r);
  bool done = false;
  for (int i = 0; i < 3 && !done; ++i) {
    auto mp = mirsky_partition(w, i, ground);
    if (mp.chain.size() < 4) continue;
    std::vector<int> S(mp.chain.begin(), mp.chain.begin() + 4);
    auto m = model_from_chain(rg, w, i, S);
    EXPECT_EQ(m.t(), 4);
    EXPECT_TRUE(verify_model(rg, m).ok);
    EXPECT_THROW(model_from_chain(rg, w, i, {S[0], S[1]}), PreconditionError);
    done = true;
  }
  EXPECT_TRUE(done);
}

TEST(ChainModel, RejectsSpecialVertex) {
  auto g = apex_grid(7);
  auto w = wood_of(g);
  RotationEmbedding h = g;
  h.set_roots(RootSet::all(g.num_vertices()));
  auto rg = RootedGraph::of(h);
  // a_{i-1} is the maximum of the i-th order restricted to its tree
  int i = 0;
  std::vector<int> ground;
  for (int v = 0; v < rg.n; ++v) ground.push_back(v);
  auto mp = mirsky_partition(w, i, ground);
  std::vector<int> S(mp.chain.begin(), mp.chain.begin() + 2);
  S.push_back(w.special[SchnyderWood::prev(i)]);
  EXPECT_THROW(model_from_chain(rg, w, i, S), PreconditionError);
}

TEST(LevelModel, FourIndependentRootsOnOneLevel) {
  auto g = apex_grid(11);
  auto w = wood_of(g);
  RootedGraph rg = RootedGraph::of(g);
  bool done = false;
  for (int i = 0; i < 3 && !done; ++i) {
    std::map<long, std::vector<int>> level;
    for (int v = 0; v < rg.n; ++v)
      if (!is_special(w, v) && w.coord[v][i] > 0 && w.coord[v][i] < w.denominator) level[w.coord[v][i]].push_back(v);
    for (auto& [c, group] : level) {
      std::vector<int> S;
      for (int v : group)
        if (std::none_of(S.begin(), S.end(), [&](int s) { return rg.adjacent(s, v); })) S.push_back(v);
      if (S.size() < 4) continue;
      S.resize(4);
      rg.roots = RootSet(S);
      auto m = model_from_level(rg, w, i, S);
      EXPECT_EQ(m.t(), 4);
      EXPECT_TRUE(verify_model(rg, m).ok);
      done = true;
      break;
    }
  }
  EXPECT_TRUE(done);
}

TEST(LevelModel, RejectsBoundaryLevelAndSharedFaces) {
  auto g = wheel(7);
  FaceTrace ft = trace_faces(g);
  int rim = -1;
  for (int f = 0; f < ft.size(); ++f)
    if (ft.walks[f].size() == 7) rim = f;
  auto wv = ft.walk_vertices(g, rim);
  auto w = compute_schnyder_wood(g, rim, wv[0], wv[1], wv[4]);
  auto rg = RootedGraph::of(g);
  // the arc from a_3 back to a_1 avoids a_2, so coordinate 2 vanishes there
  std::vector<int> S{wv[4], wv[5], wv[6]};
  for (int s : S) ASSERT_EQ(w.coord[s][1], 0);
  EXPECT_THROW(model_from_level(rg, w, 1, S), PreconditionError);
  // roots on one level that share a face (cubic graphs have large faces)
  bool tried = false;
  for (unsigned seed = 1; seed <= 40 && !tried; ++seed) {
    auto big = dual(random_triangulation(20, seed));
    FaceTrace ft = trace_faces(big);
    auto wb = wood_of(big);
    RootedGraph rb = RootedGraph::of(big);
    auto share_face = [&](int a, int b) {
      for (int f = 0; f < ft.size(); ++f) {
        auto vs = ft.walk_vertices(big, f);
        if (std::count(vs.begin(), vs.end(), a) && std::count(vs.begin(), vs.end(), b)) return true;
      }
      return false;
    };
    for (int i = 0; i < 3 && !tried; ++i) {
      std::map<long, std::vector<int>> level;
      for (int v = 0; v < rb.n; ++v)
        if (!is_special(wb, v) && wb.coord[v][i] > 0 && wb.coord[v][i] < wb.denominator)
          level[wb.coord[v][i]].push_back(v);
      for (auto& [c, group] : level) {
        if (group.size() < 3) continue;
        bool shared = false;
        for (int a : group)
          for (int b : group) shared = shared || (a != b && share_face(a, b));
        if (!shared) continue;
        rb.roots = RootSet(group);
        EXPECT_ANY_THROW(model_from_level(rb, wb, i, group));
        tried = true;
        break;
      }
    }
  }
  EXPECT_TRUE(tried);
}

TEST(PlaneDichotomy, Windmill) {
  auto g = windmill(6);
  auto r6 = plane_dichotomy(g, 6);
  ASSERT_EQ(r6.branch, "cover");
  EXPECT_EQ(std::get<FaceCover>(r6.certificate).size(), 3);
  auto r2 = plane_dichotomy(g, 2);
  ASSERT_EQ(r2.branch, "small-t");
  auto m = std::get<RootedK2tModel>(r2.certificate);
  EXPECT_EQ(m.t(), 2);
  auto rg = RootedGraph::of(g);
  EXPECT_TRUE(verify_model(rg, m).ok);
}

TEST(PlaneDichotomy, ChainBranchOnLargeGrid) {
  auto g = apex_grid(19);
  ASSERT_EQ(g.roots().size(), 81u);
  auto r = plane_dichotomy(g, 3);
  ASSERT_EQ(r.branch, "chain");
  auto m = std::get<RootedK2tModel>(r.certificate);
  auto rg = RootedGraph::of(g);
  EXPECT_EQ(m.t(), 3);
  EXPECT_TRUE(verify_model(rg, m).ok);
}

TEST(PlaneDichotomy, RandomTriangulationsAreSoundAndExclusive) {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    auto g = random_triangulation(10 + seed % 12, seed, 0.3 + 0.1 * (seed % 5));
    FaceTrace ft = trace_faces(g);
    auto rg = RootedGraph::of(g);
    SearchStats st;
    int tau = min_face_cover(g, CoverMode::exact, &st).size();
    ASSERT_TRUE(st.optimal);
    for (int t = 1; t <= 4; ++t) {
      auto r = plane_dichotomy(g, t);
      if (auto* c = std::get_if<FaceCover>(&r.certificate)) {
        EXPECT_TRUE(verify_cover(g, ft, *c).ok);
        EXPECT_LE(c->size(), 27 * t * t * t * t);
      } else {
        auto m = std::get<RootedK2tModel>(r.certificate);
        EXPECT_EQ(m.t(), t);
        EXPECT_TRUE(verify_model(rg, m).ok) << "seed " << seed;
        EXPECT_GE(tau, (t + 1) / 2);
      }
    }
  }
}

TEST(PlaneDichotomy, RejectsNonThreeConnected) {
  auto g = diamond_grid(4);
  EXPECT_THROW(plane_dichotomy(g, 3), PreconditionError);
}
