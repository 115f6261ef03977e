#include <gtest/gtest.h>

#include "corpus.hpp"
#include "facecover/generators.hpp"
#include "facecover/model.hpp"
#include "facecover/oracles.hpp"
#include "facecover/setcover.hpp"

using namespace facecover;

namespace {

RootedGraph k4_one_root() {
  auto g = RootedGraph::of(tetrahedron());
  g.roots = RootSet({0});
  return g;
}

}  // namespace

TEST(VerifyModel, AcceptsK21OnK4) {
  auto g = k4_one_root();
  RootedK2tModel m;
  m.centers = {std::vector<int>{1}, std::vector<int>{2}};
  m.satellites = {{0}};
  auto v = verify_model(g, m);
  EXPECT_TRUE(v.ok);
  ASSERT_EQ(m.witness.size(), 1u);
  EXPECT_EQ(m.witness[0][0], std::make_pair(1, 0));
}

TEST(VerifyModel, ReportsUnrootedSatellite) {
  auto g = RootedGraph::of(tetrahedron());
  g.roots = RootSet({2});
  RootedK2tModel m;
  m.centers = {std::vector<int>{0}, std::vector<int>{1}};
  m.satellites = {{2}, {3}};
  auto v = verify_model(g, m);
  EXPECT_FALSE(v.ok);
  ASSERT_EQ(v.diagnostics.size(), 1u);
  EXPECT_EQ(v.diagnostics[0], "unrooted satellite 2");
}

TEST(VerifyModel, RejectsOverlapAndDisconnectedSets) {
  auto g = k4_one_root();
  RootedK2tModel m;
  m.centers = {std::vector<int>{1, 2}, std::vector<int>{2}};
  m.satellites = {{0}};
  EXPECT_FALSE(verify_model(g, m).ok);
  auto c6 = cycle_graph(6);
  c6.roots = RootSet({0});
  RootedK2tModel d;
  d.centers = {std::vector<int>{1, 4}, std::vector<int>{5}};
  d.satellites = {{0}};
  auto v = verify_model(c6, d);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.diagnostics[0], "center 1 is disconnected");
}

TEST(ModelFromTrees, TwoStarsGiveK23) {
  // centers 0 and 1, shared leaves 2,3,4
  auto g = RootedGraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  g.roots = RootSet({2, 3, 4});
  auto m = model_from_trees(g, {{0, 2}, {0, 3}, {0, 4}}, {{1, 2}, {1, 3}, {1, 4}}, {2, 3, 4});
  EXPECT_EQ(m.t(), 3);
  EXPECT_EQ(m.centers[0], std::vector<int>{0});
  EXPECT_EQ(m.centers[1], std::vector<int>{1});
  EXPECT_THROW(model_from_trees(g, {{0, 2}, {0, 3}, {1, 3}}, {{1, 3}, {1, 4}}, {3}), InvariantViolation);
}

TEST(Certificate, RoundTripAndRejectsGarbage) {
  RootedK2tModel m;
  m.centers = {std::vector<int>{0, 4}, std::vector<int>{7}};
  m.satellites = {{2}, {9, 10}};
  std::string s = to_string(Certificate{m});
  EXPECT_EQ(s, "model x1: v0 v4 ; x2: v7 ; y1: v2 ; y2: v9 v10");
  auto back = std::get<RootedK2tModel>(parse_certificate(s));
  EXPECT_EQ(back.centers, m.centers);
  EXPECT_EQ(back.satellites, m.satellites);
  EXPECT_EQ(to_string(Certificate{FaceCover{{3, 17}}}), "cover f3 f17");
  EXPECT_EQ(std::get<FaceCover>(parse_certificate("cover f3 f17")).faces, (std::vector<int>{3, 17}));
  EXPECT_THROW(parse_certificate("cover 3"), MalformedInput);
  EXPECT_THROW(parse_certificate("model x1: v0 ; y1: v2"), MalformedInput);
  EXPECT_THROW(parse_certificate("model x1: v0 ; x2: v1 ; y2: v3"), MalformedInput);
  EXPECT_THROW(parse_certificate("triangle"), MalformedInput);
}

TEST(Packing, PaperFamilies) {
  auto w = wheel(6);
  EXPECT_EQ(max_face_independent_set(w).size(), 1u);
  EXPECT_EQ(max_face_independent_set(windmill(10)).size(), 10u);
  EXPECT_EQ(max_face_independent_set(windmill(6)).size(), 3u);
  EXPECT_EQ(face_independent_roots(windmill(10), 4).size(), 4u);
}

TEST(Packing, MatchesExhaustiveSubsetSearch) {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    auto g = random_triangulation(8 + seed % 8, seed);
    FaceTrace ft = trace_faces(g);
    const auto& roots = g.roots().vertices();
    auto conf = root_conflicts(g, ft, roots);
    int m = static_cast<int>(roots.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a)
        if (mask >> a & 1)
          for (int b : conf[a])
            if (mask >> b & 1) ok = false;
      if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    EXPECT_EQ(static_cast<int>(max_face_independent_set(g).size()), best) << "seed " << seed;
  }
}

TEST(FaceCoverSearch, PaperFamiliesAndExhaustiveCheck) {
  SearchStats st;
  EXPECT_EQ(min_face_cover(wheel(6), CoverMode::exact, &st).size(), 1);
  EXPECT_TRUE(st.optimal);
  EXPECT_EQ(min_face_cover(windmill(10)).size(), 10);
  EXPECT_EQ(min_face_cover(windmill(6)).size(), 3);
  for (unsigned seed = 1; seed <= 20; ++seed) {
    auto g = random_triangulation(7 + seed % 5, seed);
    FaceTrace ft = trace_faces(g);
    auto c = min_face_cover(g, CoverMode::exact, &st);
    EXPECT_TRUE(st.optimal);
    EXPECT_TRUE(verify_cover(g, ft, c).ok);
    int F = ft.size(), best = F;
    for (long mask = 0; mask < (1L << F); ++mask) {
      int k = __builtin_popcountl(mask);
      if (k >= best) continue;
      FaceCover fc;
      for (int f = 0; f < F; ++f)
        if (mask >> f & 1) fc.faces.push_back(f);
      if (verify_cover(g, ft, fc).ok) best = k;
    }
    EXPECT_EQ(c.size(), best) << "seed " << seed;
    auto gr = min_face_cover(g, CoverMode::greedy);
    EXPECT_TRUE(verify_cover(g, ft, gr).ok);
  }
}

TEST(Oracle, SmallCases) {
  auto r = brute_force_rooted_k2t(k4_one_root(), 1);
  ASSERT_EQ(r.status, OracleStatus::found);
  auto b8 = RootedGraph::of(bagel(8));
  auto r4 = brute_force_rooted_k2t(b8, 4);
  EXPECT_EQ(r4.status, OracleStatus::found);
  // the common-neighbour witness from the strong product
  RootedK2tModel m;
  m.centers = {std::vector<int>{0}, std::vector<int>{2}};
  m.satellites = {{1}, {3}, {5}, {7}};
  EXPECT_TRUE(verify_model(b8, m).ok);
  EXPECT_EQ(brute_force_rooted_k2t(b8, 5).status, OracleStatus::absent);
}

TEST(Oracle, PartitionSearchAgreesWithSingletonSearch) {
  for (unsigned seed = 1; seed <= 15; ++seed) {
    auto g = RootedGraph::of(random_triangulation(7 + seed % 4, seed));
    g.roots = RootSet::all(g.n);
    for (int t = 2; t <= 5; ++t) {
      auto fast = brute_force_rooted_k2t(g, t, 0);
      auto slow = brute_force_rooted_k2t(g, t, 0, true);
      ASSERT_NE(fast.status, OracleStatus::timeout);
      EXPECT_EQ(fast.status, slow.status) << "seed " << seed << " t=" << t;
    }
  }
  auto b8 = RootedGraph::of(bagel(8));
  EXPECT_EQ(brute_force_rooted_k2t(b8, 5, 0, true).status, OracleStatus::absent);
  EXPECT_EQ(brute_force_rooted_k2t(b8, 4, 0, true).status, OracleStatus::found);
}

TEST(Oracle, CycleHasNoK22WithFourRoots) {
  // C_n: any rooted K_{2,2} would need a cycle through both centers and both
  // satellites; C_6 has one, so K_{2,2} exists; K_{2,3} never (max degree 2).
  auto c = cycle_graph(6);
  c.roots = RootSet::all(6);
  EXPECT_EQ(brute_force_rooted_k2t(c, 2).status, OracleStatus::found);
  EXPECT_EQ(brute_force_rooted_k2t(c, 3).status, OracleStatus::absent);
  c.roots = RootSet({0, 3});
  EXPECT_EQ(brute_force_rooted_k2t(c, 2).status, OracleStatus::found);
  EXPECT_EQ(brute_force_rooted_k2t(c, 3).status, OracleStatus::absent);
}

TEST(Packing, CoverIsWithinTwentySevenTimesPacking) {
  int compared = 0;
  for (auto& in : samples::corpus()) {
    auto g = in.graph;
    if (g.roots().empty()) g.set_roots(RootSet::all(g.num_vertices()));
    if (g.roots().size() > 40) continue;
    SearchStats cs, ps;
    int tau = min_face_cover(g, CoverMode::exact, &cs, 2'000'000).size();
    int nu = static_cast<int>(max_face_independent_set(g, &ps).size());
    if (!cs.optimal || !ps.optimal) continue;
    ++compared;
    EXPECT_LE(nu, tau) << in.name;
    EXPECT_LE(tau, 27 * nu) << in.name;
  }
  EXPECT_GT(compared, 30);
}
