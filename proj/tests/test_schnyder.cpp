#include <gtest/gtest.h>

#include "facecover/faces.hpp"
#include "facecover/generators.hpp"
#include "facecover/schnyder.hpp"

using namespace facecover;

namespace {

SchnyderWood wood_on_first_face(const RotationEmbedding& g) {
  FaceTrace ft = trace_faces(g);
  auto wv = ft.walk_vertices(g, 0);
  return compute_schnyder_wood(g, 0, wv[0], wv[1], wv[2]);
}

}  // namespace

TEST(Schnyder, TetrahedronCenter) {
  auto g = tetrahedron();
  auto w = wood_on_first_face(g);
  EXPECT_EQ(w.denominator, 3);
  for (int v = 0; v < 4; ++v) {
    bool special = v == w.special[0] || v == w.special[1] || v == w.special[2];
    if (!special)
      for (int i = 0; i < 3; ++i) EXPECT_EQ(w.coord[v][i], 1);
  }
  EXPECT_EQ(check_schnyder_wood(g, w), "");
}

TEST(Schnyder, WheelAndIcosahedron) {
  for (int n : {3, 4, 5, 8}) {
    auto g = wheel(n);
    FaceTrace ft = trace_faces(g);
    for (int f = 0; f < ft.size(); ++f) {
      auto wv = ft.walk_vertices(g, f);
      EXPECT_NO_THROW(compute_schnyder_wood(g, f, wv[0], wv[1], wv[2])) << "wheel " << n << " face " << f;
    }
  }
  auto ico = icosahedron();
  auto w = wood_on_first_face(ico);
  EXPECT_EQ(check_schnyder_wood(ico, w), "");
}

TEST(Schnyder, SpecialPermutationsAndLargeFace) {
  auto g = wheel(7);
  FaceTrace ft = trace_faces(g);
  int rim = -1;
  for (int f = 0; f < ft.size(); ++f)
    if (ft.walks[f].size() == 7) rim = f;
  ASSERT_GE(rim, 0);
  auto wv = ft.walk_vertices(g, rim);
  auto w = compute_schnyder_wood(g, rim, wv[0], wv[1], wv[4]);
  EXPECT_EQ(check_schnyder_wood(g, w), "");
  auto w2 = compute_schnyder_wood(g, rim, wv[4], wv[1], wv[0]);
  EXPECT_EQ(w2.special[0], wv[4]);
  EXPECT_THROW(compute_schnyder_wood(g, rim, wv[0], wv[2], wv[4]), PreconditionError);
}

TEST(Schnyder, RandomTriangulationsSatisfyInvariants) {
  for (unsigned seed = 1; seed <= 200; ++seed) {
    auto g = random_triangulation(6 + seed % 40, seed);
    FaceTrace ft = trace_faces(g);
    int f = static_cast<int>(seed % ft.size());
    auto wv = ft.walk_vertices(g, f);
    SchnyderWood w;
    ASSERT_NO_THROW(w = compute_schnyder_wood(g, f, wv[seed % 3], wv[(seed + 1) % 3], wv[(seed + 2) % 3]))
        << "seed " << seed;
    ASSERT_EQ(check_schnyder_wood(g, w), "") << "seed " << seed;
  }
}

TEST(Schnyder, DominanceChainsAndAntichains) {
  auto g = random_triangulation(30, 7);
  auto w = wood_on_first_face(g);
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  for (int i = 0; i < 3; ++i) {
    auto mp = mirsky_partition(w, i, all);
    EXPECT_EQ(mp.chain.size(), mp.antichains.size());
    for (std::size_t k = 1; k < mp.chain.size(); ++k)
      EXPECT_EQ(dominance(w, mp.chain[k - 1], mp.chain[k], i), Order::less);
    for (auto& a : mp.antichains)
      for (int x : a)
        for (int y : a)
          if (x != y) EXPECT_EQ(dominance(w, x, y, i), Order::incomparable);
  }
}

TEST(Schnyder, CorruptedWoodIsRejected) {
  auto g = icosahedron();
  auto w = wood_on_first_face(g);
  int v = 0;
  while (v == w.special[0]) ++v;
  std::swap(w.coord[v][0], w.coord[v][1]);
  if (w.coord[v][0] != w.coord[v][1]) EXPECT_NE(check_schnyder_wood(g, w), "");
}

TEST(Schnyder, ThreeConnectedNonTriangulations) {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    auto g = dual(random_triangulation(5 + seed % 25, seed));
    FaceTrace ft = trace_faces(g);
    for (int f = 0; f < ft.size(); f += 3) {
      auto wv = ft.walk_vertices(g, f);
      std::size_t m = wv.size();
      SchnyderWood w;
      ASSERT_NO_THROW(w = compute_schnyder_wood(g, f, wv[0], wv[1], wv[(m + 1) / 2])) << "seed " << seed << " face " << f;
      ASSERT_EQ(check_schnyder_wood(g, w), "");
    }
  }
}

TEST(Schnyder, RejectsGraphsThatAreNotThreeConnected) {
  auto g = diamond_grid(4);
  FaceTrace ft = trace_faces(g);
  int failures = 0;
  for (int f = 0; f < ft.size(); ++f) {
    auto wv = ft.walk_vertices(g, f);
    if (wv.size() < 3) continue;
    try {
      compute_schnyder_wood(g, f, wv[0], wv[1], wv[(wv.size() + 1) / 2]);
    } catch (const PreconditionError&) {
      ++failures;
    }
  }
  EXPECT_GT(failures, 0);
}
