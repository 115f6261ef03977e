#include <gtest/gtest.h>

#include "facecover/cut.hpp"
#include "facecover/faces.hpp"
#include "facecover/generators.hpp"

using namespace facecover;

TEST(Generators, WindmillCounts) {
  auto w10 = windmill(10);
  EXPECT_EQ(w10.num_vertices(), 56);
  EXPECT_EQ(w10.roots().size(), 10u);
  EXPECT_EQ(euler_genus(w10), 0);
  auto w6 = windmill(6);
  EXPECT_EQ(w6.num_vertices(), 16);
  EXPECT_EQ(w6.roots().size(), 3u);
  EXPECT_TRUE(is_k_connected(w6.adjacency(), 3));
  EXPECT_THROW(windmill(5), PreconditionError);
}

TEST(Generators, BagelCounts) {
  auto b = bagel(14);
  EXPECT_EQ(b.num_vertices(), 14);
  EXPECT_EQ(b.num_edges(), 35);
  EXPECT_EQ(trace_faces(b).size(), 21);
  EXPECT_EQ(euler_genus(b), 2);
  EXPECT_TRUE(is_orientable(b));
  EXPECT_TRUE(isomorphic(dual(dual(b)), b));
  EXPECT_TRUE(b.is_simple());
  auto b6 = bagel(6);
  EXPECT_EQ(b6.num_edges(), 15);  // K6
  EXPECT_TRUE(is_k_connected(bagel(8).adjacency(), 4));
}

TEST(Generators, StrongProductOfEdges) {
  auto k2 = complete_graph(2);
  auto p = strong_product(k2, k2);
  EXPECT_EQ(p.edges().size(), 6u);
}

TEST(Generators, ProjectiveGrid) {
  for (int r = 3; r <= 8; ++r) {
    auto pg = projective_diamond_grid(r);
    EXPECT_EQ(euler_genus(pg.graph), 1) << r;
    EXPECT_FALSE(is_orientable(pg.graph)) << r;
    auto multi = projective_diamond_grid(r, false);
    EXPECT_EQ(euler_genus(multi.graph), 1) << r;
  }
  EXPECT_EQ(projective_diamond_grid(16).graph.num_vertices(), 128);
}

TEST(Generators, Others) {
  EXPECT_EQ(euler_genus(icosahedron()), 0);
  EXPECT_EQ(icosahedron().num_edges(), 30);
  EXPECT_EQ(wheel(6).num_vertices(), 7);
  EXPECT_EQ(euler_genus(torus_grid(5)), 2);
  EXPECT_TRUE(is_orientable(torus_grid(5)));
  EXPECT_EQ(euler_genus(klein_grid(6)), 2);
  EXPECT_FALSE(is_orientable(klein_grid(6)));
  for (unsigned s = 1; s <= 20; ++s) {
    auto g = random_triangulation(30, s);
    EXPECT_EQ(euler_genus(g), 0);
    EXPECT_TRUE(g.is_simple());
    EXPECT_TRUE(is_k_connected(g.adjacency(), 3));
  }
}

TEST(Cut, BagelCycleIsNoncontractible) {
  auto b = bagel(14);
  std::vector<int> vs{0, 1, 2, 3, 4, 5, 6};
  auto cyc = darts_of_vertex_cycle(b, vs);
  EXPECT_FALSE(is_contractible(b, cyc));
  auto c = cut_along(b, {cyc});
  auto types = classify_cut(c);
  ASSERT_EQ(types.size(), 1u);
  EXPECT_EQ(types[0].euler_genus, 0);
  EXPECT_EQ(types[0].cuffs, 2);
  EXPECT_TRUE(same_embedding(reglue(c, b), b));
}
