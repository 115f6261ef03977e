#ifndef FACECOVER_SVG_HPP
#define FACECOVER_SVG_HPP

#include <array>
#include <sstream>
#include <string>

#include "facecover/faces.hpp"
#include "facecover/graph.hpp"
#include "facecover/schnyder.hpp"

namespace facecover {

/// Straight-line drawing of a 3-connected plane graph at its Schnyder
/// barycentric coordinates. Tree edges are coloured by tree, roots filled.
inline std::string schnyder_svg(const RotationEmbedding& g, double size = 800) {
  if (euler_genus(g) != 0) throw PreconditionError("drawing needs a planar embedding");
  if (!is_k_connected(g.adjacency(), 3)) throw PreconditionError("drawing needs a 3-connected graph");
  WoodChoice wc = choose_specials(g, g.roots());
  SchnyderWood w = compute_schnyder_wood(g, wc.face, wc.a1, wc.a2, wc.a3);
  const double margin = 30, side = size - 2 * margin, height = side * 0.8660254037844386;
  const std::array<std::array<double, 2>, 3> corner{
      {{margin, margin + height}, {margin + side, margin + height}, {margin + side / 2, margin}}};
  auto pos = [&](int v) {
    std::array<double, 2> p{0, 0};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 2; ++k) p[k] += corner[i][k] * static_cast<double>(w.coord[v][i]) / w.denominator;
    return p;
  };
  const char* colour[3] = {"#c0392b", "#27ae60", "#2c66c9"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << margin * 2 + height
     << "\" viewBox=\"0 0 " << size << ' ' << margin * 2 + height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    const char* c = "#999999";
    for (int i = 0; i < 3; ++i)
      if (w.parent[i][u] == v || w.parent[i][v] == u) c = colour[i];
    auto a = pos(u), b = pos(v);
    os << "<line x1=\"" << a[0] << "\" y1=\"" << a[1] << "\" x2=\"" << b[0] << "\" y2=\"" << b[1] << "\" stroke=\"" << c
       << "\" stroke-width=\"1.5\"/>\n";
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto p = pos(v);
    bool root = g.roots().contains(v);
    os << "<circle cx=\"" << p[0] << "\" cy=\"" << p[1] << "\" r=\"4\" stroke=\"black\" fill=\""
       << (root ? "black" : "white") << "\"><title>v" << v << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace facecover

#endif  // FACECOVER_SVG_HPP
