#ifndef FACECOVER_IO_HPP
#define FACECOVER_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "facecover/embedding.hpp"
#include "facecover/error.hpp"
#include "facecover/generators.hpp"
#include "facecover/graph.hpp"

namespace facecover {

// ---------------------------------------------------------------------------
// .emb
//   emb 1
//   V n
//   E m
//   edge k u v sig        (m lines, k = 0..m-1)
//   rot v d1 d2 ...       (one line per vertex; darts written k+ or k-)
//   roots r1 r2 ...       (optional)
// Blank lines and lines starting with '#' are ignored.

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

inline long to_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw MalformedInput("expected an integer for " + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) throw MalformedInput("expected an integer for " + what + ", got '" + tok + "'");
  return x;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline int read_count(const std::vector<std::string>& lines, std::size_t& at, const std::string& key) {
  if (at >= lines.size()) throw MalformedInput("missing '" + key + "' line");
  auto t = tokens(lines[at]);
  if (t.size() != 2 || t[0] != key) throw MalformedInput("expected '" + key + " <count>', got '" + lines[at] + "'");
  long x = to_int(t[1], key);
  if (x < 0 || x > 50'000'000) throw MalformedInput(key + " count out of range");
  ++at;
  return static_cast<int>(x);
}

inline std::vector<int> read_roots(const std::vector<std::string>& lines, std::size_t& at) {
  std::vector<int> roots;
  if (at < lines.size()) {
    auto t = tokens(lines[at]);
    if (t.empty() || t[0] != "roots") throw MalformedInput("unexpected line '" + lines[at] + "'");
    for (std::size_t k = 1; k < t.size(); ++k) roots.push_back(static_cast<int>(to_int(t[k], "root")));
    ++at;
  }
  if (at != lines.size()) throw MalformedInput("trailing content after roots: '" + lines[at] + "'");
  return roots;
}

}  // namespace detail

inline std::string write_emb(const RotationEmbedding& g) {
  std::ostringstream os;
  os << "emb 1\nV " << g.num_vertices() << "\nE " << g.num_edges() << "\n";
  for (int k = 0; k < g.num_edges(); ++k)
    os << "edge " << k << ' ' << g.edge(k).u << ' ' << g.edge(k).v << ' ' << g.edge(k).sig << "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "rot " << v;
    for (int d : g.rotation(v)) os << ' ' << edge_of_dart(d) << ((d & 1) ? '-' : '+');
    os << "\n";
  }
  if (!g.roots().empty()) {
    os << "roots";
    for (int r : g.roots()) os << ' ' << r;
    os << "\n";
  }
  return os.str();
}

inline RotationEmbedding read_emb(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw MalformedInput("empty .emb input");
  if (detail::tokens(lines[0]) != std::vector<std::string>{"emb", "1"}) throw MalformedInput("missing 'emb 1' header");
  std::size_t at = 1;
  int n = detail::read_count(lines, at, "V");
  int m = detail::read_count(lines, at, "E");
  std::vector<Edge> edges(m);
  for (int k = 0; k < m; ++k, ++at) {
    if (at >= lines.size()) throw MalformedInput("missing edge line " + std::to_string(k));
    auto t = detail::tokens(lines[at]);
    if (t.size() != 5 || t[0] != "edge") throw MalformedInput("bad edge line '" + lines[at] + "'");
    if (detail::to_int(t[1], "edge id") != k) throw MalformedInput("edge ids must be 0..m-1 in order");
    long u = detail::to_int(t[2], "edge end"), v = detail::to_int(t[3], "edge end"), s = detail::to_int(t[4], "signature");
    if (u < 0 || u >= n || v < 0 || v >= n) throw MalformedInput("edge " + std::to_string(k) + " has an end out of range");
    if (s != 1 && s != -1) throw MalformedInput("signature must be 1 or -1");
    edges[k] = {static_cast<int>(u), static_cast<int>(v), static_cast<int>(s)};
  }
  std::vector<std::vector<int>> rot(n);
  std::vector<char> have(n, 0);
  for (int c = 0; c < n; ++c, ++at) {
    if (at >= lines.size()) throw MalformedInput("missing rotation lines");
    auto t = detail::tokens(lines[at]);
    if (t.size() < 2 || t[0] != "rot") throw MalformedInput("bad rotation line '" + lines[at] + "'");
    long v = detail::to_int(t[1], "vertex");
    if (v < 0 || v >= n || have[v]) throw MalformedInput("rotation vertex out of range or repeated");
    have[v] = 1;
    for (std::size_t k = 2; k < t.size(); ++k) {
      const std::string& tok = t[k];
      if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) throw MalformedInput("bad dart '" + tok + "'");
      long e = detail::to_int(tok.substr(0, tok.size() - 1), "dart");
      if (e < 0 || e >= m) throw MalformedInput("dart '" + tok + "' names an unknown edge");
      rot[v].push_back(dart_of_edge(static_cast<int>(e), tok.back() == '+'));
    }
  }
  auto roots = detail::read_roots(lines, at);
  RotationEmbedding g(n, std::move(edges), std::move(rot));
  g.set_roots(RootSet(roots));
  return g;
}

inline RotationEmbedding parse_emb(const std::string& text) {
  std::istringstream is(text);
  return read_emb(is);
}

// ---------------------------------------------------------------------------
// .rg (abstract graph)
//   rg 1
//   V n
//   E m
//   edge u v   (m lines)
//   roots ...  (optional)

inline std::string write_rg(const RootedGraph& g) {
  std::ostringstream os;
  auto es = g.edges();
  os << "rg 1\nV " << g.n << "\nE " << es.size() << "\n";
  for (auto [u, v] : es) os << "edge " << u << ' ' << v << "\n";
  if (!g.roots.empty()) {
    os << "roots";
    for (int r : g.roots) os << ' ' << r;
    os << "\n";
  }
  return os.str();
}

inline RootedGraph read_rg(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty() || detail::tokens(lines[0]) != std::vector<std::string>{"rg", "1"})
    throw MalformedInput("missing 'rg 1' header");
  std::size_t at = 1;
  int n = detail::read_count(lines, at, "V");
  int m = detail::read_count(lines, at, "E");
  std::vector<std::pair<int, int>> es;
  for (int k = 0; k < m; ++k, ++at) {
    if (at >= lines.size()) throw MalformedInput("missing edge lines");
    auto t = detail::tokens(lines[at]);
    if (t.size() != 3 || t[0] != "edge") throw MalformedInput("bad edge line '" + lines[at] + "'");
    es.emplace_back(static_cast<int>(detail::to_int(t[1], "edge end")), static_cast<int>(detail::to_int(t[2], "edge end")));
  }
  auto roots = detail::read_roots(lines, at);
  RootedGraph g = RootedGraph::from_edges(n, es);
  for (int r : roots)
    if (r < 0 || r >= n) throw MalformedInput("root " + std::to_string(r) + " is not a vertex");
  g.roots = RootSet(roots);
  return g;
}

// ---------------------------------------------------------------------------
// .hint (sidecar of a projective grid)
//   hint 1
//   branch a b c d
//   path v0 v1 ...        (six lines)
//   inner f0 f1 ...       (three lines, face ids of the .emb)
//   outer f0 f1 ...       (three lines)

inline std::string write_hint(const ProjectiveHint& h) {
  std::ostringstream os;
  os << "hint 1\nbranch";
  for (int b : h.branch) os << ' ' << b;
  os << "\n";
  auto put = [&](const char* key, const std::vector<std::vector<int>>& rows) {
    for (auto& r : rows) {
      os << key;
      for (int x : r) os << ' ' << x;
      os << "\n";
    }
  };
  put("path", h.paths);
  put("inner", h.inner_faces);
  put("outer", h.outer_faces);
  return os.str();
}

inline ProjectiveHint read_hint(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty() || detail::tokens(lines[0]) != std::vector<std::string>{"hint", "1"})
    throw MalformedInput("missing 'hint 1' header");
  ProjectiveHint h;
  for (std::size_t at = 1; at < lines.size(); ++at) {
    auto t = detail::tokens(lines[at]);
    std::vector<int> xs;
    for (std::size_t k = 1; k < t.size(); ++k) xs.push_back(static_cast<int>(detail::to_int(t[k], t[0])));
    if (t[0] == "branch")
      h.branch = xs;
    else if (t[0] == "path")
      h.paths.push_back(xs);
    else if (t[0] == "inner")
      h.inner_faces.push_back(xs);
    else if (t[0] == "outer")
      h.outer_faces.push_back(xs);
    else
      throw MalformedInput("unknown hint line '" + lines[at] + "'");
  }
  if (h.branch.size() != 4 || h.paths.size() != 6 || h.inner_faces.size() != 3 || h.outer_faces.size() != 3)
    throw MalformedInput("hint needs 4 branch vertices, 6 paths and 3 inner and outer face sets");
  return h;
}

}  // namespace facecover

#endif  // FACECOVER_IO_HPP
