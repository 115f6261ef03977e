#ifndef FACECOVER_MODEL_HPP
#define FACECOVER_MODEL_HPP

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "facecover/error.hpp"
#include "facecover/faces.hpp"
#include "facecover/graph.hpp"

namespace facecover {

/// Branch sets of a rooted K_{2,t} minor: two centers and t satellites.
struct RootedK2tModel {
  std::array<std::vector<int>, 2> centers;
  std::vector<std::vector<int>> satellites;
  // witness[j][i] joins centers[i] to satellites[j]; filled by verify_model
  // when empty.
  std::vector<std::array<std::pair<int, int>, 2>> witness;

  int t() const { return static_cast<int>(satellites.size()); }
};

/// Face ids of the host embedding.
struct FaceCover {
  std::vector<int> faces;
  int size() const { return static_cast<int>(faces.size()); }
};

using Certificate = std::variant<FaceCover, RootedK2tModel>;

struct Verdict {
  bool ok = true;
  std::vector<std::string> diagnostics;
  void fail(std::string s) {
    ok = false;
    diagnostics.push_back(std::move(s));
  }
};

/// Disjointness, connectivity, the 2t witness edges and root membership.
/// Missing witness edges are searched for and stored.
inline Verdict verify_model(const RootedGraph& g, RootedK2tModel& m) {
  Verdict out;
  std::vector<int> owner(g.n, -1);
  auto name = [&](int b) {
    return b < 2 ? "center " + std::to_string(b + 1) : "satellite " + std::to_string(b - 1);
  };
  std::vector<const std::vector<int>*> sets{&m.centers[0], &m.centers[1]};
  for (auto& s : m.satellites) sets.push_back(&s);
  for (std::size_t b = 0; b < sets.size(); ++b) {
    if (sets[b]->empty()) out.fail("empty " + name(static_cast<int>(b)));
    for (int v : *sets[b]) {
      if (v < 0 || v >= g.n) {
        out.fail(name(static_cast<int>(b)) + " has out-of-range vertex " + std::to_string(v));
        continue;
      }
      if (owner[v] >= 0 && owner[v] != static_cast<int>(b))
        out.fail("vertex " + std::to_string(v) + " in both " + name(owner[v]) + " and " + name(static_cast<int>(b)));
      owner[v] = static_cast<int>(b);
    }
  }
  if (!out.ok) return out;
  for (std::size_t b = 0; b < sets.size(); ++b) {
    std::vector<char> alive(g.n, 0);
    for (int v : *sets[b]) alive[v] = 1;
    if (!induced_connected(g.adj, alive)) out.fail(name(static_cast<int>(b)) + " is disconnected");
  }
  for (int j = 0; j < m.t(); ++j) {
    bool rooted = std::any_of(m.satellites[j].begin(), m.satellites[j].end(), [&](int v) { return g.roots.contains(v); });
    if (!rooted) out.fail("unrooted satellite " + std::to_string(j + 1));
  }
  bool given = m.witness.size() == m.satellites.size();
  if (!given) m.witness.assign(m.satellites.size(), {std::pair{-1, -1}, std::pair{-1, -1}});
  for (int j = 0; j < m.t(); ++j)
    for (int i = 0; i < 2; ++i) {
      auto& e = m.witness[j][i];
      if (given) {
        bool good = e.first >= 0 && e.first < g.n && e.second >= 0 && e.second < g.n && owner[e.first] == i &&
                    owner[e.second] == j + 2 && g.adjacent(e.first, e.second);
        if (!good) out.fail("bad witness edge between " + name(i) + " and " + name(j + 2));
        continue;
      }
      for (int v : m.centers[i]) {
        for (int w : g.adj[v])
          if (owner[w] == j + 2) {
            e = {v, w};
            break;
          }
        if (e.first >= 0) break;
      }
      if (e.first < 0) out.fail("no edge between " + name(i) + " and " + name(j + 2));
    }
  return out;
}

/// Every root lies on a listed face.
inline Verdict verify_cover(const RotationEmbedding& g, const FaceTrace& ft, const FaceCover& c) {
  Verdict out;
  std::vector<char> hit(g.num_vertices(), 0);
  for (int f : c.faces) {
    if (f < 0 || f >= ft.size()) {
      out.fail("unknown face f" + std::to_string(f));
      continue;
    }
    for (int d : ft.walks[f]) hit[g.tail(d)] = 1;
  }
  for (int r : g.roots().vertices())
    if (!hit[r]) out.fail("root " + std::to_string(r) + " is not covered");
  return out;
}

/// Centers V(T) \ S and V(T') \ S; satellites the singletons of S.
inline RootedK2tModel model_from_trees(const RootedGraph& g, const std::vector<std::pair<int, int>>& t1,
                                       const std::vector<std::pair<int, int>>& t2, const std::vector<int>& S) {
  auto norm = [](std::pair<int, int> e) { return std::pair{std::min(e.first, e.second), std::max(e.first, e.second)}; };
  std::set<std::pair<int, int>> e1;
  for (auto e : t1) e1.insert(norm(e));
  for (auto e : t2)
    if (e1.count(norm(e))) throw InvariantViolation("trees share an edge");
  auto verts = [&](const std::vector<std::pair<int, int>>& t) {
    std::vector<int> deg(g.n, 0);
    for (auto [u, v] : t) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  };
  auto d1 = verts(t1), d2 = verts(t2);
  std::vector<char> in_s(g.n, 0);
  for (int s : S) {
    if (d1[s] != 1 || d2[s] != 1) throw InvariantViolation("shared vertex " + std::to_string(s) + " is not a leaf of both trees");
    in_s[s] = 1;
  }
  RootedK2tModel m;
  for (int v = 0; v < g.n; ++v) {
    if (in_s[v]) continue;
    if (d1[v] && d2[v]) throw InvariantViolation("trees meet outside S at " + std::to_string(v));
    if (d1[v]) m.centers[0].push_back(v);
    if (d2[v]) m.centers[1].push_back(v);
  }
  for (int s : S) m.satellites.push_back({s});
  Verdict ver = verify_model(g, m);
  if (!ver.ok) throw InvariantViolation("model from trees fails verification: " + ver.diagnostics.front());
  return m;
}

// ---------------------------------------------------------------------------
// Certificate text: `cover f3 f17 ...` or
// `model x1: v0 v4 ; x2: v7 ; y1: v2 ; y2: v9 v10`

inline std::string to_string(const Certificate& c) {
  std::ostringstream os;
  if (auto* cov = std::get_if<FaceCover>(&c)) {
    os << "cover";
    for (int f : cov->faces) os << " f" << f;
  } else {
    const auto& m = std::get<RootedK2tModel>(c);
    os << "model";
    auto put = [&](const std::string& label, const std::vector<int>& set, bool last) {
      os << ' ' << label << ':';
      for (int v : set) os << " v" << v;
      if (!last) os << " ;";
    };
    put("x1", m.centers[0], false);
    put("x2", m.centers[1], m.satellites.empty());
    for (int j = 0; j < m.t(); ++j) put("y" + std::to_string(j + 1), m.satellites[j], j + 1 == m.t());
  }
  return os.str();
}

inline Certificate parse_certificate(const std::string& text) {
  std::istringstream is(text);
  std::string kind;
  if (!(is >> kind)) throw MalformedInput("empty certificate");
  auto number = [](const std::string& tok, char prefix) {
    if (tok.size() < 2 || tok[0] != prefix) throw MalformedInput("bad certificate token '" + tok + "'");
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(tok.substr(1), &used);
    } catch (const std::exception&) {
      throw MalformedInput("bad certificate token '" + tok + "'");
    }
    if (used + 1 != tok.size() || x < 0) throw MalformedInput("bad certificate token '" + tok + "'");
    return x;
  };
  if (kind == "cover") {
    FaceCover c;
    std::string tok;
    while (is >> tok) c.faces.push_back(number(tok, 'f'));
    return c;
  }
  if (kind != "model") throw MalformedInput("unknown certificate kind '" + kind + "'");
  RootedK2tModel m;
  std::string tok;
  std::vector<int>* cur = nullptr;
  std::vector<std::string> labels;
  while (is >> tok) {
    if (tok == ";") {
      cur = nullptr;
      continue;
    }
    if (tok.back() == ':') {
      std::string label = tok.substr(0, tok.size() - 1);
      labels.push_back(label);
      if (label == "x1") {
        cur = &m.centers[0];
      } else if (label == "x2") {
        cur = &m.centers[1];
      } else if (label.size() > 1 && label[0] == 'y' &&
                 number(label, 'y') == static_cast<int>(m.satellites.size()) + 1) {
        m.satellites.emplace_back();
        cur = &m.satellites.back();
      } else {
        throw MalformedInput("unexpected branch label '" + label + "'");
      }
      continue;
    }
    if (!cur) throw MalformedInput("vertex outside a branch set");
    cur->push_back(number(tok, 'v'));
  }
  if (labels.size() < 2 || labels[0] != "x1" || labels[1] != "x2") throw MalformedInput("model must start with x1 and x2");
  return m;
}

}  // namespace facecover

#endif  // FACECOVER_MODEL_HPP
