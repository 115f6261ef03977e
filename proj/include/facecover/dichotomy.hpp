#ifndef FACECOVER_DICHOTOMY_HPP
#define FACECOVER_DICHOTOMY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "facecover/faces.hpp"
#include "facecover/graph.hpp"
#include "facecover/model.hpp"
#include "facecover/oracles.hpp"
#include "facecover/schnyder.hpp"
#include "facecover/setcover.hpp"

namespace facecover {

/// t = 1: a root and two of its neighbours. t = 2: two roots joined by three
/// internally disjoint paths; two paths with inner vertices give the centers.
inline RootedK2tModel small_t_model(const RootedGraph& g, int t) {
  const auto& roots = g.roots.vertices();
  if (t < 1 || t > 2) throw PreconditionError("small model needs t in {1, 2}");
  if (static_cast<int>(roots.size()) < t) throw PreconditionError("fewer roots than t");
  RootedK2tModel m;
  if (t == 1) {
    for (int r : roots)
      if (g.adj[r].size() >= 2) {
        m.centers = {std::vector<int>{g.adj[r][0]}, std::vector<int>{g.adj[r][1]}};
        m.satellites = {{r}};
        break;
      }
    if (m.satellites.empty()) throw PreconditionError("every root has degree below 2");
  } else {
    for (std::size_t a = 0; a < roots.size() && m.satellites.empty(); ++a)
      for (std::size_t b = a + 1; b < roots.size() && m.satellites.empty(); ++b) {
        auto paths = disjoint_paths(g.adj, roots[a], roots[b], 3);
        std::vector<std::vector<int>> inner;
        for (auto& p : paths)
          if (p.size() > 2) inner.emplace_back(p.begin() + 1, p.end() - 1);
        if (inner.size() < 2) continue;
        for (int c = 0; c < 2; ++c) {
          std::sort(inner[c].begin(), inner[c].end());
          m.centers[c] = inner[c];
        }
        m.satellites = {{roots[a]}, {roots[b]}};
      }
    if (m.satellites.empty()) throw PreconditionError("no two roots are joined by two disjoint paths with inner vertices");
  }
  Verdict v = verify_model(g, m);
  if (!v.ok) throw InvariantViolation("small model fails verification: " + v.diagnostics.front());
  return m;
}

namespace detail {

inline std::vector<std::pair<int, int>> tree_edges(const SchnyderWood& w, int i, const std::vector<int>& vertices) {
  std::vector<std::pair<int, int>> out;
  for (int v : vertices)
    if (w.parent[i][v] >= 0) out.emplace_back(v, w.parent[i][v]);
  return out;
}

// x in Pi_j(z): x_{j-1} <= z_{j-1} and x_{j+1} <= z_{j+1}.
inline bool in_region(const SchnyderWood& w, int j, int x, int z) {
  int p = SchnyderWood::prev(j), q = SchnyderWood::next(j);
  return w.coord[x][p] <= w.coord[z][p] && w.coord[x][q] <= w.coord[z][q];
}

}  // namespace detail

/// Rooted K_{2,|S|} model from a chain S of the i-th dominance order: the
/// ancestor trees of S in trees i-1 and i+1 meet exactly in S.
inline RootedK2tModel model_from_chain(const RootedGraph& g, const SchnyderWood& w, int i, const std::vector<int>& S) {
  if (S.size() < 3) throw PreconditionError("chain model needs at least three roots");
  int ip = SchnyderWood::prev(i), in = SchnyderWood::next(i);
  for (int s : S) {
    if (s == w.special[ip] || s == w.special[in]) throw PreconditionError("chain contains a special vertex");
    if (!g.roots.contains(s)) throw PreconditionError("chain element is not a root");
  }
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b)
      if (dominance(w, S[a], S[b], i) == Order::incomparable) throw PreconditionError("set is not a chain");
  // Regions of the two other orders intersect only in S.
  std::set<int> sset(S.begin(), S.end());
  for (int x = 0; x < g.n; ++x) {
    bool a = false, b = false;
    for (int s : S) {
      a = a || detail::in_region(w, ip, x, s);
      b = b || detail::in_region(w, in, x, s);
    }
    if (a && b && !sset.count(x)) throw InvariantViolation("regions of the chain overlap outside it");
  }
  auto t1 = detail::tree_edges(w, ip, ancestors_subtree(w, ip, S));
  auto t2 = detail::tree_edges(w, in, ancestors_subtree(w, in, S));
  return model_from_trees(g, t1, t2, S);
}

/// Rooted K_{2,|S|} model from roots sharing the i-th coordinate c with
/// 0 < c < 1: T is the ancestor tree of S in tree i, T' the union of paths
/// that leave level c and then follow tree i-1.
inline RootedK2tModel model_from_level(const RootedGraph& g, const SchnyderWood& w, int i, const std::vector<int>& S) {
  if (S.size() < 3) throw PreconditionError("level model needs at least three roots");
  long c = w.coord[S[0]][i];
  for (int s : S) {
    if (w.coord[s][i] != c) throw PreconditionError("roots do not share the coordinate");
    if (!g.roots.contains(s)) throw PreconditionError("level element is not a root");
  }
  if (c <= 0 || c >= w.denominator) throw PreconditionError("shared coordinate must lie strictly between 0 and 1");
  int ip = SchnyderWood::prev(i);
  std::set<int> sset(S.begin(), S.end());
  auto tree = detail::tree_edges(w, i, ancestors_subtree(w, i, S));
  std::set<std::pair<int, int>> other;
  for (int u : S) {
    int v = u;
    bool below = false;
    int guard = 0;
    while (v != w.special[ip]) {
      int next = -1;
      if (!below) {
        for (int x : g.adj[v])
          if (w.coord[x][i] < c) {
            next = x;
            break;
          }
        if (next >= 0) below = true;
      }
      if (next < 0) next = w.parent[ip][v];
      if (next < 0) throw InvariantViolation("path left the tree");
      if (sset.count(next)) throw PreconditionError("path from a root meets another root of the level (roots share a face)");
      other.insert({std::min(v, next), std::max(v, next)});
      v = next;
      if (++guard > g.n) throw InvariantViolation("path does not reach the special vertex");
    }
  }
  std::vector<std::pair<int, int>> t2(other.begin(), other.end());
  return model_from_trees(g, tree, t2, S);
}

/// Result of the planar dichotomy with a short account of the branch taken.
struct DichotomyResult {
  Certificate certificate;
  std::string branch;      // small-t, cover, chain, level, oracle
  std::string report;
  bool cover_optimal = false;
};

struct DichotomyOptions {
  double oracle_budget = 120;
  long cover_node_budget = 5'000'000;
  bool check_input = true;
};

/// Face cover or rooted K_{2,t} model for a 3-connected plane rooted graph.
inline DichotomyResult plane_dichotomy(const RotationEmbedding& g, int t, const DichotomyOptions& opt = {}) {
  if (t < 1) throw PreconditionError("t must be positive");
  RootedGraph rg = RootedGraph::of(g);
  if (opt.check_input) {
    if (euler_genus(g) != 0) throw PreconditionError("embedding is not planar");
    if (!g.is_simple()) throw PreconditionError("graph is not simple");
    if (!is_k_connected(rg.adj, 3)) throw PreconditionError("graph is not 3-connected");
  }
  const auto& roots = g.roots().vertices();
  std::ostringstream rep;
  long t4 = static_cast<long>(t) * t * t * t;
  rep << "roots " << roots.size() << ", t " << t << ", 27t^4 = " << 27 * t4 << "\n";
  auto cover_branch = [&](const std::string& why) {
    DichotomyResult r;
    SearchStats st;
    CoverMode mode = roots.size() <= 200 ? CoverMode::exact : CoverMode::greedy;
    FaceCover c = min_face_cover(g, mode, &st, opt.cover_node_budget);
    r.certificate = c;
    r.branch = "cover";
    r.cover_optimal = st.optimal;
    rep << why << "\ncover of size " << c.size() << (st.optimal ? " (minimum)" : " (not proven minimum)") << "\n";
    r.report = rep.str();
    return r;
  };
  if (static_cast<int>(roots.size()) < t) return cover_branch("fewer roots than t");
  if (t <= 2) {
    DichotomyResult r;
    r.certificate = small_t_model(rg, t);
    r.branch = "small-t";
    rep << "small-t model\n";
    r.report = rep.str();
    return r;
  }
  WoodChoice wc = choose_specials(g, g.roots());
  std::vector<int> specials{wc.a1, wc.a2, wc.a3};
  int special_roots = 0;
  for (int a : specials) special_roots += g.roots().contains(a);
  SearchStats pst;
  auto indep = face_independent_roots(g, static_cast<int>(t4) + special_roots, &pst);
  std::vector<int> S0;
  for (int r : indep)
    if (std::find(specials.begin(), specials.end(), r) == specials.end()) S0.push_back(r);
  rep << "face-independent roots " << S0.size() << " (target " << t4 << ")" << (pst.optimal ? "" : ", greedy")
      << "\n";
  if (static_cast<long>(S0.size()) < t4) return cover_branch("fewer than t^4 face-independent roots");
  S0.resize(t4);
  SchnyderWood w = compute_schnyder_wood(g, wc.face, wc.a1, wc.a2, wc.a3);
  DichotomyResult r;
  for (int i = 0; i < 3; ++i) {
    auto mp = mirsky_partition(w, i, S0);
    if (static_cast<int>(mp.chain.size()) >= t) {
      std::vector<int> S(mp.chain.begin(), mp.chain.begin() + t);
      r.certificate = model_from_chain(rg, w, i, S);
      r.branch = "chain";
      rep << "chain of length " << mp.chain.size() << " in order " << i + 1 << "\n";
      r.report = rep.str();
      return r;
    }
  }
  // Three nested antichains, one per order.
  std::vector<int> S = S0;
  for (int i = 0; i < 3; ++i) {
    auto mp = mirsky_partition(w, i, S);
    const std::vector<int>* best = nullptr;
    for (auto& a : mp.antichains)
      if (!best || a.size() > best->size() || (a.size() == best->size() && a.front() < best->front())) best = &a;
    S = *best;
    rep << "antichain in order " << i + 1 << ": " << S.size() << "\n";
  }
  if (static_cast<int>(S.size()) >= 4 && static_cast<int>(S.size()) >= t) {
    for (int i = 0; i < 3; ++i) {
      std::map<long, std::vector<int>> level;
      for (int s : S) level[w.coord[s][i]].push_back(s);
      for (auto& [c, group] : level)
        if (static_cast<int>(group.size()) >= t && c > 0 && c < w.denominator) {
          std::vector<int> sub(group.begin(), group.begin() + t);
          r.certificate = model_from_level(rg, w, i, sub);
          r.branch = "level";
          rep << "level " << c << "/" << w.denominator << " in coordinate " << i + 1 << "\n";
          r.report = rep.str();
          return r;
        }
    }
    throw InvariantViolation("antichain of size " + std::to_string(S.size()) +
                             " in all three orders has no constant coordinate");
  }
  // Small endgame: exhaustive search.
  OracleResult o = brute_force_rooted_k2t(rg, t, opt.oracle_budget);
  if (o.status == OracleStatus::found) {
    r.certificate = *o.model;
    r.branch = "oracle";
    rep << "endgame solved by exhaustive search\n";
    r.report = rep.str();
    return r;
  }
  return cover_branch(o.status == OracleStatus::absent ? "exhaustive search found no model"
                                                       : "exhaustive search timed out");
}

}  // namespace facecover

#endif  // FACECOVER_DICHOTOMY_HPP
