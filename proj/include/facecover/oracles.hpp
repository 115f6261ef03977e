#ifndef FACECOVER_ORACLES_HPP
#define FACECOVER_ORACLES_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <queue>
#include <vector>

#include "facecover/graph.hpp"
#include "facecover/model.hpp"

namespace facecover {

enum class OracleStatus { found, absent, timeout };

struct OracleResult {
  OracleStatus status = OracleStatus::absent;
  std::optional<RootedK2tModel> model;
  long nodes = 0;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))),
        unlimited_(seconds <= 0) {}
  bool passed() {
    if (unlimited_ || ++tick_ % 1024) return false;
    return std::chrono::steady_clock::now() > end_;
  }

 private:
  std::chrono::steady_clock::time_point end_;
  bool unlimited_;
  long tick_ = 0;
};

struct Timeout {};

// Disjoint connected X1, X2 inside `alive`, each meeting every terminal set.
// X1 is grown from a vertex of the first terminal set and stops as soon as
// it meets all sets (smaller X1 never hurts X2).
inline bool two_hitting_sets(const RootedGraph& g, const std::vector<char>& alive,
                             const std::vector<std::vector<int>>& terminals, std::vector<int>& x1,
                             std::vector<int>& x2, Deadline& clock, long& nodes) {
  int n = g.n;
  int k = static_cast<int>(terminals.size());
  std::vector<std::vector<char>> is_term(k, std::vector<char>(n, 0));
  for (int j = 0; j < k; ++j)
    for (int v : terminals[j])
      if (alive[v]) is_term[j][v] = 1;
  auto hits_all = [&](const std::vector<char>& in) {
    for (int j = 0; j < k; ++j) {
      bool hit = false;
      for (int v : terminals[j])
        if (in[v]) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  // Component of the remainder that meets every set.
  auto find_x2 = [&](const std::vector<char>& in1) -> bool {
    std::vector<char> rest(n, 0);
    for (int v = 0; v < n; ++v) rest[v] = alive[v] && !in1[v];
    int count = 0;
    auto comp = components(g.adj, rest, &count);
    for (int c = 0; c < count; ++c) {
      std::vector<char> in(n, 0);
      for (int v = 0; v < n; ++v) in[v] = comp[v] == c;
      if (hits_all(in)) {
        x2.clear();
        for (int v = 0; v < n; ++v)
          if (in[v]) x2.push_back(v);
        return true;
      }
    }
    return false;
  };
  if (k == 0) throw PreconditionError("no terminal sets");
  std::vector<int> starts;
  for (int v : terminals[0])
    if (alive[v]) starts.push_back(v);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::vector<char> banned(n, 0), in(n, 0);
  // Connected sets containing s and avoiding earlier starts, by the
  // extension-set enumeration (each set produced once).
  for (int s : starts) {
    std::vector<int> set{s};
    in[s] = 1;
    std::vector<int> ext;
    for (int w : g.adj[s])
      if (alive[w] && !banned[w]) ext.push_back(w);
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    for (int w : ext) seen[w] = 1;
    bool ok = false;
    auto rec = [&](auto&& self, std::vector<int> cand) -> bool {
      if (clock.passed()) throw Timeout{};
      ++nodes;
      if (hits_all(in)) {
        if (find_x2(in)) {
          x1 = set;
          return true;
        }
        return false;
      }
      while (!cand.empty()) {
        int w = cand.back();
        cand.pop_back();
        set.push_back(w);
        in[w] = 1;
        std::vector<int> next = cand, fresh;
        for (int u : g.adj[w])
          if (alive[u] && !banned[u] && !seen[u]) {
            seen[u] = 1;
            fresh.push_back(u);
            next.push_back(u);
          }
        bool r = self(self, next);
        for (int u : fresh) seen[u] = 0;
        in[w] = 0;
        set.pop_back();
        if (r) return true;
      }
      return false;
    };
    ok = rec(rec, ext);
    in[s] = 0;
    if (ok) return true;
    banned[s] = 1;
  }
  return false;
}

}  // namespace detail

/// Exhaustive search for a rooted K_{2,t} model. When every vertex is a
/// root, satellites are single vertices without loss of generality;
/// otherwise branch sets partition the vertex set of one component.
/// `budget_seconds` <= 0 means no limit.
inline OracleResult brute_force_rooted_k2t(const RootedGraph& g, int t, double budget_seconds = 60,
                                           bool force_partition_search = false) {
  OracleResult res;
  if (t < 1) throw PreconditionError("t must be positive");
  if (static_cast<int>(g.roots.size()) < t || g.n < t + 2) return res;
  detail::Deadline clock(budget_seconds);
  int n = g.n;
  bool all_roots = static_cast<int>(g.roots.size()) == n && !force_partition_search;
  try {
    if (all_roots) {
      std::vector<int> ys;
      std::vector<char> alive(n, 1);
      auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(ys.size()) == t) {
          std::vector<std::vector<int>> terms;
          for (int y : ys) {
            std::vector<int> tv;
            for (int w : g.adj[y])
              if (alive[w]) tv.push_back(w);
            if (tv.size() < 2) return false;
            terms.push_back(tv);
          }
          std::vector<int> x1, x2;
          if (!detail::two_hitting_sets(g, alive, terms, x1, x2, clock, res.nodes)) return false;
          RootedK2tModel m;
          m.centers = {x1, x2};
          for (int y : ys) m.satellites.push_back({y});
          res.model = m;
          return true;
        }
        for (int v = start; v < n; ++v) {
          if (n - v < t - static_cast<int>(ys.size())) break;
          ys.push_back(v);
          alive[v] = 0;
          bool r = self(self, v + 1);
          alive[v] = 1;
          ys.pop_back();
          if (r) return true;
        }
        return false;
      };
      rec(rec, 0);
    } else {
      // Every component is searched on its own; inside it all vertices are
      // used (unused ones can be absorbed into a neighbouring branch set).
      std::vector<char> all(n, 1);
      int nc = 0;
      auto comp = components(g.adj, all, &nc);
      for (int c = 0; c < nc && !res.model; ++c) {
        std::vector<int> order;
        {
          int s = static_cast<int>(std::find(comp.begin(), comp.end(), c) - comp.begin());
          std::vector<char> seen(n, 0);
          std::queue<int> q;
          q.push(s);
          seen[s] = 1;
          while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : g.adj[v])
              if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
              }
          }
        }
        int m = static_cast<int>(order.size());
        int roots_here = 0;
        for (int v : order) roots_here += g.roots.contains(v);
        if (roots_here < t || m < t + 2) continue;
        int parts = t + 2;
        std::vector<int> label(n, -1);
        std::vector<int> size(parts, 0);
        int opened = 0;  // satellites in use
        std::vector<int> mark(n, 0);
        int stamp = 0;
        // Region of part p: its vertices plus unassigned ones reachable
        // through them. Returns false if the part cannot become connected.
        std::vector<int> region;
        auto grow = [&](int p) -> bool {
          ++stamp;
          region.clear();
          int s = -1;
          for (int v : order)
            if (label[v] == p) {
              s = v;
              break;
            }
          region.push_back(s);
          mark[s] = stamp;
          for (std::size_t h = 0; h < region.size(); ++h)
            for (int w : g.adj[region[h]])
              if (mark[w] != stamp && (label[w] == p || label[w] == -1)) {
                mark[w] = stamp;
                region.push_back(w);
              }
          int reached = 0;
          for (int v : region) reached += label[v] == p;
          return reached == size[p];
        };
        auto feasible = [&](int left) -> bool {
          int missing = (t - opened) + (size[0] == 0) + (size[1] == 0);
          if (missing > left) return false;
          std::vector<std::vector<char>> reach(2, std::vector<char>(n, 0));
          for (int p = 0; p < 2; ++p) {
            if (size[p] == 0) continue;
            if (!grow(p)) return false;
            for (int v : region) reach[p][v] = 1;
          }
          for (int p = 2; p < 2 + opened; ++p) {
            if (!grow(p)) return false;
            bool root = false;
            for (int v : region)
              if (g.roots.contains(v)) {
                root = true;
                break;
              }
            if (!root) return false;
            for (int c = 0; c < 2; ++c) {
              if (size[c] == 0) continue;
              bool touch = false;
              for (int v : region) {
                for (int w : g.adj[v])
                  if (reach[c][w] && (label[w] == c || label[w] == -1 || label[v] == -1)) {
                    touch = true;
                    break;
                  }
                if (touch) break;
              }
              if (!touch) return false;
            }
          }
          return true;
        };
        auto complete = [&]() -> bool {
          if (opened != t || size[0] == 0 || size[1] == 0) return false;
          for (int j = 0; j < t; ++j)
            for (int c = 0; c < 2; ++c) {
              bool touch = false;
              for (int v : order)
                if (label[v] == 2 + j) {
                  for (int w : g.adj[v])
                    if (label[w] == c) touch = true;
                }
              if (!touch) return false;
            }
          return true;
        };
        auto rec = [&](auto&& self, int k) -> bool {
          if (clock.passed()) throw detail::Timeout{};
          ++res.nodes;
          if (k == m) return complete();
          int v = order[k];
          int top = 2 + std::min(opened + 1, t);
          for (int p = 0; p < top; ++p) {
            if (p == 1 && size[0] == 0) continue;  // X1 is opened first
            bool fresh = p >= 2 && p == 2 + opened;
            label[v] = p;
            ++size[p];
            if (fresh) ++opened;
            bool r = feasible(m - k - 1) && self(self, k + 1);
            if (r) return true;  // keep the labelling
            if (fresh) --opened;
            --size[p];
            label[v] = -1;
            if (r) return true;
          }
          return false;
        };
        if (rec(rec, 0)) {
          RootedK2tModel mdl;
          for (int v : order) {
            if (label[v] == 0) mdl.centers[0].push_back(v);
            if (label[v] == 1) mdl.centers[1].push_back(v);
          }
          mdl.satellites.assign(t, {});
          for (int v : order)
            if (label[v] >= 2) mdl.satellites[label[v] - 2].push_back(v);
          for (auto& s : mdl.centers) std::sort(s.begin(), s.end());
          for (auto& s : mdl.satellites) std::sort(s.begin(), s.end());
          res.model = mdl;
        }
      }
    }
  } catch (const detail::Timeout&) {
    res.status = OracleStatus::timeout;
    return res;
  }
  if (res.model) {
    Verdict v = verify_model(g, *res.model);
    if (!v.ok) throw InvariantViolation("oracle produced an invalid model: " + v.diagnostics.front());
    res.status = OracleStatus::found;
  } else {
    res.status = OracleStatus::absent;
  }
  return res;
}

}  // namespace facecover

#endif  // FACECOVER_ORACLES_HPP
