#ifndef FACECOVER_SETCOVER_HPP
#define FACECOVER_SETCOVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "facecover/error.hpp"
#include "facecover/faces.hpp"
#include "facecover/model.hpp"

namespace facecover {

namespace detail {

// Minimal dynamic bitset over words.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n = 0) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  int first() const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w[k]));
    return -1;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= o.w[k];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= ~o.w[k];
    return r;
  }
  template <class F>
  void each(F f) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(static_cast<int>(k * 64 + __builtin_ctzll(x)));
  }
};

}  // namespace detail

/// Outcome of an exact search that may run out of budget.
struct SearchStats {
  bool optimal = true;
  long nodes = 0;
};

/// Roots that conflict (share a face) with each root, as indices into
/// `roots`.
inline std::vector<std::vector<int>> root_conflicts(const RotationEmbedding& g, const FaceTrace& ft,
                                                    const std::vector<int>& roots) {
  int n = g.num_vertices();
  std::vector<int> index(n, -1);
  for (std::size_t k = 0; k < roots.size(); ++k) index[roots[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> out(roots.size());
  for (int f = 0; f < ft.size(); ++f) {
    std::vector<int> on;
    for (int d : ft.walks[f])
      if (index[g.tail(d)] >= 0) on.push_back(index[g.tail(d)]);
    std::sort(on.begin(), on.end());
    on.erase(std::unique(on.begin(), on.end()), on.end());
    for (int a : on)
      for (int b : on)
        if (a != b) out[a].push_back(b);
  }
  for (auto& c : out) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return out;
}

/// Maximum independent set of a graph by branch and bound with a greedy
/// colouring bound. Stops early at `target` or when `node_budget` runs out
/// (then `stats.optimal` is false).
inline std::vector<int> max_independent_set(const std::vector<std::vector<int>>& adj, SearchStats* stats = nullptr,
                                            int target = -1, long node_budget = 20'000'000) {
  using detail::Bits;
  int n = static_cast<int>(adj.size());
  std::vector<Bits> nb(n, Bits(n));
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) nb[v].set(w);
  std::vector<int> best, cur;
  // Greedy start: smallest remaining degree first.
  {
    Bits cand(n);
    for (int v = 0; v < n; ++v) cand.set(v);
    while (cand.any()) {
      int pick = -1, bd = n + 1;
      cand.each([&](int v) {
        int d = (nb[v] & cand).count();
        if (d < bd) {
          bd = d;
          pick = v;
        }
      });
      best.push_back(pick);
      cand = cand.minus(nb[pick]);
      cand.reset(pick);
    }
  }
  long nodes = 0;
  bool cut = false;
  // Independent sets in G are cliques in the complement; colour classes of
  // the complement are cliques of G, each holding at most one chosen vertex.
  std::function<void(Bits)> rec = [&](Bits cand) {
    if (cut || (target >= 0 && static_cast<int>(best.size()) >= target)) return;
    if (++nodes > node_budget) {
      cut = true;
      return;
    }
    if (!cand.any()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    // Bound: cover cand by cliques of G greedily.
    std::vector<int> order;
    std::vector<int> cls;
    {
      Bits left = cand;
      int k = 0;
      while (left.any()) {
        ++k;
        Bits q = left;
        while (q.any()) {
          int v = q.first();
          q = q & nb[v];
          left.reset(v);
          order.push_back(v);
          cls.push_back(k);
        }
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (static_cast<int>(cur.size()) + cls[idx] <= static_cast<int>(best.size())) return;
      int v = order[idx];
      if (!cand.test(v)) continue;
      cur.push_back(v);
      Bits next = cand.minus(nb[v]);
      next.reset(v);
      rec(next);
      cur.pop_back();
      cand.reset(v);
      if (cut) return;
    }
  };
  Bits all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  rec(all);
  if (stats) {
    stats->nodes = nodes;
    stats->optimal = !cut;
  }
  std::sort(best.begin(), best.end());
  return best;
}

/// Maximum set of roots pairwise not on a common face (the packing number).
inline std::vector<int> max_face_independent_set(const RotationEmbedding& g, SearchStats* stats = nullptr,
                                                 int max_roots = 40) {
  const auto& roots = g.roots().vertices();
  if (static_cast<int>(roots.size()) > max_roots)
    throw PreconditionError("exact packing refused: " + std::to_string(roots.size()) + " roots exceed the limit of " +
                            std::to_string(max_roots));
  FaceTrace ft = trace_faces(g);
  auto idx = max_independent_set(root_conflicts(g, ft, roots), stats);
  std::vector<int> out;
  for (int k : idx) out.push_back(roots[k]);
  return out;
}

/// Face-independent roots, at least min(target, packing number) of them when
/// the search finishes (`stats->optimal`), otherwise a greedy-seeded best.
inline std::vector<int> face_independent_roots(const RotationEmbedding& g, int target, SearchStats* stats = nullptr,
                                               const std::vector<int>& exclude = {}) {
  std::vector<int> roots;
  for (int r : g.roots().vertices())
    if (std::find(exclude.begin(), exclude.end(), r) == exclude.end()) roots.push_back(r);
  FaceTrace ft = trace_faces(g);
  SearchStats local;
  auto idx = max_independent_set(root_conflicts(g, ft, roots), &local, target, roots.size() <= 64 ? 20'000'000 : 200'000);
  if (stats) *stats = local;
  std::vector<int> out;
  for (int k : idx) out.push_back(roots[k]);
  if (target >= 0 && static_cast<int>(out.size()) > target) out.resize(target);
  return out;
}

/// Set cover over roots by faces.
enum class CoverMode { exact, greedy };

inline FaceCover greedy_face_cover(const RotationEmbedding& g, const FaceTrace& ft) {
  int n = g.num_vertices();
  std::vector<char> need(n, 0);
  int left = 0;
  for (int r : g.roots().vertices()) {
    need[r] = 1;
    ++left;
  }
  std::vector<std::vector<int>> on(ft.size());
  for (int f = 0; f < ft.size(); ++f) {
    on[f] = ft.walk_vertices(g, f);
    std::sort(on[f].begin(), on[f].end());
    on[f].erase(std::unique(on[f].begin(), on[f].end()), on[f].end());
  }
  FaceCover c;
  while (left > 0) {
    int best = -1, gain = 0;
    for (int f = 0; f < ft.size(); ++f) {
      int k = 0;
      for (int v : on[f]) k += need[v];
      if (k > gain) {
        gain = k;
        best = f;
      }
    }
    if (best < 0) throw PreconditionError("a root lies on no face");
    c.faces.push_back(best);
    for (int v : on[best])
      if (need[v]) {
        need[v] = 0;
        --left;
      }
  }
  std::sort(c.faces.begin(), c.faces.end());
  return c;
}

/// Minimum face cover by branch and bound: branch on the uncovered root with
/// the fewest faces, bound by a greedy packing of uncovered roots. Falls back
/// to the best cover found when the node budget runs out.
inline FaceCover min_face_cover(const RotationEmbedding& g, CoverMode mode = CoverMode::exact,
                                SearchStats* stats = nullptr, long node_budget = 5'000'000) {
  using detail::Bits;
  FaceTrace ft = trace_faces(g);
  FaceCover greedy = greedy_face_cover(g, ft);
  if (stats) *stats = {mode == CoverMode::exact, 0};
  if (mode == CoverMode::greedy) {
    if (stats) stats->optimal = false;
    return greedy;
  }
  const auto& roots = g.roots().vertices();
  int m = static_cast<int>(roots.size());
  if (m == 0) return {};
  std::vector<int> index(g.num_vertices(), -1);
  for (int k = 0; k < m; ++k) index[roots[k]] = k;
  int F = ft.size();
  std::vector<Bits> face_roots(F, Bits(m));
  std::vector<std::vector<int>> faces_of(m);
  for (int f = 0; f < F; ++f)
    for (int d : ft.walks[f]) {
      int k = index[g.tail(d)];
      if (k >= 0 && !face_roots[f].test(k)) {
        face_roots[f].set(k);
        faces_of[k].push_back(f);
      }
    }
  // Drop faces whose roots are a subset of another face's roots.
  std::vector<char> useful(F, 1);
  for (int f = 0; f < F; ++f) {
    if (!face_roots[f].any()) {
      useful[f] = 0;
      continue;
    }
    for (int h = 0; h < F && useful[f]; ++h) {
      if (h == f || !useful[h]) continue;
      if (!face_roots[f].minus(face_roots[h]).any() &&
          (face_roots[h].minus(face_roots[f]).any() || h < f))
        useful[f] = 0;
    }
  }
  for (auto& fs : faces_of) fs.erase(std::remove_if(fs.begin(), fs.end(), [&](int f) { return !useful[f]; }), fs.end());
  std::vector<int> best = greedy.faces, cur;
  long nodes = 0;
  bool cut = false;
  std::function<void(const Bits&)> rec = [&](const Bits& open) {
    if (cut) return;
    if (++nodes > node_budget) {
      cut = true;
      return;
    }
    if (!open.any()) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    // Lower bound: greedily pick open roots with pairwise disjoint face sets.
    int bound = 0;
    int pivot = -1;
    std::size_t pivot_deg = SIZE_MAX;
    {
      Bits avail = open;
      while (avail.any()) {
        int k = avail.first();
        ++bound;
        avail.reset(k);
        for (int f : faces_of[k]) avail = avail.minus(face_roots[f]);
      }
      open.each([&](int k) {
        if (faces_of[k].size() < pivot_deg) {
          pivot_deg = faces_of[k].size();
          pivot = k;
        }
      });
    }
    if (static_cast<int>(cur.size()) + bound >= static_cast<int>(best.size())) return;
    std::vector<int> opts = faces_of[pivot];
    std::sort(opts.begin(), opts.end(), [&](int a, int b) {
      int ga = (face_roots[a] & open).count(), gb = (face_roots[b] & open).count();
      return ga != gb ? ga > gb : a < b;
    });
    for (int f : opts) {
      cur.push_back(f);
      rec(open.minus(face_roots[f]));
      cur.pop_back();
      if (cut) return;
    }
  };
  Bits open(m);
  for (int k = 0; k < m; ++k) open.set(k);
  rec(open);
  if (stats) {
    stats->nodes = nodes;
    stats->optimal = !cut;
  }
  std::sort(best.begin(), best.end());
  return {best};
}

}  // namespace facecover

#endif  // FACECOVER_SETCOVER_HPP
