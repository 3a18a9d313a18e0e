// Convex subsets of W, generalized descent classes W_A^D, A-cells, and the
// reflection data (T_K, boundary directions) attached to a cell.  Also the
// reflection-cut decomposition of the Cayley graph.

#pragma once

#include "ayc/coxeter.hpp"

#include <functional>

namespace ayc {

/// An ordered subset K of W together with its edge-reflection data:
/// T_K   = { w s w^-1 : w in K, ws in K }
/// T_dK  = { w s w^-1 : w in K, ws not in K }
/// and, for boundary reflections, the common length direction of the
/// crossings (+1 all up, -1 all down).  Directions are only well defined
/// for convex K; construction fails loudly on a conflict.
struct Cell {
  const CoxeterSystem* sys = nullptr;
  std::vector<Elem> members;  // sorted by element index (ShortLex)
  std::vector<char> mask;     // |W| membership indicator
  ReflSet t_internal, t_boundary;
  std::vector<int> out_dir;   // indexed by reflection; +1, -1, or 0 if unused

  bool contains(Elem w) const { return mask[static_cast<size_t>(w)] != 0; }
  size_t size() const { return members.size(); }
};

inline Cell make_cell(const CoxeterSystem& sys, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Cell k;
  k.sys = &sys;
  k.mask.assign(sys.order(), 0);
  for (Elem w : members) {
    if (w < 0 || w >= static_cast<Elem>(sys.order()))
      throw error("cell member out of range");
    k.mask[w] = 1;
  }
  k.members = std::move(members);
  k.t_internal = sys.empty_refl_set();
  k.t_boundary = sys.empty_refl_set();
  k.out_dir.assign(sys.num_reflections(), 0);
  for (Elem w : k.members) {
    for (int s = 0; s < sys.rank(); ++s) {
      Elem ws = sys.right(w, s);
      Refl t = sys.refl_of(sys.conj(w, sys.gen(s)));
      if (k.contains(ws)) {
        k.t_internal.set(t);
      } else {
        k.t_boundary.set(t);
        int dir = sys.length(ws) > sys.length(w) ? 1 : -1;
        if (k.out_dir[t] == 0)
          k.out_dir[t] = dir;
        else if (k.out_dir[t] != dir)
          throw error("boundary direction undefined for reflection t" +
                      std::to_string(t) + " (cell is not convex)");
      }
    }
  }
  return k;
}

/// W_A^D = { w : Des_A(w) = D }.  May be empty.
inline Cell generalized_descent_class(const CoxeterSystem& sys, const ReflSet& A,
                                      const ReflSet& D) {
  if ((D & ~A).any()) throw error("descent spec requires D to be a subset of A");
  std::vector<Elem> members;
  for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
    if (sys.descent_set(w, A) == D) members.push_back(w);
  return make_cell(sys, std::move(members));
}

/// The A-cell of w: closure of w under moves w <-> ws with w s w^-1 not in A.
inline Cell a_cell(const CoxeterSystem& sys, const ReflSet& A, Elem w) {
  std::vector<char> in(sys.order(), 0);
  std::vector<Elem> queue{w};
  in[w] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    Elem v = queue[i];
    for (int s = 0; s < sys.rank(); ++s) {
      Refl t = sys.refl_of(sys.conj(v, sys.gen(s)));
      if (A.test(t)) continue;
      Elem vs = sys.right(v, s);
      if (!in[vs]) {
        in[vs] = 1;
        queue.push_back(vs);
      }
    }
  }
  return make_cell(sys, std::move(queue));
}

struct ConvexityResult {
  bool convex = true;
  Elem witness = -1;  // vertex outside K on some internal geodesic
};

/// Geodesic convexity, cross-checked against the descent-class
/// characterization (a set is convex iff it equals W_A^D for A the set of
/// exiting edge labels and D the A-descents of any member).
inline ConvexityResult is_convex(const CoxeterSystem& sys,
                                 const std::vector<Elem>& members_in) {
  std::vector<Elem> members = members_in;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  ConvexityResult res;
  if (!members.empty()) {
    std::vector<char> mask(sys.order(), 0);
    for (Elem w : members) mask[w] = 1;
    // x lies on a geodesic from u to v iff d(u,x) + d(x,v) = d(u,v);
    // BFS distances avoid enumerating geodesics
    auto bfs = [&](Elem src) {
      std::vector<int> dist(sys.order(), -1);
      std::vector<Elem> queue{src};
      dist[src] = 0;
      for (size_t i = 0; i < queue.size(); ++i)
        for (int s = 0; s < sys.rank(); ++s) {
          Elem y = sys.right(queue[i], s);
          if (dist[y] == -1) {
            dist[y] = dist[queue[i]] + 1;
            queue.push_back(y);
          }
        }
      return dist;
    };
    std::vector<std::vector<int>> dist;
    dist.reserve(members.size());
    for (Elem u : members) dist.push_back(bfs(u));
    for (size_t a = 0; a < members.size() && res.convex; ++a)
      for (size_t b = a + 1; b < members.size() && res.convex; ++b) {
        int duv = dist[a][members[b]];
        for (Elem x = 0; x < static_cast<Elem>(sys.order()); ++x) {
          if (mask[x]) continue;
          if (dist[a][x] + dist[b][x] == duv) {
            res.convex = false;
            res.witness = x;
            break;
          }
        }
      }
  }

  // Tits cross-check
  bool tits;
  if (members.empty()) {
    tits = true;  // convention: the empty set is convex
  } else {
    ReflSet A = sys.empty_refl_set();
    std::vector<char> mask(sys.order(), 0);
    for (Elem w : members) mask[w] = 1;
    for (Elem w : members)
      for (int s = 0; s < sys.rank(); ++s)
        if (!mask[sys.right(w, s)]) A.set(sys.refl_of(sys.conj(w, sys.gen(s))));
    ReflSet D = sys.descent_set(members.front(), A);
    std::vector<Elem> cls;
    for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
      if (sys.descent_set(w, A) == D) cls.push_back(w);
    tits = cls == members;
  }
  if (tits != res.convex)
    throw error("internal: geodesic convexity disagrees with the descent-class test");
  return res;
}

/// Connected components of the Cayley graph after deleting every edge
/// {w, ws} with w s w^-1 = t.  Always exactly two; the first contains the
/// identity.  Each deleted edge has one endpoint in each component.
inline std::pair<std::vector<Elem>, std::vector<Elem>> reflection_cut(
    const CoxeterSystem& sys, Refl t) {
  if (t < 0 || t >= sys.num_reflections()) throw error("reflection index out of range");
  std::vector<int> comp(sys.order(), -1);
  int ncomp = 0;
  for (Elem seed = 0; seed < static_cast<Elem>(sys.order()); ++seed) {
    if (comp[seed] != -1) continue;
    int c = ncomp++;
    std::vector<Elem> queue{seed};
    comp[seed] = c;
    for (size_t i = 0; i < queue.size(); ++i) {
      Elem w = queue[i];
      for (int s = 0; s < sys.rank(); ++s) {
        if (sys.refl_of(sys.conj(w, sys.gen(s))) == t) continue;
        Elem ws = sys.right(w, s);
        if (comp[ws] == -1) {
          comp[ws] = c;
          queue.push_back(ws);
        }
      }
    }
  }
  if (ncomp != 2)
    throw error("internal: reflection cut produced " + std::to_string(ncomp) +
                " components");
  std::pair<std::vector<Elem>, std::vector<Elem>> out;
  for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
    (comp[w] == comp[0] ? out.first : out.second).push_back(w);
  return out;
}

/// Strong connectivity of the directed graph on K whose arcs v -> vs are
/// the internal arcs accepted by the predicate.
inline bool is_strongly_connected(
    const CoxeterSystem& sys, const Cell& k,
    const std::function<bool(Elem, int, Elem)>& feasible) {
  if (k.members.empty()) return false;
  if (k.members.size() == 1) return true;
  auto reach = [&](bool forward) {
    std::vector<char> vis(sys.order(), 0);
    std::vector<Elem> queue{k.members.front()};
    vis[queue[0]] = 1;
    size_t count = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      Elem v = queue[i];
      for (int s = 0; s < sys.rank(); ++s) {
        Elem vs = sys.right(v, s);
        if (!k.contains(vs) || vis[vs]) continue;
        bool arc = forward ? feasible(v, s, vs) : feasible(vs, s, v);
        if (!arc) continue;
        vis[vs] = 1;
        ++count;
        queue.push_back(vs);
      }
    }
    return count == k.members.size();
  };
  return reach(true) && reach(false);
}

}  // namespace ayc
