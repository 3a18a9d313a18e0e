// Conjugation paths: given two pairs (w,s), (w~,s~) in W x S presenting the
// same reflection w s w^-1 = w~ s~ w~^-1, produce the explicit sequence of
// intermediate pairs connected by braid moves, with strictly decreasing
// distance to the target pair.  The search over reduced expressions follows
// the braid-move graph breadth first; among equally close matches the
// lexicographically smallest expression wins, which makes the output
// deterministic.

#pragma once

#include "ayc/coxeter.hpp"

#include <set>

namespace ayc {

struct ConjugationPath {
  Elem w;   // source pair
  int s;
  Elem wt;  // target pair
  int st;
  int epsilon = 0;                              // w_1 = w s^epsilon
  std::vector<std::pair<Elem, int>> pairs;      // (w_i, s_i), last = (wt, st)
  std::vector<std::pair<int, int>> braid_moves; // (sdot_i, m_i) between pairs
};

namespace detail {

// All single braid-move rewrites of a reduced expression, in scan order.
inline std::vector<std::vector<int>> braid_neighbors(const CoxeterSystem& sys,
                                                     const std::vector<int>& e) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(e.size());
  for (int i = 0; i + 1 < n; ++i) {
    int a = e[i], b = e[i + 1];
    if (a == b) continue;
    int m = sys.coxeter_m(a, b);
    if (i + m > n) continue;
    bool run = true;
    for (int j = 0; j < m; ++j)
      if (e[i + j] != ((j % 2 == 0) ? a : b)) {
        run = false;
        break;
      }
    if (!run) continue;
    auto f = e;
    for (int j = 0; j < m; ++j) f[i + j] = (j % 2 == 0) ? b : a;
    out.push_back(std::move(f));
  }
  return out;
}

// True if the last m(s, sdot) letters of e form the alternating block
// ... sdot s; returns the block length through m_out.
inline bool tail_block(const CoxeterSystem& sys, const std::vector<int>& e,
                       int s, int& sdot_out, int& m_out) {
  int n = static_cast<int>(e.size());
  if (n < 2 || e[n - 1] != s) return false;
  int sdot = e[n - 2];
  int m = sys.coxeter_m(s, sdot);
  if (n < m) return false;
  for (int j = 0; j < m; ++j)
    if (e[n - 1 - j] != ((j % 2 == 0) ? s : sdot)) return false;
  sdot_out = sdot;
  m_out = m;
  return true;
}

}  // namespace detail

/// Constructs the Lemma-style path from (w,s) to (wt,st); throws if the two
/// pairs do not present the same reflection.
inline ConjugationPath conjugation_path(const CoxeterSystem& sys, Elem w, int s,
                                        Elem wt, int st) {
  if (s < 0 || s >= sys.rank() || st < 0 || st >= sys.rank())
    throw error("conjugation_path: generator index out of range");
  if (sys.conj(w, sys.gen(s)) != sys.conj(wt, sys.gen(st)))
    throw error("conjugation_path: the two pairs present different reflections");

  ConjugationPath path;
  path.w = w;
  path.s = s;
  path.wt = wt;
  path.st = st;

  Elem wti = sys.inverse(wt);
  Elem u0 = sys.mult(wti, w);
  path.epsilon = sys.length(sys.right(u0, s)) > sys.length(u0) ? 0 : 1;

  Elem wi = path.epsilon ? sys.right(w, s) : w;
  int si = s;
  path.pairs.emplace_back(wi, si);

  while (true) {
    Elem u = sys.mult(wti, wi);
    if (u == sys.id()) break;

    // reduced expression of u s_i ending in s_i
    std::vector<int> start = sys.word(u);
    start.push_back(si);

    // breadth-first search over braid moves; per level, matches are
    // resolved by lexicographic order of the whole expression
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> level{start};
    int sdot = -1, m = -1;
    std::vector<int> match;
    while (match.empty()) {
      if (level.empty())
        throw error("internal: braid-move search exhausted without a match");
      std::vector<std::vector<int>> next;
      for (const auto& e : level) {
        int sd, mm;
        if (detail::tail_block(sys, e, si, sd, mm)) {
          if (match.empty() || e < match) {
            match = e;
            sdot = sd;
            m = mm;
          }
        }
      }
      if (!match.empty()) break;
      for (const auto& e : level)
        for (auto& f : detail::braid_neighbors(sys, e))
          if (seen.insert(f).second) next.push_back(std::move(f));
      level = std::move(next);
    }

    std::vector<int> prefix(match.begin(), match.end() - m);
    Elem r = sys.element_of_word(prefix);
    int snext = (m % 2 == 0) ? si : sdot;
    path.braid_moves.emplace_back(sdot, m);
    wi = sys.mult(wt, r);
    si = snext;
    path.pairs.emplace_back(wi, si);
  }
  return path;
}

/// Checks the four structural conditions of the path plus the implied
/// reduced expression for w^-1 w~.  Returns an empty string when valid,
/// otherwise a description of the first violated condition.
inline std::string validate_conjugation_path(const CoxeterSystem& sys,
                                             const ConjugationPath& p) {
  if (p.pairs.empty()) return "empty path";
  Elem target_refl = sys.conj(p.w, sys.gen(p.s));
  Elem wti = sys.inverse(p.wt);

  // condition 2: epsilon and the first pair
  Elem u0 = sys.mult(wti, p.w);
  int eps = sys.length(sys.right(u0, p.s)) > sys.length(u0) ? 0 : 1;
  if (eps != p.epsilon) return "condition 2: epsilon mismatch";
  if (p.pairs.front().second != p.s) return "condition 2: s_1 != s";
  Elem w1 = p.epsilon ? sys.right(p.w, p.s) : p.w;
  if (p.pairs.front().first != w1) return "condition 2: w_1 != w s^eps";

  // condition 1: constant reflection, and wt^-1 w_i < wt^-1 w_i s_i
  for (auto [wi, si] : p.pairs) {
    if (sys.conj(wi, sys.gen(si)) != target_refl)
      return "condition 1: reflection changed along the path";
    Elem u = sys.mult(wti, wi);
    if (sys.length(sys.right(u, si)) <= sys.length(u))
      return "condition 1: wt^-1 w_i s_i does not extend wt^-1 w_i";
  }

  if (p.braid_moves.size() + 1 != p.pairs.size())
    return "condition 3: move count does not match pair count";

  // conditions 3 and 4 along consecutive pairs
  for (size_t i = 0; i + 1 < p.pairs.size(); ++i) {
    auto [wi, si] = p.pairs[i];
    auto [wn, sn] = p.pairs[i + 1];
    auto [sdot, m] = p.braid_moves[i];
    if (sdot == si) return "condition 3: sdot_i equals s_i";
    if (m != sys.coxeter_m(si, sdot)) return "condition 3: m_i is not m(s_i, sdot_i)";
    int expect_next = (m % 2 == 0) ? si : sdot;
    if (sn != expect_next) return "condition 3: s_{i+1} parity rule violated";
    // w_i^-1 w_{i+1} = sdot s_i sdot ... of length m-1
    std::vector<int> alt;
    for (int j = 0; j < m - 1; ++j) alt.push_back(j % 2 == 0 ? sdot : si);
    if (sys.mult(sys.inverse(wi), wn) != sys.element_of_word(alt))
      return "condition 3: w_i^-1 w_{i+1} is not the alternating product";
    // condition 4: strict descent in right weak order with drop m_i - 1
    Elem ui = sys.mult(wti, wi), un = sys.mult(wti, wn);
    if (sys.length(ui) - sys.length(un) != m - 1)
      return "condition 4: length drop is not m_i - 1";
    if (sys.length(un) + sys.length(sys.mult(sys.inverse(un), ui)) != sys.length(ui))
      return "condition 4: not a descent in right weak order";
  }

  // condition 4 endpoints: wt^-1 w >= wt^-1 w_1, and last pair is the target
  {
    Elem u1 = sys.mult(wti, p.pairs.front().first);
    if (sys.length(u1) + sys.length(sys.mult(sys.inverse(u1), u0)) != sys.length(u0))
      return "condition 4: wt^-1 w_1 does not precede wt^-1 w";
    if (p.pairs.back().first != p.wt || p.pairs.back().second != p.st)
      return "path does not end at the target pair";
  }

  // implied reduced expression w^-1 wt = s^eps (sdot_1 s_1 ...) ...
  {
    std::vector<int> word;
    if (p.epsilon) word.push_back(p.s);
    for (size_t i = 0; i < p.braid_moves.size(); ++i) {
      auto [sdot, m] = p.braid_moves[i];
      int si = p.pairs[i].second;
      for (int j = 0; j < m - 1; ++j) word.push_back(j % 2 == 0 ? sdot : si);
    }
    if (sys.element_of_word(word) != sys.mult(sys.inverse(p.w), p.wt))
      return "implied word does not multiply to w^-1 wt";
    if (static_cast<int>(word.size()) != sys.length(sys.mult(sys.inverse(p.w), p.wt)))
      return "implied word is not reduced";
  }
  return {};
}

}  // namespace ayc
