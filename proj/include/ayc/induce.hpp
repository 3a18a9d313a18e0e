// Restriction of AY representations to parabolic subgroups and the
// combinatorial induction rule: a minimal AY pair (psi, D) for P = <J>
// induces an AY representation of W on the cell D W^J, with basis C_{mr}
// and action
//     rho_s(C_{mr}) = C_{mrs}                      if rs in W^J,
//     rho_s(C_{mr}) = a_p(m) C_{mr} + b_p(m) C_{mprs'}   if rs = pr, p in J.
// Coefficients are copied from psi, never re-derived from a functional.

#pragma once

#include "ayc/ayrep.hpp"

namespace ayc {

struct ParabolicContext {
  const CoxeterSystem* sys = nullptr;
  std::vector<int> J;
  CosetDecomposition cosets;  // right cosets P r, minimal reps W^J
  bool in_parabolic(Elem w) const {
    return std::binary_search(cosets.parabolic_members.begin(),
                              cosets.parabolic_members.end(), w);
  }
  bool in_wj(Elem r) const { return cosets.r_part[r] == r; }
};

inline ParabolicContext make_parabolic(const CoxeterSystem& sys,
                                       std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  ParabolicContext ctx;
  ctx.sys = &sys;
  ctx.cosets = minimal_coset_reps(sys, J);
  ctx.J = std::move(J);
  return ctx;
}

/// Either rs stays in W^J, or it folds back as rs = pr with p in J.
struct StepClass {
  bool in_wj;
  Elem rs;    // the product r s
  int p = -1; // generator index in J when folding
};

inline StepClass step_classify(const ParabolicContext& ctx, Elem r, int s) {
  const CoxeterSystem& sys = *ctx.sys;
  if (!ctx.in_wj(r)) throw error("step_classify: r is not a minimal coset representative");
  Elem rs = sys.right(r, s);
  if (ctx.in_wj(rs)) return {true, rs, -1};
  Elem p = sys.conj(r, sys.gen(s));  // rs = p r with p = r s r^-1
  int pg = -1;
  for (int j : ctx.J)
    if (sys.gen(j) == p) pg = j;
  if (pg < 0) throw error("internal: fold element is not a generator of J");
  if (sys.mult(p, r) != rs) throw error("internal: rs != pr in fold case");
  return {false, rs, pg};
}

inline AYRep make_rep_from_matrices(const CoxeterSystem& sys, std::vector<int> gens,
                                    Cell cell, std::vector<Elem> basis,
                                    std::vector<SparseMat> mats, RepMode mode,
                                    HeckeParams params) {
  AYRep rep;
  rep.sys = &sys;
  rep.gens = std::move(gens);
  rep.cell = std::move(cell);
  rep.basis = std::move(basis);
  rep.row_of.assign(sys.order(), -1);
  for (size_t i = 0; i < rep.basis.size(); ++i)
    rep.row_of[rep.basis[i]] = static_cast<int>(i);
  rep.mats = std::move(mats);
  rep.mode = mode;
  rep.params = std::move(params);
  return rep;
}

/// One block of a restriction: the cell K meets the left coset r P in
/// r D, and D carries the restricted representation of <J> with the same
/// coefficients.
struct RestrictedBlock {
  Elem rep_elem;  // minimal element of the left coset
  AYRep block;    // representation of <J> on D = rep_elem^-1 (K meet rP)
};

inline std::vector<RestrictedBlock> restrict_ay(const AYRep& rep,
                                                const std::vector<int>& J_in) {
  const CoxeterSystem& sys = *rep.sys;
  auto ctx = make_parabolic(sys, J_in);
  const auto& J = ctx.J;

  // group members of K by the minimal element of their left coset w P
  auto coset_min = [&](Elem w) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : J) {
        Elem wj = sys.right(w, j);
        if (sys.length(wj) < sys.length(w)) {
          w = wj;
          moved = true;
        }
      }
    }
    return w;
  };
  std::map<Elem, std::vector<Elem>> blocks;
  for (Elem w : rep.cell.members) blocks[coset_min(w)].push_back(w);

  std::vector<RestrictedBlock> out;
  for (auto& [r, block_members] : blocks) {
    Elem ri = sys.inverse(r);
    std::vector<Elem> d_members;
    for (Elem u : block_members) d_members.push_back(sys.mult(ri, u));
    std::sort(d_members.begin(), d_members.end());
    std::vector<int> row_of(sys.order(), -1);
    for (size_t i = 0; i < d_members.size(); ++i) row_of[d_members[i]] = static_cast<int>(i);

    std::vector<SparseMat> mats;
    for (int p : J) {
      SparseMat m(d_members.size());
      for (size_t i = 0; i < d_members.size(); ++i) {
        Elem u = sys.mult(r, d_members[i]);  // element of K in this block
        const SparseRow& row = rep.mat(p)[rep.row_of[u]];
        for (const auto& [col, v] : row) {
          Elem target = rep.basis[col];
          Elem md = sys.mult(ri, target);
          if (row_of[md] < 0)
            throw error("internal: restriction row leaves its own block");
          m[i].emplace_back(row_of[md], v);
        }
      }
      mats.push_back(std::move(m));
    }
    out.push_back({r, make_rep_from_matrices(sys, J, make_cell(sys, d_members),
                                             d_members, std::move(mats), rep.mode,
                                             rep.params)});
  }
  return out;
}

struct InducedRep {
  AYRep source;
  std::vector<int> J;
  AYRep result;
  // basis bookkeeping: result.basis[i] = source_m[i] * coset_r[i]
  std::vector<Elem> source_m, coset_r;
};

/// Induce a minimal AY pair of the parabolic <J> up to W.
inline InducedRep induce_ay(const CoxeterSystem& sys, const std::vector<int>& J_in,
                            const AYRep& psi) {
  auto ctx = make_parabolic(sys, J_in);
  const auto& J = ctx.J;
  {
    std::vector<int> pg = psi.gens;
    std::sort(pg.begin(), pg.end());
    if (pg != J) throw error("induce_ay: psi is not a representation of <J>");
  }
  for (Elem m : psi.cell.members)
    if (!ctx.in_parabolic(m)) throw error("induce_ay: psi cell leaves the parabolic");
  if (!is_minimal(psi)) throw error("induce_ay: psi is not minimal");

  // basis: blocks by minimal coset representative (ShortLex), then members
  // m r ordered ShortLex within the block
  std::vector<Elem> basis, src_m, cos_r;
  std::vector<int> row_of(sys.order(), -1);
  for (Elem r : ctx.cosets.min_reps) {
    std::vector<std::pair<Elem, Elem>> block;  // (product, m)
    for (Elem m : psi.cell.members) block.emplace_back(sys.mult(m, r), m);
    std::sort(block.begin(), block.end());
    for (auto [mr, m] : block) {
      if (row_of[mr] != -1) throw error("internal: product map m r is not injective");
      row_of[mr] = static_cast<int>(basis.size());
      basis.push_back(mr);
      src_m.push_back(m);
      cos_r.push_back(r);
    }
  }
  if (basis.size() != psi.cell.size() * ctx.cosets.min_reps.size())
    throw error("internal: induced basis has the wrong size");

  std::vector<SparseMat> mats;
  for (int s = 0; s < sys.rank(); ++s) {
    SparseMat mat(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
      Elem m = src_m[i], r = cos_r[i];
      auto cls = step_classify(ctx, r, s);
      if (cls.in_wj) {
        mat[i].emplace_back(row_of[sys.mult(m, cls.rs)], Scalar(1));
      } else {
        const SparseRow& row = psi.mat(cls.p)[psi.row_of[m]];
        for (const auto& [col, v] : row) {
          Elem md = psi.basis[col];  // m itself or m p
          detail::sparse_add(mat[i], row_of[sys.mult(md, r)], v);
        }
      }
      std::sort(mat[i].begin(), mat[i].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    mats.push_back(std::move(mat));
  }

  std::vector<int> gens(sys.rank());
  std::iota(gens.begin(), gens.end(), 0);
  InducedRep out;
  out.source = psi;
  out.J = J;
  out.result = make_rep_from_matrices(sys, gens, make_cell(sys, basis), basis,
                                      std::move(mats), psi.mode, psi.params);
  out.source_m = std::move(src_m);
  out.coset_r = std::move(cos_r);
  return out;
}

/// Classical induced-character formula, used as an independent oracle:
/// chi_up(g) = (1/|P|) sum_{x in W} chi0(x g x^-1), chi0 zero outside P.
inline std::vector<Scalar> induced_character_oracle(const CoxeterSystem& sys,
                                                    const ParabolicContext& ctx,
                                                    const AYRep& psi) {
  std::vector<Scalar> chi;
  Scalar psize(Int(ctx.cosets.parabolic_members.size()));
  for (int c = 0; c < sys.num_classes(); ++c) {
    Elem g = sys.class_rep(c);
    Scalar acc(0);
    for (Elem x = 0; x < static_cast<Elem>(sys.order()); ++x) {
      Elem y = sys.conj(x, g);
      if (ctx.in_parabolic(y)) acc += trace_of_element(psi, y);
    }
    chi.push_back(acc / psize);
  }
  return chi;
}

/// Trivial one-dimensional representation of <J> on the cell {id}.
inline AYRep trivial_parabolic_rep(const CoxeterSystem& sys,
                                   const std::vector<int>& J) {
  CoefficientTable tab;
  tab.params = HeckeParams::constant(Scalar(1));
  for (int j : J) {
    Refl t = sys.refl_of_gen(j);
    tab.a_up[t] = Scalar(1);
    tab.a_down[t] = Scalar(-1);
  }
  auto res = build_from_table(sys, make_cell(sys, {sys.id()}), tab, J);
  return res.rep;
}

}  // namespace ayc
