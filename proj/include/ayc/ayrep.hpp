// Abstract Young representations.  A representation lives on a convex cell
// K: each generator maps the basis vector C_w into span{C_w, C_ws}, with
// coefficients depending only on the reflection w s w^-1 and on whether the
// edge goes up or down in length.  Coefficients come either from a linear
// functional on the root space (the simply-laced construction, q = 1 or
// Hecke) or from an explicitly supplied table.

#pragma once

#include "ayc/cells.hpp"
#include "ayc/scalar.hpp"

#include <cmath>
#include <map>
#include <optional>

namespace ayc {

/// Vector f in simple-root coordinates; pairings with roots are plain dot
/// products of coordinate vectors.
using Functional = std::vector<Rat>;

inline Rat pairing(const CoxeterSystem& sys, const Functional& f, Refl t) {
  if (f.size() != static_cast<size_t>(sys.rank()))
    throw error("functional arity does not match the rank");
  const auto& root = sys.root(t);
  Rat acc = 0;
  for (int i = 0; i < sys.rank(); ++i) acc += f[i] * root[i];
  return acc;
}

/// The functional pairing every positive root to its height (the role the
/// half-sum of positive roots plays in the paper); with the dot-product
/// pairing its coordinates are all ones.
inline Functional height_functional(const CoxeterSystem& sys) {
  return Functional(static_cast<size_t>(sys.rank()), Rat(1));
}

enum class Normalization { SNN, RSN, CSN, SON };
enum class RepMode { Q1, Hecke };

inline std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::SNN: return "SNN";
    case Normalization::RSN: return "RSN";
    case Normalization::CSN: return "CSN";
    case Normalization::SON: return "SON";
  }
  return "?";
}

inline Normalization normalization_from_string(const std::string& s) {
  if (s == "SNN") return Normalization::SNN;
  if (s == "RSN") return Normalization::RSN;
  if (s == "CSN") return Normalization::CSN;
  if (s == "SON") return Normalization::SON;
  throw error("unknown normalization: " + s);
}

/// Hecke parameters, one per conjugacy class of W so that conjugate
/// reflections share a parameter.  Values live in the single-variable
/// scalar field (powers of q, or constants).
struct HeckeParams {
  std::map<int, Scalar> by_class;
  Scalar fallback = Scalar(1);

  static HeckeParams constant(const Scalar& v) {
    HeckeParams p;
    p.fallback = v;
    return p;
  }
  Scalar q_of_refl(const CoxeterSystem& sys, Refl t) const {
    auto it = by_class.find(sys.class_of(sys.refl_elem(t)));
    return it == by_class.end() ? fallback : it->second;
  }
  Scalar q_of_gen(const CoxeterSystem& sys, int s) const {
    return q_of_refl(sys, sys.refl_of_gen(s));
  }
};

// ---------------------------------------------------------------------------
// genericity

struct GenericityViolation {
  int condition;  // 1, 2 or 3
  std::vector<Refl> refls;
  std::string detail;
};

struct GenericityReport {
  bool generic = true;
  std::vector<GenericityViolation> violations;
  // signs eps_{w,s} entering condition (iii) on doubly-boundary cosets
  std::vector<std::tuple<Elem, int, int>> epsilon_signs;
};

/// K-genericity of f (general-cell version; reduces to the identity-cell
/// conditions when id is in K, where every boundary crossing points up).
inline GenericityReport check_generic(const CoxeterSystem& sys, const Cell& k,
                                      const Functional& f,
                                      bool verify_convex = true) {
  if (k.members.empty()) throw error("check_generic: empty cell");
  if (verify_convex && !is_convex(sys, k.members).convex)
    throw error("check_generic: cell is not convex");
  GenericityReport rep;
  auto add = [&](int cond, std::vector<Refl> ts, std::string d) {
    rep.generic = false;
    rep.violations.push_back({cond, std::move(ts), std::move(d)});
  };
  for (size_t t = k.t_internal.find_first(); t != ReflSet::npos;
       t = k.t_internal.find_next(t)) {
    Rat p = pairing(sys, f, static_cast<Refl>(t));
    if (p == 0 || p == 1 || p == -1)
      add(1, {static_cast<Refl>(t)},
          "internal pairing " + Scalar::to_string_rat(p) + " lies in {0,1,-1}");
  }
  for (size_t t = k.t_boundary.find_first(); t != ReflSet::npos;
       t = k.t_boundary.find_next(t)) {
    Rat p = pairing(sys, f, static_cast<Refl>(t));
    if (p != 1 && p != -1)
      add(2, {static_cast<Refl>(t)},
          "boundary pairing " + Scalar::to_string_rat(p) + " is not +-1");
  }
  for (Elem w : k.members) {
    for (int s = 0; s < sys.rank(); ++s) {
      for (int t = s + 1; t < sys.rank(); ++t) {
        if (sys.coxeter_m(s, t) != 3) continue;
        Elem ws = sys.right(w, s), wt = sys.right(w, t);
        if (k.contains(ws) || k.contains(wt)) continue;
        int es = sys.length(ws) > sys.length(w) ? 1 : -1;
        int et = sys.length(wt) > sys.length(w) ? 1 : -1;
        rep.epsilon_signs.emplace_back(w, s, es);
        rep.epsilon_signs.emplace_back(w, t, et);
        Refl ts = sys.refl_of(sys.conj(w, sys.gen(s)));
        Refl tt = sys.refl_of(sys.conj(w, sys.gen(t)));
        Rat ps = Rat(es) * pairing(sys, f, ts);
        Rat pt = Rat(et) * pairing(sys, f, tt);
        if (ps != pt)
          add(3, {ts, tt},
              "sign-adjusted boundary pairings differ at a doubly-boundary "
              "coset: " + Scalar::to_string_rat(ps) + " vs " + Scalar::to_string_rat(pt));
      }
    }
  }
  return rep;
}

class non_generic_error : public error {
public:
  GenericityReport report;
  non_generic_error(GenericityReport r, const std::string& what)
      : error(what), report(std::move(r)) {}
};

/// A_f = { t : <f, a_t> in {1, -1} }, the reflections f marks as walls.
inline ReflSet wall_set(const CoxeterSystem& sys, const Functional& f) {
  ReflSet a = sys.empty_refl_set();
  for (Refl t = 0; t < sys.num_reflections(); ++t) {
    Rat p = pairing(sys, f, t);
    if (p == 1 || p == -1) a.set(t);
  }
  return a;
}

/// K^f(w): the A_f-cell of w.  When f is K^f(w)-generic this is the carrier
/// of the representation defined by f.
inline Cell functional_cell(const CoxeterSystem& sys, const Functional& f, Elem w) {
  return a_cell(sys, wall_set(sys, f), w);
}

// ---------------------------------------------------------------------------
// coefficient tables and representations

/// Axiom-style coefficient data per reflection: a_up/a_down on the
/// reflections the cell touches, b_up/b_down on internal ones.
struct CoefficientTable {
  Normalization normalization = Normalization::SNN;
  RepMode mode = RepMode::Q1;
  HeckeParams params;
  std::map<Refl, Scalar> a_up, a_down, b_up, b_down;

  const Scalar& at(const std::map<Refl, Scalar>& m, Refl t, const char* which) const {
    auto it = m.find(t);
    if (it == m.end())
      throw error(std::string("coefficient table is missing ") + which +
                  " for reflection t" + std::to_string(t));
    return it->second;
  }
};

using SparseRow = std::vector<std::pair<int, Scalar>>;  // (col, value), sorted
using SparseMat = std::vector<SparseRow>;
using Matrix = std::vector<std::vector<Scalar>>;

struct AYRep {
  const CoxeterSystem* sys = nullptr;
  std::vector<int> gens;       // generator subset carrying matrices
  Cell cell;
  std::vector<Elem> basis;     // row/column order; cell.members by default
  std::vector<int> row_of;     // element -> row index or -1
  std::optional<CoefficientTable> table;
  RepMode mode = RepMode::Q1;
  HeckeParams params;
  std::vector<SparseMat> mats;  // aligned with gens

  size_t dim() const { return basis.size(); }
  int gen_slot(int s) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == s) return static_cast<int>(i);
    throw error("generator s" + std::to_string(s + 1) + " is not part of this representation");
  }
  const SparseMat& mat(int s) const { return mats[gen_slot(s)]; }
};

namespace detail {

inline Scalar sparse_entry(const SparseRow& row, int col) {
  for (const auto& [c, v] : row)
    if (c == col) return v;
  return Scalar(0);
}

inline void sparse_add(SparseRow& row, int col, const Scalar& v) {
  for (auto& [c, x] : row)
    if (c == col) {
      x += v;
      return;
    }
  row.emplace_back(col, v);
}

inline SparseMat sparse_mul(const SparseMat& a, const SparseMat& b) {
  SparseMat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    for (const auto& [k, av] : a[i])
      for (const auto& [j, bv] : b[k]) sparse_add(out[i], j, av * bv);
    std::sort(out[i].begin(), out[i].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return out;
}

inline bool sparse_equal(const SparseMat& a, const SparseMat& b, int& bad_row) {
  for (size_t i = 0; i < a.size(); ++i) {
    std::map<int, Scalar> acc;
    for (const auto& [c, v] : a[i]) acc[c] += v;
    for (const auto& [c, v] : b[i]) acc[c] -= v;
    for (const auto& [c, v] : acc)
      if (!v.is_zero()) {
        bad_row = static_cast<int>(i);
        return false;
      }
  }
  return true;
}

}  // namespace detail

/// Assemble the per-generator matrices from a coefficient table.
inline AYRep assemble_rep(const CoxeterSystem& sys, Cell cell,
                          CoefficientTable table, std::vector<int> gens) {
  AYRep rep;
  rep.sys = &sys;
  rep.gens = std::move(gens);
  rep.cell = std::move(cell);
  rep.basis = rep.cell.members;
  rep.row_of.assign(sys.order(), -1);
  for (size_t i = 0; i < rep.basis.size(); ++i) rep.row_of[rep.basis[i]] = static_cast<int>(i);
  rep.mode = table.mode;
  rep.params = table.params;
  for (int s : rep.gens) {
    SparseMat m(rep.dim());
    for (size_t i = 0; i < rep.basis.size(); ++i) {
      Elem w = rep.basis[i];
      Elem ws = sys.right(w, s);
      Refl t = sys.refl_of(sys.conj(w, sys.gen(s)));
      bool up = sys.length(ws) > sys.length(w);
      const Scalar& diag =
          up ? table.at(table.a_up, t, "a_up") : table.at(table.a_down, t, "a_down");
      m[i].emplace_back(static_cast<int>(i), diag);
      if (rep.cell.contains(ws)) {
        const Scalar& off =
            up ? table.at(table.b_up, t, "b_up") : table.at(table.b_down, t, "b_down");
        int j = rep.row_of[ws];
        if (static_cast<int>(i) < j)
          m[i].emplace_back(j, off);
        else
          m[i].insert(m[i].begin(), {j, off});
      }
    }
    rep.mats.push_back(std::move(m));
  }
  rep.table = std::move(table);
  return rep;
}

/// Coefficient table of the functional construction:
/// a_up[t] = 1/<f,a_t> (q = 1) or 1/[<f,a_t>]_q (Hecke, integer pairings),
/// a_down from the trace constraint, b coefficients from the normalization.
inline CoefficientTable functional_table(const CoxeterSystem& sys, const Cell& k,
                                         const Functional& f, Normalization norm,
                                         RepMode mode) {
  if (norm == Normalization::SON)
    throw error("SON normalization needs square roots; use the float path");
  CoefficientTable tab;
  tab.normalization = norm;
  tab.mode = mode;
  tab.params = HeckeParams::constant(mode == RepMode::Hecke ? Scalar::q() : Scalar(1));
  ReflSet touched = k.t_internal | k.t_boundary;
  for (size_t tu = touched.find_first(); tu != ReflSet::npos; tu = touched.find_next(tu)) {
    Refl t = static_cast<Refl>(tu);
    Rat p = pairing(sys, f, t);
    Scalar a_up;
    if (mode == RepMode::Hecke) {
      if (boost::multiprecision::denominator(p) != 1)
        throw error("Hecke mode requires integer pairings; <f,a_t> = " +
                    Scalar::to_string_rat(p));
      long long k_int = static_cast<long long>(boost::multiprecision::numerator(p));
      a_up = Scalar(1) / q_integer(k_int);
    } else {
      a_up = Scalar(1) / Scalar(p);
    }
    Scalar qt = tab.params.q_of_refl(sys, t);
    tab.a_up[t] = a_up;
    tab.a_down[t] = (Scalar(1) - qt) - a_up;
  }
  for (size_t tu = k.t_internal.find_first(); tu != ReflSet::npos;
       tu = k.t_internal.find_next(tu)) {
    Refl t = static_cast<Refl>(tu);
    Scalar prod = (Scalar(1) - tab.a_up[t]) * (Scalar(1) - tab.a_down[t]);
    switch (norm) {
      case Normalization::SNN:
        tab.b_down[t] = Scalar(1);
        tab.b_up[t] = prod;
        break;
      case Normalization::RSN:
        tab.b_up[t] = Scalar(1) - tab.a_up[t];
        tab.b_down[t] = Scalar(1) - tab.a_down[t];
        break;
      case Normalization::CSN:
        tab.b_up[t] = Scalar(1) - tab.a_down[t];
        tab.b_down[t] = Scalar(1) - tab.a_up[t];
        break;
      case Normalization::SON:
        break;  // unreachable
    }
  }
  return tab;
}

// forward declarations
struct RelationReport;
inline RelationReport verify_relations(const AYRep& rep);

/// Functional-based construction (simply-laced systems).  Checks
/// genericity, builds the table, assembles matrices, and verifies all
/// defining relations before returning.
inline AYRep build_ay_rep(const CoxeterSystem& sys, const Cell& k,
                          const Functional& f,
                          Normalization norm = Normalization::SNN,
                          RepMode mode = RepMode::Q1);

/// Table-driven assembly with no provenance requirements; relations are
/// verified and the report is attached to the result rather than thrown.
struct TableBuildResult {
  AYRep rep;
  bool relations_ok = false;
};

inline TableBuildResult build_from_table(
    const CoxeterSystem& sys, const Cell& k, const CoefficientTable& table,
    std::optional<std::vector<int>> gens = std::nullopt);

// ---------------------------------------------------------------------------
// relation verification

struct RelationFailure {
  std::string kind;  // "quadratic" | "braid"
  int s = -1, t = -1;
  Elem w = -1;  // basis element of the first differing row
};

struct RelationReport {
  std::vector<RelationFailure> failures;
  int quadratic_checked = 0;
  int braid_checked = 0;
  // per-coset scalar diagnostics (Eq.-(10)-type condition and its Hecke
  // multiplicative form); informational, not part of ok()
  int coset_eq10_ok = 0, coset_eq10_fail = 0;
  int coset_dmult_ok = 0, coset_dmult_fail = 0;
  int boundary_pair_ok = 0, boundary_pair_fail = 0;
  bool ok() const { return failures.empty(); }
};

inline RelationReport verify_relations(const AYRep& rep) {
  const CoxeterSystem& sys = *rep.sys;
  RelationReport out;

  SparseMat identity(rep.dim());
  for (size_t i = 0; i < rep.dim(); ++i)
    identity[i].emplace_back(static_cast<int>(i), Scalar(1));

  auto scaled_sum = [&](const SparseMat& a, const Scalar& ca, const SparseMat& b,
                        const Scalar& cb) {
    SparseMat out_m(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      for (const auto& [c, v] : a[i]) detail::sparse_add(out_m[i], c, v * ca);
      for (const auto& [c, v] : b[i]) detail::sparse_add(out_m[i], c, v * cb);
    }
    return out_m;
  };

  // quadratic (Hecke) relation: M^2 = (1-q) M + q I
  for (size_t gi = 0; gi < rep.gens.size(); ++gi) {
    int s = rep.gens[gi];
    Scalar qs = rep.params.q_of_gen(sys, s);
    SparseMat sq = detail::sparse_mul(rep.mats[gi], rep.mats[gi]);
    SparseMat rhs = scaled_sum(rep.mats[gi], Scalar(1) - qs, identity, qs);
    int bad = -1;
    ++out.quadratic_checked;
    if (!detail::sparse_equal(sq, rhs, bad))
      out.failures.push_back({"quadratic", s, -1, rep.basis[bad]});
  }

  // braid relations: m(s,t) alternating factors on each side
  for (size_t gi = 0; gi < rep.gens.size(); ++gi) {
    for (size_t gj = gi + 1; gj < rep.gens.size(); ++gj) {
      int s = rep.gens[gi], t = rep.gens[gj];
      int m = sys.coxeter_m(s, t);
      SparseMat lhs = identity, rhs = identity;
      for (int i = 0; i < m; ++i) {
        lhs = detail::sparse_mul(lhs, rep.mats[i % 2 == 0 ? gi : gj]);
        rhs = detail::sparse_mul(rhs, rep.mats[i % 2 == 0 ? gj : gi]);
      }
      int bad = -1;
      ++out.braid_checked;
      if (!detail::sparse_equal(lhs, rhs, bad))
        out.failures.push_back({"braid", s, t, rep.basis[bad]});
    }
  }

  // scalar diagnostics need the table, and the coset conditions are
  // equivalent to the braid relations only when internal b's are nonzero
  bool b_all_nonzero = true;
  if (rep.table)
    for (const auto& m : {rep.table->b_up, rep.table->b_down})
      for (const auto& [t, v] : m)
        if (v.is_zero()) b_all_nonzero = false;
  if (rep.table && b_all_nonzero) {
    const CoefficientTable& tab = *rep.table;
    auto have = [&](Refl t) { return tab.a_up.count(t) != 0; };
    for (size_t gi = 0; gi < rep.gens.size(); ++gi) {
      for (size_t gj = gi + 1; gj < rep.gens.size(); ++gj) {
        int s = rep.gens[gi], t = rep.gens[gj];
        if (sys.coxeter_m(s, t) != 3) continue;
        Scalar q = rep.params.q_of_gen(sys, s);
        for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w) {
          // one visit per coset, at its shortest element
          if (sys.length(sys.right(w, s)) < sys.length(w)) continue;
          if (sys.length(sys.right(w, t)) < sys.length(w)) continue;
          Elem ws = sys.right(w, s), wt = sys.right(w, t);
          Elem wst = sys.right(ws, t), wts = sys.right(wt, s);
          Elem wsts = sys.right(wst, s);
          int inside = rep.cell.contains(w) + rep.cell.contains(ws) +
                       rep.cell.contains(wt) + rep.cell.contains(wst) +
                       rep.cell.contains(wts) + rep.cell.contains(wsts);
          Refl t0 = sys.refl_of(sys.conj(w, sys.gen(s)));
          Refl t2 = sys.refl_of(sys.conj(w, sys.gen(t)));
          Refl t1 = sys.refl_of(sys.conj(ws, sys.gen(t)));
          if (inside >= 2) {
            if (!(have(t0) && have(t1) && have(t2))) continue;
            Scalar a0 = tab.a_up.at(t0), a1 = tab.a_up.at(t1), a2 = tab.a_up.at(t2);
            Scalar ад0 = (Scalar(1) - q) - a0;
            Scalar ад1 = (Scalar(1) - q) - a1;
            Scalar ад2 = (Scalar(1) - q) - a2;
            bool ok = (a0 * ад2 == a0 * ад1 + a1 * ад2);
            (ok ? out.coset_eq10_ok : out.coset_eq10_fail)++;
            if (rep.mode == RepMode::Hecke && !a0.is_zero() && !a1.is_zero() &&
                !a2.is_zero()) {
              Scalar d0 = d_coefficient(a0, q), d1 = d_coefficient(a1, q),
                     d2 = d_coefficient(a2, q);
              bool okd = (d1 == d0 * d2);
              (okd ? out.coset_dmult_ok : out.coset_dmult_fail)++;
            }
          } else if (inside == 1) {
            // the lone member sees both s- and t-edges leave the cell
            Elem m1 = -1;
            for (Elem x : {w, ws, wt, wst, wts, wsts})
              if (rep.cell.contains(x)) m1 = x;
            if (m1 < 0) continue;
            Elem m1s = sys.right(m1, s), m1t = sys.right(m1, t);
            Refl rs = sys.refl_of(sys.conj(m1, sys.gen(s)));
            Refl rt = sys.refl_of(sys.conj(m1, sys.gen(t)));
            if (!(have(rs) && have(rt))) continue;
            Scalar as = sys.length(m1s) > sys.length(m1) ? tab.a_up.at(rs)
                                                         : tab.a_down.at(rs);
            Scalar at_ = sys.length(m1t) > sys.length(m1) ? tab.a_up.at(rt)
                                                          : tab.a_down.at(rt);
            bool ok = (as == at_) && (as == Scalar(1) || as == -q);
            (ok ? out.boundary_pair_ok : out.boundary_pair_fail)++;
          }
        }
      }
    }
  }
  return out;
}

inline AYRep build_ay_rep(const CoxeterSystem& sys, const Cell& k,
                          const Functional& f, Normalization norm, RepMode mode) {
  if (!sys.has_roots() || !sys.is_simply_laced() || !sys.is_irreducible())
    throw error("functional construction requires an irreducible simply laced system");
  if (k.members.empty()) throw error("cell is empty");
  auto gen_rep = check_generic(sys, k, f);
  if (!gen_rep.generic) {
    std::string what = "functional is not K-generic:";
    for (const auto& v : gen_rep.violations)
      what += " [condition " + std::to_string(v.condition) + ": " + v.detail + "]";
    throw non_generic_error(std::move(gen_rep), what);
  }
  std::vector<int> gens(sys.rank());
  std::iota(gens.begin(), gens.end(), 0);
  AYRep rep = assemble_rep(sys, k, functional_table(sys, k, f, norm, mode), gens);
  auto rel = verify_relations(rep);
  if (!rel.ok())
    throw error("internal: functional-built representation failed relation check");
  return rep;
}

inline TableBuildResult build_from_table(const CoxeterSystem& sys, const Cell& k,
                                         const CoefficientTable& table,
                                         std::optional<std::vector<int>> gens) {
  if (!gens) {
    gens.emplace(static_cast<size_t>(sys.rank()));
    std::iota(gens->begin(), gens->end(), 0);
  }
  TableBuildResult res{assemble_rep(sys, k, table, *gens), false};
  res.relations_ok = verify_relations(res.rep).ok();
  return res;
}

// ---------------------------------------------------------------------------
// evaluation and characters

/// Matrix of the group element spelled by the word (letters multiply left
/// to right).  In the row-vector convention this is the reversed product of
/// generator matrices, so that equal words always yield equal matrices.
inline Matrix evaluate_word(const AYRep& rep, const std::vector<int>& word) {
  size_t n = rep.dim();
  Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  for (int s : word) {
    const SparseMat& g = rep.mats[static_cast<size_t>(rep.gen_slot(s))];
    Matrix next(n, std::vector<Scalar>(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i)
      for (const auto& [j, v] : g[i])
        for (size_t c = 0; c < n; ++c) next[i][c] += v * m[j][c];
    m = std::move(next);
  }
  return m;
}

inline Scalar trace_of_element(const AYRep& rep, Elem g) {
  Matrix m = evaluate_word(rep, rep.sys->word(g));
  Scalar tr(0);
  for (size_t i = 0; i < m.size(); ++i) tr += m[i][i];
  return tr;
}

/// Character as a class function, ordered by the system's conjugacy class
/// order.  Exact; for Hecke-mode representations the entries are rational
/// functions of q.
inline std::vector<Scalar> character(const AYRep& rep) {
  std::vector<Scalar> chi;
  for (int c = 0; c < rep.sys->num_classes(); ++c)
    chi.push_back(trace_of_element(rep, rep.sys->class_rep(c)));
  return chi;
}

inline std::vector<Rat> character_at(const AYRep& rep, const Rat& q_value) {
  std::vector<Rat> chi;
  for (int c = 0; c < rep.sys->num_classes(); ++c)
    chi.push_back(trace_of_element(rep, rep.sys->class_rep(c)).specialize(q_value));
  return chi;
}

/// Minimality = strong connectivity of the nonzero-b arc graph.
inline bool is_minimal(const AYRep& rep) {
  const CoxeterSystem& sys = *rep.sys;
  return is_strongly_connected(sys, rep.cell, [&](Elem v, int s, Elem vs) {
    for (int g : rep.gens)
      if (g == s) {
        int i = rep.row_of[v], j = rep.row_of[vs];
        return !detail::sparse_entry(rep.mats[rep.gen_slot(s)][i], j).is_zero();
      }
    return false;
  });
}

// ---------------------------------------------------------------------------
// functional recovery (inverse of the construction)

struct RecoveredFunctional {
  Functional f;
  GenericityReport genericity;
};

inline RecoveredFunctional recover_functional(const AYRep& rep) {
  const CoxeterSystem& sys = *rep.sys;
  if (!rep.table) throw error("recover_functional needs a coefficient table");
  if (!rep.cell.contains(sys.id()))
    throw error("recover_functional requires a cell containing the identity");
  const CoefficientTable& tab = *rep.table;
  Functional f(static_cast<size_t>(sys.rank()));
  for (int s = 0; s < sys.rank(); ++s) {
    Refl t = sys.refl_of_gen(s);
    auto it = tab.a_up.find(t);
    if (it == tab.a_up.end())
      throw error("internal: identity cell must touch every simple reflection");
    const Scalar& a = it->second;
    if (a.is_zero()) throw error("recover_functional: a coefficient is zero on t" +
                                 std::to_string(t));
    if (rep.mode == RepMode::Hecke) {
      Scalar d = d_coefficient(a, tab.params.q_of_refl(sys, t));
      long long k = 0;
      if (!d.as_q_power(k))
        throw error("recover_functional: d coefficient of s" + std::to_string(s + 1) +
                    " is not an integral power of q");
      f[s] = Rat(k);
    } else {
      f[s] = (Scalar(1) / a).as_rational();
    }
  }
  // verify the linear extension reproduces every tabled coefficient
  ReflSet touched = rep.cell.t_internal | rep.cell.t_boundary;
  for (size_t tu = touched.find_first(); tu != ReflSet::npos;
       tu = touched.find_next(tu)) {
    Refl t = static_cast<Refl>(tu);
    Rat p = pairing(sys, f, t);
    Scalar expect;
    if (rep.mode == RepMode::Hecke) {
      if (boost::multiprecision::denominator(p) != 1)
        throw error("recover_functional: non-integer pairing in Hecke mode");
      expect = Scalar(1) / q_integer(static_cast<long long>(boost::multiprecision::numerator(p)));
    } else {
      if (p == 0) throw error("recover_functional: zero pairing on touched reflection");
      expect = Scalar(1) / Scalar(p);
    }
    if (tab.at(tab.a_up, t, "a_up") != expect)
      throw error("representation is not of functional type: a_up[t" +
                  std::to_string(t) + "] != 1/<f,a_t>");
  }
  auto gen_report = check_generic(sys, rep.cell, f);
  return {std::move(f), std::move(gen_report)};
}

// ---------------------------------------------------------------------------
// floating-point symmetric normalization (SON)

struct FloatRep {
  const CoxeterSystem* sys = nullptr;
  Cell cell;
  std::vector<Elem> basis;
  std::vector<int> row_of;
  std::vector<std::vector<std::vector<double>>> mats;  // dense, per generator
};

/// Symmetric-orthogonal matrices at q = 1: diagonal +-1/<f,a_t> by edge
/// direction, off-diagonal sqrt(1 - a^2) on internal edges.  Requires
/// |<f,a_t>| > 1 on internal reflections; otherwise 1 - a^2 < 0 and the
/// symmetric normalization does not exist over the reals.
inline FloatRep build_float_son(const CoxeterSystem& sys, const Cell& k,
                                const Functional& f) {
  auto g = check_generic(sys, k, f);
  if (!g.generic) throw non_generic_error(g, "functional is not K-generic");
  for (size_t tu = k.t_internal.find_first(); tu != ReflSet::npos;
       tu = k.t_internal.find_next(tu)) {
    Rat p = pairing(sys, f, static_cast<Refl>(tu));
    if (p * p < 1)
      throw error("symmetric normalization needs |<f,a_t>| > 1 on internal "
                  "reflections; got " + Scalar::to_string_rat(p));
  }
  FloatRep rep;
  rep.sys = &sys;
  rep.cell = k;
  rep.basis = k.members;
  rep.row_of.assign(sys.order(), -1);
  for (size_t i = 0; i < rep.basis.size(); ++i) rep.row_of[rep.basis[i]] = static_cast<int>(i);
  size_t n = rep.basis.size();
  for (int s = 0; s < sys.rank(); ++s) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
      Elem w = rep.basis[i];
      Elem ws = sys.right(w, s);
      Refl t = sys.refl_of(sys.conj(w, sys.gen(s)));
      double p = static_cast<double>(pairing(sys, f, t));
      double a = 1.0 / p;
      bool up = sys.length(ws) > sys.length(w);
      m[i][i] = up ? a : -a;
      if (k.contains(ws)) m[i][rep.row_of[ws]] = std::sqrt(1.0 - a * a);
    }
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

inline double float_trace_of_element(const FloatRep& rep, Elem g) {
  size_t n = rep.basis.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  for (int s : rep.sys->word(g)) {
    const auto& gm = rep.mats[s];
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (gm[i][j] == 0.0) continue;
        for (size_t c = 0; c < n; ++c) next[i][c] += gm[i][j] * m[j][c];
      }
    m = std::move(next);
  }
  double tr = 0;
  for (size_t i = 0; i < n; ++i) tr += m[i][i];
  return tr;
}

inline std::vector<double> float_character(const FloatRep& rep) {
  std::vector<double> chi;
  for (int c = 0; c < rep.sys->num_classes(); ++c)
    chi.push_back(float_trace_of_element(rep, rep.sys->class_rep(c)));
  return chi;
}

// ---------------------------------------------------------------------------
// b-independence of characters (Appendix 2)

struct BIndependenceResult {
  bool equal = true;
  int differing_class = -1;
  std::vector<std::pair<Normalization, std::vector<Scalar>>> characters;
  std::optional<std::vector<double>> son_character;
};

/// Builds the q=1 representation under each exact normalization and checks
/// the characters agree exactly; optionally also compares the float SON
/// character within the given tolerance.
inline BIndependenceResult b_independence_check(
    const CoxeterSystem& sys, const Cell& k, const Functional& f,
    const std::vector<Normalization>& norms = {Normalization::SNN,
                                               Normalization::RSN,
                                               Normalization::CSN},
    bool include_float_son = true, double tol = 1e-9) {
  BIndependenceResult res;
  for (auto n : norms) {
    AYRep rep = build_ay_rep(sys, k, f, n, RepMode::Q1);
    res.characters.emplace_back(n, character(rep));
  }
  for (size_t i = 1; i < res.characters.size(); ++i)
    for (int c = 0; c < sys.num_classes(); ++c)
      if (res.characters[i].second[c] != res.characters[0].second[c]) {
        res.equal = false;
        if (res.differing_class < 0) res.differing_class = c;
      }
  if (include_float_son) {
    res.son_character = float_character(build_float_son(sys, k, f));
    for (int c = 0; c < sys.num_classes(); ++c) {
      double exact =
          static_cast<double>(res.characters[0].second[c].as_rational());
      if (std::abs(exact - (*res.son_character)[c]) > tol) {
        res.equal = false;
        if (res.differing_class < 0) res.differing_class = c;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// helpers used by tests and the cell-witness probe

/// Pullback of f along the action of v: <g, x> = <f, sigma_v(x)>.  The
/// translated identity cell v^-1 K with this functional carries the same
/// diagonal coefficients as the general cell K with f.
inline Functional pullback_functional(const CoxeterSystem& sys, const Functional& f,
                                      Elem v) {
  auto m = sys.matrix_of(v);
  int n = sys.rank();
  Functional g(static_cast<size_t>(n), Rat(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g[j] += f[i] * m[i * n + j];
  return g;
}

/// Search the integer box [-radius, radius]^rank for a K-generic
/// functional; returns the first hit in lexicographic order.
inline std::optional<Functional> search_witness_functional(const CoxeterSystem& sys,
                                                           const Cell& k,
                                                           int radius) {
  int n = sys.rank();
  if (!is_convex(sys, k.members).convex) return std::nullopt;
  std::vector<long long> c(n, -radius);
  for (;;) {
    Functional f;
    for (long long x : c) f.push_back(Rat(x));
    if (check_generic(sys, k, f, /*verify_convex=*/false).generic) return f;
    int i = n - 1;
    while (i >= 0 && c[i] == radius) c[i--] = -radius;
    if (i < 0) return std::nullopt;
    ++c[i];
  }
}

}  // namespace ayc
