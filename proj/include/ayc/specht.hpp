// Example families from the theory: Specht cells K_Q of standard Young
// tableaux with their hook-distance functionals (realizing the irreducible
// S^lambda in Young's form), descent representations driven by the height
// functional, and a brute-force Young-orthogonal-form oracle that shares no
// code with the cell machinery.

#pragma once

#include "ayc/ayrep.hpp"

#include <algorithm>
#include <cstdint>

namespace ayc {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline void validate_partition(const Partition& shape) {
  if (shape.empty()) throw error("empty partition");
  for (size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0) throw error("partition parts must be positive");
    if (i > 0 && shape[i] > shape[i - 1]) throw error("partition parts must weakly decrease");
  }
}

inline int partition_sum(const Partition& shape) {
  int n = 0;
  for (int p : shape) n += p;
  return n;
}

/// All partitions of n, lexicographically ascending (matches the conjugacy
/// class order of the type A systems).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      Partition p = cur;
      std::sort(p.begin(), p.end(), std::greater<int>());
      out.push_back(std::move(p));
      return;
    }
    for (int next = std::min(rest, maxpart); next >= 1; --next) {
      cur.push_back(next);
      self(self, rest - next, next);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // bijective filling with 1..n

  int size() const { return partition_sum(shape); }

  bool is_standard() const {
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < rows[r].size(); ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() &&
            rows[r][c] >= rows[r + 1][c]) return false;
      }
    return true;
  }

  /// content(i) = column - row of the cell holding entry i (0-indexed).
  int content_of(int entry) const {
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < rows[r].size(); ++c)
        if (rows[r][c] == entry) return static_cast<int>(c) - static_cast<int>(r);
    throw error("entry not present in tableau");
  }

  /// Entries concatenated row by row.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  /// Replace each entry i by pi(i) (one-line notation, 1-based).
  Tableau relabel(const std::vector<int>& pi) const {
    Tableau t = *this;
    for (auto& r : t.rows)
      for (auto& e : r) e = pi[static_cast<size_t>(e - 1)];
    return t;
  }

  static Tableau row_reading(const Partition& shape) {
    validate_partition(shape);
    Tableau t;
    t.shape = shape;
    int next = 1;
    for (int len : shape) {
      std::vector<int> row(static_cast<size_t>(len));
      for (auto& e : row) e = next++;
      t.rows.push_back(std::move(row));
    }
    return t;
  }
};

/// Dimension by the hook length formula.
inline unsigned long long hook_length_count(const Partition& shape) {
  validate_partition(shape);
  int n = partition_sum(shape);
  std::vector<int> conj(static_cast<size_t>(shape[0]), 0);
  for (int len : shape)
    for (int c = 0; c < len; ++c) ++conj[static_cast<size_t>(c)];
  unsigned long long hooks = 1, fact = 1;
  for (size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c)
      hooks *= static_cast<unsigned long long>(shape[r] - c) +
               static_cast<unsigned long long>(conj[static_cast<size_t>(c)]) -
               static_cast<unsigned long long>(r) - 1;
  for (int i = 1; i <= n; ++i) fact *= static_cast<unsigned long long>(i);
  return fact / hooks;
}

/// All standard Young tableaux of the given shape, ordered by their reading
/// words (lexicographic).
inline std::vector<Tableau> syt_enumerate(const Partition& shape) {
  validate_partition(shape);
  int n = partition_sum(shape);
  if (n > 8) throw error("tableau enumeration guarded at n <= 8");
  std::vector<Tableau> out;
  Tableau work;
  work.shape = shape;
  for (int len : shape) work.rows.emplace_back(static_cast<size_t>(len), 0);
  std::vector<size_t> fill(shape.size(), 0);  // next free column per row
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry > n) {
      out.push_back(work);
      return;
    }
    for (size_t r = 0; r < work.rows.size(); ++r) {
      size_t c = fill[r];
      if (c >= work.rows[r].size()) continue;
      if (r > 0 && fill[r - 1] <= c) continue;  // column would not increase
      work.rows[r][c] = entry;
      fill[r] = c + 1;
      self(self, entry + 1);
      fill[r] = c;
      work.rows[r][c] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

/// K_Q = { pi : Q^{pi^-1} is standard }, a convex cell containing id.
inline Cell tableau_cell(const CoxeterSystem& sys, const Tableau& q) {
  if (!sys.is_type_a()) throw error("tableau cells require a type A system");
  if (q.size() != sys.rank() + 1)
    throw error("tableau size does not match the group");
  if (!q.is_standard()) throw error("tableau is not standard");
  std::vector<Elem> members;
  for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w) {
    auto pi = sys.permutation_of(w);
    std::vector<int> inv(pi.size());
    for (size_t i = 0; i < pi.size(); ++i) inv[static_cast<size_t>(pi[i] - 1)] = static_cast<int>(i) + 1;
    if (q.relabel(inv).is_standard()) members.push_back(w);
  }
  return make_cell(sys, std::move(members));
}

/// The hook distances vector (c(2)-c(1), ..., c(n)-c(n-1)); pairings with
/// transposition roots telescope to content differences.
inline Functional hook_distance_vector(const Tableau& q) {
  if (!q.is_standard()) throw error("tableau is not standard");
  Functional f;
  for (int k = 1; k < q.size(); ++k)
    f.push_back(Rat(q.content_of(k + 1) - q.content_of(k)));
  return f;
}

/// The irreducible Specht representation realized on K_Q.
inline AYRep specht_rep(const CoxeterSystem& sys, const Tableau& q,
                        Normalization norm = Normalization::SNN,
                        RepMode mode = RepMode::Q1) {
  Cell k = tableau_cell(sys, q);
  return build_ay_rep(sys, k, hook_distance_vector(q), norm, mode);
}

/// Descent representation: the cell is the standard left descent class of
/// w and the functional pairs every root to its height.
inline AYRep descent_rep(const CoxeterSystem& sys, Elem w,
                         Normalization norm = Normalization::SNN,
                         RepMode mode = RepMode::Q1) {
  auto d = sys.descent_set(w, sys.simple_refl_set());
  Cell k = generalized_descent_class(sys, sys.simple_refl_set(), d);
  return build_ay_rep(sys, k, height_functional(sys), norm, mode);
}

inline FloatRep descent_rep_float_son(const CoxeterSystem& sys, Elem w) {
  auto d = sys.descent_set(w, sys.simple_refl_set());
  Cell k = generalized_descent_class(sys, sys.simple_refl_set(), d);
  return build_float_son(sys, k, height_functional(sys));
}

// ---------------------------------------------------------------------------
// independent oracle: Young orthogonal form over doubles, brute-force
// characters summed over whole conjugacy classes.  Deliberately avoids the
// CoxeterSystem tables: permutations, words and classes are recomputed from
// scratch here.

struct SpechtOracle {
  Partition shape;
  unsigned long long dimension = 0;
  std::vector<Partition> classes;      // cycle types, lex ascending
  std::vector<double> character;       // averaged trace per class
  std::vector<size_t> class_sizes;
};

inline SpechtOracle specht_oracle(const Partition& shape) {
  validate_partition(shape);
  int n = partition_sum(shape);
  if (n > 6) throw error("specht oracle guarded at n <= 6");

  auto tabs = syt_enumerate(shape);
  size_t dim = tabs.size();

  // generator matrices in Young's orthogonal form
  std::vector<std::vector<std::vector<double>>> gens;
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<double>> m(dim, std::vector<double>(dim, 0.0));
    for (size_t i = 0; i < dim; ++i) {
      int d = tabs[i].content_of(k + 1) - tabs[i].content_of(k);
      m[i][i] = 1.0 / d;
      std::vector<int> swap_kk(static_cast<size_t>(n));
      for (int v = 1; v <= n; ++v) swap_kk[static_cast<size_t>(v - 1)] = v;
      std::swap(swap_kk[static_cast<size_t>(k - 1)], swap_kk[static_cast<size_t>(k)]);
      Tableau swapped = tabs[i].relabel(swap_kk);
      if (swapped.is_standard()) {
        for (size_t j = 0; j < dim; ++j)
          if (tabs[j].rows == swapped.rows) {
            m[i][j] = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
            break;
          }
      }
    }
    gens.push_back(std::move(m));
  }

  auto apply = [&](const std::vector<int>& word) {
    std::vector<std::vector<double>> m(dim, std::vector<double>(dim, 0.0));
    for (size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    for (int s : word) {
      const auto& g = gens[static_cast<size_t>(s)];
      std::vector<std::vector<double>> nx(dim, std::vector<double>(dim, 0.0));
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
          if (g[i][j] == 0.0) continue;
          for (size_t c = 0; c < dim; ++c) nx[i][c] += g[i][j] * m[j][c];
        }
      m = std::move(nx);
    }
    double tr = 0;
    for (size_t i = 0; i < dim; ++i) tr += m[i][i];
    return tr;
  };

  // every permutation of 1..n: cycle type, word by bubble sort, trace
  std::map<Partition, std::pair<double, size_t>> buckets;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<char> vis(static_cast<size_t>(n), 0);
    Partition type;
    for (int i = 0; i < n; ++i) {
      if (vis[static_cast<size_t>(i)]) continue;
      int len = 0, j = i;
      while (!vis[static_cast<size_t>(j)]) {
        vis[static_cast<size_t>(j)] = 1;
        ++len;
        j = perm[static_cast<size_t>(j)] - 1;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());

    std::vector<int> p = perm, word;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i + 1 < n; ++i)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(i + 1)]) {
          std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(i + 1)]);
          word.push_back(i);
          moved = true;
        }
    }
    std::reverse(word.begin(), word.end());

    auto& [sum, count] = buckets[type];
    sum += apply(word);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  SpechtOracle out;
  out.shape = shape;
  out.dimension = hook_length_count(shape);
  for (auto& [type, sc] : buckets) {
    out.classes.push_back(type);
    out.character.push_back(sc.first / static_cast<double>(sc.second));
    out.class_sizes.push_back(sc.second);
  }
  return out;
}

}  // namespace ayc
