// Exact model of a finite Coxeter system W = <s_1..s_n | (s_i s_j)^m(i,j)>.
//
// Elements are enumerated once, in ShortLex order of their minimal reduced
// words, by breadth-first closure of generator products.  Two faithful
// models back the enumeration: exact integer matrices of the reflection
// action on simple-root coordinates (Cartan-integer convention, for typed
// crystallographic systems and raw matrices with entries in {2,3,4,6}),
// and a rotation/flip model for dihedral groups I2(m) with arbitrary
// finite m.  After construction everything is table driven and immutable.

#pragma once

#include "ayc/scalar.hpp"

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace ayc {

using Elem = int;  // index into the ShortLex element table
using Refl = int;  // index into the reflection table
using ReflSet = boost::dynamic_bitset<>;

inline constexpr size_t kDefaultMaxOrder = 1'000'000;

enum class SystemKind { Crystallographic, Dihedral };

class CoxeterSystem {
public:
  /// Build from a type label: A1..An, Bn, Dn, E6, E7, E8, F4, G2, I2(m).
  static CoxeterSystem from_type(const std::string& label,
                                 size_t max_order = kDefaultMaxOrder);

  /// Build from a raw Coxeter matrix.  Rank-2 matrices accept any finite
  /// m >= 2 (dihedral model); higher ranks require entries in {2,3,4,6}.
  static CoxeterSystem from_matrix(const std::vector<std::vector<int>>& m,
                                   size_t max_order = kDefaultMaxOrder);

  // --- basic data ---
  int rank() const { return rank_; }
  size_t order() const { return right_.size(); }
  SystemKind kind() const { return kind_; }
  const std::string& type_label() const { return label_; }
  int coxeter_m(int s, int t) const { return m_[s][t]; }
  bool is_type_a() const { return family_ == 'A'; }

  bool is_simply_laced() const {
    for (int s = 0; s < rank_; ++s)
      for (int t = s + 1; t < rank_; ++t)
        if (m_[s][t] > 3) return false;
    return true;
  }

  bool is_irreducible() const;

  // --- elements ---
  Elem id() const { return 0; }
  Elem gen(int s) const { return right_[0][s]; }
  int length(Elem w) const { return length_[w]; }
  Elem right(Elem w, int s) const { return right_[w][s]; }
  Elem left(int s, Elem w) const { return left_[w][s]; }
  Elem inverse(Elem w) const { return inverse_[w]; }

  Elem mult(Elem a, Elem b) const {
    for (int s : word(b)) a = right_[a][s];
    return a;
  }

  /// w t w^{-1} for arbitrary elements.
  Elem conj(Elem w, Elem t) const { return mult(mult(w, t), inverse_[w]); }

  /// ShortLex-minimal reduced word (generator indices).
  std::vector<int> word(Elem w) const {
    std::vector<int> out;
    while (w != 0) {
      out.push_back(parent_gen_[w]);
      w = parent_elem_[w];
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  Elem element_of_word(const std::vector<int>& word) const {
    Elem w = 0;
    for (int s : word) {
      if (s < 0 || s >= rank_) throw error("unknown generator index " + std::to_string(s));
      w = right_[w][s];
    }
    return w;
  }

  /// The unique longest element.
  Elem longest_element() const { return longest_; }

  /// Exact integer matrix of the reflection action of w on simple-root
  /// coordinates (crystallographic systems only), row-major rank x rank.
  std::vector<long long> matrix_of(Elem w) const;

  // --- reflections ---
  int num_reflections() const { return static_cast<int>(refl_elem_.size()); }
  Elem refl_elem(Refl t) const { return refl_elem_[t]; }
  Refl refl_of(Elem w) const { return refl_of_[w]; }  // -1 if not a reflection
  Refl refl_of_gen(int s) const { return refl_of_[gen(s)]; }

  /// w s w^{-1} as a reflection index.
  Refl conj_gen(Elem w, int s) const { return refl_of_[conj(w, gen(s))]; }

  ReflSet empty_refl_set() const { return ReflSet(num_reflections()); }
  ReflSet simple_refl_set() const {
    ReflSet a(num_reflections());
    for (int s = 0; s < rank_; ++s) a.set(refl_of_gen(s));
    return a;
  }
  ReflSet full_refl_set() const {
    ReflSet a(num_reflections());
    a.set();
    return a;
  }

  /// Left descent: l(t w) < l(w).
  bool is_left_descent(Refl t, Elem w) const {
    return length_[mult(refl_elem_[t], w)] < length_[w];
  }

  /// Des_A(w) = { t in A : l(tw) < l(w) }.
  ReflSet descent_set(Elem w, const ReflSet& A) const {
    if (w < 0 || w >= static_cast<Elem>(order()))
      throw error("element index is not in this system");
    if (A.size() != static_cast<size_t>(num_reflections()))
      throw error("reflection set has wrong size for this system");
    ReflSet d(num_reflections());
    for (size_t t = A.find_first(); t != ReflSet::npos; t = A.find_next(t))
      if (is_left_descent(static_cast<Refl>(t), w)) d.set(t);
    return d;
  }

  // --- roots (crystallographic systems only) ---
  bool has_roots() const { return kind_ == SystemKind::Crystallographic; }
  const std::vector<long long>& root(Refl t) const {
    require_roots();
    return roots_[t];
  }
  long long root_height(Refl t) const {
    require_roots();
    return heights_[t];
  }
  /// Reflection whose positive root has the given coordinates, or -1.
  Refl refl_of_root(const std::vector<long long>& coords) const;

  // --- conjugacy classes ---
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(Elem w) const { return class_of_[w]; }
  const std::vector<Elem>& class_members(int c) const { return classes_[c]; }
  Elem class_rep(int c) const { return classes_[c].front(); }
  /// Cycle type of the class, available for type A systems (partition of n).
  const std::vector<int>& class_cycle_type(int c) const {
    if (!is_type_a()) throw error("cycle types only defined for type A systems");
    return class_cycle_types_[c];
  }

  // --- type A permutation helpers ---
  /// One-line notation of w acting on {1..n}, with generators s_i = (i,i+1).
  std::vector<int> permutation_of(Elem w) const;
  Elem element_of_permutation(const std::vector<int>& one_line) const;

private:
  CoxeterSystem() = default;
  void enumerate(size_t max_order, std::optional<size_t> expected_order);
  void build_reflections();
  void build_roots();
  void build_classes();
  void require_roots() const {
    if (!has_roots()) throw error("system has no coordinate root model (dihedral)");
  }

  std::vector<long long> apply_key_gen(const std::vector<long long>& key, int s) const;
  std::vector<long long> identity_key() const;

  SystemKind kind_ = SystemKind::Crystallographic;
  std::string label_ = "raw";
  char family_ = '?';
  int rank_ = 0;
  int dihedral_m_ = 0;
  std::vector<std::vector<int>> m_;             // Coxeter matrix
  std::vector<std::vector<long long>> cartan_;  // generator action data

  std::vector<std::vector<Elem>> right_, left_;
  std::vector<int> length_;
  std::vector<Elem> parent_elem_;
  std::vector<int> parent_gen_;
  std::vector<Elem> inverse_;
  Elem longest_ = 0;

  std::vector<Elem> refl_elem_;
  std::vector<Refl> refl_of_;
  std::vector<std::vector<long long>> roots_;
  std::vector<long long> heights_;
  std::map<std::vector<long long>, Refl> root_index_;

  std::vector<std::vector<Elem>> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> class_cycle_types_;
};

// ---------------------------------------------------------------------------
// construction

namespace detail {

struct TypeSpec {
  char family;
  int rank;
  int dihedral_m = 0;
};

inline TypeSpec parse_type_label(const std::string& label) {
  if (label.size() < 2) throw error("bad type label: " + label);
  char fam = label[0];
  if (fam == 'I') {
    // I2(m)
    if (label.size() < 5 || label.substr(0, 3) != "I2(" || label.back() != ')')
      throw error("bad dihedral label (want I2(m)): " + label);
    int m = std::stoi(label.substr(3, label.size() - 4));
    if (m < 2) throw error("dihedral order parameter must be >= 2");
    return {'I', 2, m};
  }
  int rank = std::stoi(label.substr(1));
  switch (fam) {
    case 'A':
      if (rank < 1) throw error("rank must be >= 1 for type A");
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw error("rank must be >= 2 for type B");
      break;
    case 'D':
      if (rank < 3) throw error("rank must be >= 3 for type D");
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw error("type E rank must be 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) throw error("type F rank must be 4");
      break;
    case 'G':
      if (rank != 2) throw error("type G rank must be 2");
      break;
    default:
      throw error("unknown family in type label: " + label);
  }
  return {fam == 'C' ? 'B' : fam, rank, 0};
}

// Edges of the Coxeter diagram for a typed system, with labels m > 3 where
// applicable.  Generator numbering: chains are 0-1-2-...; D forks at node 2
// (edges 0-2, 1-2, 2-3, ...); E systems attach node 0 to node 3 of the chain
// 1-2-3-4-...
inline std::vector<std::array<int, 3>> diagram_edges(const TypeSpec& t) {
  std::vector<std::array<int, 3>> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.push_back({i, i + 1, 3});
  };
  switch (t.family) {
    case 'A':
      chain(0, t.rank - 1);
      break;
    case 'B':
      e.push_back({0, 1, 4});
      chain(1, t.rank - 1);
      break;
    case 'D':
      e.push_back({0, 2, 3});
      e.push_back({1, 2, 3});
      chain(2, t.rank - 1);
      break;
    case 'E':
      e.push_back({0, 3, 3});
      chain(1, t.rank - 1);
      break;
    case 'F':
      e.push_back({0, 1, 3});
      e.push_back({1, 2, 4});
      e.push_back({2, 3, 3});
      break;
    case 'G':
      e.push_back({0, 1, 6});
      break;
    default:
      throw error("diagram_edges: unexpected family");
  }
  return e;
}

inline size_t classical_order(const TypeSpec& t) {
  auto fact = [](int n) {
    size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<size_t>(i);
    return f;
  };
  switch (t.family) {
    case 'A': return fact(t.rank + 1);
    case 'B': return (size_t{1} << t.rank) * fact(t.rank);
    case 'D': return (size_t{1} << (t.rank - 1)) * fact(t.rank);
    case 'E': return t.rank == 6 ? 51840u : (t.rank == 7 ? 2903040u : 696729600u);
    case 'F': return 1152;
    case 'G': return 12;
    case 'I': return 2u * static_cast<size_t>(t.dihedral_m);
    default: throw error("classical_order: unexpected family");
  }
}

}  // namespace detail

inline CoxeterSystem CoxeterSystem::from_type(const std::string& label,
                                              size_t max_order) {
  auto spec = detail::parse_type_label(label);
  CoxeterSystem sys;
  sys.label_ = label;
  sys.family_ = spec.family;
  sys.rank_ = spec.rank;
  sys.m_.assign(spec.rank, std::vector<int>(spec.rank, 2));
  for (int i = 0; i < spec.rank; ++i) sys.m_[i][i] = 1;

  if (spec.family == 'I') {
    sys.kind_ = SystemKind::Dihedral;
    sys.dihedral_m_ = spec.dihedral_m;
    sys.m_[0][1] = sys.m_[1][0] = spec.dihedral_m;
  } else {
    sys.kind_ = SystemKind::Crystallographic;
    sys.cartan_.assign(spec.rank, std::vector<long long>(spec.rank, 0));
    for (int i = 0; i < spec.rank; ++i) sys.cartan_[i][i] = 2;
    for (auto [a, b, m] : detail::diagram_edges(spec)) {
      sys.m_[a][b] = sys.m_[b][a] = m;
      // asymmetric Cartan pair for m = 4, 6; product 4cos^2(pi/m)
      long long other = (m == 3) ? 1 : (m == 4 ? 2 : 3);
      sys.cartan_[a][b] = -1;
      sys.cartan_[b][a] = -other;
    }
  }
  size_t expected = detail::classical_order(spec);
  if (expected > max_order)
    throw error("group order " + std::to_string(expected) +
                " exceeds enumeration guard " + std::to_string(max_order));
  sys.enumerate(max_order, expected);
  return sys;
}

inline CoxeterSystem CoxeterSystem::from_matrix(
    const std::vector<std::vector<int>>& m, size_t max_order) {
  int n = static_cast<int>(m.size());
  if (n < 1) throw error("invalid matrix: empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw error("invalid matrix: not square");
    if (m[i][i] != 1) throw error("invalid matrix: diagonal entry m(s,s) != 1");
    for (int j = 0; j < n; ++j) {
      if (i != j && m[i][j] < 2)
        throw error("invalid matrix: off-diagonal entry < 2 (or infinite)");
      if (m[i][j] != m[j][i]) throw error("invalid matrix: not symmetric");
    }
  }

  CoxeterSystem sys;
  sys.rank_ = n;
  sys.m_ = m;
  if (n == 2 && m[0][1] >= 2) {
    sys.kind_ = SystemKind::Dihedral;
    sys.dihedral_m_ = m[0][1];
    sys.label_ = "I2(" + std::to_string(m[0][1]) + ")";
    size_t expected = 2u * static_cast<size_t>(m[0][1]);
    if (expected > max_order)
      throw error("group order exceeds enumeration guard");
    sys.enumerate(max_order, expected);
    return sys;
  }
  sys.kind_ = SystemKind::Crystallographic;
  sys.cartan_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) sys.cartan_[i][i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (m[i][j]) {
        case 2: break;
        case 3: sys.cartan_[i][j] = sys.cartan_[j][i] = -1; break;
        case 4: sys.cartan_[i][j] = -1; sys.cartan_[j][i] = -2; break;
        case 6: sys.cartan_[i][j] = -1; sys.cartan_[j][i] = -3; break;
        default:
          throw error("unsupported raw-matrix entry m = " + std::to_string(m[i][j]) +
                      " (need 2, 3, 4 or 6 outside the dihedral rank-2 case)");
      }
    }
  sys.enumerate(max_order, std::nullopt);
  return sys;
}

inline std::vector<long long> CoxeterSystem::identity_key() const {
  if (kind_ == SystemKind::Dihedral) return {0, 0};
  std::vector<long long> key(static_cast<size_t>(rank_) * rank_, 0);
  for (int i = 0; i < rank_; ++i) key[i * rank_ + i] = 1;
  return key;
}

inline std::vector<long long> CoxeterSystem::apply_key_gen(
    const std::vector<long long>& key, int s) const {
  if (kind_ == SystemKind::Dihedral) {
    // key = (k, f) meaning rot^k flip^f; s0 = flip, s1 = rot * flip
    long long k = key[0], f = key[1];
    long long ks = (s == 0) ? 0 : 1;
    long long nk = k + (f ? -ks : ks);
    nk %= dihedral_m_;
    if (nk < 0) nk += dihedral_m_;
    return {nk, 1 - f};
  }
  // right multiplication: M(w s) = M(w) * M(s), column action on coordinates
  std::vector<long long> out(key.size());
  int n = rank_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // M(s)[k][j] = delta_kj - delta_ks * cartan[s][j]
      long long v = key[i * n + j] - key[i * n + s] * cartan_[s][j];
      // delta handling: M(s)[j][j] contributes key[i][j]; subtract row s term
      out[i * n + j] = v;
    }
  }
  return out;
}

inline void CoxeterSystem::enumerate(size_t max_order,
                                     std::optional<size_t> expected_order) {
  std::map<std::vector<long long>, Elem> index;
  std::vector<std::vector<long long>> keys;
  keys.push_back(identity_key());
  index[keys[0]] = 0;
  length_.assign(1, 0);
  parent_elem_.assign(1, 0);
  parent_gen_.assign(1, -1);
  right_.assign(1, std::vector<Elem>(rank_, -1));

  for (Elem w = 0; w < static_cast<Elem>(keys.size()); ++w) {
    for (int s = 0; s < rank_; ++s) {
      auto key = apply_key_gen(keys[w], s);
      auto it = index.find(key);
      if (it == index.end()) {
        Elem nw = static_cast<Elem>(keys.size());
        if (keys.size() >= max_order)
          throw error("group order exceeds enumeration guard " +
                      std::to_string(max_order));
        index.emplace(key, nw);
        keys.push_back(std::move(key));
        length_.push_back(length_[w] + 1);
        parent_elem_.push_back(w);
        parent_gen_.push_back(s);
        right_.emplace_back(rank_, -1);
        right_[w][s] = nw;
      } else {
        right_[w][s] = it->second;
      }
    }
  }
  size_t n = keys.size();
  if (expected_order && n != *expected_order)
    throw error("enumeration closed at " + std::to_string(n) +
                " elements, expected " + std::to_string(*expected_order));

  // left multiplication and inverses, by induction over ShortLex order:
  // left(s, w t) = left(s, w) t   and   inv(w t) = t inv(w) = left(t, inv(w))
  left_.assign(n, std::vector<Elem>(rank_, -1));
  inverse_.assign(n, -1);
  inverse_[0] = 0;
  for (int s = 0; s < rank_; ++s) left_[0][s] = right_[0][s];
  for (Elem w = 1; w < static_cast<Elem>(n); ++w) {
    Elem p = parent_elem_[w];
    int t = parent_gen_[w];
    for (int s = 0; s < rank_; ++s) left_[w][s] = right_[left_[p][s]][t];
    inverse_[w] = left_[inverse_[p]][t];
  }

  longest_ = 0;
  for (Elem w = 0; w < static_cast<Elem>(n); ++w)
    if (length_[w] > length_[longest_]) longest_ = w;

  build_reflections();
  if (kind_ == SystemKind::Crystallographic) build_roots();
  build_classes();
}

inline void CoxeterSystem::build_reflections() {
  size_t n = order();
  refl_of_.assign(n, -1);
  std::vector<char> seen(n, 0);
  // closure of the generators under conjugation by generators
  std::vector<Elem> queue;
  for (int s = 0; s < rank_; ++s) {
    Elem g = gen(s);
    if (!seen[g]) {
      seen[g] = 1;
      queue.push_back(g);
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    Elem t = queue[i];
    for (int s = 0; s < rank_; ++s) {
      Elem c = left_[right_[t][s]][s];  // s t s
      if (!seen[c]) {
        seen[c] = 1;
        queue.push_back(c);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  refl_elem_ = queue;
  for (Refl t = 0; t < static_cast<Refl>(refl_elem_.size()); ++t)
    refl_of_[refl_elem_[t]] = t;
}

inline void CoxeterSystem::build_roots() {
  int nt = num_reflections();
  roots_.assign(nt, {});
  heights_.assign(nt, 0);
  std::vector<char> have(nt, 0);
  std::vector<Refl> queue;
  for (int s = 0; s < rank_; ++s) {
    Refl t = refl_of_gen(s);
    roots_[t].assign(rank_, 0);
    roots_[t][s] = 1;
    have[t] = 1;
    queue.push_back(t);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    Refl t = queue[i];
    Elem te = refl_elem_[t];
    for (int s = 0; s < rank_; ++s) {
      Refl tc = refl_of_[left_[right_[te][s]][s]];
      if (have[tc]) continue;
      // sigma_s applied to the root coordinates of t
      const auto& b = roots_[t];
      std::vector<long long> nb = b;
      long long pairing = 0;
      for (int j = 0; j < rank_; ++j) pairing += cartan_[s][j] * b[j];
      nb[s] -= pairing;
      roots_[tc] = std::move(nb);
      have[tc] = 1;
      queue.push_back(tc);
    }
  }
  for (Refl t = 0; t < nt; ++t) {
    if (!have[t]) throw error("internal: root orbit did not cover all reflections");
    long long h = 0;
    for (long long c : roots_[t]) {
      if (c < 0) throw error("internal: non-positive root assigned to reflection");
      h += c;
    }
    heights_[t] = h;
    root_index_[roots_[t]] = t;
  }
}

inline Refl CoxeterSystem::refl_of_root(const std::vector<long long>& coords) const {
  require_roots();
  auto it = root_index_.find(coords);
  return it == root_index_.end() ? -1 : it->second;
}

inline void CoxeterSystem::build_classes() {
  size_t n = order();
  class_of_.assign(n, -1);
  classes_.clear();
  for (Elem w = 0; w < static_cast<Elem>(n); ++w) {
    if (class_of_[w] != -1) continue;
    int c = static_cast<int>(classes_.size());
    std::vector<Elem> members{w};
    class_of_[w] = c;
    for (size_t i = 0; i < members.size(); ++i) {
      Elem x = members[i];
      for (int s = 0; s < rank_; ++s) {
        Elem y = left_[right_[x][s]][s];
        if (class_of_[y] == -1) {
          class_of_[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  if (is_type_a()) {
    // reorder classes by cycle type, lexicographically ascending
    int nc = num_classes();
    std::vector<std::vector<int>> types(nc);
    for (int c = 0; c < nc; ++c) {
      auto p = permutation_of(classes_[c].front());
      std::vector<char> vis(p.size(), 0);
      std::vector<int> cyc;
      for (size_t i = 0; i < p.size(); ++i) {
        if (vis[i]) continue;
        int len = 0;
        size_t j = i;
        while (!vis[j]) {
          vis[j] = 1;
          ++len;
          j = static_cast<size_t>(p[j] - 1);
        }
        cyc.push_back(len);
      }
      std::sort(cyc.begin(), cyc.end(), std::greater<int>());
      types[c] = cyc;
    }
    std::vector<int> perm(nc);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return types[a] < types[b]; });
    std::vector<std::vector<Elem>> nclasses(nc);
    class_cycle_types_.assign(nc, {});
    for (int i = 0; i < nc; ++i) {
      nclasses[i] = std::move(classes_[perm[i]]);
      class_cycle_types_[i] = std::move(types[perm[i]]);
    }
    classes_ = std::move(nclasses);
    for (int c = 0; c < nc; ++c)
      for (Elem w : classes_[c]) class_of_[w] = c;
  }
}

inline std::vector<long long> CoxeterSystem::matrix_of(Elem w) const {
  if (kind_ != SystemKind::Crystallographic)
    throw error("matrix_of: dihedral systems have no integer matrix model");
  auto key = identity_key();
  for (int s : word(w)) key = apply_key_gen(key, s);
  return key;
}

inline bool CoxeterSystem::is_irreducible() const {
  std::vector<char> seen(rank_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < rank_; ++u)
      if (!seen[u] && m_[v][u] >= 3) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline std::vector<int> CoxeterSystem::permutation_of(Elem w) const {
  if (!is_type_a()) throw error("permutation model requires a type A system");
  int n = rank_ + 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int s : word(w)) std::swap(p[s], p[s + 1]);  // right mult swaps positions
  return p;
}

inline Elem CoxeterSystem::element_of_permutation(
    const std::vector<int>& one_line) const {
  if (!is_type_a()) throw error("permutation model requires a type A system");
  int n = rank_ + 1;
  if (static_cast<int>(one_line.size()) != n)
    throw error("permutation length does not match rank + 1");
  std::vector<int> p = one_line;
  {
    std::vector<char> seen(n + 1, 0);
    for (int v : p) {
      if (v < 1 || v > n || seen[v]) throw error("not a permutation of 1..n");
      seen[v] = 1;
    }
  }
  // bubble-sort to the identity; p * s_i1 * ... * s_ik = id
  // means p = s_ik * ... * s_i1 read as a product of position swaps,
  // i.e. applying the recorded swaps to id in reverse rebuilds p.
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        swaps.push_back(i);
        moved = true;
      }
    }
  }
  Elem w = 0;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) w = right_[w][*it];
  return w;
}

// ---------------------------------------------------------------------------
// free operations on a system

/// Descent set with respect to a reflection subset A (Des_A).
inline ReflSet descent_set(const CoxeterSystem& sys, Elem w, const ReflSet& A) {
  return sys.descent_set(w, A);
}

/// True iff s and t are joined in the Coxeter diagram by a path of
/// odd-labeled edges (the conjugacy criterion for simple reflections).
inline bool simple_conjugacy(const CoxeterSystem& sys, int s, int t) {
  if (s == t) return true;
  int n = sys.rank();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (seen[u] || u == v) continue;
      int m = sys.coxeter_m(v, u);
      if (m >= 3 && m % 2 == 1) {
        if (u == t) return true;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

/// Minimal-length representatives of the right cosets of <J>, plus the
/// unique factorization w = p r with p in <J>, r in W^J.
struct CosetDecomposition {
  std::vector<int> J;
  std::vector<Elem> parabolic_members;  // <J>, sorted
  std::vector<Elem> min_reps;           // W^J, sorted (ShortLex)
  std::vector<Elem> p_part;             // indexed by element
  std::vector<Elem> r_part;
};

inline CosetDecomposition minimal_coset_reps(const CoxeterSystem& sys,
                                             const std::vector<int>& J) {
  for (int j : J)
    if (j < 0 || j >= sys.rank()) throw error("J is not a subset of the generators");
  CosetDecomposition d;
  d.J = J;
  size_t n = sys.order();
  d.p_part.assign(n, -1);
  d.r_part.assign(n, -1);
  // <J> by closure
  {
    std::vector<char> in(n, 0);
    std::vector<Elem> q{sys.id()};
    in[sys.id()] = 1;
    for (size_t i = 0; i < q.size(); ++i)
      for (int j : J) {
        Elem x = sys.right(q[i], j);
        if (!in[x]) {
          in[x] = 1;
          q.push_back(x);
        }
      }
    std::sort(q.begin(), q.end());
    d.parabolic_members = std::move(q);
  }
  for (Elem w = 0; w < static_cast<Elem>(n); ++w) {
    Elem r = w;
    Elem p = sys.id();
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : J) {
        Elem jr = sys.left(j, r);
        if (sys.length(jr) < sys.length(r)) {
          r = jr;
          p = sys.right(p, j);
          moved = true;
          break;
        }
      }
    }
    d.p_part[w] = p;
    d.r_part[w] = r;
    if (sys.length(w) != sys.length(p) + sys.length(r))
      throw error("internal: coset factorization is not length additive");
  }
  for (Elem w = 0; w < static_cast<Elem>(n); ++w)
    if (d.r_part[w] == w) d.min_reps.push_back(w);
  return d;
}

/// The unique shortest element of the coset w<s,t>.
inline Elem coset_shortest(const CoxeterSystem& sys, Elem w, int s, int t) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int g : {s, t}) {
      Elem ws = sys.right(w, g);
      if (sys.length(ws) < sys.length(w)) {
        w = ws;
        moved = true;
      }
    }
  }
  return w;
}

}  // namespace ayc
