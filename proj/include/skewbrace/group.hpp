#pragma once

// Finite groups as Cayley tables on indices 0..n-1, with the identity pinned
// at index 0. Everything downstream (braces, blocks, solutions) rides on the
// arithmetic and structure computations in this header.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/errors.hpp"

namespace skewbrace {

class FiniteGroup {
 public:
  // Validates the table: entries in range, row/column 0 the identity,
  // associativity for all triples, a two-sided inverse for every element.
  static FiniteGroup from_flat_table(int n, std::vector<int> flat) {
    if (n <= 0 || static_cast<int>(flat.size()) != n * n)
      fail(errc::bad_entry, "table size does not match order");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = flat[static_cast<size_t>(a) * n + b];
        if (v < 0 || v >= n)
          fail(errc::bad_entry, "entry out of range", {a, b, v});
      }
    for (int a = 0; a < n; ++a) {
      if (flat[a] != a) fail(errc::no_identity_at_zero, "row 0 is not the identity row", {a});
      if (flat[static_cast<size_t>(a) * n] != a)
        fail(errc::no_identity_at_zero, "column 0 is not the identity column", {a});
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = flat[static_cast<size_t>(a) * n + b];
        for (int c = 0; c < n; ++c) {
          int bc = flat[static_cast<size_t>(b) * n + c];
          if (flat[static_cast<size_t>(ab) * n + c] != flat[static_cast<size_t>(a) * n + bc])
            fail(errc::not_associative, "associativity fails", {a, b, c});
        }
      }
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (flat[static_cast<size_t>(a) * n + b] == 0 &&
            flat[static_cast<size_t>(b) * n + a] == 0) {
          inv[a] = b;
          break;
        }
      if (inv[a] < 0) fail(errc::no_inverse, "element has no two-sided inverse", {a});
    }
    return FiniteGroup(n, std::move(flat), std::move(inv));
  }

  static FiniteGroup from_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n)
        fail(errc::bad_entry, "table is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat_table(n, std::move(flat));
  }

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<int>& flat() const { return table_; }

  int element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  // a^k for any integer k.
  int power(int a, long long k) const {
    int base = a;
    if (k < 0) {
      base = inv(a);
      k = -k;
    }
    int acc = 0;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  bool abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  // Sorted multiset of element orders; a cheap isomorphism invariant.
  std::vector<int> order_profile() const {
    std::vector<int> p(n_);
    for (int a = 0; a < n_; ++a) p[a] = element_order(a);
    std::sort(p.begin(), p.end());
    return p;
  }

  FiniteGroup transposed() const {
    std::vector<int> flat(table_.size());
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) flat[static_cast<size_t>(a) * n_ + b] = mul(b, a);
    return FiniteGroup(n_, std::move(flat), std::vector<int>(inv_));
  }

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }
  bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

 private:
  FiniteGroup(int n, std::vector<int> table, std::vector<int> inv)
      : n_(n), table_(std::move(table)), inv_(std::move(inv)) {}

  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;

  friend FiniteGroup unchecked_group(int, std::vector<int>);
};

// For constructors whose output is a group by construction. The inverse
// array is still derived by scanning, which fails loudly on a bad table.
inline FiniteGroup unchecked_group(int n, std::vector<int> flat) {
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (flat[static_cast<size_t>(a) * n + b] == 0 && flat[static_cast<size_t>(b) * n + a] == 0) {
        inv[a] = b;
        break;
      }
  for (int a = 0; a < n; ++a)
    if (inv[a] < 0) fail(errc::no_inverse, "element has no two-sided inverse", {a});
  return FiniteGroup(n, std::move(flat), std::move(inv));
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  std::vector<int> members;  // sorted, always contains 0

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool trivial() const { return members.size() == 1; }
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator!=(const Subgroup& o) const { return members != o.members; }
  bool operator<(const Subgroup& o) const { return members < o.members; }
};

inline Subgroup trivial_subgroup() { return Subgroup{{0}}; }

inline Subgroup whole_subgroup(const FiniteGroup& G) {
  Subgroup s;
  s.members.resize(G.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

// Smallest subgroup of G containing gens, computed by closure.
inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  int n = G.order();
  std::vector<char> in(n, 0);
  std::vector<int> queue;
  in[0] = 1;
  queue.push_back(0);
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  for (int g : gens) {
    if (g < 0 || g >= n) fail(errc::bad_entry, "generator out of range", {g});
    push(g);
    push(G.inv(g));
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (size_t j = 0; j <= i; ++j) {
      int y = queue[j];
      push(G.mul(x, y));
      push(G.mul(y, x));
    }
  }
  Subgroup s;
  for (int x = 0; x < n; ++x)
    if (in[x]) s.members.push_back(x);
  return s;
}

inline bool is_subgroup(const FiniteGroup& G, const Subgroup& S) {
  if (S.members.empty() || !S.contains(0)) return false;
  for (int a : S.members) {
    if (a < 0 || a >= G.order()) return false;
    if (!S.contains(G.inv(a))) return false;
    for (int b : S.members)
      if (!S.contains(G.mul(a, b))) return false;
  }
  return true;
}

inline void require_subgroup(const FiniteGroup& G, const Subgroup& S) {
  if (!is_subgroup(G, S)) fail(errc::not_subgroup, "set is not a subgroup");
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  for (int g = 0; g < G.order(); ++g)
    for (int s : S.members)
      if (!S.contains(G.conjugate(g, s))) return false;
  return true;
}

// All subgroups, by closing one added generator at a time. Exponential in
// the worst case; intended for the small orders this toolkit sweeps.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::vector<Subgroup> found{trivial_subgroup()};
  std::map<std::vector<int>, bool> seen{{found[0].members, true}};
  for (size_t i = 0; i < found.size(); ++i) {
    Subgroup base = found[i];
    for (int e = 1; e < G.order(); ++e) {
      if (base.contains(e)) continue;
      std::vector<int> gens = base.members;
      gens.push_back(e);
      Subgroup t = subgroup_generated(G, gens);
      if (!seen.count(t.members)) {
        seen[t.members] = true;
        found.push_back(std::move(t));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  return found;
}

// ---------------------------------------------------------------------------
// Maps between groups

struct GroupMap {
  std::vector<int> images;

  int apply(int x) const { return images[x]; }
  int size() const { return static_cast<int>(images.size()); }
  bool operator==(const GroupMap& o) const { return images == o.images; }
  bool operator!=(const GroupMap& o) const { return images != o.images; }
  bool operator<(const GroupMap& o) const { return images < o.images; }
};

inline GroupMap identity_map(int n) {
  GroupMap m;
  m.images.resize(n);
  std::iota(m.images.begin(), m.images.end(), 0);
  return m;
}

inline bool is_identity_map(const GroupMap& m) {
  for (int i = 0; i < m.size(); ++i)
    if (m.images[i] != i) return false;
  return true;
}

// compose(f, g) applies g first: x -> f(g(x)).
inline GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap r;
  r.images.resize(g.images.size());
  for (size_t i = 0; i < g.images.size(); ++i) r.images[i] = f.images[g.images[i]];
  return r;
}

inline bool is_permutation(const std::vector<int>& images, int n) {
  if (static_cast<int>(images.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline GroupMap inverse_map(const GroupMap& f) {
  GroupMap r;
  r.images.assign(f.images.size(), -1);
  for (size_t i = 0; i < f.images.size(); ++i) r.images[f.images[i]] = static_cast<int>(i);
  return r;
}

inline bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, const GroupMap& m) {
  if (m.size() != src.order()) return false;
  if (!m.images.empty() && m.images[0] != 0) return false;
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (m.images[src.mul(a, b)] != tgt.mul(m.images[a], m.images[b])) return false;
  return true;
}

inline bool is_automorphism(const FiniteGroup& G, const GroupMap& m) {
  return is_permutation(m.images, G.order()) && is_homomorphism(G, G, m);
}

inline GroupMap map_power(const GroupMap& f, long long k) {
  int n = f.size();
  GroupMap base = k < 0 ? inverse_map(f) : f;
  if (k < 0) k = -k;
  GroupMap acc = identity_map(n);
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Structure computations

struct GroupStructure {
  Subgroup center;
  Subgroup derived;
  std::optional<int> nilpotency_class;
  std::optional<int> derived_length;
  bool abelian = false;
};

inline Subgroup center_subgroup(const FiniteGroup& G) {
  Subgroup s;
  for (int z = 0; z < G.order(); ++z) {
    bool central = true;
    for (int a = 0; a < G.order() && central; ++a)
      if (G.mul(z, a) != G.mul(a, z)) central = false;
    if (central) s.members.push_back(z);
  }
  return s;
}

// Subgroup generated by commutators [x, y], x in X, y in Y.
inline Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& X, const Subgroup& Y) {
  std::vector<int> gens;
  for (int x : X.members)
    for (int y : Y.members) gens.push_back(G.commutator(x, y));
  return subgroup_generated(G, gens);
}

inline GroupStructure group_structure(const FiniteGroup& G) {
  GroupStructure r;
  r.center = center_subgroup(G);
  Subgroup whole = whole_subgroup(G);
  r.derived = commutator_subgroup(G, whole, whole);
  r.abelian = r.derived.trivial();

  // Lower central series, stopping on fixpoint.
  Subgroup L = whole;
  int c = 0;
  while (true) {
    if (L.trivial()) {
      r.nilpotency_class = c;
      break;
    }
    Subgroup next = commutator_subgroup(G, whole, L);
    if (next == L) break;
    L = std::move(next);
    ++c;
  }

  // Derived series, same stopping rule.
  Subgroup D = whole;
  int d = 0;
  while (true) {
    if (D.trivial()) {
      r.derived_length = d;
      break;
    }
    Subgroup next = commutator_subgroup(G, D, D);
    if (next == D) break;
    D = std::move(next);
    ++d;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphisms and automorphisms

namespace detail {

// Greedy minimal generating sequence: repeatedly add the smallest element
// outside the closure of what we have.
inline std::vector<int> greedy_generators(const FiniteGroup& G) {
  std::vector<int> gens;
  Subgroup closure = trivial_subgroup();
  for (int e = 1; e < G.order(); ++e) {
    if (closure.contains(e)) continue;
    gens.push_back(e);
    closure = subgroup_generated(G, gens);
    if (closure.size() == G.order()) break;
  }
  return gens;
}

// Extends generator images to a homomorphism on the subgroup they generate.
// Returns the partial map, or nullopt on any inconsistency.
inline std::optional<std::vector<int>> extend_on_closure(const FiniteGroup& src,
                                                         const FiniteGroup& tgt,
                                                         const std::vector<int>& gens,
                                                         const std::vector<int>& images) {
  std::vector<int> m(src.order(), -1);
  m[0] = 0;
  std::vector<int> elems{0};
  for (size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = src.mul(x, gens[gi]);
      int img = tgt.mul(m[x], images[gi]);
      if (m[y] < 0) {
        m[y] = img;
        elems.push_back(y);
      } else if (m[y] != img) {
        return std::nullopt;
      }
    }
  }
  // Verify the homomorphism law on the whole closure; BFS only fixed
  // generator products.
  for (int a : elems)
    for (int b : elems)
      if (m[src.mul(a, b)] != tgt.mul(m[a], m[b])) return std::nullopt;
  return m;
}

// Backtracks over images of a greedy generating set. Calls fn with each
// isomorphism src -> tgt; fn returns false to stop the search.
template <typename Fn>
bool for_each_isomorphism(const FiniteGroup& src, const FiniteGroup& tgt, Fn&& fn) {
  if (src.order() != tgt.order()) return true;
  if (src.order() == 1) return fn(identity_map(1));
  if (src.order_profile() != tgt.order_profile()) return true;
  std::vector<int> gens = greedy_generators(src);
  std::vector<int> gen_order(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) gen_order[i] = src.element_order(gens[i]);

  std::vector<int> images;
  auto rec = [&](auto&& self) -> bool {
    if (images.size() == gens.size()) {
      auto m = extend_on_closure(src, tgt, gens, images);
      if (!m) return true;
      if (!is_permutation(*m, tgt.order())) return true;
      GroupMap gm;
      gm.images = std::move(*m);
      return fn(std::move(gm));
    }
    size_t level = images.size();
    std::vector<int> prefix_gens(gens.begin(), gens.begin() + level + 1);
    for (int h = 0; h < tgt.order(); ++h) {
      if (tgt.element_order(h) != gen_order[level]) continue;
      images.push_back(h);
      if (extend_on_closure(src, tgt, prefix_gens, images)) {
        if (!self(self)) {
          images.pop_back();
          return false;
        }
      }
      images.pop_back();
    }
    return true;
  };
  return rec(rec);
}

}  // namespace detail

inline std::optional<GroupMap> find_group_isomorphism(const FiniteGroup& G,
                                                      const FiniteGroup& H) {
  std::optional<GroupMap> found;
  detail::for_each_isomorphism(G, H, [&](GroupMap m) {
    found = std::move(m);
    return false;
  });
  return found;
}

inline bool groups_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  return find_group_isomorphism(G, H).has_value();
}

// All automorphisms, by backtracking on images of a greedy generating set.
inline std::vector<GroupMap> automorphism_group(const FiniteGroup& G, int max_order = 64) {
  if (G.order() > max_order)
    fail(errc::order_bound_exceeded, "automorphism search bound exceeded",
         {G.order(), max_order});
  std::vector<GroupMap> auts;
  detail::for_each_isomorphism(G, G, [&](GroupMap m) {
    auts.push_back(std::move(m));
    return true;
  });
  return auts;
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientGroup {
  FiniteGroup group;
  GroupMap projection;  // carrier of G -> carrier of group
};

inline QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  require_subgroup(G, N);
  for (int g = 0; g < G.order(); ++g)
    for (int s : N.members)
      if (!N.contains(G.conjugate(g, s)))
        fail(errc::not_normal, "subgroup is not normal", {g, s});

  int n = G.order();
  // Coset representative = least member; coset of 0 gets label 0, the rest
  // follow in order of their least member.
  std::vector<int> coset_rep(n, -1);
  for (int x = 0; x < n; ++x) {
    int rep = x;
    for (int s : N.members) rep = std::min(rep, G.mul(x, s));
    coset_rep[x] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());
  std::map<int, int> label;
  for (size_t i = 0; i < reps.size(); ++i) label[reps[i]] = static_cast<int>(i);

  int k = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      flat[static_cast<size_t>(i) * k + j] = label[coset_rep[G.mul(reps[i], reps[j])]];
  GroupMap proj;
  proj.images.resize(n);
  for (int x = 0; x < n; ++x) proj.images[x] = label[coset_rep[x]];
  return QuotientGroup{FiniteGroup::from_flat_table(k, std::move(flat)), std::move(proj)};
}

// ---------------------------------------------------------------------------
// A small zoo of named groups, used by the command line and the tests.

inline FiniteGroup cyclic_group(int n) {
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return unchecked_group(n, std::move(flat));
}

// Carrier index of (a, b) is a*|H| + b.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  int n = G.order() * H.order(), m = H.order();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] =
          G.mul(a / m, b / m) * m + H.mul(a % m, b % m);
  return unchecked_group(n, std::move(flat));
}

// Permutations of {0..n-1} in lexicographic order (identity first), composed
// as (p*q)(i) = p(q(i)).
inline FiniteGroup symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int k = static_cast<int>(perms.size());
  std::vector<int> flat(static_cast<size_t>(k) * k);
  std::vector<int> prod(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int t = 0; t < n; ++t) prod[t] = perms[i][perms[j][t]];
      flat[static_cast<size_t>(i) * k + j] = index[prod];
    }
  return unchecked_group(k, std::move(flat));
}

// Dihedral group of order 2n: indices 0..n-1 rotations, n..2n-1 reflections.
inline FiniteGroup dihedral_group(int n) {
  int k = 2 * n;
  std::vector<int> flat(static_cast<size_t>(k) * k);
  auto idx = [&](int a, int b) -> int& { return flat[static_cast<size_t>(a) * k + b]; };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool ra = a < n, rb = b < n;
      int i = a % n, j = b % n;
      if (ra && rb) idx(a, b) = (i + j) % n;
      else if (ra && !rb) idx(a, b) = n + (j + i) % n;
      else if (!ra && rb) idx(a, b) = n + (i - j + n) % n;
      else idx(a, b) = (i - j + n) % n;
    }
  return unchecked_group(k, std::move(flat));
}

// Quaternion group: 0..3 are 1,i,j,k and 4..7 their negatives.
inline FiniteGroup quaternion_group() {
  // axis products: row u, column v -> (sign, axis) for u*v with 0=1,1=i,2=j,3=k
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[i][j]: 1 means negative; i*j = -? : i*i=-1, i*j=k, i*k=-j, j*i=-k,
  // j*j=-1, j*k=i, k*i=j, k*j=-i, k*k=-1.
  std::vector<int> flat(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
      int s = (sa + sb + sign[ua][ub]) % 2;
      flat[static_cast<size_t>(a) * 8 + b] = s * 4 + axis[ua][ub];
    }
  return FiniteGroup::from_flat_table(8, std::move(flat));
}

// Heisenberg group of order 27: triples (a, b, c) mod 3 with
// (a,b,c)*(a',b',c') = (a+a', b+b'+a*c', c+c'); index = 9a + 3b + c.
inline FiniteGroup heisenberg_group_27() {
  auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  std::vector<int> flat(27 * 27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              flat[static_cast<size_t>(idx(a, b, c)) * 27 + idx(a2, b2, c2)] =
                  idx((a + a2) % 3, (b + b2 + a * c2) % 3, (c + c2) % 3);
  return FiniteGroup::from_flat_table(27, std::move(flat));
}

// x -> x^{-1} as a GroupMap; an automorphism exactly when G is abelian.
inline GroupMap inversion_map(const FiniteGroup& G) {
  GroupMap m;
  m.images.resize(G.order());
  for (int a = 0; a < G.order(); ++a) m.images[a] = G.inv(a);
  return m;
}

}  // namespace skewbrace
