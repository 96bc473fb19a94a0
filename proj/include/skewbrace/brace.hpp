#pragma once

// Skew braces as a pair of group tables on one carrier, linked by the left
// brace equation, together with the gamma/star machinery, ideals, the four
// nilpotency/solubility series, and the bi-skew and gamma-homomorphic
// predicates. Each predicate evaluates all of its equivalent
// characterisations and treats any disagreement between them as a bug.

#include <algorithm>
#include <atomic>
#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

// Opt-in revalidation of braces produced by trusted constructors
// (opposite, swapped, quotient).
inline std::atomic<bool>& paranoid_validation() {
  static std::atomic<bool> flag{false};
  return flag;
}

namespace detail {

// Left brace equation for the pair (add, mul): for all a, b, c,
//   a o (b . c) = (a o b) . a^{-1} . (a o c),
// where o is mul, . is add and the inverse is taken in add.
inline bool brace_equation_witness(const FiniteGroup& add, const FiniteGroup& mul,
                                   std::vector<long long>* witness) {
  int n = add.order();
  for (int a = 0; a < n; ++a) {
    int ia = add.inv(a);
    for (int b = 0; b < n; ++b) {
      int ab = mul.mul(a, b);
      int left_part = add.mul(ab, ia);
      for (int c = 0; c < n; ++c) {
        if (mul.mul(a, add.mul(b, c)) != add.mul(left_part, mul.mul(a, c))) {
          if (witness) *witness = {a, b, c};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

class SkewBrace {
 public:
  // Full validation: both tables are groups with identity 0 and the brace
  // equation holds for all triples. The gamma table is cached on success.
  static SkewBrace from_groups(FiniteGroup add, FiniteGroup mul) {
    check(add, mul);
    return SkewBrace(std::move(add), std::move(mul));
  }

  // For constructors whose output is a brace by an established result.
  // Honors paranoid_validation().
  static SkewBrace from_groups_unchecked(FiniteGroup add, FiniteGroup mul) {
    if (paranoid_validation().load()) check(add, mul);
    return SkewBrace(std::move(add), std::move(mul));
  }

  const FiniteGroup& add() const { return add_; }
  const FiniteGroup& mul() const { return mul_; }
  int order() const { return add_.order(); }

  // gamma(a)(b) = a^{-1} . (a o b)
  int gamma_apply(int a, int b) const { return gamma_[static_cast<size_t>(a) * order() + b]; }
  // gamma_op(a)(b) = (a o b) . a^{-1}, the gamma function of the opposite brace.
  int gamma_op_apply(int a, int b) const {
    return add_.mul(mul_.mul(a, b), add_.inv(a));
  }

  bool is_brace() const { return add_.abelian(); }

  bool operator==(const SkewBrace& o) const { return add_ == o.add_ && mul_ == o.mul_; }
  bool operator!=(const SkewBrace& o) const { return !(*this == o); }

 private:
  SkewBrace(FiniteGroup add, FiniteGroup mul)
      : add_(std::move(add)), mul_(std::move(mul)) {
    int n = add_.order();
    gamma_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      int ia = add_.inv(a);
      for (int b = 0; b < n; ++b)
        gamma_[static_cast<size_t>(a) * n + b] = add_.mul(ia, mul_.mul(a, b));
    }
  }

  static void check(const FiniteGroup& add, const FiniteGroup& mul) {
    if (add.order() != mul.order())
      fail(errc::bad_entry, "additive and multiplicative orders differ");
    std::vector<long long> w;
    if (!detail::brace_equation_witness(add, mul, &w))
      fail(errc::brace_equation_fails, "left brace equation fails", w);
  }

  FiniteGroup add_;
  FiniteGroup mul_;
  std::vector<int> gamma_;
};

// Builds a brace from raw tables, forwarding group validation failures as
// AddInvalid / MulInvalid.
inline SkewBrace brace_from_tables(const std::vector<std::vector<int>>& add_table,
                                   const std::vector<std::vector<int>>& mul_table) {
  FiniteGroup add = [&] {
    try {
      return FiniteGroup::from_table(add_table);
    } catch (const error& e) {
      fail(errc::add_invalid, std::string("additive table invalid: ") + e.what(), e.witness());
    }
  }();
  FiniteGroup mul = [&] {
    try {
      return FiniteGroup::from_table(mul_table);
    } catch (const error& e) {
      fail(errc::mul_invalid, std::string("multiplicative table invalid: ") + e.what(),
           e.witness());
    }
  }();
  return SkewBrace::from_groups(std::move(add), std::move(mul));
}

// ---------------------------------------------------------------------------
// Gamma functions

struct GammaFunction {
  std::vector<GroupMap> maps;  // maps[a] is an automorphism of the additive group

  const GroupMap& at(int a) const { return maps[a]; }
  int size() const { return static_cast<int>(maps.size()); }
};

namespace detail {

inline void verify_gamma(const SkewBrace& A, const GammaFunction& g, const char* which) {
  int n = A.order();
  for (int a = 0; a < n; ++a)
    if (!is_automorphism(A.add(), g.maps[a]))
      throw internal_error(std::string(which) + "(a) is not an additive automorphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.maps[A.mul().mul(a, b)] != compose(g.maps[a], g.maps[b]))
        throw internal_error(std::string(which) +
                             " is not multiplicative-to-automorphism homomorphic");
}

}  // namespace detail

inline GammaFunction gamma(const SkewBrace& A) {
  int n = A.order();
  GammaFunction g;
  g.maps.resize(n);
  for (int a = 0; a < n; ++a) {
    g.maps[a].images.resize(n);
    for (int b = 0; b < n; ++b) g.maps[a].images[b] = A.gamma_apply(a, b);
  }
  detail::verify_gamma(A, g, "gamma");
  return g;
}

inline GammaFunction gamma_op(const SkewBrace& A) {
  int n = A.order();
  GammaFunction g;
  g.maps.resize(n);
  for (int a = 0; a < n; ++a) {
    g.maps[a].images.resize(n);
    for (int b = 0; b < n; ++b) g.maps[a].images[b] = A.gamma_op_apply(a, b);
  }
  detail::verify_gamma(A, g, "gamma_op");
  return g;
}

// ---------------------------------------------------------------------------
// The star operations and star-generated subgroups

// a * b = gamma(a)(b) . b^{-1}
inline int star(const SkewBrace& A, int a, int b) {
  return A.add().mul(A.gamma_apply(a, b), A.add().inv(b));
}

// a *op b = b^{-1} . (a o b) . a^{-1}
inline int star_op(const SkewBrace& A, int a, int b) {
  const FiniteGroup& add = A.add();
  return add.mul(add.mul(add.inv(b), A.mul().mul(a, b)), add.inv(a));
}

// Subgroup of the additive group generated by all pairwise stars.
inline Subgroup star_subgroup(const SkewBrace& A, const Subgroup& X, const Subgroup& Y) {
  std::vector<int> gens;
  for (int x : X.members)
    for (int y : Y.members) gens.push_back(star(A, x, y));
  return subgroup_generated(A.add(), gens);
}

inline Subgroup star_op_subgroup(const SkewBrace& A, const Subgroup& X, const Subgroup& Y) {
  std::vector<int> gens;
  for (int x : X.members)
    for (int y : Y.members) gens.push_back(star_op(A, x, y));
  // A set is closed under x .op y = y . x exactly when it is closed under .,
  // so the closure can be taken in the additive group directly.
  return subgroup_generated(A.add(), gens);
}

inline Subgroup a_squared(const SkewBrace& A) {
  Subgroup whole = whole_subgroup(A.add());
  return star_subgroup(A, whole, whole);
}

inline Subgroup a_op_squared(const SkewBrace& A) {
  Subgroup whole = whole_subgroup(A.add());
  return star_op_subgroup(A, whole, whole);
}

inline Subgroup ker_gamma(const SkewBrace& A) {
  Subgroup s;
  int n = A.order();
  for (int a = 0; a < n; ++a) {
    bool id = true;
    for (int b = 0; b < n && id; ++b)
      if (A.gamma_apply(a, b) != b) id = false;
    if (id) s.members.push_back(a);
  }
  return s;
}

inline Subgroup socle(const SkewBrace& A) {
  Subgroup k = ker_gamma(A);
  Subgroup z = center_subgroup(A.add());
  Subgroup s;
  std::set_intersection(k.members.begin(), k.members.end(), z.members.begin(),
                        z.members.end(), std::back_inserter(s.members));
  return s;
}

// ---------------------------------------------------------------------------
// Opposite and swapped braces

inline SkewBrace opposite(const SkewBrace& A) {
  return SkewBrace::from_groups_unchecked(A.add().transposed(), A.mul());
}

// ---------------------------------------------------------------------------
// Ideals

inline bool is_left_ideal(const SkewBrace& A, const Subgroup& S) {
  require_subgroup(A.add(), S);
  for (int a = 0; a < A.order(); ++a)
    for (int s : S.members)
      if (!S.contains(A.gamma_apply(a, s))) return false;
  return true;
}

inline bool is_ideal(const SkewBrace& A, const Subgroup& S) {
  if (!is_left_ideal(A, S)) return false;
  return is_normal(A.add(), S) && is_normal(A.mul(), S);
}

// ---------------------------------------------------------------------------
// Series

enum class SeriesKind { right, left, strong, soluble };

inline const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::right: return "right";
    case SeriesKind::left: return "left";
    case SeriesKind::strong: return "strong";
    case SeriesKind::soluble: return "soluble";
  }
  return "?";
}

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subgroup> chain;  // strictly decreasing; last entry is the
                                // trivial subgroup exactly when terminated
  bool terminated = false;
  std::optional<int> class_value;
};

inline SeriesReport series(const SkewBrace& A, SeriesKind kind) {
  SeriesReport r;
  r.kind = kind;
  Subgroup whole = whole_subgroup(A.add());
  std::vector<Subgroup> terms{whole};

  // The right, left and soluble recursions depend on the previous term only,
  // so a repeated term is a genuine fixpoint. The strong series feeds on all
  // earlier terms; it provably goes constant as well, but only after a longer
  // run, hence the larger cap.
  int cap = kind == SeriesKind::strong ? 2 * A.order() + 4 : A.order() + 1;
  while (static_cast<int>(terms.size()) <= cap) {
    const Subgroup& prev = terms.back();
    if (prev.trivial()) break;
    Subgroup next;
    switch (kind) {
      case SeriesKind::right:
        next = star_subgroup(A, prev, whole);
        break;
      case SeriesKind::left:
        next = star_subgroup(A, whole, prev);
        break;
      case SeriesKind::soluble:
        next = star_subgroup(A, prev, prev);
        break;
      case SeriesKind::strong: {
        std::vector<int> gens;
        size_t m = terms.size() + 1;  // computing the m-th term, 1-based
        for (size_t i = 1; i < m; ++i) {
          const Subgroup& X = terms[i - 1];
          const Subgroup& Y = terms[m - i - 1];
          for (int x : X.members)
            for (int y : Y.members) gens.push_back(star(A, x, y));
        }
        next = subgroup_generated(A.add(), gens);
        break;
      }
    }
    if (next == prev) break;
    terms.push_back(std::move(next));
  }

  r.terminated = terms.back().trivial();
  if (r.terminated) r.class_value = static_cast<int>(terms.size()) - 1;
  r.chain = std::move(terms);
  return r;
}

// ---------------------------------------------------------------------------
// Image of gamma as an abstract group

// Distinct gamma maps with composition; the identity map gets index 0.
// Returns the group together with the assignment element -> map index.
struct ImGamma {
  FiniteGroup group;
  std::vector<int> element_to_index;
};

inline ImGamma im_gamma(const SkewBrace& A) {
  int n = A.order();
  std::vector<std::vector<int>> maps;
  std::map<std::vector<int>, int> index;
  std::vector<int> assign(n);
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  maps.push_back(id);
  index[id] = 0;
  for (int a = 0; a < n; ++a) {
    std::vector<int> row(n);
    for (int b = 0; b < n; ++b) row[b] = A.gamma_apply(a, b);
    auto it = index.find(row);
    if (it == index.end()) {
      index[row] = static_cast<int>(maps.size());
      assign[a] = static_cast<int>(maps.size());
      maps.push_back(std::move(row));
    } else {
      assign[a] = it->second;
    }
  }
  int k = static_cast<int>(maps.size());
  std::vector<int> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = maps[i][maps[j][x]];
      auto it = index.find(comp);
      if (it == index.end())
        throw internal_error("image of gamma is not closed under composition");
      flat[static_cast<size_t>(i) * k + j] = it->second;
    }
  return ImGamma{FiniteGroup::from_flat_table(k, std::move(flat)), std::move(assign)};
}

inline bool im_gamma_abelian(const SkewBrace& A) {
  return im_gamma(A).group.abelian();
}

// ---------------------------------------------------------------------------
// Bi-skew and gamma-homomorphic predicates

struct BiSkewReport {
  bool verdict = false;
  bool by_definition = false;         // (A, o, .) satisfies the brace equation
  bool by_antihom = false;            // gamma(a.b) = gamma(b)gamma(a)
  bool by_ideal_containment = false;  // A^2_op contained in ker(gamma)
  bool by_star_triviality = false;    // A^2_op * A = {1}
};

inline BiSkewReport is_bi_skew(const SkewBrace& A) {
  BiSkewReport r;
  int n = A.order();

  r.by_definition = detail::brace_equation_witness(A.mul(), A.add(), nullptr);

  r.by_antihom = true;
  for (int a = 0; a < n && r.by_antihom; ++a)
    for (int b = 0; b < n && r.by_antihom; ++b) {
      int ab = A.add().mul(a, b);
      for (int x = 0; x < n; ++x)
        if (A.gamma_apply(ab, x) != A.gamma_apply(b, A.gamma_apply(a, x))) {
          r.by_antihom = false;
          break;
        }
    }

  Subgroup op2 = a_op_squared(A);
  Subgroup ker = ker_gamma(A);
  r.by_ideal_containment = std::includes(ker.members.begin(), ker.members.end(),
                                         op2.members.begin(), op2.members.end());

  r.by_star_triviality = star_subgroup(A, op2, whole_subgroup(A.add())).trivial();

  if (r.by_definition != r.by_antihom || r.by_antihom != r.by_ideal_containment ||
      r.by_ideal_containment != r.by_star_triviality)
    throw internal_error("bi-skew characterisations disagree");
  r.verdict = r.by_definition;
  return r;
}

struct GammaHomReport {
  bool verdict = false;
  bool by_hom_law = false;     // gamma(a.b) = gamma(a)gamma(b)
  bool by_a2_in_ker = false;   // A^2 contained in ker(gamma)
  bool by_class_le_2 = false;  // right nilpotent of class at most 2
};

inline GammaHomReport is_gamma_homomorphic(const SkewBrace& A) {
  GammaHomReport r;
  int n = A.order();

  r.by_hom_law = true;
  for (int a = 0; a < n && r.by_hom_law; ++a)
    for (int b = 0; b < n && r.by_hom_law; ++b) {
      int ab = A.add().mul(a, b);
      for (int x = 0; x < n; ++x)
        if (A.gamma_apply(ab, x) != A.gamma_apply(a, A.gamma_apply(b, x))) {
          r.by_hom_law = false;
          break;
        }
    }

  Subgroup sq = a_squared(A);
  Subgroup ker = ker_gamma(A);
  r.by_a2_in_ker = std::includes(ker.members.begin(), ker.members.end(),
                                 sq.members.begin(), sq.members.end());

  SeriesReport right = series(A, SeriesKind::right);
  r.by_class_le_2 = right.terminated && *right.class_value <= 2;

  if (r.by_hom_law != r.by_a2_in_ker || r.by_a2_in_ker != r.by_class_le_2)
    throw internal_error("gamma-homomorphic characterisations disagree");
  r.verdict = r.by_hom_law;
  return r;
}

// (A, o, .) as a skew brace; only defined for bi-skew braces.
inline SkewBrace swapped(const SkewBrace& A) {
  if (!is_bi_skew(A).verdict)
    fail(errc::not_bi_skew, "swapping requires a bi-skew brace");
  return SkewBrace::from_groups_unchecked(A.mul(), A.add());
}

// ---------------------------------------------------------------------------
// Quotients and isomorphisms

struct QuotientBrace {
  SkewBrace brace;
  GroupMap projection;
};

inline QuotientBrace quotient_brace(const SkewBrace& A, const Subgroup& I) {
  if (!is_ideal(A, I)) fail(errc::not_an_ideal, "quotient requires an ideal");
  QuotientGroup qa = quotient_group(A.add(), I);
  int n = A.order();
  int k = qa.group.order();
  // Multiplicative cosets coincide with additive ones for an ideal, so the
  // additive labelling carries over.
  std::vector<int> reps(k, -1);
  for (int x = n - 1; x >= 0; --x) reps[qa.projection.images[x]] = x;
  std::vector<int> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      flat[static_cast<size_t>(i) * k + j] = qa.projection.images[A.mul().mul(reps[i], reps[j])];
  FiniteGroup qmul = FiniteGroup::from_flat_table(k, std::move(flat));
  return QuotientBrace{SkewBrace::from_groups_unchecked(qa.group, std::move(qmul)),
                       qa.projection};
}

// Cheap isomorphism invariants, ordered so that the cheap group-level data
// rejects first: additive profile, multiplicative profile, |Soc|, |A^2|,
// then the four series classes.
inline std::vector<int> brace_fingerprint(const SkewBrace& A) {
  std::vector<int> f;
  f.push_back(A.order());
  auto push_group = [&](const FiniteGroup& G) {
    auto prof = G.order_profile();
    f.insert(f.end(), prof.begin(), prof.end());
    GroupStructure s = group_structure(G);
    f.push_back(s.abelian ? 1 : 0);
    f.push_back(s.center.size());
    f.push_back(s.derived.size());
    f.push_back(s.nilpotency_class.value_or(-1));
    f.push_back(s.derived_length.value_or(-1));
  };
  push_group(A.add());
  push_group(A.mul());
  f.push_back(socle(A).size());
  f.push_back(a_squared(A).size());
  f.push_back(a_op_squared(A).size());
  for (SeriesKind k :
       {SeriesKind::right, SeriesKind::left, SeriesKind::strong, SeriesKind::soluble}) {
    SeriesReport s = series(A, k);
    f.push_back(s.class_value.value_or(-1));
  }
  return f;
}

// Searches for a brace isomorphism by backtracking over additive-group
// isomorphisms and checking the multiplicative table, after fingerprint
// rejection.
inline std::optional<GroupMap> find_brace_isomorphism(const SkewBrace& A, const SkewBrace& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (brace_fingerprint(A) != brace_fingerprint(B)) return std::nullopt;
  std::optional<GroupMap> found;
  detail::for_each_isomorphism(A.add(), B.add(), [&](GroupMap m) {
    for (int a = 0; a < A.order(); ++a)
      for (int b = 0; b < A.order(); ++b)
        if (m.images[A.mul().mul(a, b)] != B.mul().mul(m.images[a], m.images[b])) return true;
    found = std::move(m);
    return false;
  });
  return found;
}

inline bool braces_isomorphic(const SkewBrace& A, const SkewBrace& B) {
  return find_brace_isomorphism(A, B).has_value();
}

}  // namespace skewbrace
