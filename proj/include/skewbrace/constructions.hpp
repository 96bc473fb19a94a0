#pragma once

// Named constructions of skew braces and brace blocks: trivial and almost
// trivial braces, braces from gamma functions, semidirect products, blocks
// from rings, from abelian automorphism subgroups, from inner automorphisms,
// the iterated-power block of a suitable brace, deformation by a compatible
// additive endomorphism, and block validation by two independent routes.

#include <array>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

inline SkewBrace trivial_brace(const FiniteGroup& G) {
  return SkewBrace::from_groups_unchecked(G, G);
}

inline SkewBrace op_trivial_brace(const FiniteGroup& G) {
  return SkewBrace::from_groups_unchecked(G.transposed(), G);
}

// Brace determined by a gamma function on G: a o b = a . gamma(a)(b).
// Checks that every value is an additive automorphism and that the gamma
// law gamma(a . gamma(a)(b)) = gamma(a)gamma(b) holds, then validates the
// resulting brace in full.
inline SkewBrace from_gamma(const FiniteGroup& G, const std::vector<GroupMap>& gammas) {
  int n = G.order();
  if (static_cast<int>(gammas.size()) != n)
    fail(errc::bad_entry, "gamma must assign a map to every element");
  for (int a = 0; a < n; ++a)
    if (!is_automorphism(G, gammas[a]))
      fail(errc::not_automorphism, "gamma value is not an additive automorphism", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = G.mul(a, gammas[a].apply(b));
      if (gammas[c] != compose(gammas[a], gammas[b]))
        fail(errc::gamma_law_fails, "gamma function law fails", {a, b});
    }
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = G.mul(a, gammas[a].apply(b));
  FiniteGroup mul = FiniteGroup::from_flat_table(n, std::move(flat));
  return SkewBrace::from_groups(G, std::move(mul));
}

// ---------------------------------------------------------------------------
// Semidirect product of skew braces.
//
// action[a] is an automorphism of both tables of B, and a -> action[a] is a
// homomorphism from the multiplicative group of A. Carrier index of (a, b)
// is a * |B| + b. The two operations are
//   (a,b) . (a',b') = (a.a', b.b')
//   (a,b) o (a',b') = (a o a', b o action[a](b'))
inline SkewBrace semidirect(const SkewBrace& A, const SkewBrace& B,
                            const std::vector<GroupMap>& action) {
  int na = A.order(), nb = B.order();
  if (static_cast<int>(action.size()) != na)
    fail(errc::bad_entry, "action must assign a map to every element of A");
  for (int a = 0; a < na; ++a)
    if (!is_automorphism(B.add(), action[a]) || !is_automorphism(B.mul(), action[a]))
      fail(errc::action_not_brace_automorphism,
           "action value is not an automorphism of both tables", {a});
  for (int a = 0; a < na; ++a)
    for (int a2 = 0; a2 < na; ++a2)
      if (action[A.mul().mul(a, a2)] != compose(action[a], action[a2]))
        fail(errc::action_not_homomorphism,
             "action is not a homomorphism from the multiplicative group", {a, a2});

  int n = na * nb;
  std::vector<int> add_flat(static_cast<size_t>(n) * n), mul_flat(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    int a = x / nb, b = x % nb;
    for (int y = 0; y < n; ++y) {
      int a2 = y / nb, b2 = y % nb;
      add_flat[static_cast<size_t>(x) * n + y] =
          A.add().mul(a, a2) * nb + B.add().mul(b, b2);
      mul_flat[static_cast<size_t>(x) * n + y] =
          A.mul().mul(a, a2) * nb + B.mul().mul(b, action[a].apply(b2));
    }
  }
  FiniteGroup add = FiniteGroup::from_flat_table(n, std::move(add_flat));
  FiniteGroup mul = FiniteGroup::from_flat_table(n, std::move(mul_flat));
  return SkewBrace::from_groups(std::move(add), std::move(mul));
}

// Convenience: the action of a cyclic-image homomorphism e -> psi^{e},
// given as exponents per element of A's carrier.
inline std::vector<GroupMap> action_by_exponents(const GroupMap& psi,
                                                 const std::vector<int>& exponents) {
  std::vector<GroupMap> action;
  action.reserve(exponents.size());
  for (int e : exponents) action.push_back(map_power(psi, e));
  return action;
}

// ---------------------------------------------------------------------------
// Brace blocks

// A finite family of group tables on one carrier such that every pair forms
// a bi-skew brace. ops[0] is the designated base operation; constructed
// blocks always put the base (additive) operation there.
struct BraceBlock {
  std::vector<FiniteGroup> ops;
  std::vector<std::string> labels;

  int order() const { return ops.empty() ? 0 : ops[0].order(); }
  int op_count() const { return static_cast<int>(ops.size()); }
  const FiniteGroup& base() const { return ops[0]; }
};

// The skew brace (A, ops[i], ops[j]) inside a block.
inline SkewBrace brace_at(const BraceBlock& block, int i, int j) {
  return SkewBrace::from_groups(block.ops[i], block.ops[j]);
}

// Family of maps attached to a block relative to its base operation:
// gammas[i][a](b) = a^{-1} o0 (a oi b).
struct GammaFamily {
  std::vector<std::vector<GroupMap>> gammas;
};

inline GammaFamily gamma_family_of(const BraceBlock& block) {
  const FiniteGroup& base = block.base();
  int n = base.order();
  GammaFamily fam;
  fam.gammas.resize(block.ops.size());
  for (size_t i = 0; i < block.ops.size(); ++i) {
    fam.gammas[i].resize(n);
    for (int a = 0; a < n; ++a) {
      fam.gammas[i][a].images.resize(n);
      for (int b = 0; b < n; ++b)
        fam.gammas[i][a].images[b] = base.mul(base.inv(a), block.ops[i].mul(a, b));
    }
  }
  return fam;
}

struct BlockReport {
  int pairs_checked = 0;
  bool pairwise_ok = false;  // every pair of operations forms a bi-skew brace
  bool family_ok = false;    // antihomomorphism + identity member + pairwise
                             // conjugation condition for the gamma family
};

// Validates a block by both routes and insists that they agree. Throws
// PairNotBiSkew / ConditionFails when the block is invalid.
inline BlockReport validate_block(const BraceBlock& block) {
  if (block.ops.empty()) fail(errc::bad_entry, "block has no operations");
  int n = block.order();
  for (const auto& op : block.ops)
    if (op.order() != n) fail(errc::bad_entry, "block operations differ in order");

  BlockReport report;

  // Route (a): the definition. Record the first failure but still evaluate
  // route (b) so that disagreement is detectable.
  bool pairwise = true;
  std::vector<long long> pair_witness;
  int k = block.op_count();
  for (int i = 0; i < k && pairwise; ++i)
    for (int j = i + 1; j < k && pairwise; ++j) {
      std::vector<long long> w;
      if (!detail::brace_equation_witness(block.ops[i], block.ops[j], &w) ||
          !detail::brace_equation_witness(block.ops[j], block.ops[i], &w)) {
        pairwise = false;
        pair_witness = {i, j, w[0], w[1], w[2]};
      }
      ++report.pairs_checked;
    }
  report.pairwise_ok = pairwise;

  // Route (b): the gamma-family conditions relative to ops[0].
  GammaFamily fam = gamma_family_of(block);
  bool family = true;
  std::vector<long long> cond_witness;
  const FiniteGroup& base = block.base();
  for (int i = 0; i < k && family; ++i) {
    for (int a = 0; a < n && family; ++a)
      if (!is_automorphism(base, fam.gammas[i][a])) {
        family = false;
        cond_witness = {i, a};
      }
    for (int a = 0; a < n && family; ++a)
      for (int b = 0; b < n && family; ++b)
        if (fam.gammas[i][base.mul(a, b)] != compose(fam.gammas[i][b], fam.gammas[i][a])) {
          family = false;
          cond_witness = {i, a, b};
        }
  }
  if (family) {
    bool has_identity_member = false;
    for (int i = 0; i < k && !has_identity_member; ++i) {
      bool all_id = true;
      for (int a = 0; a < n && all_id; ++a)
        if (!is_identity_map(fam.gammas[i][a])) all_id = false;
      has_identity_member = all_id;
    }
    if (!has_identity_member) {
      family = false;
      cond_witness = {-1};
    }
  }
  if (family) {
    for (int i = 0; i < k && family; ++i)
      for (int j = 0; j < k && family; ++j)
        for (int a = 0; a < n && family; ++a)
          for (int b = 0; b < n && family; ++b) {
            GroupMap lhs = compose(compose(fam.gammas[i][a], fam.gammas[j][b]),
                                   inverse_map(fam.gammas[i][a]));
            if (lhs != fam.gammas[j][fam.gammas[i][a].apply(b)]) {
              family = false;
              cond_witness = {i, j, a, b};
            }
          }
  }
  report.family_ok = family;

  if (pairwise != family)
    throw internal_error("block validation routes disagree");
  if (!pairwise) {
    // Both routes failed; report the definitional witness.
    fail(errc::pair_not_bi_skew, "operations do not form a bi-skew brace", pair_witness);
  }
  return report;
}

namespace detail {

// Assembles a block from per-operation tables, inserting the base operation
// at position 0 and dropping duplicates of tables already present.
inline BraceBlock block_from_tables(const FiniteGroup& base,
                                    const std::vector<std::pair<std::string, FiniteGroup>>& ops,
                                    bool check = true) {
  BraceBlock block;
  block.ops.push_back(base);
  block.labels.push_back("base");
  for (const auto& [label, op] : ops) {
    bool dup = false;
    for (const auto& existing : block.ops)
      if (existing == op) {
        dup = true;
        break;
      }
    if (!dup) {
      block.ops.push_back(op);
      block.labels.push_back(label);
    }
  }
  if (check) validate_block(block);
  return block;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring blocks: operations on R^2 given by (r,s) ox (r',s') = (r+r', s+s'+x r r').

// R = Z/mZ; carrier index of (r, s) is r*m + s.
inline BraceBlock ring_block(int m, const std::vector<long long>& xs) {
  if (m < 2) fail(errc::bad_entry, "modulus must be at least 2", {m});
  int n = m * m;
  auto make_op = [&](long long x) {
    std::vector<int> flat(static_cast<size_t>(n) * n);
    long long xm = ((x % m) + m) % m;
    for (int p = 0; p < n; ++p) {
      int r = p / m, s = p % m;
      for (int q = 0; q < n; ++q) {
        int r2 = q / m, s2 = q % m;
        int rr = (r + r2) % m;
        int ss = static_cast<int>((s + s2 + xm * r * r2) % m);
        flat[static_cast<size_t>(p) * n + q] = rr * m + ss;
      }
    }
    return unchecked_group(n, std::move(flat));
  };
  FiniteGroup base = make_op(0);
  std::vector<std::pair<std::string, FiniteGroup>> ops;
  for (long long x : xs) ops.emplace_back("x=" + std::to_string(x), make_op(x));
  return detail::block_from_tables(base, ops);
}

// General-ring hook: the same construction over an arbitrary finite unital
// ring, given by its additive group and multiplication table.
inline BraceBlock ring_block_custom(const FiniteGroup& radd, const std::vector<int>& rmul_flat,
                                    const std::vector<int>& xs) {
  int m = radd.order();
  if (static_cast<int>(rmul_flat.size()) != m * m)
    fail(errc::bad_entry, "ring multiplication table size mismatch");
  if (!radd.abelian()) fail(errc::bad_entry, "ring addition must be abelian");
  auto rmul = [&](int a, int b) { return rmul_flat[static_cast<size_t>(a) * m + b]; };
  // Light ring validation: associativity and distributivity.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (rmul(rmul(a, b), c) != rmul(a, rmul(b, c)))
          fail(errc::bad_entry, "ring multiplication not associative", {a, b, c});
        if (rmul(a, radd.mul(b, c)) != radd.mul(rmul(a, b), rmul(a, c)))
          fail(errc::bad_entry, "ring multiplication not left distributive", {a, b, c});
        if (rmul(radd.mul(a, b), c) != radd.mul(rmul(a, c), rmul(b, c)))
          fail(errc::bad_entry, "ring multiplication not right distributive", {a, b, c});
      }
  int n = m * m;
  auto make_op = [&](int x) {
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int p = 0; p < n; ++p) {
      int r = p / m, s = p % m;
      for (int q = 0; q < n; ++q) {
        int r2 = q / m, s2 = q % m;
        int rr = radd.mul(r, r2);
        int ss = radd.mul(radd.mul(s, s2), rmul(rmul(x, r), r2));
        flat[static_cast<size_t>(p) * n + q] = rr * m + ss;
      }
    }
    return unchecked_group(n, std::move(flat));
  };
  std::vector<std::pair<std::string, FiniteGroup>> ops;
  for (int x : xs) ops.emplace_back("x=" + std::to_string(x), make_op(x));
  return detail::block_from_tables(make_op(0), ops);
}

// ---------------------------------------------------------------------------
// Blocks from an abelian automorphism subgroup M and homomorphisms into M
// that are invariant under M itself. Every pair in the result is a
// gamma-homomorphic bi-skew brace; this is asserted after construction.

inline BraceBlock intermediate_block(const FiniteGroup& G, const std::vector<GroupMap>& M,
                                     const std::vector<std::vector<GroupMap>>& gammas) {
  int n = G.order();
  // M must be an abelian subgroup of Aut(G).
  for (const auto& psi : M)
    if (!is_automorphism(G, psi))
      fail(errc::not_into_m, "M contains a map that is not an automorphism");
  auto find_in_m = [&](const GroupMap& f) -> int {
    for (size_t i = 0; i < M.size(); ++i)
      if (M[i] == f) return static_cast<int>(i);
    return -1;
  };
  bool has_id = false;
  for (const auto& psi : M)
    if (is_identity_map(psi)) has_id = true;
  if (!has_id) fail(errc::not_subgroup, "M does not contain the identity");
  for (const auto& f : M)
    for (const auto& g : M) {
      if (compose(f, g) != compose(g, f))
        fail(errc::m_not_abelian, "M is not abelian");
      if (find_in_m(compose(f, g)) < 0)
        fail(errc::not_subgroup, "M is not closed under composition");
    }

  for (size_t gi = 0; gi < gammas.size(); ++gi) {
    const auto& gamma = gammas[gi];
    if (static_cast<int>(gamma.size()) != n)
      fail(errc::bad_entry, "gamma must assign a map to every element");
    for (int a = 0; a < n; ++a)
      if (find_in_m(gamma[a]) < 0)
        fail(errc::not_into_m, "gamma value lies outside M",
             {static_cast<long long>(gi), a});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (gamma[G.mul(a, b)] != compose(gamma[a], gamma[b]))
          fail(errc::not_homomorphism, "gamma is not a homomorphism into M",
               {static_cast<long long>(gi), a, b});
    for (const auto& psi : M)
      for (int a = 0; a < n; ++a)
        if (gamma[psi.apply(a)] != gamma[a])
          fail(errc::not_m_invariant, "gamma is not M-invariant",
               {static_cast<long long>(gi), a});
  }

  std::vector<std::pair<std::string, FiniteGroup>> ops;
  for (size_t gi = 0; gi < gammas.size(); ++gi) {
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        flat[static_cast<size_t>(a) * n + b] = G.mul(a, gammas[gi][a].apply(b));
    ops.emplace_back("gamma" + std::to_string(gi),
                     FiniteGroup::from_flat_table(n, std::move(flat)));
  }
  BraceBlock block = detail::block_from_tables(G, ops);
  for (int i = 0; i < block.op_count(); ++i)
    for (int j = i + 1; j < block.op_count(); ++j)
      if (!is_gamma_homomorphic(brace_at(block, i, j)).verdict)
        throw internal_error("intermediate block pair is not gamma-homomorphic");
  return block;
}

// Semidirect-product block on G x H: one operation per homomorphism
// alpha : G -> M, with M an abelian subgroup of Aut(H).
inline BraceBlock semidirect_block(const FiniteGroup& G, const FiniteGroup& H,
                                   const std::vector<GroupMap>& M,
                                   const std::vector<std::vector<GroupMap>>& alphas) {
  for (const auto& psi : M)
    if (!is_automorphism(H, psi))
      fail(errc::not_into_m, "M contains a map that is not an automorphism of H");
  for (const auto& f : M)
    for (const auto& g : M)
      if (compose(f, g) != compose(g, f)) fail(errc::m_not_abelian, "M is not abelian");

  int ng = G.order(), nh = H.order();
  auto find_in_m = [&](const GroupMap& f) {
    for (const auto& psi : M)
      if (psi == f) return true;
    return false;
  };
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const auto& alpha = alphas[ai];
    if (static_cast<int>(alpha.size()) != ng)
      fail(errc::bad_entry, "alpha must assign a map to every element of G");
    for (int g = 0; g < ng; ++g)
      if (!find_in_m(alpha[g]))
        fail(errc::not_into_m, "alpha value lies outside M", {static_cast<long long>(ai), g});
    for (int g = 0; g < ng; ++g)
      for (int g2 = 0; g2 < ng; ++g2)
        if (alpha[G.mul(g, g2)] != compose(alpha[g], alpha[g2]))
          fail(errc::not_homomorphism, "alpha is not a homomorphism",
               {static_cast<long long>(ai), g, g2});
  }

  int n = ng * nh;
  auto make_op = [&](const std::vector<GroupMap>& alpha) {
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      int g = x / nh, h = x % nh;
      for (int y = 0; y < n; ++y) {
        int g2 = y / nh, h2 = y % nh;
        flat[static_cast<size_t>(x) * n + y] =
            G.mul(g, g2) * nh + H.mul(h, alpha[g].apply(h2));
      }
    }
    return unchecked_group(n, std::move(flat));
  };
  FiniteGroup base = direct_product(G, H);
  std::vector<std::pair<std::string, FiniteGroup>> ops;
  for (size_t ai = 0; ai < alphas.size(); ++ai)
    ops.emplace_back("alpha" + std::to_string(ai), make_op(alphas[ai]));
  return detail::block_from_tables(base, ops);
}

// Block from inner automorphisms: B a subgroup of A with [B, B] central,
// so the conjugations by B form an abelian group H(B); each psi maps the
// carrier into B and a -> conj_{psi(a)} must be a homomorphism into H(B).
inline BraceBlock inner_block(const FiniteGroup& A, const Subgroup& B,
                              const std::vector<std::vector<int>>& psis) {
  require_subgroup(A, B);
  int n = A.order();
  auto conj_map = [&](int b) {
    GroupMap m;
    m.images.resize(n);
    for (int x = 0; x < n; ++x) m.images[x] = A.conjugate(b, x);
    return m;
  };
  // H(B), deduplicated.
  std::vector<GroupMap> hb;
  for (int b : B.members) {
    GroupMap m = conj_map(b);
    bool dup = false;
    for (const auto& e : hb)
      if (e == m) dup = true;
    if (!dup) hb.push_back(std::move(m));
  }
  for (const auto& f : hb)
    for (const auto& g : hb)
      if (compose(f, g) != compose(g, f))
        fail(errc::hb_not_abelian, "inner automorphisms induced by B are not abelian");
  // Cross-check the stated equivalence with [B,B] central.
  Subgroup bb = commutator_subgroup(A, B, B);
  Subgroup z = center_subgroup(A);
  for (int x : bb.members)
    if (!z.contains(x)) throw internal_error("H(B) abelian but [B,B] not central");

  std::vector<std::vector<GroupMap>> gammas;
  for (size_t pi = 0; pi < psis.size(); ++pi) {
    const auto& psi = psis[pi];
    if (static_cast<int>(psi.size()) != n)
      fail(errc::bad_entry, "psi must assign a conjugator to every element");
    std::vector<GroupMap> gamma(n);
    for (int a = 0; a < n; ++a) {
      if (!B.contains(psi[a]))
        fail(errc::bad_entry, "psi image lies outside B", {static_cast<long long>(pi), a});
      gamma[a] = conj_map(psi[a]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (gamma[A.mul(a, b)] != compose(gamma[a], gamma[b]))
          fail(errc::not_homomorphism, "induced conjugation map is not a homomorphism",
               {static_cast<long long>(pi), a, b});
    gammas.push_back(std::move(gamma));
  }
  return intermediate_block(A, hb, gammas);
}

// Iterated block of a gamma-homomorphic bi-skew brace: one operation per n,
// with gamma_n(a) = gamma(a^n) = gamma(a)^n.
inline BraceBlock iterate_block(const SkewBrace& A, const std::vector<long long>& ns) {
  if (!is_bi_skew(A).verdict) fail(errc::not_bi_skew, "iterate needs a bi-skew brace");
  if (!is_gamma_homomorphic(A).verdict)
    fail(errc::not_gamma_homomorphic, "iterate needs a gamma-homomorphic brace");
  int n = A.order();
  GammaFunction g = gamma(A);
  // The two descriptions of gamma_n must agree; this is a consequence of the
  // hypotheses, so a mismatch is a bug.
  for (long long k : ns)
    for (int a = 0; a < n; ++a)
      if (map_power(g.maps[a], k) != g.maps[A.add().power(a, k)])
        throw internal_error("gamma(a^n) differs from gamma(a)^n");

  std::vector<std::pair<std::string, FiniteGroup>> ops;
  for (long long k : ns) {
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      GroupMap gk = map_power(g.maps[a], k);
      for (int b = 0; b < n; ++b)
        flat[static_cast<size_t>(a) * n + b] = A.add().mul(a, gk.apply(b));
    }
    ops.emplace_back("n=" + std::to_string(k), FiniteGroup::from_flat_table(n, std::move(flat)));
  }
  return detail::block_from_tables(A.add(), ops);
}

// Deformation by an additive endomorphism psi compatible with gamma:
//   psi(gamma(psi(a))(b)) = gamma(psi(a))(psi(b)) for all a, b
// yields the skew brace a o_psi b = a . gamma(psi(a))(b).
inline SkewBrace psi_deform(const SkewBrace& A, const std::vector<int>& psi) {
  int n = A.order();
  if (static_cast<int>(psi.size()) != n)
    fail(errc::bad_entry, "psi must assign an image to every element");
  GroupMap pm;
  pm.images = psi;
  if (!is_homomorphism(A.add(), A.add(), pm))
    fail(errc::not_endomorphism, "psi is not an additive endomorphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (psi[A.gamma_apply(psi[a], b)] != A.gamma_apply(psi[a], psi[b]))
        fail(errc::compatibility_fails, "psi does not commute with gamma as required", {a, b});
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = A.add().mul(a, A.gamma_apply(psi[a], b));
  FiniteGroup mul = FiniteGroup::from_flat_table(n, std::move(flat));
  return SkewBrace::from_groups(A.add(), std::move(mul));
}

// ---------------------------------------------------------------------------
// The two order-32 braces whose solutions are isomorphic while the solutions
// of the swapped braces are not.

// Semidirect product of Triv(C2) acting on Triv(C2 x C8) by inversion.
inline SkewBrace counterexample_brace_a() {
  FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(8));
  SkewBrace top = trivial_brace(cyclic_group(2));
  SkewBrace bottom = trivial_brace(g);
  std::vector<GroupMap> action{identity_map(g.order()), inversion_map(g)};
  return semidirect(top, bottom, action);
}

// Semidirect product of Triv(C2) acting on Triv(C2^4) by swapping the first
// two and the last two coordinates.
inline SkewBrace counterexample_brace_b() {
  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup h = direct_product(direct_product(c2, c2), direct_product(c2, c2));
  GroupMap swap_halves;
  swap_halves.images.resize(16);
  for (int x = 0; x < 16; ++x) {
    int a = (x >> 3) & 1, b = (x >> 2) & 1, c = (x >> 1) & 1, d = x & 1;
    swap_halves.images[x] = (b << 3) | (a << 2) | (d << 1) | c;
  }
  SkewBrace top = trivial_brace(c2);
  SkewBrace bottom = trivial_brace(h);
  std::vector<GroupMap> action{identity_map(16), swap_halves};
  return semidirect(top, bottom, action);
}

}  // namespace skewbrace
