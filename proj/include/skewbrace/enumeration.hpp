#pragma once

// Exhaustive enumeration of skew braces on small groups. The engine
// backtracks over gamma functions rather than multiplicative tables: values
// are drawn from Aut(G) and the gamma law propagates strongly, forcing the
// value on the whole multiplicative closure of the assigned elements.

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

struct EnumerationTask {
  std::optional<FiniteGroup> group;  // sweep all groups of `order` when absent
  int order = 0;
  bool filter_bi_skew = false;
  bool filter_gamma_homomorphic = false;
  bool filter_brace = false;  // abelian additive group
  bool up_to_iso = false;
  int workers = 1;
  int sweep_order_bound = 16;
  int single_group_order_bound = 32;
};

struct EnumerationResult {
  std::vector<SkewBrace> representatives;
  long long total_count = 0;  // braces passing the filters, before dedupe
  long long class_count = 0;  // representatives.size()
  // Tallies of each predicate over all enumerated braces, before filtering.
  long long tally_bi_skew = 0;
  long long tally_gamma_homomorphic = 0;
  long long tally_brace = 0;
};

namespace detail {

// Shared immutable data for one gamma search.
struct GammaSearchContext {
  const FiniteGroup& G;
  int n;
  std::vector<GroupMap> auts;
  std::vector<int> comp;  // comp[i*k+j] = index of auts[i] after auts[j]
  int id_index = -1;

  explicit GammaSearchContext(const FiniteGroup& group, int aut_bound)
      : G(group), n(group.order()) {
    auts = automorphism_group(G, aut_bound);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < auts.size(); ++i) {
      index[auts[i].images] = static_cast<int>(i);
      if (is_identity_map(auts[i])) id_index = static_cast<int>(i);
    }
    int k = static_cast<int>(auts.size());
    comp.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        comp[static_cast<size_t>(i) * k + j] = index.at(compose(auts[i], auts[j]).images);
  }

  int compose_idx(int i, int j) const {
    return comp[static_cast<size_t>(i) * auts.size() + j];
  }
  int apply(int aut, int x) const { return auts[aut].images[x]; }
};

// The gamma law gamma(a . gamma(a)(b)) = gamma(a)gamma(b) as a propagation
// rule over a partial assignment. Returns false on contradiction.
inline bool propagate_gamma(const GammaSearchContext& ctx, std::vector<int>& g,
                            std::vector<int> queue) {
  std::vector<int> assigned;
  for (int x = 0; x < ctx.n; ++x)
    if (g[x] >= 0) assigned.push_back(x);
  auto set = [&](int c, int value, std::vector<int>& q) -> bool {
    if (g[c] >= 0) return g[c] == value;
    g[c] = value;
    assigned.push_back(c);
    q.push_back(c);
    return true;
  };
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    // derive for pairs (e, x) and (x, e) over everything assigned so far
    for (size_t ai = 0; ai < assigned.size(); ++ai) {
      int x = assigned[ai];
      {
        int c = ctx.G.mul(e, ctx.apply(g[e], x));
        if (!set(c, ctx.compose_idx(g[e], g[x]), queue)) return false;
      }
      if (x != e) {
        int c = ctx.G.mul(x, ctx.apply(g[x], e));
        if (!set(c, ctx.compose_idx(g[x], g[e]), queue)) return false;
      }
    }
  }
  return true;
}

inline void gamma_search(const GammaSearchContext& ctx, std::vector<int> g,
                         const std::function<void(const std::vector<int>&)>& leaf) {
  int next = -1;
  for (int x = 1; x < ctx.n; ++x)
    if (g[x] < 0) {
      next = x;
      break;
    }
  if (next < 0) {
    leaf(g);
    return;
  }
  for (int cand = 0; cand < static_cast<int>(ctx.auts.size()); ++cand) {
    std::vector<int> g2 = g;
    g2[next] = cand;
    if (propagate_gamma(ctx, g2, {next})) gamma_search(ctx, std::move(g2), leaf);
  }
}

}  // namespace detail

// Emits every skew brace with additive group G, as produced by gamma
// functions in a fixed deterministic order. With workers > 1 the branches at
// the first assignment level run concurrently; the emission order does not
// depend on the worker count.
inline void enumerate_gammas(const FiniteGroup& G,
                             const std::function<void(const SkewBrace&)>& emit,
                             int workers = 1, int aut_bound = 64) {
  detail::GammaSearchContext ctx(G, aut_bound);
  int n = ctx.n;
  std::vector<int> g0(n, -1);
  g0[0] = ctx.id_index;
  if (!propagate_gamma(ctx, g0, {0}))
    throw internal_error("identity gamma assignment is inconsistent");

  auto build = [&](const std::vector<int>& assignment) {
    std::vector<GroupMap> maps(n);
    for (int a = 0; a < n; ++a) maps[a] = ctx.auts[assignment[a]];
    return from_gamma(G, maps);
  };

  if (n == 1) {
    emit(build(g0));
    return;
  }
  int first = -1;
  for (int x = 1; x < n; ++x)
    if (g0[x] < 0) {
      first = x;
      break;
    }
  if (first < 0) {
    emit(build(g0));
    return;
  }

  int branch_count = static_cast<int>(ctx.auts.size());
  auto run_branch = [&](int cand) {
    std::vector<SkewBrace> out;
    std::vector<int> g = g0;
    g[first] = cand;
    if (detail::propagate_gamma(ctx, g, {first}))
      detail::gamma_search(ctx, std::move(g),
                           [&](const std::vector<int>& leaf) { out.push_back(build(leaf)); });
    return out;
  };

  if (workers <= 1) {
    for (int cand = 0; cand < branch_count; ++cand)
      for (const SkewBrace& b : run_branch(cand)) emit(b);
    return;
  }

  std::vector<std::vector<SkewBrace>> results(branch_count);
  std::atomic<int> cursor{0};
  auto worker = [&] {
    while (true) {
      int i = cursor.fetch_add(1);
      if (i >= branch_count) break;
      results[i] = run_branch(i);
    }
  };
  std::vector<std::thread> pool;
  int count = std::min(workers, branch_count);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& branch : results)
    for (const SkewBrace& b : branch) emit(b);
}

// ---------------------------------------------------------------------------
// All groups of a given order, one per isomorphism class, by backtracking
// Cayley-table search with associativity propagation.

namespace detail {

struct TableSearchState {
  int n;
  std::vector<int> table;      // flat, -1 for unfilled
  std::vector<unsigned> row_used, col_used;
  int next_power_col = 1;      // column of row 1 constrained by the power chain

  bool filled(int a, int b) const { return table[static_cast<size_t>(a) * n + b] >= 0; }
  int at(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
};

// Sets cell (a,b)=v and closes under the associativity consequences
// a(bc)=(ab)c that become determined. Latin violations or conflicts fail.
inline bool table_assign(TableSearchState& st, int a0, int b0, int v0) {
  std::vector<std::array<int, 3>> queue{{a0, b0, v0}};
  while (!queue.empty()) {
    auto [a, b, v] = queue.back();
    queue.pop_back();
    int cur = st.at(a, b);
    if (cur >= 0) {
      if (cur != v) return false;
      continue;
    }
    if ((st.row_used[a] >> v) & 1u) return false;
    if ((st.col_used[b] >> v) & 1u) return false;
    st.table[static_cast<size_t>(a) * st.n + b] = v;
    st.row_used[a] |= 1u << v;
    st.col_used[b] |= 1u << v;

    // (x, a, b): x(ab) = (xa)b
    for (int x = 0; x < st.n; ++x) {
      if (!st.filled(x, a)) continue;
      int xa = st.at(x, a);
      bool l = st.filled(x, v), r = st.filled(xa, b);
      if (l && r) {
        if (st.at(x, v) != st.at(xa, b)) return false;
      } else if (l) {
        queue.push_back({xa, b, st.at(x, v)});
      } else if (r) {
        queue.push_back({x, v, st.at(xa, b)});
      }
    }
    // (a, b, c): a(bc) = (ab)c
    for (int c = 0; c < st.n; ++c) {
      if (!st.filled(b, c)) continue;
      int bc = st.at(b, c);
      bool l = st.filled(a, bc), r = st.filled(v, c);
      if (l && r) {
        if (st.at(a, bc) != st.at(v, c)) return false;
      } else if (l) {
        queue.push_back({v, c, st.at(a, bc)});
      } else if (r) {
        queue.push_back({a, bc, st.at(v, c)});
      }
    }
  }
  return true;
}

template <typename Fn>
void table_search(TableSearchState st, Fn&& leaf) {
  int a = -1, b = -1;
  for (int x = 1; x < st.n && a < 0; ++x)
    for (int y = 1; y < st.n; ++y)
      if (!st.filled(x, y)) {
        a = x;
        b = y;
        break;
      }
  if (a < 0) {
    leaf(st.table);
    return;
  }
  for (int v = 0; v < st.n; ++v) {
    if ((st.row_used[a] >> v) & 1u) continue;
    if ((st.col_used[b] >> v) & 1u) continue;
    // Canonical power chain for element 1: its powers are labelled
    // 2, 3, ... while the chain stays open, which every group can satisfy
    // after relabelling by a maximal-order element.
    if (a == 1 && b == st.next_power_col && v != 0 && v != b + 1) continue;
    TableSearchState st2 = st;
    if (a == 1 && b == st.next_power_col)
      st2.next_power_col = (v == 0) ? -1 : v;
    if (table_assign(st2, a, b, v)) table_search(std::move(st2), leaf);
  }
}

}  // namespace detail

inline std::vector<FiniteGroup> all_groups_of_order(int n, int bound = 16) {
  if (n < 1 || n > bound)
    fail(errc::order_bound_exceeded, "group sweep bound exceeded", {n, bound});
  if (n == 1) return {cyclic_group(1)};
  if (n > 31) fail(errc::order_bound_exceeded, "table search limited to order 31", {n});

  detail::TableSearchState st;
  st.n = n;
  st.table.assign(static_cast<size_t>(n) * n, -1);
  st.row_used.assign(n, 0);
  st.col_used.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    st.table[x] = x;
    st.table[static_cast<size_t>(x) * n] = x;
    st.row_used[0] |= 1u << x;
    st.col_used[0] |= 1u << x;
    st.row_used[x] |= 1u << x;
    st.col_used[x] |= 1u << x;
  }
  // cell (x,0) and (0,x) prefilled: masks must reflect both
  for (int x = 1; x < n; ++x) {
    st.row_used[x] = (1u << x);
    st.col_used[x] = (1u << x);
  }
  st.row_used[0] = st.col_used[0] = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);

  std::vector<FiniteGroup> reps;
  detail::table_search(st, [&](const std::vector<int>& flat) {
    FiniteGroup G = [&]() -> FiniteGroup {
      try {
        return FiniteGroup::from_flat_table(st.n, flat);
      } catch (const error&) {
        // Latin + propagation admits non-groups only through missing
        // inverses; those tables are simply skipped.
        return cyclic_group(1);
      }
    }();
    if (G.order() != st.n) return;
    // Canonical rule: element 1 has maximal order.
    int o1 = G.element_order(1);
    for (int x = 2; x < st.n; ++x)
      if (G.element_order(x) > o1) return;
    for (const FiniteGroup& r : reps)
      if (groups_isomorphic(r, G)) return;
    reps.push_back(std::move(G));
  });
  return reps;
}

// ---------------------------------------------------------------------------
// The composed enumeration entry point

inline EnumerationResult enumerate_braces(const EnumerationTask& task) {
  std::vector<FiniteGroup> groups;
  if (task.group) {
    if (task.group->order() > task.single_group_order_bound)
      fail(errc::order_bound_exceeded, "single-group enumeration bound exceeded",
           {task.group->order(), task.single_group_order_bound});
    groups.push_back(*task.group);
  } else {
    if (task.order < 1 || task.order > task.sweep_order_bound)
      fail(errc::order_bound_exceeded, "sweep order bound exceeded",
           {task.order, task.sweep_order_bound});
    groups = all_groups_of_order(task.order, task.sweep_order_bound);
  }

  EnumerationResult result;
  std::vector<SkewBrace> kept;
  for (const FiniteGroup& G : groups) {
    bool abelian = G.abelian();
    enumerate_gammas(
        G,
        [&](const SkewBrace& A) {
          bool bi = is_bi_skew(A).verdict;
          bool gh = is_gamma_homomorphic(A).verdict;
          if (bi) ++result.tally_bi_skew;
          if (gh) ++result.tally_gamma_homomorphic;
          if (abelian) ++result.tally_brace;
          if (task.filter_bi_skew && !bi) return;
          if (task.filter_gamma_homomorphic && !gh) return;
          if (task.filter_brace && !abelian) return;
          ++result.total_count;
          kept.push_back(A);
        },
        task.workers);
  }

  // Deterministic output order: sort by fingerprint, ties by tables.
  std::vector<std::vector<int>> prints(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) prints[i] = brace_fingerprint(kept[i]);
  std::vector<size_t> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (prints[a] != prints[b]) return prints[a] < prints[b];
    if (kept[a].add().flat() != kept[b].add().flat())
      return kept[a].add().flat() < kept[b].add().flat();
    return kept[a].mul().flat() < kept[b].mul().flat();
  });

  if (!task.up_to_iso) {
    for (size_t i : order) result.representatives.push_back(kept[i]);
  } else {
    // Fingerprint-equal runs are adjacent after the sort, so dedupe only
    // needs to search within the current run.
    size_t run_start = 0;
    std::vector<size_t> run_reps;
    for (size_t pos = 0; pos < order.size(); ++pos) {
      if (pos > 0 && prints[order[pos]] != prints[order[run_start]]) {
        run_start = pos;
        run_reps.clear();
      }
      bool fresh = true;
      for (size_t rep : run_reps)
        if (braces_isomorphic(kept[rep], kept[order[pos]])) {
          fresh = false;
          break;
        }
      if (fresh) {
        run_reps.push_back(order[pos]);
        result.representatives.push_back(kept[order[pos]]);
      }
    }
  }
  result.class_count = static_cast<long long>(result.representatives.size());
  return result;
}

}  // namespace skewbrace
