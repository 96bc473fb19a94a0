#pragma once

// Set-theoretic Yang-Baxter solutions as sigma/tau permutation tables:
// derivation from skew braces, axiom checking, inverses, retracts,
// multipermutation levels, the permutation group, and isomorphism search.
//
// Conventions: r(x, y) = (sigma_x(y), tau_y(x)). sigma is stored row-major
// by the first argument of r, tau row-major by the second: tau[y][x] is
// tau_y(x). The file format fixes the same orientation.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

class Solution {
 public:
  static Solution from_tables(const std::vector<std::vector<int>>& sigma,
                              const std::vector<std::vector<int>>& tau) {
    int n = static_cast<int>(sigma.size());
    if (static_cast<int>(tau.size()) != n)
      fail(errc::bad_entry, "sigma and tau sizes differ");
    std::vector<int> sflat, tflat;
    sflat.reserve(static_cast<size_t>(n) * n);
    tflat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : sigma) {
      if (static_cast<int>(row.size()) != n) fail(errc::bad_entry, "sigma is not square");
      sflat.insert(sflat.end(), row.begin(), row.end());
    }
    for (const auto& row : tau) {
      if (static_cast<int>(row.size()) != n) fail(errc::bad_entry, "tau is not square");
      tflat.insert(tflat.end(), row.begin(), row.end());
    }
    return from_flat(n, std::move(sflat), std::move(tflat));
  }

  static Solution from_flat(int n, std::vector<int> sigma, std::vector<int> tau) {
    for (int v : sigma)
      if (v < 0 || v >= n) fail(errc::bad_entry, "sigma entry out of range", {v});
    for (int v : tau)
      if (v < 0 || v >= n) fail(errc::bad_entry, "tau entry out of range", {v});
    Solution s(n, std::move(sigma), std::move(tau));
    s.validate();
    return s;
  }

  int size() const { return n_; }
  int sigma(int x, int y) const { return sigma_[static_cast<size_t>(x) * n_ + y]; }
  int tau(int y, int x) const { return tau_[static_cast<size_t>(y) * n_ + x]; }
  int sigma_hat(int x, int y) const { return sigma_hat_[static_cast<size_t>(x) * n_ + y]; }
  int tau_hat(int y, int x) const { return tau_hat_[static_cast<size_t>(y) * n_ + x]; }

  std::pair<int, int> r(int x, int y) const { return {sigma(x, y), tau(y, x)}; }
  std::pair<int, int> r_inv(int x, int y) const { return {sigma_hat(x, y), tau_hat(y, x)}; }

  bool involutive() const { return involutive_; }

  std::vector<int> sigma_row(int x) const {
    return {sigma_.begin() + static_cast<size_t>(x) * n_,
            sigma_.begin() + static_cast<size_t>(x + 1) * n_};
  }
  std::vector<int> tau_row(int y) const {
    return {tau_.begin() + static_cast<size_t>(y) * n_,
            tau_.begin() + static_cast<size_t>(y + 1) * n_};
  }

  bool operator==(const Solution& o) const {
    return n_ == o.n_ && sigma_ == o.sigma_ && tau_ == o.tau_;
  }
  bool operator!=(const Solution& o) const { return !(*this == o); }

 private:
  Solution(int n, std::vector<int> sigma, std::vector<int> tau)
      : n_(n), sigma_(std::move(sigma)), tau_(std::move(tau)) {}

  void validate() {
    for (int x = 0; x < n_; ++x)
      if (!is_permutation(sigma_row(x), n_))
        fail(errc::degenerate_sigma, "sigma row is not a permutation", {x});
    for (int y = 0; y < n_; ++y)
      if (!is_permutation(tau_row(y), n_))
        fail(errc::degenerate_tau, "tau row is not a permutation", {y});

    std::vector<int> preimage(static_cast<size_t>(n_) * n_, -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        auto [u, v] = r(x, y);
        size_t cell = static_cast<size_t>(u) * n_ + v;
        if (preimage[cell] >= 0) {
          int px = preimage[cell] / n_, py = preimage[cell] % n_;
          fail(errc::not_bijective_pair_map, "pair map is not a bijection", {px, py, x, y});
        }
        preimage[cell] = x * n_ + y;
      }
    sigma_hat_.resize(static_cast<size_t>(n_) * n_);
    tau_hat_.resize(static_cast<size_t>(n_) * n_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        int p = preimage[static_cast<size_t>(u) * n_ + v];
        sigma_hat_[static_cast<size_t>(u) * n_ + v] = p / n_;
        tau_hat_[static_cast<size_t>(v) * n_ + u] = p % n_;
      }

    // Braid equation r1 r2 r1 = r2 r1 r2 on all triples.
    auto r1 = [&](std::array<int, 3> t) {
      auto [u, v] = r(t[0], t[1]);
      return std::array<int, 3>{u, v, t[2]};
    };
    auto r2 = [&](std::array<int, 3> t) {
      auto [u, v] = r(t[1], t[2]);
      return std::array<int, 3>{t[0], u, v};
    };
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          std::array<int, 3> t{x, y, z};
          if (r1(r2(r1(t))) != r2(r1(r2(t))))
            fail(errc::braid_fails, "braid equation fails", {x, y, z});
        }

    involutive_ = true;
    for (int x = 0; x < n_ && involutive_; ++x)
      for (int y = 0; y < n_; ++y) {
        auto [u, v] = r(x, y);
        if (r(u, v) != std::make_pair(x, y)) {
          involutive_ = false;
          break;
        }
      }
  }

  int n_;
  std::vector<int> sigma_, tau_;
  std::vector<int> sigma_hat_, tau_hat_;
  bool involutive_ = false;
};

// r_A(a, b) = (gamma(a)(b), inv_o(gamma(a)(b)) o a o b). Validation failure
// here would falsify an established result, so it surfaces as a bug.
inline Solution solution_from_brace(const SkewBrace& A) {
  int n = A.order();
  std::vector<int> sigma(static_cast<size_t>(n) * n), tau(static_cast<size_t>(n) * n);
  const FiniteGroup& mul = A.mul();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int u = A.gamma_apply(a, b);
      sigma[static_cast<size_t>(a) * n + b] = u;
      tau[static_cast<size_t>(b) * n + a] = mul.mul(mul.mul(mul.inv(u), a), b);
    }
  try {
    return Solution::from_flat(n, std::move(sigma), std::move(tau));
  } catch (const error& e) {
    throw internal_error(std::string("solution derived from a valid brace failed: ") +
                         e.what());
  }
}

inline Solution inverse_solution(const Solution& S) {
  int n = S.size();
  std::vector<int> sigma(static_cast<size_t>(n) * n), tau(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      sigma[static_cast<size_t>(x) * n + y] = S.sigma_hat(x, y);
      tau[static_cast<size_t>(x) * n + y] = S.tau_hat(x, y);
    }
  return Solution::from_flat(n, std::move(sigma), std::move(tau));
}

// sigma_{sigma_hat_x(y)} = sigma_y for all x, y: holds exactly when the
// solution comes from a bi-skew brace.
inline bool bi_skew_criterion(const Solution& S) {
  int n = S.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = S.sigma_hat(x, y);
      for (int z = 0; z < n; ++z)
        if (S.sigma(u, z) != S.sigma(y, z)) return false;
    }
  return true;
}

inline bool is_trivial_solution(const Solution& S) {
  int n = S.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (S.sigma(x, y) != y || S.tau(x, y) != y) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Permutation group of a solution

struct PermutationGroupResult {
  FiniteGroup group;
  std::vector<int> generator_index;  // x -> index of (sigma_x, tau_x^{-1})
};

inline PermutationGroupResult permutation_group(const Solution& S,
                                                std::size_t bound = 1000000) {
  int n = S.size();
  auto inverse_perm = [&](std::vector<int> p) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
  };
  using Pair = std::vector<int>;  // concatenated pair of permutations
  auto make_pair_perm = [&](std::vector<int> a, std::vector<int> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  // Pairs are stored as a single permutation of 0..2n-1 preserving the two
  // halves (second components offset by n), so composition is pointwise.
  auto compose_pairs = [&](const Pair& f, const Pair& g) {
    Pair r(2 * n);
    for (int i = 0; i < 2 * n; ++i) r[i] = f[g[i]];
    return r;
  };

  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  Pair identity = make_pair_perm(id, id);
  // second half stores values offset by n for uniqueness
  for (int i = 0; i < n; ++i) identity[n + i] = n + i;

  std::vector<Pair> gens;
  std::vector<int> gen_of_point(n);
  {
    std::map<Pair, int> gen_index;
    for (int x = 0; x < n; ++x) {
      std::vector<int> s = S.sigma_row(x);
      std::vector<int> t = inverse_perm(S.tau_row(x));
      Pair p = make_pair_perm(s, t);
      for (int i = 0; i < n; ++i) p[n + i] += n;
      auto it = gen_index.find(p);
      if (it == gen_index.end()) {
        gen_index[p] = static_cast<int>(gens.size());
        gen_of_point[x] = static_cast<int>(gens.size());
        gens.push_back(p);
      } else {
        gen_of_point[x] = it->second;
      }
    }
  }

  std::vector<Pair> elems{identity};
  std::map<Pair, int> index{{identity, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Pair& g : gens) {
      Pair p = compose_pairs(elems[i], g);
      if (!index.count(p)) {
        if (elems.size() >= bound)
          fail(errc::closure_bound_exceeded, "permutation group closure exceeds bound",
               {static_cast<long long>(bound)});
        index[p] = static_cast<int>(elems.size());
        elems.push_back(std::move(p));
      }
    }
  }
  int k = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      flat[static_cast<size_t>(i) * k + j] = index.at(compose_pairs(elems[i], elems[j]));
  std::vector<int> generator_index(n);
  for (int x = 0; x < n; ++x) generator_index[x] = index.at(gens[gen_of_point[x]]);
  return PermutationGroupResult{FiniteGroup::from_flat_table(k, std::move(flat)),
                                std::move(generator_index)};
}

// ---------------------------------------------------------------------------
// Retract and multipermutation level

struct RetractResult {
  Solution solution;
  std::vector<int> point_class;  // original point -> class index
};

inline RetractResult retract(const Solution& S) {
  int n = S.size();
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> classes;
  std::vector<int> cls(n);
  int k = 0;
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(S.sigma_row(x), S.tau_row(x));
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes[key] = k;
      cls[x] = k;
      ++k;
    } else {
      cls[x] = it->second;
    }
  }
  std::vector<int> qsigma(static_cast<size_t>(k) * k, -1), qtau(static_cast<size_t>(k) * k, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cs = cls[S.sigma(x, y)];
      int ct = cls[S.tau(y, x)];
      int& scell = qsigma[static_cast<size_t>(cls[x]) * k + cls[y]];
      if (scell >= 0 && scell != cs)
        fail(errc::retract_ill_defined, "induced sigma is not well defined", {x, y});
      scell = cs;
      int& tcell = qtau[static_cast<size_t>(cls[y]) * k + cls[x]];
      if (tcell >= 0 && tcell != ct)
        fail(errc::retract_ill_defined, "induced tau is not well defined", {x, y});
      tcell = ct;
    }
  return RetractResult{Solution::from_flat(k, std::move(qsigma), std::move(qtau)),
                       std::move(cls)};
}

// Least k with the k-fold retract a single point, if reached within cap.
inline std::optional<int> multipermutation_level(const Solution& S, int cap) {
  if (S.size() == 1) return 0;
  Solution current = S;
  for (int k = 1; k <= cap; ++k) {
    RetractResult r = retract(current);
    if (r.solution.size() == 1) return k;
    if (r.solution.size() == current.size()) return std::nullopt;  // stalled
    current = std::move(r.solution);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism search and tau orders

inline int permutation_order(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

inline std::vector<int> tau_order_multiset(const Solution& S) {
  std::vector<int> orders;
  for (int y = 0; y < S.size(); ++y) orders.push_back(permutation_order(S.tau_row(y)));
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace detail {

inline std::vector<std::vector<int>> solution_point_invariants(const Solution& S) {
  int n = S.size();
  std::vector<int> class_size;
  std::vector<int> cls(n);
  {
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> classes;
    for (int x = 0; x < n; ++x) {
      auto key = std::make_pair(S.sigma_row(x), S.tau_row(x));
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes[key] = static_cast<int>(class_size.size());
        cls[x] = static_cast<int>(class_size.size());
        class_size.push_back(0);
      } else {
        cls[x] = it->second;
      }
      ++class_size[cls[x]];
    }
  }
  std::vector<std::vector<int>> inv(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> srow = S.sigma_row(x), trow = S.tau_row(x);
    int sfix = 0, tfix = 0;
    for (int i = 0; i < n; ++i) {
      if (srow[i] == i) ++sfix;
      if (trow[i] == i) ++tfix;
    }
    inv[x] = {permutation_order(srow), permutation_order(trow), sfix, tfix,
              class_size[cls[x]]};
  }
  return inv;
}

}  // namespace detail

// Backtracking isomorphism search with constraint propagation, pruned by
// per-point invariants (orders and fixed points of sigma_x and tau_x,
// retract-class sizes).
inline std::optional<std::vector<int>> find_solution_isomorphism(const Solution& S,
                                                                 const Solution& T) {
  int n = S.size();
  if (T.size() != n) return std::nullopt;
  auto inv_s = detail::solution_point_invariants(S);
  auto inv_t = detail::solution_point_invariants(T);
  {
    auto a = inv_s;
    auto b = inv_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);

  // Assign f[x] = y and propagate all consequences; records assignments in
  // trail for undo. Returns false on contradiction.
  auto assign_and_propagate = [&](int x0, int y0, std::vector<int>& trail) -> bool {
    std::vector<int> queue;
    auto set = [&](int x, int y) -> bool {
      if (f[x] >= 0) return f[x] == y;
      if (used[y] || inv_s[x] != inv_t[y]) return false;
      f[x] = y;
      used[y] = 1;
      trail.push_back(x);
      queue.push_back(x);
      return true;
    };
    if (!set(x0, y0)) return false;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int z = 0; z < n; ++z) {
        if (f[z] < 0) continue;
        // pairs (x, z) and (z, x): images of sigma and tau values are forced
        int pairs[2][2] = {{x, z}, {z, x}};
        for (auto& p : pairs) {
          int a = p[0], b = p[1];
          int ss = S.sigma(a, b), tt = S.tau(b, a);
          int si = T.sigma(f[a], f[b]), ti = T.tau(f[b], f[a]);
          if (!set(ss, si)) return false;
          if (!set(tt, ti)) return false;
        }
      }
    }
    return true;
  };

  auto undo = [&](std::vector<int>& trail, size_t from) {
    while (trail.size() > from) {
      int x = trail.back();
      trail.pop_back();
      used[f[x]] = 0;
      f[x] = -1;
    }
  };

  std::vector<int> trail;
  auto rec = [&](auto&& self) -> bool {
    // Most-constrained point first; ties broken toward points with the
    // largest invariant vector, so that points with nontrivial sigma and tau
    // maps are assigned early and their functional constraints start binding.
    int best = -1, best_count = n + 1;
    for (int x = 0; x < n; ++x) {
      if (f[x] >= 0) continue;
      int count = 0;
      for (int y = 0; y < n; ++y)
        if (!used[y] && inv_s[x] == inv_t[y]) ++count;
      if (count < best_count || (count == best_count && best >= 0 && inv_s[x] > inv_s[best])) {
        best_count = count;
        best = x;
      }
    }
    if (best < 0) return true;  // complete
    for (int y = 0; y < n; ++y) {
      if (used[y] || inv_s[best] != inv_t[y]) continue;
      size_t mark = trail.size();
      if (assign_and_propagate(best, y, trail)) {
        if (self(self)) return true;
      }
      undo(trail, mark);
    }
    return false;
  };

  if (!rec(rec)) return std::nullopt;
  // Full verification pass.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (f[S.sigma(x, y)] != T.sigma(f[x], f[y])) return std::nullopt;
      if (f[S.tau(y, x)] != T.tau(f[y], f[x])) return std::nullopt;
    }
  return f;
}

}  // namespace skewbrace
