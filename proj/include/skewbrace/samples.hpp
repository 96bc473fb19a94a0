#pragma once

// Formula-defined operations on Z and Z^2, verified exhaustively on bounded
// windows. The three Z variants are the possible additive operations of a
// skew brace whose multiplicative group is infinite cyclic; the Z^2 family
// is (r,s) ox (r',s') = (r+r', s+s'+x r r').

#include <string>
#include <vector>

#include "skewbrace/errors.hpp"

namespace skewbrace {

enum class ZVariant { z_trivial, z_mult2, z_mult3 };

inline const char* z_variant_name(ZVariant v) {
  switch (v) {
    case ZVariant::z_trivial: return "trivial";
    case ZVariant::z_mult2: return "mult2";
    case ZVariant::z_mult3: return "mult3";
  }
  return "?";
}

inline long long z_sign(long long i) { return (i % 2 == 0) ? 1 : -1; }

inline long long z_op(ZVariant v, long long i, long long j) {
  switch (v) {
    case ZVariant::z_trivial: return i + j;
    case ZVariant::z_mult2: return i + z_sign(i) * j;
    case ZVariant::z_mult3: return j + z_sign(j) * i;
  }
  return 0;
}

inline long long z_inv(ZVariant v, long long i) {
  switch (v) {
    case ZVariant::z_trivial: return -i;
    case ZVariant::z_mult2: return i % 2 == 0 ? -i : i;
    case ZVariant::z_mult3: return i % 2 == 0 ? -i : i;
  }
  return 0;
}

struct Z2 {
  long long r = 0, s = 0;
  bool operator==(const Z2& o) const { return r == o.r && s == o.s; }
  bool operator!=(const Z2& o) const { return !(*this == o); }
};

inline Z2 z2_op(long long x, Z2 p, Z2 q) { return {p.r + q.r, p.s + q.s + x * p.r * q.r}; }
inline Z2 z2_add(Z2 p, Z2 q) { return {p.r + q.r, p.s + q.s}; }
inline Z2 z2_neg(Z2 p) { return {-p.r, -p.s}; }
inline Z2 z2_star(long long x, Z2 p, Z2 q) { return {0, x * p.r * q.r}; }

// gamma of the Z^2 brace (+, ox): gamma(p)(q) = -p + (p ox q).
inline Z2 z2_gamma(long long x, Z2 p, Z2 q) { return {q.r, q.s + x * p.r * q.r}; }

// gamma exponent of the Z brace (+, o_mult2): gamma(i)(j) = (-1)^i j.
inline long long z_gamma_mult2(long long i, long long j) {
  return z_op(ZVariant::z_mult2, i, j) - i;
}

enum class WindowProperty {
  group_axioms,
  brace_equation,
  bi_skew_antihom,
  gamma_hom,
  dihedral_relations,
  star_formula,
  right_class_le_2,
};

inline const char* window_property_name(WindowProperty p) {
  switch (p) {
    case WindowProperty::group_axioms: return "group_axioms";
    case WindowProperty::brace_equation: return "brace_equation";
    case WindowProperty::bi_skew_antihom: return "bi_skew_antihom";
    case WindowProperty::gamma_hom: return "gamma_hom";
    case WindowProperty::dihedral_relations: return "dihedral_relations";
    case WindowProperty::star_formula: return "star_formula";
    case WindowProperty::right_class_le_2: return "right_class_le_2";
  }
  return "?";
}

struct WindowCheck {
  WindowProperty prop;
  bool pass = false;
  std::vector<long long> witness;  // first failing tuple, flattened
};

struct WindowReport {
  long long bound = 0;
  std::vector<WindowCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The brace under test for a Z variant is (Z, ., o) with . the variant
// formula (the additive group) and o plain integer addition (the
// multiplicative group).
inline WindowReport window_verify_z(ZVariant v, long long B,
                                    const std::vector<WindowProperty>& props) {
  if (B < 1) fail(errc::bad_entry, "window bound must be at least 1", {B});
  WindowReport report;
  report.bound = B;
  for (WindowProperty p : props) {
    WindowCheck check;
    check.prop = p;
    check.pass = true;
    auto fail_at = [&](std::initializer_list<long long> w) {
      if (check.pass) {
        check.pass = false;
        check.witness = w;
      }
    };
    switch (p) {
      case WindowProperty::group_axioms:
        for (long long i = -B; i <= B && check.pass; ++i) {
          if (z_op(v, i, 0) != i || z_op(v, 0, i) != i) fail_at({i});
          if (z_op(v, i, z_inv(v, i)) != 0 || z_op(v, z_inv(v, i), i) != 0) fail_at({i});
        }
        for (long long i = -B; i <= B && check.pass; ++i)
          for (long long j = -B; j <= B && check.pass; ++j)
            for (long long k = -B; k <= B; ++k)
              if (z_op(v, z_op(v, i, j), k) != z_op(v, i, z_op(v, j, k))) {
                fail_at({i, j, k});
                break;
              }
        break;
      case WindowProperty::brace_equation:
        // a o (b . c) = (a o b) . inv(a) . (a o c), o = +, . = variant.
        for (long long a = -B; a <= B && check.pass; ++a)
          for (long long b = -B; b <= B && check.pass; ++b)
            for (long long c = -B; c <= B; ++c) {
              long long lhs = a + z_op(v, b, c);
              long long rhs = z_op(v, z_op(v, a + b, z_inv(v, a)), a + c);
              if (lhs != rhs) {
                fail_at({a, b, c});
                break;
              }
            }
        break;
      case WindowProperty::bi_skew_antihom:
        // gamma(a . b) = gamma(b)gamma(a) for gamma(a)(c) = inv(a).(a o c).
        for (long long a = -B; a <= B && check.pass; ++a)
          for (long long b = -B; b <= B && check.pass; ++b)
            for (long long c = -B; c <= B; ++c) {
              auto g = [&](long long x, long long y) {
                return z_op(v, z_inv(v, x), x + y);
              };
              if (g(z_op(v, a, b), c) != g(b, g(a, c))) {
                fail_at({a, b, c});
                break;
              }
            }
        break;
      case WindowProperty::gamma_hom:
        for (long long a = -B; a <= B && check.pass; ++a)
          for (long long b = -B; b <= B && check.pass; ++b)
            for (long long c = -B; c <= B; ++c) {
              auto g = [&](long long x, long long y) {
                return z_op(v, z_inv(v, x), x + y);
              };
              if (g(z_op(v, a, b), c) != g(a, g(b, c))) {
                fail_at({a, b, c});
                break;
              }
            }
        break;
      case WindowProperty::dihedral_relations:
        if (z_op(ZVariant::z_mult2, 1, 1) != 0) fail_at({1, 1});
        for (long long k = -B; k <= B && check.pass; ++k) {
          long long t = z_op(ZVariant::z_mult2, 2 * k, 1);
          if (z_op(ZVariant::z_mult2, 1, t) != -2 * k) fail_at({k});
        }
        break;
      case WindowProperty::star_formula:
      case WindowProperty::right_class_le_2:
        fail(errc::bad_entry, "property applies to the Z^2 family only");
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

inline WindowReport window_verify_z2(long long x, long long B,
                                     const std::vector<WindowProperty>& props) {
  if (B < 1) fail(errc::bad_entry, "window bound must be at least 1", {B});
  WindowReport report;
  report.bound = B;

  // Iterate a callback over all Z^2 points of the window.
  auto each = [&](auto&& fn) {
    for (long long r = -B; r <= B; ++r)
      for (long long s = -B; s <= B; ++s)
        if (!fn(Z2{r, s})) return false;
    return true;
  };

  for (WindowProperty p : props) {
    WindowCheck check;
    check.prop = p;
    check.pass = true;
    auto fail_at = [&](std::initializer_list<Z2> pts) {
      check.pass = false;
      check.witness.clear();
      for (const Z2& q : pts) {
        check.witness.push_back(q.r);
        check.witness.push_back(q.s);
      }
    };
    switch (p) {
      case WindowProperty::group_axioms:
        check.pass = each([&](Z2 a) {
          Z2 zero{0, 0};
          if (z2_op(x, a, zero) != a || z2_op(x, zero, a) != a) {
            fail_at({a});
            return false;
          }
          Z2 inv{-a.r, -a.s + x * a.r * a.r};
          if (z2_op(x, a, inv) != zero || z2_op(x, inv, a) != zero) {
            fail_at({a});
            return false;
          }
          return each([&](Z2 b) {
            return each([&](Z2 c) {
              if (z2_op(x, z2_op(x, a, b), c) != z2_op(x, a, z2_op(x, b, c))) {
                fail_at({a, b, c});
                return false;
              }
              return true;
            });
          });
        });
        break;
      case WindowProperty::brace_equation:
        // (Z^2, +, ox): a ox (b + c) = (a ox b) + (-a) + (a ox c).
        check.pass = each([&](Z2 a) {
          return each([&](Z2 b) {
            return each([&](Z2 c) {
              Z2 lhs = z2_op(x, a, z2_add(b, c));
              Z2 rhs = z2_add(z2_add(z2_op(x, a, b), z2_neg(a)), z2_op(x, a, c));
              if (lhs != rhs) {
                fail_at({a, b, c});
                return false;
              }
              return true;
            });
          });
        });
        break;
      case WindowProperty::bi_skew_antihom:
        check.pass = each([&](Z2 a) {
          return each([&](Z2 b) {
            return each([&](Z2 c) {
              if (z2_gamma(x, z2_add(a, b), c) != z2_gamma(x, b, z2_gamma(x, a, c))) {
                fail_at({a, b, c});
                return false;
              }
              return true;
            });
          });
        });
        break;
      case WindowProperty::gamma_hom:
        check.pass = each([&](Z2 a) {
          return each([&](Z2 b) {
            return each([&](Z2 c) {
              if (z2_gamma(x, z2_add(a, b), c) != z2_gamma(x, a, z2_gamma(x, b, c))) {
                fail_at({a, b, c});
                return false;
              }
              return true;
            });
          });
        });
        break;
      case WindowProperty::star_formula:
        // star(p, q) = gamma(p)(q) + (-q) must equal (0, x r r').
        check.pass = each([&](Z2 p) {
          return each([&](Z2 q) {
            Z2 st = z2_add(z2_gamma(x, p, q), z2_neg(q));
            if (st != z2_star(x, p, q)) {
              fail_at({p, q});
              return false;
            }
            return true;
          });
        });
        break;
      case WindowProperty::right_class_le_2:
        check.pass = each([&](Z2 p) {
          return each([&](Z2 q) {
            return each([&](Z2 u) {
              if (z2_star(x, z2_star(x, p, q), u) != Z2{0, 0}) {
                fail_at({p, q, u});
                return false;
              }
              return true;
            });
          });
        });
        break;
      case WindowProperty::dihedral_relations:
        fail(errc::bad_entry, "property applies to the Z family only");
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace skewbrace
