#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skewbrace {

// Validation failure codes. Each error carries a small witness vector
// (an element, pair, or triple) identifying the first violation found.
enum class errc {
  bad_entry,
  no_identity_at_zero,
  not_associative,
  no_inverse,
  not_subgroup,
  not_normal,
  order_bound_exceeded,

  add_invalid,
  mul_invalid,
  brace_equation_fails,
  not_bi_skew,
  not_gamma_homomorphic,
  not_an_ideal,

  not_automorphism,
  gamma_law_fails,
  action_not_brace_automorphism,
  action_not_homomorphism,

  m_not_abelian,
  not_into_m,
  not_m_invariant,
  not_homomorphism,
  hb_not_abelian,
  not_endomorphism,
  compatibility_fails,
  pair_not_bi_skew,
  condition_fails,

  not_bijective_pair_map,
  degenerate_sigma,
  degenerate_tau,
  braid_fails,
  retract_ill_defined,
  closure_bound_exceeded,

  parse_error,
  window_failure,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_entry: return "BadEntry";
    case errc::no_identity_at_zero: return "NoIdentityAtZero";
    case errc::not_associative: return "NotAssociative";
    case errc::no_inverse: return "NoInverse";
    case errc::not_subgroup: return "NotSubgroup";
    case errc::not_normal: return "NotNormal";
    case errc::order_bound_exceeded: return "OrderBoundExceeded";
    case errc::add_invalid: return "AddInvalid";
    case errc::mul_invalid: return "MulInvalid";
    case errc::brace_equation_fails: return "BraceEquationFails";
    case errc::not_bi_skew: return "NotBiSkew";
    case errc::not_gamma_homomorphic: return "NotGammaHomomorphic";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::gamma_law_fails: return "GammaLawFails";
    case errc::action_not_brace_automorphism: return "ActionNotBraceAutomorphism";
    case errc::action_not_homomorphism: return "ActionNotHomomorphism";
    case errc::m_not_abelian: return "MNotAbelian";
    case errc::not_into_m: return "NotIntoM";
    case errc::not_m_invariant: return "NotMInvariant";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::hb_not_abelian: return "HBNotAbelian";
    case errc::not_endomorphism: return "NotEndomorphism";
    case errc::compatibility_fails: return "CompatibilityFails";
    case errc::pair_not_bi_skew: return "PairNotBiSkew";
    case errc::condition_fails: return "ConditionFails";
    case errc::not_bijective_pair_map: return "NotBijectivePairMap";
    case errc::degenerate_sigma: return "DegenerateSigma";
    case errc::degenerate_tau: return "DegenerateTau";
    case errc::braid_fails: return "BraidFails";
    case errc::retract_ill_defined: return "RetractIllDefined";
    case errc::closure_bound_exceeded: return "ClosureBoundExceeded";
    case errc::parse_error: return "ParseError";
    case errc::window_failure: return "WindowFailure";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message, std::vector<long long> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  errc code() const { return code_; }
  const std::vector<long long>& witness() const { return witness_; }

 private:
  errc code_;
  std::vector<long long> witness_;
};

// A proved equivalence failed to hold at runtime. This is a bug in the
// implementation, never a property of the input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& message)
      : std::logic_error("internal consistency violation: " + message) {}
};

namespace detail {
inline std::string witness_str(const std::vector<long long>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}
}  // namespace detail

[[noreturn]] inline void fail(errc code, const std::string& message,
                              std::vector<long long> witness = {}) {
  std::string msg = message;
  if (!witness.empty()) msg += " at " + detail::witness_str(witness);
  throw error(code, msg, std::move(witness));
}

}  // namespace skewbrace
