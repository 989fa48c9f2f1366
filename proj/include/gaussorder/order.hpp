#pragma once

// Exact multiplicative orders in F_p(theta)^*, feasible while p^{r-1} - 1 can
// be factored (bit_guard), and the coprime-order decomposition of z.

#include <cstdint>
#include <map>
#include <string>

#include "gaussorder/bounds.hpp"
#include "gaussorder/field.hpp"

namespace gaussorder {

namespace detail {

/// Phi_d(p) for every d dividing n, via p^d - 1 = prod_{k | d} Phi_k(p).
inline std::map<std::uint64_t, Natural> cyclotomic_values(std::uint64_t p, std::uint64_t n) {
  std::map<std::uint64_t, Natural> values;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Natural v = boost::multiprecision::pow(Natural(p), static_cast<unsigned>(d)) - 1;
    for (const auto& [k, phi] : values) {
      if (d % k == 0) v /= phi;
    }
    values.emplace(d, std::move(v));
  }
  return values;
}

}  // namespace detail

/// Factors p^n - 1 piecewise through its cyclotomic factors Phi_d(p), d | n,
/// which are much smaller than the whole.
inline Factorization factor_p_power_minus_one(std::uint64_t p, std::uint64_t n, unsigned bit_guard) {
  const Natural whole = boost::multiprecision::pow(Natural(p), static_cast<unsigned>(n)) - 1;
  if (bit_length(whole) > bit_guard) {
    throw Error(ErrorCode::GuardExceeded, std::to_string(p) + "^" + std::to_string(n) + " - 1 has " +
                                              std::to_string(bit_length(whole)) + " bits, guard is " +
                                              std::to_string(bit_guard));
  }
  Factorization out;
  for (const auto& [d, phi] : detail::cyclotomic_values(p, n)) out.merge(factorize(phi, bit_guard));
  return out;
}

/// The multiplicative group of a field with its order already factored, so
/// many element orders can share one factorization.
class MultiplicativeGroup {
 public:
  MultiplicativeGroup(const FieldParams& params, unsigned bit_guard = kDefaultGuardBits)
      : params_(params),
        order_(params.group_order()),
        factors_(factor_p_power_minus_one(params.p(), params.degree(), bit_guard)) {}

  [[nodiscard]] const FieldParams& params() const noexcept { return params_; }
  [[nodiscard]] const Natural& order() const noexcept { return order_; }
  [[nodiscard]] const Factorization& factors() const noexcept { return factors_; }

  [[nodiscard]] Natural element_order(const FieldElement& x) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
    return order_by_stripping(
        order_, factors_, [&](const Natural& k) { return x.pow(k); },
        [](const FieldElement& y) { return y.is_one(); });
  }

 private:
  FieldParams params_;
  Natural order_;
  Factorization factors_;
};

struct OrderResult {
  Natural order;
  Natural group_order;
  Factorization factorization_of_group_order;
};

inline OrderResult element_order(const FieldParams& params, const FieldElement& x,
                                 unsigned bit_guard = kDefaultGuardBits) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
  const MultiplicativeGroup group(params, bit_guard);
  return {group.element_order(x), group.order(), group.factors()};
}

/// Order of <g1, g2>. The group is cyclic, so this is lcm of the two orders.
inline Natural subgroup_order_pair(const FieldParams& params, const FieldElement& g1, const FieldElement& g2,
                                   unsigned bit_guard = kDefaultGuardBits) {
  const MultiplicativeGroup group(params, bit_guard);
  return lcm(group.element_order(g1), group.element_order(g2));
}

struct VW {
  FieldElement v;
  FieldElement w;
};

/// With x = theta^e (theta + a):
///   v = x^{p^s - 1} = theta^{-(2e+1)} (a theta + 1) (theta + a)^{-1}
///   w = x^{p^s + 1} = theta^{-1} (a theta + 1) (theta + a)
/// Both come from theta^{p^s} = theta^{-1}.
inline VW decompose_vw(const FieldParams& params, std::int64_t e, std::int64_t a) {
  const Residue ar = params.reduce(a);
  if (ar == 0) throw Error(ErrorCode::ZeroConstant, "a must be non-zero in F_p");
  const FieldElement theta = FieldElement::theta(params);
  const FieldElement ca = FieldElement::constant(params, ar);
  const FieldElement numer = ca * theta + FieldElement::one(params);
  const FieldElement shifted = theta + ca;
  const auto r = static_cast<std::int64_t>(params.r());
  const std::int64_t e_mod = static_cast<std::int64_t>(params.exponent(e));
  FieldElement v = FieldElement::monomial(params, -(2 * e_mod + 1) % r) * numer * shifted.inverse();
  FieldElement w = FieldElement::monomial(params, -1) * numer * shifted;
  return {std::move(v), std::move(w)};
}

/// Cross-checks decompose_vw against the defining powers. Pure
/// exponentiation: no factoring, so it runs at any field size.
inline bool vw_matches_powers(const FieldParams& params, std::int64_t e, std::int64_t a) {
  const VW closed = decompose_vw(params, e, a);
  const FieldElement x = build_element(params, e, 1, a);
  const Natural ps = params.p_to_s();
  return x.pow(ps - 1) == closed.v && x.pow(ps + 1) == closed.w;
}

struct ZDecompositionReport {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  Residue a = 0;
  ZBranch branch = ZBranch::SquaredPeriod;
  /// rho2 of the selected side equals 2.
  bool branch_condition = false;
  Natural order_z;
  Natural order_first;
  Natural order_second;
  Natural bound;

  [[nodiscard]] bool product_holds() const { return order_z == order_first * order_second; }
  [[nodiscard]] bool coprime() const { return gcd(order_first, order_second) == 1; }
  [[nodiscard]] bool bound_holds() const { return order_z >= bound; }
  [[nodiscard]] bool ok() const { return branch_condition && product_holds() && coprime() && bound_holds(); }
};

inline ZDecompositionReport verify_z_decomposition(const MultiplicativeGroup& group, std::int64_t a) {
  const FieldParams& params = group.params();
  const ZParts parts = z_parts(params, a);
  ZDecompositionReport rep;
  rep.p = params.p();
  rep.r = params.r();
  rep.a = params.reduce(a);
  rep.branch = parts.branch;
  const Natural ps = params.p_to_s();
  rep.branch_condition = parts.branch == ZBranch::SquaredPeriod ? rho2(ps - 1) == 2 : rho2(ps + 1) == 2;
  rep.order_z = group.element_order(parts.z);
  rep.order_first = group.element_order(parts.first);
  rep.order_second = group.element_order(parts.second);
  rep.bound = bound_cor3(params);
  return rep;
}

inline ZDecompositionReport verify_z_decomposition(const FieldParams& params, std::int64_t a,
                                                   unsigned bit_guard = kDefaultGuardBits) {
  // Reject bad constants before paying for the group factorization.
  (void)z_parts(params, a);
  return verify_z_decomposition(MultiplicativeGroup(params, bit_guard), a);
}

}  // namespace gaussorder
