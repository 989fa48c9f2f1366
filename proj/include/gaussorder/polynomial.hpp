#pragma once

// Dense univariate polynomials over a prime field F_p (p < 2^32). Used for
// inversion modulo the cyclotomic modulus and for the irreducibility test;
// day-to-day field multiplication lives in field.hpp.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gaussorder/arith.hpp"

namespace gaussorder::poly {

using Coeff = std::uint64_t;

/// Lowest-degree-first coefficients; the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<Coeff> coeffs, Coeff p) : c_(std::move(coeffs)), p_(p) {
    for (auto& v : c_) v %= p_;
    trim();
  }

  static Poly monomial(std::size_t degree, Coeff coeff, Coeff p) {
    std::vector<Coeff> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(std::move(c), p);
  }

  [[nodiscard]] Coeff modulus() const noexcept { return p_; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  [[nodiscard]] Coeff operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  [[nodiscard]] Coeff leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Coeff> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % a.p_;
    return Poly(std::move(out), a.p_);
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Coeff> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + a.p_ - b[i]) % a.p_;
    return Poly(std::move(out), a.p_);
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly({}, a.p_);
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] = (out[i + j] + a.c_[i] * b.c_[j] % a.p_) % a.p_;
      }
    }
    return Poly(std::move(out), a.p_);
  }

  [[nodiscard]] Poly scaled(Coeff k) const {
    std::vector<Coeff> out = c_;
    for (auto& v : out) v = v * (k % p_) % p_;
    return Poly(std::move(out), p_);
  }

  /// Quotient and remainder; divisor must be non-zero.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < divisor.degree()) return {Poly({}, p_), *this};
    std::vector<Coeff> rem = c_;
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    std::vector<Coeff> quot(rem.size() - dd, 0);
    const Coeff lead_inv = detail::pow_mod64(divisor.leading(), p_ - 2, p_);
    for (std::size_t k = rem.size(); k-- > dd;) {
      const Coeff factor = rem[k] * lead_inv % p_;
      if (factor == 0) continue;
      quot[k - dd] = factor;
      for (std::size_t i = 0; i <= dd; ++i) {
        const Coeff sub = factor * divisor.c_[i] % p_;
        rem[k - dd + i] = (rem[k - dd + i] + p_ - sub) % p_;
      }
    }
    return {Poly(std::move(quot), p_), Poly(std::move(rem), p_)};
  }

  [[nodiscard]] Poly mod(const Poly& m) const { return divmod(m).second; }

  [[nodiscard]] Poly monic() const {
    if (is_zero()) return *this;
    return scaled(detail::pow_mod64(leading(), p_ - 2, p_));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
  Coeff p_ = 2;
};

/// Monic greatest common divisor.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^exp mod m by square-and-multiply.
inline Poly pow_mod(const Poly& base, Natural exp, const Poly& m) {
  Poly result = Poly({1}, base.modulus()).mod(m);
  Poly b = base.mod(m);
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0)) result = (result * b).mod(m);
    exp >>= 1;
    if (exp > 0) b = (b * b).mod(m);
  }
  return result;
}

/// Inverse of a modulo m via the extended Euclidean algorithm. Throws
/// DivisionByZero when gcd(a, m) is not a unit.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  const Coeff p = m.modulus();
  Poly r0 = m, r1 = a.mod(m);
  Poly s0({}, p), s1({1}, p);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::DivisionByZero, "element is not invertible");
  return s0.scaled(detail::pow_mod64(r0.leading(), p - 2, p)).mod(m);
}

/// Ben-Or test: f of degree n is irreducible iff gcd(x^{p^i} - x, f) = 1 for
/// every 1 <= i <= n/2.
inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const Coeff p = f.modulus();
  const Poly x = Poly::monomial(1, 1, p);
  Poly power = x.mod(f);
  for (long i = 1; i <= f.degree() / 2; ++i) {
    power = pow_mod(power, Natural(p), f);
    if (gcd(power - x, f).degree() > 0) return false;
  }
  return true;
}

}  // namespace gaussorder::poly
