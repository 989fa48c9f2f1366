#pragma once

// Arithmetic in F_p(theta) = F_p[x] / Phi_r(x), where Phi_r is the r-th
// cyclotomic polynomial x^{r-1} + ... + x + 1 and p is a primitive root mod r.
//
// Elements are stored as r-1 coefficients. Products are formed in
// F_p[x]/(x^r - 1), where theta^r = 1 turns multiplication into a cyclic
// convolution, and then folded back: since x^{r-1} = -(1 + x + ... + x^{r-2})
// modulo Phi_r, the coefficient at position r-1 is subtracted from all others.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaussorder/arith.hpp"
#include "gaussorder/polynomial.hpp"

namespace gaussorder {

using Residue = std::uint64_t;

class FieldParams {
 public:
  static constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;
  static constexpr std::uint64_t kMaxR = std::uint64_t{1} << 20;

  /// Validates p prime, r odd prime, p != r and p primitive mod r.
  static FieldParams make(const Natural& p, const Natural& r) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p = " + p.str() + " is not prime");
    if (!is_prime(r) || r < 3) throw Error(ErrorCode::NotPrime, "r = " + r.str() + " is not an odd prime");
    if (p == r) throw Error(ErrorCode::NotCoprime, "p and r must be coprime (p = r = " + p.str() + ")");
    if (p >= kMaxCharacteristic) throw Error(ErrorCode::OutOfRange, "p must be below 2^32");
    if (r > kMaxR) throw Error(ErrorCode::OutOfRange, "r must be at most 2^20");
    if (!is_primitive_root(p, r)) {
      throw Error(ErrorCode::NotPrimitiveRoot, p.str() + " is not a primitive root modulo " + r.str());
    }
    return FieldParams(p.convert_to<std::uint64_t>(), r.convert_to<std::uint64_t>());
  }

  /// Skips every arithmetic check; only for probing non-fields such as
  /// F_2[x]/Phi_7 in tests.
  static FieldParams unchecked(std::uint64_t p, std::uint64_t r) { return FieldParams(p, r); }

  [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
  [[nodiscard]] std::uint64_t r() const noexcept { return r_; }
  [[nodiscard]] std::uint64_t s() const noexcept { return (r_ - 1) / 2; }
  [[nodiscard]] std::size_t degree() const noexcept { return static_cast<std::size_t>(r_ - 1); }

  /// p^{r-1} - 1, the order of the multiplicative group.
  [[nodiscard]] Natural group_order() const {
    return boost::multiprecision::pow(Natural(p_), static_cast<unsigned>(r_ - 1)) - 1;
  }

  /// p^s as a Natural.
  [[nodiscard]] Natural p_to_s() const { return boost::multiprecision::pow(Natural(p_), static_cast<unsigned>(s())); }

  /// The modulus Phi_r as a polynomial over F_p.
  [[nodiscard]] poly::Poly cyclotomic() const { return poly::Poly(std::vector<poly::Coeff>(r_, 1), p_); }

  [[nodiscard]] Residue reduce(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<Residue>(((a % m) + m) % m);
  }

  /// Exponent of theta normalized into [0, r).
  [[nodiscard]] std::uint64_t exponent(std::int64_t e) const {
    const auto m = static_cast<std::int64_t>(r_);
    return static_cast<std::uint64_t>(((e % m) + m) % m);
  }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;

 private:
  FieldParams(std::uint64_t p, std::uint64_t r) : p_(p), r_(r) {}

  std::uint64_t p_;
  std::uint64_t r_;
};

inline FieldParams make_params(const Natural& p, const Natural& r) { return FieldParams::make(p, r); }

class FieldElement {
 public:
  /// The zero element.
  explicit FieldElement(const FieldParams& params) : params_(params), c_(params.degree(), 0) {}

  /// Coefficients c_0..c_{r-2}; shorter input is zero-padded, longer is an error.
  FieldElement(const FieldParams& params, std::vector<Residue> coeffs) : params_(params), c_(std::move(coeffs)) {
    if (c_.size() > params.degree()) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
    c_.resize(params.degree(), 0);
    for (auto& v : c_) v %= params.p();
  }

  static FieldElement zero(const FieldParams& params) { return FieldElement(params); }

  static FieldElement constant(const FieldParams& params, Residue c) {
    FieldElement out(params);
    out.c_[0] = c % params.p();
    return out;
  }

  static FieldElement one(const FieldParams& params) { return constant(params, 1); }

  /// theta^e for any integer e (theta has order r).
  static FieldElement monomial(const FieldParams& params, std::int64_t e) {
    std::vector<Residue> lifted(params.r(), 0);
    lifted[params.exponent(e)] = 1;
    return from_lifted(params, std::move(lifted));
  }

  static FieldElement theta(const FieldParams& params) { return monomial(params, 1); }

  /// Reduces a length-r coefficient vector of F_p[x]/(x^r - 1) modulo Phi_r.
  static FieldElement from_lifted(const FieldParams& params, std::vector<Residue> lifted) {
    const Residue p = params.p();
    const Residue top = lifted.back() % p;
    lifted.pop_back();
    if (top != 0) {
      for (auto& v : lifted) v = (v % p + p - top) % p;
    } else {
      for (auto& v : lifted) v %= p;
    }
    FieldElement out(params);
    out.c_ = std::move(lifted);
    return out;
  }

  [[nodiscard]] const FieldParams& params() const noexcept { return params_; }
  [[nodiscard]] const std::vector<Residue>& coeffs() const noexcept { return c_; }

  [[nodiscard]] bool is_zero() const noexcept {
    for (auto v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_one() const noexcept {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.require_same(b);
    FieldElement out(a.params_);
    const Residue p = a.params_.p();
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a.c_[i] + b.c_[i]) % p;
    return out;
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.require_same(b);
    FieldElement out(a.params_);
    const Residue p = a.params_.p();
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a.c_[i] + p - b.c_[i]) % p;
    return out;
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.require_same(b);
    const FieldParams& fp = a.params_;
    // Products stay below 2^64 and r of them still fit when this holds.
    const unsigned pbits = bit_length(Natural(fp.p() - 1));
    const unsigned rbits = bit_length(Natural(fp.r()));
    if (2 * pbits + rbits <= 63) return from_lifted(fp, a.convolve<std::uint64_t>(b));
    return from_lifted(fp, a.convolve<unsigned __int128>(b));
  }

  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

  /// Multiplicative inverse via extended Euclid against Phi_r.
  [[nodiscard]] FieldElement inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const poly::Poly inv = poly::inverse_mod(poly::Poly(c_, params_.p()), params_.cyclotomic());
    return FieldElement(params_, inv.coeffs());
  }

  /// Square-and-multiply over the bits of k.
  [[nodiscard]] FieldElement pow(const Natural& k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElement result = one(params_);
    if (k.is_zero()) return result;
    const unsigned bits = bit_length(k);
    for (unsigned i = bits; i-- > 0;) {
      result = result * result;
      if (boost::multiprecision::bit_test(k, i)) result = result * *this;
    }
    return result;
  }

  /// x^{p^k}: coefficients are fixed by Frobenius and theta^i maps to
  /// theta^{i p^k mod r}.
  [[nodiscard]] FieldElement frobenius(std::uint64_t k) const {
    const std::uint64_t r = params_.r();
    const std::uint64_t step = detail::pow_mod64(params_.p() % r, k, r);
    std::vector<Residue> lifted(r, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) lifted[(i * step) % r] = c_[i];
    }
    return from_lifted(params_, std::move(lifted));
  }

 private:
  void require_same(const FieldElement& other) const {
    if (!(params_ == other.params_)) throw Error(ErrorCode::InvalidArgument, "elements from different fields");
  }

  template <class Acc>
  std::vector<Residue> convolve(const FieldElement& b) const {
    const std::size_t r = static_cast<std::size_t>(params_.r());
    const Residue p = params_.p();
    std::vector<Acc> acc(r, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Residue ai = c_[i];
      if (ai == 0) continue;
      // Indices i + j with j < r - 1 wrap at most once.
      std::size_t k = i;
      for (std::size_t j = 0; j < b.c_.size(); ++j, ++k) {
        if (k == r) k = 0;
        acc[k] += static_cast<Acc>(ai) * b.c_[j];
      }
    }
    std::vector<Residue> out(r);
    for (std::size_t k = 0; k < r; ++k) out[k] = static_cast<Residue>(acc[k] % p);
    return out;
  }

  FieldParams params_;
  std::vector<Residue> c_;
};

inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inverse(); }
inline FieldElement pow(const FieldElement& a, const Natural& k) { return a.pow(k); }

inline FieldElement frobenius(const FieldParams& params, const FieldElement& x, std::uint64_t k) {
  if (!(x.params() == params)) throw Error(ErrorCode::InvalidArgument, "element from a different field");
  return x.frobenius(k);
}

/// theta^e (theta^f + a).
inline FieldElement build_element(const FieldParams& params, std::int64_t e, std::int64_t f, std::int64_t a) {
  const Residue ar = params.reduce(a);
  if (ar == 0) throw Error(ErrorCode::ZeroConstant, "a must be non-zero in F_p");
  if (params.exponent(f) == 0) throw Error(ErrorCode::FNotCoprime, "f must be coprime with r");
  std::vector<Residue> lifted(params.r(), 0);
  lifted[params.exponent(e + params.exponent(f))] += 1;
  lifted[params.exponent(e)] += ar;
  return FieldElement::from_lifted(params, std::move(lifted));
}

/// theta + theta^{-1}.
inline FieldElement gauss_period(const FieldParams& params) {
  std::vector<Residue> lifted(params.r(), 0);
  lifted[1] = 1;
  lifted[params.r() - 1] = 1;
  return FieldElement::from_lifted(params, std::move(lifted));
}

/// (a theta + 1)(theta + a)^{-1}.
inline FieldElement mobius_factor(const FieldParams& params, Residue a) {
  const FieldElement theta = FieldElement::theta(params);
  const FieldElement ca = FieldElement::constant(params, a);
  return (ca * theta + FieldElement::one(params)) * (theta + ca).inverse();
}

enum class ZBranch {
  /// rho2(p^s - 1) = 2: z = (theta + theta^{-1})^2 * m.
  SquaredPeriod,
  /// rho2(p^s + 1) = 2: z = (theta + theta^{-1}) * m^2.
  SquaredMobius,
};

inline std::string_view to_string(ZBranch b) {
  return b == ZBranch::SquaredPeriod ? "period^2*mobius" : "period*mobius^2";
}

/// z together with its two coprime-order factors, z = first * second.
struct ZParts {
  ZBranch branch;
  FieldElement first;
  FieldElement second;
  FieldElement z;
};

/// The branch of z is picked from p^s - 1 and p^s + 1; exactly one of them
/// is 2 mod 4 when p is odd.
inline ZParts z_parts(const FieldParams& params, std::int64_t a) {
  const Residue ar = params.reduce(a);
  if (ar == 0 || ar == 1 || ar == params.p() - 1) {
    throw Error(ErrorCode::BadConstant, "a must avoid 0, 1 and -1 in F_" + std::to_string(params.p()));
  }
  if (params.p() == 2) throw Error(ErrorCode::BranchUndefined, "no branch for characteristic 2");
  const Natural ps = params.p_to_s();
  const FieldElement period = gauss_period(params);
  const FieldElement mobius = mobius_factor(params, ar);
  if (rho2(ps - 1) == 2) {
    FieldElement first = period * period;
    FieldElement z = first * mobius;
    return {ZBranch::SquaredPeriod, std::move(first), mobius, std::move(z)};
  }
  if (rho2(ps + 1) == 2) {
    FieldElement second = mobius * mobius;
    FieldElement z = period * second;
    return {ZBranch::SquaredMobius, period, std::move(second), std::move(z)};
  }
  throw Error(ErrorCode::BranchUndefined, "neither p^s - 1 nor p^s + 1 is 2 mod 4");
}

inline FieldElement build_z(const FieldParams& params, std::int64_t a) { return z_parts(params, a).z; }

/// Independent of the primitivity check in FieldParams::make: runs Ben-Or on
/// Phi_r over F_p.
inline bool check_cyclotomic_irreducible(const FieldParams& params) {
  return poly::is_irreducible(params.cyclotomic());
}

/// "p=2 r=5 [0,1,1,0]": lowest-degree-first decimal coefficients.
inline std::string format_element(const FieldElement& x) {
  std::string out = "p=" + std::to_string(x.params().p()) + " r=" + std::to_string(x.params().r()) + " [";
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.coeffs()[i]);
  }
  out += ']';
  return out;
}

/// Inverse of format_element; the parameters are validated with make_params.
inline FieldElement parse_element(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::InvalidArgument, "malformed element: " + std::string(text)); };
  auto read_uint = [&](std::string_view& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data()) throw fail();
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return v;
  };
  auto expect = [&](std::string_view& s, std::string_view token) {
    if (s.substr(0, token.size()) != token) throw fail();
    s.remove_prefix(token.size());
  };
  std::string_view s = text;
  expect(s, "p=");
  const std::uint64_t p = read_uint(s);
  expect(s, " r=");
  const std::uint64_t r = read_uint(s);
  expect(s, " [");
  const FieldParams params = make_params(p, r);
  std::vector<Residue> coeffs;
  while (!s.empty() && s.front() != ']') {
    if (!coeffs.empty()) expect(s, ",");
    coeffs.push_back(read_uint(s));
  }
  expect(s, "]");
  if (!s.empty() || coeffs.size() != params.degree()) throw fail();
  for (auto v : coeffs) {
    if (v >= p) throw fail();
  }
  return FieldElement(params, std::move(coeffs));
}

}  // namespace gaussorder
