#pragma once

// Arbitrary-precision integer helpers: primality, factorization, modular
// order and the 2-adic component rho2.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaussorder/error.hpp"

namespace gaussorder {

/// Non-negative arbitrary-precision integer. The underlying type is signed so
/// that intermediate differences stay representable; public operations only
/// ever hand out non-negative values.
using Natural = boost::multiprecision::cpp_int;

inline constexpr unsigned kDefaultGuardBits = 96;

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
 public:
  Factorization() = default;

  [[nodiscard]] const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  [[nodiscard]] bool empty() const noexcept { return factors_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return factors_.size(); }
  [[nodiscard]] auto begin() const noexcept { return factors_.begin(); }
  [[nodiscard]] auto end() const noexcept { return factors_.end(); }

  /// Multiplies in prime^exponent, keeping primes sorted and merged.
  void add(const Natural& prime, unsigned exponent = 1) {
    if (exponent == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const PrimePower& pp, const Natural& q) { return pp.prime < q; });
    if (it != factors_.end() && it->prime == prime) {
      it->exponent += exponent;
    } else {
      factors_.insert(it, PrimePower{prime, exponent});
    }
  }

  void merge(const Factorization& other) {
    for (const auto& pp : other) add(pp.prime, pp.exponent);
  }

  [[nodiscard]] Natural value() const {
    Natural v = 1;
    for (const auto& pp : factors_) v *= boost::multiprecision::pow(pp.prime, pp.exponent);
    return v;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (const auto& pp : factors_) {
      if (!out.empty()) out += " * ";
      out += pp.prime.str();
      if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Number of significant bits; bit_length(0) == 0.
inline unsigned bit_length(const Natural& n) {
  return n.is_zero() ? 0u : static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
}

/// log2 of a positive integer, accurate to double precision for any size.
inline double log2_natural(const Natural& n) {
  if (n <= 0) return -HUGE_VAL;
  const unsigned bits = bit_length(n);
  if (bits <= 60) return std::log2(n.convert_to<double>());
  const unsigned shift = bits - 60;
  Natural top = n >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline Natural gcd(const Natural& a, const Natural& b) { return boost::multiprecision::gcd(a, b); }

inline Natural lcm(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return a / gcd(a, b) * b;
}

inline Natural pow_mod(const Natural& base, const Natural& exp, const Natural& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod64(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod64(result, base, m);
    base = mul_mod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for every 64-bit input with this witness set.
inline bool is_prime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    a %= n;
    if (a == 0) continue;
    u64 x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline u64 low_word(const Natural& n) {
  return static_cast<u64>(n & Natural(~u64{0}));
}

inline u64 seed_for(const Natural& n) {
  return low_word(n) ^ (static_cast<u64>(bit_length(n)) * 0x9E3779B97F4A7C15ull);
}

inline bool miller_rabin_big(const Natural& n, unsigned rounds) {
  Natural d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  std::mt19937_64 rng(seed_for(n));
  const Natural span = n - 3;
  for (unsigned round = 0; round < rounds; ++round) {
    Natural a = 2;
    for (int w = 0; w < 4; ++w) a = (a << 64) + rng();
    a = a % span + 2;
    Natural x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho on 64-bit moduli. n must be odd and composite.
inline u64 rho64(u64 n, std::mt19937_64& rng) {
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    u64 m = 128, g = 1, q = 1, r = 1, x = 0, ys = 0;
    auto step = [&](u64 v) { return static_cast<u64>((static_cast<u128>(mul_mod64(v, v, n)) + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mul_mod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline Natural rho_big(const Natural& n, std::mt19937_64& rng) {
  for (;;) {
    const Natural c = Natural(rng()) % (n - 1) + 1;
    Natural y = Natural(rng()) % n;
    Natural g = 1, q = 1, x, ys;
    std::uint64_t m = 128, r = 1;
    auto step = [&](const Natural& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic below 2^64; 40 Miller-Rabin rounds above, seeded from n.
inline bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (bit_length(n) <= 64) return detail::is_prime64(detail::low_word(n));
  for (std::uint32_t p : detail::small_primes()) {
    if (p > 1000) break;
    if (n % p == 0) return false;
  }
  return detail::miller_rabin_big(n, 40);
}

namespace detail {

// n has no prime factor below 2^16; splits it completely.
inline void split_cofactor(const Natural& n, Factorization& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.add(n);
    return;
  }
  Natural d = bit_length(n) <= 64 ? Natural(rho64(low_word(n), rng)) : rho_big(n, rng);
  split_cofactor(d, out, rng);
  split_cofactor(n / d, out, rng);
}

}  // namespace detail

/// Trial division by primes below 2^16, then Pollard-Brent rho. The rho
/// seed is derived from n, so repeated calls are reproducible.
inline Factorization factorize(const Natural& n, unsigned bit_guard = kDefaultGuardBits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize requires n >= 1");
  if (bit_length(n) > bit_guard) {
    throw Error(ErrorCode::GuardExceeded, std::to_string(bit_length(n)) + "-bit input exceeds " +
                                              std::to_string(bit_guard) + "-bit guard");
  }
  Factorization out;
  Natural rest = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (Natural(p) * p > rest) break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.add(Natural(p), e);
  }
  if (rest > 1) {
    std::mt19937_64 rng(detail::seed_for(n));
    detail::split_cofactor(rest, out, rng);
  }
  return out;
}

/// Largest power of two dividing n.
inline Natural rho2(const Natural& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rho2 requires n >= 1");
  return Natural(1) << static_cast<unsigned>(boost::multiprecision::lsb(n));
}

/// Least k dividing group_order with is_identity(power(k)), found by
/// stripping each prime of group_order while the power stays trivial.
/// Requires power(group_order) to be the identity.
template <class PowerFn, class IsIdentity>
Natural order_by_stripping(const Natural& group_order, const Factorization& group_factors,
                           PowerFn&& power, IsIdentity&& is_identity) {
  Natural order = group_order;
  for (const auto& pp : group_factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      Natural candidate = order / pp.prime;
      if (!is_identity(power(candidate))) break;
      order = std::move(candidate);
    }
  }
  return order;
}

/// Multiplicative order of g modulo m.
inline Natural mult_order_mod(const Natural& g, const Natural& m, unsigned bit_guard = kDefaultGuardBits) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2");
  if (gcd(g % m, m) != 1) throw Error(ErrorCode::NotCoprime, "gcd(g, m) != 1");
  const Factorization mf = factorize(m, bit_guard);
  Natural phi = 1;
  Factorization phi_factors;
  for (const auto& pp : mf) {
    phi *= boost::multiprecision::pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    phi_factors.add(pp.prime, pp.exponent - 1);
    phi_factors.merge(factorize(pp.prime - 1, bit_guard));
  }
  const Natural base = g % m;
  return order_by_stripping(
      phi, phi_factors, [&](const Natural& k) { return pow_mod(base, k, m); },
      [](const Natural& v) { return v == 1; });
}

/// True iff g generates (Z/r)^* for prime r.
inline bool is_primitive_root(const Natural& g, const Natural& r) {
  if (r < 2 || gcd(g % r, r) != 1) return false;
  return mult_order_mod(g, r, std::max(kDefaultGuardBits, bit_length(r))) == r - 1;
}

}  // namespace gaussorder
