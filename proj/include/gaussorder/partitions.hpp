#pragma once

// Partition counting. A partition of n is a multiplicity vector (u_1..u_n)
// with sum j*u_j = n.
//
//   count_U(n)            all partitions
//   count_U_bounded(n, d) every part used at most d times
//   count_Q(n, d)         no part divisible by d
//
// Glaisher: count_U_bounded(n, d - 1) == count_Q(n, d). The three counters
// use separate recurrences so that identity is a real cross-check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gaussorder/arith.hpp"

namespace gaussorder {

using PartitionCount = Natural;

inline constexpr unsigned kDefaultEnumerationCap = 60;

/// counts[m] = number of partitions of m with every part used at most d
/// times, for m = 0..n.
inline std::vector<Natural> bounded_partition_table(unsigned n, unsigned d) {
  std::vector<Natural> counts(n + 1, 0);
  counts[0] = 1;
  if (d == 0) return counts;
  std::vector<Natural> prev(n + 1);
  for (unsigned part = 1; part <= n; ++part) {
    prev = counts;
    // counts[m] = sum_{k=0..d} prev[m - k*part], as a sliding window.
    const std::uint64_t window = std::uint64_t{d + 1} * part;
    for (unsigned m = part; m <= n; ++m) {
      counts[m] = prev[m] + counts[m - part];
      if (m >= window) counts[m] -= prev[m - window];
    }
  }
  return counts;
}

inline Natural count_U_bounded(unsigned n, unsigned d) { return bounded_partition_table(n, d)[n]; }

inline std::vector<Natural> partition_table(unsigned n) {
  std::vector<Natural> counts(n + 1, 0);
  counts[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned m = part; m <= n; ++m) counts[m] += counts[m - part];
  }
  return counts;
}

inline Natural count_U(unsigned n) { return partition_table(n)[n]; }

inline Natural count_Q(unsigned n, unsigned d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "count_Q requires d >= 2");
  std::vector<Natural> counts(n + 1, 0);
  counts[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    if (part % d == 0) continue;
    for (unsigned m = part; m <= n; ++m) counts[m] += counts[m - part];
  }
  return counts[n];
}

/// multiplicity[j - 1] = u_j for j = 1..n.
struct PartitionSpec {
  unsigned n = 0;
  std::vector<unsigned> multiplicity;

  [[nodiscard]] unsigned u(unsigned j) const { return multiplicity.at(j - 1); }

  [[nodiscard]] std::string to_string() const {
    std::string out = "{";
    for (unsigned j = n; j >= 1; --j) {
      if (multiplicity[j - 1] == 0) continue;
      if (out.size() > 1) out += ',';
      out += "u_" + std::to_string(j) + "=" + std::to_string(multiplicity[j - 1]);
    }
    return out + "}";
  }

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

namespace detail {

inline void enumerate_rec(unsigned part, unsigned remaining, unsigned d, PartitionSpec& current,
                          std::vector<PartitionSpec>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (part == 0) return;
  const unsigned most = std::min(d, remaining / part);
  for (unsigned k = most + 1; k-- > 0;) {
    current.multiplicity[part - 1] = k;
    enumerate_rec(part - 1, remaining - k * part, d, current, out);
  }
  current.multiplicity[part - 1] = 0;
}

}  // namespace detail

/// Every multiplicity vector of n with all u_j <= d, largest parts first.
inline std::vector<PartitionSpec> enumerate_bounded(unsigned n, unsigned d, unsigned cap = kDefaultEnumerationCap) {
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "enumeration of n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<PartitionSpec> out;
  PartitionSpec current{n, std::vector<unsigned>(n, 0)};
  detail::enumerate_rec(n, n, d, current, out);
  return out;
}

}  // namespace gaussorder
