#pragma once

// Lower bounds on the order of theta^e (theta^f + a) and of z.
//
// Exact bounds come from bounded partition counts. Closed forms hold in two
// regimes, Case1 (r - 3 >= 2p^2) and Case2 (r - 2 < p); between them only the
// exact bounds are available. Closed forms are evaluated as sums of logs; the
// constant 2.5 stands in for pi*sqrt(2/3) literally.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gaussorder/field.hpp"
#include "gaussorder/partitions.hpp"

namespace gaussorder {

enum class Regime { Case1, Case2, Gap };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Case1: return "Case1";
    case Regime::Case2: return "Case2";
    case Regime::Gap: return "Gap";
  }
  return "Gap";
}

/// z1: theta^e(theta^f + a); z2: same with a != +-1; z3: the element z.
enum class BoundKind { Z1, Z2, Z3 };

inline Regime regime_of(std::uint64_t p, std::uint64_t r) {
  const Natural pp = Natural(p) * p;
  if (Natural(r) >= 2 * pp + 3) return Regime::Case1;
  if (r < p + 2) return Regime::Case2;
  return Regime::Gap;
}

struct LogValue {
  double ln = 0.0;

  [[nodiscard]] double log2() const { return ln / std::log(2.0); }
};

namespace detail {

inline constexpr double kPartitionConstant = 2.5;

}  // namespace detail

/// Case1 closed forms. Requires r - 3 >= 2p^2.
inline LogValue bound_case1(std::uint64_t p, std::uint64_t r, BoundKind which) {
  if (regime_of(p, r) != Regime::Case1) throw Error(ErrorCode::WrongRegime, "Case1 needs r - 3 >= 2p^2");
  const double pd = static_cast<double>(p);
  const double n2 = static_cast<double>(r - 2);
  const double n3 = static_cast<double>(r - 3);
  const double sqrt_p = std::sqrt(pd);
  const double density = 1.0 - 1.0 / pd;
  const double c = detail::kPartitionConstant;
  switch (which) {
    case BoundKind::Z1:
      return {sqrt_p * std::log(pd * (pd - 1) / (160.0 * n2)) + c * std::sqrt(density * n2)};
    case BoundKind::Z2:
      return {std::log(0.5) + 2.0 * sqrt_p * std::log(pd * (pd - 1) / (80.0 * n3)) +
              c * std::sqrt(2.0) * std::sqrt(density * n3)};
    case BoundKind::Z3:
      return {std::log(0.5) + sqrt_p * std::log(pd * (pd - 1) / (80.0 * n3)) +
              c * (1.0 + std::sqrt(2.0) / 2.0) * std::sqrt(density * n3)};
  }
  return {};
}

/// Case2 closed forms. Requires r - 2 < p.
inline LogValue bound_case2(std::uint64_t p, std::uint64_t r, BoundKind which) {
  if (regime_of(p, r) != Regime::Case2) throw Error(ErrorCode::WrongRegime, "Case2 needs r - 2 < p");
  const double n2 = static_cast<double>(r - 2);
  const double n3 = static_cast<double>(r - 3);
  const double c = detail::kPartitionConstant;
  switch (which) {
    case BoundKind::Z1:
      return {c * std::sqrt(n2) - std::log(13.0 * n2)};
    case BoundKind::Z2:
      return {std::log(2.0) + c * std::sqrt(2.0) * std::sqrt(n3) - std::log(169.0 * n3 * n3)};
    case BoundKind::Z3:
      return {c * (1.0 + std::sqrt(2.0) / 2.0) * std::sqrt(n3) - std::log(169.0 * n2 * n3)};
  }
  return {};
}

/// U(r - 2, p - 1).
inline Natural bound_thm1a(const FieldParams& fp) {
  return count_U_bounded(static_cast<unsigned>(fp.r() - 2), static_cast<unsigned>(fp.p() - 1));
}

/// floor(U((r - 3)/2, p - 1)^2 / 2).
inline Natural bound_thm1b(const FieldParams& fp) {
  const Natural u = count_U_bounded(static_cast<unsigned>((fp.r() - 3) / 2), static_cast<unsigned>(fp.p() - 1));
  return u * u / 2;
}

/// floor(U(r - 2, p - 1) * U((r - 3)/2, p - 1) / 2).
inline Natural bound_cor3(const FieldParams& fp) {
  const auto table = bounded_partition_table(static_cast<unsigned>(fp.r() - 2), static_cast<unsigned>(fp.p() - 1));
  return table[fp.r() - 2] * table[(fp.r() - 3) / 2] / 2;
}

struct BoundReport {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  Regime regime = Regime::Gap;
  double log2_group_order = 0.0;
  /// Closed forms; absent in the Gap regime.
  std::optional<double> log2_z1;
  std::optional<double> log2_z2;
  std::optional<double> log2_z3;
  Natural exact_bound_z1;
  Natural exact_bound_z2;
  Natural exact_bound_z3;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline BoundReport table_row(const FieldParams& fp) {
  BoundReport row;
  row.p = fp.p();
  row.r = fp.r();
  row.regime = regime_of(fp.p(), fp.r());
  row.log2_group_order = static_cast<double>(fp.r() - 1) * std::log2(static_cast<double>(fp.p()));
  if (row.regime != Regime::Gap) {
    auto closed = [&](BoundKind k) {
      return (row.regime == Regime::Case1 ? bound_case1(fp.p(), fp.r(), k) : bound_case2(fp.p(), fp.r(), k)).log2();
    };
    row.log2_z1 = closed(BoundKind::Z1);
    row.log2_z2 = closed(BoundKind::Z2);
    row.log2_z3 = closed(BoundKind::Z3);
  }
  const auto table = bounded_partition_table(static_cast<unsigned>(fp.r() - 2), static_cast<unsigned>(fp.p() - 1));
  const Natural& full = table[fp.r() - 2];
  const Natural& half = table[(fp.r() - 3) / 2];
  row.exact_bound_z1 = full;
  row.exact_bound_z2 = half * half / 2;
  row.exact_bound_z3 = full * half / 2;
  return row;
}

}  // namespace gaussorder
