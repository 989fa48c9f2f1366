#pragma once

// Brute-force oracles that replay the order arguments on small fields, and
// the exhaustive sweep over all admissible (p, r, e, f, a).

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gaussorder/bounds.hpp"
#include "gaussorder/order.hpp"
#include "gaussorder/partitions.hpp"

namespace gaussorder {

/// Which family of products is enumerated over bounded partitions.
enum class ProductVariant {
  /// prod [theta^{ej} (theta^j + a)]^{u_j}, partitions of r - 2.
  Thm1a,
  /// prod [theta^{-j(e+1)} (a theta^j + 1)(theta^j + a)]^{u_j}, partitions of (r-3)/2.
  Thm1bW,
  /// prod [theta^{-j(e+1)} (a theta^j + 1)(theta^j + a)^{-1}]^{u_j}, partitions of (r-3)/2.
  Thm1bV,
};

inline std::string_view to_string(ProductVariant v) {
  switch (v) {
    case ProductVariant::Thm1a: return "thm1a";
    case ProductVariant::Thm1bW: return "thm1b_w";
    case ProductVariant::Thm1bV: return "thm1b_v";
  }
  return "thm1a";
}

struct DistinctProducts {
  std::size_t partitions = 0;
  std::size_t distinct = 0;

  [[nodiscard]] bool all_distinct() const { return partitions == distinct; }
};

inline DistinctProducts count_distinct_partition_products(const FieldParams& params, std::int64_t e,
                                                          std::int64_t a, ProductVariant variant,
                                                          unsigned cap = kDefaultEnumerationCap) {
  const Residue ar = params.reduce(a);
  const bool full = variant == ProductVariant::Thm1a;
  if (ar == 0) throw Error(ErrorCode::ZeroConstant, "a must be non-zero in F_p");
  if (!full && (ar == 1 || ar == params.p() - 1)) {
    throw Error(ErrorCode::BadConstant, "variant " + std::string(to_string(variant)) + " needs a != +-1");
  }
  const auto n = static_cast<unsigned>(full ? params.r() - 2 : (params.r() - 3) / 2);
  const auto d = static_cast<unsigned>(params.p() - 1);
  const std::vector<PartitionSpec> parts = enumerate_bounded(n, d, cap);

  const FieldElement ca = FieldElement::constant(params, ar);
  const FieldElement one = FieldElement::one(params);
  const std::int64_t em = static_cast<std::int64_t>(params.exponent(e));
  // powers[j - 1][k] = base_j^k for k up to the largest multiplicity of j.
  std::vector<std::vector<FieldElement>> powers(n);
  for (unsigned j = 1; j <= n; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    const FieldElement tj = FieldElement::monomial(params, jj);
    FieldElement base = one;
    switch (variant) {
      case ProductVariant::Thm1a:
        base = FieldElement::monomial(params, em * jj) * (tj + ca);
        break;
      case ProductVariant::Thm1bW:
        base = FieldElement::monomial(params, -jj * (em + 1)) * (ca * tj + one) * (tj + ca);
        break;
      case ProductVariant::Thm1bV:
        base = FieldElement::monomial(params, -jj * (em + 1)) * (ca * tj + one) * (tj + ca).inverse();
        break;
    }
    const unsigned most = std::min(d, n / j);
    powers[j - 1].reserve(most + 1);
    powers[j - 1].push_back(one);
    for (unsigned k = 1; k <= most; ++k) powers[j - 1].push_back(powers[j - 1].back() * base);
  }

  std::set<std::vector<Residue>> seen;
  for (const auto& spec : parts) {
    FieldElement prod = one;
    for (unsigned j = 1; j <= n; ++j) {
      const unsigned k = spec.multiplicity[j - 1];
      if (k != 0) prod *= powers[j - 1][k];
    }
    seen.insert(prod.coeffs());
  }
  return {parts.size(), seen.size()};
}

/// True iff every bounded partition yields a different product.
inline bool check_partition_products_distinct(const FieldParams& params, std::int64_t e, std::int64_t a,
                                              ProductVariant variant, unsigned cap = kDefaultEnumerationCap) {
  return count_distinct_partition_products(params, e, a, variant, cap).all_distinct();
}

/// (theta + theta^{-1})^{p^s - 1} == 1, by exponentiation alone.
inline bool check_corollary2(const FieldParams& params) {
  return gauss_period(params).pow(params.p_to_s() - 1).is_one();
}

/// Smallest alpha >= 0 with p^alpha = j (mod r), by scanning powers of p.
inline std::uint64_t conjugate_exponent(const FieldParams& params, std::uint64_t j) {
  const std::uint64_t r = params.r();
  const std::uint64_t target = j % r;
  std::uint64_t acc = 1 % r;
  for (std::uint64_t alpha = 0; alpha < r - 1; ++alpha) {
    if (acc == target) return alpha;
    acc = acc * (params.p() % r) % r;
  }
  throw Error(ErrorCode::NotPrimitiveRoot, "no power of p hits " + std::to_string(j) + " mod r");
}

/// For j = 1..r-2: (theta^e (theta + a))^{p^{alpha_j}} == theta^{ej} (theta^j + a),
/// checked both by exponentiation and by the Frobenius permutation.
inline bool check_frobenius_conjugates(const FieldParams& params, std::int64_t e, std::int64_t a) {
  const FieldElement x = build_element(params, e, 1, a);
  const std::int64_t em = static_cast<std::int64_t>(params.exponent(e));
  for (std::uint64_t j = 1; j + 2 <= params.r(); ++j) {
    const std::uint64_t alpha = conjugate_exponent(params, j);
    const auto jj = static_cast<std::int64_t>(j);
    const FieldElement expected = build_element(params, em * jj, jj, a);
    const Natural exponent = boost::multiprecision::pow(Natural(params.p()), static_cast<unsigned>(alpha));
    if (!(x.pow(exponent) == expected)) return false;
    if (!(x.frobenius(alpha) == expected)) return false;
  }
  return true;
}

struct SweepOptions {
  std::uint64_t p_max = 13;
  std::uint64_t r_max = 23;
  unsigned bit_guard = kDefaultGuardBits;
  unsigned enumeration_cap = kDefaultEnumerationCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  friend bool operator==(const SweepOptions&, const SweepOptions&) = default;
};

struct Violation {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  std::int64_t e = -1;
  std::int64_t f = -1;
  std::int64_t a = -1;
  std::string check;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FieldSummary {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  unsigned group_order_bits = 0;
  bool skipped = false;
  std::string skip_reason;
  std::uint64_t elements = 0;
  Natural bound_thm1a;
  Natural min_order;
  Natural max_order;

  friend bool operator==(const FieldSummary&, const FieldSummary&) = default;
};

struct SweepReport {
  SweepOptions options;
  std::vector<FieldSummary> fields;
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;
  /// Number of times each named check ran.
  std::map<std::string, std::uint64_t> checks;
  std::vector<Violation> violations;
  /// max over checked elements of log(order) / log(U(r-2, p-1)), where the bound exceeds 1.
  double max_log_ratio = 0.0;

  [[nodiscard]] bool ok() const { return violations.empty(); }

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

namespace detail {

struct Cell {
  std::map<std::string, std::uint64_t> checks;
  std::vector<Violation> violations;
  std::uint64_t elements = 0;
  Natural min_order = 0;
  Natural max_order = 0;
  double max_log_ratio = 0.0;

  void count(const std::string& check) { ++checks[check]; }

  void fail(const FieldParams& fp, std::int64_t e, std::int64_t f, std::int64_t a, std::string check,
            std::string detail) {
    violations.push_back({fp.p(), fp.r(), e, f, a, std::move(check), std::move(detail)});
  }

  void expect(bool ok, const FieldParams& fp, std::int64_t e, std::int64_t f, std::int64_t a,
              const std::string& check, const std::string& detail) {
    count(check);
    if (!ok) fail(fp, e, f, a, check, detail);
  }

  void merge(const Cell& other) {
    for (const auto& [k, v] : other.checks) checks[k] += v;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    if (other.elements != 0) {
      if (elements == 0 || other.min_order < min_order) min_order = other.min_order;
      if (other.max_order > max_order) max_order = other.max_order;
    }
    elements += other.elements;
    max_log_ratio = std::max(max_log_ratio, other.max_log_ratio);
  }
};

struct FieldBounds {
  Natural thm1a;
  Natural thm1b;
  Natural cor3;
  unsigned full_n = 0;
  unsigned half_n = 0;
};

// Element-order checks for one constant a over all (e, f).
inline void sweep_orders(const MultiplicativeGroup& group, const FieldBounds& bounds, std::int64_t a, Cell& cell) {
  const FieldParams& fp = group.params();
  const auto r = static_cast<std::int64_t>(fp.r());
  const bool admissible_b = a != 1 && static_cast<std::uint64_t>(a) != fp.p() - 1;
  const double log_bound = bounds.thm1a > 1 ? log2_natural(bounds.thm1a) : 0.0;

  std::vector<Natural> base_orders;
  base_orders.reserve(static_cast<std::size_t>(r));
  for (std::int64_t e = 0; e < r; ++e) base_orders.push_back(group.element_order(build_element(fp, e, 1, a)));

  for (std::int64_t e = 0; e < r; ++e) {
    for (std::int64_t f = 1; f < r; ++f) {
      const Natural ord = f == 1 ? base_orders[e] : group.element_order(build_element(fp, e, f, a));
      ++cell.elements;
      if (cell.elements == 1 || ord < cell.min_order) cell.min_order = ord;
      if (ord > cell.max_order) cell.max_order = ord;
      if (log_bound > 0.0) cell.max_log_ratio = std::max(cell.max_log_ratio, log2_natural(ord) / log_bound);

      cell.expect(ord >= bounds.thm1a, fp, e, f, a, "thm1a_bound",
                  "order " + ord.str() + " < " + bounds.thm1a.str());
      if (admissible_b) {
        cell.expect(ord >= bounds.thm1b, fp, e, f, a, "thm1b_bound",
                    "order " + ord.str() + " < " + bounds.thm1b.str());
      }
      if (f == 1) continue;
      // theta -> theta^f carries theta^{e f^-1} (theta + a) onto this element.
      const auto f_inv = static_cast<std::int64_t>(pow_mod64(static_cast<u64>(f), fp.r() - 2, fp.r()));
      const std::int64_t g = (e * f_inv) % r;
      cell.expect(ord == base_orders[g], fp, e, f, a, "automorphism",
                  "order " + ord.str() + " != " + base_orders[g].str() + " at e*f^-1 = " + std::to_string(g));
    }
  }
}

// Proof-mechanics checks for one (e, a) pair.
inline void sweep_pair(const MultiplicativeGroup& group, const FieldBounds& bounds, std::int64_t e,
                       std::int64_t a, unsigned cap, Cell& cell) {
  const FieldParams& fp = group.params();
  const bool admissible_b = a != 1 && static_cast<std::uint64_t>(a) != fp.p() - 1;

  cell.expect(check_frobenius_conjugates(fp, e, a), fp, e, 1, a, "frobenius_conjugates", "identity failed");

  const Natural ps = fp.p_to_s();
  const VW vw = decompose_vw(fp, e, a);
  cell.expect(vw_matches_powers(fp, e, a), fp, e, 1, a, "vw_powers", "closed forms differ from x^(p^s -+ 1)");
  const Natural ord_v = group.element_order(vw.v);
  const Natural ord_w = group.element_order(vw.w);
  cell.expect((ps + 1) % ord_v == 0 && (ps - 1) % ord_w == 0, fp, e, 1, a, "vw_orders",
              "ord(v) = " + ord_v.str() + ", ord(w) = " + ord_w.str());

  if (bounds.full_n <= cap) {
    const auto res = count_distinct_partition_products(fp, e, a, ProductVariant::Thm1a, cap);
    cell.expect(res.all_distinct(), fp, e, -1, a, "distinct_thm1a",
                std::to_string(res.distinct) + " distinct of " + std::to_string(res.partitions));
  }
  if (admissible_b && bounds.half_n <= cap) {
    for (auto variant : {ProductVariant::Thm1bW, ProductVariant::Thm1bV}) {
      const auto res = count_distinct_partition_products(fp, e, a, variant, cap);
      cell.expect(res.all_distinct(), fp, e, -1, a, "distinct_" + std::string(to_string(variant)),
                  std::to_string(res.distinct) + " distinct of " + std::to_string(res.partitions));
    }
  }
}

inline void sweep_field_level(const MultiplicativeGroup& group, const FieldBounds& bounds, Cell& cell) {
  const FieldParams& fp = group.params();
  const Natural ps = fp.p_to_s();
  cell.expect(check_cyclotomic_irreducible(fp), fp, -1, -1, -1, "irreducible", "Phi_r reducible");
  cell.expect(check_corollary2(fp), fp, -1, -1, -1, "corollary2_power", "(theta+theta^-1)^(p^s-1) != 1");
  const Natural ord_gp = group.element_order(gauss_period(fp));
  cell.expect((ps - 1) % ord_gp == 0, fp, -1, -1, -1, "corollary2_divides",
              "order " + ord_gp.str() + " does not divide p^s - 1");
  cell.expect(ord_gp >= bounds.thm1a, fp, -1, -1, -1, "corollary2_bound",
              "order " + ord_gp.str() + " < " + bounds.thm1a.str());
  if (fp.p() < 5) return;
  for (std::int64_t a = 2; a + 1 < static_cast<std::int64_t>(fp.p()); ++a) {
    const ZDecompositionReport z = verify_z_decomposition(group, a);
    cell.expect(z.ok(), fp, -1, -1, a, "corollary3",
                "ord(z) = " + z.order_z.str() + ", factors " + z.order_first.str() + " * " + z.order_second.str() +
                    ", bound " + z.bound.str());
  }
}

}  // namespace detail

/// Exhaustive check over every prime p <= p_max, prime r <= r_max with p
/// primitive mod r. Fields whose group order exceeds bit_guard are logged as
/// skipped; the report is clean iff no check failed.
inline SweepReport sweep(const SweepOptions& options) {
  SweepReport report;
  report.options = options;
  const unsigned threads =
      options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  for (std::uint64_t r = 3; r <= options.r_max; ++r) {
    if (!is_prime(r)) continue;
    for (std::uint64_t p = 2; p <= options.p_max; ++p) {
      if (p == r || !is_prime(p) || !is_primitive_root(p, r)) continue;
      const FieldParams fp = make_params(p, r);
      FieldSummary summary;
      summary.p = p;
      summary.r = r;
      summary.group_order_bits = bit_length(fp.group_order());
      const std::uint64_t cells = (p - 1) * r * (r - 1);
      if (summary.group_order_bits > options.bit_guard) {
        summary.skipped = true;
        summary.skip_reason = "group order has " + std::to_string(summary.group_order_bits) + " bits";
        report.instances_skipped += cells;
        report.fields.push_back(std::move(summary));
        continue;
      }

      const MultiplicativeGroup group(fp, options.bit_guard);
      detail::FieldBounds bounds;
      bounds.full_n = static_cast<unsigned>(r - 2);
      bounds.half_n = static_cast<unsigned>((r - 3) / 2);
      bounds.thm1a = bound_thm1a(fp);
      bounds.thm1b = bound_thm1b(fp);
      bounds.cor3 = bound_cor3(fp);
      summary.bound_thm1a = bounds.thm1a;

      detail::Cell total;
      detail::sweep_field_level(group, bounds, total);

      // Work items: one per constant a for the order checks, then one per
      // (e, a) pair for the proof-mechanics checks.
      const std::uint64_t order_items = p - 1;
      const std::uint64_t items = order_items + r * (p - 1);
      std::mutex mu;
      std::uint64_t next = 0;
      auto worker = [&] {
        detail::Cell local;
        for (;;) {
          std::uint64_t idx;
          {
            std::lock_guard lock(mu);
            if (next == items) break;
            idx = next++;
          }
          if (idx < order_items) {
            detail::sweep_orders(group, bounds, static_cast<std::int64_t>(idx + 1), local);
            continue;
          }
          idx -= order_items;
          const auto e = static_cast<std::int64_t>(idx / (p - 1));
          const auto a = static_cast<std::int64_t>(idx % (p - 1) + 1);
          detail::sweep_pair(group, bounds, e, a, options.enumeration_cap, local);
        }
        std::lock_guard lock(mu);
        total.merge(local);
      };
      if (threads == 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      }

      // Violations arrive in worker order; sort so reports are reproducible.
      std::sort(total.violations.begin(), total.violations.end(), [](const Violation& x, const Violation& y) {
        return std::tie(x.e, x.f, x.a, x.check) < std::tie(y.e, y.f, y.a, y.check);
      });
      summary.elements = total.elements;
      summary.min_order = total.min_order;
      summary.max_order = total.max_order;
      report.instances_checked += total.elements;
      for (const auto& [k, v] : total.checks) report.checks[k] += v;
      report.violations.insert(report.violations.end(), total.violations.begin(), total.violations.end());
      report.max_log_ratio = std::max(report.max_log_ratio, total.max_log_ratio);
      report.fields.push_back(std::move(summary));
    }
  }
  return report;
}

}  // namespace gaussorder
