#pragma once

// JSON and text rendering of BoundReport and SweepReport.
//
// JSON conventions: big integers are decimal strings, reals are full-precision
// numbers, and closed-form bounds absent in the Gap regime are null.

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussorder/bounds.hpp"
#include "gaussorder/verify.hpp"

namespace gaussorder {

namespace detail {

inline nlohmann::json optional_real(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline std::optional<double> read_optional_real(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline Regime parse_regime(const std::string& s) {
  if (s == "Case1") return Regime::Case1;
  if (s == "Case2") return Regime::Case2;
  if (s == "Gap") return Regime::Gap;
  throw Error(ErrorCode::InvalidArgument, "unknown regime " + s);
}

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const BoundReport& b) {
  j = nlohmann::json{{"p", b.p},
                     {"r", b.r},
                     {"regime", std::string(to_string(b.regime))},
                     {"log2_group_order", b.log2_group_order},
                     {"log2_z1", detail::optional_real(b.log2_z1)},
                     {"log2_z2", detail::optional_real(b.log2_z2)},
                     {"log2_z3", detail::optional_real(b.log2_z3)},
                     {"exact_bound_z1", b.exact_bound_z1.str()},
                     {"exact_bound_z2", b.exact_bound_z2.str()},
                     {"exact_bound_z3", b.exact_bound_z3.str()}};
}

inline void from_json(const nlohmann::json& j, BoundReport& b) {
  b.p = j.at("p").get<std::uint64_t>();
  b.r = j.at("r").get<std::uint64_t>();
  b.regime = detail::parse_regime(j.at("regime").get<std::string>());
  b.log2_group_order = j.at("log2_group_order").get<double>();
  b.log2_z1 = detail::read_optional_real(j.at("log2_z1"));
  b.log2_z2 = detail::read_optional_real(j.at("log2_z2"));
  b.log2_z3 = detail::read_optional_real(j.at("log2_z3"));
  b.exact_bound_z1 = Natural(j.at("exact_bound_z1").get<std::string>());
  b.exact_bound_z2 = Natural(j.at("exact_bound_z2").get<std::string>());
  b.exact_bound_z3 = Natural(j.at("exact_bound_z3").get<std::string>());
}

inline void to_json(nlohmann::json& j, const SweepOptions& o) {
  j = nlohmann::json{{"p_max", o.p_max},
                     {"r_max", o.r_max},
                     {"bit_guard", o.bit_guard},
                     {"enumeration_cap", o.enumeration_cap},
                     {"threads", o.threads}};
}

inline void from_json(const nlohmann::json& j, SweepOptions& o) {
  o.p_max = j.at("p_max").get<std::uint64_t>();
  o.r_max = j.at("r_max").get<std::uint64_t>();
  o.bit_guard = j.at("bit_guard").get<unsigned>();
  o.enumeration_cap = j.at("enumeration_cap").get<unsigned>();
  o.threads = j.at("threads").get<unsigned>();
}

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"p", v.p}, {"r", v.r}, {"e", v.e}, {"f", v.f},
                     {"a", v.a}, {"check", v.check}, {"detail", v.detail}};
}

inline void from_json(const nlohmann::json& j, Violation& v) {
  v.p = j.at("p").get<std::uint64_t>();
  v.r = j.at("r").get<std::uint64_t>();
  v.e = j.at("e").get<std::int64_t>();
  v.f = j.at("f").get<std::int64_t>();
  v.a = j.at("a").get<std::int64_t>();
  v.check = j.at("check").get<std::string>();
  v.detail = j.at("detail").get<std::string>();
}

inline void to_json(nlohmann::json& j, const FieldSummary& s) {
  j = nlohmann::json{{"p", s.p},
                     {"r", s.r},
                     {"group_order_bits", s.group_order_bits},
                     {"skipped", s.skipped},
                     {"skip_reason", s.skip_reason},
                     {"elements", s.elements},
                     {"bound_thm1a", s.bound_thm1a.str()},
                     {"min_order", s.min_order.str()},
                     {"max_order", s.max_order.str()}};
}

inline void from_json(const nlohmann::json& j, FieldSummary& s) {
  s.p = j.at("p").get<std::uint64_t>();
  s.r = j.at("r").get<std::uint64_t>();
  s.group_order_bits = j.at("group_order_bits").get<unsigned>();
  s.skipped = j.at("skipped").get<bool>();
  s.skip_reason = j.at("skip_reason").get<std::string>();
  s.elements = j.at("elements").get<std::uint64_t>();
  s.bound_thm1a = Natural(j.at("bound_thm1a").get<std::string>());
  s.min_order = Natural(j.at("min_order").get<std::string>());
  s.max_order = Natural(j.at("max_order").get<std::string>());
}

inline void to_json(nlohmann::json& j, const SweepReport& r) {
  j = nlohmann::json{{"options", r.options},
                     {"fields", r.fields},
                     {"instances_checked", r.instances_checked},
                     {"instances_skipped", r.instances_skipped},
                     {"checks", r.checks},
                     {"violations", r.violations},
                     {"max_log_ratio", r.max_log_ratio},
                     {"ok", r.ok()}};
}

inline void from_json(const nlohmann::json& j, SweepReport& r) {
  r.options = j.at("options").get<SweepOptions>();
  r.fields = j.at("fields").get<std::vector<FieldSummary>>();
  r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
  r.instances_skipped = j.at("instances_skipped").get<std::uint64_t>();
  r.checks = j.at("checks").get<std::map<std::string, std::uint64_t>>();
  r.violations = j.at("violations").get<std::vector<Violation>>();
  r.max_log_ratio = j.at("max_log_ratio").get<double>();
}

/// Aligned columns: q, r, regime, then log2 of the group order and bounds; closed
/// forms print as "-" when absent. Exact bounds are appended as log2 values
/// when requested.
inline std::string render_table(const std::vector<BoundReport>& rows, bool with_exact = false) {
  std::ostringstream out;
  auto cell = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  auto opt = [](const std::optional<double>& v) { return v ? detail::fixed2(*v) : std::string("-"); };
  out << cell("q", 6) << cell("r", 7) << cell("regime", 8) << cell("log2|F*|", 11) << cell("log2 z1", 10)
      << cell("log2 z2", 10) << cell("log2 z3", 10);
  if (with_exact) out << cell("exact z1", 10) << cell("exact z2", 10) << cell("exact z3", 10);
  out << '\n';
  for (const auto& row : rows) {
    out << cell(std::to_string(row.p), 6) << cell(std::to_string(row.r), 7)
        << cell(std::string(to_string(row.regime)), 8) << cell(detail::fixed2(row.log2_group_order), 11)
        << cell(opt(row.log2_z1), 10) << cell(opt(row.log2_z2), 10) << cell(opt(row.log2_z3), 10);
    if (with_exact) {
      for (const Natural* v : {&row.exact_bound_z1, &row.exact_bound_z2, &row.exact_bound_z3}) {
        out << cell(*v > 0 ? detail::fixed2(log2_natural(*v)) : std::string("-inf"), 10);
      }
    }
    out << '\n';
  }
  return out.str();
}

inline std::string render_summary(const SweepReport& r) {
  std::ostringstream out;
  std::size_t skipped_fields = 0;
  for (const auto& f : r.fields) skipped_fields += f.skipped ? 1 : 0;
  out << "sweep p<=" << r.options.p_max << " r<=" << r.options.r_max << ": " << r.fields.size() << " fields ("
      << skipped_fields << " skipped), " << r.instances_checked << " elements checked, " << r.instances_skipped
      << " skipped, " << r.violations.size() << " violations, max log ratio " << detail::fixed2(r.max_log_ratio);
  return out.str();
}

}  // namespace gaussorder
