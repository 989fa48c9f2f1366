// gaussorder: bounds, exact orders and verification sweeps for high-order
// elements of F_p[x]/Phi_r(x).
//
// Exit status: 0 success, 1 mathematical violation, 2 invalid input,
// 3 resource guard exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussorder/gaussorder.hpp"
#include "gaussorder/report_io.hpp"

namespace {

using namespace gaussorder;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;

// Built-in (q, r) pairs for `table --examples`.
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kExampleRows = {
    {5, 257}, {3, 401}, {11, 1009}, {107, 97}};

unsigned default_guard() {
  if (const char* env = std::getenv("GAUSSORDER_GUARD_BITS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring malformed GAUSSORDER_GUARD_BITS=" << env << "\n";
  }
  return kDefaultGuardBits;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::GuardExceeded ? kExitGuard : kExitInvalid;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct BoundArgs {
  std::string p, r;
  bool exact = false;
  bool json = false;
};

int cmd_bound(const BoundArgs& args) {
  const FieldParams fp = make_params(Natural(args.p), Natural(args.r));
  const BoundReport row = table_row(fp);
  if (args.json) {
    std::cout << nlohmann::json(row).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << render_table({row}, args.exact);
  if (row.regime == Regime::Gap) std::cout << "Gap regime: closed forms do not apply; exact partition bounds only\n";
  if (args.exact || row.regime == Regime::Gap) {
    std::cout << "U(r-2,p-1)                = " << row.exact_bound_z1 << "\n"
              << "floor(U((r-3)/2,p-1)^2/2) = " << row.exact_bound_z2 << "\n"
              << "floor(U(r-2,p-1)U((r-3)/2,p-1)/2) = " << row.exact_bound_z3 << "\n";
  }
  return kExitOk;
}

struct OrderArgs {
  std::string p, r;
  std::int64_t e = 0, f = 1, a = 1;
  std::optional<unsigned> guard;
  bool json = false;
};

int cmd_order(const OrderArgs& args) {
  const FieldParams fp = make_params(Natural(args.p), Natural(args.r));
  const FieldElement x = build_element(fp, args.e, args.f, args.a);
  const MultiplicativeGroup group(fp, args.guard.value_or(default_guard()));
  const Natural ord = group.element_order(x);

  const Residue a = fp.reduce(args.a);
  const Natural thm1a = bound_thm1a(fp);
  const bool ok_a = ord >= thm1a;
  const bool b_applies = a != 1 && a != fp.p() - 1;
  const Natural thm1b = bound_thm1b(fp);
  const bool ok_b = !b_applies || ord >= thm1b;
  const bool is_period = x == gauss_period(fp);
  const bool ok_period = !is_period || (fp.p_to_s() - 1) % ord == 0;
  const bool ok = ok_a && ok_b && ok_period;

  if (args.json) {
    nlohmann::json j{{"element", format_element(x)},
                     {"order", ord.str()},
                     {"group_order", group.order().str()},
                     {"group_order_factors", group.factors().to_string()},
                     {"bound_thm1a", thm1a.str()},
                     {"thm1a", verdict(ok_a)},
                     {"ok", ok}};
    if (b_applies) {
      j["bound_thm1b"] = thm1b.str();
      j["thm1b"] = verdict(ok_b);
    }
    if (is_period) j["period_divides_p^s-1"] = verdict(ok_period);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "element        " << format_element(x) << (is_period ? "  (theta + theta^-1)" : "") << "\n"
              << "order          " << ord << "\n"
              << "group order    " << group.order() << " = " << group.factors().to_string() << "\n"
              << "bound U(r-2,p-1) = " << thm1a << "  " << verdict(ok_a) << "\n";
    if (b_applies) std::cout << "bound floor(U((r-3)/2,p-1)^2/2) = " << thm1b << "  " << verdict(ok_b) << "\n";
    if (is_period) std::cout << "order divides p^s - 1  " << verdict(ok_period) << "\n";
    std::cout << verdict(ok) << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

struct TableArgs {
  bool examples = false;
  std::vector<std::string> ps, rs;
  bool exact = false;
  bool json = false;
};

int cmd_table(const TableArgs& args) {
  if (args.ps.size() != args.rs.size()) {
    std::cerr << "--p and --r must be given in pairs\n";
    return kExitInvalid;
  }
  std::vector<BoundReport> rows;
  if (args.examples) {
    for (auto [p, r] : kExampleRows) rows.push_back(table_row(make_params(p, r)));
  }
  for (std::size_t i = 0; i < args.ps.size(); ++i) {
    rows.push_back(table_row(make_params(Natural(args.ps[i]), Natural(args.rs[i]))));
  }
  if (args.json) {
    std::cout << nlohmann::json(rows).dump(2) << "\n";
  } else {
    std::cout << render_table(rows, args.exact || !args.ps.empty());
  }
  return kExitOk;
}

struct VerifyArgs {
  SweepOptions options;
  bool json = false;
};

int cmd_verify(VerifyArgs args) {
  const SweepReport report = sweep(args.options);
  if (args.json) {
    std::cout << nlohmann::json(report).dump(2) << "\n";
  } else {
    std::cout << render_summary(report) << "\n";
    for (const auto& v : report.violations) {
      std::cout << "VIOLATION p=" << v.p << " r=" << v.r << " e=" << v.e << " f=" << v.f << " a=" << v.a << " "
                << v.check << ": " << v.detail << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitViolation;
}

struct PartitionArgs {
  unsigned n = 0;
  std::optional<unsigned> d;
  std::optional<unsigned> q_mod;
};

int cmd_partitions(const PartitionArgs& args) {
  std::cout << "U(" << args.n << ") = " << count_U(args.n) << "\n";
  if (args.d) std::cout << "U(" << args.n << "," << *args.d << ") = " << count_U_bounded(args.n, *args.d) << "\n";
  if (args.q_mod) {
    const unsigned d = *args.q_mod;
    const Natural q = count_Q(args.n, d);
    const Natural u = count_U_bounded(args.n, d - 1);
    std::cout << "Q(" << args.n << "," << d << ") = " << q << "\n"
              << "Glaisher U(" << args.n << "," << d - 1 << ") = " << u << " = Q(" << args.n << "," << d
              << ")  " << verdict(u == q) << "\n";
    if (u != q) return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds and exact orders for theta^e(theta^f + a) in F_p[x]/Phi_r(x)"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "closed-form and partition lower bounds for (p, r)");
  bound->add_option("p", bound_args.p, "characteristic")->required();
  bound->add_option("r", bound_args.r, "odd prime with p primitive mod r")->required();
  bound->add_flag("--exact", bound_args.exact, "also print the exact partition bounds");
  bound->add_flag("--json", bound_args.json, "emit JSON");

  OrderArgs order_args;
  auto* order = app.add_subcommand("order", "exact order of theta^e(theta^f + a) against its bounds");
  order->add_option("p", order_args.p)->required();
  order->add_option("r", order_args.r)->required();
  order->add_option("e", order_args.e)->required();
  order->add_option("f", order_args.f)->required();
  order->add_option("a", order_args.a)->required();
  order->add_option("--guard", order_args.guard, "bit limit for factoring p^(r-1) - 1");
  order->add_flag("--json", order_args.json, "emit JSON");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "bounds table, optionally with the built-in examples");
  table->add_flag("--examples", table_args.examples, "the four built-in example rows");
  table->add_option("--p", table_args.ps, "characteristic (repeatable, paired with --r)");
  table->add_option("--r", table_args.rs, "r (repeatable, paired with --p)");
  table->add_flag("--exact", table_args.exact, "append log2 of the exact partition bounds");
  table->add_flag("--json", table_args.json, "emit a JSON array");

  VerifyArgs verify_args;
  verify_args.options.bit_guard = default_guard();
  auto* verify = app.add_subcommand("verify", "exhaustive sweep over small fields");
  verify->add_option("--p-max", verify_args.options.p_max, "largest characteristic")->capture_default_str();
  verify->add_option("--r-max", verify_args.options.r_max, "largest r")->capture_default_str();
  verify->add_option("--guard", verify_args.options.bit_guard, "bit limit for group orders")->capture_default_str();
  verify->add_option("--cap", verify_args.options.enumeration_cap, "partition enumeration cap")
      ->capture_default_str();
  verify->add_option("--threads", verify_args.options.threads, "worker threads (0 = all cores)");
  verify->add_flag("--json", verify_args.json, "emit JSON");

  PartitionArgs partition_args;
  auto* partitions = app.add_subcommand("partitions", "partition counts U, U(n,d), Q(n,d)");
  partitions->add_option("n", partition_args.n)->required();
  partitions->add_option("--d", partition_args.d, "multiplicity cap");
  partitions->add_option("--q-mod", partition_args.q_mod, "count parts not divisible by D")
      ->check(CLI::Range(2u, 1u << 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*bound) return cmd_bound(bound_args);
    if (*order) return cmd_order(order_args);
    if (*table) return cmd_table(table_args);
    if (*verify) return cmd_verify(verify_args);
    if (*partitions) return cmd_partitions(partition_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
