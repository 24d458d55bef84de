// Command-line front end: emits coefficient tables, evaluates single values,
// and runs the identity verification suites with JSON reports.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invol/caps.hpp"
#include "invol/closed_forms.hpp"
#include "invol/geninv.hpp"
#include "invol/permutation.hpp"
#include "invol/verify.hpp"

namespace {

using invol::Int;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct TableRequest {
  std::string kind;
  int n = -1;
  int n_max = -1;
  int m_max = -1;
  std::string format = "csv";
  bool header = false;
  bool check = false;
  int threads = 1;
};

struct VerifyRequest {
  std::string identity;
  int n_max = -1;
  int m_max = -1;
  int s_max = -1;
  int u_max = -1;
  int t_max = -1;
  int sum_n_max = -1;
  int threads = 1;
};

// One emitted table line: leading integer indices plus the exact value.
struct Row {
  std::vector<long long> indices;
  std::string value;
};

struct Table {
  std::vector<std::string> columns;  // e.g. {"n", "k", "value"}
  std::vector<Row> rows;
};

void append_stat_rows(Table& table, int n, const std::vector<Int>& entries) {
  for (std::size_t k = 0; k < entries.size(); ++k)
    table.rows.push_back({{n, static_cast<long long>(k)}, entries[k].str()});
}

// Closed-form f rows with optional enumeration cross-check.
std::string check_f_rows(int n_lo, int n_hi, invol::StatKind kind) {
  for (int n = n_lo; n <= n_hi; ++n) {
    const invol::StatTable oracle = invol::brute_stat_table(n, kind);
    for (std::size_t k = 0; k < oracle.entries.size(); ++k) {
      Int expected;
      switch (kind) {
        case invol::StatKind::involution_f: expected = invol::f_signed(n, static_cast<int>(k)); break;
        case invol::StatKind::involution_f_plus:
          expected = invol::f_split(n, static_cast<int>(k)).first;
          break;
        default: expected = invol::f_split(n, static_cast<int>(k)).second; break;
      }
      if (expected != oracle.entries[k])
        return "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
               ": formula=" + expected.str() + " enumeration=" + oracle.entries[k].str();
    }
  }
  return {};
}

int emit_table(const TableRequest& req) {
  const bool has_n = req.n >= 0;
  const bool has_n_max = req.n_max >= 0;
  if (has_n == has_n_max && req.kind != "a-hat") {
    std::cerr << "table: exactly one of --n or --n-max is required\n";
    return kExitUsage;
  }
  const int n_lo = has_n ? req.n : 0;
  const int n_hi = has_n ? req.n : req.n_max;

  Table table;
  std::string mismatch;

  if (req.kind == "f" || req.kind == "f-plus" || req.kind == "f-minus") {
    table.columns = {"n", "k", "value"};
    const bool brute = req.kind != "f";
    for (int n = n_lo; n <= n_hi; ++n) {
      if (req.kind == "f") {
        append_stat_rows(table, n, invol::f_signed_row(n));
      } else {
        const auto [plus, minus] = invol::brute_f_split(n);
        append_stat_rows(table, n, req.kind == "f-plus" ? plus.entries : minus.entries);
      }
    }
    if (req.check) {
      const auto kind = req.kind == "f"        ? invol::StatKind::involution_f
                        : req.kind == "f-plus" ? invol::StatKind::involution_f_plus
                                               : invol::StatKind::involution_f_minus;
      // For the brute kinds the cross-check runs the other direction: the
      // inversion formula against the enumerated table.
      mismatch = check_f_rows(n_lo, n_hi, kind);
    }
  } else if (req.kind == "a-eulerian" || req.kind == "b-signed") {
    if (req.check) {
      std::cerr << "table: no independent route to cross-check kind '" << req.kind << "'\n";
      return kExitUsage;
    }
    table.columns = {"n", "k", "value"};
    const auto kind =
        req.kind == "a-eulerian" ? invol::StatKind::eulerian_a : invol::StatKind::signed_b;
    for (int n = n_lo; n <= n_hi; ++n) {
      const invol::StatTable t = req.threads > 1
                                     ? invol::brute_stat_table_parallel(n, kind, req.threads)
                                     : invol::brute_stat_table(n, kind);
      append_stat_rows(table, n, t.entries);
    }
  } else if (req.kind == "a-hat") {
    if (!has_n || req.m_max < 0) {
      std::cerr << "table: kind a-hat requires --n and --m-max\n";
      return kExitUsage;
    }
    table.columns = {"n", "m", "value"};
    const std::vector<Int> row = invol::a_hat_row(req.n, req.m_max);
    append_stat_rows(table, req.n, row);
    if (req.check) {
      for (int m = 0; m <= req.m_max; ++m) {
        const Int oracle = invol::a_hat_bruteforce(req.n, m);
        if (row[static_cast<std::size_t>(m)] != oracle) {
          mismatch = "n=" + std::to_string(req.n) + ",m=" + std::to_string(m) +
                     ": formula=" + row[static_cast<std::size_t>(m)].str() +
                     " enumeration=" + oracle.str();
          break;
        }
      }
    }
  } else if (req.kind == "F1") {
    if (!has_n_max) {
      std::cerr << "table: kind F1 requires --n-max\n";
      return kExitUsage;
    }
    table.columns = {"n", "value"};
    const std::vector<Int> seq = invol::F1_recurrence(req.n_max);
    for (int n = 0; n <= req.n_max; ++n)
      table.rows.push_back({{n}, seq[static_cast<std::size_t>(n)].str()});
    if (req.check) {
      for (int n = 0; n <= req.n_max; ++n) {
        const Int closed = invol::F1_closed(n);
        if (closed != seq[static_cast<std::size_t>(n)]) {
          mismatch = "n=" + std::to_string(n) + ": closed=" + closed.str() +
                     " recurrence=" + seq[static_cast<std::size_t>(n)].str();
          break;
        }
      }
    }
  } else {
    std::cerr << "table: unknown kind '" << req.kind << "'\n";
    return kExitUsage;
  }

  if (req.format == "csv") {
    if (req.header) {
      for (std::size_t c = 0; c < table.columns.size(); ++c)
        std::cout << (c ? "," : "") << table.columns[c];
      std::cout << "\n";
    }
    for (const Row& row : table.rows) {
      for (long long idx : row.indices) std::cout << idx << ",";
      std::cout << row.value << "\n";
    }
  } else if (req.format == "json") {
    json out;
    out["kind"] = req.kind;
    out["columns"] = table.columns;
    out["rows"] = json::array();
    for (const Row& row : table.rows) {
      json r = json::array();
      for (long long idx : row.indices) r.push_back(idx);
      r.push_back(row.value);
      out["rows"].push_back(std::move(r));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cerr << "table: unknown format '" << req.format << "'\n";
    return kExitUsage;
  }

  if (req.check && !mismatch.empty()) {
    std::cerr << "cross-check failed: " << mismatch << "\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

json report_to_json(const invol::CheckReport& report) {
  json out;
  out["identity"] = report.identity;
  out["range"] = report.range;
  out["status"] = report.ok() ? "ok" : "fail";
  out["points_checked"] = report.points_checked;
  out["counterexamples"] = json::array();
  for (const auto& cex : report.counterexamples)
    out["counterexamples"].push_back({{"point", cex.point}, {"detail", cex.detail}});
  if (report.n0) out["n0"] = *report.n0;
  if (!report.notes.empty()) out["notes"] = report.notes;
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

int run_verify(const VerifyRequest& req) {
  const auto pick = [](int flag, int fallback) { return flag >= 0 ? flag : fallback; };
  const int threads = req.threads;

  std::vector<invol::CheckReport> reports;
  if (req.identity == "prop1-fibers") {
    reports.push_back(invol::check_prop1_fibers(pick(req.n_max, 7), pick(req.m_max, 6), threads));
  } else if (req.identity == "prop2-even-count") {
    reports.push_back(
        invol::check_prop2_even_count(pick(req.n_max, 8), pick(req.m_max, 6), threads));
  } else if (req.identity == "eq34-binomial") {
    reports.push_back(
        invol::check_eq34_binomial(pick(req.n_max, 10), pick(req.m_max, 10), threads));
  } else if (req.identity == "thm3-bruteforce") {
    reports.push_back(invol::check_thm3_bruteforce(pick(req.n_max, 12), threads));
  } else if (req.identity == "worpitzky") {
    reports.push_back(invol::check_worpitzky(pick(req.n_max, 20), pick(req.s_max, 20), threads));
  } else if (req.identity == "gf-identity") {
    reports.push_back(invol::check_gf_identity(pick(req.u_max, 16), pick(req.t_max, 16), threads));
  } else if (req.identity == "zeilberger") {
    reports.push_back(invol::check_zeilberger(pick(req.n_max, 200), threads));
  } else if (req.identity == "f1-fourway") {
    reports.push_back(
        invol::check_f1_fourway(pick(req.n_max, 500), pick(req.sum_n_max, 60), threads));
  } else if (req.identity == "ahat-routes") {
    reports.push_back(invol::check_ahat_routes(pick(req.n_max, 60), pick(req.m_max, 60), threads));
  } else if (req.identity == "all") {
    reports = invol::check_all(threads);
  } else {
    std::cerr << "verify: unknown identity '" << req.identity << "'\n";
    return kExitUsage;
  }

  bool all_ok = true;
  if (reports.size() == 1) {
    std::cout << report_to_json(reports.front()).dump(2) << "\n";
    all_ok = reports.front().ok();
  } else {
    json out = json::array();
    for (const auto& report : reports) {
      out.push_back(report_to_json(report));
      all_ok = all_ok && report.ok();
    }
    std::cout << out.dump(2) << "\n";
  }
  return all_ok ? kExitOk : kExitCounterexample;
}

int run_eval(const std::string& expr, const std::vector<long long>& args) {
  const auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw CLI::ValidationError("eval: '" + expr + "' takes " + std::to_string(want) +
                                 " integer argument(s), got " + std::to_string(args.size()));
  };
  const auto as_int = [](long long v) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw CLI::ValidationError("eval: argument out of range");
    return static_cast<int>(v);
  };

  Int value;
  if (expr == "f") {
    arity(2);
    value = invol::f_signed(as_int(args[0]), as_int(args[1]));
  } else if (expr == "a-hat") {
    arity(2);
    value = invol::a_hat(as_int(args[0]), as_int(args[1]));
  } else if (expr == "a-plus") {
    arity(2);
    value = invol::a_plus(as_int(args[0]), as_int(args[1]));
  } else if (expr == "a-minus") {
    arity(2);
    value = invol::a_minus(as_int(args[0]), as_int(args[1]));
  } else if (expr == "a-total") {
    arity(2);
    value = invol::a_total(as_int(args[0]), as_int(args[1]));
  } else if (expr == "F1") {
    arity(1);
    value = invol::F1_closed(as_int(args[0]));
  } else if (expr == "i-plus") {
    arity(1);
    value = invol::i_plus(as_int(args[0]));
  } else if (expr == "inv-count") {
    arity(1);
    value = invol::involutions_count(as_int(args[0]));
  } else {
    std::cerr << "eval: unknown expression '" << expr << "'\n";
    return kExitUsage;
  }
  std::cout << value.str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tables and identity checks for signed involution statistics"};
  app.require_subcommand(1);

  TableRequest table_req;
  CLI::App* table = app.add_subcommand("table", "Emit a coefficient table");
  table->add_option("kind", table_req.kind, "One of: f, f-plus, f-minus, a-eulerian, b-signed, a-hat, F1")
      ->required();
  table->add_option("--n", table_req.n, "Single row index n");
  table->add_option("--n-max", table_req.n_max, "Emit all rows 0..n-max");
  table->add_option("--m-max", table_req.m_max, "Column bound for kind a-hat");
  table->add_option("--format", table_req.format, "csv (default) or json");
  table->add_flag("--header", table_req.header, "Prepend a CSV header row");
  table->add_flag("--check", table_req.check, "Cross-check against the independent route");
  table->add_option("--threads", table_req.threads, "Worker threads for enumeration kinds");

  VerifyRequest verify_req;
  CLI::App* verify = app.add_subcommand("verify", "Verify an identity over a range");
  verify
      ->add_option("identity", verify_req.identity,
                   "One of: prop1-fibers, prop2-even-count, eq34-binomial, thm3-bruteforce, "
                   "worpitzky, gf-identity, zeilberger, f1-fourway, ahat-routes, all")
      ->required();
  verify->add_option("--n-max", verify_req.n_max, "Override the default n range");
  verify->add_option("--m-max", verify_req.m_max, "Override the default m range");
  verify->add_option("--s-max", verify_req.s_max, "Override the default s range (worpitzky)");
  verify->add_option("--u-max", verify_req.u_max, "Override the u window (gf-identity)");
  verify->add_option("--t-max", verify_req.t_max, "Override the t window (gf-identity)");
  verify->add_option("--sum-n-max", verify_req.sum_n_max, "Override the row-sum range (f1-fourway)");
  verify->add_option("--threads", verify_req.threads, "Worker threads across grid cells");

  std::string eval_expr;
  std::vector<long long> eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a single exact value");
  eval->add_option("expr", eval_expr,
                   "One of: f, a-hat, a-plus, a-minus, a-total, F1, i-plus, inv-count")
      ->required();
  eval->add_option("args", eval_args, "Integer arguments for the expression");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return emit_table(table_req);
    if (verify->parsed()) return run_verify(verify_req);
    if (eval->parsed()) return run_eval(eval_expr, eval_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const invol::cap_exceeded& e) {
    std::cerr << "enumeration cap exceeded: " << e.what() << "\n";
    std::cerr << "(raise INVOL_CAP_SN / INVOL_CAP_INVOLUTION / INVOL_CAP_GENINV_N / "
                 "INVOL_CAP_GENINV_M to enumerate further)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
