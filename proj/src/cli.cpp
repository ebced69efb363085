#include "polycount/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "polycount/catalan.hpp"
#include "polycount/count_table.hpp"
#include "polycount/full_count.hpp"
#include "polycount/oeis.hpp"
#include "polycount/oracle.hpp"
#include "polycount/path_count.hpp"

namespace polycount::cli {

namespace {

int oracle_cap() {
  const char* raw = std::getenv("POLYCOUNT_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') {
    return kOracleDefaultCap;
  }
  int value = 0;
  const std::string text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("POLYCOUNT_ORACLE_CAP is not an integer: '" + text + "'");
  }
  return value;
}

int smallest_valid_n(const std::string& family, int m) {
  return family == "full" ? 2 * m - 2 : m;
}

// The count itself is total: below the closed form's domain the answer is 0
// (no component that small contains the fixed set).
BigInt family_count(const std::string& family, int n, int m, const CatalanTable& cat) {
  if (family == "full") {
    if (n < 2 * m - 2) {
      return 0;
    }
    return full_count_closed(n, m, gen_vector_full(m), cat);
  }
  if (n < m) {
    return 0;
  }
  return path_count_closed(n, m, gen_vector_path(m), cat);
}

std::vector<BigInt> family_coefficients(const std::string& family, int m) {
  return family == "full" ? gen_vector_full(m).coeffs : gen_vector_path(m).coeffs;
}

int run_catalan(int max_n, std::ostream& out) {
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(max_n));
  for (std::size_t n = 0; n <= cat.max_index(); ++n) {
    out << to_decimal(cat.at(n)) << '\n';
  }
  return kExitOk;
}

int run_count(const std::string& family, int m, int n, std::ostream& out) {
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(std::max(n, 0)) + 1);
  out << to_decimal(family_count(family, n, m, cat)) << '\n';
  return kExitOk;
}

int run_table(const std::string& family, int m, int n_from, int n_to,
              const std::string& format, std::ostream& out) {
  CountTable table;
  table.family = family;
  table.m = m;
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(std::max(n_to, 0)) + 1);
  for (int n = n_from; n <= n_to; ++n) {
    table.rows.push_back(CountRow{n, family_count(family, n, m, cat)});
  }
  out << (format == "json" ? to_json(table) + "\n" : to_csv(table));
  return kExitOk;
}

int run_coeffs(const std::string& family, int m, const std::string& format, std::ostream& out) {
  const std::vector<BigInt> coeffs = family_coefficients(family, m);
  if (format == "csv") {
    out << "index,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      out << (i + 1) << ',' << to_decimal(coeffs[i]) << '\n';
    }
    return kExitOk;
  }
  CountTable table;
  table.family = family;
  table.m = m;
  table.coefficients = coeffs;
  out << to_json(table) << '\n';
  return kExitOk;
}

int run_verify(const std::string& family, int max_n, int max_m, bool with_oracle,
               std::ostream& out, std::ostream& err) {
  int mismatches = 0;
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(max_n) + 1);

  if (family == "full") {
    int points = 0;
    for (int m = 2; m <= max_m; ++m) {
      const FullCoefficients coeffs = gen_vector_full(m);
      const std::vector<BigInt> row = full_count_convolution_row(m, max_n, cat);
      for (int n = 2 * m - 2; n <= max_n; ++n) {
        const BigInt closed = full_count_closed(n, m, coeffs, cat);
        if (closed != row[static_cast<std::size_t>(n)]) {
          ++mismatches;
          err << "mismatch: full m=" << m << " n=" << n << " closed=" << to_decimal(closed)
              << " convolution=" << to_decimal(row[static_cast<std::size_t>(n)]) << '\n';
        }
        ++points;
      }
      if (std::any_of(coeffs.coeffs.begin(), coeffs.coeffs.end(),
                      [](const BigInt& c) { return c.is_zero(); })) {
        ++mismatches;
        err << "mismatch: full coefficient vector m=" << m << " has a zero entry\n";
      }
    }
    out << "full closed-vs-convolution: " << points << " points checked\n";
    int kernels = 0;
    for (int m = 2; m <= max_m; ++m) {
      if (!kernel_check(m)) {
        ++mismatches;
        err << "mismatch: kernel identity fails at m=" << m << '\n';
      }
      ++kernels;
    }
    out << "full kernel identity: m=2.." << max_m << " (" << kernels << " checks)\n";
  } else {
    int points = 0;
    for (int m = 2; m <= max_m; ++m) {
      const PathCoefficients coeffs = gen_vector_path(m);
      const std::vector<BigInt> row = path_count_convolution_row(m, max_n, cat);
      for (int n = m; n <= max_n; ++n) {
        const BigInt closed = path_count_closed(n, m, coeffs, cat);
        const BigInt recur = path_count_recurrence(n, m);
        const BigInt conv = row[static_cast<std::size_t>(n)];
        if (closed != conv || recur != conv) {
          ++mismatches;
          err << "mismatch: path m=" << m << " n=" << n << " convolution=" << to_decimal(conv)
              << " recurrence=" << to_decimal(recur) << " closed=" << to_decimal(closed) << '\n';
        }
        ++points;
      }
      if (coeffs.coeffs != gen_vector_path_additive(m).coeffs) {
        ++mismatches;
        err << "mismatch: path vector routes disagree at m=" << m << '\n';
      }
      for (std::size_t l = 0; l < coeffs.coeffs.size(); ++l) {
        const bool positive = coeffs.coeffs[l] > 0;
        if (coeffs.coeffs[l].is_zero() || positive != (l % 2 == 0)) {
          ++mismatches;
          err << "mismatch: path vector m=" << m << " breaks sign alternation\n";
          break;
        }
      }
    }
    out << "path convolution-vs-recurrence-vs-closed: " << points << " points checked\n";
    out << "path generating vectors: matrix route, additive route, signs (m=2.." << max_m
        << ")\n";
  }

  if (with_oracle) {
    OracleOptions opts;
    opts.cap = oracle_cap();
    const VerifyReport report =
        verify_family(family == "full" ? Family::kFull : Family::kPath, max_n, max_m, opts);
    for (const VerifyPoint& point : report.points) {
      if (!point.match) {
        ++mismatches;
        err << "mismatch: oracle " << family << " m=" << point.m << " n=" << point.n
            << " oracle=" << to_decimal(point.oracle_count)
            << " formula=" << to_decimal(point.formula_count) << '\n';
      }
    }
    out << "oracle grid: " << report.points.size() << " points checked\n";
  }

  out << (mismatches == 0 ? "verify: PASS\n" : "verify: FAIL\n");
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_oeis_check(std::ostream& out, std::ostream& err) {
  bool all_pass = true;
  for (const OeisResult& result : run_oeis_checks()) {
    out << result.id << ": " << (result.pass ? "PASS" : "FAIL") << '\n';
    if (!result.pass) {
      all_pass = false;
      err << result.id << " mismatch: " << result.detail << '\n';
    }
  }
  return all_pass ? kExitOk : kExitMismatch;
}

int run_asymptotics(const std::string& family, int m, int n_from, int n_to, std::ostream& out) {
  const int start = std::max(n_from, smallest_valid_n(family, m));
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(std::max(n_to, 1)) + 1);
  out << "n,count,estimate,ratio\n";
  for (int n = start; n <= n_to; ++n) {
    const BigInt count = family_count(family, n, m, cat);
    const double estimate =
        family == "full" ? full_asymptotic(n, m) : path_asymptotic(n, m);
    const double ratio = count.convert_to<double>() / estimate;
    out << n << ',' << to_decimal(count) << ',' << std::setprecision(9) << estimate << ','
        << std::fixed << std::setprecision(6) << ratio << '\n';
    out << std::defaultfloat;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of n-vertex connected components of the degree-3 tree"};
  app.name("polycount");
  app.require_subcommand(1);

  const std::vector<std::string> families{"full", "path"};

  auto* cmd_catalan = app.add_subcommand("catalan", "Print C_0..C_N, one per line");
  int catalan_max = 0;
  cmd_catalan->add_option("--max", catalan_max, "Largest index N")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* cmd_count = app.add_subcommand("count", "Print one exact count");
  std::string count_family;
  int count_m = 0;
  int count_n = 0;
  cmd_count->add_option("--family", count_family, "Counting family")
      ->required()
      ->check(CLI::IsMember(families));
  cmd_count->add_option("-m,--boundary", count_m, "Boundary size (full) or path length (path)")
      ->required()
      ->check(CLI::Range(2, 1 << 20));
  cmd_count->add_option("-n,--vertices", count_n, "Component size")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* cmd_table = app.add_subcommand("table", "Emit a count table as CSV or JSON");
  std::string table_family;
  std::string table_format = "csv";
  int table_m = 0;
  int table_from = 0;
  int table_to = 0;
  cmd_table->add_option("--family", table_family)->required()->check(CLI::IsMember(families));
  cmd_table->add_option("-m,--boundary", table_m)->required()->check(CLI::Range(2, 1 << 20));
  cmd_table->add_option("--n-from", table_from)->required()->check(CLI::NonNegativeNumber);
  cmd_table->add_option("--n-to", table_to)->required()->check(CLI::NonNegativeNumber);
  cmd_table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_coeffs = app.add_subcommand("coeffs", "Print the generating vector");
  std::string coeffs_family;
  std::string coeffs_format = "json";
  int coeffs_m = 0;
  cmd_coeffs->add_option("--family", coeffs_family)->required()->check(CLI::IsMember(families));
  cmd_coeffs->add_option("-m,--boundary", coeffs_m)->required()->check(CLI::Range(2, 1 << 20));
  cmd_coeffs->add_option("--format", coeffs_format)->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "Cross-check the exact evaluators");
  std::string verify_family_name;
  int verify_max_n = 0;
  int verify_max_m = 0;
  bool verify_oracle = false;
  cmd_verify->add_option("--family", verify_family_name)
      ->required()
      ->check(CLI::IsMember(families));
  cmd_verify->add_option("--max-n", verify_max_n)->required()->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max-m", verify_max_m)->required()->check(CLI::Range(2, 4096));
  cmd_verify->add_flag("--oracle", verify_oracle, "Also run the enumeration oracle");

  auto* cmd_oeis = app.add_subcommand("oeis-check", "Validate the embedded OEIS fixtures");

  auto* cmd_asym = app.add_subcommand("asymptotics", "Exact counts vs the 4^k/k^1.5 estimate");
  std::string asym_family;
  int asym_m = 0;
  int asym_from = 0;
  int asym_to = 0;
  cmd_asym->add_option("--family", asym_family)->required()->check(CLI::IsMember(families));
  cmd_asym->add_option("-m,--boundary", asym_m)->required()->check(CLI::Range(2, 1 << 20));
  cmd_asym->add_option("--n-from", asym_from)->required()->check(CLI::NonNegativeNumber);
  cmd_asym->add_option("--n-to", asym_to)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_catalan->parsed()) {
      return run_catalan(catalan_max, out);
    }
    if (cmd_count->parsed()) {
      return run_count(count_family, count_m, count_n, out);
    }
    if (cmd_table->parsed()) {
      return run_table(table_family, table_m, table_from, table_to, table_format, out);
    }
    if (cmd_coeffs->parsed()) {
      return run_coeffs(coeffs_family, coeffs_m, coeffs_format, out);
    }
    if (cmd_verify->parsed()) {
      return run_verify(verify_family_name, verify_max_n, verify_max_m, verify_oracle, out, err);
    }
    if (cmd_oeis->parsed()) {
      return run_oeis_check(out, err);
    }
    if (cmd_asym->parsed()) {
      return run_asymptotics(asym_family, asym_m, asym_from, asym_to, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace polycount::cli
