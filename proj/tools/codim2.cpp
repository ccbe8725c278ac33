// codim2: command-line front end for the gate engine and scanner.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "codim2/arithmetic.hpp"
#include "codim2/gates.hpp"
#include "codim2/genus5.hpp"
#include "codim2/json_io.hpp"
#include "codim2/reference_values.hpp"
#include "codim2/scan.hpp"
#include "codim2/series.hpp"
#include "codim2/transcendental.hpp"

namespace {

using codim2::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct CheckArgs {
  int n = 0;
  std::int64_t d = 0, e = 0, s = 0;
  bool assume_non_ci = true;
  std::string format = "json";
};

int run_check(const CheckArgs& a) {
  const auto inv = codim2::Invariants::make(a.n, a.d, a.e, a.s);
  codim2::GateOptions opts;
  opts.assume_non_ci = a.assume_non_ci;
  const codim2::GateSet set = codim2::gate_composite(inv, opts);
  if (a.format == "text") {
    std::cout << codim2::to_text(inv, set);
  } else {
    print(codim2::to_json(inv, set));
  }
  return kExitOk;
}

struct ScanArgs {
  std::string n = "4", d = "1", e = "0", s = "1";
  bool assume_non_ci = true;
  std::vector<std::string> gates;
  std::string output;
  std::string format = "csv";
  unsigned workers = 1;
  std::uint64_t cap = 100'000'000;
};

int run_scan(const ScanArgs& a) {
  codim2::ScanConfig cfg;
  cfg.n = codim2::parse_range(a.n);
  cfg.d = codim2::parse_range(a.d);
  cfg.e = codim2::parse_range(a.e);
  cfg.s = codim2::parse_range(a.s);
  cfg.assume_non_ci = a.assume_non_ci;
  cfg.gates = {a.gates.begin(), a.gates.end()};
  cfg.output = a.output;
  cfg.format = a.format == "json" ? codim2::ScanFormat::Json : codim2::ScanFormat::Csv;
  cfg.workers = a.workers;
  cfg.cap = a.cap;

  const std::uint64_t total = codim2::validate(cfg);
  std::cerr << "# scanning " << total << " tuples\n";
  codim2::ScanSummary summary;
  if (cfg.output.empty()) {
    summary = codim2::write_scan(cfg, std::cout);
    std::cerr << codim2::summary_text(summary);
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw codim2::Error(codim2::ErrorKind::Io, "cannot open " + cfg.output);
    summary = codim2::write_scan(cfg, file);
    file.flush();
    if (!file) throw codim2::Error(codim2::ErrorKind::Io, "write failed for " + cfg.output);
    std::cout << codim2::summary_text(summary);
  }
  return kExitOk;
}

json rational_list(const codim2::TruncatedSeries& series) {
  json out = json::array();
  for (const auto& c : series.coefficients()) out.push_back(codim2::to_json_value(c));
  return out;
}

// Splices `key = value` lines from the scan config file into the argument
// list ahead of the explicit flags, skipping keys given on the command line.
std::vector<std::string> expand_scan_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());  // CLI11 parses vectors back to front
  std::vector<std::string> fwd(argv + 1, argv + argc);
  if (fwd.empty() || fwd.front() != "scan") return args;

  std::string path;
  std::set<std::string> given;
  for (std::size_t i = 1; i < fwd.size(); ++i) {
    const std::string& a = fwd[i];
    if (a.rfind("--", 0) != 0) continue;
    const auto eq = a.find('=');
    const std::string key = a.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
    given.insert(key);
    if (key == "config") {
      if (eq != std::string::npos) {
        path = a.substr(eq + 1);
      } else if (i + 1 < fwd.size()) {
        path = fwd[i + 1];
      }
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> merged{"scan"};
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (given.count(item.name) || item.inputs.empty()) continue;
    std::string value = item.inputs.front();
    for (std::size_t k = 1; k < item.inputs.size(); ++k) value += "," + item.inputs[k];
    merged.push_back("--" + item.name + "=" + value);
  }
  merged.insert(merged.end(), fwd.begin() + 1, fwd.end());
  std::reverse(merged.begin(), merged.end());
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical gates for smooth codimension-two subvarieties of P^n"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run the composite gate pipeline on (n, d, e, s)");
  check->add_option("--n", check_args.n, "ambient dimension")->required();
  check->add_option("--d", check_args.d, "degree")->required();
  check->add_option("--e", check_args.e, "speciality")->required();
  check->add_option("--s", check_args.s, "least hypersurface degree")->required();
  check->add_option("--assume-non-ci", check_args.assume_non_ci, "treat X as not a complete intersection");
  check->add_option("--format", check_args.format)->check(CLI::IsMember({"json", "text"}));

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Run the pipeline over a box of tuples");
  std::string config_path;
  scan->add_option("--config", config_path, "flat key = value file; flags override it");
  scan->add_option("--n", scan_args.n, "n or lo..hi");
  scan->add_option("--d", scan_args.d, "d or lo..hi");
  scan->add_option("--e", scan_args.e, "e or lo..hi");
  scan->add_option("--s", scan_args.s, "s or lo..hi");
  scan->add_option("--assume-non-ci", scan_args.assume_non_ci);
  scan->add_option("--gates", scan_args.gates, "subset of gate ids")->delimiter(',');
  scan->add_option("--output", scan_args.output, "output path (default stdout)");
  scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--workers", scan_args.workers)->check(CLI::PositiveNumber);
  scan->add_option("--cap", scan_args.cap, "maximum tuple count");

  std::string c1, c2, c1l;
  std::size_t order = 0;
  auto* series = app.add_subcommand("series", "Expand (1 + c1L t)/(1 - C1 t + C2 t^2)");
  series->add_option("--c1", c1)->required();
  series->add_option("--c2", c2)->required();
  series->add_option("--c1l", c1l)->required();
  series->add_option("--order", order)->required();

  int alpha_n = 0;
  std::int64_t alpha_e = 0, alpha_s = 0;
  auto* alpha = app.add_subcommand("alpha", "Solve for alpha and the panoplie ratios");
  alpha->add_option("--c1", c1)->required();
  alpha->add_option("--c2", c2)->required();
  alpha->add_option("--s", alpha_s)->required();
  alpha->add_option("--n", alpha_n)->required();
  alpha->add_option("--e", alpha_e)->required();

  int m_max = 5, m_digits = 6;
  std::string m_format = "json";
  auto* mtable = app.add_subcommand("m-table", "Tabulate m(alpha) for integer alpha");
  mtable->add_option("--max", m_max)->check(CLI::Range(2, 100000));
  mtable->add_option("--digits", m_digits)->check(CLI::Range(1, 60));
  mtable->add_option("--format", m_format)->check(CLI::IsMember({"json", "text"}));

  int ar_n = 0;
  std::string delta;
  std::int64_t limit = 0;
  auto* schwarz = app.add_subcommand("schwarzenberger", "Trace-integrality test");
  schwarz->add_option("--n", ar_n)->required();
  schwarz->add_option("--c1", c1)->required();
  schwarz->add_option("--c2", c2)->required();
  auto* qr = app.add_subcommand("qr", "Quadratic-residue test for primes below n");
  qr->add_option("--n", ar_n)->required();
  qr->add_option("--delta", delta)->required();
  auto* dmin = app.add_subcommand("delta-min", "Smallest |Delta| passing the trace test");
  dmin->add_option("--n", ar_n)->required();
  dmin->add_option("--limit", limit)->required();

  std::int64_t g_d = 0, g_s = 0, g_pi = 0, g_m = -1;
  bool g_paper = false;
  auto* mu = app.add_subcommand("mu", "mu and its bounds for threefolds in P^5");
  mu->add_option("--d", g_d)->required();
  mu->add_option("--s", g_s)->required();
  mu->add_option("--pi", g_pi)->required();
  auto* gint = app.add_subcommand("genus-interval", "Allowed sectional genera");
  gint->add_option("--d", g_d)->required();
  gint->add_option("--s", g_s)->required();
  auto* chi = app.add_subcommand("chi", "Euler characteristic of I_{C,S}(m)");
  chi->add_option("--d", g_d)->required();
  chi->add_option("--s", g_s)->required();
  chi->add_option("--pi", g_pi)->required();
  chi->add_option("--m", g_m, "twist (default [d/s])");
  chi->add_flag("--paper", g_paper, "also evaluate the closed epsilon formula");

  std::string ref_format = "text";
  auto* refs = app.add_subcommand("paper-numbers", "Reproduce every published constant");
  refs->add_option("--format", ref_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(expand_scan_config(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(check_args);
    if (*scan) return run_scan(scan_args);
    if (*series) {
      const auto out = codim2::positivity_series(codim2::BigInt(c1), codim2::BigInt(c2),
                                                 codim2::BigInt(c1l), order);
      print(rational_list(out));
      return kExitOk;
    }
    if (*alpha) {
      const codim2::BigInt bc1(c1), bc2(c2);
      if (bc1 != codim2::BigInt(alpha_e) + alpha_n - 1) {
        std::cerr << "error: --c1 must equal e+n-1\n";
        return kExitUsage;
      }
      const codim2::BigInt d = bc2 + alpha_e + alpha_n;
      if (d < 1 || d > std::numeric_limits<std::int64_t>::max()) {
        std::cerr << "error: implied degree d = C2+e+n out of range\n";
        return kExitUsage;
      }
      const auto inv = codim2::Invariants::make(alpha_n, static_cast<std::int64_t>(d), alpha_e, alpha_s);
      const auto sol = codim2::solve_alpha(codim2::spectral(inv), inv);
      codim2::verify_panoplie(sol, inv);
      json j = codim2::to_json(sol);
      j["d"] = static_cast<std::int64_t>(d);
      print(j);
      return kExitOk;
    }
    if (*mtable) {
      const auto table = codim2::m_table(m_max);
      if (m_format == "text") {
        for (const auto& [a, m] : table) {
          std::cout << std::setw(6) << a << "  " << codim2::to_fixed(m, m_digits) << '\n';
        }
      } else {
        json rows = json::array();
        for (const auto& [a, m] : table) rows.push_back({{"alpha", a}, {"m", codim2::to_fixed(m, m_digits)}});
        print(rows);
      }
      return kExitOk;
    }
    if (*schwarz) {
      print(codim2::to_json(codim2::schwarzenberger_check(ar_n, codim2::BigInt(c1), codim2::BigInt(c2))));
      return kExitOk;
    }
    if (*qr) {
      print(codim2::to_json(codim2::qr_claim_check(ar_n, codim2::BigInt(delta))));
      return kExitOk;
    }
    if (*dmin) {
      const auto result = codim2::scan_negative_discriminants(ar_n, limit);
      print(codim2::to_json(result));
      if (!result.delta) {
        std::cerr << "NotFoundWithinLimit: no Delta with |Delta| <= " << limit << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }
    if (*mu) {
      const codim2::P5Candidate c{g_d, g_s, g_pi};
      print({{"mu", codim2::to_json_value(codim2::mu(c))}, {"gate", codim2::to_json(codim2::gate_mu(c))}});
      return kExitOk;
    }
    if (*gint) {
      const auto iv = codim2::genus_interval(g_d, g_s);
      print({{"pi_min", codim2::to_json_value(iv.pi_min)},
             {"pi_max", codim2::to_json_value(iv.pi_max)},
             {"length", codim2::to_json_value(codim2::Rational(iv.pi_max - iv.pi_min))}});
      return kExitOk;
    }
    if (*chi) {
      if (g_s < 1) throw codim2::Error(codim2::ErrorKind::InvalidInput, "s must be >= 1");
      const std::int64_t m = g_m >= 0 ? g_m : g_d / g_s;
      json j{{"m", m}, {"chi", codim2::to_json_value(codim2::chi_oracle(g_d, g_s, g_pi, m))}};
      if (g_paper) {
        j["chi_paper"] = codim2::to_json_value(codim2::chi_paper(g_d, g_s, g_pi));
        j["chi_oracle_at_floor"] = codim2::to_json_value(codim2::chi_oracle(g_d, g_s, g_pi, g_d / g_s));
      }
      print(j);
      return kExitOk;
    }
    if (*refs) {
      const auto items = codim2::reference_checks();
      bool all = true;
      json rows = json::array();
      for (const auto& it : items) {
        all = all && it.pass;
        if (ref_format == "text") {
          std::cout << (it.pass ? "PASS  " : "FAIL  ") << it.id << "  expected " << it.expected
                    << "  observed " << it.observed << "  [" << it.citation << "]\n";
        }
        rows.push_back({{"id", it.id}, {"citation", it.citation}, {"expected", it.expected},
                        {"observed", it.observed}, {"pass", it.pass}});
      }
      if (ref_format == "json") print(rows);
      return all ? kExitOk : kExitFailure;
    }
  } catch (const codim2::Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == codim2::ErrorKind::InvalidInput ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
