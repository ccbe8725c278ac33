#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "codim2/error.hpp"
#include "codim2/gates.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"
#include "codim2/series.hpp"

namespace codim2 {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::uint64_t size() const { return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "7", "3..9" or "3:9".
inline IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw Error(ErrorKind::InvalidInput, "bad integer range '" + text + "'");
    }
    return v;
  };
  std::size_t sep = text.find("..");
  std::size_t width = 2;
  if (sep == std::string::npos) {
    sep = text.find(':');
    width = 1;
  }
  if (sep == std::string::npos) {
    const std::int64_t v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, sep)), to_int(text.substr(sep + width))};
}

enum class ScanFormat { Csv, Json };

struct ScanConfig {
  IntRange n{4, 4};
  IntRange d{1, 1};
  IntRange e{0, 0};
  IntRange s{1, 1};
  bool assume_non_ci = true;
  std::set<std::string> gates;
  std::string output;  // empty: standard output
  ScanFormat format = ScanFormat::Csv;
  unsigned workers = 1;
  std::uint64_t cap = 100'000'000;
};

/// Number of tuples in the box; throws on empty ranges, invalid bounds, or a
/// count above the cap.
inline std::uint64_t validate(const ScanConfig& cfg) {
  auto check = [](const IntRange& r, const char* name) {
    if (r.hi < r.lo) {
      throw Error(ErrorKind::InvalidInput, std::string("empty range for ") + name);
    }
  };
  check(cfg.n, "n");
  check(cfg.d, "d");
  check(cfg.e, "e");
  check(cfg.s, "s");
  if (cfg.n.lo < 4) throw Error(ErrorKind::InvalidInput, "n must be >= 4");
  if (cfg.d.lo < 1) throw Error(ErrorKind::InvalidInput, "d must be >= 1");
  if (cfg.s.lo < 1) throw Error(ErrorKind::InvalidInput, "s must be >= 1");
  if (cfg.workers < 1) throw Error(ErrorKind::InvalidInput, "workers must be >= 1");
  for (const auto& g : cfg.gates) {
    if (!is_known_gate(g)) throw Error(ErrorKind::InvalidInput, "unknown gate id '" + g + "'");
  }
  const BigInt total = BigInt(cfg.n.size()) * cfg.d.size() * cfg.e.size() * cfg.s.size();
  if (total > cfg.cap) {
    throw Error(ErrorKind::CapExceeded,
                to_string(total) + " tuples exceed the cap of " + std::to_string(cfg.cap));
  }
  return static_cast<std::uint64_t>(total);
}

struct ScanRow {
  Invariants inv;
  Overall verdict;
  std::string first_fail;  // "-" when no gate failed
  BigInt z;
  BigInt delta;
  BigInt u2, u3, u4;
  std::optional<Real> alpha;
};

inline ScanRow evaluate_row(const Invariants& inv, const GateOptions& opts) {
  const GateSet set = gate_composite(inv, opts);
  const USequence u = u_recurrence(inv, 4);
  const GateReport* fail = set.first_failure();
  return {inv,
          set.overall,
          fail ? fail->gate_id : std::string("-"),
          inv.z(),
          normalize(inv).delta,
          u.values[2],
          u.values[3],
          u.values[4],
          set.alpha};
}

struct ScanSummary {
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> by_verdict;
  std::map<std::string, std::uint64_t> by_first_fail;

  void add(const ScanRow& row) {
    ++total;
    ++by_verdict[std::string(to_string(row.verdict))];
    if (row.first_fail != "-") ++by_first_fail[row.first_fail];
  }
};

/// Tuple with lexicographic rank `index` in the (n, d, e, s) box.
inline Invariants tuple_at(const ScanConfig& cfg, std::uint64_t index) {
  const std::uint64_t ns = cfg.s.size(), ne = cfg.e.size(), nd = cfg.d.size();
  const auto s = cfg.s.lo + static_cast<std::int64_t>(index % ns);
  index /= ns;
  const auto e = cfg.e.lo + static_cast<std::int64_t>(index % ne);
  index /= ne;
  const auto d = cfg.d.lo + static_cast<std::int64_t>(index % nd);
  index /= nd;
  const auto n = cfg.n.lo + static_cast<std::int64_t>(index);
  return Invariants::make(static_cast<int>(n), d, e, s);
}

/// Evaluates every tuple of the box and hands rows to `sink` in lexicographic
/// order. Workers pull fixed-size chunks from a shared counter inside each
/// block; the calling thread emits each block once it is complete.
inline ScanSummary scan(const ScanConfig& cfg, const std::function<void(const ScanRow&)>& sink) {
  const std::uint64_t total = validate(cfg);
  GateOptions opts;
  opts.assume_non_ci = cfg.assume_non_ci;
  opts.enabled = cfg.gates;

  constexpr std::uint64_t kBlock = 1u << 14;
  constexpr std::uint64_t kChunk = 64;
  ScanSummary summary;
  std::vector<std::optional<ScanRow>> block;
  for (std::uint64_t start = 0; start < total; start += kBlock) {
    const std::uint64_t len = std::min(kBlock, total - start);
    block.assign(len, std::nullopt);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(kChunk);
        if (c >= len) return;
        const std::uint64_t end = std::min(len, c + kChunk);
        for (std::uint64_t i = c; i < end; ++i) {
          block[i] = evaluate_row(tuple_at(cfg, start + i), opts);
        }
      }
    };
    const unsigned extra = std::min<std::uint64_t>(cfg.workers, (len + kChunk - 1) / kChunk) - 1;
    std::vector<std::thread> pool;
    pool.reserve(extra);
    for (unsigned w = 0; w < extra; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& row : block) {
      summary.add(*row);
      sink(*row);
    }
  }
  return summary;
}

inline constexpr const char* kCsvHeader = "n,d,e,s,z,delta,verdict,first_fail,u2,u3,u4,alpha";

inline std::string csv_line(const ScanRow& r) {
  std::string out;
  out += std::to_string(r.inv.n()) + "," + std::to_string(r.inv.d()) + "," +
         std::to_string(r.inv.e()) + "," + std::to_string(r.inv.s()) + ",";
  out += to_string(r.z) + "," + to_string(r.delta) + ",";
  out += std::string(to_string(r.verdict)) + "," + r.first_fail + ",";
  out += to_string(r.u2) + "," + to_string(r.u3) + "," + to_string(r.u4) + ",";
  if (r.alpha) out += to_fixed(*r.alpha, 6);
  return out;
}

inline nlohmann::json row_json(const ScanRow& r) {
  auto num = [](const BigInt& x) -> nlohmann::json {
    if (fits_int64(x)) return static_cast<std::int64_t>(x);
    return x.str();
  };
  return {{"n", r.inv.n()},
          {"d", r.inv.d()},
          {"e", r.inv.e()},
          {"s", r.inv.s()},
          {"z", num(r.z)},
          {"delta", num(r.delta)},
          {"verdict", std::string(to_string(r.verdict))},
          {"first_fail", r.first_fail},
          {"u2", num(r.u2)},
          {"u3", num(r.u3)},
          {"u4", num(r.u4)},
          {"alpha", r.alpha ? nlohmann::json(to_fixed(*r.alpha, 6)) : nlohmann::json(nullptr)}};
}

inline nlohmann::json summary_json(const ScanSummary& s) {
  return {{"total", s.total}, {"by_verdict", s.by_verdict}, {"by_first_fail", s.by_first_fail}};
}

inline std::string summary_text(const ScanSummary& s) {
  std::string out = "# total " + std::to_string(s.total) + "\n";
  for (const auto& [k, v] : s.by_verdict) out += "# verdict " + k + " " + std::to_string(v) + "\n";
  for (const auto& [k, v] : s.by_first_fail) {
    out += "# first_fail " + k + " " + std::to_string(v) + "\n";
  }
  return out;
}

/// Runs the scan and writes rows in the configured format. CSV carries rows
/// only; the JSON document embeds the summary.
inline ScanSummary write_scan(const ScanConfig& cfg, std::ostream& out) {
  if (cfg.format == ScanFormat::Csv) {
    out << kCsvHeader << '\n';
    return scan(cfg, [&](const ScanRow& r) { out << csv_line(r) << '\n'; });
  }
  out << "{\"schema\":\"codim2.scan/1\",\"rows\":[";
  bool first = true;
  ScanSummary summary = scan(cfg, [&](const ScanRow& r) {
    out << (first ? "\n" : ",\n") << row_json(r).dump();
    first = false;
  });
  out << "\n],\"summary\":" << summary_json(summary).dump() << "}\n";
  return summary;
}

}  // namespace codim2
