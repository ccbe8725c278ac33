#include <gtest/gtest.h>

#include <sstream>

#include "codim2/scan.hpp"

using namespace codim2;

namespace {

ScanConfig box(IntRange n, IntRange d, IntRange e, IntRange s) {
  ScanConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.e = e;
  cfg.s = s;
  return cfg;
}

std::string run(const ScanConfig& cfg) {
  std::ostringstream out;
  write_scan(cfg, out);
  return out.str();
}

}  // namespace

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("7"), (IntRange{7, 7}));
  EXPECT_EQ(parse_range("3..9"), (IntRange{3, 9}));
  EXPECT_EQ(parse_range("-2:4"), (IntRange{-2, 4}));
  EXPECT_THROW(parse_range("3..x"), Error);
  EXPECT_THROW(parse_range(""), Error);
}

TEST(Validate, RejectsBadConfigs) {
  auto kind = [](const ScanConfig& c) {
    try {
      validate(c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind(box({3, 5}, {1, 1}, {0, 0}, {1, 1})), ErrorKind::InvalidInput);
  EXPECT_EQ(kind(box({5, 4}, {1, 1}, {0, 0}, {1, 1})), ErrorKind::InvalidInput);
  ScanConfig big = box({4, 100}, {1, 100000}, {0, 100}, {1, 100});
  EXPECT_EQ(kind(big), ErrorKind::CapExceeded);
  ScanConfig gates = box({4, 4}, {1, 1}, {0, 0}, {1, 1});
  gates.gates = {"nope"};
  EXPECT_EQ(kind(gates), ErrorKind::InvalidInput);
  EXPECT_EQ(validate(box({6, 7}, {1, 10}, {0, 2}, {1, 4})), 2u * 10 * 3 * 4);
}

TEST(Scan, Examples) {
  std::vector<ScanRow> rows;
  scan(box({5, 5}, {10, 10}, {1, 1}, {2, 2}), [&](const ScanRow& r) { rows.push_back(r); });
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].verdict, Overall::Degenerate);

  rows.clear();
  scan(box({4, 4}, {10, 10}, {0, 0}, {5, 5}), [&](const ScanRow& r) { rows.push_back(r); });
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].verdict, Overall::Admissible);
  ASSERT_TRUE(rows[0].alpha);
  EXPECT_EQ(csv_line(rows[0]), "4,10,0,5,10,-15,Admissible,-,3,-9,-45,1.722859");
}

TEST(Scan, SixFoldBoxHasNoAdmissibleRows) {
  const ScanConfig cfg = box({6, 6}, {1, 200}, {8, 30}, {1, 6});
  std::uint64_t admissible = 0;
  const ScanSummary summary =
      scan(cfg, [&](const ScanRow& r) { admissible += r.verdict == Overall::Admissible; });
  EXPECT_EQ(summary.total, validate(cfg));
  EXPECT_EQ(admissible, 0u);
}

TEST(Scan, LexicographicOrder) {
  const ScanConfig cfg = box({4, 5}, {1, 3}, {0, 1}, {1, 2});
  std::vector<std::array<std::int64_t, 4>> seen;
  scan(cfg, [&](const ScanRow& r) {
    seen.push_back({r.inv.n(), r.inv.d(), r.inv.e(), r.inv.s()});
  });
  ASSERT_EQ(seen.size(), 24u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(Scan, DeterministicAcrossRunsAndWorkers) {
  ScanConfig cfg = box({5, 7}, {1, 400}, {-2, 12}, {1, 8});
  const std::string once = run(cfg);
  EXPECT_EQ(once, run(cfg));
  for (unsigned w : {2u, 3u, 8u}) {
    cfg.workers = w;
    EXPECT_EQ(once, run(cfg)) << w << " workers";
  }
  cfg.format = ScanFormat::Json;
  cfg.workers = 1;
  const std::string json_once = run(cfg);
  cfg.workers = 4;
  EXPECT_EQ(json_once, run(cfg));
  const auto doc = nlohmann::json::parse(json_once);
  EXPECT_EQ(doc["schema"], "codim2.scan/1");
  EXPECT_EQ(doc["rows"].size(), doc["summary"]["total"].get<std::uint64_t>());
}

TEST(Scan, GateSubset) {
  ScanConfig cfg = box({6, 6}, {55, 55}, {8, 8}, {5, 5});
  cfg.gates = {"dms2"};
  std::vector<ScanRow> rows;
  scan(cfg, [&](const ScanRow& r) { rows.push_back(r); });
  EXPECT_EQ(rows[0].verdict, Overall::Admissible);
  cfg.gates = {"u-positivity", "dms2"};
  rows.clear();
  scan(cfg, [&](const ScanRow& r) { rows.push_back(r); });
  EXPECT_EQ(rows[0].first_fail, "u-positivity");
}
