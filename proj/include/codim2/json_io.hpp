#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "codim2/arithmetic.hpp"
#include "codim2/gates.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"
#include "codim2/transcendental.hpp"

namespace codim2 {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json_value(const BigInt& x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x);
  return x.str();
}

inline json to_json_value(const Rational& x) {
  if (is_integer(x)) return to_json_value(BigInt(boost::multiprecision::numerator(x)));
  return to_string(x);
}

/// Reals are strings with 30 significant digits so no precision is lost to
/// binary doubles.
inline json to_json_value(const Real& x) { return to_sci(x, 30); }

inline json to_json(const Witness& w) {
  json out{{"name", w.name}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          out["kind"] = "integer";
          out["value"] = to_json_value(v);
        } else if constexpr (std::is_same_v<T, Rational>) {
          out["kind"] = "rational";
          out["value"] = to_json_value(v);
        } else if constexpr (std::is_same_v<T, Real>) {
          out["kind"] = "real";
          out["value"] = to_json_value(v);
        } else {
          out["kind"] = "integer-list";
          json list = json::array();
          for (const auto& x : v) list.push_back(to_json_value(x));
          out["value"] = std::move(list);
        }
      },
      w.value);
  return out;
}

inline json to_json(const GateReport& r) {
  json witness = json::array();
  for (const auto& w : r.witness) witness.push_back(to_json(w));
  return {{"gate_id", r.gate_id},
          {"status", std::string(to_string(r.status))},
          {"witness", std::move(witness)},
          {"citation", r.citation},
          {"detail", r.detail}};
}

inline json to_json(const Invariants& inv) {
  return {{"n", inv.n()}, {"d", inv.d()}, {"e", inv.e()}, {"s", inv.s()}};
}

inline json to_json(const Invariants& inv, const GateSet& set) {
  const NormalizedChern nc = normalize(inv);
  json reports = json::array();
  for (const auto& r : set.reports) reports.push_back(to_json(r));
  const GateReport* fail = set.first_failure();
  json out{{"schema", "codim2.check/1"},
           {"invariants", to_json(inv)},
           {"derived",
            {{"z", to_json_value(inv.z())},
             {"q", to_json_value(inv.q())},
             {"C1", to_json_value(nc.c1)},
             {"C2", to_json_value(nc.c2)},
             {"delta", to_json_value(nc.delta)},
             {"regime", std::string(to_string(regime_of(nc.delta)))}}},
           {"overall", std::string(to_string(set.overall))},
           {"first_fail", fail ? json(fail->gate_id) : json(nullptr)},
           {"reports", std::move(reports)},
           {"alpha", set.alpha ? json(to_fixed(*set.alpha, 6)) : json(nullptr)}};
  if (!set.note.empty()) out["note"] = set.note;
  return out;
}

inline json to_json(const AlphaSolution& sol) {
  json ratios = json::array();
  for (std::size_t i = 0; i < sol.panoplie_ratios.size(); ++i) {
    if (i == 3 && sol.fourth_ratio_skipped) {
      ratios.push_back(nullptr);
    } else {
      ratios.push_back(to_json_value(sol.panoplie_ratios[i]));
    }
  }
  return {{"alpha", to_json_value(sol.alpha)},
          {"regime", std::string(to_string(sol.regime))},
          {"residual", to_json_value(sol.residual)},
          {"panoplie_ratios", std::move(ratios)},
          {"fourth_ratio_skipped", sol.fourth_ratio_skipped}};
}

inline json to_json(const DeltaSearchResult& r) {
  json log = json::array();
  for (const auto& rej : r.per_candidate_log) {
    log.push_back({{"delta", to_json_value(rej.delta)},
                   {"c1", to_json_value(rej.c1)},
                   {"c2", to_json_value(rej.c2)},
                   {"failing_k", rej.failing_k},
                   {"failing_prime", rej.failing_prime ? json(*rej.failing_prime) : json(nullptr)}});
  }
  return {{"n", r.n},
          {"delta", r.delta ? to_json_value(*r.delta) : json(nullptr)},
          {"candidates_checked", r.candidates_checked},
          {"per_candidate_log", std::move(log)}};
}

/// Plain-text rendering of a GateSet, one line per gate.
inline std::string to_text(const Invariants& inv, const GateSet& set) {
  const NormalizedChern nc = normalize(inv);
  std::string out = "n=" + std::to_string(inv.n()) + " d=" + std::to_string(inv.d()) +
                    " e=" + std::to_string(inv.e()) + " s=" + std::to_string(inv.s()) +
                    "  z=" + to_string(inv.z()) + " C1=" + to_string(nc.c1) +
                    " C2=" + to_string(nc.c2) + " delta=" + to_string(nc.delta) + "\n";
  for (const auto& r : set.reports) {
    std::string status(to_string(r.status));
    status.resize(14, ' ');
    std::string id = r.gate_id;
    id.resize(16, ' ');
    out += "  " + id + status + r.detail + "\n";
  }
  out += "overall: " + std::string(to_string(set.overall));
  if (set.alpha) out += "  alpha=" + to_fixed(*set.alpha, 6);
  out += "\n";
  if (!set.note.empty()) out += "note: " + set.note + "\n";
  return out;
}

}  // namespace codim2
