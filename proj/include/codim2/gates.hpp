#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codim2/arithmetic.hpp"
#include "codim2/constants.hpp"
#include "codim2/error.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"
#include "codim2/series.hpp"
#include "codim2/transcendental.hpp"

namespace codim2 {

struct GateOptions {
  /// Treat the candidate as not a complete intersection. When false, gates
  /// resting on z >= n-1 report NotApplicable.
  bool assume_non_ci = true;
  /// Restrict the composite pipeline to these gate ids (all when empty).
  std::set<std::string> enabled;
  /// Solve for alpha on Admissible candidates with z > 0.
  bool compute_alpha = true;
};

/// Gate ids in pipeline order.
inline constexpr std::string_view kGateOrder[] = {
    "z-lower", "u-positivity", "speciality", "ens-exponent", "dms2",
    "sdelta",  "hs-elliptic",  "m-alpha",    "qr-claim",     "schwarzenberger",
};

inline bool is_known_gate(std::string_view id) {
  return std::find(std::begin(kGateOrder), std::end(kGateOrder), id) != std::end(kGateOrder);
}

namespace detail {

inline GateReport make_report(std::string_view id, std::string_view citation,
                              std::vector<Witness> witness) {
  GateReport r;
  r.gate_id = std::string(id);
  r.citation = std::string(citation);
  r.witness = std::move(witness);
  return r;
}

inline GateReport not_applicable(GateReport r, std::string why) {
  r.status = GateStatus::NotApplicable;
  r.detail = std::move(why);
  return r;
}

inline GateStatus pass_if(bool ok) { return ok ? GateStatus::Pass : GateStatus::Fail; }

/// lhs >= rhs for values that cannot tie exactly; aborts inside the guard band.
inline bool guarded_ge(const Real& lhs, const Real& rhs, std::string_view what) {
  const Real margin = lhs - rhs;
  if (abs(margin) < precision_guard()) {
    throw Error(ErrorKind::PrecisionExhausted,
                std::string(what) + ": margin " + to_sci(margin, 6) + " below guard");
  }
  return margin > 0;
}

struct EllipticConstants {
  Real s_bound;  // (2/pi)(n-3) sqrt(n-1)
  Real e_bound;  // (2/pi)(2n-4) sqrt(n-1)
};

inline EllipticConstants elliptic_constants(int n) {
  static std::mutex mutex;
  static std::map<int, EllipticConstants> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const Real factor = 2 * sqrt(Real(n - 1)) / pi();
  EllipticConstants c{factor * (n - 3), factor * (2 * n - 4)};
  std::lock_guard lock(mutex);
  cache.emplace(n, c);
  return c;
}

inline const char* ran_disabled() { return "complete-intersection exclusion disabled"; }

}  // namespace detail

/// Residual degree bound z >= n-1 for non-complete-intersections.
inline GateReport gate_z_lower(const Invariants& inv, const GateOptions& opts = {}) {
  const BigInt z = inv.z();
  GateReport r = detail::make_report("z-lower", kRanCitation,
                                     {{"z", z}, {"n-1", BigInt(inv.n() - 1)}});
  if (!opts.assume_non_ci) return detail::not_applicable(std::move(r), detail::ran_disabled());
  r.status = detail::pass_if(z >= inv.n() - 1);
  r.detail = "z = " + to_string(z) + (z >= inv.n() - 1 ? " >= " : " < ") + std::to_string(inv.n() - 1);
  return r;
}

/// u_i >= 0 for 2 <= i <= n-2.
inline GateReport gate_u_positivity(const Invariants& inv) {
  const USequence u = u_recurrence(inv, static_cast<std::size_t>(std::max(inv.n() - 2, 1)));
  GateReport r = detail::make_report("u-positivity", "positivity lemma: u_i >= 0 for i <= n-2",
                                     {{"u", u.values}, {"q", u.q_used}});
  r.status = GateStatus::Pass;
  r.detail = "u_i >= 0 for 2 <= i <= " + std::to_string(inv.n() - 2);
  for (std::size_t i = 2; i < u.values.size(); ++i) {
    if (u.values[i] < 0) {
      r.status = GateStatus::Fail;
      r.witness.push_back({"failing_index", BigInt(i)});
      r.detail = "u_" + std::to_string(i) + " = " + to_string(u.values[i]) + " < 0";
      break;
    }
  }
  return r;
}

/// Speciality theorem bounds on e and d for n >= 5.
inline GateReport gate_speciality(const Invariants& inv, const GateOptions& opts = {}) {
  const int n = inv.n();
  const BigInt s = inv.s(), e = inv.e(), d = inv.d(), sm1 = s - 1;
  GateReport r = detail::make_report("speciality", "speciality theorem",
                                     {{"n", BigInt(n)}, {"e", e}, {"d", d}});
  if (n < 5) return detail::not_applicable(std::move(r), "needs n >= 5");
  if (!opts.assume_non_ci) return detail::not_applicable(std::move(r), detail::ran_disabled());

  bool e_ok = false, d_ok = false;
  if (n == 5) {
    // e <= (s-1)^3/4 - 3 - s, d <= s(s-1)((s-1)^2-4)/4 + 1
    const BigInt cube = sm1 * sm1 * sm1;
    const BigInt d_core = s * sm1 * (sm1 * sm1 - 4);
    e_ok = 4 * (e + 3 + s) <= cube;
    d_ok = 4 * (d - 1) <= d_core;
    r.witness.push_back({"e_bound", Rational(cube, 4) - 3 - Rational(s)});
    r.witness.push_back({"d_bound", Rational(d_core, 4) + 1});
  } else {
    // e <= A/sqrt(n-1) - n + 1, d <= s A/sqrt(n-1) + 1 with A = (s-1)^2 - n + 1
    const BigInt a = sm1 * sm1 - n + 1;
    e_ok = times_sqrt_le(e + n - 1, BigInt(n - 1), a);
    d_ok = times_sqrt_le(d - 1, BigInt(n - 1), s * a);
    const Real root = sqrt(Real(n - 1));
    r.witness.push_back({"e_bound", to_real(a) / root - (n - 1)});
    r.witness.push_back({"d_bound", to_real(BigInt(s * a)) / root + 1});
  }
  r.status = detail::pass_if(e_ok && d_ok);
  r.detail = std::string("e-clause ") + (e_ok ? "holds" : "fails") + ", d-clause " +
             (d_ok ? "holds" : "fails");
  return r;
}

/// e+n-s <= (n-1)^{-1/(n-4)} (s-1)^{(n-2)/(n-4)} and the companion bound on
/// d, compared after raising to the (n-4)-th power.
inline GateReport gate_ens_exponent(const Invariants& inv, const GateOptions& opts = {}) {
  const int n = inv.n();
  const BigInt s = inv.s(), d = inv.d(), x = BigInt(inv.e()) + n - s;
  GateReport r = detail::make_report("ens-exponent", "e+n-s <= (n-1)^{-1/(n-4)} (s-1)^{(n-2)/(n-4)}",
                                     {{"e+n-s", x}, {"n", BigInt(n)}});
  if (n == 4) return detail::not_applicable(std::move(r), "needs n >= 5");
  if (!opts.assume_non_ci) return detail::not_applicable(std::move(r), detail::ran_disabled());
  const unsigned k = static_cast<unsigned>(n - 4);
  const BigInt rhs_core = pow_int(s - 1, static_cast<unsigned>(n - 2));
  const bool e_ok = x <= 0 || (n - 1) * pow_int(x, k) <= rhs_core;
  const bool d_ok = d <= s || pow_int(d - s, k) * (n - 1) <= pow_int(s, k) * rhs_core;
  r.status = detail::pass_if(e_ok && d_ok);
  r.detail = std::string("e-clause ") + (e_ok ? "holds" : "fails") + ", d-clause " +
             (d_ok ? "holds" : "fails");
  return r;
}

/// d < M^2 s^2 + s M sqrt(Delta) (Delta > 0) or d < M^2 s(s-1) + s
/// (Delta <= 0), M = (n-2)/(n-3). Strict as stated.
inline GateReport gate_dms2(const Invariants& inv) {
  const int n = inv.n();
  const BigInt s = inv.s(), d = inv.d();
  const BigInt delta = normalize(inv).delta;
  const BigInt p = n - 2, q = n - 3;
  GateReport r = detail::make_report("dms2", "d < M^2 s^2 + s M sqrt(Delta), M = (n-2)/(n-3)",
                                     {{"delta", delta}, {"d", d}});
  if (delta <= 0) {
    const BigInt lhs = q * q * d, rhs = p * p * s * (s - 1) + q * q * s;
    r.status = detail::pass_if(lhs < rhs);
    r.witness.push_back({"bound", Rational(rhs, q * q)});
    r.detail = "(n-3)^2 d = " + to_string(lhs) + (lhs < rhs ? " < " : " >= ") + to_string(rhs);
  } else {
    // (n-3)^2 d - (n-2)^2 s^2 < s (n-2)(n-3) sqrt(Delta)
    const BigInt lhs = q * q * d - p * p * s * s;
    // lhs < s p q sqrt(Delta)  <=>  -(s p q) sqrt(Delta) < -lhs
    const bool ok = times_sqrt_lt(-(s * p * q), delta, -lhs);
    r.status = detail::pass_if(ok);
    const Real m = Real(n - 2) / Real(n - 3);
    r.witness.push_back({"bound", m * m * to_real(BigInt(s * s)) + to_real(s) * m * sqrt(to_real(delta))});
    r.detail = ok ? "strict bound holds" : "strict bound fails";
  }
  return r;
}

/// Lower bounds on s and e: (n-3) sqrt(n-1) when Delta >= 0, scaled by 2/pi
/// when Delta < 0 and e+n+1 >= 2s.
inline GateReport gate_sdelta(const Invariants& inv, const GateOptions& opts = {}) {
  const int n = inv.n();
  const BigInt s = inv.s(), enn = BigInt(inv.e()) + n;
  const BigInt delta = normalize(inv).delta;
  GateReport r = detail::make_report("sdelta", "s-1 >= (n-3) sqrt(n-1), 2/pi factor when Delta < 0",
                                     {{"delta", delta}, {"s-1", BigInt(s - 1)}, {"e+n", enn}});
  if (!opts.assume_non_ci) return detail::not_applicable(std::move(r), detail::ran_disabled());
  if (delta >= 0) {
    const BigInt root = n - 1, q = n - 3, p = 2 * n - 4;
    const bool s_ok = (s - 1) * (s - 1) >= q * q * root;
    const bool e_ok = enn >= 0 && enn * enn >= p * p * root;
    r.status = detail::pass_if(s_ok && e_ok);
    r.witness.push_back({"s_bound", Real(n - 3) * sqrt(Real(n - 1))});
    r.detail = std::string("Delta >= 0: s-clause ") + (s_ok ? "holds" : "fails") + ", e-clause " +
               (e_ok ? "holds" : "fails");
    return r;
  }
  if (enn + 1 < 2 * s) return detail::not_applicable(std::move(r), "Delta < 0 with e+n+1 < 2s");
  const detail::EllipticConstants c = detail::elliptic_constants(n);
  r.witness.push_back({"s_bound", c.s_bound});
  r.witness.push_back({"e_bound", c.e_bound});
  const bool s_ok = detail::guarded_ge(to_real(BigInt(s - 1)), c.s_bound, "sdelta s-clause");
  const bool e_ok = detail::guarded_ge(to_real(enn), c.e_bound, "sdelta e-clause");
  r.status = detail::pass_if(s_ok && e_ok);
  r.detail = std::string("Delta < 0: s-clause ") + (s_ok ? "holds" : "fails") + ", e-clause " +
             (e_ok ? "holds" : "fails");
  return r;
}

/// Delta < 0 and e+n+1 <= 2s: the tabulated lower bound e >= e_min gives
/// 2s >= e_min + n + 1, i.e. s >= n+2 (n >= 6) and s >= 3n/2 (n >= 8).
inline GateReport gate_hs_elliptic(const Invariants& inv) {
  const int n = inv.n();
  const BigInt s = inv.s(), enn = BigInt(inv.e()) + n;
  const BigInt delta = normalize(inv).delta;
  GateReport r = detail::make_report("hs-elliptic", "Delta < 0, e+n+1 <= 2s: s >= n+2, s >= 3n/2",
                                     {{"delta", delta}, {"s", s}});
  if (delta >= 0) return detail::not_applicable(std::move(r), "needs Delta < 0");
  if (enn + 1 > 2 * s) return detail::not_applicable(std::move(r), "needs e+n+1 <= 2s");
  const auto bound = strongest_e_bound(n);
  if (!bound) return detail::not_applicable(std::move(r), "needs n >= 6");
  const BigInt e_min = BigInt(bound->e_slope) * n + bound->e_offset;
  const BigInt twice_s_min = e_min + n + 1;
  r.citation = std::string(bound->citation);
  r.witness.push_back({"s_min", Rational(twice_s_min, 2)});
  r.status = detail::pass_if(2 * s >= twice_s_min);
  r.detail = "2s = " + to_string(BigInt(2 * s)) + (2 * s >= twice_s_min ? " >= " : " < ") +
             to_string(twice_s_min);
  return r;
}

/// Delta < 0: s-1 >= (sqrt(-Delta)/2) m(n-3).
inline GateReport gate_m_alpha(const Invariants& inv) {
  const int n = inv.n();
  const BigInt s = inv.s();
  const BigInt delta = normalize(inv).delta;
  GateReport r = detail::make_report("m-alpha", "s-1 >= delta m(alpha) >= delta m(n-3)",
                                     {{"delta", delta}, {"s-1", BigInt(s - 1)}});
  if (delta >= 0) return detail::not_applicable(std::move(r), "needs Delta < 0");
  if (n < 5) return detail::not_applicable(std::move(r), "needs n >= 5");
  const Real m = m_of(n - 3);
  const Real bound = sqrt(to_real(BigInt(-delta))) / 2 * m;
  r.witness.push_back({"m(n-3)", m});
  r.witness.push_back({"bound", bound});
  const bool ok = detail::guarded_ge(to_real(BigInt(s - 1)), bound, "m-alpha");
  r.status = detail::pass_if(ok);
  r.detail = "s-1 = " + to_string(BigInt(s - 1)) + (ok ? " >= " : " < ") + to_fixed(bound, 6);
  return r;
}

inline GateReport gate_qr_claim(const Invariants& inv) {
  return qr_claim_check(inv.n(), normalize(inv).delta);
}

/// Schwarzenberger check on the canonical representative of Delta(E).
inline GateReport gate_schwarzenberger(const Invariants& inv) {
  const BigInt delta = normalize(inv).delta;
  const auto [c1, c2] = canonical_chern(delta);
  const SchwarzenbergerOutcome out = schwarzenberger_for_delta(inv.n(), delta);
  GateReport r = detail::make_report("schwarzenberger", "Schwarzenberger conditions on P^n",
                                     {{"delta", delta}, {"c1", c1}, {"c2", c2}});
  r.status = detail::pass_if(out.pass);
  if (out.pass) {
    r.detail = "traces integral for k = 0.." + std::to_string(inv.n());
  } else {
    r.witness.push_back({"failing_k", BigInt(*out.failing_k)});
    r.witness.push_back({"trace", out.failing_trace});
    r.detail = "Tr binom(xi+" + std::to_string(*out.failing_k) + ", n) = " +
               to_string(out.failing_trace);
  }
  return r;
}

enum class Overall { Admissible, Excluded, Degenerate, Inconclusive };

constexpr std::string_view to_string(Overall o) {
  switch (o) {
    case Overall::Admissible: return "Admissible";
    case Overall::Excluded: return "Excluded";
    case Overall::Degenerate: return "Degenerate";
    case Overall::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct GateSet {
  std::vector<GateReport> reports;
  Overall overall = Overall::Admissible;
  std::optional<Real> alpha;
  std::string note;

  const GateReport* first_failure() const {
    for (const auto& r : reports) {
      if (r.status == GateStatus::Fail) return &r;
    }
    return nullptr;
  }

  const GateReport* find(std::string_view id) const {
    for (const auto& r : reports) {
      if (r.gate_id == id) return &r;
    }
    return nullptr;
  }
};

/// Runs every gate in kGateOrder. z = 0 short-circuits to Degenerate; the
/// arithmetic gates only run when Delta is not a perfect square. A gate that
/// throws is recorded with status Error and the rest still run.
inline GateSet gate_composite(const Invariants& inv, const GateOptions& opts = {}) {
  GateSet set;
  const BigInt z = inv.z();
  if (z == 0) {
    GateReport r = detail::make_report("z-lower", kRanCitation, {{"z", z}});
    set.reports.push_back(
        detail::not_applicable(std::move(r), "z = 0: complete-intersection numerics"));
    set.overall = Overall::Degenerate;
    return set;
  }
  const BigInt delta = normalize(inv).delta;
  const bool arithmetic = !is_perfect_square(delta);
  auto wanted = [&](std::string_view id) {
    return opts.enabled.empty() || opts.enabled.count(std::string(id)) > 0;
  };
  auto run = [&](std::string_view id, auto&& gate) {
    if (!wanted(id)) return;
    try {
      set.reports.push_back(gate());
    } catch (const Error& err) {
      GateReport r = detail::make_report(id, "", {{"n", BigInt(inv.n())}});
      r.status = GateStatus::Error;
      r.detail = err.what();
      set.reports.push_back(std::move(r));
    }
  };
  run("z-lower", [&] { return gate_z_lower(inv, opts); });
  run("u-positivity", [&] { return gate_u_positivity(inv); });
  run("speciality", [&] { return gate_speciality(inv, opts); });
  run("ens-exponent", [&] { return gate_ens_exponent(inv, opts); });
  run("dms2", [&] { return gate_dms2(inv); });
  run("sdelta", [&] { return gate_sdelta(inv, opts); });
  run("hs-elliptic", [&] { return gate_hs_elliptic(inv); });
  run("m-alpha", [&] { return gate_m_alpha(inv); });
  if (arithmetic) {
    run("qr-claim", [&] { return gate_qr_claim(inv); });
    run("schwarzenberger", [&] { return gate_schwarzenberger(inv); });
  }

  const bool failed = std::any_of(set.reports.begin(), set.reports.end(),
                                  [](const GateReport& r) { return r.status == GateStatus::Fail; });
  const bool errored = std::any_of(set.reports.begin(), set.reports.end(),
                                   [](const GateReport& r) { return r.status == GateStatus::Error; });
  set.overall = failed ? Overall::Excluded : errored ? Overall::Inconclusive : Overall::Admissible;

  if (set.overall == Overall::Admissible) {
    if (opts.compute_alpha && z > 0 && inv.s() >= 2) {
      try {
        set.alpha = solve_alpha(spectral(inv), inv).alpha;
      } catch (const Error&) {
        // alpha is undefined for this candidate (C2 <= 0 or s-1 >= a).
      }
    }
    if (inv.n() == 5 && inv.s() <= 5) {
      set.note = "numeric gates passed, geometric case analysis out of scope";
    }
  }
  return set;
}

}  // namespace codim2
