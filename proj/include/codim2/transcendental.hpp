#pragma once

#include <array>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "codim2/error.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"

namespace codim2 {

namespace detail {

// Bisection for the crossing of a strictly decreasing function with `target`
// on the open interval (lo, hi). Endpoints are never evaluated.
template <typename F>
Real bisect_decreasing(F f, Real lo, Real hi, const Real& target, int iterations = 300) {
  for (int i = 0; i < iterations; ++i) {
    const Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    if (f(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// sh-type function selected by regime: sinh, sin, or the parabolic identity.
inline Real shf(const SpectralData& sd, const Real& x) {
  switch (sd.regime) {
    case Regime::Hyperbolic: return sinh(x * sd.angle);
    case Regime::Elliptic: return sin(x * sd.angle);
    case Regime::Parabolic: return x;
  }
  return x;
}

inline Real relative_spread(const std::vector<Real>& values) {
  Real lo = values.front(), hi = values.front();
  for (const Real& v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const Real scale = std::max(abs(lo), abs(hi));
  return scale == 0 ? Real(0) : (hi - lo) / scale;
}

}  // namespace detail

/// The four equal ratios
///   sigma/sh t = (s-1)/sh(alpha t) = rho/sh((alpha+1)t) = (e+n-s)/sh((alpha+2)t)
/// (sin for Delta < 0). For Delta = 0 the entries are the chain
///   alpha+2 = (e+n-s)/sigma = rho/sigma + 1 = (s-1)/sigma + 2.
struct AlphaSolution {
  Real alpha;
  Regime regime;
  Real residual;
  std::array<Real, 4> panoplie_ratios;
  /// Set when e+n = s in the elliptic regime: numerator and sin((alpha+2)theta)
  /// both vanish and the fourth ratio carries no information.
  bool fourth_ratio_skipped = false;
};

inline std::array<Real, 4> panoplie_ratios(const SpectralData& sd, const Invariants& inv,
                                           const Real& alpha, bool* skipped = nullptr) {
  const Real sigma = *sd.sigma;
  const Real sm1 = Real(inv.s() - 1);
  const Real enms = to_real(BigInt(inv.e()) + inv.n() - inv.s());
  if (skipped) *skipped = false;
  if (sd.regime == Regime::Parabolic) {
    return {alpha + 2, enms / sigma, sd.rho / sigma + 1, sm1 / sigma + 2};
  }
  // s = e+n forces sin((alpha+2)theta) = 0 as well.
  const bool skip = sd.regime == Regime::Elliptic && inv.e() + inv.n() == inv.s();
  if (skipped) *skipped = skip;
  return {sigma / detail::shf(sd, Real(1)), sm1 / detail::shf(sd, alpha),
          sd.rho / detail::shf(sd, alpha + 1),
          skip ? Real(0) : enms / detail::shf(sd, alpha + 2)};
}

/// Checks the four panoplie ratios agree pairwise within `tolerance`
/// relative; returns them.
inline std::array<Real, 4> verify_panoplie(const AlphaSolution& sol, const Invariants& inv,
                                           const Real& tolerance = Real("1e-9")) {
  std::vector<Real> used(sol.panoplie_ratios.begin(), sol.panoplie_ratios.end());
  if (sol.fourth_ratio_skipped) {
    if (sol.regime != Regime::Elliptic || inv.e() + inv.n() != inv.s()) {
      throw Error(ErrorKind::IdentityViolation, "fourth ratio skipped outside s = e+n");
    }
    used.pop_back();
  }
  const Real spread = detail::relative_spread(used);
  if (spread > tolerance) {
    throw Error(ErrorKind::IdentityViolation,
                "panoplie ratios disagree, relative spread " + to_sci(spread, 6));
  }
  return sol.panoplie_ratios;
}

/// Solves for the unique alpha with
///   sh((alpha+1)t)/sh(alpha t) = rho/(s-1)          (Delta > 0)
///   sin((alpha+1)theta)/sin(alpha theta) = rho/(s-1) (Delta < 0, alpha < pi/theta - 1)
///   alpha/(alpha+1) = (s-1)/rho                     (Delta = 0)
/// and fills the panoplie ratios.
inline AlphaSolution solve_alpha(const SpectralData& sd, const Invariants& inv) {
  const BigInt z = inv.z();
  if (z <= 0) throw Error(ErrorKind::DegenerateZ, "z = " + to_string(z) + " <= 0");
  if (inv.s() < 2) throw Error(ErrorKind::DomainError, "s must be >= 2");
  if (!sd.sigma) throw Error(ErrorKind::InvalidInput, "spectral data lacks sigma");
  const NormalizedChern& nc = sd.chern;
  const BigInt sm1 = inv.s() - 1;
  const Real target = sd.rho / to_real(sm1);

  AlphaSolution sol{Real(0), sd.regime, Real(0), {}, false};
  switch (sd.regime) {
    case Regime::Parabolic: {
      // rho = C1/2 is an integer and sigma = rho - s + 1.
      const BigInt rho = nc.c1 / 2;
      const BigInt sigma = rho - sm1;
      if (sigma <= 0) {
        throw Error(ErrorKind::RootOrderViolated, "Delta = 0 needs s-1 < rho");
      }
      sol.alpha = to_real(sm1) / to_real(sigma);
      sol.residual = abs(sol.alpha / (sol.alpha + 1) - to_real(sm1) / sd.rho);
      break;
    }
    case Regime::Hyperbolic: {
      // s-1 < a  <=>  sqrt(Delta) < C1 - 2(s-1), decided exactly.
      const BigInt gap = nc.c1 - 2 * sm1;
      if (gap <= 0 || nc.delta >= gap * gap) {
        throw Error(ErrorKind::RootOrderViolated, "Delta > 0 needs s-1 < a = rho e^{-t}");
      }
      const Real& t = sd.angle;
      auto f = [&](const Real& x) { return sinh((x + 1) * t) / sinh(x * t); };
      Real hi(1);
      while (f(hi) > target) hi *= 2;
      sol.alpha = detail::bisect_decreasing(f, Real(0), hi, target);
      sol.residual = abs(f(sol.alpha) - target);
      break;
    }
    case Regime::Elliptic: {
      const Real& theta = sd.angle;
      auto g = [&](const Real& x) { return sin((x + 1) * theta) / sin(x * theta); };
      sol.alpha = detail::bisect_decreasing(g, Real(0), pi() / theta - 1, target);
      sol.residual = abs(g(sol.alpha) - target);
      break;
    }
  }
  if (sol.residual > Real("1e-12") * target) {
    throw Error(ErrorKind::PrecisionExhausted, "alpha residual " + to_sci(sol.residual, 6));
  }
  sol.panoplie_ratios = panoplie_ratios(sd, inv, sol.alpha, &sol.fourth_ratio_skipped);
  return sol;
}

struct MinimizerResult {
  Real alpha;
  Real beta;
  Real m_value;
};

/// phi(x) = sin(alpha x) / (sin x sin((alpha+1) x)).
inline Real m_objective(const Real& alpha, const Real& x) {
  return sin(alpha * x) / (sin(x) * sin((alpha + 1) * x));
}

/// Minimum m(alpha) of phi on (0, pi/(alpha+1)), attained at the root beta of
/// sin((alpha+1)x)/sin x = sqrt(alpha+1).
inline MinimizerResult minimize_m(const Real& alpha) {
  if (alpha < 1) throw Error(ErrorKind::DomainError, "m(alpha) needs alpha >= 1");
  const Real target = sqrt(alpha + 1);
  auto h = [&](const Real& x) { return sin((alpha + 1) * x) / sin(x); };
  const Real beta = detail::bisect_decreasing(h, Real(0), pi() / (alpha + 1), target);
  return {alpha, beta, m_objective(alpha, beta)};
}

/// m(alpha) for integer alpha, memoized; safe for concurrent callers.
inline Real m_of(int alpha) {
  static std::mutex mutex;
  static std::map<int, Real> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(alpha); it != cache.end()) return it->second;
  }
  const Real value = minimize_m(Real(alpha)).m_value;
  std::lock_guard lock(mutex);
  cache.emplace(alpha, value);
  return value;
}

inline std::vector<std::pair<int, Real>> m_table(int alpha_max) {
  if (alpha_max < 2) throw Error(ErrorKind::InvalidInput, "alpha_max must be >= 2");
  std::vector<std::pair<int, Real>> table;
  for (int a = 2; a <= alpha_max; ++a) {
    table.emplace_back(a, m_of(a));
    if (table.size() > 1 && !(table.back().second > table[table.size() - 2].second)) {
      throw Error(ErrorKind::IdentityViolation, "m(alpha) not increasing at " + std::to_string(a));
    }
  }
  return table;
}

}  // namespace codim2
