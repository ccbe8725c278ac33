#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "codim2/error.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"

namespace codim2 {

/// Threefold X of degree d and sectional genus pi in P^5, on a hypersurface
/// of degree s (X not contained in its singular locus).
struct P5Candidate {
  std::int64_t d;
  std::int64_t s;
  std::int64_t pi;
};

/// mu = d(s^2 - 4s + d) - s(2 pi - 2).
inline BigInt mu(const P5Candidate& c) {
  const BigInt d = c.d, s = c.s, pi = c.pi;
  return d * (s * s - 4 * s + d) - s * (2 * pi - 2);
}

/// 0 <= mu <= s(s-1)^3.
inline GateReport gate_mu(const P5Candidate& c) {
  const BigInt m = mu(c);
  const BigInt s = c.s;
  const BigInt upper = s * (s - 1) * (s - 1) * (s - 1);
  GateReport r;
  r.gate_id = "mu";
  r.citation = "0 <= mu <= s(s-1)^3 for X not in Sing(Sigma)";
  r.witness = {{"mu", m}, {"upper", upper}};
  r.status = (m >= 0 && m <= upper) ? GateStatus::Pass : GateStatus::Fail;
  r.detail = "assumes X is not contained in the singular locus of the hypersurface";
  return r;
}

struct GenusInterval {
  Rational pi_min;
  Rational pi_max;
};

/// Sectional genera allowed by the mu bounds: pi_max from mu >= 0 and
/// pi_min from mu <= s(s-1)^3.
inline GenusInterval genus_interval(std::int64_t d, std::int64_t s) {
  if (d < 1 || s < 1) throw Error(ErrorKind::InvalidInput, "d and s must be >= 1");
  const BigInt bd = d, bs = s;
  const Rational pi_max = 1 + Rational(bd * (bs * bs - 4 * bs + bd), 2 * bs);
  const BigInt sm1 = bs - 1;
  return {pi_max - Rational(sm1 * sm1 * sm1, 2), pi_max};
}

/// Generalized binomial x(x-1)(x-2)/6 over Q.
inline Rational binom3(const Rational& x) { return x * (x - 1) * (x - 2) / 6; }

/// chi(I_{C,S}(m)) for the curve section C of degree d, genus pi on the
/// surface section S of degree s in P^3:
///   [binom(m+3,3) - binom(m-s+3,3)] - [dm + 1 - pi].
inline Rational chi_oracle(std::int64_t d, std::int64_t s, std::int64_t pi, std::int64_t m) {
  if (m < 0) throw Error(ErrorKind::InvalidInput, "m must be >= 0");
  const Rational chi_surface = binom3(Rational(m + 3)) - binom3(Rational(m - s + 3));
  const Rational chi_curve = Rational(BigInt(d) * m) + 1 - pi;
  return chi_surface - chi_curve;
}

/// The closed formula binom(s+eps,3) - binom(eps,3) - mu/(2s) with
/// eps = d/s - [d/s], evaluated with generalized binomials.
inline Rational chi_paper(std::int64_t d, std::int64_t s, std::int64_t pi) {
  if (s < 1) throw Error(ErrorKind::InvalidInput, "s must be >= 1");
  const Rational ratio{BigInt(d), BigInt(s)};
  const Rational eps = ratio - Rational(floor_div(BigInt(d), BigInt(s)));
  return binom3(Rational(s) + eps) - binom3(eps) - Rational(mu({d, s, pi}), 2 * BigInt(s));
}

struct ChiDiscrepancy {
  std::int64_t s;
  std::int64_t d;
  Rational eps;
  Rational formula;
  Rational oracle;
  Rational offset;  // formula - oracle
};

/// chi_paper - chi_oracle at m = [d/s] over s in [s_lo, s_hi], d in [s, 6s].
///
/// Both sides are affine in pi with slope 1, so the offset does not depend on
/// pi; the table evaluates at pi = 0.
inline std::vector<ChiDiscrepancy> chi_discrepancy_table(std::int64_t s_lo = 2,
                                                         std::int64_t s_hi = 8) {
  std::vector<ChiDiscrepancy> rows;
  for (std::int64_t s = s_lo; s <= s_hi; ++s) {
    for (std::int64_t d = s; d <= 6 * s; ++d) {
      const std::int64_t m = d / s;
      const Rational formula = chi_paper(d, s, 0);
      const Rational oracle = chi_oracle(d, s, 0, m);
      rows.push_back({s, d, Rational(d, s) - m, formula, oracle, formula - oracle});
    }
  }
  return rows;
}

}  // namespace codim2
