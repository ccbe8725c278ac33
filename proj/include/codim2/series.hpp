#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "codim2/error.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"

namespace codim2 {

/// Element of Q[t]/(t^{order+1}), the Chow ring of P^order with rational
/// coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rational(0));
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    const std::size_t order = std::min(x.order(), y.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= order; ++j) {
        out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return out;
  }

  /// Multiplicative inverse; requires a unit constant term.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == 0) {
      throw Error(ErrorKind::DomainError, "series with zero constant term is not invertible");
    }
    TruncatedSeries out(order());
    out.coeffs_[0] = Rational(1) / coeffs_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
      out.coeffs_[k] = -acc * out.coeffs_[0];
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// (1 + c1L t) / (1 - C1 t + C2 t^2) in Q[t]/(t^{order+1}).
inline TruncatedSeries positivity_series(const BigInt& c1, const BigInt& c2,
                                         const BigInt& c1L, std::size_t order) {
  TruncatedSeries numerator({Rational(1), Rational(c1L)}, order);
  TruncatedSeries denominator({Rational(1), Rational(-c1), Rational(c2)}, order);
  return numerator * denominator.inverse();
}

/// Segre classes of E(-1): coefficients of 1 / (1 - C1 t + C2 t^2).
inline TruncatedSeries segre_series(const BigInt& c1, const BigInt& c2, std::size_t order) {
  return positivity_series(c1, c2, BigInt(0), order);
}

enum class USource { Recurrence, SeriesDivision, ClosedForm };

constexpr std::string_view to_string(USource s) {
  switch (s) {
    case USource::Recurrence: return "recurrence";
    case USource::SeriesDivision: return "series-division";
    case USource::ClosedForm: return "closed-form";
  }
  return "?";
}

struct USequence {
  std::vector<BigInt> values;
  USource source;
  BigInt q_used;
};

/// u_0..u_upto by u_i = (e+n-1) u_{i-1} - (d-e-n) u_{i-2}, seeded with
/// u_0 = 1, u_1 = q - 1 where q = min(s, e+n).
inline USequence u_recurrence(const Invariants& inv, std::size_t upto) {
  if (upto < 1) throw Error(ErrorKind::InvalidInput, "upto must be >= 1");
  const NormalizedChern nc = normalize(inv);
  USequence out{{}, USource::Recurrence, inv.q()};
  out.values.reserve(upto + 1);
  out.values.emplace_back(1);
  out.values.emplace_back(out.q_used - 1);
  for (std::size_t i = 2; i <= upto; ++i) {
#ifdef CODIM2_MUTATE_RECURRENCE_SIGN
    // Mutation-test build: the sign that the expansion does not support.
    out.values.push_back(nc.c1 * out.values[i - 1] + nc.c2 * out.values[i - 2]);
#else
    out.values.push_back(nc.c1 * out.values[i - 1] - nc.c2 * out.values[i - 2]);
#endif
  }
  return out;
}

/// Same u-values by exact division of the generating series.
inline USequence u_series_division(const Invariants& inv, std::size_t upto) {
  const NormalizedChern nc = normalize(inv);
  const BigInt q = inv.q();
  const BigInt c1L = q - inv.e() - inv.n();
  const TruncatedSeries series = positivity_series(nc.c1, nc.c2, c1L, upto);
  USequence out{{}, USource::SeriesDivision, q};
  for (const Rational& c : series.coefficients()) {
    if (!is_integer(c)) {
      throw Error(ErrorKind::IdentityViolation, "non-integral u coefficient " + to_string(c));
    }
    out.values.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

namespace detail {

// sh(k t) / sh(t) by regime; the parabolic limit is k.
inline Real sh_ratio(const SpectralData& sd, long k) {
  switch (sd.regime) {
    case Regime::Hyperbolic: return sinh(sd.angle * k) / sinh(sd.angle);
    case Regime::Elliptic: return sin(sd.angle * k) / sin(sd.angle);
    case Regime::Parabolic: return Real(k);
  }
  return Real(0);
}

}  // namespace detail

/// u_k = rho^k [ (s-1)/rho sh(kt)/sh(t) - sh((k-1)t)/sh(t) ]; pass the twist
/// q = min(s, e+n) as `s` when s > e+n.
inline Real u_closed_form(const SpectralData& sd, const BigInt& s, long k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "k must be >= 0");
  if (k == 0) return Real(1);
  const Real sm1 = to_real(BigInt(s - 1));
  const Real rho_k = pow(sd.rho, k);
  if (sd.regime == Regime::Parabolic) {
    return rho_k * (Real(k) * sm1 / sd.rho - Real(k - 1));
  }
  return rho_k * (sm1 / sd.rho * detail::sh_ratio(sd, k) - detail::sh_ratio(sd, k - 1));
}

/// s_k = rho^k sh((k+1)t) / sh(t), or rho^k (k+1) when Delta = 0.
inline Real segre_closed_form(const SpectralData& sd, long k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "k must be >= 0");
  if (k == 0) return Real(1);
  return pow(sd.rho, k) * detail::sh_ratio(sd, k + 1);
}

/// Closed-form u-values rounded to integers once they sit within tolerance
/// of an integer (1e-9 relative or 0.5 absolute, whichever is larger).
inline USequence u_closed_form_sequence(const Invariants& inv, std::size_t upto) {
  const SpectralData sd = spectral(inv);
  USequence out{{}, USource::ClosedForm, inv.q()};
  for (std::size_t k = 0; k <= upto; ++k) {
    const Real value = u_closed_form(sd, out.q_used, static_cast<long>(k));
    const Real nearest = round(value);
    const Real tol = std::max(Real("1e-9") * abs(nearest), Real("0.5"));
    if (abs(value - nearest) >= tol) {
      throw Error(ErrorKind::IdentityViolation, "closed form u_" + std::to_string(k) +
                                                    " not near an integer");
    }
    out.values.push_back(static_cast<BigInt>(nearest));
  }
  return out;
}

}  // namespace codim2
