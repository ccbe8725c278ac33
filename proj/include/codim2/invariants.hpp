#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "codim2/error.hpp"
#include "codim2/numeric.hpp"

namespace codim2 {

/// Numerical data (n, d, e, s) of a candidate smooth subcanonical
/// codimension-two subvariety X of P^n: degree d, omega_X = O_X(e), and s the
/// least degree of a hypersurface containing X.
///
/// X is the zero locus of a rank-2 bundle E with c1(E) = e+n+1, c2(E) = d.
class Invariants {
 public:
  static Invariants make(int n, std::int64_t d, std::int64_t e, std::int64_t s) {
    if (n < 4) throw Error(ErrorKind::InvalidInput, "n must be >= 4, got " + std::to_string(n));
    if (d < 1) throw Error(ErrorKind::InvalidInput, "d must be >= 1, got " + std::to_string(d));
    if (s < 1) throw Error(ErrorKind::InvalidInput, "s must be >= 1, got " + std::to_string(s));
    return Invariants(n, d, e, s);
  }

  int n() const noexcept { return n_; }
  std::int64_t d() const noexcept { return d_; }
  std::int64_t e() const noexcept { return e_; }
  std::int64_t s() const noexcept { return s_; }

  /// z = d - s(e+n+1) + s^2, the degree of the residual to X in the
  /// complete intersection of two hypersurfaces of degrees s and e+n+1-s.
  BigInt z() const {
    BigInt s = s_;
    return BigInt(d_) - s * (BigInt(e_) + n_ + 1) + s * s;
  }

  /// Twist q = min(s, e+n) for which N_X^*(q) has a section.
  BigInt q() const { return std::min<BigInt>(BigInt(s_), BigInt(e_) + n_); }

  BigInt c1_bundle() const { return BigInt(e_) + n_ + 1; }
  BigInt c2_bundle() const { return BigInt(d_); }

  friend bool operator==(const Invariants&, const Invariants&) = default;

 private:
  Invariants(int n, std::int64_t d, std::int64_t e, std::int64_t s)
      : n_(n), d_(d), e_(e), s_(s) {}

  int n_;
  std::int64_t d_;
  std::int64_t e_;
  std::int64_t s_;
};

/// Chern data of the normalized bundle E(-1).
struct NormalizedChern {
  BigInt c1;     // e + n - 1
  BigInt c2;     // d - e - n
  BigInt delta;  // c1^2 - 4 c2
};

inline NormalizedChern normalize(const Invariants& inv) {
  BigInt c1 = BigInt(inv.e()) + inv.n() - 1;
  BigInt c2 = BigInt(inv.d()) - inv.e() - inv.n();
  return {c1, c2, c1 * c1 - 4 * c2};
}

inline NormalizedChern normalized_from_chern(const BigInt& c1, const BigInt& c2) {
  return {c1, c2, c1 * c1 - 4 * c2};
}

enum class Regime { Hyperbolic, Parabolic, Elliptic };

constexpr std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Hyperbolic: return "hyperbolic";
    case Regime::Parabolic: return "parabolic";
    case Regime::Elliptic: return "elliptic";
  }
  return "?";
}

inline Regime regime_of(const BigInt& delta) {
  if (delta > 0) return Regime::Hyperbolic;
  if (delta < 0) return Regime::Elliptic;
  return Regime::Parabolic;
}

/// Chern-root parametrization 1 - C1 X + C2 X^2 = 1 - 2 rho ch(t) X + rho^2 X^2.
///
/// In the elliptic regime t = i theta with 0 < theta < pi, so ch t = cos theta.
struct SpectralData {
  NormalizedChern chern;
  Regime regime;
  Real rho;
  /// t > 0 (hyperbolic) or theta in (0, pi) (elliptic); zero when parabolic.
  Real angle;
  /// Roots a = rho e^{-t} <= b = rho e^{t}; hyperbolic only.
  std::optional<Real> a;
  std::optional<Real> b;
  /// sqrt(z), present when the caller supplied z >= 0.
  std::optional<Real> sigma;
  /// sqrt(-Delta)/2 = rho sin theta; elliptic only.
  std::optional<Real> delta_half;
};

inline SpectralData spectral(const NormalizedChern& nc,
                             std::optional<BigInt> z = std::nullopt) {
  if (nc.c2 <= 0) {
    throw Error(ErrorKind::NonPositiveC2, "C2 = " + to_string(nc.c2) + " <= 0");
  }
  SpectralData sd{nc, regime_of(nc.delta), sqrt(to_real(nc.c2)), Real(0), {}, {}, {}, {}};
  const Real c1 = to_real(nc.c1);
  switch (sd.regime) {
    case Regime::Hyperbolic: {
      if (nc.c1 <= 0) {
        throw Error(ErrorKind::NegativeTrace,
                    "Delta > 0 with C1 <= 0 has no real parametrization 2 rho ch t = C1");
      }
      const Real root_delta = sqrt(to_real(nc.delta));
      sd.a = (c1 - root_delta) / 2;
      sd.b = (c1 + root_delta) / 2;
      // t = log(b / rho) avoids acosh cancellation for small Delta.
      sd.angle = log(*sd.b / sd.rho);
      break;
    }
    case Regime::Elliptic:
      sd.angle = acos(c1 / (2 * sd.rho));
      sd.delta_half = sqrt(to_real(-nc.delta)) / 2;
      break;
    case Regime::Parabolic:
      if (nc.c1 <= 0) {
        throw Error(ErrorKind::NegativeTrace, "Delta = 0 with C1 <= 0");
      }
      // C1 = 2 rho exactly, so rho is the integer C1/2.
      sd.rho = to_real(BigInt(nc.c1 / 2));
      break;
  }
  if (z && *z >= 0) sd.sigma = sqrt(to_real(*z));
  return sd;
}

inline SpectralData spectral(const Invariants& inv) {
  return spectral(normalize(inv), inv.z());
}

// ---------------------------------------------------------------------------
// Gate reports

enum class GateStatus { Pass, Fail, NotApplicable, Error };

constexpr std::string_view to_string(GateStatus s) {
  switch (s) {
    case GateStatus::Pass: return "Pass";
    case GateStatus::Fail: return "Fail";
    case GateStatus::NotApplicable: return "NotApplicable";
    case GateStatus::Error: return "Error";
  }
  return "?";
}

using WitnessValue = std::variant<BigInt, Rational, Real, std::vector<BigInt>>;

struct Witness {
  std::string name;
  WitnessValue value;
};

struct GateReport {
  std::string gate_id;
  GateStatus status = GateStatus::NotApplicable;
  std::vector<Witness> witness;
  std::string citation;
  /// Human-readable comparison or the reason for NotApplicable / Error.
  std::string detail;

  const WitnessValue* find(std::string_view name) const {
    for (const auto& w : witness) {
      if (w.name == name) return &w.value;
    }
    return nullptr;
  }
};

inline std::string witness_to_string(const WitnessValue& v, int real_digits = 12) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return to_string(x);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_string(x);
        } else if constexpr (std::is_same_v<T, Real>) {
          return to_fixed(x, real_digits);
        } else {
          std::string out = "[";
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out += ",";
            out += to_string(x[i]);
          }
          return out + "]";
        }
      },
      v);
}

}  // namespace codim2
