#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codim2/error.hpp"
#include "codim2/invariants.hpp"
#include "codim2/numeric.hpp"

namespace codim2 {

/// Q tensor Z[X]/(X^2 - c1 X + c2); xi denotes the class of X.
class QuadRing {
 public:
  /// a + b xi
  struct Element {
    Rational a;
    Rational b;
    friend bool operator==(const Element&, const Element&) = default;
  };

  QuadRing(BigInt c1, BigInt c2) : c1_(std::move(c1)), c2_(std::move(c2)) {}

  const BigInt& c1() const noexcept { return c1_; }
  const BigInt& c2() const noexcept { return c2_; }

  Element one() const { return {Rational(1), Rational(0)}; }
  Element xi() const { return {Rational(0), Rational(1)}; }

  Element add(const Element& x, const Element& y) const { return {x.a + y.a, x.b + y.b}; }

  // xi^2 = c1 xi - c2
  Element mul(const Element& x, const Element& y) const {
    const Rational bb = x.b * y.b;
    return {x.a * y.a - bb * c2_, x.a * y.b + y.a * x.b + bb * c1_};
  }

  Element scale(const Element& x, const Rational& r) const { return {x.a * r, x.b * r}; }

  /// Trace over Q: Tr(1) = 2, Tr(xi) = c1.
  Rational trace(const Element& x) const { return 2 * x.a + x.b * c1_; }

  /// binom(xi + k, n) = (xi+k)(xi+k-1)...(xi+k-n+1) / n!
  Element binomial(const BigInt& k, int n) const {
    Element acc = one();
    BigInt factorial = 1;
    for (int j = 0; j < n; ++j) {
      acc = mul(acc, Element{Rational(k - j), Rational(1)});
      factorial *= j + 1;
    }
    return scale(acc, Rational(1) / Rational(factorial));
  }

 private:
  BigInt c1_;
  BigInt c2_;
};

struct SchwarzenbergerOutcome {
  bool pass = true;
  std::optional<int> failing_k;
  Rational failing_trace;
};

/// Integrality of Tr binom(xi+k, n) for k = 0..n.
///
/// The trace is a polynomial of degree n in k; a degree-n polynomial that is
/// integral at n+1 consecutive integers is an integer combination of
/// binom(k, j) and hence integral on all of Z.
inline SchwarzenbergerOutcome schwarzenberger_outcome(int n, const BigInt& c1, const BigInt& c2) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  const QuadRing ring(c1, c2);
  for (int k = 0; k <= n; ++k) {
    const Rational tr = ring.trace(ring.binomial(BigInt(k), n));
    if (!is_integer(tr)) return {false, k, tr};
  }
  return {};
}

inline GateReport schwarzenberger_check(int n, const BigInt& c1, const BigInt& c2) {
  const SchwarzenbergerOutcome out = schwarzenberger_outcome(n, c1, c2);
  GateReport r;
  r.gate_id = "schwarzenberger";
  r.citation = "Schwarzenberger conditions: Tr binom(xi+k, n) in Z";
  r.witness = {{"n", BigInt(n)}, {"c1", c1}, {"c2", c2}, {"delta", BigInt(c1 * c1 - 4 * c2)}};
  if (out.pass) {
    r.status = GateStatus::Pass;
    r.detail = "traces integral for k = 0.." + std::to_string(n);
  } else {
    r.status = GateStatus::Fail;
    r.witness.push_back({"failing_k", BigInt(*out.failing_k)});
    r.witness.push_back({"trace", out.failing_trace});
    r.detail = "Tr binom(xi+" + std::to_string(*out.failing_k) + ", " + std::to_string(n) +
               ") = " + to_string(out.failing_trace) + " is not an integer";
  }
  return r;
}

inline std::vector<int> primes_below(int n) {
  std::vector<int> primes;
  for (int p = 2; p < n; ++p) {
    bool prime = true;
    for (int q : primes) {
      if (q * q > p) break;
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(p);
  }
  return primes;
}

/// True iff x is a square (possibly 0) modulo the prime p.
inline bool is_square_mod(const BigInt& x, int p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  const std::int64_t res = static_cast<std::int64_t>(r);
  if (res == 0 || p == 2) return true;
  for (std::int64_t y = 1; y <= p / 2; ++y) {
    if ((y * y) % p == res) return true;
  }
  return false;
}

/// First prime p < n at which delta is a non-residue, if any.
inline std::optional<int> qr_failing_prime(int n, const BigInt& delta) {
  for (int p : primes_below(n)) {
    if (!is_square_mod(delta, p)) return p;
  }
  return std::nullopt;
}

inline GateReport qr_claim_check(int n, const BigInt& delta) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "n must be >= 3");
  GateReport r;
  r.gate_id = "qr-claim";
  r.citation = "Delta is a square mod p for each prime p < n";
  r.witness = {{"n", BigInt(n)}, {"delta", delta}};
  if (auto p = qr_failing_prime(n, delta)) {
    BigInt residue = delta % *p;
    if (residue < 0) residue += *p;
    r.status = GateStatus::Fail;
    r.witness.push_back({"failing_prime", BigInt(*p)});
    r.witness.push_back({"residue", residue});
    r.detail = "Delta = " + to_string(residue) + " mod " + std::to_string(*p) + " is a non-residue";
  } else {
    r.status = GateStatus::Pass;
    r.detail = "Delta is a square mod every prime below n";
  }
  return r;
}

/// Canonical representative (c1, c2) with c1 in {0, 1} for a discriminant.
inline std::pair<BigInt, BigInt> canonical_chern(const BigInt& delta) {
  BigInt m = delta % 4;
  if (m < 0) m += 4;
  if (m != 0 && m != 1) {
    throw Error(ErrorKind::InvalidInput, "Delta must be 0 or 1 mod 4, got " + to_string(delta));
  }
  const BigInt c1 = (m == 1) ? 1 : 0;
  return {c1, (c1 * c1 - delta) / 4};
}

/// Schwarzenberger verdict for (n, Delta) through the canonical
/// representative; memoized since scans revisit the same discriminants.
inline SchwarzenbergerOutcome schwarzenberger_for_delta(int n, const BigInt& delta) {
  static std::mutex mutex;
  static std::map<std::pair<int, BigInt>, SchwarzenbergerOutcome> cache;
  const auto key = std::make_pair(n, delta);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto [c1, c2] = canonical_chern(delta);
  SchwarzenbergerOutcome out = schwarzenberger_outcome(n, c1, c2);
  std::lock_guard lock(mutex);
  cache.emplace(key, out);
  return out;
}

struct DeltaRejection {
  BigInt delta;
  BigInt c1;
  BigInt c2;
  int failing_k;
  std::optional<int> failing_prime;
};

struct DeltaSearchResult {
  int n = 0;
  std::optional<BigInt> delta;
  std::int64_t candidates_checked = 0;
  std::vector<DeltaRejection> per_candidate_log;
};

/// Walks Delta = -3, -4, -7, -8, ... while |Delta| <= limit and stops at the
/// first discriminant whose canonical representative passes the
/// Schwarzenberger check. Leaves `delta` empty when none does.
inline DeltaSearchResult scan_negative_discriminants(int n, std::int64_t limit) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "n must be >= 3");
  if (limit < 3) throw Error(ErrorKind::InvalidInput, "limit must be >= 3");
  DeltaSearchResult result;
  result.n = n;
  for (std::int64_t abs_delta = 3; abs_delta <= limit; ++abs_delta) {
    if (abs_delta % 4 != 0 && abs_delta % 4 != 3) continue;
    const BigInt delta = -abs_delta;
    const auto [c1, c2] = canonical_chern(delta);
    ++result.candidates_checked;
    const SchwarzenbergerOutcome out = schwarzenberger_outcome(n, c1, c2);
    if (out.pass) {
      result.delta = delta;
      return result;
    }
    result.per_candidate_log.push_back({delta, c1, c2, *out.failing_k, qr_failing_prime(n, delta)});
  }
  return result;
}

inline DeltaSearchResult delta_min_search(int n, std::int64_t limit) {
  DeltaSearchResult result = scan_negative_discriminants(n, limit);
  if (!result.delta) {
    throw Error(ErrorKind::NotFoundWithinLimit,
                "no Delta with |Delta| <= " + std::to_string(limit) + " passes at n = " +
                    std::to_string(n));
  }
  return result;
}

}  // namespace codim2
