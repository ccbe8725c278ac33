#pragma once

#include <optional>
#include <string_view>

namespace codim2 {

/// External lower bounds quoted from the literature, kept in one table.
///
/// Each entry gives e >= e_slope * n + e_offset for n >= min_n, valid for
/// subcanonical codimension-two X with Delta < 0 and e+n+1 <= 2s.
struct SpecialityLowerBound {
  int min_n;
  int e_slope;
  int e_offset;
  std::string_view citation;
};

inline constexpr SpecialityLowerBound kHolmeSchneiderBounds[] = {
    {6, 1, 2, "[HS]: e >= n+2 for n >= 6"},
    {8, 2, -1, "[HS]: e >= 2n-1 for n >= 8"},
};

/// Strongest tabulated e lower bound at dimension n, if any applies.
constexpr std::optional<SpecialityLowerBound> strongest_e_bound(int n) {
  std::optional<SpecialityLowerBound> best;
  for (const auto& b : kHolmeSchneiderBounds) {
    if (n < b.min_n) continue;
    if (!best || b.e_slope * n + b.e_offset > best->e_slope * n + best->e_offset) best = b;
  }
  return best;
}

/// Ran: a codimension-two subscheme that is not a complete intersection has
/// degree at least n-1; applied to the residual of degree z.
inline constexpr std::string_view kRanCitation = "[Ran]: z >= n-1 unless complete intersection";

}  // namespace codim2
