#pragma once

#include <cstdint>
#include <limits>

namespace revrank {

using NodeId = std::uint32_t;

// Distance of a node that cannot be reached. Always compare with
// is_unreachable(); never encode unreachability as a large finite value.
constexpr double kUnreachable = std::numeric_limits<double>::infinity();

inline bool is_unreachable(double d) { return d == kUnreachable; }

// How a rank is resolved from the (strict, closed) neighborhood pair when
// distances tie. "upper" is the closed-neighborhood count and the default
// used throughout the toolkit.
enum class RankMode {
  upper,
  lower_plus_one,
  midpoint,
};

inline double resolve_rank(double lower, double upper, RankMode mode) {
  switch (mode) {
    case RankMode::upper: return upper;
    case RankMode::lower_plus_one: return lower + 1.0;
    case RankMode::midpoint: return (lower + 1.0 + upper) / 2.0;
  }
  return upper;
}

}  // namespace revrank
