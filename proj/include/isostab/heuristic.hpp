#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isostab/geom.hpp"

namespace isostab {

/// Hull of one point per segment, each drawn uniformly from the grid of
/// 2^20 + 1 equally spaced points on the segment.
Polygon random_stabber_hull(const Instance& s, std::uint64_t seed);

/// Seed of run `run` derived from a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t run);

struct HeuristicReport {
  std::size_t runs = 0;
  std::vector<Rational> areas;
  Rational mean, min, max;
  std::optional<Rational> optimal;
  std::optional<double> ratio_to_optimal;  // optimal / mean
};

HeuristicReport heuristic_stats(const Instance& s, std::size_t runs, std::uint64_t seed);

/// Random instance: horizontal or vertical by a fair coin, anchor uniform on
/// the integer grid [0, 10n]^2, length uniform on [1, 2n].
Instance random_instance(std::size_t n, std::uint64_t seed);

}  // namespace isostab
