#pragma once

#include <cstddef>
#include <span>

#include "moea/core.hpp"

namespace moea {

/// Maximum empty interval of the f1 values of a bi-objective OneMinMax
/// population: the sorted distinct f1 values, padded with 0 and n, and the
/// largest gap between neighbours. The padding only matters while one of
/// the extremes 0^n and 1^n is missing.
[[nodiscard]] std::size_t mei(std::span<const ObjectiveValue> first_objective_values, std::size_t n);
[[nodiscard]] std::size_t mei(const Population& population, std::size_t n);

/// ceil(n / (N - 1)): no population of size N containing both extremes can
/// do better. Requires N >= 2.
[[nodiscard]] std::size_t mei_lower_bound(std::size_t n, std::size_t N);

/// max(2n / (N - 1), 1).
[[nodiscard]] double mei_guarantee(std::size_t n, std::size_t N);

/// True when the population holds both 0^n and 1^n of OneMinMax, i.e. the
/// objective vectors (n, 0) and (0, n).
[[nodiscard]] bool has_one_min_max_extremes(const Population& population, std::size_t n);

}  // namespace moea
