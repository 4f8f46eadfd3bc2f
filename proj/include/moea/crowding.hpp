#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "moea/core.hpp"

namespace moea {

/// Non-negative crowding value or the +infinity sentinel. Infinity only takes
/// part in comparisons, never in arithmetic.
class CrowdingValue {
 public:
  [[nodiscard]] static constexpr CrowdingValue infinity() noexcept { return CrowdingValue(true, 0.0); }
  [[nodiscard]] static CrowdingValue finite(double value);

  [[nodiscard]] constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; throws ContractViolation on the infinity sentinel.
  [[nodiscard]] double value() const;
  /// Finite value, or IEEE +inf for the sentinel. Export only.
  [[nodiscard]] double to_double() const noexcept;

  friend constexpr bool operator==(const CrowdingValue& a, const CrowdingValue& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::weak_ordering operator<=>(const CrowdingValue& a, const CrowdingValue& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (b.value_ < a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  constexpr CrowdingValue(bool infinite, double value) noexcept : infinite_(infinite), value_(value) {}

  bool infinite_;
  double value_;
};

/// Per-objective descending orders of a front plus the normalization ranges.
struct SortedViews {
  /// orders[i] is a permutation of front positions, non-increasing in f_i.
  std::vector<std::vector<std::size_t>> orders;
  /// denominators[i] = max f_i - min f_i over the front.
  std::vector<double> denominators;
};

/// Sorts the front once per objective with correlated tie-breaking: ties on
/// f_i are broken by the full objective vector (lexicographically
/// descending), then by position. Identical vectors therefore keep the same
/// relative order in every list.
[[nodiscard]] SortedViews correlated_sort(std::span<const ObjectiveVector> front);

/// Sum over objectives of |a_i - b_i| / denominators_i; a summand with a zero
/// denominator counts as 0.
[[nodiscard]] double normalized_l1(std::span<const double> denominators,
                                   std::span<const ObjectiveValue> a,
                                   std::span<const ObjectiveValue> b);

/// Truthful crowding distance of every front member, aligned with the input.
/// A member that heads some objective's order gets infinity. Otherwise its
/// value sums, over objectives, the smallest normalized L1 distance to any
/// member placed before it in that objective's order. Theta(m |S|^2).
[[nodiscard]] std::vector<CrowdingValue> truthful_crowding_distance(std::span<const ObjectiveVector> front);

/// Classic NSGA-II crowding distance over the same correlated orders. First
/// or last in any order gives infinity; otherwise the normalized gaps between
/// the two neighbours are summed over objectives.
[[nodiscard]] std::vector<CrowdingValue> classic_crowding_distance(std::span<const ObjectiveVector> front);

enum class CrowdingKind { Classic, Truthful };
enum class SelectionMode { Standard, Sequential };

[[nodiscard]] std::vector<CrowdingValue> crowding_distance(CrowdingKind kind,
                                                           std::span<const ObjectiveVector> front);

/// Chooses N survivors from the combined population: whole fronts while they
/// fit, then removals from the critical front, each taking a member with the
/// smallest crowding distance (uniform among ties). Sequential mode
/// recomputes the distances of the remaining critical-front members after
/// every removal; standard mode computes them once. Survivors keep their
/// relative order from `combined`.
[[nodiscard]] Population survival_select(const Population& combined, std::size_t N, CrowdingKind kind,
                                         SelectionMode mode, Rng& rng);

}  // namespace moea
