#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moea {

/// Raised when a caller breaks a documented precondition (empty input,
/// mismatched lengths, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for invalid user-facing configuration (benchmark parameters,
/// algorithm settings, preset names). The CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rng = std::mt19937_64;

/// Fixed-length genome over {0,1}. The length never changes after
/// construction; individual bits may be flipped.
class BitVector {
 public:
  explicit BitVector(std::size_t n);
  explicit BitVector(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters, first character is bit 0.
  static BitVector from_string(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  [[nodiscard]] std::size_t count_ones() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

[[nodiscard]] std::size_t hamming_distance(const BitVector& a, const BitVector& b);

using ObjectiveValue = std::int64_t;
/// m objective values of one evaluated genome, all maximized.
using ObjectiveVector = std::vector<ObjectiveValue>;

struct Individual {
  BitVector genome;
  ObjectiveVector objectives;
  std::size_t index = 0;
};

/// Ordered collection of evaluated individuals. Member indices always equal
/// their position, so a population can be cut and concatenated without the
/// caller tracking indices.
class Population {
 public:
  Population() = default;

  void add(BitVector genome, ObjectiveVector objectives);

  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] const Individual& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] std::span<const Individual> members() const noexcept { return members_; }
  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }

  /// Number of objectives shared by all members (0 when empty).
  [[nodiscard]] std::size_t num_objectives() const noexcept;

  /// Members at the given positions, in the given order, re-indexed.
  [[nodiscard]] Population subset(std::span<const std::size_t> positions) const;

  /// `first` followed by `second`, re-indexed.
  [[nodiscard]] static Population concat(const Population& first, const Population& second);

  [[nodiscard]] std::vector<ObjectiveVector> objective_vectors() const;

 private:
  std::vector<Individual> members_;
};

enum class Dominance { FirstStrictlyDominates, SecondStrictlyDominates, Equal, Incomparable };

[[nodiscard]] std::string_view to_string(Dominance d) noexcept;

/// Pareto comparison under maximization.
[[nodiscard]] Dominance compare_dominance(std::span<const ObjectiveValue> u,
                                          std::span<const ObjectiveValue> v);

/// u ⪰ v: componentwise greater or equal.
[[nodiscard]] bool weakly_dominates(std::span<const ObjectiveValue> u,
                                    std::span<const ObjectiveValue> v);

/// Positions into the sorted input, ascending.
using Front = std::vector<std::size_t>;
using FrontPartition = std::vector<Front>;

/// Partitions the input into non-dominated fronts F1, F2, ... using the
/// pairwise domination-count method, O(m n^2). Positions inside each front
/// are ascending, i.e. input order is kept.
[[nodiscard]] FrontPartition non_dominated_sort(std::span<const ObjectiveVector> objectives);
[[nodiscard]] FrontPartition non_dominated_sort(const Population& population);

}  // namespace moea
