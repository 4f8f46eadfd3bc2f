#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "moea/benchmarks.hpp"
#include "moea/core.hpp"

namespace moea {

enum class ParentSelection { Fair, Random };
enum class MutationKind { OneBit, Bitwise };

[[nodiscard]] std::string_view to_string(ParentSelection s) noexcept;
[[nodiscard]] std::string_view to_string(MutationKind k) noexcept;
[[nodiscard]] std::optional<ParentSelection> parse_selection(std::string_view id) noexcept;
[[nodiscard]] std::optional<MutationKind> parse_mutation(std::string_view id) noexcept;

/// Offspring generation settings. The mutation rate is always 1/n.
struct VariationConfig {
  ParentSelection selection = ParentSelection::Random;
  MutationKind mutation = MutationKind::Bitwise;
  double crossover_rate = 0.0;

  /// Throws ConfigError unless 0 <= p < 1 and fair selection runs without
  /// crossover.
  void validate() const;
};

/// Flips exactly one uniformly chosen bit.
[[nodiscard]] BitVector one_bit_mutation(const BitVector& x, Rng& rng);

/// Flips every bit independently with probability 1/n.
[[nodiscard]] BitVector bitwise_mutation(const BitVector& x, Rng& rng);

[[nodiscard]] BitVector mutate(const BitVector& x, MutationKind kind, Rng& rng);

/// Takes each bit from x or y with probability 1/2.
[[nodiscard]] BitVector uniform_crossover(const BitVector& x, const BitVector& y, Rng& rng);

/// Uniform random genome; used for the initial population.
[[nodiscard]] BitVector random_bit_vector(std::size_t n, Rng& rng);

struct Offspring {
  Population population;
  std::size_t crossovers = 0;  ///< offspring produced by crossover
};

/// Creates |parents| offspring and evaluates each one, adding |parents| to
/// `evaluations`. Fair selection mutates every parent once. Random selection
/// fills each slot independently: with probability p it crosses two uniform
/// parents (drawn with replacement), otherwise it mutates one uniform parent.
/// Crossover offspring are not mutated afterwards.
[[nodiscard]] Offspring generate_offspring(const Population& parents, const VariationConfig& cfg,
                                           const Benchmark& benchmark, Rng& rng, std::uint64_t& evaluations);

}  // namespace moea
