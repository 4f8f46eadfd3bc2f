#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "moea/benchmarks.hpp"
#include "moea/core.hpp"
#include "moea/crowding.hpp"
#include "moea/variation.hpp"

namespace moea {

enum class AlgorithmKind { Nsga2, Nsga2Seq, Nsga2T, Nsga2TSeq, Gsemo };

/// nsga2, nsga2-seq, nsga2-t, nsga2-t-seq, gsemo.
[[nodiscard]] std::string_view algorithm_id(AlgorithmKind kind) noexcept;
[[nodiscard]] std::optional<AlgorithmKind> parse_algorithm(std::string_view id) noexcept;
[[nodiscard]] CrowdingKind crowding_of(AlgorithmKind kind) noexcept;
[[nodiscard]] SelectionMode selection_mode_of(AlgorithmKind kind) noexcept;

enum class StopRule { FrontCovered, BudgetOnly };

struct AlgorithmConfig {
  AlgorithmKind algo = AlgorithmKind::Nsga2T;
  std::size_t population_size = 0;  ///< N; unused by GSEMO
  VariationConfig variation;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  ///< maximum number of fitness evaluations
  StopRule stop = StopRule::FrontCovered;
  bool trace = false;

  void validate() const;
};

struct GenerationRecord {
  std::size_t generation = 0;
  std::uint64_t evaluations = 0;
  std::size_t covered = 0;
  bool has_extremes = false;       ///< OneMinMax only
  std::optional<std::size_t> mei;  ///< OneMinMax only
};

struct RunResult {
  std::uint64_t evaluations_used = 0;
  std::size_t generations = 0;
  std::optional<std::uint64_t> covered_at;
  std::optional<std::size_t> covered_at_generation;
  Population final_population;
  /// Generation 0 (the initial population) followed by one record per
  /// generation; only filled when tracing.
  std::vector<GenerationRecord> trace;
};

/// N uniform random genomes, evaluated (N evaluations).
[[nodiscard]] Population initial_population(const Benchmark& benchmark, std::size_t N, Rng& rng,
                                            std::uint64_t& evaluations);

struct GenerationOutcome {
  Population combined;  ///< R_t: parents first, then offspring
  Population next;      ///< P_{t+1}
};

/// One NSGA-II generation: offspring, non-dominated sorting of R_t, and
/// survival selection with the crowding distance and mode of `cfg.algo`.
[[nodiscard]] GenerationOutcome nsga2_step(const Population& parents, const AlgorithmConfig& cfg,
                                           const Benchmark& benchmark, Rng& rng, std::uint64_t& evaluations);

[[nodiscard]] Population nsga2_generation(const Population& parents, const AlgorithmConfig& cfg,
                                          const Benchmark& benchmark, Rng& rng, std::uint64_t& evaluations);

/// One GSEMO step on an archive of mutually non-dominated, distinct
/// objective vectors. A bit-wise mutant of a uniform archive member enters
/// unless some member weakly dominates it; members it weakly dominates are
/// dropped.
[[nodiscard]] Population gsemo_step(const Population& archive, const Benchmark& benchmark, Rng& rng,
                                    std::uint64_t& evaluations);

/// Called after generation 0 and after every later generation; returning
/// false ends the run.
using GenerationObserver = std::function<bool(std::size_t generation, const Population& population)>;

/// Runs until the front is covered (with StopRule::FrontCovered), the
/// observer asks to stop, or the next generation would exceed the budget.
[[nodiscard]] RunResult run(const AlgorithmConfig& cfg, const Benchmark& benchmark,
                            const GenerationObserver& observer = {});

}  // namespace moea
