#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "moea/core.hpp"

namespace moea {

enum class BenchmarkKind { OneMinMax, COCZ, LOTZ, OJZJ, MOneMinMax, MCOCZ, MLOTZ, MOJZJ };

/// CLI identifiers: omm, cocz, lotz, ojzj, m-omm, m-cocz, m-lotz, m-ojzj.
[[nodiscard]] std::string_view benchmark_id(BenchmarkKind kind) noexcept;
[[nodiscard]] std::optional<BenchmarkKind> parse_benchmark(std::string_view id) noexcept;
[[nodiscard]] bool is_many_objective(BenchmarkKind kind) noexcept;

struct BenchmarkSpec {
  BenchmarkKind kind = BenchmarkKind::OneMinMax;
  std::size_t n = 0;
  std::size_t m = 2;  ///< forced to 2 for the bi-objective kinds
  std::size_t k = 0;  ///< jump parameter, OJZJ kinds only
};

/// A validated benchmark: fitness function plus closed-form Pareto-front
/// oracle (front size and membership).
///
/// m-variants split x into m/2 consecutive blocks of length 2n/m and apply
/// the bi-objective function to block i for objectives (2i-1, 2i). mCOCZ is
/// the exception: the first n/2 bits form a cooperative part counted by
/// every objective, and the second half is split into m/2 blocks of n/m bits
/// contributing ones to f_{2i-1} and zeros to f_{2i}.
class Benchmark {
 public:
  /// Throws ConfigError when the parameters violate the benchmark's
  /// constraints.
  explicit Benchmark(BenchmarkSpec spec);

  [[nodiscard]] const BenchmarkSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t n() const noexcept { return spec_.n; }
  [[nodiscard]] std::size_t m() const noexcept { return spec_.m; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] ObjectiveVector evaluate(const BitVector& x) const;

  /// Number of distinct Pareto-optimal objective vectors.
  [[nodiscard]] std::size_t front_size() const noexcept { return front_size_; }
  [[nodiscard]] bool is_front_value(std::span<const ObjectiveValue> v) const;

 private:
  BenchmarkSpec spec_;
  std::size_t front_size_ = 0;
};

struct Coverage {
  std::size_t covered = 0;
  std::size_t total = 0;
  [[nodiscard]] bool complete() const noexcept { return covered == total; }
};

/// Distinct Pareto-optimal objective vectors present in the population.
[[nodiscard]] Coverage coverage(const Benchmark& benchmark, const Population& population);

[[nodiscard]] Population evaluate_all(const Benchmark& benchmark, std::span<const BitVector> genomes);

}  // namespace moea
