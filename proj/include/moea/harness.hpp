#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moea/algorithms.hpp"
#include "moea/benchmarks.hpp"
#include "moea/variation.hpp"

namespace moea {

/// One CSV record. Optional fields are written as empty cells.
struct CsvRow {
  std::string preset;
  std::string algo;
  std::string benchmark;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> N;
  std::optional<std::size_t> run;
  std::optional<std::uint64_t> seed;
  std::string metric;
  std::optional<std::size_t> generation;
  std::optional<double> value;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "preset,algo,benchmark,n,m,k,N,run,seed,metric,generation,value";

/// Header line plus one line per row, LF terminated. Numbers use '.' and the
/// shortest fixed-notation form that round-trips.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);
[[nodiscard]] std::string to_csv(const std::vector<CsvRow>& rows);

/// Metric names emitted by the harness.
namespace metric {
inline constexpr std::string_view kEvaluationsToCover = "evaluations_to_cover";
inline constexpr std::string_view kGenerationsToCover = "generations_to_cover";
inline constexpr std::string_view kExtremesGeneration = "extremes_generation";
inline constexpr std::string_view kMei = "mei";
}  // namespace metric

enum class ExperimentKind {
  CoverTime,      ///< evaluations until the whole front is in the population
  Approximation,  ///< MEI traces after both OneMinMax extremes are found
};

struct ExperimentCell {
  AlgorithmKind algo = AlgorithmKind::Nsga2T;
  BenchmarkSpec benchmark;
  std::size_t population_size = 0;
  std::uint64_t budget = 0;
};

/// Generations [first..last] counted from the generation in which both
/// extremes were first present (that generation is 0).
struct GenerationWindow {
  std::size_t first = 1;
  std::size_t last = 1;
};

struct ExperimentConfig {
  std::string name;
  std::string description;
  ExperimentKind kind = ExperimentKind::CoverTime;
  VariationConfig variation;
  std::vector<ExperimentCell> cells;
  std::size_t runs = 20;
  std::uint64_t master_seed = 1;
  std::vector<GenerationWindow> windows;

  void validate() const;
};

[[nodiscard]] std::vector<std::string_view> preset_names();

/// Throws ConfigError for an unknown name.
[[nodiscard]] ExperimentConfig make_preset(std::string_view name);

/// splitmix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of one run, chained through mix64 from the master seed, an FNV-1a
/// hash of the preset name, the algorithm, n, N and the run index.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view preset, AlgorithmKind algo,
                                        std::size_t n, std::size_t N, std::size_t run_index) noexcept;

/// Rows of one run inside an experiment.
[[nodiscard]] std::vector<CsvRow> run_experiment_cell(const ExperimentConfig& cfg, const ExperimentCell& cell,
                                                      std::size_t run_index);

/// All runs of all cells. Runs may execute on several threads; the output
/// is ordered by cell, then run, independent of scheduling.
[[nodiscard]] std::vector<CsvRow> run_preset(const ExperimentConfig& cfg, std::size_t threads = 1);

enum class Statistic { Median, Q1, Q3 };

[[nodiscard]] std::string_view to_string(Statistic s) noexcept;

/// Order statistic of a sample: median averages the two central values for
/// even counts; quartiles use the nearest-rank rule (rank ceil(q * count)).
[[nodiscard]] double order_statistic(std::vector<double> values, Statistic s);

/// Groups rows by (preset, algo, benchmark, n, m, k, N, metric, generation)
/// and emits one row per group with metric "<metric>_<statistic>" and empty
/// run/seed. Rows without a value (e.g. uncovered runs) are ignored; groups
/// left empty are omitted.
[[nodiscard]] std::vector<CsvRow> aggregate(const std::vector<CsvRow>& rows, Statistic s);

}  // namespace moea
