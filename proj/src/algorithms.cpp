#include "moea/algorithms.hpp"

#include <array>
#include <utility>

#include "moea/metrics.hpp"

namespace moea {
namespace {

constexpr std::array<std::pair<AlgorithmKind, std::string_view>, 5> kAlgorithmIds{{
    {AlgorithmKind::Nsga2, "nsga2"},
    {AlgorithmKind::Nsga2Seq, "nsga2-seq"},
    {AlgorithmKind::Nsga2T, "nsga2-t"},
    {AlgorithmKind::Nsga2TSeq, "nsga2-t-seq"},
    {AlgorithmKind::Gsemo, "gsemo"},
}};

GenerationRecord record_of(std::size_t generation, std::uint64_t evaluations, const Population& population,
                           const Benchmark& benchmark) {
  GenerationRecord rec;
  rec.generation = generation;
  rec.evaluations = evaluations;
  rec.covered = coverage(benchmark, population).covered;
  if (benchmark.spec().kind == BenchmarkKind::OneMinMax) {
    rec.has_extremes = has_one_min_max_extremes(population, benchmark.n());
    rec.mei = mei(population, benchmark.n());
  }
  return rec;
}

}  // namespace

std::string_view algorithm_id(AlgorithmKind kind) noexcept {
  for (const auto& [k, id] : kAlgorithmIds) {
    if (k == kind) return id;
  }
  return "?";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view id) noexcept {
  for (const auto& [k, name] : kAlgorithmIds) {
    if (name == id) return k;
  }
  return std::nullopt;
}

CrowdingKind crowding_of(AlgorithmKind kind) noexcept {
  return kind == AlgorithmKind::Nsga2T || kind == AlgorithmKind::Nsga2TSeq ? CrowdingKind::Truthful
                                                                           : CrowdingKind::Classic;
}

SelectionMode selection_mode_of(AlgorithmKind kind) noexcept {
  return kind == AlgorithmKind::Nsga2Seq || kind == AlgorithmKind::Nsga2TSeq ? SelectionMode::Sequential
                                                                             : SelectionMode::Standard;
}

void AlgorithmConfig::validate() const {
  variation.validate();
  if (algo == AlgorithmKind::Gsemo) {
    if (budget < 1) throw ConfigError("budget must allow at least one evaluation");
    return;
  }
  if (population_size < 1) throw ConfigError("population size must be at least 1");
  if (budget < population_size) throw ConfigError("budget must be at least the population size");
}

Population initial_population(const Benchmark& benchmark, std::size_t N, Rng& rng, std::uint64_t& evaluations) {
  Population out;
  for (std::size_t i = 0; i < N; ++i) {
    auto x = random_bit_vector(benchmark.n(), rng);
    auto f = benchmark.evaluate(x);
    out.add(std::move(x), std::move(f));
  }
  evaluations += N;
  return out;
}

GenerationOutcome nsga2_step(const Population& parents, const AlgorithmConfig& cfg, const Benchmark& benchmark,
                             Rng& rng, std::uint64_t& evaluations) {
  if (cfg.algo == AlgorithmKind::Gsemo) throw ContractViolation("nsga2_step: not an NSGA-II variant");
  if (parents.size() != cfg.population_size) throw ContractViolation("nsga2_step: |P| differs from N");
  auto offspring = generate_offspring(parents, cfg.variation, benchmark, rng, evaluations);
  GenerationOutcome out;
  out.combined = Population::concat(parents, offspring.population);
  out.next = survival_select(out.combined, cfg.population_size, crowding_of(cfg.algo),
                             selection_mode_of(cfg.algo), rng);
  return out;
}

Population nsga2_generation(const Population& parents, const AlgorithmConfig& cfg, const Benchmark& benchmark,
                            Rng& rng, std::uint64_t& evaluations) {
  return nsga2_step(parents, cfg, benchmark, rng, evaluations).next;
}

Population gsemo_step(const Population& archive, const Benchmark& benchmark, Rng& rng,
                      std::uint64_t& evaluations) {
  if (archive.empty()) throw ContractViolation("gsemo_step: empty archive");
  std::uniform_int_distribution<std::size_t> pick(0, archive.size() - 1);
  auto child = bitwise_mutation(archive[pick(rng)].genome, rng);
  auto f = benchmark.evaluate(child);
  ++evaluations;

  for (const auto& z : archive) {
    if (weakly_dominates(z.objectives, f)) return archive;
  }
  std::vector<std::size_t> survivors;
  survivors.reserve(archive.size());
  for (const auto& z : archive) {
    if (!weakly_dominates(f, z.objectives)) survivors.push_back(z.index);
  }
  Population next = archive.subset(survivors);
  next.add(std::move(child), std::move(f));
  return next;
}

RunResult run(const AlgorithmConfig& cfg, const Benchmark& benchmark, const GenerationObserver& observer) {
  cfg.validate();
  Rng rng(cfg.seed);
  RunResult result;
  std::uint64_t evaluations = 0;
  const bool gsemo = cfg.algo == AlgorithmKind::Gsemo;
  const std::uint64_t cost = gsemo ? 1 : cfg.population_size;

  Population population = initial_population(benchmark, gsemo ? 1 : cfg.population_size, rng, evaluations);
  std::size_t generation = 0;

  auto after_generation = [&]() {
    const bool covered = coverage(benchmark, population).complete();
    if (covered && !result.covered_at) {
      result.covered_at = evaluations;
      result.covered_at_generation = generation;
    }
    if (cfg.trace) result.trace.push_back(record_of(generation, evaluations, population, benchmark));
    const bool keep_going = !observer || observer(generation, population);
    return keep_going && !(covered && cfg.stop == StopRule::FrontCovered);
  };

  bool keep_going = after_generation();
  while (keep_going && evaluations + cost <= cfg.budget) {
    population = gsemo ? gsemo_step(population, benchmark, rng, evaluations)
                       : nsga2_generation(population, cfg, benchmark, rng, evaluations);
    ++generation;
    keep_going = after_generation();
  }

  result.evaluations_used = evaluations;
  result.generations = generation;
  result.final_population = std::move(population);
  return result;
}

}  // namespace moea
