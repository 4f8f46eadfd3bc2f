#include <doctest.h>

#include <set>

#include "moea/moea.hpp"

using moea::AlgorithmKind;
using moea::BenchmarkKind;

namespace {

moea::AlgorithmConfig config(AlgorithmKind algo, std::size_t N, std::uint64_t seed, std::uint64_t budget) {
  moea::AlgorithmConfig cfg;
  cfg.algo = algo;
  cfg.population_size = N;
  cfg.seed = seed;
  cfg.budget = budget;
  return cfg;
}

std::set<moea::ObjectiveVector> front_values(const moea::Benchmark& b, const moea::Population& p) {
  std::set<moea::ObjectiveVector> out;
  for (const auto& x : p) {
    if (b.is_front_value(x.objectives)) out.insert(x.objectives);
  }
  return out;
}

}  // namespace

TEST_SUITE("algorithms") {
  TEST_CASE("algorithm ids") {
    for (auto a : {AlgorithmKind::Nsga2, AlgorithmKind::Nsga2Seq, AlgorithmKind::Nsga2T, AlgorithmKind::Nsga2TSeq,
                   AlgorithmKind::Gsemo}) {
      CHECK(moea::parse_algorithm(moea::algorithm_id(a)) == a);
    }
    CHECK_FALSE(moea::parse_algorithm("spea2").has_value());
    CHECK(moea::crowding_of(AlgorithmKind::Nsga2TSeq) == moea::CrowdingKind::Truthful);
    CHECK(moea::crowding_of(AlgorithmKind::Nsga2Seq) == moea::CrowdingKind::Classic);
    CHECK(moea::selection_mode_of(AlgorithmKind::Nsga2T) == moea::SelectionMode::Standard);
    CHECK(moea::selection_mode_of(AlgorithmKind::Nsga2Seq) == moea::SelectionMode::Sequential);
  }

  TEST_CASE("configuration errors") {
    const moea::Benchmark omm({BenchmarkKind::OneMinMax, 8, 2, 0});
    CHECK_THROWS_AS((void)moea::run(config(AlgorithmKind::Nsga2T, 0, 1, 100), omm), moea::ConfigError);
    CHECK_THROWS_AS((void)moea::run(config(AlgorithmKind::Nsga2T, 10, 1, 5), omm), moea::ConfigError);
    auto cfg = config(AlgorithmKind::Nsga2T, 10, 1, 100);
    cfg.variation.crossover_rate = 1.5;
    CHECK_THROWS_AS((void)moea::run(cfg, omm), moea::ConfigError);
  }

  TEST_CASE("population of one") {
    const moea::Benchmark omm({BenchmarkKind::OneMinMax, 6, 2, 0});
    const auto cfg = config(AlgorithmKind::Nsga2T, 1, 3, 50);
    const auto r = moea::run(cfg, omm);
    CHECK(r.final_population.size() == 1);
    CHECK(r.evaluations_used == 50);
    CHECK(r.generations == 49);
    CHECK_FALSE(r.covered_at.has_value());
  }

  TEST_CASE("smallest instance is covered") {
    const moea::Benchmark omm({BenchmarkKind::OneMinMax, 1, 2, 0});
    for (auto algo : {AlgorithmKind::Nsga2, AlgorithmKind::Nsga2T, AlgorithmKind::Nsga2TSeq}) {
      const auto r = moea::run(config(algo, 2, 5, 1000), omm);
      REQUIRE(r.covered_at.has_value());
      CHECK(r.final_population.size() == 2);
      CHECK(*r.covered_at == r.evaluations_used);
    }
  }

  TEST_CASE("truthful NSGA-II covers four-objective OneMinMax") {
    const moea::Benchmark b({BenchmarkKind::MOneMinMax, 8, 4, 0});
    for (auto algo : {AlgorithmKind::Nsga2T, AlgorithmKind::Nsga2TSeq}) {
      const auto r = moea::run(config(algo, 25, 17, 1'000'000), b);
      REQUIRE(r.covered_at.has_value());
      CHECK(moea::coverage(b, r.final_population).complete());
      CHECK(*r.covered_at_generation == r.generations);
    }
  }

  TEST_CASE("evaluation accounting") {
    const moea::Benchmark lotz({BenchmarkKind::LOTZ, 30, 2, 0});
    auto cfg = config(AlgorithmKind::Nsga2, 10, 9, 1005);
    cfg.stop = moea::StopRule::BudgetOnly;
    const auto r = moea::run(cfg, lotz);
    CHECK(r.evaluations_used == 1000);
    CHECK(r.generations == 99);

    auto g = config(AlgorithmKind::Gsemo, 0, 9, 300);
    g.stop = moea::StopRule::BudgetOnly;
    const auto s = moea::run(g, lotz);
    CHECK(s.evaluations_used == 300);
    CHECK(s.generations == 299);
  }

  TEST_CASE("runs are reproducible from the seed") {
    const moea::Benchmark b({BenchmarkKind::OJZJ, 12, 2, 2});
    for (auto algo : {AlgorithmKind::Nsga2Seq, AlgorithmKind::Nsga2T, AlgorithmKind::Gsemo}) {
      auto cfg = config(algo, 13, 77, 20000);
      cfg.variation.crossover_rate = algo == AlgorithmKind::Gsemo ? 0.0 : 0.5;
      const auto a = moea::run(cfg, b);
      const auto c = moea::run(cfg, b);
      CHECK(a.evaluations_used == c.evaluations_used);
      CHECK(a.covered_at == c.covered_at);
      REQUIRE(a.final_population.size() == c.final_population.size());
      for (std::size_t i = 0; i < a.final_population.size(); ++i) {
        CHECK(a.final_population[i].genome == c.final_population[i].genome);
      }
    }
  }

  TEST_CASE("truthful survival keeps every front value already found") {
    const std::size_t n = 20;
    const moea::Benchmark omm({BenchmarkKind::OneMinMax, n, 2, 0});
    for (auto algo : {AlgorithmKind::Nsga2T, AlgorithmKind::Nsga2TSeq}) {
      const auto cfg = config(algo, n + 1, 31, 0);
      moea::Rng rng(31);
      std::uint64_t evals = 0;
      auto pop = moea::initial_population(omm, cfg.population_size, rng, evals);
      for (int g = 0; g < 300; ++g) {
        auto step = moea::nsga2_step(pop, cfg, omm, rng, evals);
        const auto before = front_values(omm, step.combined);
        CHECK(front_values(omm, step.next) == before);
        pop = std::move(step.next);
      }
    }
  }

  TEST_CASE("extremes stay once found") {
    const std::size_t n = 30;
    const moea::Benchmark omm({BenchmarkKind::OneMinMax, n, 2, 0});
    auto cfg = config(AlgorithmKind::Nsga2TSeq, 8, 4, 80'000);
    cfg.stop = moea::StopRule::BudgetOnly;
    cfg.trace = true;
    const auto r = moea::run(cfg, omm);
    bool seen = false;
    for (const auto& rec : r.trace) {
      if (seen) CHECK(rec.has_extremes);
      seen = seen || rec.has_extremes;
    }
    CHECK(seen);
    CHECK(r.trace.size() == r.generations + 1);
  }

  TEST_CASE("GSEMO archive holds distinct non-dominated values") {
    const moea::Benchmark lotz({BenchmarkKind::LOTZ, 10, 2, 0});
    moea::Rng rng(8);
    std::uint64_t evals = 0;
    auto archive = moea::initial_population(lotz, 1, rng, evals);
    for (int t = 0; t < 20000; ++t) {
      archive = moea::gsemo_step(archive, lotz, rng, evals);
      for (std::size_t i = 0; i < archive.size(); ++i) {
        for (std::size_t j = i + 1; j < archive.size(); ++j) {
          REQUIRE(moea::compare_dominance(archive[i].objectives, archive[j].objectives) ==
                  moea::Dominance::Incomparable);
        }
      }
    }
    CHECK(evals == 20001);
    CHECK(archive.size() == lotz.front_size());
  }

  TEST_CASE("GSEMO replaces weakly dominated members") {
    const moea::Benchmark omm({BenchmarkKind::OneMinMax, 1, 2, 0});
    moea::Population archive;
    archive.add(moea::BitVector::from_string("0"), omm.evaluate(moea::BitVector::from_string("0")));
    moea::Rng rng(2);
    std::uint64_t evals = 0;
    while (archive.size() < 2) archive = moea::gsemo_step(archive, omm, rng, evals);
    CHECK(moea::coverage(omm, archive).complete());
    // An equal vector never enters.
    for (int t = 0; t < 50; ++t) archive = moea::gsemo_step(archive, omm, rng, evals);
    CHECK(archive.size() == 2);
  }
}
