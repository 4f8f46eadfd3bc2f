#include <doctest.h>

#include <set>
#include <sstream>

#include "moea/moea.hpp"

using moea::CsvRow;

namespace {

CsvRow row(std::string metric, std::optional<double> value, std::size_t run = 0) {
  CsvRow r;
  r.preset = "p";
  r.algo = "nsga2-t";
  r.benchmark = "omm";
  r.n = 10;
  r.m = 2;
  r.N = 11;
  r.run = run;
  r.seed = 42;
  r.metric = std::move(metric);
  r.value = value;
  return r;
}

moea::ExperimentConfig tiny_cover() {
  moea::ExperimentConfig cfg;
  cfg.name = "tiny";
  cfg.runs = 4;
  cfg.cells.push_back({moea::AlgorithmKind::Nsga2T, {moea::BenchmarkKind::OneMinMax, 8, 2, 0}, 9, 100'000});
  cfg.cells.push_back({moea::AlgorithmKind::Gsemo, {moea::BenchmarkKind::OJZJ, 8, 2, 2}, 0, 100'000});
  return cfg;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("maximum empty interval") {
    const std::vector<moea::ObjectiveValue> f1{0, 3, 7, 10};
    CHECK(moea::mei(f1, 10) == 4);
    const std::vector<moea::ObjectiveValue> inner{4, 4, 6};
    CHECK(moea::mei(inner, 10) == 4);
    const std::vector<moea::ObjectiveValue> full{0, 1, 2, 3};
    CHECK(moea::mei(full, 3) == 1);
    CHECK_THROWS_AS((void)moea::mei(std::vector<moea::ObjectiveValue>{}, 3), moea::ContractViolation);
    CHECK(moea::mei_lower_bound(10, 3) == 5);
    CHECK(moea::mei_lower_bound(101, 26) == 5);
    CHECK(moea::mei_guarantee(101, 26) == doctest::Approx(8.08));
    CHECK(moea::mei_guarantee(2, 10) == 1.0);
  }

  TEST_CASE("order statistics") {
    CHECK(moea::order_statistic({3, 1, 2}, moea::Statistic::Median) == 2.0);
    CHECK(moea::order_statistic({4, 1, 3, 2}, moea::Statistic::Median) == 2.5);
    std::vector<double> twenty;
    for (int i = 20; i >= 1; --i) twenty.push_back(i);
    CHECK(moea::order_statistic(twenty, moea::Statistic::Q1) == 5.0);
    CHECK(moea::order_statistic(twenty, moea::Statistic::Q3) == 15.0);
    CHECK(moea::order_statistic({7}, moea::Statistic::Q1) == 7.0);
    CHECK_THROWS_AS((void)moea::order_statistic({}, moea::Statistic::Median), moea::ContractViolation);
  }

  TEST_CASE("aggregation ignores missing values") {
    const std::vector<CsvRow> rows{row("evaluations_to_cover", 10, 0), row("evaluations_to_cover", std::nullopt, 1),
                                   row("evaluations_to_cover", 30, 2), row("generations_to_cover", std::nullopt, 0)};
    const auto agg = moea::aggregate(rows, moea::Statistic::Median);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].metric == "evaluations_to_cover_median");
    CHECK(agg[0].value == 20.0);
    CHECK_FALSE(agg[0].run.has_value());
    CHECK_FALSE(agg[0].seed.has_value());
  }

  TEST_CASE("csv layout") {
    auto a = row("mei", 4.0, 3);
    a.generation = 17;
    auto b = row("evaluations_to_cover", std::nullopt, 1);
    b.N.reset();
    auto c = row("evaluations_to_cover_median", 2.5);
    c.run.reset();
    c.seed.reset();
    c.benchmark = "ojzj";
    c.k = 2;
    CHECK(moea::to_csv({a, b, c}) ==
          "preset,algo,benchmark,n,m,k,N,run,seed,metric,generation,value\n"
          "p,nsga2-t,omm,10,2,,11,3,42,mei,17,4\n"
          "p,nsga2-t,omm,10,2,,,1,42,evaluations_to_cover,,\n"
          "p,nsga2-t,ojzj,10,2,2,11,,,evaluations_to_cover_median,,2.5\n");
  }

  TEST_CASE("presets") {
    const auto names = moea::preset_names();
    CHECK(names.size() == 6);
    for (auto name : names) {
      const auto cfg = moea::make_preset(name);
      CHECK(cfg.name == name);
      CHECK_FALSE(cfg.cells.empty());
    }
    CHECK_THROWS_AS((void)moea::make_preset("fig9"), moea::ConfigError);
    const auto fig1 = moea::make_preset("fig1");
    CHECK(fig1.cells.size() == 25);
    CHECK(fig1.cells[0].population_size == 9);
    CHECK(fig1.cells[1].population_size == 18);
  }

  TEST_CASE("seeds differ per run and cell") {
    std::set<std::uint64_t> seeds;
    for (std::size_t r = 0; r < 50; ++r) {
      seeds.insert(moea::derive_seed(1, "fig1", moea::AlgorithmKind::Nsga2T, 8, 25, r));
      seeds.insert(moea::derive_seed(1, "fig1", moea::AlgorithmKind::Nsga2TSeq, 8, 25, r));
      seeds.insert(moea::derive_seed(1, "fig2", moea::AlgorithmKind::Nsga2T, 8, 25, r));
      seeds.insert(moea::derive_seed(2, "fig1", moea::AlgorithmKind::Nsga2T, 8, 25, r));
      seeds.insert(moea::derive_seed(1, "fig1", moea::AlgorithmKind::Nsga2T, 12, 25, r));
    }
    CHECK(seeds.size() == 250);
    CHECK(moea::derive_seed(1, "x", moea::AlgorithmKind::Gsemo, 4, 0, 3) ==
          moea::derive_seed(1, "x", moea::AlgorithmKind::Gsemo, 4, 0, 3));
  }

  TEST_CASE("experiment output is deterministic and thread independent") {
    const auto cfg = tiny_cover();
    const auto serial = moea::to_csv(moea::run_preset(cfg, 1));
    CHECK(serial == moea::to_csv(moea::run_preset(cfg, 1)));
    CHECK(serial == moea::to_csv(moea::run_preset(cfg, 3)));
    const auto rows = moea::run_preset(cfg, 1);
    CHECK(rows.size() == 2 * 4 * 2);
    for (const auto& r : rows) CHECK(r.value.has_value());
    CHECK(rows.back().k == 2);
    CHECK_FALSE(rows.back().N.has_value());
  }

  TEST_CASE("approximation windows are anchored at the extremes") {
    moea::ExperimentConfig cfg;
    cfg.name = "win";
    cfg.kind = moea::ExperimentKind::Approximation;
    cfg.runs = 2;
    cfg.windows = {{1, 3}, {6, 7}};
    cfg.cells.push_back({moea::AlgorithmKind::Nsga2TSeq, {moea::BenchmarkKind::OneMinMax, 12, 2, 0}, 5, 1'000'000});
    const auto rows = moea::run_preset(cfg, 1);
    REQUIRE(rows.size() == 2 * 6);
    for (std::size_t r = 0; r < 2; ++r) {
      const auto* base = &rows[r * 6];
      CHECK(base[0].metric == "extremes_generation");
      REQUIRE(base[0].value.has_value());
      const std::vector<std::size_t> gens{1, 2, 3, 6, 7};
      for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(base[i + 1].metric == "mei");
        CHECK(base[i + 1].generation == gens[i]);
        CHECK(*base[i + 1].value >= 3.0);
      }
    }
    cfg.cells[0].benchmark.kind = moea::BenchmarkKind::LOTZ;
    CHECK_THROWS_AS((void)moea::run_preset(cfg, 1), moea::ConfigError);
  }
}
