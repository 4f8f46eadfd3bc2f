#include "moea/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

namespace moea {
namespace {

constexpr std::array<std::pair<BenchmarkKind, std::string_view>, 8> kBenchmarkIds{{
    {BenchmarkKind::OneMinMax, "omm"},
    {BenchmarkKind::COCZ, "cocz"},
    {BenchmarkKind::LOTZ, "lotz"},
    {BenchmarkKind::OJZJ, "ojzj"},
    {BenchmarkKind::MOneMinMax, "m-omm"},
    {BenchmarkKind::MCOCZ, "m-cocz"},
    {BenchmarkKind::MLOTZ, "m-lotz"},
    {BenchmarkKind::MOJZJ, "m-ojzj"},
}};

using Bits = std::span<const std::uint8_t>;

ObjectiveValue ones(Bits block) {
  return static_cast<ObjectiveValue>(std::count(block.begin(), block.end(), std::uint8_t{1}));
}

ObjectiveValue leading_ones(Bits block) {
  const auto it = std::find(block.begin(), block.end(), std::uint8_t{0});
  return static_cast<ObjectiveValue>(it - block.begin());
}

ObjectiveValue trailing_zeros(Bits block) {
  const auto it = std::find(block.rbegin(), block.rend(), std::uint8_t{1});
  return static_cast<ObjectiveValue>(it - block.rbegin());
}

std::pair<ObjectiveValue, ObjectiveValue> one_jump_zero_jump(Bits block, ObjectiveValue k) {
  const auto len = static_cast<ObjectiveValue>(block.size());
  const ObjectiveValue o = ones(block);
  const ObjectiveValue z = len - o;
  const ObjectiveValue f1 = (o <= len - k || o == len) ? k + o : len - o;
  const ObjectiveValue f2 = (z <= len - k || z == len) ? k + z : len - z;
  return {f1, f2};
}

/// Evaluates one bi-objective block function on `block`.
std::pair<ObjectiveValue, ObjectiveValue> block_pair(BenchmarkKind kind, Bits block, ObjectiveValue k) {
  switch (kind) {
    case BenchmarkKind::OneMinMax:
    case BenchmarkKind::MOneMinMax: {
      const auto o = ones(block);
      return {static_cast<ObjectiveValue>(block.size()) - o, o};
    }
    case BenchmarkKind::LOTZ:
    case BenchmarkKind::MLOTZ: return {leading_ones(block), trailing_zeros(block)};
    case BenchmarkKind::OJZJ:
    case BenchmarkKind::MOJZJ: return one_jump_zero_jump(block, k);
    default: break;
  }
  throw ContractViolation("block_pair: not a block benchmark");
}

bool block_front_pair(BenchmarkKind kind, ObjectiveValue a, ObjectiveValue b, ObjectiveValue len,
                      ObjectiveValue k) {
  switch (kind) {
    case BenchmarkKind::OneMinMax:
    case BenchmarkKind::MOneMinMax:
    case BenchmarkKind::LOTZ:
    case BenchmarkKind::MLOTZ: return a >= 0 && b >= 0 && a + b == len;
    case BenchmarkKind::OJZJ:
    case BenchmarkKind::MOJZJ:
      if (a + b != 2 * k + len) return false;
      return (a >= 2 * k && a <= len) || a == k || a == len + k;
    default: break;
  }
  return false;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::string_view benchmark_id(BenchmarkKind kind) noexcept {
  for (const auto& [k, id] : kBenchmarkIds) {
    if (k == kind) return id;
  }
  return "?";
}

std::optional<BenchmarkKind> parse_benchmark(std::string_view id) noexcept {
  for (const auto& [k, name] : kBenchmarkIds) {
    if (name == id) return k;
  }
  return std::nullopt;
}

bool is_many_objective(BenchmarkKind kind) noexcept {
  switch (kind) {
    case BenchmarkKind::MOneMinMax:
    case BenchmarkKind::MCOCZ:
    case BenchmarkKind::MLOTZ:
    case BenchmarkKind::MOJZJ: return true;
    default: return false;
  }
}

Benchmark::Benchmark(BenchmarkSpec spec) : spec_(spec) {
  const auto id = std::string(benchmark_id(spec.kind));
  const std::size_t n = spec.n;
  if (n == 0) throw ConfigError(id + ": n must be positive");
  const bool uses_k = spec.kind == BenchmarkKind::OJZJ || spec.kind == BenchmarkKind::MOJZJ;
  if (!uses_k) spec_.k = 0;

  if (!is_many_objective(spec.kind)) {
    if (spec.m != 2) throw ConfigError(id + ": bi-objective benchmark requires m = 2");
    switch (spec.kind) {
      case BenchmarkKind::OneMinMax:
      case BenchmarkKind::LOTZ: front_size_ = n + 1; break;
      case BenchmarkKind::COCZ:
        if (n % 2 != 0) throw ConfigError("cocz: n must be even");
        front_size_ = n / 2 + 1;
        break;
      case BenchmarkKind::OJZJ:
        if (spec.k < 1 || 2 * spec.k > n) throw ConfigError("ojzj: k must lie in [1..n/2]");
        front_size_ = n - 2 * spec.k + 3;
        break;
      default: break;
    }
    return;
  }

  const std::size_t m = spec.m;
  if (m < 2 || m % 2 != 0) throw ConfigError(id + ": m must be even and at least 2");
  const std::size_t blocks = m / 2;
  if (spec.kind == BenchmarkKind::MCOCZ) {
    if (n % m != 0) throw ConfigError("m-cocz: n must be divisible by m");
    front_size_ = ipow(n / m + 1, blocks);
    return;
  }
  if (n % blocks != 0) throw ConfigError(id + ": n must be divisible by m/2");
  const std::size_t len = n / blocks;
  if (spec.kind == BenchmarkKind::MOJZJ) {
    if (spec.k < 2 || 2 * spec.k > len) throw ConfigError("m-ojzj: k must lie in [2..n/m]");
    front_size_ = ipow(len - 2 * spec.k + 3, blocks);
    return;
  }
  front_size_ = ipow(len + 1, blocks);
}

std::string Benchmark::name() const { return std::string(benchmark_id(spec_.kind)); }

ObjectiveVector Benchmark::evaluate(const BitVector& x) const {
  if (x.size() != spec_.n) throw ContractViolation("evaluate: genome length differs from n");
  const Bits bits = x.bits();
  const auto k = static_cast<ObjectiveValue>(spec_.k);
  ObjectiveVector f(spec_.m);

  if (spec_.kind == BenchmarkKind::COCZ || spec_.kind == BenchmarkKind::MCOCZ) {
    const std::size_t half = spec_.n / 2;
    const ObjectiveValue shared = ones(bits.first(half));
    const std::size_t blocks = spec_.m / 2;
    const std::size_t len = (spec_.n - half) / blocks;
    for (std::size_t b = 0; b < blocks; ++b) {
      const Bits block = bits.subspan(half + b * len, len);
      const ObjectiveValue o = ones(block);
      f[2 * b] = shared + o;
      f[2 * b + 1] = shared + static_cast<ObjectiveValue>(len) - o;
    }
    return f;
  }

  const std::size_t blocks = spec_.m / 2;
  const std::size_t len = spec_.n / blocks;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto [f1, f2] = block_pair(spec_.kind, bits.subspan(b * len, len), k);
    f[2 * b] = f1;
    f[2 * b + 1] = f2;
  }
  return f;
}

bool Benchmark::is_front_value(std::span<const ObjectiveValue> v) const {
  if (v.size() != spec_.m) throw ContractViolation("is_front_value: objective count mismatch");
  const std::size_t blocks = spec_.m / 2;
  const auto k = static_cast<ObjectiveValue>(spec_.k);

  if (spec_.kind == BenchmarkKind::COCZ || spec_.kind == BenchmarkKind::MCOCZ) {
    const auto half = static_cast<ObjectiveValue>(spec_.n / 2);
    const auto len = static_cast<ObjectiveValue>(spec_.n / 2 / blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      const ObjectiveValue a = v[2 * b] - half;
      const ObjectiveValue c = v[2 * b + 1] - half;
      if (a < 0 || c < 0 || a + c != len) return false;
    }
    return true;
  }

  const auto len = static_cast<ObjectiveValue>(spec_.n / blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    if (!block_front_pair(spec_.kind, v[2 * b], v[2 * b + 1], len, k)) return false;
  }
  return true;
}

Coverage coverage(const Benchmark& benchmark, const Population& population) {
  std::vector<const ObjectiveVector*> hits;
  hits.reserve(population.size());
  for (const auto& x : population) {
    if (benchmark.is_front_value(x.objectives)) hits.push_back(&x.objectives);
  }
  std::sort(hits.begin(), hits.end(), [](const auto* a, const auto* b) { return *a < *b; });
  const auto last =
      std::unique(hits.begin(), hits.end(), [](const auto* a, const auto* b) { return *a == *b; });
  return Coverage{static_cast<std::size_t>(last - hits.begin()), benchmark.front_size()};
}

Population evaluate_all(const Benchmark& benchmark, std::span<const BitVector> genomes) {
  Population out;
  for (const auto& g : genomes) out.add(g, benchmark.evaluate(g));
  return out;
}

}  // namespace moea
