#include "moea/variation.hpp"

#include <random>

namespace moea {

std::string_view to_string(ParentSelection s) noexcept {
  return s == ParentSelection::Fair ? "fair" : "random";
}

std::string_view to_string(MutationKind k) noexcept {
  return k == MutationKind::OneBit ? "one-bit" : "bitwise";
}

std::optional<ParentSelection> parse_selection(std::string_view id) noexcept {
  if (id == "fair") return ParentSelection::Fair;
  if (id == "random") return ParentSelection::Random;
  return std::nullopt;
}

std::optional<MutationKind> parse_mutation(std::string_view id) noexcept {
  if (id == "one-bit") return MutationKind::OneBit;
  if (id == "bitwise") return MutationKind::Bitwise;
  return std::nullopt;
}

void VariationConfig::validate() const {
  if (!(crossover_rate >= 0.0 && crossover_rate < 1.0)) {
    throw ConfigError("crossover rate must lie in [0, 1)");
  }
  if (selection == ParentSelection::Fair && crossover_rate > 0.0) {
    throw ConfigError("fair parent selection is only defined without crossover");
  }
}

BitVector one_bit_mutation(const BitVector& x, Rng& rng) {
  std::uniform_int_distribution<std::size_t> position(0, x.size() - 1);
  BitVector y = x;
  y.flip(position(rng));
  return y;
}

BitVector bitwise_mutation(const BitVector& x, Rng& rng) {
  // Gaps between flipped positions of independent 1/n coins are geometric.
  std::geometric_distribution<std::size_t> gap(1.0 / static_cast<double>(x.size()));
  BitVector y = x;
  for (std::size_t i = gap(rng); i < y.size(); i += 1 + gap(rng)) y.flip(i);
  return y;
}

BitVector mutate(const BitVector& x, MutationKind kind, Rng& rng) {
  return kind == MutationKind::OneBit ? one_bit_mutation(x, rng) : bitwise_mutation(x, rng);
}

BitVector uniform_crossover(const BitVector& x, const BitVector& y, Rng& rng) {
  if (x.size() != y.size()) throw ContractViolation("uniform_crossover: length mismatch");
  std::bernoulli_distribution from_y(0.5);
  BitVector child = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (from_y(rng)) child.set(i, y[i]);
  }
  return child;
}

BitVector random_bit_vector(std::size_t n, Rng& rng) {
  std::bernoulli_distribution bit(0.5);
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, bit(rng));
  return x;
}

Offspring generate_offspring(const Population& parents, const VariationConfig& cfg, const Benchmark& benchmark,
                             Rng& rng, std::uint64_t& evaluations) {
  cfg.validate();
  if (parents.empty()) throw ContractViolation("generate_offspring: empty parent population");

  Offspring out;
  const std::size_t N = parents.size();
  if (cfg.selection == ParentSelection::Fair) {
    for (const auto& parent : parents) {
      auto child = mutate(parent.genome, cfg.mutation, rng);
      auto f = benchmark.evaluate(child);
      out.population.add(std::move(child), std::move(f));
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    std::bernoulli_distribution use_crossover(cfg.crossover_rate);
    for (std::size_t slot = 0; slot < N; ++slot) {
      std::optional<BitVector> child;
      if (cfg.crossover_rate > 0.0 && use_crossover(rng)) {
        const auto& a = parents[pick(rng)];
        const auto& b = parents[pick(rng)];
        child = uniform_crossover(a.genome, b.genome, rng);
        ++out.crossovers;
      } else {
        child = mutate(parents[pick(rng)].genome, cfg.mutation, rng);
      }
      auto f = benchmark.evaluate(*child);
      out.population.add(std::move(*child), std::move(f));
    }
  }
  evaluations += N;
  return out;
}

}  // namespace moea
