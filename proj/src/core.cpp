#include "moea/core.hpp"

#include <algorithm>
#include <numeric>

namespace moea {

BitVector::BitVector(std::size_t n) : bits_(n, 0) {
  if (n == 0) throw ContractViolation("BitVector: length must be positive");
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ContractViolation("BitVector: length must be positive");
  for (auto b : bits_) {
    if (b > 1) throw ContractViolation("BitVector: bits must be 0 or 1");
  }
}

BitVector BitVector::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ContractViolation("BitVector: expected only '0' and '1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitVector(std::move(bits));
}

void BitVector::set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

void BitVector::flip(std::size_t i) { bits_.at(i) ^= 1U; }

std::size_t BitVector::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitVector::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw ContractViolation("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

void Population::add(BitVector genome, ObjectiveVector objectives) {
  if (!members_.empty() && objectives.size() != members_.front().objectives.size()) {
    throw ContractViolation("Population: all members must share the number of objectives");
  }
  const std::size_t index = members_.size();
  members_.push_back(Individual{std::move(genome), std::move(objectives), index});
}

std::size_t Population::num_objectives() const noexcept {
  return members_.empty() ? 0 : members_.front().objectives.size();
}

Population Population::subset(std::span<const std::size_t> positions) const {
  Population out;
  out.members_.reserve(positions.size());
  for (auto p : positions) {
    const auto& src = members_.at(p);
    out.add(src.genome, src.objectives);
  }
  return out;
}

Population Population::concat(const Population& first, const Population& second) {
  Population out;
  out.members_.reserve(first.size() + second.size());
  for (const auto& x : first) out.add(x.genome, x.objectives);
  for (const auto& x : second) out.add(x.genome, x.objectives);
  return out;
}

std::vector<ObjectiveVector> Population::objective_vectors() const {
  std::vector<ObjectiveVector> out;
  out.reserve(members_.size());
  for (const auto& x : members_) out.push_back(x.objectives);
  return out;
}

std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::FirstStrictlyDominates: return "first-dominates";
    case Dominance::SecondStrictlyDominates: return "second-dominates";
    case Dominance::Equal: return "equal";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

Dominance compare_dominance(std::span<const ObjectiveValue> u, std::span<const ObjectiveValue> v) {
  if (u.size() != v.size()) throw ContractViolation("compare_dominance: length mismatch");
  if (u.empty()) throw ContractViolation("compare_dominance: need at least one objective");
  bool u_better = false;
  bool v_better = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) u_better = true;
    else if (v[i] > u[i]) v_better = true;
  }
  if (u_better && v_better) return Dominance::Incomparable;
  if (u_better) return Dominance::FirstStrictlyDominates;
  if (v_better) return Dominance::SecondStrictlyDominates;
  return Dominance::Equal;
}

bool weakly_dominates(std::span<const ObjectiveValue> u, std::span<const ObjectiveValue> v) {
  if (u.size() != v.size()) throw ContractViolation("weakly_dominates: length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) return false;
  }
  return true;
}

namespace {

template <typename Objectives>
FrontPartition sort_fronts(std::size_t n, Objectives&& at) {
  if (n == 0) throw ContractViolation("non_dominated_sort: empty input");
  const std::size_t m = at(0).size();
  for (std::size_t p = 0; p < n; ++p) {
    if (at(p).size() != m) throw ContractViolation("non_dominated_sort: objective count mismatch");
  }

  // dominates[p * n + q] != 0 iff p strictly dominates q.
  std::vector<std::uint8_t> dominates(n * n, 0);
  std::vector<std::size_t> dominated_by_count(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      switch (compare_dominance(at(p), at(q))) {
        case Dominance::FirstStrictlyDominates:
          dominates[p * n + q] = 1;
          ++dominated_by_count[q];
          break;
        case Dominance::SecondStrictlyDominates:
          dominates[q * n + p] = 1;
          ++dominated_by_count[p];
          break;
        default: break;
      }
    }
  }

  FrontPartition fronts;
  Front current;
  for (std::size_t p = 0; p < n; ++p) {
    if (dominated_by_count[p] == 0) current.push_back(p);
  }
  while (!current.empty()) {
    Front next;
    for (auto p : current) {
      const std::uint8_t* row = dominates.data() + p * n;
      for (std::size_t q = 0; q < n; ++q) {
        if (row[q] && --dominated_by_count[q] == 0) next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

}  // namespace

FrontPartition non_dominated_sort(std::span<const ObjectiveVector> objectives) {
  return sort_fronts(objectives.size(), [&](std::size_t i) -> const ObjectiveVector& { return objectives[i]; });
}

FrontPartition non_dominated_sort(const Population& population) {
  return sort_fronts(population.size(),
                     [&](std::size_t i) -> const ObjectiveVector& { return population[i].objectives; });
}

}  // namespace moea
