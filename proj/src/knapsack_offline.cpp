#include "expknap/knapsack_offline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace expknap::offline {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Item indices in ascending (buck-per-bang, id) order.
std::vector<int> buck_order(std::span<const Item> items) {
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> buck(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) buck[i] = buck_per_bang(items[i]);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (buck[a] != buck[b]) return buck[a] < buck[b];
    return items[a].id < items[b].id;
  });
  return order;
}

double exhaustive_integral_opt(std::span<const Item> items, double capacity) {
  const int n = static_cast<int>(items.size());
  // Gray-code walk over all subsets: one item toggles per step.
  double weight = 0.0, value = 0.0, best = 0.0;
  std::uint64_t gray = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int bit = std::countr_zero(s);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    gray ^= mask;
    const double sign = (gray & mask) ? 1.0 : -1.0;
    weight += sign * items[bit].weight;
    value += sign * items[bit].value;
    if (weight <= capacity + kEpsilon) best = std::max(best, value);
  }
  return best;
}

}  // namespace

FractionalSolution fractional_opt(const Instance& instance, double capacity) {
  if (!(capacity > 0.0)) throw ArgumentError("fractional_opt needs capacity > 0");
  FractionalSolution solution;
  solution.fractions.assign(instance.items.size(), 0.0);
  double remaining = capacity;
  for (int idx : buck_order(instance.items)) {
    const Item& item = instance.items[idx];
    if (item.weight <= remaining) {
      solution.fractions[item.id] = 1.0;
      solution.value += item.value;
      solution.capacity_used += item.weight;
      remaining -= item.weight;
    } else {
      if (remaining > 0.0) {
        const double fraction = remaining / item.weight;
        solution.fractions[item.id] = fraction;
        solution.value += fraction * item.value;
        solution.capacity_used += remaining;
        solution.fractional_id = item.id;
      }
      break;
    }
  }
  return solution;
}

ScalingCheck scaling_ratio_check(const Instance& instance, double c_small,
                                 double c_large) {
  if (!(c_small > 0.0) || c_small > c_large) {
    throw ArgumentError("scaling_ratio_check needs 0 < c_small <= c_large");
  }
  ScalingCheck check;
  check.value_small = fractional_opt(instance, c_small).value;
  check.value_large = fractional_opt(instance, c_large).value;
  check.holds =
      check.value_large <= (c_large / c_small) * check.value_small + kEpsilon;
  return check;
}

OffResult off_greedy(const Instance& instance, double capacity) {
  return off_greedy(std::span<const Item>(instance.items), capacity);
}

OffResult off_greedy(std::span<const Item> items, double capacity) {
  if (!(capacity > 0.0)) throw ArgumentError("off_greedy needs capacity > 0");
  OffResult result;
  for (int idx : buck_order(items)) {
    const Item& item = items[idx];
    if (result.total_weight + item.weight > capacity + kEpsilon) {
      return result;  // threshold stays at the last selected item's buck
    }
    result.selected.push_back(item.id);
    result.total_weight += item.weight;
    result.total_value += item.value;
    result.buck_threshold = buck_per_bang(item);
  }
  result.selected_all = true;
  result.buck_threshold = kInf;
  return result;
}

ApproximationCheck off_approximation_check(const Instance& instance,
                                           double capacity) {
  if (!(capacity > 1.0) || capacity > 2.0) {
    throw ArgumentError("off_approximation_check needs capacity in (1, 2]");
  }
  ApproximationCheck check;
  check.off_value = off_greedy(instance, capacity).total_value;
  check.fractional_value_unit = fractional_opt(instance, 1.0).value;
  check.holds = check.off_value >=
                (capacity - 1.0) * check.fractional_value_unit - kEpsilon;
  return check;
}

double integral_opt(const Instance& instance, double capacity,
                    int resolution) {
  if (!(capacity >= 0.0)) throw ArgumentError("integral_opt needs capacity >= 0");
  if (resolution < 1) throw ArgumentError("integral_opt needs resolution >= 1");
  const int n = instance.n();
  if (n == 0) return 0.0;
  if (n <= 20) return exhaustive_integral_opt(instance.items, capacity);

  const double units_exact = capacity * resolution;
  if (units_exact > 2e7) {
    throw CapacityError("integral_opt: capacity * resolution = " +
                        std::to_string(units_exact) +
                        " exceeds the 2e7 table limit");
  }
  const auto units = static_cast<std::int64_t>(std::floor(units_exact + kEpsilon));
  std::vector<double> table(static_cast<std::size_t>(units) + 1, 0.0);
  for (const Item& item : instance.items) {
    const auto need = static_cast<std::int64_t>(
        std::ceil(item.weight * resolution - kEpsilon));
    if (need > units) continue;
    for (std::int64_t j = units; j >= need; --j) {
      table[j] = std::max(table[j], table[j - need] + item.value);
    }
  }
  return table[units];
}

}  // namespace expknap::offline
