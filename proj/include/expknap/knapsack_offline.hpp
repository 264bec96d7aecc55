#pragma once

#include <span>
#include <vector>

#include "expknap/core.hpp"

namespace expknap::offline {

/// Absolute tolerance for capacity and value comparisons. Greedy weight
/// accumulations in double precision need a little slack.
inline constexpr double kEpsilon = 1e-9;

/// Optimal solution of the fractional knapsack relaxation at a given
/// capacity: per-item fractions in [0,1], at most one of them strictly
/// between the bounds.
struct FractionalSolution {
  std::vector<double> fractions;  // indexed by item id
  double value = 0.0;
  double capacity_used = 0.0;
  int fractional_id = -1;  // id of the one partial item, or -1 if none
};

/// Greedy fill in ascending buck-per-bang order (ties by id); exact LP
/// optimum of the relaxation. Unconstrained items all get fraction 1.
FractionalSolution fractional_opt(const Instance& instance, double capacity);

/// Fractional optima scale at most linearly with capacity:
/// v_{C2} <= (C2/C1) * v_{C1} for C1 <= C2.
struct ScalingCheck {
  double value_small = 0.0;  // fractional optimum at the smaller capacity
  double value_large = 0.0;  // fractional optimum at the larger capacity
  bool holds = false;
};
ScalingCheck scaling_ratio_check(const Instance& instance, double c_small,
                                 double c_large);

/// Output of the augmented-capacity prefix greedy: the maximal prefix of the
/// ascending buck-per-bang order whose weight fits, stopping at the first
/// item that does not (no skip-and-continue).
struct OffResult {
  std::vector<int> selected;  // item ids, ascending buck-per-bang
  double buck_threshold = 0.0;
  double total_weight = 0.0;
  double total_value = 0.0;
  bool selected_all = false;

  bool empty() const { return selected.empty(); }
};

/// buck_threshold is the largest buck-per-bang among selected items,
/// +infinity when everything fit (so downstream eligibility admits any
/// buck), and 0 with an empty selection when even the first item violates.
OffResult off_greedy(const Instance& instance, double capacity);
OffResult off_greedy(std::span<const Item> items, double capacity);

/// With augmented capacity 1 < C <= 2, the prefix greedy is within a factor
/// (C-1) of the fractional optimum at capacity 1.
struct ApproximationCheck {
  double off_value = 0.0;
  double fractional_value_unit = 0.0;
  bool holds = false;
};
ApproximationCheck off_approximation_check(const Instance& instance,
                                           double capacity);

/// Exact 0/1 optimum. For n <= 20 an exhaustive subset sweep is used and the
/// result is exact; otherwise a dynamic program over weights rounded UP to a
/// 1/resolution grid, so the returned value never overstates the true
/// optimum. Throws CapacityError when the table would be unreasonably large.
double integral_opt(const Instance& instance, double capacity,
                    int resolution = 4096);

}  // namespace expknap::offline
