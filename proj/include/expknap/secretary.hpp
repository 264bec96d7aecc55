#pragma once

#include <span>

#include "expknap/core.hpp"

namespace expknap::secretary {

/// Observation-phase length floor(n/e): the classical sample size.
int default_observation_length(int n);

/// floor(n/e) + 1. The extra slot keeps the harmonic tail sum strictly
/// below 1, so the expected selection count stays capped at the budget.
int strict_observation_length(int n);

/// Observe the first t arrivals, then select every arrival beating the best
/// value seen so far. Never terminates early; the capacity constraint holds
/// only in expectation. Ids in the outcome are 0-based arrival indices.
RunOutcome t_threshold_run(std::span<const double> values, int t);

/// Same algorithm over an instance streamed in the given order; outcome
/// carries real item ids and weights.
RunOutcome t_threshold_run(const Instance& instance, const ArrivalOrder& order,
                           int t);

/// Hard-capacity baseline: selects at most the first post-observation record
/// and terminates immediately after.
RunOutcome classical_secretary_run(std::span<const double> values, int t);
RunOutcome classical_secretary_run(const Instance& instance,
                                   const ArrivalOrder& order, int t);

/// k-item generalization: tracks the best-k reference set R and selects any
/// arrival beating its weakest member. While R holds fewer than k items the
/// weakest-member value is treated as -infinity, so any arrival qualifies.
RunOutcome ksec_t_threshold_run(std::span<const double> values, int k, int t);
RunOutcome ksec_t_threshold_run(const Instance& instance,
                                const ArrivalOrder& order, int k, int t);

/// Configuration bundle for the threshold algorithms.
struct ThresholdConfig {
  int n = 0;
  int t = 0;  // observation-phase length, 0 <= t <= n
  int k = 1;
};

/// Exact expected selection count k * sum_{l=t+1}^{n} 1/l under a uniform
/// arrival order. For t = 0 the full harmonic sum is returned and
/// `guarantee_applies` is false: the expected-capacity cap of k needs an
/// observation phase of at least n/e arrivals.
struct CountBound {
  double value = 0.0;
  bool guarantee_applies = true;
};
CountBound expected_count_bound(int n, int t, int k);

}  // namespace expknap::secretary
