#pragma once

#include "kcatalan/transfer.hpp"
#include "kcatalan/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>

namespace kcatalan {

/// Eventual periodicity of the orbit v_{n+1} = M v_n (mod m), v_0 = e_1, and of its first
/// coordinate.
struct PeriodReport {
  std::int64_t modulus = 2;
  std::size_t vector_preperiod = 0;
  std::size_t vector_period = 1;
  std::size_t scalar_preperiod = 0;
  std::size_t scalar_period = 1;
  bool confirmed = false;
};

/// The orbit did not revisit a state within the step budget.
class UndeterminedCycle : public std::runtime_error {
 public:
  UndeterminedCycle(std::size_t steps, std::int64_t modulus);
};

/// Exact (mu, lambda) of the state orbit via a first-visit table; scalar period and
/// preperiod of the first coordinate extracted inside the established cycle.
PeriodReport detect_cycle(const Matrix& matrix, std::int64_t m, std::size_t max_steps);

/// Same, for the scalar sequence (M_a^n e_1)_0 - (M_b^n e_1)_0, tracked on the direct sum.
PeriodReport detect_difference_cycle(const Matrix& a, const Matrix& b, std::int64_t m,
                                     std::size_t max_steps);

/// Minimal (lambda*, mu*) of a scalar sequence known to satisfy a_{n+period} = a_n for
/// n >= preperiod. Returns {scalar_preperiod, scalar_period}.
std::pair<std::size_t, std::size_t> minimal_scalar_period(std::span<const std::int64_t> seq,
                                                          std::size_t preperiod,
                                                          std::size_t period);

inline constexpr long long default_hypothesis_limit = 64;

/// Minimal t <= limit with m | b_0 b_1 ... b_t.
std::optional<long long> product_hypothesis(const WeightVector& wv, std::int64_t m, long long limit);

/// Minimal s <= limit with m dividing each of b_s, ..., b_{s+k-2}.
std::optional<long long> consecutive_hypothesis(const WeightVector& wv, std::int64_t m, int k,
                                                long long limit);

/// Minimal s <= limit (s >= k-1 so every index is defined) with m | b_{s-j} b_{s+k-j'}
/// for all 0 <= j <= j' <= k-1.
std::optional<long long> pair_hypothesis(const WeightVector& wv, std::int64_t m, int k,
                                         long long limit);

enum class Hypothesis { product, consecutive, pair };

std::string to_string(Hypothesis h);

/// Finite-state system whose first-coordinate sequence is the weighted count mod m.
struct PeriodicForm {
  Hypothesis hypothesis = Hypothesis::consecutive;
  long long index = 0;   // t for product, s otherwise
  int cap = 0;           // height cap implied by the hypothesis
  WeightVector weights;  // zero-tailed, reduced mod m
  TransferMatrix system; // built at max(cap, k-1), entries mod m
};

/// Tries product (k = 2 only), then consecutive, then pair divisibility; absent when none holds
/// within `limit`.
std::optional<PeriodicForm> periodic_form(int k, const WeightVector& wv, std::int64_t m,
                                          long long limit = default_hypothesis_limit);

}  // namespace kcatalan
