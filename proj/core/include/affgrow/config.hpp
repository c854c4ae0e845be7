#ifndef AFFGROW_CONFIG_HPP_
#define AFFGROW_CONFIG_HPP_

#include <cstddef>

#include "affgrow/error.hpp"
#include "affgrow/freeness.hpp"

namespace affgrow {

// Budgets shared by every engine. Results never depend on `workers`.
struct Config {
  int precision_bits = 64;
  std::size_t relation_max_len = 14;
  std::size_t ball_n_max = 12;
  std::size_t memory_budget_elements = 10'000'000;
  long trial_division_bound = 1'000'000;
  unsigned workers = 0;  // 0: machine parallelism

  SearchBudget budget() const {
    return {precision_bits, relation_max_len, memory_budget_elements, trial_division_bound};
  }

  void validate() const {
    if (precision_bits <= 0 || relation_max_len == 0 || ball_n_max == 0 || memory_budget_elements == 0 ||
        trial_division_bound <= 1)
      throw Error(ErrorCode::Precondition, "all budgets must be positive");
  }
};

}  // namespace affgrow

#endif  // AFFGROW_CONFIG_HPP_
