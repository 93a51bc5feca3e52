#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnm {

// Bad arguments: out-of-range vertices, infeasible parameters, size limits.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact solver ran out of its node budget. Carries the best independent
// set found so far, which is a lower bound on alpha.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t budget, std::vector<int> best)
      : std::runtime_error("node budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget),
        best_(std::move(best)) {}

  std::uint64_t budget() const noexcept { return budget_; }
  const std::vector<int>& best_found() const noexcept { return best_; }
  int best_bound() const noexcept { return static_cast<int>(best_.size()); }

 private:
  std::uint64_t budget_;
  std::vector<int> best_;
};

// extend_from_mis was handed a set that is not a maximum independent set.
// The larger independent set uncovered during the extension is attached.
class NotMaximum : public std::runtime_error {
 public:
  explicit NotMaximum(std::vector<int> larger)
      : std::runtime_error("input set is not a maximum independent set"),
        larger_(std::move(larger)) {}

  const std::vector<int>& larger_set() const noexcept { return larger_; }

 private:
  std::vector<int> larger_;
};

}  // namespace gnm
