#pragma once

#include <map>
#include <vector>

#include "weakembed/instance.hpp"

namespace we {

struct OracleResult {
  bool approximable = false;
  // pipe -> edge order along the valve at its smaller endpoint, when approximable
  std::map<int, std::vector<int>> orders;
  long long disc_tests = 0;
};

// Exhaustive search over strand orders in every pipe.  Throws BudgetExceeded
// when the product of k! over pipes exceeds `budget`.
OracleResult brute_force_approximable(const Instance& I, double budget = 1e6);

double order_space(const Instance& I);

}  // namespace we
