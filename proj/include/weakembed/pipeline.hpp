#pragma once

#include <optional>
#include <vector>

#include "weakembed/instance.hpp"

namespace we {

struct Snapshot {
  int iteration = 0;
  int vertices = 0;
  int pipe_edges = 0;
  int host_edges = 0;
  int potential = 0;
  int euler_genus = 0;
  bool locally_injective = false;
};

struct Trace {
  std::vector<Snapshot> steps;
  std::vector<Instance> instances;  // only when keep_instances
  bool keep_instances = false;
  bool z2 = false;
  int iterations = 0;
};

Verdict decide(const Instance& I, Trace* trace = nullptr);

// The gated, simplified and filtered starting point of the iteration.
Instance iteration_start(const Instance& I);

struct CrossCheck {
  Verdict verdict;
  bool oracle = false;
  bool agree = false;
};

CrossCheck decide_with_oracle_crosscheck(const Instance& I, double budget = 1e6);

}  // namespace we
