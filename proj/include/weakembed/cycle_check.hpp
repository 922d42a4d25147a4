#pragma once

#include <vector>

#include "weakembed/instance.hpp"

namespace we {

using DartWalk = std::vector<Dart>;

struct PrimitiveWalk {
  DartWalk W;
  int o = 1;
};

PrimitiveWalk primitive_decomposition(const DartWalk& w);
Sidedness walk_sidedness(const DartWalk& W, const EmbeddedGraph& H);
bool winding_verdict(const DartWalk& W, int o, Sidedness s);

// Darts of a cycle component, starting at its smallest vertex and leaving
// along the smaller edge id.  Throws UnexpectedShape unless the component is
// a locally injective cycle of pipe edges.
DartWalk cycle_walk(const Instance& I, const std::vector<int>& component);

bool cycle_weak_embeddable(const Instance& cycle_instance);

}  // namespace we
