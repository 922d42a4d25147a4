#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weakembed/instance.hpp"

namespace we {

struct NormalizedInstance {
  Instance inst;
  std::vector<int> central;                     // V_s, ascending
  std::map<std::pair<int, int>, int> gathering;  // (central v, host edge) -> gathering vertex
};

NormalizedInstance normalize_simplified(const Instance& I);

// Also reports where the derived host vertices came from.
struct DerivedInstance {
  Instance inst;
  std::map<int, int> host_edge_vertex;  // host edge rho -> rho*
  std::map<int, int> central_vertex;    // central v (deg >= 3) -> v*
};

DerivedInstance derive_detailed(const NormalizedInstance& NI);
Instance derive(const NormalizedInstance& NI);
Instance simplified_derivative(const Instance& I);

}  // namespace we
