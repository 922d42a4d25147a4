#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weakembed/gf2.hpp"
#include "weakembed/graph.hpp"
#include "weakembed/instance.hpp"

namespace we {

using EdgePair = std::pair<int, int>;  // (smaller id, larger id)

// Crossing parities of independent, cluster-sharing edge pairs in the
// canonical drawing.  Pairs not listed are implicitly 0.
struct ParityVector {
  std::map<EdgePair, std::uint8_t> bits;
};

// Boundary slots of one cluster disc: (edge id, vertex) where vertex is the
// endpoint for vertex-block slots and -1 for valve anchors.
struct Slot {
  int edge;
  int vertex;
  bool operator==(const Slot&) const = default;
};

struct CanonicalDrawing {
  std::map<int, std::vector<Slot>> slots;  // per cluster, cyclic
};

CanonicalDrawing canonical_drawing(const Instance& I);
ParityVector canonical_parity_vector(const Instance& I);

struct MoveVar {
  int edge;
  int vertex;
  bool operator==(const MoveVar&) const = default;
};

struct Gf2System {
  std::vector<MoveVar> vars;
  std::vector<EdgePair> equations;
  BitMatrix A;
  BitVec rhs;
};

Gf2System build_move_system(const Instance& I, const ParityVector& pv);

struct Z2Report {
  bool z2 = false;
  BitVec solution;
  std::optional<Witness> witness;  // only when !z2
};

Z2Report z2_check(const Instance& I);
bool z2_approximable(const Instance& I);

std::optional<Witness> find_x_configuration(const Instance& I);
std::optional<Witness> find_yy_configuration(const Instance& I);

// G_nu.  Ring vertex i stands for ring_host_edge[i] (rotation order at nu);
// component vertex ring_size + j stands for components[j].
struct ClusterLink {
  Graph graph;
  int ring_size = 0;
  std::vector<int> ring_host_edge;
  std::vector<int> ring_edges;   // ring_edges[i] joins ring vertices i and i+1 (when ring_size >= 3)
  std::vector<int> cycle_edges;  // C_nu, empty when ring_size < 3
  std::vector<std::vector<int>> components;
};

ClusterLink cluster_link_graph(const Instance& I, int nu);
std::vector<int> check_cluster_links(const Instance& I);

}  // namespace we
