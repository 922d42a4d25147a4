#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weakembed/embedded_graph.hpp"
#include "weakembed/graph.hpp"

namespace we {

// Rotation per vertex of a plane embedding; all signs implicitly positive.
struct PlanarEmbedding {
  std::map<int, std::vector<int>> rotation;
};

bool is_planar(const Graph& g);
std::optional<PlanarEmbedding> planar_embedding(const Graph& g);

// Embedding in which the given cycle bounds a face.  Throws
// ImpossiblePrescription when the hub-augmented graph is not planar.
PlanarEmbedding embed_with_outer_cycle(const Graph& g, const std::vector<int>& cycle_edges);

// Decision only: can g be embedded with the cyclic vertex sequence `cycle`
// on one face, in that order?  The cycle edges need not be in g.
bool outer_cycle_embeddable(const Graph& g, const std::vector<int>& cycle);

// Fast path on dense vertex indices 0..n-1; parallel edges and loops are
// ignored.  `boundary` (distinct indices, cyclic) must lie on one face in
// that cyclic order.
bool planar_indexed(int n, const std::vector<std::pair<int, int>>& edges,
                    const std::vector<int>& boundary = {});

EmbeddedGraph as_embedded(const Graph& g, const PlanarEmbedding& emb);

// The cycle's vertices in walk order, starting at its smallest vertex.
std::vector<int> cycle_order(const Graph& g, const std::vector<int>& cycle_edges);

}  // namespace we
