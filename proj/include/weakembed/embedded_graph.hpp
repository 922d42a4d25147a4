#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weakembed/graph.hpp"

namespace we {

struct HostEdge {
  int id;
  int u;
  int v;
  int sign;  // +1 or -1
  int other(int x) const { return x == u ? v : u; }
  bool has(int x) const { return u == x || v == x; }
};

// Host graph as a combinatorial map: a cyclic edge order per vertex plus a
// sign per edge.  Rotations are stored with a distinguished start; equality
// of maps is up to rotation of those sequences (see same_map).
struct EmbeddedGraph {
  std::vector<int> vertices;
  std::vector<HostEdge> edges;  // sorted by id
  std::map<int, std::vector<int>> rotation;

  bool has_vertex(int v) const;
  const HostEdge& edge(int id) const;
  const HostEdge* find_edge(int id) const;
  std::optional<int> edge_between(int a, int b) const;
  int degree(int v) const;
  void add_vertex(int v);
  void add_edge(int id, int u, int v, int sign);  // appends to both rotations
  void remove_edge(int id);
  void remove_vertex(int v);  // must be isolated
  int next_vertex_id() const;
  int next_edge_id() const;
  Graph abstract() const;
};

// One step of a facial walk: traverse `edge` starting at `from`, with local
// orientation `side` (+1 reads rotations forward, -1 backward).
struct FaceStep {
  int edge;
  int from;
  int side;
};
using FacialWalk = std::vector<FaceStep>;

void validate_map(const EmbeddedGraph& h);
// Same as validate_map but multigraphs are accepted.
void validate_rotation(const EmbeddedGraph& h);

std::vector<FacialWalk> trace_faces(const EmbeddedGraph& h);
int euler_genus(const EmbeddedGraph& h);
std::vector<int> component_genera(const EmbeddedGraph& h);
bool is_orientable(const EmbeddedGraph& h);

// Equality up to cyclic shift of every rotation.
bool same_map(const EmbeddedGraph& a, const EmbeddedGraph& b);

// Flips the local orientation at v: reverses its rotation and negates the
// signs of its non-loop edges.
EmbeddedGraph flip_vertex(const EmbeddedGraph& h, int v);

}  // namespace we
