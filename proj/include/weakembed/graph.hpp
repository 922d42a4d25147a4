#pragma once

#include <map>
#include <vector>

namespace we {

struct Edge {
  int id;
  int u;
  int v;
  int other(int x) const { return x == u ? v : u; }
  bool has(int x) const { return u == x || v == x; }
};

// Abstract multigraph with opaque integer ids.  Vertices and edges are kept
// sorted by id so iteration order is deterministic.
struct Graph {
  std::vector<int> vertices;
  std::vector<Edge> edges;

  bool has_vertex(int v) const;
  bool has_edge(int id) const;
  const Edge& edge(int id) const;
  void add_vertex(int v);
  void add_edge(int id, int u, int v);
  int add_edge(int u, int v);  // fresh id
  void remove_edge(int id);
  void remove_vertex(int v);  // and its edges
  int next_vertex_id() const;
  int next_edge_id() const;

  std::vector<int> incident(int v) const;
  std::map<int, std::vector<int>> incidence() const;
  int degree(int v) const;
  // components as sorted vertex lists, ordered by smallest vertex
  std::vector<std::vector<int>> components() const;
  Graph induced(const std::vector<int>& vs) const;
};

bool operator==(const Edge& a, const Edge& b);
bool operator==(const Graph& a, const Graph& b);

// Abstract surgery.  edge_map sends each input edge id to its id in the
// result, or -1 when the edge disappeared.
struct Surgery {
  Graph graph;
  std::map<int, int> edge_map;
  std::vector<int> new_edges;
  std::vector<int> new_vertices;
};

Surgery y_delta(const Graph& g, int v, const std::vector<int>& rotation_at_v);
Surgery delta_y(const Graph& g, const std::vector<int>& cycle_edges);
Surgery contract_edge(const Graph& g, int e);
Surgery suppress_degree2(const Graph& g, int v);
Surgery vertex_split(const Graph& g, int v, const std::vector<int>& a);

}  // namespace we
