#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weakembed/embedded_graph.hpp"
#include "weakembed/graph.hpp"

namespace we {

struct Instance {
  Graph G;
  EmbeddedGraph H;
  std::map<int, int> phi;

  int cluster(int v) const { return phi.at(v); }
  bool is_pipe(const Edge& e) const { return phi.at(e.u) != phi.at(e.v); }
  // host edge carrying a pipe edge
  int host_edge(const Edge& e) const;
};

void validate_instance(const Instance& I);

std::vector<int> pipe_edges(const Instance& I);
// connected components of G[V_nu], over all clusters nu, smallest vertex first
std::vector<std::vector<int>> cluster_components(const Instance& I);
std::vector<std::vector<int>> cluster_components(const Instance& I, int nu);
int pipe_degree(const Instance& I, const std::vector<int>& component);
std::set<int> pipe_neighborhood(const Instance& I, const std::vector<int>& component);
std::set<int> pipe_host_edges(const Instance& I, const std::vector<int>& component);
bool is_locally_injective(const Instance& I);

// Removes host edges outside the image of phi and host vertices with empty
// clusters.
Instance prune_host(const Instance& I);
Instance simplify(const Instance& I);
bool is_simplified(const Instance& I);
int potential(const Instance& I);

// Restriction to the given G-vertices (host pruned).
Instance restrict_to(const Instance& I, const std::vector<int>& vertices);

// Keeps only the G-components whose cluster components all have pipe
// degree at most 2.
Instance keep_low_pipe_degree(const Instance& I);

struct Dart {
  int edge;
  bool forward;  // traverses u -> v of the host edge
  bool operator==(const Dart&) const = default;
};

enum class Sidedness { OneSided, TwoSided };
const char* sidedness_name(Sidedness s);

struct Witness {
  std::string kind;  // x_configuration, yy_configuration, cluster_link, infeasible_system
  std::vector<int> vertices;
  std::vector<int> host_vertices;
  std::vector<std::pair<int, int>> equations;  // edge pairs of the infeasible subsystem
};

struct Verdict {
  enum class Kind { Approximable, NotZ2Approximable, WindingObstruction };
  Kind kind = Kind::Approximable;
  std::optional<Witness> witness;
  // winding data
  int iteration = 0;
  std::vector<int> cycle;  // vertices of the cycle component at that iteration
  std::vector<Dart> walk;  // primitive walk W
  int o = 0;
  Sidedness sidedness = Sidedness::TwoSided;

  bool approximable() const { return kind == Kind::Approximable; }
};

const char* verdict_name(Verdict::Kind k);

}  // namespace we
