#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "weakembed/graph.hpp"
#include "weakembed/instance.hpp"

namespace we {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x, y;
  bool operator==(const Point&) const = default;
};
bool operator<(const Point& a, const Point& b);

struct PLEdge {
  int id;
  int u;
  int v;
  // Points between (and optionally including) the images of u and v.
  std::vector<Point> polyline;
};

struct PLMap {
  std::map<int, Point> vertices;
  std::vector<PLEdge> edges;
};

// Instance together with the coordinates of the host vertices.
struct PLReduction {
  Instance inst;
  std::map<int, Point> host_point;
};

PLReduction reduce_pl_map_detailed(const PLMap& m);
Instance reduce_pl_map(const PLMap& m);

struct FlatClusteredGraph {
  Graph G;
  std::vector<std::vector<int>> clusters;
};

Instance reduce_flat_clustered(const FlatClusteredGraph& c);

}  // namespace we
