#include <doctest.h>

#include "testkit.hpp"
#include "weakembed/instance.hpp"

using namespace wt;

namespace {

EmbeddedGraph host_path(int n) {
  EmbeddedGraph h;
  for (int v = 0; v < n; ++v) h.add_vertex(v);
  for (int i = 0; i + 1 < n; ++i) h.add_edge(i, i, i + 1, 1);
  return h;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate_instance(fixture("W1")));
  CHECK_NOTHROW(validate_instance(fixture("X1")));

  Instance bad;
  bad.H = host_path(3);
  bad.G.add_vertex(0);
  bad.G.add_vertex(1);
  bad.G.add_edge(0, 0, 1);
  bad.phi = {{0, 0}, {1, 2}};
  CHECK(error_code([&] { validate_instance(bad); }) == Errc::PhiNotAdjacent);

  bad.phi = {{0, 0}};
  CHECK(error_code([&] { validate_instance(bad); }) == Errc::InvalidInput);

  bad.phi = {{0, 0}, {1, 1}};
  bad.G.add_vertex(2);
  bad.phi[2] = 0;
  bad.G.edges.push_back(Edge{1, 2, 2});
  CHECK(error_code([&] { validate_instance(bad); }) == Errc::LoopInG);
}

TEST_CASE("pipe degree") {
  Instance w1 = fixture("W1");
  for (const auto& c : cluster_components(w1)) CHECK(pipe_degree(w1, c) == 2);

  Instance yy = fixture("YY1");
  CHECK(pipe_degree(yy, {0}) == 3);
  CHECK(pipe_degree(yy, {1}) == 1);

  Instance lone;
  lone.H = host_path(1);
  lone.G.add_vertex(0);
  lone.phi[0] = 0;
  CHECK(pipe_degree(lone, {0}) == 0);
}

TEST_CASE("local injectivity") {
  CHECK(is_locally_injective(fixture("W3")));
  CHECK(is_locally_injective(fixture("W1")));

  Instance p;
  p.H = host_path(2);
  for (int v = 0; v < 3; ++v) p.G.add_vertex(v);
  p.G.add_edge(0, 0, 1);
  p.G.add_edge(1, 1, 2);
  p.phi = {{0, 0}, {1, 1}, {2, 0}};
  CHECK(!is_locally_injective(p));

  Instance one;
  one.H = host_path(1);
  one.G.add_vertex(0);
  one.phi[0] = 0;
  CHECK(is_locally_injective(one));
}

TEST_CASE("simplify contracts cluster trees and drops idle components") {
  // a - b inside cluster 0, a to cluster 1, b to cluster 2, plus an isolated vertex
  Instance I;
  I.H = host_path(3);
  I.H.add_edge(2, 0, 2, 1);
  for (int v = 0; v < 5; ++v) I.G.add_vertex(v);
  I.G.add_edge(0, 0, 1);
  I.G.add_edge(1, 0, 2);
  I.G.add_edge(2, 1, 3);
  I.phi = {{0, 0}, {1, 0}, {2, 1}, {3, 2}, {4, 0}};
  validate_instance(I);
  Instance s = simplify(I);
  CHECK(s.G.vertices == std::vector<int>{0, 2, 3});
  CHECK(s.G.edges.size() == 2);
  CHECK(is_simplified(s));
  CHECK(!is_simplified(I));
  CHECK(s.H.edges.size() == 2);
}

TEST_CASE("simplify is idempotent and leaves W3 alone") {
  Instance w3 = fixture("W3");
  Instance s = simplify(w3);
  CHECK(s.G == w3.G);
  CHECK(s.phi == w3.phi);
  CHECK(same_map(s.H, w3.H));
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    Instance I = random_instance(rng);
    Instance a = simplify(I), b = simplify(a);
    CHECK(a.G == b.G);
    CHECK(a.phi == b.phi);
    CHECK(is_simplified(a));
  }
}

TEST_CASE("potentials of the winding fixtures") {
  CHECK(potential(fixture("W1")) == 0);
  CHECK(potential(fixture("W2")) == 3);
  CHECK(potential(fixture("W3")) == 6);
  Instance I = fixture("W1");
  I.H.add_vertex(7);
  I.H.add_edge(9, 0, 7, 1);
  CHECK(error_code([&] { potential(I); }) == Errc::NegativePotential);
  CHECK(potential(prune_host(I)) == 0);
}

TEST_CASE("keep_low_pipe_degree drops whole components") {
  Instance yy = fixture("YY1");
  Instance k = keep_low_pipe_degree(simplify(yy));
  CHECK(k.G.vertices.empty());
  Instance w = fixture("W2");
  CHECK(keep_low_pipe_degree(w).G.vertices.size() == 6);
}
