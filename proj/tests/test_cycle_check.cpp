#include <doctest.h>

#include <algorithm>

#include "testkit.hpp"
#include "weakembed/cycle_check.hpp"

using namespace wt;

namespace {

DartWalk repeat(const DartWalk& w, int k) {
  DartWalk out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

const DartWalk tri{{0, true}, {1, true}, {2, true}};

}  // namespace

TEST_CASE("primitive decomposition") {
  PrimitiveWalk p = primitive_decomposition(repeat(tri, 3));
  CHECK(p.W == tri);
  CHECK(p.o == 3);

  DartWalk back{{4, true}, {4, false}};
  p = primitive_decomposition(back);
  CHECK(p.W == back);
  CHECK(p.o == 1);

  p = primitive_decomposition(tri);
  CHECK(p.o == 1);

  // a walk that is a rotation of a power still has period 3
  DartWalk w = repeat(tri, 2);
  std::rotate(w.begin(), w.begin() + 1, w.end());
  CHECK(primitive_decomposition(w).o == 2);
}

TEST_CASE("sidedness counts negative traversals") {
  CHECK(walk_sidedness(tri, fixture("W1").H) == Sidedness::TwoSided);
  EmbeddedGraph m = fixture("M2a").H;
  CHECK(walk_sidedness(tri, m) == Sidedness::OneSided);
  CHECK(walk_sidedness(repeat(tri, 2), m) == Sidedness::TwoSided);
}

TEST_CASE("winding verdicts") {
  CHECK(!winding_verdict(tri, 3, Sidedness::TwoSided));
  CHECK(winding_verdict(tri, 2, Sidedness::OneSided));
  CHECK(!winding_verdict(tri, 3, Sidedness::OneSided));
  CHECK(!winding_verdict(tri, 2, Sidedness::TwoSided));
  for (auto s : {Sidedness::OneSided, Sidedness::TwoSided}) CHECK(winding_verdict(tri, 1, s));
}

TEST_CASE("cycle walk of the fixtures") {
  Instance w3 = fixture("W3");
  DartWalk w = cycle_walk(w3, w3.G.vertices);
  CHECK(w.size() == 9);
  PrimitiveWalk p = primitive_decomposition(w);
  CHECK(p.o == 3);
  CHECK(p.W.size() == 3);

  Instance w1 = fixture("W1");
  CHECK(primitive_decomposition(cycle_walk(w1, w1.G.vertices)).o == 1);

  // back-and-forth steps are not allowed
  Instance n = fixture("nested");
  CHECK(error_code([&] { cycle_walk(n, n.G.vertices); }) == Errc::UnexpectedShape);
}

TEST_CASE("cycle weak embeddability") {
  CHECK(!cycle_weak_embeddable(fixture("W3")));
  CHECK(cycle_weak_embeddable(fixture("W1")));
  CHECK(!cycle_weak_embeddable(fixture("W2")));
  CHECK(cycle_weak_embeddable(fixture("M2a")));
  CHECK(!cycle_weak_embeddable(fixture("M2b")));
  CHECK(cycle_weak_embeddable(fixture("nested")));
  CHECK(error_code([] { cycle_weak_embeddable(fixture("X1")); }) == Errc::NotACycle);
}

TEST_CASE("longer windings around a triangle") {
  // odd windings above one are obstructed, even ones fail the Z2 gate
  EmbeddedGraph h = fixture("W1").H;
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> walk;
    for (int i = 0; i < 3 * k; ++i) walk.push_back(i % 3);
    Instance I = walk_instance(h, walk);
    CHECK(cycle_weak_embeddable(I) == (k == 1));
  }
}
