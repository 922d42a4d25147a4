#include <doctest.h>

#include "testkit.hpp"
#include "weakembed/io.hpp"
#include "weakembed/pipeline.hpp"
#include "weakembed/z2test.hpp"

using namespace wt;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
  if (!(a.G == b.G) || a.phi != b.phi || a.H.vertices != b.H.vertices) return false;
  if (a.H.edges.size() != b.H.edges.size()) return false;
  for (size_t i = 0; i < a.H.edges.size(); ++i) {
    const auto &x = a.H.edges[i], &y = b.H.edges[i];
    if (x.id != y.id || x.u != y.u || x.v != y.v || x.sign != y.sign) return false;
  }
  return a.H.rotation == b.H.rotation;
}

}  // namespace

TEST_CASE("round trip on every fixture") {
  for (const auto& name : fixture_names()) {
    Instance I = fixture(name);
    std::string text = serialize_instance(I);
    Instance J = parse_instance(text);
    CHECK_MESSAGE(same_instance(I, J), name);
    CHECK(serialize_instance(J) == text);
  }
}

TEST_CASE("malformed instances") {
  CHECK(error_code([] { parse_instance("{"); }) == Errc::InvalidInput);
  CHECK(error_code([] { parse_instance("{}"); }) == Errc::InvalidInput);
  json j = instance_to_json(fixture("W1"));
  j["H"]["edges"][0]["sign"] = 2;
  CHECK(error_code([&] { instance_from_json(j); }) == Errc::InvalidInput);
  j = instance_to_json(fixture("W1"));
  j["phi"]["x"] = 0;
  CHECK(error_code([&] { instance_from_json(j); }) == Errc::InvalidInput);
  j = instance_to_json(fixture("W1"));
  j["G"]["edges"][0]["u"] = "a";
  CHECK(error_code([&] { instance_from_json(j); }) == Errc::InvalidInput);
}

TEST_CASE("polyline maps") {
  json j = json::parse(R"({"vertices": {"0": [0, 1, 0, 1], "1": [3, 2, 1, 3]},
                           "edges": [{"id": 0, "u": 0, "v": 1, "polyline": [[1, 1, 1, 1]]}]})");
  PLMap m = plmap_from_json(j);
  CHECK(m.vertices.at(1).x == Rational(3, 2));
  CHECK(m.vertices.at(1).y == Rational(1, 3));
  CHECK(m.edges.at(0).polyline.size() == 1);

  j["vertices"]["1"] = json::array({1, 0, 0, 1});
  CHECK(error_code([&] { plmap_from_json(j); }) == Errc::NonRationalInput);
  j["vertices"]["1"] = json::array({0.5, 1, 0, 1});
  CHECK(error_code([&] { plmap_from_json(j); }) == Errc::NonRationalInput);
  j["vertices"]["1"] = json::array({1, 1});
  CHECK(error_code([&] { plmap_from_json(j); }) == Errc::NonRationalInput);
}

TEST_CASE("clustered graphs accept both layouts") {
  json a = json::parse(R"({"vertices": [0, 1], "edges": [{"id": 0, "u": 0, "v": 1}], "clusters": [[0], [1]]})");
  json b = json::parse(R"({"G": {"vertices": [0, 1], "edges": [{"id": 0, "u": 0, "v": 1}]}, "clusters": [[0], [1]]})");
  CHECK(clustered_from_json(a).G == clustered_from_json(b).G);
  CHECK(clustered_from_json(a).clusters.size() == 2);
}

TEST_CASE("verdict documents") {
  json w3 = verdict_to_json(decide(fixture("W3")));
  CHECK(w3["schema"] == kVerdictSchema);
  CHECK(w3["verdict"] == "winding_obstruction");
  CHECK(w3["o"] == 3);
  CHECK(w3["sidedness"] == "two_sided");

  json w1 = verdict_to_json(decide(fixture("W1")));
  CHECK(w1["verdict"] == "approximable");
  CHECK(!w1.contains("witness"));

  json x = z2_to_json(z2_check(fixture("X1")));
  CHECK(x["z2"] == false);
  CHECK(x["witness"] == "x_configuration");
}

TEST_CASE("error documents") {
  json e = error_to_json(Error(Errc::BudgetExceeded, "too many"));
  CHECK(e["error"] == "BudgetExceeded");
  CHECK(e["message"].get<std::string>().find("too many") != std::string::npos);
  CHECK(error_to_json(std::runtime_error("x"))["error"] == "InvalidInput");
}

TEST_CASE("dot output mentions every vertex") {
  std::string dot = to_dot(fixture("W1"), "w1");
  CHECK(dot.find("graph \"w1\"") == 0);
  for (int v : {0, 1, 2}) CHECK(dot.find("h" + std::to_string(v)) != std::string::npos);
}
