#include "weakembed/io.hpp"

#include <sstream>

#include "weakembed/errors.hpp"

namespace we {

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::InvalidInput, std::string(what) + " must be an integer");
  return j.get<int>();
}

int key_int(const std::string& k) {
  try {
    size_t used = 0;
    int v = std::stoi(k, &used);
    if (used != k.size()) throw std::invalid_argument(k);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::InvalidInput, "object key '" + k + "' is not an integer id");
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(Errc::InvalidInput, std::string("missing field '") + name + "'");
  return j.at(name);
}

Rational rational(const json& num, const json& den) {
  if (!num.is_number_integer() || !den.is_number_integer())
    throw Error(Errc::NonRationalInput, "coordinates must be integer pairs");
  long long d = den.get<long long>();
  if (d == 0) throw Error(Errc::NonRationalInput, "zero denominator");
  return Rational(num.get<long long>(), d);
}

Point point(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::NonRationalInput, "point must be [xnum, xden, ynum, yden]");
  return Point{rational(j[0], j[1]), rational(j[2], j[3])};
}

Graph graph_from(const json& g) {
  Graph G;
  for (const auto& v : field(g, "vertices")) G.add_vertex(as_int(v, "vertex id"));
  for (const auto& e : field(g, "edges")) {
    int id = as_int(field(e, "id"), "edge id");
    if (G.has_edge(id)) throw Error(Errc::DuplicateEdge, "edge id " + std::to_string(id) + " repeated");
    G.add_edge(id, as_int(field(e, "u"), "u"), as_int(field(e, "v"), "v"));
  }
  return G;
}

}  // namespace

Instance instance_from_json(const json& j) {
  Instance I;
  const json& h = field(j, "H");
  for (const auto& v : field(h, "vertices")) I.H.vertices.push_back(as_int(v, "vertex id"));
  std::sort(I.H.vertices.begin(), I.H.vertices.end());
  for (const auto& e : field(h, "edges")) {
    int sign = e.contains("sign") ? as_int(e.at("sign"), "sign") : 1;
    if (sign != 1 && sign != -1) throw Error(Errc::InvalidInput, "sign must be +1 or -1");
    I.H.edges.push_back(HostEdge{as_int(field(e, "id"), "edge id"), as_int(field(e, "u"), "u"),
                                 as_int(field(e, "v"), "v"), sign});
  }
  std::sort(I.H.edges.begin(), I.H.edges.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (int v : I.H.vertices) I.H.rotation[v];
  if (h.contains("rotations"))
    for (auto& [k, rot] : h.at("rotations").items()) {
      auto& r = I.H.rotation[key_int(k)];
      for (const auto& id : rot) r.push_back(as_int(id, "rotation entry"));
    }
  I.G = graph_from(field(j, "G"));
  for (auto& [k, v] : field(j, "phi").items()) I.phi[key_int(k)] = as_int(v, "phi value");
  return I;
}

json instance_to_json(const Instance& I) {
  json h, g, phi = json::object();
  h["vertices"] = I.H.vertices;
  h["edges"] = json::array();
  for (const auto& e : I.H.edges) h["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"sign", e.sign}});
  h["rotations"] = json::object();
  for (const auto& [v, r] : I.H.rotation) h["rotations"][std::to_string(v)] = r;
  g["vertices"] = I.G.vertices;
  g["edges"] = json::array();
  for (const auto& e : I.G.edges) g["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  for (const auto& [v, nu] : I.phi) phi[std::to_string(v)] = nu;
  return {{"H", h}, {"G", g}, {"phi", phi}};
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, e.what());
  }
  return instance_from_json(j);
}

std::string serialize_instance(const Instance& I) { return instance_to_json(I).dump(); }

PLMap plmap_from_json(const json& j) {
  PLMap m;
  for (auto& [k, p] : field(j, "vertices").items()) m.vertices[key_int(k)] = point(p);
  for (const auto& e : field(j, "edges")) {
    PLEdge pe{as_int(field(e, "id"), "edge id"), as_int(field(e, "u"), "u"), as_int(field(e, "v"), "v"), {}};
    if (e.contains("polyline"))
      for (const auto& p : e.at("polyline")) pe.polyline.push_back(point(p));
    m.edges.push_back(std::move(pe));
  }
  return m;
}

FlatClusteredGraph clustered_from_json(const json& j) {
  FlatClusteredGraph c;
  c.G = graph_from(j.contains("G") ? j.at("G") : j);
  for (const auto& cl : field(j, "clusters")) {
    std::vector<int> ids;
    for (const auto& v : cl) ids.push_back(as_int(v, "cluster member"));
    c.clusters.push_back(std::move(ids));
  }
  return c;
}

json witness_to_json(const Witness& w) {
  json eq = json::array();
  for (auto [a, b] : w.equations) eq.push_back({a, b});
  return {{"kind", w.kind}, {"vertices", w.vertices}, {"host_vertices", w.host_vertices}, {"equations", eq}};
}

json verdict_to_json(const Verdict& v) {
  json j{{"schema", kVerdictSchema}, {"verdict", verdict_name(v.kind)}};
  if (v.kind == Verdict::Kind::NotZ2Approximable && v.witness) {
    j["witness"] = v.witness->kind;
    j["witness_detail"] = witness_to_json(*v.witness);
  }
  if (v.kind == Verdict::Kind::WindingObstruction) {
    j["o"] = v.o;
    j["sidedness"] = sidedness_name(v.sidedness);
    j["iteration"] = v.iteration;
    j["cycle"] = v.cycle;
    json walk = json::array();
    for (const auto& d : v.walk) walk.push_back({{"edge", d.edge}, {"forward", d.forward}});
    j["walk"] = walk;
  }
  return j;
}

json z2_to_json(const Z2Report& r) {
  json j{{"schema", kVerdictSchema}, {"z2", r.z2}};
  if (r.witness) {
    j["witness"] = r.witness->kind;
    j["witness_detail"] = witness_to_json(*r.witness);
  }
  return j;
}

json oracle_to_json(const OracleResult& r) {
  json orders = json::object();
  for (const auto& [rho, pi] : r.orders) orders[std::to_string(rho)] = pi;
  return {{"schema", kVerdictSchema}, {"approximable", r.approximable}, {"orders", orders},
          {"disc_tests", r.disc_tests}};
}

json trace_to_json(const Trace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"iteration", s.iteration},
                     {"vertices", s.vertices},
                     {"pipe_edges", s.pipe_edges},
                     {"host_edges", s.host_edges},
                     {"potential", s.potential},
                     {"euler_genus", s.euler_genus},
                     {"locally_injective", s.locally_injective}});
  return {{"z2", t.z2}, {"iterations", t.iterations}, {"important_endpoint", "smaller_id"}, {"steps", steps}};
}

json error_to_json(const std::exception& e) {
  if (auto* err = dynamic_cast<const Error*>(&e))
    return {{"error", errc_name(err->code())}, {"message", err->what()}};
  return {{"error", "InvalidInput"}, {"message", e.what()}};
}

std::string to_dot(const Instance& I, const std::string& name) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::map<int, int> colour;
  for (int v : I.H.vertices) colour[v] = static_cast<int>(colour.size()) % 8;
  std::ostringstream o;
  o << "graph \"" << name << "\" {\n  subgraph cluster_H {\n    label=\"H\";\n";
  for (int v : I.H.vertices)
    o << "    h" << v << " [label=\"" << v << "\", color=" << palette[colour[v]] << "];\n";
  for (const auto& e : I.H.edges)
    o << "    h" << e.u << " -- h" << e.v << " [label=\"" << e.id << (e.sign < 0 ? " (-)" : "")
      << "\"" << (e.sign < 0 ? ", style=dashed" : "") << "];\n";
  o << "  }\n  subgraph cluster_G {\n    label=\"G\";\n";
  for (int v : I.G.vertices)
    o << "    g" << v << " [label=\"" << v << "\", color=" << palette[colour[I.phi.at(v)]] << "];\n";
  for (const auto& e : I.G.edges) {
    o << "    g" << e.u << " -- g" << e.v;
    if (I.is_pipe(e)) o << " [label=\"pipe " << I.host_edge(e) << "\"]";
    o << ";\n";
  }
  o << "  }\n}\n";
  return o.str();
}

}  // namespace we
