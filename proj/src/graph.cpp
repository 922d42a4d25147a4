#include "weakembed/graph.hpp"

#include <algorithm>
#include <set>

#include "weakembed/errors.hpp"

namespace we {

namespace {

auto edge_pos(const std::vector<Edge>& es, int id) {
  return std::lower_bound(es.begin(), es.end(), id,
                          [](const Edge& e, int x) { return e.id < x; });
}

}  // namespace

bool operator==(const Edge& a, const Edge& b) {
  return a.id == b.id && a.u == b.u && a.v == b.v;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertices == b.vertices && a.edges == b.edges;
}

bool Graph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Graph::has_edge(int id) const {
  auto it = edge_pos(edges, id);
  return it != edges.end() && it->id == id;
}

const Edge& Graph::edge(int id) const {
  auto it = edge_pos(edges, id);
  if (it == edges.end() || it->id != id)
    throw Error(Errc::InvalidInput, "unknown edge " + std::to_string(id));
  return *it;
}

void Graph::add_vertex(int v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) vertices.insert(it, v);
}

void Graph::add_edge(int id, int u, int v) {
  auto it = edge_pos(edges, id);
  if (it != edges.end() && it->id == id)
    throw Error(Errc::DuplicateEdge, "edge id " + std::to_string(id) + " used twice");
  add_vertex(u);
  add_vertex(v);
  edges.insert(it, Edge{id, u, v});
}

int Graph::add_edge(int u, int v) {
  int id = next_edge_id();
  add_edge(id, u, v);
  return id;
}

void Graph::remove_edge(int id) {
  auto it = edge_pos(edges, id);
  if (it != edges.end() && it->id == id) edges.erase(it);
}

void Graph::remove_vertex(int v) {
  std::erase_if(edges, [v](const Edge& e) { return e.has(v); });
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it != vertices.end() && *it == v) vertices.erase(it);
}

int Graph::next_vertex_id() const { return vertices.empty() ? 0 : vertices.back() + 1; }

int Graph::next_edge_id() const { return edges.empty() ? 0 : edges.back().id + 1; }

std::vector<int> Graph::incident(int v) const {
  std::vector<int> out;
  for (const auto& e : edges)
    if (e.has(v)) out.push_back(e.id);
  return out;
}

std::map<int, std::vector<int>> Graph::incidence() const {
  std::map<int, std::vector<int>> inc;
  for (int v : vertices) inc[v];
  for (const auto& e : edges) {
    inc[e.u].push_back(e.id);
    if (e.v != e.u) inc[e.v].push_back(e.id);
  }
  return inc;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  std::map<int, int> parent;
  for (int v : vertices) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v : vertices) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  return out;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  Graph h;
  std::set<int> keep(vs.begin(), vs.end());
  for (int v : vertices)
    if (keep.count(v)) h.vertices.push_back(v);
  for (const auto& e : edges)
    if (keep.count(e.u) && keep.count(e.v)) h.edges.push_back(e);
  return h;
}

// --- surgery ---------------------------------------------------------------

static Surgery identity_surgery(const Graph& g) {
  Surgery s;
  s.graph = g;
  for (const auto& e : g.edges) s.edge_map[e.id] = e.id;
  return s;
}

Surgery y_delta(const Graph& g, int v, const std::vector<int>& rot) {
  if (!g.has_vertex(v)) throw Error(Errc::InvalidInput, "no such vertex");
  auto inc = g.incident(v);
  if (inc.size() < 3) throw Error(Errc::DegreeTooLow, "y_delta needs degree >= 3");
  std::vector<int> a = rot, b = inc;
  std::sort(a.begin(), a.end());
  if (a != b) throw Error(Errc::RotationMismatch, "rotation does not list the incident edges");
  Surgery s = identity_surgery(g);
  std::vector<int> nbrs;
  for (int id : rot) {
    const Edge& e = g.edge(id);
    if (e.u == e.v) throw Error(Errc::LoopEdge, "loop at y_delta vertex");
    nbrs.push_back(e.other(v));
    s.edge_map[id] = -1;
  }
  s.graph.remove_vertex(v);
  for (size_t i = 0; i < nbrs.size(); ++i) {
    int x = nbrs[i], y = nbrs[(i + 1) % nbrs.size()];
    if (x == y) continue;
    s.new_edges.push_back(s.graph.add_edge(x, y));
  }
  return s;
}

// Orders the edge set as a closed walk; throws NotACycle if it is not a cycle.
static std::vector<int> cycle_vertices(const Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 2) throw Error(Errc::NotACycle, "cycle needs at least two edges");
  std::map<int, std::vector<int>> inc;
  std::set<int> seen;
  for (int id : cyc) {
    if (!seen.insert(id).second) throw Error(Errc::NotACycle, "repeated edge");
    const Edge& e = g.edge(id);
    if (e.u == e.v) throw Error(Errc::NotACycle, "loop");
    inc[e.u].push_back(id);
    inc[e.v].push_back(id);
  }
  for (auto& [_, l] : inc)
    if (l.size() != 2) throw Error(Errc::NotACycle, "vertex of degree != 2 on cycle");
  std::vector<int> order;
  int start = inc.begin()->first, cur = start, via = inc.begin()->second[0];
  do {
    order.push_back(cur);
    int nxt = g.edge(via).other(cur);
    const auto& l = inc[nxt];
    via = l[0] == via ? l[1] : l[0];
    cur = nxt;
  } while (cur != start);
  if (order.size() != cyc.size()) throw Error(Errc::NotACycle, "edge set is disconnected");
  return order;
}

Surgery delta_y(const Graph& g, const std::vector<int>& cyc) {
  auto order = cycle_vertices(g, cyc);
  Surgery s = identity_surgery(g);
  for (int id : cyc) {
    s.graph.remove_edge(id);
    s.edge_map[id] = -1;
  }
  int hub = g.next_vertex_id();
  s.graph.add_vertex(hub);
  s.new_vertices.push_back(hub);
  for (int x : order) s.new_edges.push_back(s.graph.add_edge(hub, x));
  return s;
}

Surgery contract_edge(const Graph& g, int id) {
  const Edge e = g.edge(id);
  if (e.u == e.v) throw Error(Errc::LoopEdge, "cannot contract a loop");
  int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
  Surgery s;
  for (int v : g.vertices)
    if (v != gone) s.graph.vertices.push_back(v);
  for (const auto& f : g.edges) {
    int a = f.u == gone ? keep : f.u;
    int b = f.v == gone ? keep : f.v;
    if (a == b) {
      s.edge_map[f.id] = -1;
      continue;
    }
    s.graph.edges.push_back(Edge{f.id, a, b});
    s.edge_map[f.id] = f.id;
  }
  return s;
}

Surgery suppress_degree2(const Graph& g, int v) {
  auto inc = g.incident(v);
  if (inc.size() != 2) throw Error(Errc::NotDegree2, "vertex does not have degree 2");
  const Edge a = g.edge(inc[0]), b = g.edge(inc[1]);
  int x = a.other(v), y = b.other(v);
  if (x == v || y == v || x == y)
    throw Error(Errc::NotDegree2, "suppression needs two distinct neighbours");
  Surgery s = identity_surgery(g);
  s.graph.remove_vertex(v);
  int nid = std::min(a.id, b.id);
  s.graph.add_edge(nid, x, y);
  s.edge_map[a.id] = nid;
  s.edge_map[b.id] = nid;
  s.new_edges.push_back(nid);
  return s;
}

Surgery vertex_split(const Graph& g, int v, const std::vector<int>& a) {
  if (!g.has_vertex(v)) throw Error(Errc::InvalidInput, "no such vertex");
  auto inc = g.incident(v);
  std::set<int> aset(a.begin(), a.end());
  if (aset.size() != a.size()) throw Error(Errc::InvalidSplitSet, "repeated edge in split set");
  for (int id : aset)
    if (!std::binary_search(inc.begin(), inc.end(), id))
      throw Error(Errc::InvalidSplitSet, "edge " + std::to_string(id) + " not incident");
  Surgery s = identity_surgery(g);
  int nv = g.next_vertex_id();
  s.graph.add_vertex(nv);
  s.new_vertices.push_back(nv);
  for (auto& e : s.graph.edges) {
    if (!aset.count(e.id)) continue;
    if (e.u == v && e.v == v) throw Error(Errc::InvalidSplitSet, "loop in split set");
    if (e.u == v) e.u = nv;
    else e.v = nv;
  }
  s.new_edges.push_back(s.graph.add_edge(v, nv));
  return s;
}

}  // namespace we
