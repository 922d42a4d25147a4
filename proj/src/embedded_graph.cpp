#include "weakembed/embedded_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "weakembed/errors.hpp"

namespace we {

namespace {

auto hedge_pos(const std::vector<HostEdge>& es, int id) {
  return std::lower_bound(es.begin(), es.end(), id,
                          [](const HostEdge& e, int x) { return e.id < x; });
}

}  // namespace

bool EmbeddedGraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

const HostEdge* EmbeddedGraph::find_edge(int id) const {
  auto it = hedge_pos(edges, id);
  return (it != edges.end() && it->id == id) ? &*it : nullptr;
}

const HostEdge& EmbeddedGraph::edge(int id) const {
  const HostEdge* e = find_edge(id);
  if (!e) throw Error(Errc::InvalidInput, "unknown host edge " + std::to_string(id));
  return *e;
}

std::optional<int> EmbeddedGraph::edge_between(int a, int b) const {
  auto it = rotation.find(a);
  if (it == rotation.end()) return std::nullopt;
  for (int id : it->second) {
    const HostEdge& e = edge(id);
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return id;
  }
  return std::nullopt;
}

int EmbeddedGraph::degree(int v) const {
  auto it = rotation.find(v);
  return it == rotation.end() ? 0 : static_cast<int>(it->second.size());
}

void EmbeddedGraph::add_vertex(int v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) vertices.insert(it, v);
  rotation[v];
}

void EmbeddedGraph::add_edge(int id, int u, int v, int sign) {
  auto it = hedge_pos(edges, id);
  if (it != edges.end() && it->id == id)
    throw Error(Errc::DuplicateEdge, "edge id " + std::to_string(id) + " used twice");
  add_vertex(u);
  add_vertex(v);
  edges.insert(it, HostEdge{id, u, v, sign});
  rotation[u].push_back(id);
  if (v != u) rotation[v].push_back(id);
}

void EmbeddedGraph::remove_edge(int id) {
  auto it = hedge_pos(edges, id);
  if (it == edges.end() || it->id != id) return;
  for (int x : {it->u, it->v}) std::erase(rotation[x], id);
  edges.erase(it);
}

void EmbeddedGraph::remove_vertex(int v) {
  if (degree(v) != 0) throw Error(Errc::InvalidInput, "removing a non-isolated host vertex");
  rotation.erase(v);
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it != vertices.end() && *it == v) vertices.erase(it);
}

int EmbeddedGraph::next_vertex_id() const { return vertices.empty() ? 0 : vertices.back() + 1; }
int EmbeddedGraph::next_edge_id() const { return edges.empty() ? 0 : edges.back().id + 1; }

Graph EmbeddedGraph::abstract() const {
  Graph g;
  g.vertices = vertices;
  for (const auto& e : edges) g.edges.push_back(Edge{e.id, e.u, e.v});
  return g;
}

void validate_rotation(const EmbeddedGraph& h) {
  std::set<int> vs(h.vertices.begin(), h.vertices.end());
  if (vs.size() != h.vertices.size())
    throw Error(Errc::InvalidInput, "repeated vertex id");
  std::set<int> ids;
  for (const auto& e : h.edges) {
    if (!ids.insert(e.id).second)
      throw Error(Errc::DuplicateEdge, "edge id " + std::to_string(e.id) + " repeated");
    if (e.u == e.v) throw Error(Errc::LoopEdge, "edge " + std::to_string(e.id) + " is a loop");
    if (!vs.count(e.u) || !vs.count(e.v))
      throw Error(Errc::RotationMismatch, "edge " + std::to_string(e.id) + " has unknown endpoint");
    if (e.sign != 1 && e.sign != -1)
      throw Error(Errc::InvalidInput, "edge " + std::to_string(e.id) + " has sign not in {+1,-1}");
  }
  for (const auto& [v, rot] : h.rotation)
    if (!vs.count(v)) throw Error(Errc::RotationMismatch, "rotation at unknown vertex");
  for (int v : h.vertices) {
    std::vector<int> want;
    for (const auto& e : h.edges)
      if (e.has(v)) want.push_back(e.id);
    auto it = h.rotation.find(v);
    std::vector<int> got = it == h.rotation.end() ? std::vector<int>{} : it->second;
    std::sort(got.begin(), got.end());
    if (got != want)
      throw Error(Errc::RotationMismatch,
                  "rotation at " + std::to_string(v) + " does not list each incident edge once");
  }
}

void validate_map(const EmbeddedGraph& h) {
  validate_rotation(h);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : h.edges) {
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw Error(Errc::DuplicateEdge, "parallel edges between " + std::to_string(key.first) +
                                           " and " + std::to_string(key.second));
  }
}

namespace {

struct FaceTracer {
  const EmbeddedGraph& h;
  std::map<std::pair<int, int>, int> pos;  // (vertex, edge) -> index in rotation

  explicit FaceTracer(const EmbeddedGraph& g) : h(g) {
    for (const auto& [v, rot] : h.rotation)
      for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[{v, rot[i]}] = i;
  }

  FaceStep next(const FaceStep& s) const {
    const HostEdge& e = h.edge(s.edge);
    int y = e.other(s.from);
    int side = s.side * e.sign;
    const auto& rot = h.rotation.at(y);
    int d = static_cast<int>(rot.size());
    int i = pos.at({y, s.edge});
    int j = ((i + side) % d + d) % d;
    return FaceStep{rot[j], y, side};
  }

  FaceStep reverse(const FaceStep& s) const {
    const HostEdge& e = h.edge(s.edge);
    return FaceStep{s.edge, e.other(s.from), -s.side * e.sign};
  }
};

struct StepKey {
  int edge, from, side;
  auto operator<=>(const StepKey&) const = default;
};

StepKey key(const FaceStep& s) { return {s.edge, s.from, s.side}; }

}  // namespace

std::vector<FacialWalk> trace_faces(const EmbeddedGraph& h) {
  FaceTracer t(h);
  std::set<StepKey> visited;
  std::vector<FacialWalk> faces;
  auto trace = [&](FaceStep start) {
    if (visited.count(key(start))) return;
    FacialWalk walk;
    std::set<StepKey> orbit;
    FaceStep s = start;
    do {
      walk.push_back(s);
      orbit.insert(key(s));
      s = t.next(s);
    } while (key(s) != key(start));
    for (const auto& st : walk) {
      if (orbit.count(key(t.reverse(st))))
        throw Error(Errc::Internal, "face orbit contains its own reverse");
      visited.insert(key(st));
      visited.insert(key(t.reverse(st)));
    }
    faces.push_back(std::move(walk));
  };
  for (int side : {1, -1})
    for (int v : h.vertices) {
      auto it = h.rotation.find(v);
      if (it == h.rotation.end() || it->second.empty()) {
        if (side == 1) faces.emplace_back();
        continue;
      }
      for (int id : it->second) trace(FaceStep{id, v, side});
    }
  return faces;
}

std::vector<int> component_genera(const EmbeddedGraph& h) {
  Graph g = h.abstract();
  auto comps = g.components();
  std::map<int, int> comp_of;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (int v : comps[i]) comp_of[v] = i;
  std::vector<long> V(comps.size()), E(comps.size()), F(comps.size());
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) V[i] = comps[i].size();
  for (const auto& e : h.edges) ++E[comp_of[e.u]];
  auto faces = trace_faces(h);
  // empty walks belong to isolated vertices, in vertex order
  std::vector<int> isolated;
  for (int v : h.vertices)
    if (h.degree(v) == 0) isolated.push_back(v);
  size_t iso = 0;
  for (const auto& f : faces) {
    if (f.empty()) ++F[comp_of[isolated[iso++]]];
    else ++F[comp_of[f.front().from]];
  }
  std::vector<int> out;
  for (size_t i = 0; i < comps.size(); ++i) out.push_back(static_cast<int>(2 - (V[i] - E[i] + F[i])));
  return out;
}

int euler_genus(const EmbeddedGraph& h) {
  int total = 0;
  for (int g : component_genera(h)) total += g;
  return total;
}

bool is_orientable(const EmbeddedGraph& h) {
  std::map<int, int> flip;
  std::map<int, std::vector<int>> inc;
  for (const auto& e : h.edges) {
    inc[e.u].push_back(e.id);
    inc[e.v].push_back(e.id);
  }
  for (int s : h.vertices) {
    if (flip.count(s)) continue;
    flip[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int id : inc[x]) {
        const HostEdge& e = h.edge(id);
        int y = e.other(x);
        int want = flip[x] * e.sign;
        auto it = flip.find(y);
        if (it == flip.end()) {
          flip[y] = want;
          q.push_back(y);
        } else if (it->second != want) {
          return false;
        }
      }
    }
  }
  return true;
}

static bool same_cyclic(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  size_t off = it - b.begin();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(i + off) % b.size()]) return false;
  return true;
}

bool same_map(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  for (size_t i = 0; i < a.edges.size(); ++i) {
    const auto &x = a.edges[i], &y = b.edges[i];
    if (x.id != y.id || x.sign != y.sign || std::minmax(x.u, x.v) != std::minmax(y.u, y.v))
      return false;
  }
  for (int v : a.vertices) {
    auto ia = a.rotation.find(v), ib = b.rotation.find(v);
    std::vector<int> ra = ia == a.rotation.end() ? std::vector<int>{} : ia->second;
    std::vector<int> rb = ib == b.rotation.end() ? std::vector<int>{} : ib->second;
    if (!same_cyclic(ra, rb)) return false;
  }
  return true;
}

EmbeddedGraph flip_vertex(const EmbeddedGraph& h, int v) {
  EmbeddedGraph out = h;
  auto& rot = out.rotation[v];
  std::reverse(rot.begin(), rot.end());
  for (auto& e : out.edges)
    if (e.has(v) && e.u != e.v) e.sign = -e.sign;
  return out;
}

}  // namespace we
