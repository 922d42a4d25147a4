#include "weakembed/instance.hpp"

#include <algorithm>

#include "weakembed/errors.hpp"

namespace we {

int Instance::host_edge(const Edge& e) const {
  auto id = H.edge_between(phi.at(e.u), phi.at(e.v));
  if (!id) throw Error(Errc::PhiNotAdjacent, "edge " + std::to_string(e.id) + " has no host edge");
  return *id;
}

void validate_instance(const Instance& I) {
  validate_map(I.H);
  for (int v : I.G.vertices) {
    auto it = I.phi.find(v);
    if (it == I.phi.end())
      throw Error(Errc::InvalidInput, "phi undefined at vertex " + std::to_string(v));
    if (!I.H.has_vertex(it->second))
      throw Error(Errc::InvalidInput, "phi(" + std::to_string(v) + ") is not a host vertex");
  }
  if (I.phi.size() != I.G.vertices.size())
    throw Error(Errc::InvalidInput, "phi is defined outside V(G)");
  for (size_t i = 0; i < I.G.edges.size(); ++i) {
    const Edge& e = I.G.edges[i];
    if (i && I.G.edges[i - 1].id == e.id)
      throw Error(Errc::DuplicateEdge, "edge id " + std::to_string(e.id) + " repeated");
    if (!I.G.has_vertex(e.u) || !I.G.has_vertex(e.v))
      throw Error(Errc::InvalidInput, "edge " + std::to_string(e.id) + " has unknown endpoint");
    if (e.u == e.v) throw Error(Errc::LoopInG, "edge " + std::to_string(e.id) + " is a loop");
    int a = I.phi.at(e.u), b = I.phi.at(e.v);
    if (a != b && !I.H.edge_between(a, b))
      throw Error(Errc::PhiNotAdjacent, "edge " + std::to_string(e.id) + " maps to non-adjacent " +
                                            std::to_string(a) + ", " + std::to_string(b));
  }
}

std::vector<int> pipe_edges(const Instance& I) {
  std::vector<int> out;
  for (const auto& e : I.G.edges)
    if (I.is_pipe(e)) out.push_back(e.id);
  return out;
}

static std::vector<std::vector<int>> components_of(const Instance& I, std::optional<int> only) {
  std::map<int, int> parent;
  for (int v : I.G.vertices)
    if (!only || I.phi.at(v) == *only) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : I.G.edges) {
    if (I.is_pipe(e) || !parent.count(e.u)) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (auto& [v, _] : parent) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  return out;
}

std::vector<std::vector<int>> cluster_components(const Instance& I) {
  return components_of(I, std::nullopt);
}

std::vector<std::vector<int>> cluster_components(const Instance& I, int nu) {
  return components_of(I, nu);
}

std::set<int> pipe_host_edges(const Instance& I, const std::vector<int>& comp) {
  std::set<int> in(comp.begin(), comp.end()), out;
  for (const auto& e : I.G.edges)
    if (I.is_pipe(e) && (in.count(e.u) != in.count(e.v))) out.insert(I.host_edge(e));
  return out;
}

int pipe_degree(const Instance& I, const std::vector<int>& comp) {
  return static_cast<int>(pipe_host_edges(I, comp).size());
}

std::set<int> pipe_neighborhood(const Instance& I, const std::vector<int>& comp) {
  std::set<int> in(comp.begin(), comp.end()), out;
  for (const auto& e : I.G.edges) {
    if (!I.is_pipe(e)) continue;
    if (in.count(e.u) && !in.count(e.v)) out.insert(I.phi.at(e.v));
    if (in.count(e.v) && !in.count(e.u)) out.insert(I.phi.at(e.u));
  }
  return out;
}

bool is_locally_injective(const Instance& I) {
  auto inc = I.G.incidence();
  for (int v : I.G.vertices) {
    std::map<int, int> image_owner{{I.phi.at(v), v}};
    for (int id : inc[v]) {
      int w = I.G.edge(id).other(v);
      auto [it, fresh] = image_owner.emplace(I.phi.at(w), w);
      if (!fresh && it->second != w) return false;
    }
  }
  return true;
}

Instance prune_host(const Instance& I) {
  Instance out;
  out.G = I.G;
  out.phi = I.phi;
  std::set<int> used_edges, used_vertices;
  for (const auto& [v, nu] : I.phi) used_vertices.insert(nu);
  for (const auto& e : I.G.edges)
    if (I.is_pipe(e)) used_edges.insert(I.host_edge(e));
  for (int v : I.H.vertices)
    if (used_vertices.count(v)) out.H.vertices.push_back(v);
  for (const auto& e : I.H.edges)
    if (used_edges.count(e.id)) out.H.edges.push_back(e);
  for (int v : out.H.vertices) {
    auto& rot = out.H.rotation[v];
    for (int id : I.H.rotation.at(v))
      if (used_edges.count(id)) rot.push_back(id);
  }
  return out;
}

Instance simplify(const Instance& I) {
  Instance out;
  std::map<int, int> rep;  // old vertex -> contracted vertex
  for (const auto& comp : cluster_components(I)) {
    if (pipe_degree(I, comp) == 0) continue;
    int r = comp.front();
    for (int v : comp) rep[v] = r;
    out.G.add_vertex(r);
    out.phi[r] = I.phi.at(r);
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& e : I.G.edges) {
    if (!I.is_pipe(e)) continue;
    int a = rep.at(e.u), b = rep.at(e.v);
    if (!seen.insert(std::minmax(a, b)).second) continue;
    out.G.edges.push_back(Edge{e.id, a, b});
  }
  out.H = I.H;
  return prune_host(out);
}

bool is_simplified(const Instance& I) {
  std::set<std::pair<int, int>> seen;
  std::map<int, int> deg;
  for (const auto& e : I.G.edges) {
    if (!I.is_pipe(e)) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v : I.G.vertices)
    if (!deg[v]) return false;
  Instance p = prune_host(I);
  return p.H.edges.size() == I.H.edges.size() && p.H.vertices.size() == I.H.vertices.size();
}

int potential(const Instance& I) {
  int p = static_cast<int>(pipe_edges(I).size()) - static_cast<int>(I.H.edges.size());
  if (p < 0) throw Error(Errc::NegativePotential, "host has edges outside the image of phi");
  return p;
}

Instance restrict_to(const Instance& I, const std::vector<int>& vertices) {
  Instance out;
  out.G = I.G.induced(vertices);
  for (int v : out.G.vertices) out.phi[v] = I.phi.at(v);
  out.H = I.H;
  return prune_host(out);
}

Instance keep_low_pipe_degree(const Instance& I) {
  std::set<int> bad;
  for (const auto& comp : cluster_components(I))
    if (pipe_degree(I, comp) > 2) bad.insert(comp.begin(), comp.end());
  std::vector<int> keep;
  for (const auto& comp : I.G.components()) {
    bool ok = std::none_of(comp.begin(), comp.end(), [&](int v) { return bad.count(v); });
    if (ok) keep.insert(keep.end(), comp.begin(), comp.end());
  }
  std::sort(keep.begin(), keep.end());
  return restrict_to(I, keep);
}

const char* sidedness_name(Sidedness s) {
  return s == Sidedness::OneSided ? "one_sided" : "two_sided";
}

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Approximable: return "approximable";
    case Verdict::Kind::NotZ2Approximable: return "not_z2_approximable";
    case Verdict::Kind::WindingObstruction: return "winding_obstruction";
  }
  return "unknown";
}

}  // namespace we
