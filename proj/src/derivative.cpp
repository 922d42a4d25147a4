#include "weakembed/derivative.hpp"

#include <algorithm>
#include <set>

#include "weakembed/errors.hpp"
#include "weakembed/planarity.hpp"

namespace we {

NormalizedInstance normalize_simplified(const Instance& I) {
  if (!is_simplified(I)) throw Error(Errc::NotSimplified, "normal form needs a simplified instance");
  NormalizedInstance N;
  Instance& out = N.inst;
  out.H = I.H;
  out.G.vertices = I.G.vertices;
  out.phi = I.phi;

  auto inc = I.G.incidence();
  std::map<int, std::set<int>> pipes;  // vertex -> host edges
  for (int v : I.G.vertices)
    for (int id : inc[v]) pipes[v].insert(I.host_edge(I.G.edge(id)));
  for (int v : I.G.vertices)
    if (pipes[v].size() >= 2) N.central.push_back(v);
  std::set<int> central(N.central.begin(), N.central.end());

  int next_v = I.G.next_vertex_id();
  int next_e = I.G.next_edge_id();
  for (int v : N.central) {
    for (int rho : pipes[v]) {
      int g = next_v++;
      N.gathering[{v, rho}] = g;
      out.G.add_vertex(g);
      out.phi[g] = I.phi.at(v);
      out.G.add_edge(next_e++, v, g);
    }
  }
  for (const auto& e : I.G.edges) {
    int rho = I.host_edge(e);
    int ends[2];
    int k = 0;
    for (int x : {e.u, e.v}) {
      if (central.count(x)) {
        ends[k++] = N.gathering.at({x, rho});
      } else {
        int n = next_v++;
        out.G.add_vertex(n);
        out.phi[n] = I.phi.at(x);
        out.G.add_edge(next_e++, x, n);
        ends[k++] = n;
      }
    }
    out.G.add_edge(next_e++, ends[0], ends[1]);
  }
  return N;
}

namespace {

std::vector<int> cyclic_from(const std::vector<int>& rot, int first) {
  auto it = std::find(rot.begin(), rot.end(), first);
  if (it == rot.end()) throw Error(Errc::Internal, "edge missing from rotation");
  std::vector<int> r(it, rot.end());
  r.insert(r.end(), rot.begin(), it);
  return r;
}

struct ClusterFans {
  std::map<int, std::vector<int>> fan;       // host edge at nu -> centrals, ccw from next to prev
  std::map<int, std::vector<int>> rotation;  // central -> host edges, ccw
};

// Constrained embedding of the cluster link restricted to central vertices,
// normalized so that every ring vertex reads [next, fan..., prev].
ClusterFans cluster_fans(const Instance& I, int nu, const std::vector<int>& centrals,
                         const std::map<int, std::set<int>>& pipes) {
  ClusterFans out;
  const auto& rot = I.H.rotation.at(nu);
  const int d = static_cast<int>(rot.size());
  if (d < 3) {
    for (int rho : rot) out.fan[rho] = {};
    for (int v : centrals) {
      for (int rho : pipes.at(v)) out.fan[rho].push_back(v);
      out.rotation[v] = std::vector<int>(pipes.at(v).begin(), pipes.at(v).end());
    }
    return out;
  }
  Graph g;
  for (int i = 0; i < d; ++i) g.add_vertex(i);
  std::vector<int> ring;
  for (int i = 0; i < d; ++i) ring.push_back(g.add_edge(i, (i + 1) % d));
  std::map<int, int> ring_index;
  for (int i = 0; i < d; ++i) ring_index[rot[i]] = i;
  std::map<int, std::pair<int, int>> spoke;  // edge id -> (central, host edge)
  for (size_t j = 0; j < centrals.size(); ++j) {
    int c = d + static_cast<int>(j);
    g.add_vertex(c);
    for (int rho : pipes.at(centrals[j])) spoke[g.add_edge(c, ring_index.at(rho))] = {centrals[j], rho};
  }
  PlanarEmbedding emb;
  try {
    emb = embed_with_outer_cycle(g, ring);
  } catch (const Error& e) {
    if (e.code() != Errc::ImpossiblePrescription) throw;
    throw Error(Errc::ClusterLinkNotEmbeddable, "cluster " + std::to_string(nu));
  }
  // orientation: +1 when ring vertices read [next, ..., prev]
  int orient = 0;
  for (int i = 0; i < d; ++i) {
    int next = ring[i], prev = ring[(i + d - 1) % d];
    auto r = cyclic_from(emb.rotation.at(i), next);
    if (r.size() <= 2) continue;
    int here = r.back() == prev ? 1 : (r[1] == prev ? -1 : 0);
    if (here == 0) throw Error(Errc::Internal, "ring edges not adjacent at a ring vertex");
    if (orient == 0) orient = here;
    if (orient != here) throw Error(Errc::Internal, "inconsistent ring orientation");
  }
  if (orient == -1)
    for (auto& [_, r] : emb.rotation) std::reverse(r.begin(), r.end());
  for (int i = 0; i < d; ++i) {
    auto r = cyclic_from(emb.rotation.at(i), ring[i]);
    auto& f = out.fan[rot[i]];
    for (size_t k = 1; k + 1 < r.size(); ++k) f.push_back(spoke.at(r[k]).first);
  }
  for (size_t j = 0; j < centrals.size(); ++j) {
    auto& r = out.rotation[centrals[j]];
    for (int id : emb.rotation.at(d + static_cast<int>(j))) r.push_back(spoke.at(id).second);
  }
  return out;
}

// Removes a cyclic block of parallel copies, keeping `keep`.
void collapse_copies(std::vector<int>& rot, const std::set<int>& copies, int keep) {
  const int n = static_cast<int>(rot.size());
  int count = 0, runs = 0;
  for (int i = 0; i < n; ++i) {
    bool in = copies.count(rot[i]);
    count += in;
    if (in && !copies.count(rot[(i + n - 1) % n])) ++runs;
  }
  if (count != static_cast<int>(copies.size()) || (runs != 1 && count != n))
    throw Error(Errc::Internal, "parallel host edges are not consecutive");
  std::vector<int> r;
  for (int id : rot)
    if (!copies.count(id) || id == keep) r.push_back(id);
  rot = r;
}

}  // namespace

DerivedInstance derive_detailed(const NormalizedInstance& NI) {
  const Instance& I = NI.inst;
  const EmbeddedGraph& H = I.H;
  validate_map(H);  // no multigraph hosts in, none out
  DerivedInstance D;
  Instance& out = D.inst;

  std::set<int> central(NI.central.begin(), NI.central.end());
  std::map<int, std::set<int>> pipes;
  for (auto& [key, g] : NI.gathering) pipes[key.first].insert(key.second);

  int next_h = 0;
  for (const auto& e : H.edges) D.host_edge_vertex[e.id] = next_h++;
  for (int v : NI.central)
    if (pipes[v].size() >= 3) D.central_vertex[v] = next_h++;

  // components of G - V_s, each over one host edge
  std::map<int, int> comp_host;  // vertex -> host edge
  {
    std::vector<int> rest;
    for (int v : I.G.vertices)
      if (!central.count(v)) rest.push_back(v);
    Graph sub = I.G.induced(rest);
    auto inc = sub.incidence();
    for (const auto& comp : sub.components()) {
      int rho = -1;
      for (int v : comp)
        for (int id : inc[v])
          if (I.is_pipe(sub.edge(id))) rho = I.host_edge(sub.edge(id));
      if (rho < 0) throw Error(Errc::Internal, "component without a pipe edge");
      for (int v : comp) comp_host[v] = rho;
    }
  }

  // per-cluster fans and central rotations
  std::map<int, std::vector<int>> centrals_at;
  for (int v : NI.central) centrals_at[I.phi.at(v)].push_back(v);
  std::map<int, ClusterFans> fans;
  for (int nu : H.vertices) fans[nu] = cluster_fans(I, nu, centrals_at[nu], pipes);

  // H' before suppression: one edge per (central, host edge)
  EmbeddedGraph Hp;
  for (int i = 0; i < next_h; ++i) Hp.add_vertex(i);
  std::map<std::pair<int, int>, int> hedge;  // (central, rho) -> H' edge
  std::map<int, int> star_of;                // central -> H' vertex (possibly temporary)
  int tmp = next_h;
  for (int v : NI.central) {
    int s = D.central_vertex.count(v) ? D.central_vertex[v] : tmp++;
    if (!Hp.has_vertex(s)) Hp.add_vertex(s);
    star_of[v] = s;
  }
  int next_id = 0;
  for (int v : NI.central)
    for (int rho : pipes[v]) {
      int id = next_id++;
      hedge[{v, rho}] = id;
      Hp.edges.push_back(HostEdge{id, star_of[v], D.host_edge_vertex[rho], 1});
    }
  for (int v : NI.central) {
    auto& r = Hp.rotation[star_of[v]];
    for (int rho : fans[I.phi.at(v)].rotation.at(v)) r.push_back(hedge.at({v, rho}));
  }
  for (const auto& e : H.edges) {
    int nu = std::min(e.u, e.v), mu = std::max(e.u, e.v);
    std::vector<int> a, b;
    for (int v : fans[nu].fan[e.id]) a.push_back(hedge.at({v, e.id}));
    for (int v : fans[mu].fan[e.id]) b.push_back(hedge.at({v, e.id}));
    if (e.sign < 0) {
      std::reverse(a.begin(), a.end());
      for (int id : a)
        for (auto& he : Hp.edges)
          if (he.id == id) he.sign = -he.sign;
    }
    auto& r = Hp.rotation[D.host_edge_vertex[e.id]];
    r = a;
    r.insert(r.end(), b.begin(), b.end());
  }

  // G' = normalized G with phi'
  out.G = I.G;
  for (int v : I.G.vertices)
    out.phi[v] = central.count(v) ? star_of[v] : D.host_edge_vertex.at(comp_host.at(v));

  // suppress degree-2 centrals in both graphs
  for (int v : NI.central) {
    if (D.central_vertex.count(v)) continue;
    int s = star_of[v];
    const auto& rs = Hp.rotation.at(s);
    if (rs.size() != 2) throw Error(Errc::Internal, "suppressed central must have degree 2");
    HostEdge e1 = Hp.edge(rs[0]), e2 = Hp.edge(rs[1]);
    int x = e1.other(s), y = e2.other(s);
    int keep = std::min(e1.id, e2.id), drop = std::max(e1.id, e2.id);
    int sign = e1.sign * e2.sign;
    for (auto& [w, r] : Hp.rotation)
      for (auto& id : r)
        if (id == drop) id = keep;
    Hp.rotation.erase(s);
    Hp.edges.erase(std::remove_if(Hp.edges.begin(), Hp.edges.end(),
                                  [&](const HostEdge& h) { return h.id == e1.id || h.id == e2.id; }),
                   Hp.edges.end());
    Hp.edges.push_back(HostEdge{keep, std::min(x, y), std::max(x, y), sign});
    std::sort(Hp.edges.begin(), Hp.edges.end(), [](auto& p, auto& q) { return p.id < q.id; });
    Hp.vertices.erase(std::find(Hp.vertices.begin(), Hp.vertices.end(), s));

    Surgery sg = suppress_degree2(out.G, v);
    out.G = sg.graph;
    out.phi.erase(v);
  }

  // merge parallel copies
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (const auto& e : Hp.edges) classes[std::minmax(e.u, e.v)].push_back(e.id);
  for (auto& [ends, ids] : classes) {
    if (ids.size() < 2) continue;
    int keep = *std::min_element(ids.begin(), ids.end());
    int sign = Hp.edge(keep).sign;
    for (int id : ids)
      if (Hp.edge(id).sign != sign) throw Error(Errc::Internal, "parallel host edges differ in sign");
    std::set<int> copies(ids.begin(), ids.end());
    collapse_copies(Hp.rotation[ends.first], copies, keep);
    collapse_copies(Hp.rotation[ends.second], copies, keep);
    Hp.edges.erase(std::remove_if(Hp.edges.begin(), Hp.edges.end(),
                                  [&](const HostEdge& h) { return copies.count(h.id) && h.id != keep; }),
                   Hp.edges.end());
  }

  out.H = Hp;
  validate_map(out.H);
  if (euler_genus(out.H) > euler_genus(H))
    throw Error(Errc::Internal, "derived host has larger Euler genus");
  return D;
}

Instance derive(const NormalizedInstance& NI) { return derive_detailed(NI).inst; }

Instance simplified_derivative(const Instance& I) {
  return simplify(derive(normalize_simplified(simplify(I))));
}

}  // namespace we
