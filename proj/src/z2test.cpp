#include "weakembed/z2test.hpp"

#include <algorithm>
#include <set>

#include "weakembed/planarity.hpp"

namespace we {

CanonicalDrawing canonical_drawing(const Instance& I) {
  CanonicalDrawing d;
  auto inc = I.G.incidence();
  std::map<int, std::vector<int>> by_host;  // host edge -> pipe edges, ascending id
  for (const auto& e : I.G.edges)
    if (I.is_pipe(e)) by_host[I.host_edge(e)].push_back(e.id);
  std::map<int, std::vector<int>> members;
  for (int v : I.G.vertices) members[I.phi.at(v)].push_back(v);

  for (int nu : I.H.vertices) {
    auto& slots = d.slots[nu];
    for (int rho : I.H.rotation.at(nu)) {
      auto it = by_host.find(rho);
      if (it == by_host.end()) continue;
      std::vector<int> block = it->second;
      const HostEdge& h = I.H.edge(rho);
      if (nu != std::min(h.u, h.v)) std::reverse(block.begin(), block.end());
      for (int e : block) slots.push_back({e, -1});
    }
    for (int v : members[nu])
      for (int e : inc[v]) slots.push_back({e, v});
  }
  return d;
}

namespace {

// chord endpoints of each edge piece in one disc
std::map<int, std::pair<int, int>> chords(const std::vector<Slot>& slots) {
  std::map<int, std::vector<int>> pos;
  for (int i = 0; i < static_cast<int>(slots.size()); ++i) pos[slots[i].edge].push_back(i);
  std::map<int, std::pair<int, int>> out;
  for (auto& [e, p] : pos) {
    std::sort(p.begin(), p.end());
    out[e] = {p[0], p[1]};
  }
  return out;
}

bool interleave(std::pair<int, int> a, std::pair<int, int> b) {
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  return inside(b.first) != inside(b.second);
}

bool independent(const Edge& e, const Edge& f) {
  return !e.has(f.u) && !e.has(f.v);
}

std::set<int> clusters_of(const Instance& I, const Edge& e) {
  return {I.phi.at(e.u), I.phi.at(e.v)};
}

}  // namespace

ParityVector canonical_parity_vector(const Instance& I) {
  ParityVector pv;
  CanonicalDrawing d = canonical_drawing(I);
  std::map<int, std::map<int, std::pair<int, int>>> ch;
  for (auto& [nu, slots] : d.slots) ch[nu] = chords(slots);

  const auto& E = I.G.edges;
  for (size_t i = 0; i < E.size(); ++i) {
    for (size_t j = i + 1; j < E.size(); ++j) {
      const Edge &e = E[i], &f = E[j];
      if (!independent(e, f)) continue;
      auto ce = clusters_of(I, e), cf = clusters_of(I, f);
      std::uint8_t bit = 0;
      bool shared = false;
      for (int nu : ce) {
        if (!cf.count(nu)) continue;
        shared = true;
        if (interleave(ch[nu].at(e.id), ch[nu].at(f.id))) bit ^= 1;
      }
      if (!shared) continue;
      if (I.is_pipe(e) && I.is_pipe(f)) {
        int rho = I.host_edge(e);
        if (rho == I.host_edge(f) && I.H.edge(rho).sign < 0) bit ^= 1;
      }
      pv.bits[{e.id, f.id}] = bit;
    }
  }
  return pv;
}

Gf2System build_move_system(const Instance& I, const ParityVector& pv) {
  Gf2System s;
  std::map<std::pair<int, int>, int> index;
  for (const auto& e : I.G.edges) {
    auto ce = clusters_of(I, e);
    for (int v : I.G.vertices) {
      if (e.has(v) || !ce.count(I.phi.at(v))) continue;
      index[{e.id, v}] = static_cast<int>(s.vars.size());
      s.vars.push_back({e.id, v});
    }
  }
  std::vector<BitVec> rows;
  for (const auto& [pair, bit] : pv.bits) {
    const Edge &e = I.G.edge(pair.first), &f = I.G.edge(pair.second);
    BitVec row(s.vars.size(), 0);
    auto add = [&](int edge, int v) {
      auto it = index.find({edge, v});
      if (it != index.end()) row[it->second] ^= 1;
    };
    add(e.id, f.u);
    add(e.id, f.v);
    add(f.id, e.u);
    add(f.id, e.v);
    rows.push_back(std::move(row));
    s.equations.push_back(pair);
    s.rhs.push_back(bit);
  }
  s.A = BitMatrix::from_rows(rows, static_cast<int>(s.vars.size()));
  return s;
}

namespace {

struct PipeStar {
  int center;
  std::map<int, int> by_host;  // host edge -> one far endpoint (smallest edge id)
};

std::map<int, std::vector<PipeStar>> pipe_stars(const Instance& I) {
  std::map<int, std::vector<PipeStar>> out;
  auto inc = I.G.incidence();
  for (int c : I.G.vertices) {
    PipeStar s{c, {}};
    for (int id : inc[c]) {
      const Edge& e = I.G.edge(id);
      if (!I.is_pipe(e)) continue;
      s.by_host.emplace(I.host_edge(e), e.other(c));
    }
    if (!s.by_host.empty()) out[I.phi.at(c)].push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::optional<Witness> find_x_configuration(const Instance& I) {
  for (auto& [nu, stars] : pipe_stars(I)) {
    const auto& rot = I.H.rotation.at(nu);
    if (rot.size() < 4) continue;
    std::map<int, int> pos;
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[rot[i]] = i;
    for (size_t i = 0; i < stars.size(); ++i) {
      for (size_t j = i + 1; j < stars.size(); ++j) {
        const auto &a = stars[i].by_host, &b = stars[j].by_host;
        for (auto r1 = a.begin(); r1 != a.end(); ++r1) {
          for (auto r2 = std::next(r1); r2 != a.end(); ++r2) {
            auto ch = std::minmax(pos[r1->first], pos[r2->first]);
            for (auto r3 = b.begin(); r3 != b.end(); ++r3) {
              for (auto r4 = std::next(r3); r4 != b.end(); ++r4) {
                std::set<int> four{r1->first, r2->first, r3->first, r4->first};
                if (four.size() != 4) continue;
                if (!interleave(ch, std::minmax(pos[r3->first], pos[r4->first]))) continue;
                Witness w;
                w.kind = "x_configuration";
                w.vertices = {stars[i].center, r1->second, r2->second,
                              stars[j].center, r3->second, r4->second};
                w.host_vertices = {nu};
                for (int r : {r1->first, r2->first, r3->first, r4->first})
                  w.host_vertices.push_back(I.H.edge(r).other(nu));
                return w;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_yy_configuration(const Instance& I) {
  for (auto& [nu, stars] : pipe_stars(I)) {
    for (size_t i = 0; i < stars.size(); ++i) {
      for (size_t j = i + 1; j < stars.size(); ++j) {
        std::vector<int> common;
        for (auto& [r, _] : stars[i].by_host)
          if (stars[j].by_host.count(r)) common.push_back(r);
        if (common.size() < 3) continue;
        common.resize(3);
        Witness w;
        w.kind = "yy_configuration";
        w.vertices = {stars[i].center};
        for (int r : common) w.vertices.push_back(stars[i].by_host.at(r));
        w.vertices.push_back(stars[j].center);
        for (int r : common) w.vertices.push_back(stars[j].by_host.at(r));
        w.host_vertices = {nu};
        for (int r : common) w.host_vertices.push_back(I.H.edge(r).other(nu));
        return w;
      }
    }
  }
  return std::nullopt;
}

ClusterLink cluster_link_graph(const Instance& I, int nu) {
  ClusterLink L;
  L.ring_host_edge = I.H.rotation.at(nu);
  L.ring_size = static_cast<int>(L.ring_host_edge.size());
  const int d = L.ring_size;
  for (int i = 0; i < d; ++i) L.graph.add_vertex(i);
  if (d == 2) {
    L.ring_edges.push_back(L.graph.add_edge(0, 1));
  } else if (d >= 3) {
    for (int i = 0; i < d; ++i) L.ring_edges.push_back(L.graph.add_edge(i, (i + 1) % d));
    L.cycle_edges = L.ring_edges;
  }
  std::map<int, int> ring_of_neighbor;
  for (int i = 0; i < d; ++i) ring_of_neighbor[I.H.edge(L.ring_host_edge[i]).other(nu)] = i;
  L.components = cluster_components(I, nu);
  for (int j = 0; j < static_cast<int>(L.components.size()); ++j) {
    int c = d + j;
    L.graph.add_vertex(c);
    for (int mu : pipe_neighborhood(I, L.components[j])) L.graph.add_edge(c, ring_of_neighbor.at(mu));
  }
  return L;
}

std::vector<int> check_cluster_links(const Instance& I) {
  std::set<int> used;
  for (const auto& [v, nu] : I.phi) used.insert(nu);
  std::vector<int> bad;
  for (int nu : used) {
    ClusterLink L = cluster_link_graph(I, nu);
    bool ok;
    if (L.ring_size >= 3) {
      std::vector<int> ring(L.ring_size);
      for (int i = 0; i < L.ring_size; ++i) ring[i] = i;
      ok = outer_cycle_embeddable(L.graph, ring);
    } else {
      ok = is_planar(L.graph);
    }
    if (!ok) bad.push_back(nu);
  }
  return bad;
}

Z2Report z2_check(const Instance& I) {
  Z2Report r;
  Gf2System s = build_move_system(I, canonical_parity_vector(I));
  AffineSolution sol = solve_affine_certified(s.A, s.rhs);
  r.z2 = sol.feasible;
  if (r.z2) {
    r.solution = sol.x;
    return r;
  }
  if (auto w = find_x_configuration(I)) {
    r.witness = w;
  } else if (auto y = find_yy_configuration(I)) {
    r.witness = y;
  } else if (auto bad = check_cluster_links(I); !bad.empty()) {
    r.witness = Witness{"cluster_link", {}, {bad.front()}, {}};
  } else {
    Witness w;
    w.kind = "infeasible_system";
    for (int row : sol.witness) w.equations.push_back(s.equations[row]);
    r.witness = w;
  }
  return r;
}

bool z2_approximable(const Instance& I) { return z2_check(I).z2; }

}  // namespace we
