#include "weakembed/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <set>

#include "weakembed/errors.hpp"

namespace we {

namespace {

using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                 boost::property<boost::vertex_index_t, int>,
                                 boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BG>::edge_descriptor;

void index_edges(BG& g) {
  int i = 0;
  boost::graph_traits<BG>::edge_iterator it, end;
  for (boost::tie(it, end) = boost::edges(g); it != end; ++it)
    boost::put(boost::edge_index, g, *it, i++);
}

// Simple-graph image of g: parallel copies get a subdivision vertex.
struct Lowered {
  BG bg;
  std::map<int, int> index;  // original vertex -> boost index
  std::vector<int> vertex_of;
  // boost edge index -> (original edge id, original endpoint or -1)
  std::vector<std::pair<int, int>> origin;
  int n_original = 0;
};

Lowered lower(const Graph& g) {
  Lowered L;
  for (int v : g.vertices) {
    L.index[v] = static_cast<int>(L.vertex_of.size());
    L.vertex_of.push_back(v);
  }
  L.n_original = static_cast<int>(L.vertex_of.size());
  L.bg = BG(L.n_original);
  std::set<std::pair<int, int>> seen;
  int extra = L.n_original;
  for (const auto& e : g.edges) {
    if (e.u == e.v) throw Error(Errc::LoopEdge, "planarity input has a loop");
    int a = L.index.at(e.u), b = L.index.at(e.v);
    if (seen.insert(std::minmax(a, b)).second) {
      boost::add_edge(a, b, L.bg);
      L.origin.push_back({e.id, -2});
    } else {
      int s = extra++;
      boost::add_vertex(L.bg);
      boost::add_edge(a, s, L.bg);
      L.origin.push_back({e.id, e.u});
      boost::add_edge(s, b, L.bg);
      L.origin.push_back({e.id, e.v});
    }
  }
  index_edges(L.bg);
  return L;
}

}  // namespace

bool planar_indexed(int n, const std::vector<std::pair<int, int>>& edges,
                    const std::vector<int>& boundary) {
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : edges)
    if (a != b) es.insert(std::minmax(a, b));
  int total = n;
  int k = static_cast<int>(boundary.size());
  if (k >= 2) {
    int hub = total++;
    for (int i = 0; i < k; ++i) {
      es.insert(std::minmax(hub, boundary[i]));
      if (k >= 3 || i == 0) es.insert(std::minmax(boundary[i], boundary[(i + 1) % k]));
    }
  }
  // Euler bound shortcut
  if (total >= 3 && static_cast<int>(es.size()) > 3 * total - 6) return false;
  BG g(total);
  for (auto [a, b] : es) boost::add_edge(a, b, g);
  index_edges(g);
  return boost::boyer_myrvold_planarity_test(g);
}

bool is_planar(const Graph& g) {
  std::map<int, int> idx;
  for (int v : g.vertices) idx[v] = static_cast<int>(idx.size());
  std::vector<std::pair<int, int>> es;
  for (const auto& e : g.edges) es.push_back({idx.at(e.u), idx.at(e.v)});
  return planar_indexed(static_cast<int>(idx.size()), es);
}

std::optional<PlanarEmbedding> planar_embedding(const Graph& g) {
  Lowered L = lower(g);
  std::vector<std::vector<BEdge>> emb(boost::num_vertices(L.bg));
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = L.bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, L.bg)));
  if (!ok) return std::nullopt;
  PlanarEmbedding out;
  for (int i = 0; i < L.n_original; ++i) {
    auto& rot = out.rotation[L.vertex_of[i]];
    for (const BEdge& be : emb[i]) {
      int ei = boost::get(boost::edge_index, L.bg, be);
      rot.push_back(L.origin[ei].first);
    }
  }
  return out;
}

EmbeddedGraph as_embedded(const Graph& g, const PlanarEmbedding& emb) {
  EmbeddedGraph h;
  h.vertices = g.vertices;
  for (const auto& e : g.edges) h.edges.push_back(HostEdge{e.id, e.u, e.v, 1});
  for (int v : g.vertices) {
    auto it = emb.rotation.find(v);
    h.rotation[v] = it == emb.rotation.end() ? std::vector<int>{} : it->second;
  }
  return h;
}

std::vector<int> cycle_order(const Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 2) throw Error(Errc::NotACycle, "cycle needs at least two edges");
  std::map<int, std::vector<int>> inc;
  for (int id : cyc) {
    const Edge& e = g.edge(id);
    if (e.u == e.v) throw Error(Errc::NotACycle, "loop on cycle");
    inc[e.u].push_back(id);
    inc[e.v].push_back(id);
  }
  for (auto& [_, l] : inc)
    if (l.size() != 2) throw Error(Errc::NotACycle, "cycle vertex of degree != 2");
  std::vector<int> order;
  int start = inc.begin()->first, cur = start;
  int via = std::min(inc[start][0], inc[start][1]);
  do {
    order.push_back(cur);
    cur = g.edge(via).other(cur);
    const auto& l = inc[cur];
    via = l[0] == via ? l[1] : l[0];
  } while (cur != start);
  if (order.size() != cyc.size()) throw Error(Errc::NotACycle, "cycle edges are disconnected");
  return order;
}

bool outer_cycle_embeddable(const Graph& g, const std::vector<int>& cycle) {
  std::map<int, int> idx;
  for (int v : g.vertices) idx[v] = static_cast<int>(idx.size());
  std::vector<std::pair<int, int>> es;
  for (const auto& e : g.edges) es.push_back({idx.at(e.u), idx.at(e.v)});
  std::vector<int> b;
  for (int v : cycle) b.push_back(idx.at(v));
  return planar_indexed(static_cast<int>(idx.size()), es, b);
}

static bool has_facial_cycle(const EmbeddedGraph& h, const std::vector<int>& cyc) {
  std::vector<int> want = cyc;
  std::sort(want.begin(), want.end());
  for (const auto& f : trace_faces(h)) {
    if (f.size() != want.size()) continue;
    std::vector<int> got;
    for (const auto& s : f) got.push_back(s.edge);
    std::sort(got.begin(), got.end());
    if (got == want) return true;
  }
  return false;
}

PlanarEmbedding embed_with_outer_cycle(const Graph& g, const std::vector<int>& cyc) {
  auto order = cycle_order(g, cyc);
  const int k = static_cast<int>(order.size());
  // edge between order[i] and order[i+1]
  std::vector<int> ring(k);
  {
    std::set<int> left(cyc.begin(), cyc.end());
    for (int i = 0; i < k; ++i) {
      int a = order[i], b = order[(i + 1) % k];
      for (int id : left) {
        const Edge& e = g.edge(id);
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
          ring[i] = id;
          left.erase(id);
          break;
        }
      }
    }
  }
  Graph aug = g;
  int hub = g.next_vertex_id();
  aug.add_vertex(hub);
  std::vector<int> spoke(k);
  for (int i = 0; i < k; ++i) spoke[i] = aug.add_edge(hub, order[i]);
  auto emb = planar_embedding(aug);
  if (!emb) throw Error(Errc::ImpossiblePrescription, "hub-augmented graph is not planar");

  for (int variant = 0; variant < 2; ++variant) {
    PlanarEmbedding out;
    for (int v : g.vertices) {
      const auto& rot = emb->rotation.at(v);
      auto pos = std::find(order.begin(), order.end(), v);
      if (pos == order.end()) {
        out.rotation[v] = rot;
        continue;
      }
      int i = static_cast<int>(pos - order.begin());
      int before = ring[(i + k - 1) % k], after = ring[i];
      std::vector<int> r;
      for (int id : rot) {
        if (id == before || id == after) continue;
        if (id == spoke[i]) {
          if (variant == 0) {
            r.push_back(after);
            r.push_back(before);
          } else {
            r.push_back(before);
            r.push_back(after);
          }
        } else {
          r.push_back(id);
        }
      }
      out.rotation[v] = r;
    }
    EmbeddedGraph h = as_embedded(g, out);
    if (euler_genus(h) == 0 && has_facial_cycle(h, cyc)) return out;
  }
  throw Error(Errc::Internal, "rerouting failed to expose the prescribed cycle");
}

}  // namespace we
