#include "testkit.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "weakembed/io.hpp"
#include "weakembed/oracle.hpp"
#include "weakembed/planarity.hpp"

namespace wt {

Instance fixture(const std::string& name) {
  std::ifstream in(std::string(WEAKEMBED_FIXTURE_DIR) + "/" + name + ".json");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : std::filesystem::directory_iterator(WEAKEMBED_FIXTURE_DIR))
    if (f.path().extension() == ".json") out.push_back(f.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool naive_solvable(std::vector<BitVec> rows, BitVec rhs) {
  const size_t m = rows.size();
  const size_t n = m ? rows[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && !rows[p][c]) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (size_t i = 0; i < m; ++i) {
      if (i == r || !rows[i][c]) continue;
      for (size_t k = 0; k < n; ++k) rows[i][k] ^= rows[r][k];
      rhs[i] ^= rhs[r];
    }
    ++r;
  }
  for (size_t i = r; i < m; ++i)
    if (rhs[i]) return false;
  return true;
}

int naive_rank(std::vector<BitVec> rows) {
  int r = 0;
  const size_t m = rows.size();
  const size_t n = m ? rows[0].size() : 0;
  for (size_t c = 0; c < n; ++c) {
    size_t p = r;
    while (p < m && !rows[p][c]) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = r + 1; i < m; ++i)
      if (rows[i][c])
        for (size_t k = 0; k < n; ++k) rows[i][k] ^= rows[r][k];
    ++r;
  }
  return r;
}

namespace {

std::vector<std::vector<int>> naive_faces(const Graph& g, const std::map<int, std::vector<int>>& rot) {
  std::set<std::pair<int, int>> seen;  // (edge, from)
  std::vector<std::vector<int>> faces;
  for (const auto& e : g.edges) {
    for (int from : {e.u, e.v}) {
      if (seen.count({e.id, from})) continue;
      std::vector<int> face;
      int id = e.id, x = from;
      while (!seen.count({id, x})) {
        seen.insert({id, x});
        face.push_back(id);
        int y = g.edge(id).other(x);
        const auto& r = rot.at(y);
        int pos = static_cast<int>(std::find(r.begin(), r.end(), id) - r.begin());
        id = r[(pos + 1) % r.size()];
        x = y;
      }
      faces.push_back(face);
    }
  }
  return faces;
}

}  // namespace

int naive_face_count(const Graph& g, const std::map<int, std::vector<int>>& rot) {
  int isolated = 0;
  for (int v : g.vertices) isolated += g.degree(v) == 0;
  return static_cast<int>(naive_faces(g, rot).size()) + isolated;
}

bool exhaustive_planar(const Graph& g, const std::vector<int>& cycle) {
  auto inc = g.incidence();
  std::vector<int> vs = g.vertices;
  std::map<int, std::vector<int>> rot;
  for (int v : vs) rot[v] = inc[v];
  const int comps = static_cast<int>(g.components().size());
  const int V = static_cast<int>(vs.size()), E = static_cast<int>(g.edges.size());
  std::vector<int> want = cycle;
  std::sort(want.begin(), want.end());
  std::function<bool(size_t)> go = [&](size_t k) -> bool {
    if (k == vs.size()) {
      int F = naive_face_count(g, rot);
      if (V - E + F != 2 * comps) return false;
      if (want.empty()) return true;
      for (auto f : naive_faces(g, rot)) {
        std::sort(f.begin(), f.end());
        if (f == want) return true;
      }
      return false;
    }
    auto& r = rot[vs[k]];
    if (r.size() <= 2) return go(k + 1);
    std::sort(r.begin() + 1, r.end());
    do {
      if (go(k + 1)) return true;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return false;
  };
  return go(0);
}

bool isomorphic(const Instance& a, const Instance& b) {
  if (a.G.vertices.size() != b.G.vertices.size() || a.G.edges.size() != b.G.edges.size()) return false;
  if (a.H.vertices.size() != b.H.vertices.size() || a.H.edges.size() != b.H.edges.size()) return false;
  if (euler_genus(a.H) != euler_genus(b.H) || is_orientable(a.H) != is_orientable(b.H)) return false;
  auto mult = [](const Graph& g) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& e : g.edges) ++m[std::minmax(e.u, e.v)];
    return m;
  };
  auto ma = mult(a.G), mb = mult(b.G);
  auto adj_a = a.G.incidence(), adj_b = b.G.incidence();
  // BFS order over a
  std::vector<int> order;
  std::set<int> placed;
  for (int s : a.G.vertices) {
    if (placed.count(s)) continue;
    std::vector<int> q{s};
    placed.insert(s);
    for (size_t i = 0; i < q.size(); ++i) {
      order.push_back(q[i]);
      for (int id : adj_a[q[i]]) {
        int w = a.G.edge(id).other(q[i]);
        if (placed.insert(w).second) q.push_back(w);
      }
    }
  }
  std::map<int, int> f, finv, hf, hfinv;
  std::function<bool(size_t)> go = [&](size_t k) -> bool {
    if (k == order.size()) {
      for (const auto& e : a.H.edges) {
        auto it1 = hf.find(e.u), it2 = hf.find(e.v);
        if (it1 == hf.end() || it2 == hf.end()) return false;
        if (!b.H.edge_between(it1->second, it2->second)) return false;
      }
      return true;
    }
    int v = order[k];
    for (int w : b.G.vertices) {
      if (finv.count(w) || adj_a[v].size() != adj_b[w].size()) continue;
      int hv = a.phi.at(v), hw = b.phi.at(w);
      auto h1 = hf.find(hv);
      if (h1 != hf.end() && h1->second != hw) continue;
      auto h2 = hfinv.find(hw);
      if (h2 != hfinv.end() && h2->second != hv) continue;
      bool ok = true;
      for (auto& [x, y] : f) {
        auto ca = ma.find(std::minmax(v, x));
        auto cb = mb.find(std::minmax(w, y));
        int na = ca == ma.end() ? 0 : ca->second, nb = cb == mb.end() ? 0 : cb->second;
        if (na != nb) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      bool fresh = h1 == hf.end();
      f[v] = w;
      finv[w] = v;
      if (fresh) {
        hf[hv] = hw;
        hfinv[hw] = hv;
      }
      if (go(k + 1)) return true;
      f.erase(v);
      finv.erase(w);
      if (fresh) {
        hf.erase(hv);
        hfinv.erase(hw);
      }
    }
    return false;
  };
  return go(0);
}

Instance relabel(const Instance& I, std::mt19937& rng) {
  auto perm = [&](const std::vector<int>& ids) {
    std::vector<int> fresh(ids.size());
    std::iota(fresh.begin(), fresh.end(), 100);
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::map<int, int> m;
    for (size_t i = 0; i < ids.size(); ++i) m[ids[i]] = fresh[i];
    return m;
  };
  std::vector<int> ge, he;
  for (const auto& e : I.G.edges) ge.push_back(e.id);
  for (const auto& e : I.H.edges) he.push_back(e.id);
  auto gv = perm(I.G.vertices), hv = perm(I.H.vertices), gm = perm(ge), hm = perm(he);
  Instance out;
  for (int v : I.H.vertices) out.H.add_vertex(hv[v]);
  for (const auto& e : I.H.edges) out.H.edges.push_back(HostEdge{hm[e.id], hv[e.u], hv[e.v], e.sign});
  std::sort(out.H.edges.begin(), out.H.edges.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (const auto& [v, r] : I.H.rotation) {
    auto& nr = out.H.rotation[hv[v]];
    for (int id : r) nr.push_back(hm[id]);
  }
  for (int v : I.G.vertices) out.G.add_vertex(gv[v]);
  for (const auto& e : I.G.edges) out.G.add_edge(gm[e.id], gv[e.u], gv[e.v]);
  for (const auto& [v, nu] : I.phi) out.phi[gv[v]] = hv[nu];
  return out;
}

EmbeddedGraph random_host(std::mt19937& rng, const RandomOptions& o) {
  std::uniform_int_distribution<int> nd(2, o.max_host_vertices);
  for (;;) {
    int n = nd(rng);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    // random spanning tree then extra edges
    for (int i = 1; i < n; ++i) g.add_edge(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    std::bernoulli_distribution extra(0.45);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        bool has = false;
        for (const auto& e : g.edges) has = has || (std::min(e.u, e.v) == a && std::max(e.u, e.v) == b);
        if (!has && extra(rng)) g.add_edge(a, b);
      }
    auto emb = planar_embedding(g);
    if (!emb) continue;
    EmbeddedGraph h = as_embedded(g, *emb);
    if (o.allow_negative && std::bernoulli_distribution(0.35)(rng)) {
      int k = std::uniform_int_distribution<int>(0, static_cast<int>(h.edges.size()) - 1)(rng);
      h.edges[k].sign = -1;
    }
    return h;
  }
}

Instance walk_instance(const EmbeddedGraph& H, const std::vector<int>& walk) {
  Instance I;
  I.H = H;
  const int n = static_cast<int>(walk.size());
  for (int i = 0; i < n; ++i) {
    I.G.add_vertex(i);
    I.phi[i] = walk[i];
  }
  for (int i = 0; i < n; ++i) I.G.add_edge(i, i, (i + 1) % n);
  return I;
}

namespace {

std::vector<int> neighbours(const EmbeddedGraph& H, int v) {
  std::vector<int> out;
  for (int id : H.rotation.at(v)) out.push_back(H.edge(id).other(v));
  return out;
}

// closed walk of exactly `len` steps, or empty
std::vector<int> random_closed_walk(const EmbeddedGraph& H, int len, std::mt19937& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    int s = H.vertices[std::uniform_int_distribution<size_t>(0, H.vertices.size() - 1)(rng)];
    std::vector<int> w{s};
    for (int i = 1; i < len; ++i) {
      auto nb = neighbours(H, w.back());
      if (nb.empty()) break;
      w.push_back(nb[std::uniform_int_distribution<size_t>(0, nb.size() - 1)(rng)]);
    }
    if (static_cast<int>(w.size()) != len) continue;
    if (H.edge_between(w.back(), s) && w.back() != s) return w;
  }
  return {};
}

void add_random_edges(Instance& I, int count, std::mt19937& rng, const RandomOptions& o) {
  for (int t = 0; t < 40 && count > 0 && static_cast<int>(I.G.edges.size()) < o.max_edges; ++t) {
    std::uniform_int_distribution<size_t> pick(0, I.G.vertices.size() - 1);
    int a = I.G.vertices[pick(rng)], b = I.G.vertices[pick(rng)];
    if (a == b) continue;
    int x = I.phi.at(a), y = I.phi.at(b);
    if (x != y && !I.H.edge_between(x, y)) continue;
    bool dup = false;
    for (const auto& e : I.G.edges) dup = dup || (e.has(a) && e.has(b));
    if (dup && std::bernoulli_distribution(0.8)(rng)) continue;
    I.G.add_edge(a, b);
    --count;
  }
}

}  // namespace

Instance random_instance(std::mt19937& rng, const RandomOptions& o) {
  for (;;) {
    Instance I;
    I.H = random_host(rng, o);
    int family = o.family >= 0 ? o.family : std::uniform_int_distribution<int>(0, 4)(rng);
    if (family == 4) {
      I = random_segment_tree(rng, o.max_vertices);
    } else if (family == 0) {
      int n = std::uniform_int_distribution<int>(2, o.max_vertices)(rng);
      for (int i = 0; i < n; ++i) {
        I.G.add_vertex(i);
        I.phi[i] = I.H.vertices[std::uniform_int_distribution<size_t>(0, I.H.vertices.size() - 1)(rng)];
      }
      add_random_edges(I, std::uniform_int_distribution<int>(1, o.max_edges)(rng), rng, o);
    } else {
      int len = std::uniform_int_distribution<int>(2, o.max_vertices)(rng);
      auto w = random_closed_walk(I.H, len, rng);
      if (w.size() < 2) continue;
      // repeating a short walk gives winding
      if (family == 2 && 2 * w.size() <= static_cast<size_t>(o.max_vertices)) {
        std::vector<int> ww = w;
        int reps = std::uniform_int_distribution<int>(2, static_cast<int>(o.max_vertices / w.size()))(rng);
        for (int r = 1; r < reps; ++r) ww.insert(ww.end(), w.begin(), w.end());
        w = ww;
      }
      if (w.size() == 2) {
        I.G.add_vertex(0);
        I.G.add_vertex(1);
        I.phi = {{0, w[0]}, {1, w[1]}};
        I.G.add_edge(0, 1);
      } else {
        EmbeddedGraph H = I.H;
        I = walk_instance(H, w);
      }
      if (family == 3) {
        int extra_v = std::uniform_int_distribution<int>(0, o.max_vertices - static_cast<int>(I.G.vertices.size()))(rng);
        for (int i = 0; i < extra_v; ++i) {
          int v = I.G.next_vertex_id();
          I.G.add_vertex(v);
          I.phi[v] = I.H.vertices[std::uniform_int_distribution<size_t>(0, I.H.vertices.size() - 1)(rng)];
        }
        add_random_edges(I, std::uniform_int_distribution<int>(1, 4)(rng), rng, o);
      }
    }
    if (I.G.edges.empty() || static_cast<int>(I.G.edges.size()) > o.max_edges) continue;
    if (static_cast<int>(I.G.vertices.size()) > o.max_vertices) continue;
    if (order_space(prune_host(I)) > o.budget) continue;
    return I;
  }
}

Instance random_segment_tree(std::mt19937& rng, int max_vertices) {
  for (;;) {
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    Instance I;
    for (int i = 0; i < k; ++i) I.H.add_vertex(i);
    for (int i = 0; i + 1 < k; ++i) I.H.add_edge(i, i, i + 1, 1);
    auto add = [&](int pos) {
      int v = I.G.next_vertex_id();
      I.G.add_vertex(v);
      I.phi[v] = pos;
      return v;
    };
    auto leg = [&](int from) {
      int runs = std::uniform_int_distribution<int>(1, 3)(rng);
      int dir = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
      int prev = from;
      for (int r = 0; r < runs; ++r, dir = -dir) {
        int len = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < len; ++i) {
          int pos = I.phi.at(prev) + dir;
          if (pos < 0 || pos >= k) break;
          int w = add(pos);
          I.G.add_edge(prev, w);
          prev = w;
        }
      }
      return prev;
    };
    int branches = std::uniform_int_distribution<int>(1, 2)(rng);
    int c = add(std::uniform_int_distribution<int>(0, k - 1)(rng));
    std::vector<int> centres{c};
    if (branches == 2) {
      int d = leg(c);
      if (d == c) continue;
      centres.push_back(d);
    }
    for (int x : centres)
      for (int i = 0; i < 2 + (x == c && branches == 1); ++i) leg(x);
    if (static_cast<int>(I.G.vertices.size()) > max_vertices || I.G.edges.empty()) continue;
    return prune_host(I);
  }
}

}  // namespace wt
