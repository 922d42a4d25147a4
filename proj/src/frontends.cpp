#include "weakembed/frontends.hpp"

#include <algorithm>
#include <set>

#include "weakembed/errors.hpp"

namespace we {

bool operator<(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

struct Seg {
  Point p, q;
};

bool on_segment(const Seg& s, const Point& r) {
  if (cross(s.p, s.q, r) != 0) return false;
  Rational dot = (r.x - s.p.x) * (s.q.x - s.p.x) + (r.y - s.p.y) * (s.q.y - s.p.y);
  Rational len = (s.q.x - s.p.x) * (s.q.x - s.p.x) + (s.q.y - s.p.y) * (s.q.y - s.p.y);
  return dot >= 0 && dot <= len;
}

// parameter of r along s (r assumed on s)
Rational param(const Seg& s, const Point& r) {
  if (s.q.x != s.p.x) return (r.x - s.p.x) / (s.q.x - s.p.x);
  return (r.y - s.p.y) / (s.q.y - s.p.y);
}

void intersect(const Seg& a, const Seg& b, std::set<Point>& out) {
  Point r{a.q.x - a.p.x, a.q.y - a.p.y}, s{b.q.x - b.p.x, b.q.y - b.p.y};
  Rational d = r.x * s.y - r.y * s.x;
  if (d == 0) return;  // parallel: overlaps end at existing polyline points
  Point w{b.p.x - a.p.x, b.p.y - a.p.y};
  Rational t = (w.x * s.y - w.y * s.x) / d;
  Rational u = (w.x * r.y - w.y * r.x) / d;
  if (t < 0 || t > 1 || u < 0 || u > 1) return;
  out.insert(Point{a.p.x + t * r.x, a.p.y + t * r.y});
}

int half(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool angle_less(const Point& a, const Point& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

PLReduction reduce_pl_map_detailed(const PLMap& m) {
  // effective point sequences, consecutive repeats dropped
  std::map<int, std::vector<Point>> path;
  std::vector<Seg> segs;
  std::set<Point> P;
  for (auto& [v, p] : m.vertices) P.insert(p);
  for (const auto& e : m.edges) {
    if (!m.vertices.count(e.u) || !m.vertices.count(e.v))
      throw Error(Errc::InvalidInput, "polyline edge " + std::to_string(e.id) + " has unknown endpoint");
    if (e.u == e.v) throw Error(Errc::LoopInG, "edge " + std::to_string(e.id) + " is a loop");
    std::vector<Point> seq{m.vertices.at(e.u)};
    for (const auto& p : e.polyline) seq.push_back(p);
    seq.push_back(m.vertices.at(e.v));
    std::vector<Point> clean;
    for (const auto& p : seq)
      if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
    for (const auto& p : clean) P.insert(p);
    for (size_t i = 0; i + 1 < clean.size(); ++i) segs.push_back({clean[i], clean[i + 1]});
    path[e.id] = clean;
  }
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) intersect(segs[i], segs[j], P);

  PLReduction R;
  std::map<Point, int> pid;
  for (const auto& p : P) {
    int id = static_cast<int>(pid.size());
    pid[p] = id;
    R.host_point[id] = p;
  }
  // refine a segment into the points of P on it, in order
  auto refine = [&](const Seg& s) {
    std::vector<std::pair<Rational, Point>> on;
    for (const auto& p : P)
      if (on_segment(s, p)) on.push_back({param(s, p), p});
    std::sort(on.begin(), on.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<int> ids;
    for (auto& [_, p] : on) ids.push_back(pid.at(p));
    return ids;
  };

  Instance& I = R.inst;
  std::map<std::pair<int, int>, int> hedge;
  for (auto& [id, p] : R.host_point) I.H.add_vertex(id);
  auto host_edge = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = hedge.find(key);
    if (it != hedge.end()) return it->second;
    int id = static_cast<int>(hedge.size());
    hedge[key] = id;
    I.H.edges.push_back(HostEdge{id, key.first, key.second, 1});
    return id;
  };

  for (auto& [v, p] : m.vertices) {
    I.G.add_vertex(v);
    I.phi[v] = pid.at(p);
  }
  int next_v = m.vertices.empty() ? 0 : m.vertices.rbegin()->first + 1;
  int next_e = 0;
  for (const auto& e : m.edges) next_e = std::max(next_e, e.id + 1);
  for (const auto& e : m.edges) {
    const auto& seq = path.at(e.id);
    std::vector<int> hv{pid.at(seq.front())};
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      auto ids = refine({seq[i], seq[i + 1]});
      for (size_t k = 1; k < ids.size(); ++k) hv.push_back(ids[k]);
    }
    for (size_t i = 0; i + 1 < hv.size(); ++i) host_edge(hv[i], hv[i + 1]);
    // subdivide the G-edge along hv
    int prev = e.u;
    bool first = true;
    for (size_t i = 1; i + 1 < hv.size(); ++i) {
      int w = next_v++;
      I.G.add_vertex(w);
      I.phi[w] = hv[i];
      I.G.add_edge(first ? e.id : next_e++, prev, w);
      first = false;
      prev = w;
    }
    I.G.add_edge(first ? e.id : next_e++, prev, e.v);
  }
  std::sort(I.H.edges.begin(), I.H.edges.end(), [](auto& a, auto& b) { return a.id < b.id; });

  for (int v : I.H.vertices) {
    std::vector<std::pair<Point, int>> dirs;
    const Point& o = R.host_point.at(v);
    for (const auto& he : I.H.edges) {
      if (!he.has(v)) continue;
      const Point& t = R.host_point.at(he.other(v));
      dirs.push_back({Point{t.x - o.x, t.y - o.y}, he.id});
    }
    std::sort(dirs.begin(), dirs.end(), [](auto& a, auto& b) { return angle_less(a.first, b.first); });
    auto& rot = I.H.rotation[v];
    for (auto& [_, id] : dirs) rot.push_back(id);
  }
  return R;
}

Instance reduce_pl_map(const PLMap& m) { return reduce_pl_map_detailed(m).inst; }

Instance reduce_flat_clustered(const FlatClusteredGraph& c) {
  if (c.clusters.size() > 3)
    throw Error(Errc::TooManyClusters, std::to_string(c.clusters.size()) + " clusters given, at most 3 supported");
  Instance I;
  I.G = c.G;
  for (int k = 0; k < static_cast<int>(c.clusters.size()); ++k) {
    I.H.add_vertex(k);
    for (int v : c.clusters[k]) {
      if (!c.G.has_vertex(v)) throw Error(Errc::InvalidInput, "cluster member " + std::to_string(v) + " not in G");
      if (!I.phi.emplace(v, k).second)
        throw Error(Errc::InvalidInput, "vertex " + std::to_string(v) + " in two clusters");
    }
  }
  for (int v : c.G.vertices)
    if (!I.phi.count(v)) throw Error(Errc::InvalidInput, "vertex " + std::to_string(v) + " in no cluster");
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : c.G.edges)
    if (I.phi.at(e.u) != I.phi.at(e.v)) pairs.insert(std::minmax(I.phi.at(e.u), I.phi.at(e.v)));
  int id = 0;
  for (auto [a, b] : pairs) I.H.add_edge(id++, a, b, 1);
  return I;
}

}  // namespace we
