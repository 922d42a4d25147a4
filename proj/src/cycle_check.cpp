#include "weakembed/cycle_check.hpp"

#include <set>

#include "weakembed/errors.hpp"
#include "weakembed/pipeline.hpp"

namespace we {

PrimitiveWalk primitive_decomposition(const DartWalk& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw Error(Errc::InvalidInput, "empty walk");
  for (int p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return {DartWalk(w.begin(), w.begin() + p), n / p};
  }
  return {w, 1};
}

Sidedness walk_sidedness(const DartWalk& W, const EmbeddedGraph& H) {
  int neg = 0;
  for (const auto& d : W) neg += H.edge(d.edge).sign < 0;
  return neg % 2 ? Sidedness::OneSided : Sidedness::TwoSided;
}

bool winding_verdict(const DartWalk&, int o, Sidedness s) {
  return o == 1 || (o == 2 && s == Sidedness::OneSided);
}

DartWalk cycle_walk(const Instance& I, const std::vector<int>& comp) {
  std::set<int> in(comp.begin(), comp.end());
  auto inc = I.G.incidence();
  for (int v : comp)
    if (inc[v].size() != 2)
      throw Error(Errc::UnexpectedShape, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(inc[v].size()) + " in a surviving component");
  int start = *in.begin();
  int cur = start, via = std::min(inc[start][0], inc[start][1]);
  DartWalk w;
  std::set<int> seen;
  do {
    const Edge& e = I.G.edge(via);
    if (!I.is_pipe(e)) throw Error(Errc::UnexpectedShape, "cycle edge inside a cluster");
    int nxt = e.other(cur);
    int rho = I.host_edge(e);
    w.push_back(Dart{rho, I.H.edge(rho).u == I.phi.at(cur)});
    seen.insert(cur);
    const auto& l = inc[nxt];
    via = l[0] == via ? l[1] : l[0];
    cur = nxt;
  } while (cur != start);
  if (seen.size() != in.size()) throw Error(Errc::UnexpectedShape, "component is not a single cycle");
  for (size_t i = 0; i < w.size(); ++i) {
    const Dart &a = w[i], &b = w[(i + 1) % w.size()];
    if (a.edge == b.edge && a.forward != b.forward)
      throw Error(Errc::UnexpectedShape, "surviving cycle is not locally injective");
  }
  return w;
}

bool cycle_weak_embeddable(const Instance& I) {
  auto comps = I.G.components();
  if (comps.size() != 1) throw Error(Errc::NotACycle, "cycle instance must be connected");
  for (int v : I.G.vertices)
    if (I.G.degree(v) != 2) throw Error(Errc::NotACycle, "cycle instance has a vertex of degree != 2");
  return decide(I).approximable();
}

}  // namespace we
