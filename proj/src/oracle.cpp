#include "weakembed/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "weakembed/errors.hpp"
#include "weakembed/planarity.hpp"

namespace we {

namespace {

struct Disc {
  int nu;
  int n = 0;  // cluster vertices then one anchor per pipe edge end
  std::vector<std::pair<int, int>> edges;
  std::map<int, int> anchor;  // pipe edge -> anchor index
  std::vector<int> valves;    // host edges in rotation order
};

struct Search {
  const Instance& I;
  std::map<int, std::vector<int>> pipe;  // host edge -> pipe edges
  std::vector<int> pipe_order;           // enumeration order
  std::map<int, Disc> discs;
  std::map<int, std::optional<std::vector<int>>> chosen;
  std::map<std::pair<int, std::vector<int>>, bool> memo;
  long long tests = 0;

  explicit Search(const Instance& in) : I(in) {}

  std::vector<int> valve_order(int nu, int rho) const {
    const auto& pi = *chosen.at(rho);
    const HostEdge& h = I.H.edge(rho);
    if (nu == std::min(h.u, h.v) || h.sign < 0) return pi;
    return std::vector<int>(pi.rbegin(), pi.rend());
  }

  bool disc_ok(int nu) {
    Disc& d = discs.at(nu);
    // boundary sequence; an unassigned valve collapses to one marker vertex
    std::vector<int> key;
    for (int rho : d.valves) {
      if (chosen.at(rho)) {
        for (int e : valve_order(nu, rho)) key.push_back(d.anchor.at(e));
      } else {
        key.push_back(-1 - rho);
      }
    }
    auto it = memo.find({nu, key});
    if (it != memo.end()) return it->second;
    ++tests;
    std::map<int, int> remap;
    int n = d.n;
    std::vector<int> boundary;
    for (int rho : d.valves) {
      if (chosen.at(rho)) {
        for (int e : valve_order(nu, rho)) boundary.push_back(d.anchor.at(e));
      } else {
        int m = n++;
        for (int e : pipe.at(rho)) remap[d.anchor.at(e)] = m;
        boundary.push_back(m);
      }
    }
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : d.edges) {
      auto ra = remap.find(a), rb = remap.find(b);
      es.push_back({ra == remap.end() ? a : ra->second, rb == remap.end() ? b : rb->second});
    }
    bool ok = planar_indexed(n, es, boundary);
    memo[{nu, key}] = ok;
    return ok;
  }

  bool run(size_t k) {
    if (k == pipe_order.size()) return true;
    int rho = pipe_order[k];
    const HostEdge& h = I.H.edge(rho);
    std::vector<int> perm = pipe.at(rho);
    do {
      chosen[rho] = perm;
      if (disc_ok(h.u) && disc_ok(h.v) && run(k + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    chosen[rho].reset();
    return false;
  }
};

}  // namespace

double order_space(const Instance& I) {
  std::map<int, int> count;
  for (const auto& e : I.G.edges)
    if (I.is_pipe(e)) ++count[I.host_edge(e)];
  double total = 1;
  for (auto& [_, k] : count)
    for (int i = 2; i <= k; ++i) total *= i;
  return total;
}

OracleResult brute_force_approximable(const Instance& input, double budget) {
  validate_instance(input);
  Instance I = prune_host(input);
  if (order_space(I) > budget)
    throw Error(Errc::BudgetExceeded, "order space " + std::to_string(order_space(I)) + " exceeds budget");

  Search s(I);
  for (const auto& e : I.G.edges)
    if (I.is_pipe(e)) s.pipe[I.host_edge(e)].push_back(e.id);
  for (auto& [rho, es] : s.pipe) {
    s.pipe_order.push_back(rho);
    s.chosen[rho].reset();
  }
  std::stable_sort(s.pipe_order.begin(), s.pipe_order.end(),
                   [&](int a, int b) { return s.pipe[a].size() < s.pipe[b].size(); });

  for (int nu : I.H.vertices) {
    Disc d;
    d.nu = nu;
    std::map<int, int> idx;
    for (int v : I.G.vertices)
      if (I.phi.at(v) == nu) idx[v] = d.n++;
    for (const auto& e : I.G.edges) {
      if (!I.is_pipe(e)) {
        if (I.phi.at(e.u) == nu) d.edges.push_back({idx.at(e.u), idx.at(e.v)});
        continue;
      }
      int end = I.phi.at(e.u) == nu ? e.u : (I.phi.at(e.v) == nu ? e.v : -1);
      if (end < 0) continue;
      int a = d.n++;
      d.anchor[e.id] = a;
      d.edges.push_back({idx.at(end), a});
    }
    d.valves = I.H.rotation.at(nu);
    s.discs[nu] = std::move(d);
  }

  OracleResult r;
  bool ok = true;
  for (int nu : I.H.vertices) ok = ok && s.disc_ok(nu);  // no pipes decides planarity alone
  r.approximable = ok && s.run(0);
  r.disc_tests = s.tests;
  if (r.approximable)
    for (auto& [rho, pi] : s.chosen) r.orders[rho] = *pi;
  return r;
}

}  // namespace we
