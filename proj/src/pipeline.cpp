#include "weakembed/pipeline.hpp"

#include "weakembed/cycle_check.hpp"
#include "weakembed/derivative.hpp"
#include "weakembed/errors.hpp"
#include "weakembed/oracle.hpp"
#include "weakembed/z2test.hpp"

namespace we {

Instance iteration_start(const Instance& I) { return keep_low_pipe_degree(simplify(I)); }

static Snapshot snapshot(const Instance& I, int i) {
  Snapshot s;
  s.iteration = i;
  s.vertices = static_cast<int>(I.G.vertices.size());
  s.pipe_edges = static_cast<int>(pipe_edges(I).size());
  s.host_edges = static_cast<int>(I.H.edges.size());
  s.potential = potential(I);
  s.euler_genus = euler_genus(I.H);
  s.locally_injective = is_locally_injective(I);
  return s;
}

Verdict decide(const Instance& input, Trace* trace) {
  validate_instance(input);
  Instance I = prune_host(input);
  Verdict v;
  Z2Report z = z2_check(I);
  if (trace) trace->z2 = z.z2;
  if (!z.z2) {
    v.kind = Verdict::Kind::NotZ2Approximable;
    v.witness = z.witness;
    return v;
  }
  const int rounds = 2 * static_cast<int>(input.G.edges.size());
  Instance cur = iteration_start(I);
  if (trace) {
    trace->iterations = rounds;
    trace->steps.push_back(snapshot(cur, 0));
    if (trace->keep_instances) trace->instances.push_back(cur);
  }
  // cycle components are the only possible obstructions; a winding cycle
  // persists under further derivatives, so the first sighting is reported
  auto scan = [&](const Instance& J, int i, bool final_round) -> bool {
    auto inc = J.G.incidence();
    for (const auto& comp : J.G.components()) {
      int branch = 0, ends = 0;
      for (int x : comp) {
        branch += inc[x].size() >= 3;
        ends += inc[x].size() <= 1;
      }
      if (branch) continue;
      if (ends) {
        if (final_round) throw Error(Errc::UnexpectedShape, "a path component survived the iteration");
        continue;
      }
      DartWalk w;
      try {
        w = cycle_walk(J, comp);
      } catch (const Error&) {
        if (final_round) throw;
        continue;
      }
      PrimitiveWalk p = primitive_decomposition(w);
      Sidedness s = walk_sidedness(p.W, J.H);
      if (winding_verdict(p.W, p.o, s)) continue;
      v.kind = Verdict::Kind::WindingObstruction;
      v.iteration = i;
      v.cycle = comp;
      v.walk = p.W;
      v.o = p.o;
      v.sidedness = s;
      return true;
    }
    return false;
  };
  for (int i = 1; i <= rounds; ++i) {
    if (cur.G.vertices.empty()) break;
    cur = simplified_derivative(cur);
    if (trace) {
      trace->steps.push_back(snapshot(cur, i));
      if (trace->keep_instances) trace->instances.push_back(cur);
    }
    if (scan(cur, i, i == rounds)) return v;
  }
  return v;
}

CrossCheck decide_with_oracle_crosscheck(const Instance& I, double budget) {
  CrossCheck c;
  c.oracle = brute_force_approximable(I, budget).approximable;
  c.verdict = decide(I);
  c.agree = c.verdict.approximable() == c.oracle;
  return c;
}

}  // namespace we
