#include "plan2bt/graph/plan_graph.hpp"

#include <algorithm>
#include <sstream>

#include "plan2bt/error.hpp"
#include "plan2bt/pddl/ground.hpp"

namespace plan2bt::graph {

const ActionUnit& PlanGraph::unit(std::size_t id) const {
  if (id >= units.size())
    throw Error(ErrorKind::UnknownUnit, "unit " + std::to_string(id));
  return units[id];
}

const std::vector<std::size_t>& PlanGraph::predecessors(std::size_t id) const {
  if (id >= pred_ids.size()) throw Error(ErrorKind::UnknownUnit, "unit " + std::to_string(id));
  return pred_ids[id];
}

const std::vector<std::size_t>& PlanGraph::successors(std::size_t id) const {
  if (id >= succ_ids.size()) throw Error(ErrorKind::UnknownUnit, "unit " + std::to_string(id));
  return succ_ids[id];
}

std::vector<ActionUnit> build_action_units(const pddl::Plan& plan, const pddl::Domain& domain,
                                           const pddl::Problem* problem) {
  std::vector<ActionUnit> units;
  units.reserve(plan.size());
  for (const pddl::PlanStep& step : plan) {
    ActionUnit unit;
    unit.id = units.size();
    unit.t = step.t;
    unit.plan_line = step.line;
    unit.action = pddl::ground_step(step, domain, problem);
    for (const GroundedPredicate& p : unit.action.req_at_start) unit.requirements.insert(p);
    for (const GroundedPredicate& p : unit.action.req_over_all) unit.requirements.insert(p);
    for (const GroundedPredicate& p : unit.action.req_at_end) unit.requirements.insert(p);
    for (const GroundedPredicate& p : unit.action.eff_add_at_start)
      unit.effects.insert({pddl::EffectPhase::AtStart, p});
    for (const GroundedPredicate& p : unit.action.eff_add_at_end)
      unit.effects.insert({pddl::EffectPhase::AtEnd, p});
    units.push_back(std::move(unit));
  }
  return units;
}

PlanGraph link_graph(std::vector<ActionUnit> units, const pddl::Problem& problem) {
  PlanGraph graph;

  // Step 5: init predicates produced by no action.
  PredicateSet produced;
  for (const ActionUnit& unit : units)
    for (const auto& [phase, predicate] : unit.effects) produced.insert(predicate);
  for (const GroundedPredicate& p : problem.init)
    if (produced.count(p) == 0) graph.init_only.insert(p);

  for (ActionUnit& unit : units) {
    PredicateSet pruned;
    for (const GroundedPredicate& p : unit.requirements)
      if (graph.init_only.count(p) == 0) pruned.insert(p);
    unit.requirements = std::move(pruned);
  }

  // Step 4 + 6: link every remaining requirement to a producer.
  // Units are in (t, line) order, so "latest t, ties to latest line" is
  // simply the largest qualifying unit id.
  for (const ActionUnit& consumer : units) {
    for (const GroundedPredicate& requirement : consumer.requirements) {
      const ActionUnit* producer = nullptr;
      for (const ActionUnit& candidate : units) {
        if (!(candidate.t < consumer.t)) break;  // sorted by t
        if (candidate.produces(requirement)) producer = &candidate;
      }
      if (producer == nullptr)
        throw Error(ErrorKind::UnsupportedRequirement,
                    requirement.to_string() + " of " + consumer.action.signature() + " (t=" +
                        consumer.t.to_string() + ") has no producer and is not init-only");
      graph.arcs.push_back({producer->id, consumer.id, requirement});
    }
  }
  std::sort(graph.arcs.begin(), graph.arcs.end());

  graph.units = std::move(units);
  graph.pred_ids.resize(graph.units.size());
  graph.succ_ids.resize(graph.units.size());
  for (const CausalArc& arc : graph.arcs) {
    graph.pred_ids[arc.consumer].push_back(arc.producer);
    graph.succ_ids[arc.producer].push_back(arc.consumer);
  }
  for (auto& ids : graph.pred_ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  for (auto& ids : graph.succ_ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return graph;
}

std::size_t in_cardinality(const PlanGraph& graph, std::size_t id) {
  return graph.predecessors(id).size();
}

std::size_t out_cardinality(const PlanGraph& graph, std::size_t id) {
  return graph.successors(id).size();
}

std::vector<std::size_t> roots(const PlanGraph& graph) {
  std::vector<std::size_t> out;
  for (const ActionUnit& unit : graph.units)
    if (unit.requirements.empty()) out.push_back(unit.id);
  return out;  // units are already in (t, line) order
}

std::string to_dot(const PlanGraph& graph) {
  std::ostringstream os;
  os << "digraph plan {\n";
  os << "  rankdir=TB;\n";
  for (const ActionUnit& unit : graph.units) {
    os << "  a" << unit.id << " [label=\"" << unit.t.to_string() << ": "
       << unit.action.signature() << "\"];\n";
  }
  for (const CausalArc& arc : graph.arcs) {
    os << "  a" << arc.producer << " -> a" << arc.consumer << " [label=\""
       << arc.predicate.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace plan2bt::graph
