#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "plan2bt/pddl/ast.hpp"

namespace plan2bt::graph {

using pddl::GroundedPredicate;
using pddl::PredicateSet;

/// One node of the planning graph: the tuple <t, action, R, E>.
/// R holds the requirements that survive init pruning; E the positive
/// effects, each tagged with its phase.
struct ActionUnit {
  std::size_t id = 0;  // index into PlanGraph::units, stable (t, line) order
  Rational t;
  pddl::GroundedAction action;
  int plan_line = 0;
  PredicateSet requirements;                                           // R
  std::set<std::pair<pddl::EffectPhase, GroundedPredicate>> effects;   // E

  bool produces(const GroundedPredicate& p) const {
    return effects.count({pddl::EffectPhase::AtStart, p}) > 0 ||
           effects.count({pddl::EffectPhase::AtEnd, p}) > 0;
  }
};

/// Arc producer -> consumer carrying the predicate that links an effect of
/// the producer to a requirement of the consumer. t(producer) < t(consumer).
struct CausalArc {
  std::size_t producer;
  std::size_t consumer;
  GroundedPredicate predicate;

  auto operator<=>(const CausalArc&) const = default;
};

class PlanGraph {
public:
  std::vector<ActionUnit> units;
  std::vector<CausalArc> arcs;  // sorted (producer, consumer, predicate)
  PredicateSet init_only;       // I: init predicates produced by no action

  const ActionUnit& unit(std::size_t id) const;

  /// Distinct predecessor / successor unit ids, ascending.
  const std::vector<std::size_t>& predecessors(std::size_t id) const;
  const std::vector<std::size_t>& successors(std::size_t id) const;

  std::vector<std::vector<std::size_t>> pred_ids;  // per unit, distinct, sorted
  std::vector<std::vector<std::size_t>> succ_ids;
};

/// Steps 1-3: one unit per plan step in (t, line) order; R from grounded
/// positive conditions of all phases, E from positive effects.
std::vector<ActionUnit> build_action_units(const pddl::Plan& plan, const pddl::Domain& domain,
                                           const pddl::Problem* problem = nullptr);

/// Steps 4-6: computes I, prunes every R by it, links each remaining
/// requirement to its producer (latest t < t(consumer), ties to the latest
/// plan line) and verifies completeness. An uncoverable requirement raises
/// Error(UnsupportedRequirement).
PlanGraph link_graph(std::vector<ActionUnit> units, const pddl::Problem& problem);

/// Number of distinct producer / consumer units of `id`. Multiple arcs
/// between the same pair count once.
std::size_t in_cardinality(const PlanGraph& graph, std::size_t id);
std::size_t out_cardinality(const PlanGraph& graph, std::size_t id);

/// Units with empty post-pruning R, in (t, line) order.
std::vector<std::size_t> roots(const PlanGraph& graph);

/// Deterministic Graphviz text. Nodes `a<index>` labeled `t: name(args)`,
/// edges labeled with the shared predicate.
std::string to_dot(const PlanGraph& graph);

}  // namespace plan2bt::graph
