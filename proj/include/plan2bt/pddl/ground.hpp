#pragma once

#include <optional>

#include "plan2bt/pddl/ast.hpp"

namespace plan2bt::pddl {

/// Substitutes `args` for the schema parameters in every condition and
/// effect template. Phases and polarities are preserved. Types are checked
/// against the problem's object table when one is supplied.
GroundedAction ground_action(const DurativeActionSchema& schema,
                             const std::vector<std::string>& args, const Domain& domain,
                             const Problem* problem = nullptr,
                             std::optional<Rational> duration_override = std::nullopt);

/// Grounds one plan step (resolves the schema by name first).
GroundedAction ground_step(const PlanStep& step, const Domain& domain,
                           const Problem* problem = nullptr);

}  // namespace plan2bt::pddl
