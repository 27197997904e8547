#pragma once

#include <string>

#include "plan2bt/pddl/ast.hpp"

namespace plan2bt::pddl {

/// Pretty-printers used for inspection and round-trip checks: re-parsing
/// the output yields a structurally equal value.
std::string to_pddl(const Domain& domain);
std::string to_pddl(const Problem& problem);

}  // namespace plan2bt::pddl
