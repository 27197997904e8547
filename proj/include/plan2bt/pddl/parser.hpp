#pragma once

#include <string>

#include "plan2bt/pddl/ast.hpp"

namespace plan2bt::pddl {

/// Parses a PDDL domain restricted to: typed objects, predicate schemas,
/// durative actions with constant :duration, conjunctive at start /
/// over all / at end conditions and at start / at end add/delete effects.
/// Anything else raises Error(UnsupportedFeature); malformed input raises
/// Error(Syntax) with line/column.
Domain parse_domain(const std::string& text);

/// Parses a problem against an already-parsed domain. Objects are typed,
/// init/goal grounded and checked against the predicate schemas.
Problem parse_problem(const std::string& text, const Domain& domain);

/// Parses a plan file. Line grammar: `<t>[:] (<name> <arg>*) [<duration>]`.
/// Steps come back sorted by t, stable on input order for equal t; a
/// missing duration column falls back to the schema :duration.
Plan parse_plan(const std::string& text, const Domain& domain);

}  // namespace plan2bt::pddl
