#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plan2bt/rational.hpp"

namespace plan2bt::pddl {

/// A predicate name applied to concrete objects. Value equality is
/// structural, so it works as a set/map key.
struct GroundedPredicate {
  std::string name;
  std::vector<std::string> args;

  auto operator<=>(const GroundedPredicate&) const = default;

  std::string to_string() const;
};

using PredicateSet = std::set<GroundedPredicate>;

enum class ConditionPhase { AtStart, OverAll, AtEnd };
enum class EffectPhase { AtStart, AtEnd };
enum class Polarity { Positive, Negative };  // for effects: Add / Delete

struct TypedParameter {
  std::string name;  // "?r"
  std::string type;  // "robot"
  auto operator<=>(const TypedParameter&) const = default;
};

struct PredicateSchema {
  std::string name;
  std::vector<TypedParameter> parameters;
  auto operator<=>(const PredicateSchema&) const = default;
};

/// A predicate applied to action parameters and/or constants, e.g.
/// (robot_at ?r ?r1) inside a schema.
struct PredicateTemplate {
  std::string name;
  std::vector<std::string> args;  // "?x" entries are variables
  auto operator<=>(const PredicateTemplate&) const = default;
};

struct ConditionTemplate {
  ConditionPhase phase;
  PredicateTemplate predicate;
  Polarity polarity;
  auto operator<=>(const ConditionTemplate&) const = default;
};

struct EffectTemplate {
  EffectPhase phase;
  PredicateTemplate predicate;
  Polarity polarity;  // Positive = add, Negative = delete
  auto operator<=>(const EffectTemplate&) const = default;
};

struct DurativeActionSchema {
  std::string name;
  std::vector<TypedParameter> parameters;
  Rational duration;  // constant, >= 0
  std::vector<ConditionTemplate> conditions;
  std::vector<EffectTemplate> effects;
  auto operator<=>(const DurativeActionSchema&) const = default;
};

struct Domain {
  std::string name;
  std::vector<std::string> types;
  std::map<std::string, std::string> type_parents;  // "" when top-level
  std::vector<PredicateSchema> predicates;
  std::vector<DurativeActionSchema> actions;

  bool operator==(const Domain&) const = default;

  const PredicateSchema* find_predicate(const std::string& name) const;
  const DurativeActionSchema* find_action(const std::string& name) const;
  /// True when `type` equals `expected` or is declared below it.
  bool type_compatible(const std::string& type, const std::string& expected) const;
};

struct Problem {
  std::string name;
  std::string domain_name;
  std::map<std::string, std::string> objects;  // object -> type
  PredicateSet init;
  PredicateSet goal;  // conjunction only

  bool operator==(const Problem&) const = default;
};

/// One line of a plan file, after duration resolution.
struct PlanStep {
  Rational t;
  std::string action_name;
  std::vector<std::string> args;
  Rational duration;
  int line = 0;  // source line, for diagnostics and stable tie-breaks

  bool operator==(const PlanStep&) const = default;
};

using Plan = std::vector<PlanStep>;

/// Fully grounded durative action: every template substituted.
struct GroundedAction {
  std::string name;
  std::vector<std::string> args;
  Rational duration;

  PredicateSet req_at_start, req_over_all, req_at_end;              // positive conditions
  PredicateSet neg_req_at_start, neg_req_over_all, neg_req_at_end;  // negative conditions
  PredicateSet eff_add_at_start, eff_add_at_end;
  PredicateSet eff_del_at_start, eff_del_at_end;

  bool operator==(const GroundedAction&) const = default;

  std::string signature() const;  // "move(r2d2,bedroom,living)"
};

}  // namespace plan2bt::pddl
