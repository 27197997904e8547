#include "plan2bt/pddl/print.hpp"

#include <sstream>

namespace plan2bt::pddl {

namespace {

void print_typed_list(std::ostream& os, const std::vector<TypedParameter>& params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) os << " ";
    os << params[i].name << " - " << params[i].type;
  }
}

void print_template(std::ostream& os, const PredicateTemplate& p) {
  os << "(" << p.name;
  for (const std::string& a : p.args) os << " " << a;
  os << ")";
}

void print_grounded(std::ostream& os, const GroundedPredicate& p) {
  os << "(" << p.name;
  for (const std::string& a : p.args) os << " " << a;
  os << ")";
}

const char* phase_text(ConditionPhase phase) {
  switch (phase) {
    case ConditionPhase::AtStart: return "at start";
    case ConditionPhase::OverAll: return "over all";
    case ConditionPhase::AtEnd: return "at end";
  }
  return "";
}

}  // namespace

std::string to_pddl(const Domain& domain) {
  std::ostringstream os;
  os << "(define (domain " << domain.name << ")\n";
  if (!domain.types.empty()) {
    os << "(:types";
    for (const std::string& t : domain.types) {
      os << " " << t;
      auto it = domain.type_parents.find(t);
      if (it != domain.type_parents.end()) os << " - " << it->second;
    }
    os << ")\n";
  }
  if (!domain.predicates.empty()) {
    os << "(:predicates\n";
    for (const PredicateSchema& p : domain.predicates) {
      os << "  (" << p.name;
      if (!p.parameters.empty()) {
        os << " ";
        print_typed_list(os, p.parameters);
      }
      os << ")\n";
    }
    os << ")\n";
  }
  for (const DurativeActionSchema& a : domain.actions) {
    os << "(:durative-action " << a.name << "\n";
    os << "  :parameters (";
    print_typed_list(os, a.parameters);
    os << ")\n";
    os << "  :duration (= ?duration " << a.duration.to_string() << ")\n";
    os << "  :condition (and";
    for (const ConditionTemplate& c : a.conditions) {
      os << "\n    (" << phase_text(c.phase) << " ";
      if (c.polarity == Polarity::Negative) os << "(not ";
      print_template(os, c.predicate);
      if (c.polarity == Polarity::Negative) os << ")";
      os << ")";
    }
    os << ")\n";
    os << "  :effect (and";
    for (const EffectTemplate& e : a.effects) {
      os << "\n    (" << (e.phase == EffectPhase::AtStart ? "at start" : "at end") << " ";
      if (e.polarity == Polarity::Negative) os << "(not ";
      print_template(os, e.predicate);
      if (e.polarity == Polarity::Negative) os << ")";
      os << ")";
    }
    os << "))\n";
  }
  os << ")\n";
  return os.str();
}

std::string to_pddl(const Problem& problem) {
  std::ostringstream os;
  os << "(define (problem " << problem.name << ")\n";
  os << "(:domain " << problem.domain_name << ")\n";
  os << "(:objects";
  for (const auto& [object, type] : problem.objects) os << "\n  " << object << " - " << type;
  os << ")\n";
  os << "(:init";
  for (const GroundedPredicate& p : problem.init) {
    os << "\n  ";
    print_grounded(os, p);
  }
  os << ")\n";
  os << "(:goal (and";
  for (const GroundedPredicate& p : problem.goal) {
    os << " ";
    print_grounded(os, p);
  }
  os << "))\n";
  os << ")\n";
  return os.str();
}

}  // namespace plan2bt::pddl
