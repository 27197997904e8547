#include "plan2bt/pddl/ground.hpp"

#include <map>

#include "plan2bt/error.hpp"

namespace plan2bt::pddl {

namespace {

GroundedPredicate substitute(const PredicateTemplate& tmpl,
                             const std::map<std::string, std::string>& binding) {
  GroundedPredicate out;
  out.name = tmpl.name;
  for (const std::string& arg : tmpl.args) {
    if (!arg.empty() && arg[0] == '?') {
      auto it = binding.find(arg);
      if (it == binding.end())
        throw Error(ErrorKind::Internal, "unbound variable " + arg + " in " + tmpl.name);
      out.args.push_back(it->second);
    } else {
      out.args.push_back(arg);
    }
  }
  return out;
}

}  // namespace

GroundedAction ground_action(const DurativeActionSchema& schema,
                             const std::vector<std::string>& args, const Domain& domain,
                             const Problem* problem,
                             std::optional<Rational> duration_override) {
  if (args.size() != schema.parameters.size())
    throw Error(ErrorKind::ArityMismatch,
                schema.name + " expects " + std::to_string(schema.parameters.size()) +
                    " arguments, got " + std::to_string(args.size()));

  std::map<std::string, std::string> binding;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (problem != nullptr) {
      auto it = problem->objects.find(args[i]);
      if (it == problem->objects.end())
        throw Error(ErrorKind::TypeMismatch, "undeclared object " + args[i]);
      if (!domain.type_compatible(it->second, schema.parameters[i].type))
        throw Error(ErrorKind::TypeMismatch,
                    args[i] + " has type " + it->second + ", " + schema.name + " expects " +
                        schema.parameters[i].type);
    }
    binding[schema.parameters[i].name] = args[i];
  }

  GroundedAction out;
  out.name = schema.name;
  out.args = args;
  out.duration = duration_override.value_or(schema.duration);
  for (const ConditionTemplate& c : schema.conditions) {
    GroundedPredicate p = substitute(c.predicate, binding);
    PredicateSet* target = nullptr;
    if (c.polarity == Polarity::Positive) {
      target = c.phase == ConditionPhase::AtStart  ? &out.req_at_start
               : c.phase == ConditionPhase::OverAll ? &out.req_over_all
                                                    : &out.req_at_end;
    } else {
      target = c.phase == ConditionPhase::AtStart  ? &out.neg_req_at_start
               : c.phase == ConditionPhase::OverAll ? &out.neg_req_over_all
                                                    : &out.neg_req_at_end;
    }
    target->insert(std::move(p));
  }
  for (const EffectTemplate& e : schema.effects) {
    GroundedPredicate p = substitute(e.predicate, binding);
    PredicateSet* target = nullptr;
    if (e.polarity == Polarity::Positive)
      target = e.phase == EffectPhase::AtStart ? &out.eff_add_at_start : &out.eff_add_at_end;
    else
      target = e.phase == EffectPhase::AtStart ? &out.eff_del_at_start : &out.eff_del_at_end;
    target->insert(std::move(p));
  }
  return out;
}

GroundedAction ground_step(const PlanStep& step, const Domain& domain, const Problem* problem) {
  const DurativeActionSchema* schema = domain.find_action(step.action_name);
  if (schema == nullptr) throw Error(ErrorKind::UnknownAction, step.action_name);
  return ground_action(*schema, step.args, domain, problem, step.duration);
}

}  // namespace plan2bt::pddl
