#include "plan2bt/pddl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "plan2bt/error.hpp"
#include "plan2bt/pddl/sexpr.hpp"

namespace plan2bt::pddl {

namespace {

bool is_number(const std::string& atom) {
  bool digit = false;
  for (std::size_t i = 0; i < atom.size(); ++i) {
    char c = atom[i];
    if (c == '.' || ((c == '+' || c == '-') && i == 0)) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    digit = true;
  }
  return digit;
}

[[noreturn]] void syntax(const Sexp& where, const std::string& message) {
  throw Error(ErrorKind::Syntax, message, where.line, where.column);
}

[[noreturn]] void unsupported(const Sexp& where, const std::string& message) {
  throw Error(ErrorKind::UnsupportedFeature, message, where.line, where.column);
}

/// Parses `a b - t c d - u ...` into (name, type) pairs. Used for :types,
/// :parameters, :objects and predicate parameter lists.
std::vector<TypedParameter> parse_typed_list(const std::vector<Sexp>& items, std::size_t begin,
                                             const Sexp& context,
                                             const std::string& default_type) {
  std::vector<TypedParameter> out;
  std::vector<std::string> pending;
  for (std::size_t i = begin; i < items.size(); ++i) {
    const Sexp& item = items[i];
    if (!item.is_atom) syntax(item, "expected a name in typed list");
    if (item.atom == "-") {
      ++i;
      if (i >= items.size() || !items[i].is_atom) syntax(item, "expected a type after '-'");
      for (const std::string& name : pending) out.push_back({name, items[i].atom});
      pending.clear();
    } else {
      pending.push_back(item.atom);
    }
  }
  for (const std::string& name : pending) out.push_back({name, default_type});
  (void)context;
  return out;
}

PredicateTemplate parse_predicate_template(const Sexp& s) {
  if (!s.is_list() || s.items.empty() || !s.items[0].is_atom)
    syntax(s, "expected a predicate");
  PredicateTemplate p;
  p.name = s.items[0].atom;
  for (std::size_t i = 1; i < s.items.size(); ++i) {
    if (!s.items[i].is_atom) syntax(s.items[i], "predicate arguments must be names");
    p.args.push_back(s.items[i].atom);
  }
  return p;
}

struct TimedExpr {
  std::string phase;  // "start", "end", "all"
  Polarity polarity;
  PredicateTemplate predicate;
  const Sexp* source;
};

/// Parses `(at start X)`, `(over all X)`, with X a predicate or (not pred).
TimedExpr parse_timed(const Sexp& s) {
  if (!s.is_list() || s.items.size() != 3 || !s.items[0].is_atom || !s.items[1].is_atom)
    syntax(s, "expected (at start ...), (over all ...) or (at end ...)");
  TimedExpr out;
  out.source = &s;
  const std::string& kw = s.items[0].atom;
  const std::string& when = s.items[1].atom;
  if (kw == "at" && (when == "start" || when == "end")) {
    out.phase = when;
  } else if (kw == "over" && when == "all") {
    out.phase = "all";
  } else {
    unsupported(s, "unknown temporal qualifier (" + kw + " " + when + ")");
  }
  const Sexp& body = s.items[2];
  if (body.is_list() && body.head() == "not") {
    if (body.items.size() != 2) syntax(body, "(not ...) takes one predicate");
    out.polarity = Polarity::Negative;
    out.predicate = parse_predicate_template(body.items[1]);
  } else {
    out.polarity = Polarity::Positive;
    out.predicate = parse_predicate_template(body);
  }
  return out;
}

std::vector<const Sexp*> conjuncts(const Sexp& s) {
  std::vector<const Sexp*> out;
  if (s.is_list() && s.head() == "and") {
    for (std::size_t i = 1; i < s.items.size(); ++i) out.push_back(&s.items[i]);
  } else {
    out.push_back(&s);
  }
  return out;
}

void reject_disjunctions(const Sexp& s) {
  if (!s.is_list()) return;
  const std::string& h = s.head();
  if (h == "or" || h == "imply" || h == "forall" || h == "exists" || h == "when")
    unsupported(s, "'" + h + "' is not in the supported subset");
}

void check_template_args(const DurativeActionSchema& schema, const PredicateTemplate& tmpl,
                         const Domain& domain, const Sexp& where) {
  const PredicateSchema* pred = domain.find_predicate(tmpl.name);
  if (pred == nullptr)
    throw Error(ErrorKind::UnknownPredicate, tmpl.name, where.line, where.column);
  if (pred->parameters.size() != tmpl.args.size())
    throw Error(ErrorKind::ArityMismatch,
                tmpl.name + " expects " + std::to_string(pred->parameters.size()) + " arguments",
                where.line, where.column);
  for (const std::string& arg : tmpl.args) {
    if (arg.empty()) syntax(where, "empty argument");
    if (arg[0] == '?') {
      bool declared = std::any_of(schema.parameters.begin(), schema.parameters.end(),
                                  [&](const TypedParameter& p) { return p.name == arg; });
      if (!declared)
        syntax(where, "variable " + arg + " is not a parameter of " + schema.name);
    }
  }
}

DurativeActionSchema parse_durative_action(const Sexp& s, const Domain& domain) {
  DurativeActionSchema schema;
  if (s.items.size() < 2 || !s.items[1].is_atom) syntax(s, "missing action name");
  schema.name = s.items[1].atom;
  std::size_t i = 2;
  while (i < s.items.size()) {
    if (!s.items[i].is_atom || s.items[i].atom.empty() || s.items[i].atom[0] != ':')
      syntax(s.items[i], "expected a :keyword in action body");
    const std::string key = s.items[i].atom;
    ++i;
    if (i >= s.items.size()) syntax(s.items[i - 1], key + " has no value");
    const Sexp& value = s.items[i];
    ++i;
    if (key == ":parameters") {
      if (!value.is_list()) syntax(value, ":parameters expects a list");
      schema.parameters = parse_typed_list(value.items, 0, value, "object");
      for (const TypedParameter& p : schema.parameters)
        if (p.name.empty() || p.name[0] != '?') syntax(value, "parameters must start with '?'");
    } else if (key == ":duration") {
      // (= ?duration <number>)
      if (!value.is_list() || value.items.size() != 3 || value.head() != "=" ||
          !value.items[1].is_atom || value.items[1].atom != "?duration")
        syntax(value, ":duration must be (= ?duration d)");
      if (!value.items[2].is_atom || !is_number(value.items[2].atom))
        unsupported(value, "only constant durations are supported");
      schema.duration = Rational::from_decimal(value.items[2].atom);
      if (schema.duration < Rational(0)) syntax(value, "duration must be non-negative");
    } else if (key == ":condition") {
      for (const Sexp* c : conjuncts(value)) {
        reject_disjunctions(*c);
        TimedExpr e = parse_timed(*c);
        ConditionPhase phase = e.phase == "start" ? ConditionPhase::AtStart
                               : e.phase == "all" ? ConditionPhase::OverAll
                                                  : ConditionPhase::AtEnd;
        schema.conditions.push_back({phase, e.predicate, e.polarity});
      }
    } else if (key == ":effect") {
      for (const Sexp* c : conjuncts(value)) {
        reject_disjunctions(*c);
        TimedExpr e = parse_timed(*c);
        if (e.phase == "all") unsupported(*c, "'over all' effects are not part of PDDL");
        EffectPhase phase = e.phase == "start" ? EffectPhase::AtStart : EffectPhase::AtEnd;
        schema.effects.push_back({phase, e.predicate, e.polarity});
      }
    } else {
      unsupported(value, key + " in durative-action");
    }
  }
  for (const ConditionTemplate& c : schema.conditions)
    check_template_args(schema, c.predicate, domain, s);
  for (const EffectTemplate& e : schema.effects)
    check_template_args(schema, e.predicate, domain, s);
  return schema;
}

}  // namespace

const PredicateSchema* Domain::find_predicate(const std::string& name) const {
  for (const PredicateSchema& p : predicates)
    if (p.name == name) return &p;
  return nullptr;
}

const DurativeActionSchema* Domain::find_action(const std::string& name) const {
  for (const DurativeActionSchema& a : actions)
    if (a.name == name) return &a;
  return nullptr;
}

bool Domain::type_compatible(const std::string& type, const std::string& expected) const {
  if (expected == "object") return true;
  std::string current = type;
  for (int depth = 0; depth < 64; ++depth) {
    if (current == expected) return true;
    auto it = type_parents.find(current);
    if (it == type_parents.end() || it->second.empty()) return false;
    current = it->second;
  }
  return false;
}

std::string GroundedPredicate::to_string() const {
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += args[i];
  }
  return out + ")";
}

std::string GroundedAction::signature() const {
  GroundedPredicate p{name, args};
  return p.to_string();
}

Domain parse_domain(const std::string& text) {
  std::vector<Sexp> top = read_sexprs(text);
  if (top.size() != 1 || top[0].head() != "define")
    throw Error(ErrorKind::Syntax, "expected a single (define (domain ...)) form", 1, 1);
  const Sexp& def = top[0];
  if (def.items.size() < 2 || !def.items[1].is_list() || def.items[1].head() != "domain" ||
      def.items[1].items.size() != 2 || !def.items[1].items[1].is_atom)
    syntax(def, "expected (domain <name>)");

  Domain domain;
  domain.name = def.items[1].items[1].atom;
  for (std::size_t i = 2; i < def.items.size(); ++i) {
    const Sexp& section = def.items[i];
    const std::string& head = section.head();
    if (head == ":requirements") {
      continue;  // accepted, not validated
    } else if (head == ":types") {
      auto typed = parse_typed_list(section.items, 1, section, "");
      for (const TypedParameter& t : typed) {
        if (std::find(domain.types.begin(), domain.types.end(), t.name) == domain.types.end())
          domain.types.push_back(t.name);
        if (!t.type.empty()) {
          if (std::find(domain.types.begin(), domain.types.end(), t.type) == domain.types.end())
            domain.types.push_back(t.type);
          domain.type_parents[t.name] = t.type;
        }
      }
    } else if (head == ":predicates") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& p = section.items[j];
        if (!p.is_list() || p.items.empty() || !p.items[0].is_atom)
          syntax(p, "expected (name ?v - type ...)");
        PredicateSchema schema;
        schema.name = p.items[0].atom;
        schema.parameters = parse_typed_list(p.items, 1, p, "object");
        if (domain.find_predicate(schema.name) != nullptr)
          syntax(p, "duplicate predicate " + schema.name);
        for (const TypedParameter& param : schema.parameters) {
          if (param.type != "object" &&
              std::find(domain.types.begin(), domain.types.end(), param.type) ==
                  domain.types.end())
            throw Error(ErrorKind::TypeMismatch, "undeclared type " + param.type, p.line,
                        p.column);
        }
        domain.predicates.push_back(std::move(schema));
      }
    } else if (head == ":durative-action") {
      DurativeActionSchema schema = parse_durative_action(section, domain);
      if (domain.find_action(schema.name) != nullptr)
        syntax(section, "duplicate action " + schema.name);
      for (const TypedParameter& param : schema.parameters) {
        if (param.type != "object" &&
            std::find(domain.types.begin(), domain.types.end(), param.type) == domain.types.end())
          throw Error(ErrorKind::TypeMismatch, "undeclared type " + param.type, section.line,
                      section.column);
      }
      domain.actions.push_back(std::move(schema));
    } else if (head == ":action") {
      unsupported(section, "non-durative :action");
    } else if (head == ":functions" || head == ":constants" || head == ":constraints") {
      unsupported(section, head);
    } else {
      unsupported(section, "domain section '" + head + "'");
    }
  }
  return domain;
}

namespace {

GroundedPredicate ground_init_predicate(const Sexp& s, const Domain& domain,
                                        const Problem& problem) {
  if (!s.is_list() || s.items.empty() || !s.items[0].is_atom)
    syntax(s, "expected a grounded predicate");
  const std::string& name = s.items[0].atom;
  if (name == "=" || name == "at" || name == "not")
    unsupported(s, "'" + name + "' in init/goal");
  const PredicateSchema* schema = domain.find_predicate(name);
  if (schema == nullptr) throw Error(ErrorKind::UnknownPredicate, name, s.line, s.column);
  if (schema->parameters.size() != s.items.size() - 1)
    throw Error(ErrorKind::ArityMismatch,
                name + " expects " + std::to_string(schema->parameters.size()) + " arguments",
                s.line, s.column);
  GroundedPredicate out;
  out.name = name;
  for (std::size_t i = 1; i < s.items.size(); ++i) {
    if (!s.items[i].is_atom) syntax(s.items[i], "arguments must be object names");
    const std::string& obj = s.items[i].atom;
    auto it = problem.objects.find(obj);
    if (it == problem.objects.end())
      throw Error(ErrorKind::TypeMismatch, "undeclared object " + obj, s.items[i].line,
                  s.items[i].column);
    const std::string& expected = schema->parameters[i - 1].type;
    if (!domain.type_compatible(it->second, expected))
      throw Error(ErrorKind::TypeMismatch,
                  obj + " has type " + it->second + ", " + name + " expects " + expected,
                  s.items[i].line, s.items[i].column);
    out.args.push_back(obj);
  }
  return out;
}

}  // namespace

Problem parse_problem(const std::string& text, const Domain& domain) {
  std::vector<Sexp> top = read_sexprs(text);
  if (top.size() != 1 || top[0].head() != "define")
    throw Error(ErrorKind::Syntax, "expected a single (define (problem ...)) form", 1, 1);
  const Sexp& def = top[0];
  if (def.items.size() < 2 || !def.items[1].is_list() || def.items[1].head() != "problem" ||
      def.items[1].items.size() != 2 || !def.items[1].items[1].is_atom)
    syntax(def, "expected (problem <name>)");

  Problem problem;
  problem.name = def.items[1].items[1].atom;
  for (std::size_t i = 2; i < def.items.size(); ++i) {
    const Sexp& section = def.items[i];
    const std::string& head = section.head();
    if (head == ":domain") {
      if (section.items.size() != 2 || !section.items[1].is_atom)
        syntax(section, "expected (:domain <name>)");
      problem.domain_name = section.items[1].atom;
      if (problem.domain_name != domain.name)
        throw Error(ErrorKind::TypeMismatch,
                    "problem is for domain " + problem.domain_name + ", got " + domain.name,
                    section.line, section.column);
    } else if (head == ":objects") {
      auto typed = parse_typed_list(section.items, 1, section, "object");
      for (const TypedParameter& t : typed) {
        if (t.type != "object" &&
            std::find(domain.types.begin(), domain.types.end(), t.type) == domain.types.end())
          throw Error(ErrorKind::TypeMismatch, "undeclared type " + t.type, section.line,
                      section.column);
        problem.objects[t.name] = t.type;
      }
    } else if (head == ":init") {
      for (std::size_t j = 1; j < section.items.size(); ++j)
        problem.init.insert(ground_init_predicate(section.items[j], domain, problem));
    } else if (head == ":goal") {
      if (section.items.size() != 2) syntax(section, "expected (:goal <conjunction>)");
      for (const Sexp* c : conjuncts(section.items[1])) {
        reject_disjunctions(*c);
        if (c->is_list() && c->head() == "not") unsupported(*c, "negative goals");
        problem.goal.insert(ground_init_predicate(*c, domain, problem));
      }
    } else if (head == ":metric" || head == ":constraints") {
      unsupported(section, head);
    } else {
      unsupported(section, "problem section '" + head + "'");
    }
  }
  return problem;
}

Plan parse_plan(const std::string& text, const Domain& domain) {
  Plan plan;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto sc = line.find(';'); sc != std::string::npos) line.erase(sc);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;

    // <t>[:] (<name> <arg>*) [<duration>]
    std::size_t open = line.find('(');
    if (open == std::string::npos)
      throw Error(ErrorKind::Syntax, "plan line has no action", line_no, 1);
    std::string time_part = line.substr(begin, open - begin);
    while (!time_part.empty() &&
           (std::isspace(static_cast<unsigned char>(time_part.back())) || time_part.back() == ':'))
      time_part.pop_back();
    Rational t;
    try {
      t = Rational::from_decimal(time_part);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::Syntax, "malformed timestamp '" + time_part + "'", line_no, 1);
    }
    if (t < Rational(0))
      throw Error(ErrorKind::Syntax, "negative timestamp", line_no, 1);

    std::size_t close = line.find(')', open);
    if (close == std::string::npos)
      throw Error(ErrorKind::Syntax, "unterminated action", line_no, static_cast<int>(open + 1));
    std::istringstream action_text(line.substr(open + 1, close - open - 1));
    std::string word;
    std::vector<std::string> words;
    while (action_text >> word) {
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      words.push_back(word);
    }
    if (words.empty())
      throw Error(ErrorKind::Syntax, "empty action", line_no, static_cast<int>(open + 1));

    PlanStep step;
    step.t = t;
    step.line = line_no;
    step.action_name = words[0];
    step.args.assign(words.begin() + 1, words.end());

    const DurativeActionSchema* schema = domain.find_action(step.action_name);
    if (schema == nullptr)
      throw Error(ErrorKind::UnknownAction, step.action_name, line_no, 1);
    if (schema->parameters.size() != step.args.size())
      throw Error(ErrorKind::ArityMismatch,
                  step.action_name + " expects " + std::to_string(schema->parameters.size()) +
                      " arguments, got " + std::to_string(step.args.size()),
                  line_no, 1);

    std::string tail = line.substr(close + 1);
    std::istringstream tail_text(tail);
    std::string duration_word;
    if (tail_text >> duration_word) {
      std::string extra;
      if (tail_text >> extra)
        throw Error(ErrorKind::Syntax, "trailing tokens after duration", line_no, 1);
      try {
        step.duration = Rational::from_decimal(duration_word);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Syntax, "malformed duration '" + duration_word + "'", line_no, 1);
      }
    } else {
      step.duration = schema->duration;
    }
    if (!(step.duration > Rational(0)))
      throw Error(ErrorKind::Syntax, "resolved duration must be positive", line_no, 1);
    plan.push_back(std::move(step));
  }
  std::stable_sort(plan.begin(), plan.end(),
                   [](const PlanStep& a, const PlanStep& b) { return a.t < b.t; });
  return plan;
}

}  // namespace plan2bt::pddl
