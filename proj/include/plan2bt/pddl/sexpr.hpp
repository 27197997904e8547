#pragma once

#include <string>
#include <vector>

namespace plan2bt::pddl {

/// S-expression node: either an atom or a list. Atoms are lower-cased at
/// read time (PDDL identifiers are case-insensitive).
struct Sexp {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexp> items;
  int line = 0;
  int column = 0;

  const std::string& head() const;  // atom of items[0]; "" if not applicable
  bool is_list() const { return !is_atom; }
};

/// Reads every top-level s-expression in `text`. `;` starts a comment to
/// end of line. Throws Error(Syntax) with line/column on malformed input.
std::vector<Sexp> read_sexprs(const std::string& text);

}  // namespace plan2bt::pddl
