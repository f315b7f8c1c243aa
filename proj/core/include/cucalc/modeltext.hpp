#ifndef CUCALC_MODELTEXT_HPP
#define CUCALC_MODELTEXT_HPP

#include <stdexcept>
#include <string>

#include "cucalc/model.hpp"

namespace cucalc {

/// Raised on malformed model text; carries 1-based line/column and, for
/// semantic violations, the name of the broken invariant.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int l, int c)
      : std::runtime_error(what + " (line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

/// Parses the line-structured model grammar:
///
///   model lsc {
///     poset { points = [a,b]; relations = [a<=b]; }
///     scalar = nbar;                      # nbar | zcu | extrat
///   }
///   model table {
///     elements = [0,x,t]; zero = 0;
///     order = [0<=x, x<=t];
///     add { x+x = t; x+t = t; t+t = t; }  # sums with zero are implicit
///   }
///   model torsion { }
///   model product { factors { <model> <model> } }
///
/// A JSON object with the same fields is accepted when the text starts
/// with '{'. Validation errors (non-transitive relation, non-associative
/// addition, ...) surface as ParseError with the violated invariant named.
CuModel parse_model(const std::string& text);

/// Built-in model registry: nbar, nbar2, nbar3, chain2, chain3, vee3,
/// lambda3, chain2pt, zcu, extrat, torsion, diamond, noo5.
CuModel builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

/// Loads from a file path, a builtin name, or inline model text.
CuModel load_model(const std::string& source);

}  // namespace cucalc

#endif
