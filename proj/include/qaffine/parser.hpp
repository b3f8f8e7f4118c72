#pragma once

#include <string>

#include "qaffine/expr.hpp"

namespace qaffine {

// Parses the expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := gen | int | 'q'('^'int)? | '(' expr ')'
//           | 'b[' expr ',' expr ';' expr ']' | 'qb(' expr ',' expr ')'
//           | 'sc(' expr ',' expr ')'
//   gen    := ('E'|'F')idx | 'K'idx('^-1')? | 'C'('^-1')? |
//             'X+'idx','int | 'X-'idx','int | 'H'idx','int
//   idx    := int | 'N' | '{N-'int'}'
// Brackets elaborate at parse time; '/' requires a scalar divisor.
Expr parse_expr(const std::string& text, const ParitySeq& s);

}  // namespace qaffine
