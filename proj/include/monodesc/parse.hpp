#pragma once

#include <string>

#include "monodesc/ratfunc.hpp"

namespace monodesc {

// Text grammar for coefficient matrices:
//   system   := '[' row (',' row)* ']'
//   row      := '[' expr (',' expr)* ']'
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ('-'|'+') factor | power
//   power    := primary ('^' exponent)?
//   exponent := ['-'] INT | '(' ['-'] INT ')'
//   primary  := INT | 'i' | 'z' | '(' expr ')'
// Whitespace (including newlines) is insignificant. Integers are arbitrary
// precision; rationals are written p/q. Errors carry line and column.
RFMat parse_system(const std::string& text);
RatFunc parse_entry(const std::string& text);

// Entry that must be constant (no z); used for centers and cocycles.
GaussianRational parse_constant(const std::string& text);
QiMat parse_constant_system(const std::string& text);

// Canonical printers; parse(print(x)) == x exactly.
std::string print_system(const RFMat& a);
std::string print_system(const QiMat& a);

}  // namespace monodesc
