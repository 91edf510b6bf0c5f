#ifndef PV_ALGEBRA_PARSER_HPP
#define PV_ALGEBRA_PARSER_HPP

#include <string>
#include <string_view>

#include "pv/algebra/laurent.hpp"
#include "pv/algebra/ratfunc.hpp"

namespace pv {

// Expression grammar: integers, identifiers from the symbol table, + - * / ^
// with the usual precedence, parentheses. Throws SyntaxError / UnknownSymbol.
RatFunc parse(std::string_view text);

// "inf" or any expression accepted by parse().
Center parse_center(std::string_view text);

// Canonical ASCII form; parse(print(r)) == r. Compact mode omits the spaces
// around + and - (used in line-oriented serialization tokens).
std::string print(const RatFunc& r, bool compact = false);
std::string print(const Poly& p, bool compact = false);
std::string print(const Center& c, bool compact = false);

} // namespace pv

#endif
