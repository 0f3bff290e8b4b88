#pragma once

#include <string>
#include <string_view>

#include "cliff/multivector.hpp"
#include "json.hpp"

namespace cliff {

// Text grammar:
//   mv    := term (('+' | '-') term)*
//   term  := [coef] [blade]
//   coef  := real | '(' real ('+'|'-') real 'i' ')'
//   blade := 'e' digit+ | 'e{' int (',' int)* '}'
// Each digit of a blade is one basis label ("0" names the null vector when
// r == 1). Labels may appear in any order; the reordering sign is absorbed.
// Reals use a signed exponent ("1e-05") so "2e1" always means 2 * e1.
Multivector parse(const Signature& sig, std::string_view text);
std::string format(const Multivector& mv);

// {"sig":[p,q,r],"terms":[{"blade":[i...],"re":x,"im":y}]}
nlohmann::json to_json(const Multivector& mv);
Multivector from_json(const nlohmann::json& j);

std::string blade_label(const Signature& sig, BladeMask mask);
std::string format_real(double x);

namespace detail {

// Lexing helpers shared with the expression evaluator. They advance `pos` on
// success and leave it untouched on failure.
bool lex_number(std::string_view s, std::size_t& pos, double& out);
// Parses 'e...' into a mask and reordering sign. Throws Parse on bad labels.
bool lex_blade(const Signature& sig, std::string_view s, std::size_t& pos, BladeMask& mask,
               int& sign);

}  // namespace detail

}  // namespace cliff
