#pragma once

#include <string_view>

#include "cliff/multivector.hpp"

namespace cliff {

// Evaluates an expression over multivector literals.
//
//   sum     := product (('+' | '-') product)*
//   product := unary (op unary | unary)*     juxtaposition is the geometric product
//   op      := '*' geometric | '^' outer | '|' left contraction | '%' or '×' commutator
//   unary   := ('-' | '+' | '~') unary | postfix        '~' is the reverse
//   postfix := primary ('[' sum ']')*                  U[W] = U W U^{-1}
//   primary := number | 'i' | blade | '(' sum ')'
//
// All product operators share one precedence level and associate left.
// Throws Error(Parse) on malformed input; algebra failures keep their kind.
Multivector evaluate(const Signature& sig, std::string_view expr);

}  // namespace cliff
