#pragma once

#include <string_view>

#include "padic/padic_number.hpp"
#include "padic/qpi.hpp"

namespace padic {

/// Evaluates an arithmetic expression over Q_p (T = PadicNumber) or Qp(i)
/// (T = QpiElement):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | 'i' | 'O(' p '^' ['-'] integer ')'
///            | 'sqrt(' expr ')' | '(' expr ')'
///
/// Integers carry ctx.precision() significant digits; O(p^m) is zero known
/// modulo p^m, so canonical literals evaluate to themselves. 'i' is rejected
/// for T = PadicNumber. Throws ParseError and any arithmetic error.
template <class T> T evaluate(std::string_view text, const PrimeContext &ctx);

/// Canonical literal if `text` is one, otherwise evaluate<T>(text).
template <class T> T parse_operand(std::string_view text, const PrimeContext &ctx);

} // namespace padic
