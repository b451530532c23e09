#include <doctest.h>

#include "padic/error.hpp"
#include "padic/expression.hpp"

using namespace padic;

TEST_CASE("expressions over Q_p") {
  const PrimeContext ctx(7, 32);
  CHECK(format(evaluate<PadicNumber>("1/3 + 2/3", ctx)) == "1 + O(7^32)");
  CHECK(agrees(evaluate<PadicNumber>("7^-2 * 49", ctx), PadicNumber::one(ctx)));
  CHECK(agrees(evaluate<PadicNumber>("-(2 - 5)", ctx), from_integer(3, ctx)));
  CHECK(agrees(evaluate<PadicNumber>("sqrt(2)^2", ctx), from_integer(2, ctx)));
  CHECK(evaluate<PadicNumber>("O(7^5)", ctx).known_precision() == 5);
  CHECK(evaluate<PadicNumber>("1 + O(7^5)", ctx).known_precision() == 5);
  CHECK_THROWS_AS(evaluate<PadicNumber>("1 +", ctx), ParseError);
  CHECK_THROWS_AS(evaluate<PadicNumber>("(1", ctx), ParseError);
  CHECK_THROWS_AS(evaluate<PadicNumber>("O(5^2)", ctx), ParseError);
  CHECK_THROWS_AS(evaluate<PadicNumber>("1/0", ctx), Error);
  try {
    evaluate<PadicNumber>("i", ctx);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::WrongPrimeClass);
  }
}

TEST_CASE("expressions over Q_p(i)") {
  const PrimeContext ctx(7, 16);
  const QpiElement i = QpiElement::i(ctx);
  CHECK(agrees(evaluate<QpiElement>("i^2", ctx), -QpiElement::one(ctx)));
  CHECK(agrees(evaluate<QpiElement>("(1+i)/(1-i)", ctx), i));
  CHECK(agrees(evaluate<QpiElement>("(7)+(7)*i", ctx),
               QpiElement(from_integer(7, ctx), from_integer(7, ctx))));
}

TEST_CASE("operands prefer canonical literals") {
  const PrimeContext ctx(7, 4);
  const PadicNumber x = parse_operand<PadicNumber>("3 + 2*7 + O(7^2)", ctx);
  CHECK(x.known_precision() == 2);
  const QpiElement z = parse_operand<QpiElement>("(1 + O(7^3))*i", ctx);
  CHECK(z.re().is_zero());
  CHECK(agrees(parse_operand<PadicNumber>("1/3", ctx), from_rational(1, 3, ctx)));
  CHECK(parse_operand<QpiElement>("0", ctx).is_zero());
}
