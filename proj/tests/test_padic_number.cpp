#include <doctest.h>

#include "padic/error.hpp"
#include "padic/padic_number.hpp"
#include "padic/checks.hpp"
#include "support.hpp"

using namespace padic;
using testing::Digits;
using testing::stripped_digits;

namespace {

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::DomainError;
}

} // namespace

TEST_CASE("context validation") {
  CHECK(kind_of([] { PrimeContext(2, 10); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { PrimeContext(9, 10); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { PrimeContext(1, 10); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { PrimeContext(7, 0); }) == ErrorKind::InvalidContext);
  CHECK(PrimeContext(7, 4).admits_i());
  CHECK_FALSE(PrimeContext(5, 4).admits_i());
  CHECK(kind_of([] { PrimeContext(13, 4).require_i(); }) ==
        ErrorKind::WrongPrimeClass);
}

TEST_CASE("from_rational") {
  const PrimeContext ctx(7, 4);
  const PadicNumber one = from_rational(1, 1, ctx);
  CHECK(one.valuation() == 0);
  CHECK(stripped_digits(one) == Digits{1});
  CHECK(one.known_precision() == 4);

  const PadicNumber x98 = from_rational(98, 1, ctx);
  CHECK(x98.valuation() == 2);
  CHECK(stripped_digits(x98) == Digits{2});
  CHECK(x98.known_precision() == 6);

  // Long-division expansion of 1/3 in Q_7.
  const PadicNumber third = from_rational(1, 3, ctx);
  CHECK(third.valuation() == 0);
  CHECK(third.digits() == Digits{5, 4, 4, 4});

  const PadicNumber neg = from_rational(-1, 1, PrimeContext(7, 3));
  CHECK(neg.digits() == Digits{6, 6, 6});

  const PadicNumber frac = from_rational(3, 49, ctx);
  CHECK(frac.valuation() == -2);
  CHECK(frac.known_precision() == 2);

  CHECK(kind_of([&] { from_rational(1, 0, ctx); }) == ErrorKind::ZeroDenominator);
  CHECK(from_rational(0, 5, ctx).is_zero());
  CHECK(from_rational(0, 5, ctx).known_precision() == 4);
}

TEST_CASE("arithmetic and precision propagation") {
  const PrimeContext ctx(7, 8);
  const PadicNumber third = from_rational(1, 3, ctx);
  const PadicNumber two_thirds = from_rational(2, 3, ctx);
  const PadicNumber sum = third + two_thirds;
  CHECK(identical(sum, PadicNumber::one(ctx)));
  CHECK(agrees(from_integer(3, ctx) * third, PadicNumber::one(ctx)));
  CHECK(agreement_digits(from_integer(3, ctx) * third, PadicNumber::one(ctx)) == 8);

  const PadicNumber x = from_rational(5, 7, ctx);
  CHECK(identical(x + PadicNumber::zero(ctx, 100), x));

  // Absolute precision is the minimum under addition.
  const PadicNumber a = PadicNumber::from_unit(ctx, 0, 1, 3);
  const PadicNumber b = PadicNumber::from_unit(ctx, 1, 2, 10);
  CHECK((a + b).known_precision() == 3);
  // Relative precision is the minimum under multiplication.
  CHECK((a * b).relative_precision() == 3);
  CHECK((a * b).valuation() == 1);

  // Full cancellation leaves a zero known to the joint precision.
  const PadicNumber d = third - third;
  CHECK(d.is_zero());
  CHECK(d.known_precision() == 8);

  CHECK(kind_of([&] { third / PadicNumber::zero(ctx); }) ==
        ErrorKind::DivisionByZero);
  CHECK(arith(ArithOp::Div, from_integer(1, ctx), from_integer(3, ctx))
            .digits() == third.digits());
}

TEST_CASE("valuation and absolute value") {
  const PrimeContext ctx(7, 6);
  const PadicNumber x = from_rational(49, 3, ctx);
  CHECK(x.valuation() == 2);
  CHECK(abs(x) == doctest::Approx(1.0 / 49));
  CHECK(abs(PadicNumber::zero(ctx)) == 0.0);
  CHECK(PadicNumber::zero(ctx).valuation() == kInfiniteValuation);
  CHECK(power_of_p(-3, ctx).valuation() == -3);
}

TEST_CASE("sqrt") {
  const PrimeContext ctx(7, 10);
  CHECK(identical(sqrt(PadicNumber::one(ctx)), PadicNumber::one(ctx)));
  const PadicNumber r = sqrt(from_integer(2, ctx));
  CHECK(r.digits() == Digits{3, 1, 2, 6, 1, 2, 1, 2, 4, 6});
  CHECK(agrees(r * r, from_integer(2, ctx)));
  CHECK(sqrt(PadicNumber::zero(ctx)).is_zero());
  CHECK(kind_of([&] { sqrt(from_integer(7, ctx)); }) == ErrorKind::NonSquare);
  CHECK(kind_of([&] { sqrt(from_integer(3, ctx)); }) == ErrorKind::NonSquare);
  const PadicNumber s = sqrt(from_rational(4, 49, ctx));
  CHECK(s.valuation() == -1);
  CHECK(s.digits().front() == 2);
  const std::int64_t t = detail::sqrt_mod_prime(2, 7);
  CHECK(t * t % 7 == 2);
  CHECK(detail::sqrt_mod_prime(3, 7) == -1);
}

TEST_CASE("format and parse") {
  const PrimeContext ctx(7, 2);
  const PadicNumber x = PadicNumber::from_digits(ctx, 0, Digits{3, 2}, 2);
  CHECK(format(x) == "3 + 2*7 + O(7^2)");
  CHECK(format(PadicNumber::zero(ctx, 5)) == "O(7^5)");

  const PadicNumber y = parse("2*7^-1 + 1 + O(7^3)", ctx);
  CHECK(y.valuation() == -1);
  CHECK(y.known_precision() == 3);
  CHECK(y.digits() == Digits{2, 1, 0, 0});
  CHECK(identical(parse(format(y), ctx), y));

  auto position = [&](const char *text) {
    try {
      parse(text, ctx);
    } catch (const ParseError &e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("3 + 2*7") >= 0);          // missing O-term
  CHECK(position("9 + O(7^2)") == 0);       // digit out of range
  CHECK(position("3 + O(5^2)") >= 4);       // wrong prime
  CHECK(position("2*7 + 1 + O(7^3)") >= 0); // powers not ascending
  CHECK(position("1 + O(7^0)") >= 0);       // term beyond precision
}

TEST_CASE("kernel properties on random values") {
  for (std::int64_t p : {3, 7, 13}) {
    const PrimeContext ctx(p, 20);
    checks::Sampler rng(ctx, 11);
    for (int k = 0; k < 1000; ++k) {
      const PadicNumber a = rng.padic(-2, 4), b = rng.padic(-2, 4);
      const PadicNumber s = a + b;
      CHECK(s.valuation_floor() >= std::min(a.valuation(), b.valuation()));
      if (a.valuation() != b.valuation())
        CHECK(s.valuation() == std::min(a.valuation(), b.valuation()));
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
      CHECK(identical(parse(format(a), ctx), a));
    }
  }
}
