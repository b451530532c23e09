#include <doctest.h>

#include "padic/checks.hpp"
#include "padic/error.hpp"

using namespace padic;

TEST_CASE("suites pass at small sample counts") {
  checks::Options o;
  o.p = 11;
  o.precision = 20;
  o.samples = 20;
  o.series_inputs = 5;
  o.float_samples = 100;
  for (const std::string &suite : checks::suite_names()) {
    const auto results = checks::run_suite(suite, o);
    CHECK(!results.empty());
    CHECK(checks::all_passed(results));
  }
}

TEST_CASE("deterministic in the seed") {
  checks::Options o;
  o.samples = 10;
  o.series_inputs = 3;
  o.float_samples = 10;
  const std::string a = checks::format_plain(checks::run_suite("all", o));
  const std::string b = checks::format_plain(checks::run_suite("all", o));
  CHECK(a == b);
  CHECK(a.find("witness: a=7, b=(7)*i, c=7") != std::string::npos);
}

TEST_CASE("prime class rules") {
  checks::Options o;
  o.p = 5;
  o.samples = 5;
  o.float_samples = 5;
  CHECK_THROWS_AS(checks::run_suite("axioms", o), Error);
  CHECK(checks::all_passed(checks::run_suite("oracle", o)));
  o.p = 7;
  CHECK_THROWS_AS(checks::run_suite("nope", o), Error);
}

TEST_CASE("failure reporting") {
  checks::PropertyResult r;
  r.suite = "s";
  r.property = "p";
  r.samples = 3;
  r.failure_count = 1;
  r.failures = {"x=1"};
  const std::string text = checks::format_plain({r});
  CHECK(text.find("s/p: 2/3 FAIL") != std::string::npos);
  CHECK(text.find("counterexample: x=1") != std::string::npos);
  CHECK(text.find("1 of 1 properties failed") != std::string::npos);
  CHECK_FALSE(checks::all_passed({r}));
}

TEST_CASE("sampler shapes") {
  const PrimeContext ctx(7, 12);
  checks::Sampler rng(ctx, 1);
  for (int k = 0; k < 200; ++k) {
    const PadicNumber x = rng.padic(1, 3);
    CHECK(x.valuation() >= 1);
    CHECK(x.valuation() <= 3);
    CHECK(x.relative_precision() == 12);
    const Vector3 u = rng.axis();
    CHECK(quadratic_form(u).valuation() ==
          2 * std::min({u.a.valuation(), u.b.valuation(), u.c.valuation()}));
    const mpq_class q = rng.rational(-2, 2);
    const int v = oracle::valuation(q, 7);
    CHECK(v >= -2);
    CHECK(v <= 2);
    CHECK(checks::matches_oracle(checks::to_kernel(q, ctx), q));
  }
}
