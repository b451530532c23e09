#include <doctest.h>

#include "padic/checks.hpp"
#include "padic/error.hpp"
#include "padic/loop.hpp"
#include "support.hpp"

using namespace padic;
using testing::Digits;
using testing::stripped_digits;

namespace {

DiskPoint point(const PrimeContext &ctx, long re, long im) {
  return DiskPoint(QpiElement(from_integer(re, ctx), from_integer(im, ctx)));
}

} // namespace

TEST_CASE("disk membership") {
  const PrimeContext ctx(7, 8);
  CHECK_THROWS_AS(point(ctx, 1, 0), Error);
  try {
    point(ctx, 1, 7);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::OutsideDisk);
  }
  CHECK(DiskPoint::zero(ctx).is_zero());
}

TEST_CASE("frozen loop values in Q_7(i)") {
  // (7 + 7i) / (1 - 49i) = (-168 + 175i) / 1201, expanded by the oracle.
  const PrimeContext ctx(7, 8);
  const DiskPoint s = loop_add(point(ctx, 7, 0), point(ctx, 0, 7));
  const QpiElement z = s.value();
  CHECK(z.re().valuation() == 1);
  CHECK(stripped_digits(z.re().truncated(8)) == Digits{1, 0, 6, 6, 5, 6});
  CHECK(z.im().valuation() == 1);
  CHECK(stripped_digits(z.im().truncated(8)) == Digits{1, 0, 1, 0, 6, 6, 5});

  // (1 + 49i)/(1 - 49i) = (-1200 + 49i)/1201.
  const Deviation d = deviation(point(ctx, 7, 0), point(ctx, 0, 7));
  CHECK(d.factor.re().valuation() == 0);
  CHECK(stripped_digits(d.factor.re().truncated(8)) == Digits{1, 0, 0, 0, 5, 6, 6, 6});
  CHECK(d.factor.im().valuation() == 2);
  CHECK(stripped_digits(d.factor.im().truncated(8)) == Digits{2, 0, 0, 0, 5, 6});
}

TEST_CASE("identity and inverses") {
  const PrimeContext ctx(7, 12);
  const DiskPoint xi = point(ctx, 14, 21);
  const DiskPoint zero = DiskPoint::zero(ctx);
  CHECK(identical(loop_add(zero, xi).value(), xi.value()));
  CHECK(identical(loop_add(xi, zero).value(), xi.value()));
  CHECK(loop_add(-xi, xi).is_zero());
  CHECK(left_divide(xi, xi).is_zero());
  CHECK(agrees(left_divide(zero, xi), xi));
  CHECK(agrees(std::get<DiskPoint>(right_solve(zero, xi)), xi));
  CHECK(std::get<DiskPoint>(right_solve(xi, xi)).is_zero());
  CHECK(agrees(left_translation_matrix(zero), ProjectiveRotation::identity(ctx)));
  CHECK(agrees(left_translation_matrix(xi).determinant(),
               PadicNumber::one(ctx) + norm(xi.value())));
  CHECK(agrees(deviation(xi, zero).factor, QpiElement::one(ctx)));
  CHECK(agrees(deviation(zero, xi).factor, QpiElement::one(ctx)));
}

TEST_CASE("right solve reports failure as a value") {
  // Inside the disk the system's determinant is a unit, so a solution
  // always exists; NoSolution is only a value, never thrown.
  const PrimeContext ctx(7, 12);
  checks::Sampler rng(ctx, 53);
  for (int k = 0; k < 100; ++k) {
    const DiskPoint a = rng.disk(), b = rng.disk();
    const RightSolveResult y = right_solve(a, b);
    REQUIRE(std::holds_alternative<DiskPoint>(y));
    CHECK(agrees(loop_add(std::get<DiskPoint>(y), a), b));
  }
  const NoSolution none{NoSolutionReason::OutsideDisk};
  CHECK(none.reason == NoSolutionReason::OutsideDisk);
}

TEST_CASE("sphere transfer and geodesics") {
  const PrimeContext ctx(11, 16);
  checks::Sampler rng(ctx, 59);
  const CupPoint n = CupPoint::north_pole(ctx);
  for (int k = 0; k < 30; ++k) {
    const CupPoint a = lift(rng.qpi(1, 3)), b = lift(rng.qpi(1, 3));
    CHECK(agrees(SpherePoint(sphere_loop_add(n, b)), SpherePoint(b)));
    CHECK(agrees(SpherePoint(sphere_loop_add(a, n)), SpherePoint(a)));
    CHECK(agrees(psi(sphere_loop_add(a, b)),
                 loop_add(DiskPoint(psi(a)), DiskPoint(psi(b))).value()));

    const PadicNumber theta = rng.padic(1, 3), phi = rng.padic(1, 3);
    CHECK(agrees(SpherePoint(geodesic_point(theta, phi, PadicNumber::zero(ctx))),
                 SpherePoint(n)));
    CHECK(agrees(SpherePoint(geodesic_point(theta, phi, PadicNumber::one(ctx))),
                 SpherePoint(polar_point(theta, phi))));
  }
  CHECK_THROWS_AS(geodesic_point(from_integer(11, ctx), PadicNumber::zero(ctx),
                                 from_rational(1, 11, ctx)),
                  Error);
}

TEST_CASE("sphere composition against the rational oracle") {
  // Rational cup points: lift of a Gaussian rational xi has rational
  // coordinates, so both paths can be compared digit by digit.
  const PrimeContext ctx(7, 12);
  checks::Sampler rng(ctx, 61);
  for (int k = 0; k < 30; ++k) {
    const oracle::GaussianRational ga = rng.gaussian(1, 2), gb = rng.gaussian(1, 2);
    const CupPoint a = lift(checks::to_kernel(ga, ctx));
    const CupPoint b = lift(checks::to_kernel(gb, ctx));
    CHECK(checks::matches_oracle(psi(sphere_loop_add(a, b)),
                                 oracle::gaussian_loop_add(ga, gb)));
  }
}

TEST_CASE("literals") {
  const PrimeContext ctx(7, 4);
  const DiskPoint x = point(ctx, 7, 49);
  CHECK(identical(parse_disk_point(format(x), ctx).value(), x.value()));
  CHECK_THROWS_AS(parse_disk_point("(1 + O(7^4))", ctx), Error);
}
