#include <doctest.h>

#include "padic/analytic.hpp"
#include "padic/checks.hpp"
#include "padic/clifford.hpp"
#include "padic/error.hpp"

using namespace padic;

namespace {

Vector3 vec(const PrimeContext &ctx, long a, long b, long c) {
  return {from_integer(a, ctx), from_integer(b, ctx), from_integer(c, ctx)};
}

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::NotPrime;
}

} // namespace

TEST_CASE("Pauli immersion") {
  const PrimeContext ctx(7, 12);
  const QpiMatrix sz = iota(vec(ctx, 0, 0, 1));
  const QpiElement one = QpiElement::one(ctx);
  CHECK(agrees(sz, QpiMatrix::diagonal(one, -one)));
  const QpiMatrix sx = iota(vec(ctx, 1, 0, 0));
  CHECK(agrees(sx * sx, QpiMatrix::identity(ctx)));
  const Vector3 v = vec(ctx, 3, 5, 14);
  CHECK(agrees(det(iota(v)), QpiElement(-quadratic_form(v))));
  CHECK(agrees(iota_inv(iota(v)), v));
  CHECK(is_pauli_shape(iota(v)));
  CHECK_FALSE(is_pauli_shape(QpiMatrix::identity(ctx)));
  CHECK(kind_of([&] { iota_inv(QpiMatrix::identity(ctx)); }) ==
        ErrorKind::NotPauliShape);
}

TEST_CASE("quadratic form and reflections") {
  const PrimeContext ctx(7, 12);
  const Vector3 e1 = vec(ctx, 1, 0, 0), e2 = vec(ctx, 0, 1, 0),
                e3 = vec(ctx, 0, 0, 1);
  CHECK(agrees(quadratic_form(e1), PadicNumber::one(ctx)));
  CHECK(quadratic_form(e1, e2).is_zero());
  const Vector3 v = vec(ctx, 2, 9, 5);
  CHECK(agrees(reflect(v, v), -v));
  CHECK(agrees(reflect(e3, v), vec(ctx, 2, 9, -5)));
  CHECK(agrees(reflect(e1, reflect(e1, v)), v));

  // (1, 2, 3) + O(7): 1 + 4 + 9 = 14; search for an exactly isotropic
  // vector (a, b, 1) over small integers: a^2 + b^2 = -1 has no integer
  // solution, but 7-adically (x, y, z) with x^2 + y^2 + z^2 = 0 exists.
  // q(2, 3, sqrt(-13)) = 0 since -13 = 1 (mod 7) is a square.
  const PadicNumber z = sqrt(from_integer(-13, ctx));
  const Vector3 iso{from_integer(2, ctx), from_integer(3, ctx), z};
  CHECK(quadratic_form(iso).is_zero());
  CHECK(kind_of([&] { reflect(iso, v); }) == ErrorKind::IsotropicAxis);
}

TEST_CASE("sphere and cup") {
  const PrimeContext ctx(7, 12);
  const SpherePoint n = SpherePoint::north_pole(ctx);
  CHECK(n.in_cup());
  CHECK(kind_of([&] { SpherePoint(vec(ctx, 1, 1, 0)); }) == ErrorKind::DomainError);
  // (0, 1, 0) is on the sphere but far from the pole.
  const SpherePoint far(vec(ctx, 0, 1, 0));
  CHECK_FALSE(far.in_cup());
  CHECK(kind_of([&] { CupPoint{far}; }) == ErrorKind::DomainError);
  CHECK(psi(n).is_zero());
  CHECK(agrees(SpherePoint(lift(QpiElement::zero(ctx))), n));
  CHECK(kind_of([&] { lift(QpiElement::one(ctx)); }) == ErrorKind::OutsideDisk);
  // South-pole chart at sigma_z hits the pole.
  CHECK(kind_of([&] { stereo(n, Pole::South); }) == ErrorKind::PoleHit);
}

TEST_CASE("projective rotations") {
  const PrimeContext ctx(7, 12);
  const QpiElement a(from_integer(3, ctx), from_integer(1, ctx));
  const QpiElement b(from_integer(7, ctx), from_integer(2, ctx));
  const ProjectiveRotation r(a, b);
  // Scaling the representative by a Q_p scalar does not change the class.
  const PadicNumber k = from_rational(5, 49, ctx);
  const ProjectiveRotation kr = ProjectiveRotation::from_matrix(r.matrix() * k);
  CHECK(agrees(kr, r));
  CHECK(agrees(r * r.inverse(), ProjectiveRotation::identity(ctx)));
  CHECK(kind_of([&] { ProjectiveRotation(QpiElement::zero(ctx), QpiElement::zero(ctx)); }) ==
        ErrorKind::DegenerateRotation);
  CHECK(kind_of([&] { ProjectiveRotation::from_matrix(QpiMatrix::zero(ctx)); }) ==
        ErrorKind::DegenerateRotation);
  CHECK(kind_of([&] {
          ProjectiveRotation::from_matrix(QpiMatrix::diagonal(
              QpiElement::one(ctx), QpiElement(from_integer(2, ctx))));
        }) == ErrorKind::NotRotationShape);

  const SpherePoint n = SpherePoint::north_pole(ctx);
  CHECK(agrees(rotation_act(ProjectiveRotation::identity(ctx), n), n));
  CHECK(agrees(rotation_act(ProjectiveRotation(a, QpiElement::zero(ctx)), n), n));

  const QpiElement xi(from_integer(7, ctx), from_integer(14, ctx));
  CHECK(agrees(mobius_action(ProjectiveRotation::identity(ctx), xi), xi));
  CHECK(agrees(mobius_action(ProjectiveRotation(a, QpiElement::zero(ctx)), xi),
               a / conj(a) * xi));
  CHECK(identical(parse_rotation(format(r), ctx).alpha(), r.alpha()));
  CHECK(identical(parse_rotation(format(r), ctx).beta(), r.beta()));
}

TEST_CASE("scaling a representative leaves the actions unchanged") {
  const PrimeContext ctx(11, 16);
  checks::Sampler rng(ctx, 41);
  for (int k = 0; k < 50; ++k) {
    const ProjectiveRotation r(QpiElement::one(ctx) + rng.qpi(1, 2), rng.qpi(1, 2));
    const PadicNumber scale = rng.padic(-1, 1);
    const ProjectiveRotation kr = ProjectiveRotation::from_matrix(r.matrix() * scale);
    const CupPoint pt = lift(rng.qpi(1, 3));
    CHECK(agrees(rotation_act(kr, pt), rotation_act(r, pt)));
    CHECK(agrees(mobius_action(kr, psi(pt)), mobius_action(r, psi(pt))));
    CHECK(agrees(rotation_act(r, pt).matrix() * rotation_act(r, pt).matrix(),
                 QpiMatrix::identity(ctx)));
  }
}

TEST_CASE("polar cup points and the reductive split") {
  const PrimeContext ctx(7, 16);
  const PadicNumber zero = PadicNumber::zero(ctx);
  CHECK(agrees(SpherePoint(polar_point(zero, zero)), SpherePoint::north_pole(ctx)));
  CHECK(kind_of([&] { polar_point(PadicNumber::one(ctx), zero); }) ==
        ErrorKind::DomainError);
  CHECK(agrees(exp_vertical(zero), ProjectiveRotation::identity(ctx)));
  CHECK(agrees(exp_horizontal(QpiElement::zero(ctx)), ProjectiveRotation::identity(ctx)));

  checks::Sampler rng(ctx, 43);
  const SpherePoint n = SpherePoint::north_pole(ctx);
  for (int k = 0; k < 30; ++k) {
    const PadicNumber theta = rng.padic(1, 3), phi = rng.padic(1, 3);
    const CupPoint pt = polar_point(theta, phi);
    CHECK(agrees(pt.matrix() * pt.matrix(), QpiMatrix::identity(ctx)));
    CHECK(psi(pt).valuation() == theta.valuation());

    const PadicNumber a = rng.padic(1, 3);
    CHECK(agrees(rotation_act(exp_vertical(a), n), n));
    const SpherePoint moved = rotation_act(exp_horizontal(rng.qpi(1, 3)), n);
    CHECK(moved.in_cup());

    const TangentSplit split(a, rng.qpi(1, 3));
    CHECK(split.vertical().m12.is_zero());
    CHECK(split.horizontal().m11.is_zero());
    CHECK(agrees(split.horizontal().m21, -conj(split.horizontal().m12)));
  }
  CHECK(kind_of([&] { TangentSplit(PadicNumber::one(ctx), QpiElement::zero(ctx)); }) ==
        ErrorKind::DomainError);
}

TEST_CASE("two reflections compose to a rotation") {
  const PrimeContext ctx(19, 16);
  checks::Sampler rng(ctx, 47);
  for (int k = 0; k < 50; ++k) {
    const Vector3 u = rng.axis(), w = rng.axis(), v = rng.vector();
    const ProjectiveRotation r = ProjectiveRotation::from_matrix(iota(u) * iota(w));
    const SpherePoint p = lift(rng.qpi(1, 2));
    const SpherePoint image(reflect(u, reflect(w, p.coordinates())));
    CHECK(agrees(rotation_act(r, p), image));
    CHECK(agrees(quadratic_form(reflect(u, reflect(w, v))), quadratic_form(v)));
  }
}

TEST_CASE("vector literals") {
  const PrimeContext ctx(7, 3);
  const Vector3 v = vec(ctx, 1, 7, 0);
  CHECK(format(v) == "[1 + O(7^3), 1*7 + O(7^4), O(7^3)]");
  CHECK(agrees(parse_vector3(format(v), ctx), v));
  CHECK_THROWS_AS(parse_vector3("[1 + O(7^3), O(7^3)]", ctx), ParseError);
}
