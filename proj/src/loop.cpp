#include "padic/loop.hpp"

#include "padic/error.hpp"

namespace padic {

DiskPoint::DiskPoint(QpiElement xi) : value_(std::move(xi)) {
  if (value_.valuation_floor() < 1)
    throw Error(ErrorKind::OutsideDisk,
                "|xi|_p < 1 required, got valuation " +
                    std::to_string(value_.valuation()));
}

DiskPoint DiskPoint::zero(const PrimeContext &ctx) {
  return DiskPoint(QpiElement::zero(ctx));
}

bool agrees(const DiskPoint &a, const DiskPoint &b) {
  return agrees(a.value(), b.value());
}

int agreement_digits(const DiskPoint &a, const DiskPoint &b) {
  return agreement_digits(a.value(), b.value());
}

DiskPoint loop_add(const DiskPoint &x1, const DiskPoint &x2) {
  if (x1.is_zero())
    return x2;
  if (x2.is_zero())
    return x1;
  const QpiElement &a = x1.value();
  const QpiElement &b = x2.value();
  // |conj(a) b| < 1, so the denominator is a unit.
  return DiskPoint((a + b) / (QpiElement::one(a.context()) - conj(a) * b));
}

ProjectiveRotation left_translation_matrix(const DiskPoint &x) {
  return {QpiElement::one(x.context()), x.value()};
}

DiskPoint left_divide(const DiskPoint &a, const DiskPoint &b) {
  if (a.is_zero())
    return b;
  const QpiElement &u = a.value();
  const QpiElement &w = b.value();
  return DiskPoint((w - u) / (QpiElement::one(u.context()) + conj(u) * w));
}

RightSolveResult right_solve(const DiskPoint &a, const DiskPoint &b) {
  if (a.is_zero())
    return b;
  const PrimeContext &ctx = a.context();
  const QpiElement w = a.value() * b.value();
  const QpiElement r = b.value() - a.value();
  const PadicNumber one = PadicNumber::one(ctx);
  // [[1 + w1, w2], [w2, 1 - w1]] (s, t) = (r1, r2)
  const PadicNumber m11 = one + w.re();
  const PadicNumber m22 = one - w.re();
  const PadicNumber &m12 = w.im();
  const PadicNumber det = m11 * m22 - m12 * m12;
  if (det.is_zero())
    return NoSolution{NoSolutionReason::Singular};
  const PadicNumber s = (r.re() * m22 - m12 * r.im()) / det;
  const PadicNumber t = (m11 * r.im() - m12 * r.re()) / det;
  QpiElement y(s, t);
  if (y.valuation_floor() < 1)
    return NoSolution{NoSolutionReason::OutsideDisk};
  return DiskPoint(std::move(y));
}

ProjectiveRotation Deviation::rotation() const {
  return {numerator, QpiElement::zero(numerator.context())};
}

Deviation deviation(const DiskPoint &x1, const DiskPoint &x2) {
  const QpiElement &a = x1.value();
  const QpiElement &b = x2.value();
  const QpiElement one = QpiElement::one(a.context());
  const QpiElement num = one - a * conj(b);
  const QpiElement den = one - conj(a) * b;
  return {num / den, num};
}

DiskPoint deviation_apply(const Deviation &d, const DiskPoint &x) {
  return DiskPoint(d.factor * x.value());
}

CupPoint sphere_loop_add(const CupPoint &a, const CupPoint &b) {
  return lift(loop_add(DiskPoint(psi(a)), DiskPoint(psi(b))).value());
}

CupPoint geodesic_point(const PadicNumber &theta, const PadicNumber &phi,
                        const PadicNumber &t) {
  if (t.valuation_floor() < 0)
    throw Error(ErrorKind::DomainError, "geodesic parameter t must lie in Z_p");
  return polar_point(t * theta, phi);
}

std::string format(const DiskPoint &x) { return format(x.value()); }

DiskPoint parse_disk_point(std::string_view text, const PrimeContext &ctx) {
  return DiskPoint(parse_qpi(text, ctx));
}

std::string format(const Deviation &d) { return format(d.factor); }

} // namespace padic
