#include "padic/clifford.hpp"

#include <algorithm>
#include <vector>

#include "padic/analytic.hpp"
#include "padic/error.hpp"

namespace padic {

Vector3 operator+(const Vector3 &u, const Vector3 &v) {
  return {u.a + v.a, u.b + v.b, u.c + v.c};
}

Vector3 operator-(const Vector3 &u, const Vector3 &v) {
  return {u.a - v.a, u.b - v.b, u.c - v.c};
}

Vector3 operator*(const PadicNumber &s, const Vector3 &v) {
  return {s * v.a, s * v.b, s * v.c};
}

Vector3 operator-(const Vector3 &v) { return {-v.a, -v.b, -v.c}; }

bool agrees(const Vector3 &u, const Vector3 &v) {
  return agrees(u.a, v.a) && agrees(u.b, v.b) && agrees(u.c, v.c);
}

int agreement_digits(const Vector3 &u, const Vector3 &v) {
  return std::min({agreement_digits(u.a, v.a), agreement_digits(u.b, v.b),
                   agreement_digits(u.c, v.c)});
}

PadicNumber quadratic_form(const Vector3 &u, const Vector3 &v) {
  return u.a * v.a + u.b * v.b + u.c * v.c;
}

PadicNumber quadratic_form(const Vector3 &v) { return quadratic_form(v, v); }

Vector3 reflect(const Vector3 &u, const Vector3 &v) {
  const PadicNumber qu = quadratic_form(u);
  if (qu.is_zero())
    throw Error(ErrorKind::IsotropicAxis,
                "q(u) = 0 modulo p^" + std::to_string(qu.known_precision()));
  const PadicNumber k = from_integer(2, v.context()) * quadratic_form(v, u) / qu;
  return v - k * u;
}

QpiMatrix iota(const Vector3 &v) {
  const QpiElement z(v.a, v.b);
  const QpiElement c(v.c);
  return {c, z, conj(z), -c};
}

bool is_pauli_shape(const QpiMatrix &m) {
  return trace(m).is_zero() && agrees(m.m21, conj(m.m12)) &&
         m.m11.im().is_zero();
}

Vector3 iota_inv(const QpiMatrix &m) {
  if (!is_pauli_shape(m))
    throw Error(ErrorKind::NotPauliShape,
                "expected [[c, a+ib], [a-ib, -c]] with c in Q_p");
  return {m.m12.re(), m.m12.im(), m.m11.re()};
}

SpherePoint::SpherePoint(Vector3 v) : v_(std::move(v)) {
  const PadicNumber defect =
      quadratic_form(v_) - PadicNumber::one(v_.context());
  if (!defect.is_zero())
    throw Error(ErrorKind::DomainError,
                "point is off the sphere: q(v) - 1 = " + format(defect));
}

SpherePoint SpherePoint::from_matrix(const QpiMatrix &m) {
  return SpherePoint(iota_inv(m));
}

SpherePoint SpherePoint::north_pole(const PrimeContext &ctx) {
  return SpherePoint(Vector3{PadicNumber::zero(ctx), PadicNumber::zero(ctx),
                             PadicNumber::one(ctx)});
}

int SpherePoint::pole_distance_exponent() const {
  const PadicNumber dc = v_.c - PadicNumber::one(context());
  return std::min({v_.a.valuation_floor(), v_.b.valuation_floor(),
                   dc.valuation_floor()});
}

CupPoint::CupPoint(const SpherePoint &p) : SpherePoint(p) {
  if (!in_cup())
    throw Error(ErrorKind::DomainError,
                "point is outside the cup ||P - sigma_z|| <= p^-1");
}

CupPoint CupPoint::north_pole(const PrimeContext &ctx) {
  return CupPoint(SpherePoint::north_pole(ctx));
}

bool agrees(const SpherePoint &p, const SpherePoint &q) {
  return agrees(p.coordinates(), q.coordinates());
}

int agreement_digits(const SpherePoint &p, const SpherePoint &q) {
  return agreement_digits(p.coordinates(), q.coordinates());
}

namespace {

PadicNumber scaling_component(const QpiElement &alpha, const QpiElement &beta) {
  const QpiElement &e = beta.valuation() < alpha.valuation() ? beta : alpha;
  return e.re().valuation() == e.valuation() ? e.re() : e.im();
}

} // namespace

ProjectiveRotation::ProjectiveRotation(const QpiElement &alpha,
                                       const QpiElement &beta)
    : alpha_(alpha), beta_(beta) {
  if (determinant().is_zero())
    throw Error(ErrorKind::DegenerateRotation,
                "alpha conj(alpha) + beta conj(beta) vanishes");
  const PadicNumber s = scaling_component(alpha_, beta_);
  alpha_ = alpha_ / s;
  beta_ = beta_ / s;
}

ProjectiveRotation ProjectiveRotation::identity(const PrimeContext &ctx) {
  return {QpiElement::one(ctx), QpiElement::zero(ctx)};
}

ProjectiveRotation ProjectiveRotation::from_matrix(const QpiMatrix &m) {
  if (!agrees(m.m22, conj(m.m11)) || !agrees(m.m21, -conj(m.m12)))
    throw Error(ErrorKind::NotRotationShape,
                "expected [[alpha, beta], [-conj(beta), conj(alpha)]]");
  return {m.m11, m.m12};
}

QpiMatrix ProjectiveRotation::matrix() const {
  return {alpha_, beta_, -conj(beta_), conj(alpha_)};
}

PadicNumber ProjectiveRotation::determinant() const {
  return norm(alpha_) + norm(beta_);
}

ProjectiveRotation ProjectiveRotation::inverse() const {
  return {conj(alpha_), -beta_};
}

bool agrees(const ProjectiveRotation &r, const ProjectiveRotation &s) {
  return agrees(r.alpha(), s.alpha()) && agrees(r.beta(), s.beta());
}

int agreement_digits(const ProjectiveRotation &r, const ProjectiveRotation &s) {
  return std::min(agreement_digits(r.alpha(), s.alpha()),
                  agreement_digits(r.beta(), s.beta()));
}

ProjectiveRotation rotation_compose(const ProjectiveRotation &r,
                                    const ProjectiveRotation &s) {
  // [[a1, b1], [-b1', a1']] [[a2, b2], [-b2', a2']]
  return {r.alpha() * s.alpha() - r.beta() * conj(s.beta()),
          r.alpha() * s.beta() + r.beta() * conj(s.alpha())};
}

SpherePoint rotation_act(const ProjectiveRotation &r, const SpherePoint &p) {
  const QpiMatrix m = r.matrix();
  // The adjugate of a rotation representative is its conjugate transpose.
  const QpiMatrix conjugated = m * p.matrix() * adjugate(m) / r.determinant();
  return SpherePoint::from_matrix(conjugated);
}

QpiElement mobius_action(const ProjectiveRotation &r, const QpiElement &xi) {
  const QpiElement den = conj(r.alpha()) - conj(r.beta()) * xi;
  if (den.is_zero())
    throw Error(ErrorKind::PoleHit, "Mobius denominator vanishes");
  return (r.alpha() * xi + r.beta()) / den;
}

ProjectiveRotation pole_conjugate(const ProjectiveRotation &r) {
  return {r.alpha(), -r.beta()};
}

QpiElement stereo(const SpherePoint &p, Pole pole) {
  const Vector3 &v = p.coordinates();
  const PrimeContext &ctx = p.context();
  if (pole == Pole::Cup && !p.in_cup())
    throw Error(ErrorKind::DomainError,
                "cup chart needs ||P - sigma_z|| <= p^-1");
  const PadicNumber one = PadicNumber::one(ctx);
  const PadicNumber den = pole == Pole::South ? one - v.c : one + v.c;
  if (den.is_zero())
    throw Error(ErrorKind::PoleHit, pole == Pole::South
                                        ? "south chart undefined at sigma_z"
                                        : "chart undefined at -sigma_z");
  return QpiElement(v.a, v.b) / den;
}

CupPoint lift(const QpiElement &xi) {
  if (xi.valuation_floor() < 1)
    throw Error(ErrorKind::OutsideDisk,
                "|xi|_p < 1 required, got valuation " +
                    std::to_string(xi.valuation()));
  const PrimeContext &ctx = xi.context();
  const PadicNumber one = PadicNumber::one(ctx);
  const PadicNumber n = norm(xi);
  const PadicNumber den = one + n;
  const QpiElement z = xi * from_integer(2, ctx) / den;
  return CupPoint(SpherePoint(Vector3{z.re(), z.im(), (one - n) / den}));
}

CupPoint polar_point(const PadicNumber &theta, const PadicNumber &phi) {
  if (theta.valuation_floor() < 1 || phi.valuation_floor() < 1)
    throw Error(ErrorKind::DomainError,
                "polar_point needs v(theta) >= 1 and v(phi) >= 1");
  const PrimeContext &ctx = theta.context();
  const Trig<PadicNumber> t = sin_cos_tan(from_integer(2, ctx) * theta);
  const QpiElement e = exp(QpiElement(PadicNumber::zero(ctx, phi.known_precision()), phi));
  const QpiElement z = e * t.sin;
  return CupPoint(SpherePoint(Vector3{z.re(), z.im(), t.cos}));
}

TangentSplit::TangentSplit(const PadicNumber &a, const QpiElement &beta)
    : a_(a), beta_(beta) {
  if (a_.valuation_floor() < 1 || beta_.valuation_floor() < 1)
    throw Error(ErrorKind::DomainError,
                "tangent parameters must lie in pZ_p and pZ_p(i)");
}

QpiMatrix TangentSplit::vertical() const {
  const PrimeContext &ctx = a_.context();
  const QpiElement ia(PadicNumber::zero(ctx, a_.known_precision()), a_);
  return QpiMatrix::diagonal(ia, -ia);
}

QpiMatrix TangentSplit::horizontal() const {
  const QpiElement zero = QpiElement::zero(beta_.context());
  return {zero, beta_, -conj(beta_), zero};
}

ProjectiveRotation exp_vertical(const PadicNumber &a) {
  const TangentSplit split(a, QpiElement::zero(a.context()));
  const QpiElement e = exp(split.vertical().m11);
  return {e, QpiElement::zero(a.context())};
}

ProjectiveRotation exp_horizontal(const QpiElement &beta) {
  const TangentSplit split(PadicNumber::zero(beta.context()), beta);
  return ProjectiveRotation::from_matrix(matrix_exp(split.horizontal()));
}

namespace {

std::vector<std::string_view> split_bracketed(std::string_view text,
                                              std::size_t expected) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != '[' || text[e] != ']')
    throw ParseError(b == std::string_view::npos ? 0 : b,
                     "expected '[' ... ']'");
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = b + 1;
  for (std::size_t k = b + 1; k < e; ++k) {
    if (text[k] == '(')
      ++depth;
    else if (text[k] == ')')
      --depth;
    else if (text[k] == ',' && depth == 0) {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.push_back(text.substr(start, e - start));
  if (parts.size() != expected)
    throw ParseError(b, "expected " + std::to_string(expected) + " entries");
  return parts;
}

} // namespace

std::string format(const Vector3 &v) {
  return "[" + format(v.a) + ", " + format(v.b) + ", " + format(v.c) + "]";
}

Vector3 parse_vector3(std::string_view text, const PrimeContext &ctx) {
  const auto parts = split_bracketed(text, 3);
  return {parse(parts[0], ctx), parse(parts[1], ctx), parse(parts[2], ctx)};
}

std::string format(const SpherePoint &p) { return format(p.coordinates()); }

std::string format(const ProjectiveRotation &r) {
  return "[" + format(r.alpha()) + ", " + format(r.beta()) + "]";
}

ProjectiveRotation parse_rotation(std::string_view text,
                                  const PrimeContext &ctx) {
  const auto parts = split_bracketed(text, 2);
  return {parse_qpi(parts[0], ctx), parse_qpi(parts[1], ctx)};
}

} // namespace padic
