#pragma once

#include <string>
#include <string_view>

#include "padic/mat2.hpp"
#include "padic/padic_number.hpp"
#include "padic/qpi.hpp"

namespace padic {

using QpiMatrix = Mat2<QpiElement>;

/// A vector (a, b, c) of Q_p^3 with the standard form q = a^2 + b^2 + c^2.
struct Vector3 {
  PadicNumber a, b, c;

  const PrimeContext &context() const { return a.context(); }
};

Vector3 operator+(const Vector3 &u, const Vector3 &v);
Vector3 operator-(const Vector3 &u, const Vector3 &v);
Vector3 operator*(const PadicNumber &s, const Vector3 &v);
Vector3 operator-(const Vector3 &v);

bool agrees(const Vector3 &u, const Vector3 &v);
int agreement_digits(const Vector3 &u, const Vector3 &v);

/// u . v = u_a v_a + u_b v_b + u_c v_c.
PadicNumber quadratic_form(const Vector3 &u, const Vector3 &v);
/// q(v) = v . v.
PadicNumber quadratic_form(const Vector3 &v);

/// sigma_u(v) = v - 2 (v.u / q(u)) u. Throws IsotropicAxis when q(u) = 0.
Vector3 reflect(const Vector3 &u, const Vector3 &v);

/// (a, b, c) -> [[c, a + ib], [a - ib, -c]].
QpiMatrix iota(const Vector3 &v);
/// Inverse of iota on Pauli-shaped matrices; throws NotPauliShape.
Vector3 iota_inv(const QpiMatrix &m);
bool is_pauli_shape(const QpiMatrix &m);

/// Point of the sphere a^2 + b^2 + c^2 = 1, i.e. a Pauli matrix with P^2 = I.
class SpherePoint {
public:
  /// Throws DomainError when the coordinates are off the sphere.
  explicit SpherePoint(Vector3 v);
  /// Throws NotPauliShape / DomainError.
  static SpherePoint from_matrix(const QpiMatrix &m);
  /// sigma_z = iota(0, 0, 1).
  static SpherePoint north_pole(const PrimeContext &ctx);

  const Vector3 &coordinates() const noexcept { return v_; }
  QpiMatrix matrix() const { return iota(v_); }
  const PrimeContext &context() const { return v_.context(); }

  /// Exponent k with ||P - sigma_z|| = p^-k in the sup norm on (a, b, c).
  int pole_distance_exponent() const;
  /// ||P - sigma_z|| <= p^-1.
  bool in_cup() const { return pole_distance_exponent() >= 1; }

private:
  Vector3 v_;
};

/// Sphere point in the cup around sigma_z.
class CupPoint : public SpherePoint {
public:
  /// Throws DomainError when P is not in the cup.
  explicit CupPoint(const SpherePoint &p);
  static CupPoint north_pole(const PrimeContext &ctx);
};

bool agrees(const SpherePoint &p, const SpherePoint &q);
int agreement_digits(const SpherePoint &p, const SpherePoint &q);

/// Projective class of [[alpha, beta], [-conj(beta), conj(alpha)]] modulo
/// Q_p^*, stored canonically: of alpha, beta the entry of least valuation
/// (ties to alpha) is scaled so that its leading component (real part if it
/// attains the valuation, else imaginary part) is exactly 1.
class ProjectiveRotation {
public:
  /// Throws DegenerateRotation when alpha conj(alpha) + beta conj(beta) = 0.
  ProjectiveRotation(const QpiElement &alpha, const QpiElement &beta);
  static ProjectiveRotation identity(const PrimeContext &ctx);
  /// Throws NotRotationShape unless m22 = conj(m11) and m21 = -conj(m12).
  static ProjectiveRotation from_matrix(const QpiMatrix &m);

  const QpiElement &alpha() const noexcept { return alpha_; }
  const QpiElement &beta() const noexcept { return beta_; }
  const PrimeContext &context() const { return alpha_.context(); }

  QpiMatrix matrix() const;
  /// alpha conj(alpha) + beta conj(beta) of the stored representative.
  PadicNumber determinant() const;
  ProjectiveRotation inverse() const;

private:
  QpiElement alpha_, beta_;
};

/// Canonical forms agree to precision.
bool agrees(const ProjectiveRotation &r, const ProjectiveRotation &s);
int agreement_digits(const ProjectiveRotation &r, const ProjectiveRotation &s);

ProjectiveRotation rotation_compose(const ProjectiveRotation &r,
                                    const ProjectiveRotation &s);
inline ProjectiveRotation operator*(const ProjectiveRotation &r,
                                    const ProjectiveRotation &s) {
  return rotation_compose(r, s);
}

/// R P R^-1.
SpherePoint rotation_act(const ProjectiveRotation &r, const SpherePoint &p);

/// (alpha xi + beta) / (-conj(beta) xi + conj(alpha)). Throws PoleHit.
QpiElement mobius_action(const ProjectiveRotation &r, const QpiElement &xi);

/// sigma_z R sigma_z, i.e. (alpha, -beta). Stereographic projection
/// intertwines rotation_act(R, .) with mobius_action(pole_conjugate(R), .).
ProjectiveRotation pole_conjugate(const ProjectiveRotation &r);

enum class Pole { North, South, Cup };

/// North / Cup: (a + ib)/(1 + c); South: (a + ib)/(1 - c).
/// Throws PoleHit; Cup additionally requires the cup invariant (DomainError).
QpiElement stereo(const SpherePoint &p, Pole pole);
/// Stereographic chart psi of the cup onto the disk |xi|_p < 1.
inline QpiElement psi(const SpherePoint &p) { return stereo(p, Pole::Cup); }

/// Inverse of psi: c = (1 - xi xibar)/(1 + xi xibar), a + ib = 2 xi/(1 + xi xibar).
/// Throws OutsideDisk unless |xi|_p < 1.
CupPoint lift(const QpiElement &xi);

/// [[cos 2t, e^{i phi} sin 2t], [e^{-i phi} sin 2t, -cos 2t]] with v(theta) >= 1
/// and v(phi) >= 1. Throws DomainError.
CupPoint polar_point(const PadicNumber &theta, const PadicNumber &phi);

/// Tangent generators at sigma_z: the vertical part diag(ia, -ia) and the
/// horizontal part [[0, beta], [-conj(beta), 0]], a in pZ_p, beta in pZ_p(i).
class TangentSplit {
public:
  /// Throws DomainError unless v(a) >= 1 and v(beta) >= 1.
  TangentSplit(const PadicNumber &a, const QpiElement &beta);

  QpiMatrix vertical() const;
  QpiMatrix horizontal() const;
  const PadicNumber &vertical_parameter() const noexcept { return a_; }
  const QpiElement &horizontal_parameter() const noexcept { return beta_; }

private:
  PadicNumber a_;
  QpiElement beta_;
};

/// diag(exp(ia), exp(-ia)); fixes sigma_z.
ProjectiveRotation exp_vertical(const PadicNumber &a);
/// matrix_exp([[0, beta], [-conj(beta), 0]]); moves sigma_z within the cup.
ProjectiveRotation exp_horizontal(const QpiElement &beta);

/// "[<a>, <b>, <c>]".
std::string format(const Vector3 &v);
Vector3 parse_vector3(std::string_view text, const PrimeContext &ctx);
std::string format(const SpherePoint &p);
/// "[<alpha>, <beta>]" in canonical scaling.
std::string format(const ProjectiveRotation &r);
ProjectiveRotation parse_rotation(std::string_view text, const PrimeContext &ctx);

} // namespace padic
