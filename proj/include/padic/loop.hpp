#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "padic/clifford.hpp"
#include "padic/qpi.hpp"

namespace padic {

/// Element of the disk D = {xi in Qp(i) : |xi|_p < 1}, the carrier of the loop.
class DiskPoint {
public:
  /// Throws OutsideDisk unless v(xi) >= 1.
  explicit DiskPoint(QpiElement xi);
  static DiskPoint zero(const PrimeContext &ctx);

  const QpiElement &value() const noexcept { return value_; }
  const PrimeContext &context() const { return value_.context(); }
  bool is_zero() const { return value_.is_zero(); }

  DiskPoint operator-() const { return DiskPoint(-value_); }

private:
  QpiElement value_;
};

bool agrees(const DiskPoint &a, const DiskPoint &b);
int agreement_digits(const DiskPoint &a, const DiskPoint &b);

/// xi1 + xi2 over 1 - conj(xi1) xi2. A zero operand returns the other one
/// unchanged, so 0 is an exact two-sided identity.
DiskPoint loop_add(const DiskPoint &x1, const DiskPoint &x2);

/// [[1, xi], [-conj(xi), 1]]; its Mobius action is loop_add(xi, .).
ProjectiveRotation left_translation_matrix(const DiskPoint &x);

/// The unique x with loop_add(a, x) = b: (b - a)/(1 + conj(a) b).
DiskPoint left_divide(const DiskPoint &a, const DiskPoint &b);

enum class NoSolutionReason { Singular, OutsideDisk };

struct NoSolution {
  NoSolutionReason reason;
};

using RightSolveResult = std::variant<DiskPoint, NoSolution>;

/// Solves loop_add(y, a) = b through the real-linear system
/// y + (ab) conj(y) = b - a in (Re y, Im y).
RightSolveResult right_solve(const DiskPoint &a, const DiskPoint &b);

/// Inner mapping delta_{xi1,xi2}: multiplication by
/// u = (1 - xi1 conj(xi2)) / (1 - conj(xi1) xi2), with |u|_p = 1 and conj(u) = 1/u.
struct Deviation {
  QpiElement factor;
  QpiElement numerator; // 1 - xi1 conj(xi2)

  /// diag(numerator, conj(numerator)) as a projective rotation.
  ProjectiveRotation rotation() const;
};

Deviation deviation(const DiskPoint &x1, const DiskPoint &x2);
DiskPoint deviation_apply(const Deviation &d, const DiskPoint &x);

/// lift(loop_add(psi(A), psi(B))); sigma_z is the identity.
CupPoint sphere_loop_add(const CupPoint &a, const CupPoint &b);

/// polar_point(t theta, phi) for t in Z_p: the curve through sigma_z at t = 0.
CupPoint geodesic_point(const PadicNumber &theta, const PadicNumber &phi,
                        const PadicNumber &t);

std::string format(const DiskPoint &x);
DiskPoint parse_disk_point(std::string_view text, const PrimeContext &ctx);
std::string format(const Deviation &d);

} // namespace padic
