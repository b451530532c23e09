#pragma once

#include <string>
#include <string_view>

#include "padic/padic_number.hpp"

namespace padic {

/// re + i*im in the unramified quadratic extension Qp(i), p = 3 (mod 4).
class QpiElement {
public:
  /// Throws WrongPrimeClass unless p = 3 (mod 4).
  QpiElement(PadicNumber re, PadicNumber im);
  /// Embeds a Q_p value with an imaginary part known to zero at the same precision.
  explicit QpiElement(const PadicNumber &re);

  static QpiElement zero(const PrimeContext &ctx);
  static QpiElement one(const PrimeContext &ctx);
  static QpiElement i(const PrimeContext &ctx);

  const PadicNumber &re() const noexcept { return re_; }
  const PadicNumber &im() const noexcept { return im_; }
  const PrimeContext &context() const noexcept { return re_.context(); }
  std::int64_t prime() const noexcept { return re_.prime(); }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  /// min(v(re), v(im)); kInfiniteValuation for zero.
  int valuation() const noexcept;
  int known_precision() const noexcept;
  int valuation_floor() const noexcept;

  QpiElement operator-() const { return {-re_, -im_}; }

  friend QpiElement operator+(const QpiElement &a, const QpiElement &b);
  friend QpiElement operator-(const QpiElement &a, const QpiElement &b);
  friend QpiElement operator*(const QpiElement &a, const QpiElement &b);
  /// z * conj(w) / (w conj(w)); throws DivisionByZero.
  friend QpiElement operator/(const QpiElement &a, const QpiElement &b);

  friend QpiElement operator*(const QpiElement &a, const PadicNumber &s);
  friend QpiElement operator*(const PadicNumber &s, const QpiElement &a);
  friend QpiElement operator/(const QpiElement &a, const PadicNumber &s);

  QpiElement &operator+=(const QpiElement &b) { return *this = *this + b; }
  QpiElement &operator-=(const QpiElement &b) { return *this = *this - b; }
  QpiElement &operator*=(const QpiElement &b) { return *this = *this * b; }
  QpiElement &operator/=(const QpiElement &b) { return *this = *this / b; }

private:
  PadicNumber re_;
  PadicNumber im_;
};

QpiElement ext_arith(ArithOp op, const QpiElement &a, const QpiElement &b);

QpiElement conj(const QpiElement &z);

struct NormAbs {
  PadicNumber norm;   // z * conj(z) = re^2 + im^2
  int abs_exponent;   // v(z), so |z|_p = p^-v(z); kInfiniteValuation for zero
};
NormAbs norm_abs(const QpiElement &z);
PadicNumber norm(const QpiElement &z);

double abs(const QpiElement &z);

/// Square root with canonical residue branch: residue s + i t with
/// s in [1, (p-1)/2], or s = 0 and t in [1, (p-1)/2]. Throws NonSquare.
QpiElement sqrt(const QpiElement &z);

bool is_real(const QpiElement &z);
bool agrees(const QpiElement &a, const QpiElement &b);
int agreement_digits(const QpiElement &a, const QpiElement &b);
bool identical(const QpiElement &a, const QpiElement &b);

/// "(<re>) + (<im>)*i", omitting a zero component ("(<re>)" when both are zero).
std::string format(const QpiElement &z);
/// Parses the canonical Qp(i) literal. Throws ParseError.
QpiElement parse_qpi(std::string_view text, const PrimeContext &ctx);

} // namespace padic
