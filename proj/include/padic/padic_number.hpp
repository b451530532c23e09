#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "padic/context.hpp"

namespace padic {

/// Valuation reported for a zero value.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// An element of Q_p known modulo p^m.
///
/// Nonzero values are stored as p^v * u with u a unit reduced modulo
/// p^(m - v); the leading base-p digit of u is therefore nonzero and
/// |x|_p = p^-v exactly. A zero carries only its known precision m, meaning
/// "congruent to 0 modulo p^m". Arithmetic propagates the provable precision:
/// absolute precisions take the minimum under addition, relative precisions
/// take the minimum under multiplication and division.
class PadicNumber {
public:
  static PadicNumber zero(const PrimeContext &ctx);
  static PadicNumber zero(const PrimeContext &ctx, int known_precision);
  static PadicNumber one(const PrimeContext &ctx);

  /// p^valuation * unit mod p^known_precision, renormalising if unit is
  /// divisible by p. Requires known_precision > valuation.
  static PadicNumber from_unit(const PrimeContext &ctx, int valuation,
                               mpz_class unit, int known_precision);

  /// Digits d_0.. at powers valuation, valuation+1, ...
  static PadicNumber from_digits(const PrimeContext &ctx, int valuation,
                                 std::span<const std::int64_t> digits,
                                 int known_precision);

  const PrimeContext &context() const noexcept { return ctx_; }
  std::int64_t prime() const noexcept { return ctx_.p(); }

  bool is_zero() const noexcept { return zero_; }
  /// kInfiniteValuation for zero.
  int valuation() const noexcept { return zero_ ? kInfiniteValuation : val_; }
  /// Absolute precision: the value is known modulo p^known_precision().
  int known_precision() const noexcept { return prec_; }
  /// Number of known significant digits; 0 for zero.
  int relative_precision() const noexcept { return zero_ ? 0 : prec_ - val_; }
  /// Lower bound on the true valuation: valuation() or, for zero, known_precision().
  int valuation_floor() const noexcept { return zero_ ? prec_ : val_; }

  /// Unit part u, 0 < u < p^relative_precision(); 0 for zero.
  const mpz_class &unit() const noexcept { return unit_; }

  /// d_0 .. d_{k-1}, k = relative_precision(), including known trailing zeros.
  std::vector<std::int64_t> digits() const;
  /// Digit at absolute power k; requires k < known_precision().
  std::int64_t digit_at(int power) const;

  /// Same value with known precision lowered to min(m, known_precision()).
  PadicNumber truncated(int known_precision) const;

  /// Throws PrecisionExhausted unless the value is known modulo p^m.
  const PadicNumber &require_precision(int m) const;

  PadicNumber operator-() const;

  friend PadicNumber operator+(const PadicNumber &a, const PadicNumber &b);
  friend PadicNumber operator-(const PadicNumber &a, const PadicNumber &b);
  friend PadicNumber operator*(const PadicNumber &a, const PadicNumber &b);
  /// Throws DivisionByZero when b is zero to its known precision.
  friend PadicNumber operator/(const PadicNumber &a, const PadicNumber &b);

  PadicNumber &operator+=(const PadicNumber &b) { return *this = *this + b; }
  PadicNumber &operator-=(const PadicNumber &b) { return *this = *this - b; }
  PadicNumber &operator*=(const PadicNumber &b) { return *this = *this * b; }
  PadicNumber &operator/=(const PadicNumber &b) { return *this = *this / b; }

  /// Structural identity: same valuation, digits and known precision.
  friend bool identical(const PadicNumber &a, const PadicNumber &b);

private:
  PadicNumber(const PrimeContext &ctx, bool zero, int val, mpz_class unit,
              int prec)
      : ctx_(ctx), zero_(zero), val_(val), unit_(std::move(unit)),
        prec_(prec) {}

  PrimeContext ctx_;
  bool zero_ = true;
  int val_ = 0;
  mpz_class unit_;
  int prec_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

PadicNumber arith(ArithOp op, const PadicNumber &a, const PadicNumber &b);

/// num/den to ctx.precision() significant digits. Throws ZeroDenominator.
PadicNumber from_rational(const mpz_class &num, const mpz_class &den,
                          const PrimeContext &ctx);
PadicNumber from_integer(const mpz_class &n, const PrimeContext &ctx);
inline PadicNumber from_integer(long n, const PrimeContext &ctx) {
  return from_integer(mpz_class(n), ctx);
}

/// p^k as a value with ctx.precision() significant digits.
PadicNumber power_of_p(int k, const PrimeContext &ctx);

/// Canonical square root: the root whose leading digit is <= (p-1)/2.
/// Throws NonSquare for odd valuation or non-residue leading digit;
/// a zero input returns zero.
PadicNumber sqrt(const PadicNumber &a);

/// |a|_p = p^-v as a double; 0 for zero.
double abs(const PadicNumber &a);

/// a == b modulo p^min(m_a, m_b).
bool agrees(const PadicNumber &a, const PadicNumber &b);
/// Known precision of a - b measured from min(0, v(a), v(b)).
int agreement_digits(const PadicNumber &a, const PadicNumber &b);

/// Canonical literal, e.g. "3 + 2*7 + O(7^2)"; zero renders as "O(7^m)".
std::string format(const PadicNumber &a);
/// Parses the canonical literal grammar. Throws ParseError with position.
PadicNumber parse(std::string_view text, const PrimeContext &ctx);

namespace detail {
mpz_class pow_p(std::int64_t p, int k);
/// Largest k with p^k | n (n != 0); n is divided by p^k in place.
int remove_p(mpz_class &n, std::int64_t p);
/// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks);
/// returns -1 when r is a non-residue. r must be reduced and nonzero.
std::int64_t sqrt_mod_prime(std::int64_t r, std::int64_t p);
} // namespace detail

} // namespace padic
