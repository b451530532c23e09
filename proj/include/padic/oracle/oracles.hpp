#pragma once

// Slow, exact reference implementations used to certify the digit kernel.
// Everything here works on GMP rationals and machine floats only and never
// touches PadicNumber, so agreement with the kernel is independent evidence.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace padic::oracle {

/// re + i im with exact rational parts (always reduced by gmpxx).
struct GaussianRational {
  mpq_class re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(mpq_class r, mpq_class i = 0)
      : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussianRational &,
                         const GaussianRational &) = default;
};

GaussianRational operator+(const GaussianRational &a, const GaussianRational &b);
GaussianRational operator-(const GaussianRational &a, const GaussianRational &b);
GaussianRational operator-(const GaussianRational &a);
GaussianRational operator*(const GaussianRational &a, const GaussianRational &b);
/// Throws padic::Error(ZeroDenominator).
GaussianRational operator/(const GaussianRational &a, const GaussianRational &b);
GaussianRational conj(const GaussianRational &a);

/// v_p of a nonzero rational.
int valuation(const mpq_class &q, std::int64_t p);
/// min over parts; nullopt for zero.
std::optional<int> valuation(const GaussianRational &z, std::int64_t p);

/// Base-p expansion of q modulo p^m: digits at powers valuation ..
/// m-1 with trailing zeros stripped. Zero (or q = 0 mod p^m) yields no
/// digits and an empty valuation.
struct DigitExpansion {
  std::optional<int> valuation;
  std::vector<std::int64_t> digits;

  friend bool operator==(const DigitExpansion &,
                         const DigitExpansion &) = default;
};

/// Schoolbook long division: each digit d solves d * den = r (mod p) by
/// search, then r <- (r - d den) / p.
DigitExpansion rational_to_padic_digits(const mpq_class &q, std::int64_t p,
                                        int m);

/// (a + b) / (1 - conj(a) b) exactly. Throws ZeroDenominator.
GaussianRational gaussian_loop_add(const GaussianRational &a,
                                   const GaussianRational &b);

enum class Series { Exp, Log1p, Sin, Cos, Arctan, Arcsin, Binomial };

/// Exact partial sum of the first `terms` terms:
///   Exp    x^n/n!                    Log1p  (-1)^(n+1) x^n/n, n >= 1
///   Sin    (-1)^k x^(2k+1)/(2k+1)!   Cos    (-1)^k x^(2k)/(2k)!
///   Arctan (-1)^k x^(2k+1)/(2k+1)    Binomial binom(alpha, n) x^n
GaussianRational series_partial_sum(Series s, const GaussianRational &x,
                                    int terms, const mpq_class &alpha = 0);

/// Number of terms after which every omitted term has valuation >= m,
/// for an argument of valuation >= v >= 1. Uses the crude bounds
/// v_p(n!) < n/(p-1) and v_p(n) <= log_p n.
int certified_terms(Series s, int v, std::int64_t p, int m);

/// Partial sums until the expansion modulo p^m is unchanged across
/// `window` further terms; returns the number of terms used.
int stabilization_terms(Series s, const GaussianRational &x, std::int64_t p,
                        int m, int window = 8, const mpq_class &alpha = 0);

/// Archimedean disk loop (a + b)/(1 - conj(a) b). Throws
/// padic::Error(NearPole) when |denominator| < 1e-12.
std::complex<double> complex_float_loop(std::complex<double> a,
                                        std::complex<double> b);

/// Same value through the homogeneous matrix [[1, a], [-conj(a), 1]] (b, 1).
std::complex<double> complex_float_mobius(std::complex<double> a,
                                          std::complex<double> b);

/// (1 - a conj(b)) / (1 - conj(a) b).
std::complex<double> complex_float_deviation(std::complex<double> a,
                                             std::complex<double> b);

} // namespace padic::oracle
