#pragma once

#include <string_view>

#include "padic/mat2.hpp"
#include "padic/padic_number.hpp"
#include "padic/qpi.hpp"

namespace padic {

/// Disks of convergence. Membership depends on the valuation only:
///   ExpDisk      |x|_p <= p^-1  (|x| < p^(-1/(p-1)) for odd p)
///   LogDisk      |x|_p <  1
///   BinomialDisk |x|_p <  1
/// All three reduce to v(x) >= 1 for odd p.
enum class ConvergenceDomain { ExpDisk, LogDisk, BinomialDisk };

std::string_view to_string(ConvergenceDomain d);

template <class T> bool in_domain(ConvergenceDomain, const T &x) {
  return x.valuation_floor() >= 1;
}

namespace detail {
/// Lower bound on v(x^k / k!) over all k >= n when v(x) >= v:
/// n*v - floor((n-1)/(p-1)), using v_p(k!) <= (k-1)/(p-1).
int exp_tail_floor(long n, int v, std::int64_t p);
/// Lower bound on v(x^k / k) over all k >= n: n*v - floor(log_p n).
int log_tail_floor(long n, int v, std::int64_t p);
} // namespace detail

// Series are summed until the tail bound reaches the precision already
// carried by the partial sum; the result's known precision is therefore
// honest. Instantiated for PadicNumber and QpiElement.

/// Throws DomainError outside ExpDisk.
template <class T> T exp(const T &x);
/// log(y) with y = 1 + x, x in LogDisk. Throws DomainError.
template <class T> T log(const T &y);

template <class T> struct Trig {
  T sin, cos, tan;
};
/// Throws DomainError outside ExpDisk.
template <class T> Trig<T> sin_cos_tan(const T &x);

/// sum_n binom(alpha, n) x^n with v(alpha) >= 0, x in BinomialDisk.
template <class T> T binomial_series(const PadicNumber &alpha, const T &x);

/// sum_n X^n / n! for a matrix with every entry in ExpDisk.
template <class T> Mat2<T> matrix_exp(const Mat2<T> &x);

/// (1/2i) log((1 + ix)/(1 - ix)), v(x) >= 1.
QpiElement arctan(const QpiElement &x);
/// (1/i) log(ix + sqrt(1 - x^2)), v(x) >= 1.
QpiElement arcsin(const QpiElement &x);

} // namespace padic
