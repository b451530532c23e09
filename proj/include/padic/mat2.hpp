#pragma once

#include <algorithm>

#include "padic/context.hpp"

namespace padic {

/// Dense 2x2 matrix over an exact scalar (PadicNumber, QpiElement).
/// Scalars carry their context, so there is no default constructor; build
/// zero / identity from a PrimeContext.
template <class T> struct Mat2 {
  T m11, m12, m21, m22;

  static Mat2 identity(const PrimeContext &ctx) {
    return {T::one(ctx), T::zero(ctx), T::zero(ctx), T::one(ctx)};
  }
  static Mat2 zero(const PrimeContext &ctx) {
    return {T::zero(ctx), T::zero(ctx), T::zero(ctx), T::zero(ctx)};
  }
  static Mat2 diagonal(const T &a, const T &d) {
    const PrimeContext &ctx = a.context();
    return {a, T::zero(ctx), T::zero(ctx), d};
  }

  const PrimeContext &context() const { return m11.context(); }

  int known_precision() const {
    return std::min({m11.known_precision(), m12.known_precision(),
                     m21.known_precision(), m22.known_precision()});
  }
  int valuation_floor() const {
    return std::min({m11.valuation_floor(), m12.valuation_floor(),
                     m21.valuation_floor(), m22.valuation_floor()});
  }

  Mat2 operator-() const { return {-m11, -m12, -m21, -m22}; }
};

template <class T> Mat2<T> operator+(const Mat2<T> &a, const Mat2<T> &b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

template <class T> Mat2<T> operator-(const Mat2<T> &a, const Mat2<T> &b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

template <class T> Mat2<T> operator*(const Mat2<T> &a, const Mat2<T> &b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

template <class T, class S> Mat2<T> operator*(const Mat2<T> &a, const S &s) {
  return {a.m11 * s, a.m12 * s, a.m21 * s, a.m22 * s};
}

template <class T, class S> Mat2<T> operator*(const S &s, const Mat2<T> &a) {
  return a * s;
}

template <class T, class S> Mat2<T> operator/(const Mat2<T> &a, const S &s) {
  return {a.m11 / s, a.m12 / s, a.m21 / s, a.m22 / s};
}

template <class T> T trace(const Mat2<T> &a) { return a.m11 + a.m22; }

template <class T> T det(const Mat2<T> &a) {
  return a.m11 * a.m22 - a.m12 * a.m21;
}

template <class T> Mat2<T> adjugate(const Mat2<T> &a) {
  return {a.m22, -a.m12, -a.m21, a.m11};
}

/// Throws DivisionByZero for a singular matrix.
template <class T> Mat2<T> inverse(const Mat2<T> &a) {
  return adjugate(a) / det(a);
}

template <class T> bool agrees(const Mat2<T> &a, const Mat2<T> &b) {
  return agrees(a.m11, b.m11) && agrees(a.m12, b.m12) &&
         agrees(a.m21, b.m21) && agrees(a.m22, b.m22);
}

template <class T> int agreement_digits(const Mat2<T> &a, const Mat2<T> &b) {
  return std::min({agreement_digits(a.m11, b.m11),
                   agreement_digits(a.m12, b.m12),
                   agreement_digits(a.m21, b.m21),
                   agreement_digits(a.m22, b.m22)});
}

} // namespace padic
