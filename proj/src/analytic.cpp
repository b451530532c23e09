#include "padic/analytic.hpp"

#include "padic/error.hpp"

namespace padic {

std::string_view to_string(ConvergenceDomain d) {
  switch (d) {
  case ConvergenceDomain::ExpDisk: return "EXP_DISK {|x|_p <= p^-1}";
  case ConvergenceDomain::LogDisk: return "LOG_DISK {|x|_p < 1}";
  case ConvergenceDomain::BinomialDisk: return "BINOMIAL_DISK {|x|_p < 1}";
  }
  return "?";
}

namespace detail {

int exp_tail_floor(long n, int v, std::int64_t p) {
  return static_cast<int>(n * v - (n - 1) / (p - 1));
}

int log_tail_floor(long n, int v, std::int64_t p) {
  int lg = 0;
  for (long q = n; q >= p; q /= p)
    ++lg;
  return static_cast<int>(n * v - lg);
}

} // namespace detail

namespace {

template <class T>
void require_domain(ConvergenceDomain d, const T &x, const char *fn) {
  if (!in_domain(d, x))
    throw Error(ErrorKind::DomainError,
                std::string(fn) + " argument has valuation " +
                    std::to_string(x.valuation()) + ", outside " +
                    std::string(to_string(d)));
}

template <class T> const T &require_digit(const T &value, const char *fn) {
  if (value.known_precision() < 1)
    throw Error(ErrorKind::PrecisionExhausted,
                std::string(fn) + " result carries no certified digit");
  return value;
}

PadicNumber integer(long n, const PrimeContext &ctx) {
  return from_integer(n, ctx);
}

} // namespace

template <class T> T exp(const T &x) {
  require_domain(ConvergenceDomain::ExpDisk, x, "exp");
  const PrimeContext &ctx = x.context();
  const int v = x.valuation_floor();
  T sum = T::one(ctx);
  T term = sum;
  for (long n = 1; detail::exp_tail_floor(n, v, ctx.p()) < sum.known_precision();
       ++n) {
    term = term * x / integer(n, ctx);
    sum += term;
  }
  return require_digit(sum, "exp");
}

template <class T> T log(const T &y) {
  const PrimeContext &ctx = y.context();
  const T x = y - T::one(ctx);
  require_domain(ConvergenceDomain::LogDisk, x, "log(1 + x)");
  const int v = x.valuation_floor();
  T sum = x;
  T power = x;
  for (long n = 2; detail::log_tail_floor(n, v, ctx.p()) < sum.known_precision();
       ++n) {
    power = power * x;
    const T term = power / integer(n, ctx);
    if (n % 2 == 0)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

template <class T> Trig<T> sin_cos_tan(const T &x) {
  require_domain(ConvergenceDomain::ExpDisk, x, "sin/cos");
  const PrimeContext &ctx = x.context();
  const std::int64_t p = ctx.p();
  const int v = x.valuation_floor();
  const T x2 = x * x;

  T sin = x;
  T term = x;
  for (long k = 1; detail::exp_tail_floor(2 * k + 1, v, p) < sin.known_precision();
       ++k) {
    term = -(term * x2) / integer((2 * k) * (2 * k + 1), ctx);
    sin += term;
  }

  T cos = T::one(ctx);
  term = cos;
  for (long k = 1; detail::exp_tail_floor(2 * k, v, p) < cos.known_precision();
       ++k) {
    term = -(term * x2) / integer((2 * k - 1) * (2 * k), ctx);
    cos += term;
  }
  require_digit(cos, "cos");
  // cos is a unit on the disk, so the quotient is safe.
  T tan = sin / cos;
  return {std::move(sin), std::move(cos), std::move(tan)};
}

template <class T> T binomial_series(const PadicNumber &alpha, const T &x) {
  if (alpha.valuation_floor() < 0)
    throw Error(ErrorKind::DomainError,
                "binomial exponent must be a p-adic integer, got valuation " +
                    std::to_string(alpha.valuation()));
  require_domain(ConvergenceDomain::BinomialDisk, x, "binomial series");
  const PrimeContext &ctx = x.context();
  const int v = x.valuation_floor();
  T sum = T::one(ctx);
  T power = sum;
  PadicNumber coeff = PadicNumber::one(ctx);
  // binom(alpha, n) lies in Z_p, so v(term_n) >= n v.
  for (long n = 1; n * v < sum.known_precision(); ++n) {
    coeff = coeff * (alpha - integer(n - 1, ctx)) / integer(n, ctx);
    power = power * x;
    sum += power * coeff;
  }
  return sum;
}

template <class T> Mat2<T> matrix_exp(const Mat2<T> &x) {
  if (x.valuation_floor() < 1)
    throw Error(ErrorKind::DomainError,
                "matrix_exp needs every entry in " +
                    std::string(to_string(ConvergenceDomain::ExpDisk)));
  const PrimeContext &ctx = x.context();
  const int v = x.valuation_floor();
  Mat2<T> sum = Mat2<T>::identity(ctx);
  Mat2<T> term = sum;
  for (long n = 1; detail::exp_tail_floor(n, v, ctx.p()) < sum.known_precision();
       ++n) {
    term = term * x / integer(n, ctx);
    sum = sum + term;
  }
  return require_digit(sum, "matrix_exp");
}

QpiElement arctan(const QpiElement &x) {
  require_domain(ConvergenceDomain::ExpDisk, x, "arctan");
  const PrimeContext &ctx = x.context();
  const QpiElement one = QpiElement::one(ctx);
  const QpiElement ix = QpiElement::i(ctx) * x;
  const QpiElement l = log((one + ix) / (one - ix));
  // 1/(2i) = -i/2
  return -(QpiElement::i(ctx) * l) / integer(2, ctx);
}

QpiElement arcsin(const QpiElement &x) {
  require_domain(ConvergenceDomain::LogDisk, x, "arcsin");
  const PrimeContext &ctx = x.context();
  const QpiElement root = sqrt(QpiElement::one(ctx) - x * x);
  const QpiElement l = log(QpiElement::i(ctx) * x + root);
  return -(QpiElement::i(ctx) * l);
}

template PadicNumber exp(const PadicNumber &);
template QpiElement exp(const QpiElement &);
template PadicNumber log(const PadicNumber &);
template QpiElement log(const QpiElement &);
template Trig<PadicNumber> sin_cos_tan(const PadicNumber &);
template Trig<QpiElement> sin_cos_tan(const QpiElement &);
template PadicNumber binomial_series(const PadicNumber &, const PadicNumber &);
template QpiElement binomial_series(const PadicNumber &, const QpiElement &);
template Mat2<PadicNumber> matrix_exp(const Mat2<PadicNumber> &);
template Mat2<QpiElement> matrix_exp(const Mat2<QpiElement> &);

} // namespace padic
