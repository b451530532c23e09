#include "padic/qpi.hpp"

#include <algorithm>
#include <cmath>

#include "padic/error.hpp"

namespace padic {

using detail::pow_p;

namespace {

mpz_class mod(const mpz_class &a, const mpz_class &m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class &a, const mpz_class &m) {
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Gaussian integer modulo p^k.
struct GaussMod {
  mpz_class re, im;
};

GaussMod mul(const GaussMod &a, const GaussMod &b, const mpz_class &M) {
  return {mod(a.re * b.re - a.im * b.im, M), mod(a.re * b.im + a.im * b.re, M)};
}

GaussMod inverse(const GaussMod &a, const mpz_class &M) {
  const mpz_class n = inverse_mod(mod(a.re * a.re + a.im * a.im, M), M);
  return {mod(a.re * n, M), mod(-a.im * n, M)};
}

// Integer x with x = c / p^v (mod p^r), c a component of valuation >= v.
mpz_class scaled_component(const PadicNumber &c, int v, int r) {
  if (c.is_zero() || c.valuation() >= v + r)
    return 0;
  return mod(c.unit() * pow_p(c.prime(), c.valuation() - v),
             pow_p(c.prime(), r));
}

std::int64_t mod_p(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return mod(mpz_class(static_cast<long>(a)) * static_cast<long>(b),
             mpz_class(static_cast<long>(p)))
      .get_si();
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  return inverse_mod(mpz_class(static_cast<long>(a)),
                     mpz_class(static_cast<long>(p)))
      .get_si();
}

} // namespace

QpiElement::QpiElement(PadicNumber re, PadicNumber im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.context().require_i();
  if (re_.prime() != im_.prime())
    throw Error(ErrorKind::ContextMismatch, "components use different primes");
}

QpiElement::QpiElement(const PadicNumber &re)
    : QpiElement(re, PadicNumber::zero(re.context(), re.known_precision())) {}

QpiElement QpiElement::zero(const PrimeContext &ctx) {
  return {PadicNumber::zero(ctx), PadicNumber::zero(ctx)};
}

QpiElement QpiElement::one(const PrimeContext &ctx) {
  return {PadicNumber::one(ctx), PadicNumber::zero(ctx)};
}

QpiElement QpiElement::i(const PrimeContext &ctx) {
  return {PadicNumber::zero(ctx), PadicNumber::one(ctx)};
}

int QpiElement::valuation() const noexcept {
  return std::min(re_.valuation(), im_.valuation());
}

int QpiElement::known_precision() const noexcept {
  return std::min(re_.known_precision(), im_.known_precision());
}

int QpiElement::valuation_floor() const noexcept {
  return std::min(re_.valuation_floor(), im_.valuation_floor());
}

QpiElement operator+(const QpiElement &a, const QpiElement &b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

QpiElement operator-(const QpiElement &a, const QpiElement &b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

QpiElement operator*(const QpiElement &a, const QpiElement &b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

QpiElement operator/(const QpiElement &a, const QpiElement &b) {
  if (b.is_zero())
    throw Error(ErrorKind::DivisionByZero,
                "divisor is zero modulo p^" +
                    std::to_string(b.known_precision()));
  const PadicNumber n = norm(b);
  return (a * conj(b)) / n;
}

QpiElement operator*(const QpiElement &a, const PadicNumber &s) {
  return {a.re_ * s, a.im_ * s};
}

QpiElement operator*(const PadicNumber &s, const QpiElement &a) { return a * s; }

QpiElement operator/(const QpiElement &a, const PadicNumber &s) {
  return {a.re_ / s, a.im_ / s};
}

QpiElement ext_arith(ArithOp op, const QpiElement &a, const QpiElement &b) {
  switch (op) {
  case ArithOp::Add: return a + b;
  case ArithOp::Sub: return a - b;
  case ArithOp::Mul: return a * b;
  case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::DomainError, "unknown operation");
}

QpiElement conj(const QpiElement &z) { return {z.re(), -z.im()}; }

PadicNumber norm(const QpiElement &z) {
  return z.re() * z.re() + z.im() * z.im();
}

NormAbs norm_abs(const QpiElement &z) { return {norm(z), z.valuation()}; }

double abs(const QpiElement &z) {
  if (z.is_zero())
    return 0.0;
  return std::pow(static_cast<double>(z.prime()), -z.valuation());
}

QpiElement sqrt(const QpiElement &z) {
  const PrimeContext &ctx = z.context();
  const std::int64_t p = ctx.p();
  if (z.is_zero()) {
    const PadicNumber zr = PadicNumber::zero(ctx, (z.known_precision() + 1) / 2);
    return {zr, zr};
  }
  const int v = z.valuation();
  if (v % 2 != 0)
    throw Error(ErrorKind::NonSquare,
                "odd valuation " + std::to_string(v) + " has no square root");
  const int r = z.known_precision() - v;
  const GaussMod u{scaled_component(z.re(), v, r),
                   scaled_component(z.im(), v, r)};
  const mpz_class P(static_cast<long>(p));
  const std::int64_t x0 = mod(u.re, P).get_si();
  const std::int64_t y0 = mod(u.im, P).get_si();

  // Residue square root in F_{p^2}.
  std::int64_t s0 = -1, t0 = 0;
  if (y0 == 0) {
    s0 = detail::sqrt_mod_prime(x0, p);
    if (s0 < 0) {
      s0 = 0;
      t0 = detail::sqrt_mod_prime(mod_p(-x0, p), p);
    }
  } else {
    const std::int64_t nrm = mod_p(mulmod(x0, x0, p) + mulmod(y0, y0, p), p);
    const std::int64_t n = detail::sqrt_mod_prime(nrm, p);
    if (n < 0)
      throw Error(ErrorKind::NonSquare, "residue norm is not a square mod " +
                                            std::to_string(p));
    const std::int64_t half = invmod(2, p);
    for (std::int64_t sign : {1, -1}) {
      const std::int64_t h = mulmod(mod_p(x0 + sign * n, p), half, p);
      if (h == 0)
        continue;
      const std::int64_t s = detail::sqrt_mod_prime(h, p);
      if (s < 0)
        continue;
      s0 = s;
      t0 = mulmod(y0, invmod(mod_p(2 * s, p), p), p);
      break;
    }
    if (s0 < 0)
      throw Error(ErrorKind::NonSquare, "no square root of the residue");
  }
  const bool flip = s0 != 0 ? s0 > (p - 1) / 2 : t0 > (p - 1) / 2;
  if (flip) {
    s0 = mod_p(-s0, p);
    t0 = mod_p(-t0, p);
  }

  GaussMod s{mpz_class(static_cast<long>(s0)), mpz_class(static_cast<long>(t0))};
  for (int k = 1; k < r;) {
    k = std::min(2 * k, r);
    const mpz_class M = pow_p(p, k);
    const GaussMod sq = mul(s, s, M);
    const GaussMod diff{mod(sq.re - u.re, M), mod(sq.im - u.im, M)};
    const GaussMod step =
        mul(diff, inverse({mod(2 * s.re, M), mod(2 * s.im, M)}, M), M);
    s = {mod(s.re - step.re, M), mod(s.im - step.im, M)};
  }
  return {PadicNumber::from_unit(ctx, v / 2, s.re, v / 2 + r),
          PadicNumber::from_unit(ctx, v / 2, s.im, v / 2 + r)};
}

bool is_real(const QpiElement &z) { return z.im().is_zero(); }

bool agrees(const QpiElement &a, const QpiElement &b) {
  return agrees(a.re(), b.re()) && agrees(a.im(), b.im());
}

int agreement_digits(const QpiElement &a, const QpiElement &b) {
  const QpiElement d = a - b;
  const int floor = std::min({0, a.valuation_floor(), b.valuation_floor()});
  return d.known_precision() - floor;
}

bool identical(const QpiElement &a, const QpiElement &b) {
  return identical(a.re(), b.re()) && identical(a.im(), b.im());
}

std::string format(const QpiElement &z) {
  const bool show_im = !z.im().is_zero();
  const bool show_re = !z.re().is_zero() || !show_im;
  std::string out;
  if (show_re)
    out = "(" + format(z.re()) + ")";
  if (show_re && show_im)
    out += " + ";
  if (show_im)
    out += "(" + format(z.im()) + ")*i";
  return out;
}

namespace {

// Returns the index one past the ')' matching the '(' at `open`.
std::size_t match_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t k = open; k < s.size(); ++k) {
    if (s[k] == '(')
      ++depth;
    else if (s[k] == ')' && --depth == 0)
      return k + 1;
  }
  throw ParseError(open, "unbalanced parenthesis");
}

std::size_t skip_ws(std::string_view s, std::size_t k) {
  while (k < s.size() && (s[k] == ' ' || s[k] == '\t'))
    ++k;
  return k;
}

PadicNumber parse_component(std::string_view s, std::size_t open,
                            std::size_t close, const PrimeContext &ctx) {
  try {
    return parse(s.substr(open + 1, close - open - 2), ctx);
  } catch (const ParseError &e) {
    throw ParseError(open + 1 + e.position(), "in Qp(i) component");
  }
}

} // namespace

QpiElement parse_qpi(std::string_view text, const PrimeContext &ctx) {
  ctx.require_i();
  std::size_t k = skip_ws(text, 0);
  if (k >= text.size() || text[k] != '(')
    throw ParseError(k, "expected '('");
  std::size_t end = match_paren(text, k);
  PadicNumber first = parse_component(text, k, end, ctx);
  k = skip_ws(text, end);
  if (k == text.size()) {
    return QpiElement(first);
  }
  if (text.substr(k, 2) == "*i") {
    k = skip_ws(text, k + 2);
    if (k != text.size())
      throw ParseError(k, "trailing characters");
    return {PadicNumber::zero(ctx, first.known_precision()), first};
  }
  if (text[k] != '+')
    throw ParseError(k, "expected '+' or '*i'");
  k = skip_ws(text, k + 1);
  if (k >= text.size() || text[k] != '(')
    throw ParseError(k, "expected '('");
  end = match_paren(text, k);
  PadicNumber second = parse_component(text, k, end, ctx);
  k = end;
  if (text.substr(k, 2) != "*i")
    throw ParseError(k, "expected '*i'");
  k = skip_ws(text, k + 2);
  if (k != text.size())
    throw ParseError(k, "trailing characters");
  return {first, second};
}

} // namespace padic
