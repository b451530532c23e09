#include "padic/padic_number.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "padic/error.hpp"

namespace padic {

namespace detail {

mpz_class pow_p(std::int64_t p, int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(std::max(k, 0)));
  return r;
}

int remove_p(mpz_class &n, std::int64_t p) {
  mpz_class pp(static_cast<unsigned long>(p));
  return static_cast<int>(
      mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

namespace {
mpz_class mod(const mpz_class &a, const mpz_class &m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}
mpz_class powm(const mpz_class &b, const mpz_class &e, const mpz_class &m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}
} // namespace

std::int64_t sqrt_mod_prime(std::int64_t r, std::int64_t p) {
  const mpz_class P(static_cast<unsigned long>(p));
  const mpz_class a(static_cast<unsigned long>(r));
  if (mpz_legendre(a.get_mpz_t(), P.get_mpz_t()) != 1)
    return -1;
  // p - 1 = q * 2^s with q odd
  mpz_class q = P - 1;
  int s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  if (s == 1)
    return powm(a, (P + 1) / 4, P).get_si();
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), P.get_mpz_t()) != -1)
    ++z;
  mpz_class c = powm(z, q, P);
  mpz_class x = powm(a, (q + 1) / 2, P);
  mpz_class t = powm(a, q, P);
  int m = s;
  while (t != 1) {
    int i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, P);
      ++i;
    }
    mpz_class b = c;
    for (int j = 0; j < m - i - 1; ++j)
      b = mod(b * b, P);
    x = mod(x * b, P);
    c = mod(b * b, P);
    t = mod(t * c, P);
    m = i;
  }
  return x.get_si();
}

} // namespace detail

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

void require_same_prime(const PadicNumber &a, const PadicNumber &b) {
  if (a.prime() != b.prime())
    throw Error(ErrorKind::ContextMismatch,
                "operands belong to Q_" + std::to_string(a.prime()) +
                    " and Q_" + std::to_string(b.prime()));
}

} // namespace

PadicNumber PadicNumber::zero(const PrimeContext &ctx) {
  return zero(ctx, ctx.precision());
}

PadicNumber PadicNumber::zero(const PrimeContext &ctx, int known_precision) {
  return PadicNumber(ctx, true, 0, mpz_class(0), known_precision);
}

PadicNumber PadicNumber::one(const PrimeContext &ctx) {
  return PadicNumber(ctx, false, 0, mpz_class(1), ctx.precision());
}

PadicNumber PadicNumber::from_unit(const PrimeContext &ctx, int valuation,
                                   mpz_class unit, int known_precision) {
  if (known_precision <= valuation)
    return zero(ctx, known_precision);
  unit = mod(unit, pow_p(ctx.p(), known_precision - valuation));
  if (unit == 0)
    return zero(ctx, known_precision);
  int extra = detail::remove_p(unit, ctx.p());
  return PadicNumber(ctx, false, valuation + extra, std::move(unit),
                     known_precision);
}

PadicNumber PadicNumber::from_digits(const PrimeContext &ctx, int valuation,
                                     std::span<const std::int64_t> digits,
                                     int known_precision) {
  mpz_class u = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    u = u * static_cast<unsigned long>(ctx.p()) + static_cast<long>(*it);
  return from_unit(ctx, valuation, std::move(u), known_precision);
}

std::vector<std::int64_t> PadicNumber::digits() const {
  std::vector<std::int64_t> out;
  if (zero_)
    return out;
  mpz_class u = unit_;
  const mpz_class pp(static_cast<unsigned long>(ctx_.p()));
  out.reserve(static_cast<std::size_t>(prec_ - val_));
  for (int i = 0; i < prec_ - val_; ++i) {
    mpz_class r;
    mpz_fdiv_qr(u.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t());
    out.push_back(r.get_si());
  }
  return out;
}

std::int64_t PadicNumber::digit_at(int power) const {
  if (power >= prec_)
    throw Error(ErrorKind::PrecisionExhausted,
                "digit at p^" + std::to_string(power) +
                    " is beyond the known precision " + std::to_string(prec_));
  if (zero_ || power < val_)
    return 0;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), unit_.get_mpz_t(),
             pow_p(ctx_.p(), power - val_).get_mpz_t());
  return mod(q, mpz_class(static_cast<unsigned long>(ctx_.p()))).get_si();
}

PadicNumber PadicNumber::truncated(int known_precision) const {
  if (known_precision >= prec_)
    return *this;
  if (zero_)
    return zero(ctx_, known_precision);
  return from_unit(ctx_, val_, unit_, known_precision);
}

const PadicNumber &PadicNumber::require_precision(int m) const {
  if (prec_ < m)
    throw Error(ErrorKind::PrecisionExhausted,
                "value known only modulo p^" + std::to_string(prec_) +
                    ", p^" + std::to_string(m) + " required");
  return *this;
}

PadicNumber PadicNumber::operator-() const {
  if (zero_)
    return *this;
  mpz_class neg = pow_p(ctx_.p(), prec_ - val_) - unit_;
  return PadicNumber(ctx_, false, val_, std::move(neg), prec_);
}

PadicNumber operator+(const PadicNumber &a, const PadicNumber &b) {
  require_same_prime(a, b);
  const int m = std::min(a.prec_, b.prec_);
  if (a.zero_)
    return b.truncated(m);
  if (b.zero_)
    return a.truncated(m);
  const int v = std::min(a.val_, b.val_);
  if (m <= v)
    return PadicNumber::zero(a.ctx_, m);
  const std::int64_t p = a.prime();
  mpz_class sum = a.unit_ * pow_p(p, a.val_ - v) + b.unit_ * pow_p(p, b.val_ - v);
  return PadicNumber::from_unit(a.ctx_, v, std::move(sum), m);
}

PadicNumber operator-(const PadicNumber &a, const PadicNumber &b) {
  return a + (-b);
}

PadicNumber operator*(const PadicNumber &a, const PadicNumber &b) {
  require_same_prime(a, b);
  if (a.zero_ && b.zero_)
    return PadicNumber::zero(a.ctx_, a.prec_ + b.prec_);
  if (a.zero_)
    return PadicNumber::zero(a.ctx_, a.prec_ + b.val_);
  if (b.zero_)
    return PadicNumber::zero(a.ctx_, b.prec_ + a.val_);
  const int v = a.val_ + b.val_;
  const int r = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
  mpz_class u = mod(a.unit_ * b.unit_, pow_p(a.prime(), r));
  return PadicNumber(a.ctx_, false, v, std::move(u), v + r);
}

PadicNumber operator/(const PadicNumber &a, const PadicNumber &b) {
  require_same_prime(a, b);
  if (b.zero_)
    throw Error(ErrorKind::DivisionByZero,
                "divisor is zero modulo p^" + std::to_string(b.prec_));
  if (a.zero_)
    return PadicNumber::zero(a.ctx_, a.prec_ - b.val_);
  const int v = a.val_ - b.val_;
  const int r = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
  const mpz_class M = pow_p(a.prime(), r);
  mpz_class u = mod(a.unit_ * inverse_mod(b.unit_, M), M);
  return PadicNumber(a.ctx_, false, v, std::move(u), v + r);
}

bool identical(const PadicNumber &a, const PadicNumber &b) {
  return a.prime() == b.prime() && a.zero_ == b.zero_ && a.prec_ == b.prec_ &&
         (a.zero_ || (a.val_ == b.val_ && a.unit_ == b.unit_));
}

PadicNumber arith(ArithOp op, const PadicNumber &a, const PadicNumber &b) {
  switch (op) {
  case ArithOp::Add: return a + b;
  case ArithOp::Sub: return a - b;
  case ArithOp::Mul: return a * b;
  case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::DomainError, "unknown operation");
}

PadicNumber from_rational(const mpz_class &num, const mpz_class &den,
                          const PrimeContext &ctx) {
  if (den == 0)
    throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  if (num == 0)
    return PadicNumber::zero(ctx);
  mpz_class n = num, d = den;
  const int v = detail::remove_p(n, ctx.p()) - detail::remove_p(d, ctx.p());
  const mpz_class M = pow_p(ctx.p(), ctx.precision());
  mpz_class u = mod(n * inverse_mod(mod(d, M), M), M);
  return PadicNumber::from_unit(ctx, v, std::move(u), v + ctx.precision());
}

PadicNumber from_integer(const mpz_class &n, const PrimeContext &ctx) {
  return from_rational(n, mpz_class(1), ctx);
}

PadicNumber power_of_p(int k, const PrimeContext &ctx) {
  return PadicNumber::from_unit(ctx, k, mpz_class(1), k + ctx.precision());
}

PadicNumber sqrt(const PadicNumber &a) {
  const PrimeContext &ctx = a.context();
  const std::int64_t p = ctx.p();
  if (a.is_zero())
    return PadicNumber::zero(ctx, (a.known_precision() + 1) / 2);
  const int v = a.valuation();
  if (v % 2 != 0)
    throw Error(ErrorKind::NonSquare,
                "odd valuation " + std::to_string(v) + " has no square root");
  const int r = a.relative_precision();
  const mpz_class pp(static_cast<unsigned long>(p));
  const std::int64_t lead = mod(a.unit(), pp).get_si();
  std::int64_t root = detail::sqrt_mod_prime(lead, p);
  if (root < 0)
    throw Error(ErrorKind::NonSquare, "leading digit " + std::to_string(lead) +
                                          " is not a square mod " +
                                          std::to_string(p));
  root = std::min(root, p - root);
  // Newton: s <- s - (s^2 - u) / (2 s), doubling the known digits each step.
  mpz_class s(static_cast<long>(root));
  for (int k = 1; k < r;) {
    k = std::min(2 * k, r);
    const mpz_class M = pow_p(p, k);
    s = mod(s - (s * s - a.unit()) * inverse_mod(2 * s, M), M);
  }
  return PadicNumber::from_unit(ctx, v / 2, std::move(s), v / 2 + r);
}

double abs(const PadicNumber &a) {
  if (a.is_zero())
    return 0.0;
  return std::pow(static_cast<double>(a.prime()), -a.valuation());
}

bool agrees(const PadicNumber &a, const PadicNumber &b) {
  return (a - b).is_zero();
}

int agreement_digits(const PadicNumber &a, const PadicNumber &b) {
  const PadicNumber d = a - b;
  const int floor = std::min({0, a.valuation_floor(), b.valuation_floor()});
  return d.known_precision() - floor;
}

std::string format(const PadicNumber &a) {
  const std::string p = std::to_string(a.prime());
  std::ostringstream out;
  if (!a.is_zero()) {
    const auto ds = a.digits();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds[i] == 0)
        continue;
      const int k = a.valuation() + static_cast<int>(i);
      out << ds[i];
      if (k == 1)
        out << '*' << p;
      else if (k != 0)
        out << '*' << p << '^' << k;
      out << " + ";
    }
  }
  out << "O(" << p << '^' << a.known_precision() << ')';
  return out.str();
}

namespace {

class LiteralParser {
public:
  LiteralParser(std::string_view text, const PrimeContext &ctx)
      : text_(text), ctx_(ctx) {}

  PadicNumber run() {
    struct Term {
      std::int64_t digit;
      int power;
      std::size_t at;
    };
    std::vector<Term> terms;
    skip_ws();
    while (!at_big_o()) {
      const std::size_t at = pos_;
      const mpz_class d = integer();
      int power = 0;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        expect_prime();
        power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          power = signed_int();
        }
      }
      if (d <= 0 || d >= ctx_.p())
        throw ParseError(at, "digit must lie in [1, p-1]");
      if (!terms.empty() && power <= terms.back().power)
        throw ParseError(at, "powers must be strictly ascending");
      terms.push_back({d.get_si(), power, at});
      skip_ws();
      expect('+');
      skip_ws();
    }
    expect('O');
    skip_ws();
    expect('(');
    skip_ws();
    expect_prime();
    skip_ws();
    expect('^');
    skip_ws();
    const int m = signed_int();
    skip_ws();
    expect(')');
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "trailing characters");
    if (terms.empty())
      return PadicNumber::zero(ctx_, m);
    if (terms.back().power >= m)
      throw ParseError(terms.back().at, "term at or beyond the O(p^m) bound");
    const int v = terms.front().power;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(m - v), 0);
    for (const Term &t : terms)
      digits[static_cast<std::size_t>(t.power - v)] = t.digit;
    return PadicNumber::from_digits(ctx_, v, digits, m);
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_big_o() const { return peek() == 'O'; }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (pos_ == start)
      throw ParseError(start, "expected a digit");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  int signed_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t at = pos_;
    const mpz_class n = integer();
    if (!n.fits_sint_p())
      throw ParseError(at, "exponent out of range");
    return neg ? -static_cast<int>(n.get_si()) : static_cast<int>(n.get_si());
  }
  void expect_prime() {
    const std::size_t at = pos_;
    const mpz_class q = integer();
    if (q != ctx_.p())
      throw ParseError(at, "literal prime differs from context prime " +
                               std::to_string(ctx_.p()));
  }

  std::string_view text_;
  const PrimeContext &ctx_;
  std::size_t pos_ = 0;
};

} // namespace

PadicNumber parse(std::string_view text, const PrimeContext &ctx) {
  return LiteralParser(text, ctx).run();
}

} // namespace padic
