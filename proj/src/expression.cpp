#include "padic/expression.hpp"

#include <cctype>
#include <string>
#include <type_traits>

#include "padic/error.hpp"

namespace padic {

namespace {

template <class T> class Evaluator {
public:
  Evaluator(std::string_view text, const PrimeContext &ctx)
      : text_(text), ctx_(ctx) {}

  T run() {
    T value = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected character '" +
                                 std::string(1, text_[pos_]) + "'");
    return value;
  }

private:
  T expr() {
    T value = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        value = value + term();
      else if (accept('-'))
        value = value - term();
      else
        return value;
    }
  }

  T term() {
    T value = unary();
    for (;;) {
      skip_ws();
      if (accept('*'))
        value = value * unary();
      else if (accept('/'))
        value = value / unary();
      else
        return value;
    }
  }

  T unary() {
    skip_ws();
    if (accept('-'))
      return -unary();
    return power();
  }

  T power() {
    T base = primary();
    skip_ws();
    if (!accept('^'))
      return base;
    const int k = signed_int();
    T result = T::one(ctx_);
    for (int j = 0; j < (k < 0 ? -k : k); ++j)
      result = result * base;
    return k < 0 ? T::one(ctx_) / result : result;
  }

  T primary() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return lift(from_integer(integer(), ctx_));
    if (accept('(')) {
      T value = expr();
      skip_ws();
      expect(')');
      return value;
    }
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      T value = expr();
      skip_ws();
      expect(')');
      return sqrt(value);
    }
    if (accept('O')) {
      skip_ws();
      expect('(');
      skip_ws();
      const std::size_t pat = pos_;
      if (integer() != ctx_.p())
        throw ParseError(pat, "O() base must be the context prime");
      skip_ws();
      expect('^');
      const int m = signed_int();
      skip_ws();
      expect(')');
      return lift(PadicNumber::zero(ctx_, m));
    }
    if (accept('i')) {
      if constexpr (std::is_same_v<T, QpiElement>)
        return QpiElement::i(ctx_);
      else
        throw Error(ErrorKind::WrongPrimeClass,
                    "'i' needs p = 3 (mod 4) at position " +
                        std::to_string(at));
    }
    throw ParseError(at, c == '\0' ? "unexpected end of input"
                                   : "unexpected character '" +
                                         std::string(1, c) + "'");
  }

  T lift(const PadicNumber &x) const {
    if constexpr (std::is_same_v<T, QpiElement>)
      return QpiElement(x);
    else
      return x;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      throw ParseError(start, "expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  int signed_int() {
    skip_ws();
    const bool neg = accept('-');
    const std::size_t at = pos_;
    const mpz_class n = integer();
    if (!n.fits_sint_p() || abs(n) > 100000)
      throw ParseError(at, "exponent out of range");
    return neg ? -static_cast<int>(n.get_si()) : static_cast<int>(n.get_si());
  }

  std::string_view text_;
  const PrimeContext &ctx_;
  std::size_t pos_ = 0;
};

} // namespace

template <class T> T evaluate(std::string_view text, const PrimeContext &ctx) {
  if constexpr (std::is_same_v<T, QpiElement>)
    ctx.require_i();
  return Evaluator<T>(text, ctx).run();
}

template <class T>
T parse_operand(std::string_view text, const PrimeContext &ctx) {
  try {
    if constexpr (std::is_same_v<T, QpiElement>) {
      try {
        return parse_qpi(text, ctx);
      } catch (const ParseError &) {
        return QpiElement(parse(text, ctx));
      }
    } else {
      return parse(text, ctx);
    }
  } catch (const ParseError &) {
    return evaluate<T>(text, ctx);
  }
}

template PadicNumber evaluate(std::string_view, const PrimeContext &);
template QpiElement evaluate(std::string_view, const PrimeContext &);
template PadicNumber parse_operand(std::string_view, const PrimeContext &);
template QpiElement parse_operand(std::string_view, const PrimeContext &);

} // namespace padic
