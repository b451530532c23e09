#include "padic/context.hpp"

#include <string>

#include "padic/error.hpp"

namespace padic {

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

PrimeContext::PrimeContext(std::int64_t p, int precision)
    : p_(p), precision_(precision) {
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2)
    throw Error(ErrorKind::NotPrime, "p = 2 is not supported; p must be odd");
  if (precision < 1)
    throw Error(ErrorKind::InvalidContext, "precision must be at least 1");
}

void PrimeContext::require_i() const {
  if (!admits_i())
    throw Error(ErrorKind::WrongPrimeClass,
                std::to_string(p_) +
                    " is not 3 (mod 4); Qp(i) is not a field extension");
}

} // namespace padic
