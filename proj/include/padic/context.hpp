#pragma once

#include <cstdint>

namespace padic {

/// An odd prime together with the number of significant base-p digits that
/// freshly constructed values carry. Plain value type, passed explicitly.
class PrimeContext {
public:
  /// Throws NotPrime for composite / p < 3 and InvalidContext for precision < 1.
  PrimeContext(std::int64_t p, int precision);

  std::int64_t p() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }

  /// True when -1 is a non-residue, i.e. Qp(i) is a quadratic field.
  bool admits_i() const noexcept { return p_ % 4 == 3; }

  /// Throws WrongPrimeClass unless p = 3 (mod 4).
  void require_i() const;

  friend bool operator==(const PrimeContext &, const PrimeContext &) = default;

private:
  std::int64_t p_;
  int precision_;
};

bool is_prime(std::int64_t n);

} // namespace padic
