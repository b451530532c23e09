#pragma once

#include <cstdint>
#include <vector>

#include "padic/padic_number.hpp"

namespace testing {

// Digits of x with trailing zeros removed.
inline std::vector<std::int64_t> stripped_digits(const padic::PadicNumber &x) {
  auto d = x.digits();
  while (!d.empty() && d.back() == 0)
    d.pop_back();
  return d;
}

using Digits = std::vector<std::int64_t>;

} // namespace testing
