#include "padic/oracle/oracles.hpp"

#include <cmath>

#include "padic/error.hpp"

namespace padic::oracle {

GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
  const mpq_class n = b.re * b.re + b.im * b.im;
  if (n == 0)
    throw Error(ErrorKind::ZeroDenominator, "Gaussian rational division by 0");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

GaussianRational conj(const GaussianRational &a) { return {a.re, -a.im}; }

namespace {

int strip(mpz_class &n, std::int64_t p) {
  int k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

} // namespace

int valuation(const mpq_class &q, std::int64_t p) {
  mpz_class n = q.get_num(), d = q.get_den();
  return strip(n, p) - strip(d, p);
}

std::optional<int> valuation(const GaussianRational &z, std::int64_t p) {
  std::optional<int> v;
  for (const mpq_class *part : {&z.re, &z.im})
    if (*part != 0) {
      const int w = valuation(*part, p);
      v = v ? std::min(*v, w) : w;
    }
  return v;
}

DigitExpansion rational_to_padic_digits(const mpq_class &q, std::int64_t p,
                                        int m) {
  DigitExpansion out;
  if (q == 0)
    return out;
  mpz_class num = q.get_num(), den = q.get_den();
  const int v = strip(num, p) - strip(den, p);
  const long P = static_cast<long>(p);
  mpz_class r = num;
  std::vector<std::int64_t> digits;
  for (int k = v; k < m; ++k) {
    const mpz_class target = ((r % P) + P) % P;
    const mpz_class dm = ((den % P) + P) % P;
    std::int64_t d = 0;
    while ((dm * d - target) % P != 0)
      ++d;
    digits.push_back(d);
    r = (r - den * d) / P;
  }
  while (!digits.empty() && digits.back() == 0)
    digits.pop_back();
  if (digits.empty()) // m <= v: q = 0 mod p^m
    return out;
  out.valuation = v;
  out.digits = std::move(digits);
  return out;
}

GaussianRational gaussian_loop_add(const GaussianRational &a,
                                   const GaussianRational &b) {
  return (a + b) / (GaussianRational(1) - conj(a) * b);
}

GaussianRational series_partial_sum(Series s, const GaussianRational &x,
                                    int terms, const mpq_class &alpha) {
  GaussianRational sum;
  GaussianRational power(1);
  mpz_class factorial = 1;
  switch (s) {
  case Series::Exp:
    for (int n = 0; n < terms; ++n) {
      if (n > 0) {
        power = power * x;
        factorial *= n;
      }
      sum = sum + power * GaussianRational(mpq_class(1, factorial));
    }
    break;
  case Series::Log1p:
    for (int n = 1; n <= terms; ++n) {
      power = power * x;
      const mpq_class c(n % 2 == 1 ? 1 : -1, n);
      sum = sum + power * GaussianRational(c);
    }
    break;
  case Series::Sin:
  case Series::Cos: {
    const int offset = s == Series::Sin ? 1 : 0;
    for (int k = 0; k < 2 * terms + offset; ++k) {
      if (k > 0) {
        power = power * x;
        factorial *= k;
      }
      if (k % 2 != offset)
        continue;
      const int j = k / 2;
      const mpq_class c(j % 2 == 0 ? 1 : -1, factorial);
      sum = sum + power * GaussianRational(c);
    }
    break;
  }
  case Series::Arctan:
    power = x;
    for (int k = 0; k < terms; ++k) {
      if (k > 0)
        power = power * x * x;
      const mpq_class c(k % 2 == 0 ? 1 : -1, 2 * k + 1);
      sum = sum + power * GaussianRational(c);
    }
    break;
  case Series::Arcsin: {
    // (2k)! / (4^k (k!)^2 (2k+1)) x^(2k+1)
    power = x;
    mpq_class central = 1;
    for (int k = 0; k < terms; ++k) {
      if (k > 0) {
        power = power * x * x;
        central = central * (2 * k - 1) / (2 * k);
      }
      sum = sum + power * GaussianRational(central / (2 * k + 1));
    }
    break;
  }
  case Series::Binomial: {
    mpq_class coeff = 1;
    for (int n = 0; n < terms; ++n) {
      if (n > 0) {
        power = power * x;
        coeff = coeff * (alpha - (n - 1)) / n;
      }
      sum = sum + power * GaussianRational(coeff);
    }
    break;
  }
  }
  return sum;
}

int certified_terms(Series s, int v, std::int64_t p, int m) {
  const double pm1 = static_cast<double>(p - 1);
  const double lp = std::log(static_cast<double>(p));
  auto term_floor = [&](int n) -> double {
    switch (s) {
    case Series::Exp:
    case Series::Sin:
    case Series::Cos:
      return n * v - n / pm1;
    case Series::Log1p:
    case Series::Arctan:
    case Series::Arcsin:
      return n * v - std::log(static_cast<double>(n)) / lp;
    case Series::Binomial:
      return static_cast<double>(n) * v;
    }
    return 0;
  };
  // Exponent index after which every term lies beyond p^m; the bounds are
  // increasing in n for v >= 1, p >= 3.
  int n = 1;
  while (term_floor(n) < m + 1)
    ++n;
  switch (s) {
  case Series::Sin:
  case Series::Cos:
  case Series::Arctan:
  case Series::Arcsin:
    return n / 2 + 1; // k indexes the odd/even exponents 2k(+1)
  default:
    return n + 1;
  }
}

int stabilization_terms(Series s, const GaussianRational &x, std::int64_t p,
                        int m, int window, const mpq_class &alpha) {
  auto expand = [&](const GaussianRational &z) {
    return std::pair{rational_to_padic_digits(z.re, p, m),
                     rational_to_padic_digits(z.im, p, m)};
  };
  int terms = 1;
  auto last = expand(series_partial_sum(s, x, terms, alpha));
  int unchanged = 0;
  while (unchanged < window) {
    ++terms;
    auto next = expand(series_partial_sum(s, x, terms, alpha));
    unchanged = next == last ? unchanged + 1 : 0;
    last = std::move(next);
  }
  return terms - window;
}

std::complex<double> complex_float_loop(std::complex<double> a,
                                        std::complex<double> b) {
  const std::complex<double> den = 1.0 - std::conj(a) * b;
  if (std::abs(den) < 1e-12)
    throw Error(ErrorKind::NearPole, "denominator below 1e-12");
  return (a + b) / den;
}

std::complex<double> complex_float_mobius(std::complex<double> a,
                                          std::complex<double> b) {
  // [[1, a], [-conj(a), 1]] (b, 1)^T
  const std::complex<double> top = 1.0 * b + a * 1.0;
  const std::complex<double> bottom = -std::conj(a) * b + 1.0;
  if (std::abs(bottom) < 1e-12)
    throw Error(ErrorKind::NearPole, "denominator below 1e-12");
  return top / bottom;
}

std::complex<double> complex_float_deviation(std::complex<double> a,
                                             std::complex<double> b) {
  return (1.0 - a * std::conj(b)) / (1.0 - std::conj(a) * b);
}

} // namespace padic::oracle
