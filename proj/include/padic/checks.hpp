#pragma once

// Seeded property suites shared by the CLI `check` subcommand and the
// acceptance runner.

#include <climits>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padic/clifford.hpp"
#include "padic/loop.hpp"
#include "padic/oracle/oracles.hpp"
#include "padic/padic_number.hpp"
#include "padic/qpi.hpp"

namespace padic::checks {

struct Options {
  std::int64_t p = 7;
  int precision = 24;
  std::uint64_t seed = 0;
  int samples = 500;
  /// Agreement floor in digits; negative means precision - 4.
  int digit_floor = -1;
  /// Rational inputs for the series oracle comparison.
  int series_inputs = 50;
  /// Complex pairs for the floating-point cross-check.
  int float_samples = 10000;

  int floor() const { return digit_floor >= 0 ? digit_floor : precision - 4; }
};

struct PropertyResult {
  std::string suite;
  std::string property;
  int samples = 0;
  int failure_count = 0;
  /// First few counterexamples, serialized as literals.
  std::vector<std::string> failures;
  /// Recorded witness for existence properties.
  std::string witness;
  /// Smallest agreement seen over compared pairs (INT_MAX if none).
  int min_digits = INT_MAX;

  bool passed() const { return failure_count == 0; }
};

/// Suites accepted by run_suite, in execution order for "all".
const std::vector<std::string> &suite_names();

/// True when `suite` needs Qp(i), i.e. p = 3 (mod 4).
bool suite_needs_i(const std::string &suite);

/// Runs one suite or "all". Throws Error for invalid contexts or an unknown
/// suite (ErrorKind::ParseError).
std::vector<PropertyResult> run_suite(const std::string &suite,
                                      const Options &opts);

std::vector<PropertyResult> run_axioms(const Options &opts);
std::vector<PropertyResult> run_analytic(const Options &opts);
std::vector<PropertyResult> run_clifford(const Options &opts);
std::vector<PropertyResult> run_oracle(const Options &opts);

bool all_passed(const std::vector<PropertyResult> &results);

/// Deterministic text report; no timings.
std::string format_plain(const std::vector<PropertyResult> &results);

/// Random values over a fixed context. Draws are deterministic in the seed
/// and independent of platform (std::mt19937_64 reduced with %).
class Sampler {
public:
  Sampler(const PrimeContext &ctx, std::uint64_t seed);

  const PrimeContext &context() const { return ctx_; }
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// p^v * u with v in [vmin, vmax] and ctx.precision() random digits.
  PadicNumber padic(int vmin, int vmax);
  /// Components drawn by padic(vmin, vmax); one may be zero.
  QpiElement qpi(int vmin, int vmax);
  DiskPoint disk() { return DiskPoint(qpi(1, 3)); }
  /// +-p^v * a/b with v in [vmin, vmax], 1 <= a, b <= bound, p-free.
  mpq_class rational(int vmin, int vmax, long bound = 1000000);
  oracle::GaussianRational gaussian(int vmin, int vmax, long bound = 1000);
  Vector3 vector(int vmin = 0, int vmax = 2);
  /// vector() redrawn until v(q(u)) = 2 min v(u_k): no cancellation in q,
  /// so reflecting along u costs no digits.
  Vector3 axis();

private:
  PrimeContext ctx_;
  std::mt19937_64 rng_;
};

/// Kernel value equals the oracle expansion of q modulo p^known_precision.
bool matches_oracle(const PadicNumber &x, const mpq_class &q);
bool matches_oracle(const QpiElement &z, const oracle::GaussianRational &g);

PadicNumber to_kernel(const mpq_class &q, const PrimeContext &ctx);
QpiElement to_kernel(const oracle::GaussianRational &g, const PrimeContext &ctx);
std::string format(const oracle::GaussianRational &g);

} // namespace padic::checks
