// Acceptance runner: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padic/checks.hpp"

namespace {

using padic::checks::Options;
using padic::checks::PropertyResult;
using Clock = std::chrono::steady_clock;

const std::vector<std::int64_t> kPrimes = {3, 7, 11, 19, 23};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  int properties = 0;
  int samples = 0;
  int failures = 0;
  int min_digits = INT_MAX;
  std::vector<std::string> notes;

  void add(const PropertyResult &r, std::int64_t p) {
    ++properties;
    samples += r.samples;
    failures += r.failure_count;
    min_digits = std::min(min_digits, r.min_digits);
    for (const std::string &f : r.failures)
      notes.push_back("p=" + std::to_string(p) + " " + r.suite + "/" +
                      r.property + ": " + f.substr(0, 300));
  }

  std::string summary() const {
    std::ostringstream s;
    s << properties << " properties, " << samples << " samples, " << failures
      << " failures";
    if (min_digits != INT_MAX)
      s << ", min digits " << min_digits;
    return s.str();
  }
};

Options base(std::int64_t p, int samples) {
  Options o;
  o.p = p;
  o.precision = 24;
  o.seed = 0;
  o.samples = samples;
  o.digit_floor = 20;
  return o;
}

std::vector<PropertyResult> select(const std::vector<PropertyResult> &all,
                                   const std::set<std::string> &names) {
  std::vector<PropertyResult> out;
  for (const auto &r : all)
    if (names.count(r.property))
      out.push_back(r);
  return out;
}

int failures = 0;

void report(int n, bool ok, const std::string &what, const std::string &detail,
            const std::vector<std::string> &notes = {}) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what
            << " (" << detail << ")\n";
  for (std::size_t k = 0; k < notes.size() && k < 5; ++k)
    std::cout << "    " << notes[k] << '\n';
  std::cout.flush();
  failures += ok ? 0 : 1;
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

void criteria_1_and_2() {
  Tally tally;
  std::vector<std::string> witnesses;
  bool witnessed = true;
  const auto t0 = Clock::now();
  for (std::int64_t p : kPrimes) {
    for (const auto &r : padic::checks::run_axioms(base(p, 500))) {
      if (r.property == "non_associativity") {
        if (r.witness.empty() || !r.passed())
          witnessed = false;
        else
          witnesses.push_back("p=" + std::to_string(p) + " " +
                              r.witness.substr(0, r.witness.find(':')));
        continue;
      }
      tally.add(r, p);
    }
  }
  const double elapsed = seconds_since(t0);
  const bool ok = tally.failures == 0 && tally.min_digits >= 20 && elapsed < 30;
  report(1, ok, "loop axioms, p in {3,7,11,19,23}, precision 24, 500 samples",
         tally.summary() + ", " + fmt_seconds(elapsed), tally.notes);
  report(2, witnessed && witnesses.size() == kPrimes.size(),
         "non-associative triple confirmed by the Gaussian-rational oracle",
         witnesses.empty() ? "none found"
                           : std::to_string(witnesses.size()) + " primes, e.g. " +
                                 witnesses[1]);
}

void criterion_3() {
  Tally tally;
  const auto t0 = Clock::now();
  for (std::int64_t p : kPrimes) {
    Options o = base(p, 200);
    o.series_inputs = 50;
    for (const auto &r : padic::checks::run_analytic(o))
      tally.add(r, p);
  }
  report(3, tally.failures == 0 && tally.min_digits >= 20,
         "analytic identities (200 samples) and series oracle (50 rationals)",
         tally.summary() + ", " + fmt_seconds(seconds_since(t0)), tally.notes);
}

void criterion_4() {
  Tally tally;
  const auto t0 = Clock::now();
  for (std::int64_t p : kPrimes) {
    const auto all = padic::checks::run_clifford(base(p, 200));
    for (const auto &r : all)
      if (r.property != "equivariance")
        tally.add(r, p);
    for (const auto &r :
         select(padic::checks::run_clifford(base(p, 100)), {"equivariance"}))
      tally.add(r, p);
  }
  report(4, tally.failures == 0, "Clifford/sphere suite (200 samples, 100 rotations)",
         tally.summary() + ", " + fmt_seconds(seconds_since(t0)), tally.notes);
}

void criteria_5_and_6() {
  Tally kernel, floats;
  for (std::int64_t p : kPrimes) {
    Options o = base(p, 500);
    o.float_samples = 10000;
    for (const auto &r : padic::checks::run_oracle(o)) {
      if (r.property.rfind("float_", 0) == 0) {
        if (p == kPrimes.front() && r.property != "float_mobius")
          floats.add(r, p);
      } else if (r.property == "from_rational_digits" ||
                 r.property == "sqrt_square" || r.property == "parse_format") {
        kernel.add(r, p);
      }
    }
  }
  report(5, kernel.failures == 0 && kernel.properties == 15,
         "kernel against long division, sqrt^2, parse(format)",
         kernel.summary(), kernel.notes);
  report(6, floats.failures == 0 && floats.samples == 30000,
         "complex float identity, left inverse, A_l law within 1e-12",
         floats.summary(), floats.notes);
}

struct Run {
  int code;
  std::string out;
  double seconds;
};

Run run_cli(const std::string &args) {
  const auto t0 = Clock::now();
  FILE *pipe = popen((std::string(PADICLOOP_PATH) + " " + args).c_str(), "r");
  if (pipe == nullptr)
    return {-1, "", 0};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out, seconds_since(t0)};
}

void criterion_7() {
  const std::string args = "check all --p 7 --seed 0 --samples 500";
  const Run first = run_cli(args);
  const Run second = run_cli(args);
  const bool ok = first.code == 0 && second.code == 0 && first.seconds < 60 &&
                  !first.out.empty() && first.out == second.out;
  std::ostringstream detail;
  detail << "exit " << first.code << "/" << second.code << ", "
         << fmt_seconds(first.seconds) << ", "
         << (first.out == second.out ? "identical" : "different") << " output, "
         << first.out.size() << " bytes";
  report(7, ok, "padicloop " + args, detail.str());
}

} // namespace

int main() {
  const std::vector<std::function<void()>> steps = {
      criteria_1_and_2, criterion_3, criterion_4, criteria_5_and_6, criterion_7};
  for (const auto &step : steps)
    step();
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
