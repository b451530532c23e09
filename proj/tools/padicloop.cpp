// padicloop: evaluate p-adic expressions, analytic functions and loop
// operations, or run the seeded property suites.

#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/analytic.hpp"
#include "padic/checks.hpp"
#include "padic/error.hpp"
#include "padic/expression.hpp"
#include "padic/loop.hpp"

namespace {

using namespace padic;
using nlohmann::json;

enum Exit { kOk = 0, kPropertyFailure = 1, kInputError = 2 };

struct Config {
  long p = 7;
  int prec = 32;
  std::uint64_t seed = 0;
  std::string format = "plain";
};

// Qp(i) is used only when the input names i.
bool wants_extension(const std::string &text) {
  return text.find('i') != std::string::npos;
}

using Value = std::variant<PadicNumber, QpiElement>;

Value read_value(const std::string &text, const PrimeContext &ctx) {
  if (wants_extension(text))
    return parse_operand<QpiElement>(text, ctx);
  return parse_operand<PadicNumber>(text, ctx);
}

std::string show(const Value &v) {
  return std::visit([](const auto &x) { return format(x); }, v);
}

void emit(const Config &cfg, const std::string &command, const json &inputs,
          const std::string &result) {
  if (cfg.format == "json") {
    json out = {{"command", command}, {"inputs", inputs}, {"result", result}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << result << '\n';
  }
}

int cmd_arith(const Config &cfg, const std::string &expr) {
  const PrimeContext ctx(cfg.p, cfg.prec);
  emit(cfg, "arith", {expr}, show(read_value(expr, ctx)));
  return kOk;
}

template <class T>
T apply_analytic(const std::string &fn, const T &x, const PadicNumber &alpha) {
  if (fn == "exp")
    return exp(x);
  if (fn == "log")
    return log(x);
  if (fn == "sin")
    return sin_cos_tan(x).sin;
  if (fn == "cos")
    return sin_cos_tan(x).cos;
  if (fn == "tan")
    return sin_cos_tan(x).tan;
  return binomial_series(alpha, x);
}

int cmd_analytic(const Config &cfg, const std::string &fn, const std::string &arg,
                 const std::string &alpha_text) {
  const PrimeContext ctx(cfg.p, cfg.prec);
  const PadicNumber alpha = parse_operand<PadicNumber>(alpha_text, ctx);
  Value x = read_value(arg, ctx);
  std::string result;
  if (fn == "arctan" || fn == "arcsin") {
    const QpiElement z = std::holds_alternative<QpiElement>(x)
                             ? std::get<QpiElement>(x)
                             : QpiElement(std::get<PadicNumber>(x));
    result = format(fn == "arctan" ? arctan(z) : arcsin(z));
  } else {
    result = std::visit(
        [&](const auto &v) { return format(apply_analytic(fn, v, alpha)); }, x);
  }
  json inputs = {fn, arg};
  if (fn == "binom")
    inputs.push_back(alpha_text);
  emit(cfg, "analytic", inputs, result);
  return kOk;
}

int cmd_loop(const Config &cfg, const std::string &op, const std::string &a_text,
             const std::string &b_text) {
  const PrimeContext ctx(cfg.p, cfg.prec);
  ctx.require_i();
  const DiskPoint a(parse_operand<QpiElement>(a_text, ctx));
  const DiskPoint b(parse_operand<QpiElement>(b_text, ctx));
  std::string result;
  if (op == "add") {
    result = format(loop_add(a, b));
  } else if (op == "ldiv") {
    result = format(left_divide(a, b));
  } else if (op == "rsolve") {
    const RightSolveResult y = right_solve(a, b);
    result = std::holds_alternative<DiskPoint>(y)
                 ? format(std::get<DiskPoint>(y))
                 : std::string("no-solution");
  } else {
    result = format(deviation(a, b));
  }
  emit(cfg, "loop", {op, a_text, b_text}, result);
  return kOk;
}

int cmd_check(const Config &cfg, const std::string &suite, int samples) {
  checks::Options opts;
  opts.p = cfg.p;
  opts.precision = cfg.prec;
  opts.seed = cfg.seed;
  opts.samples = samples;
  // Validate the context before any output.
  const PrimeContext ctx(cfg.p, cfg.prec);
  if (suite == "all" || checks::suite_needs_i(suite))
    ctx.require_i();
  const auto results = checks::run_suite(suite, opts);
  if (cfg.format == "json") {
    json report = json::array();
    for (const auto &r : results) {
      json item = {{"suite", r.suite},
                   {"property", r.property},
                   {"samples", r.samples},
                   {"failure_count", r.failure_count},
                   {"failures", r.failures}};
      if (!r.witness.empty())
        item["witness"] = r.witness;
      report.push_back(std::move(item));
    }
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << checks::format_plain(results);
  }
  return checks::all_passed(results) ? kOk : kPropertyFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"p-adic arithmetic, analytic functions and the disk loop"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--p", cfg.p, "Odd prime")->capture_default_str();
  app.add_option("--prec", cfg.prec, "Significant p-adic digits")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for the check suites")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  std::string expr;
  auto *arith = app.add_subcommand("arith", "Evaluate an expression");
  arith->add_option("expr", expr, "Expression over literals, + - * / ^ sqrt i")
      ->required();

  std::string fn, arg, alpha = "1/2";
  auto *analytic = app.add_subcommand("analytic", "Evaluate a power series");
  analytic
      ->add_option("fn", fn, "exp, log, sin, cos, tan, arctan, arcsin, binom")
      ->required()
      ->check(CLI::IsMember(
          {"exp", "log", "sin", "cos", "tan", "arctan", "arcsin", "binom"}));
  analytic->add_option("x", arg, "Argument")->required();
  analytic->add_option("--alpha", alpha, "Exponent for binom")
      ->capture_default_str();

  std::string op, a_text, b_text;
  auto *loop = app.add_subcommand("loop", "Loop operations on the disk");
  loop->add_option("op", op, "add, ldiv, rsolve, dev")
      ->required()
      ->check(CLI::IsMember({"add", "ldiv", "rsolve", "dev"}));
  loop->add_option("a", a_text, "First operand")->required();
  loop->add_option("b", b_text, "Second operand")->required();

  std::string suite;
  int samples = 500;
  auto *check = app.add_subcommand("check", "Run property suites");
  check->add_option("suite", suite, "axioms, analytic, clifford, oracle, all")
      ->required()
      ->check(CLI::IsMember({"axioms", "analytic", "clifford", "oracle", "all"}));
  check->add_option("--samples", samples, "Samples per property")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*arith)
      return cmd_arith(cfg, expr);
    if (*analytic)
      return cmd_analytic(cfg, fn, arg, alpha);
    if (*loop)
      return cmd_loop(cfg, op, a_text, b_text);
    return cmd_check(cfg, suite, samples);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
