#include "padic/checks.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <optional>
#include <sstream>

#include "padic/analytic.hpp"
#include "padic/error.hpp"

namespace padic::checks {

namespace {

using oracle::GaussianRational;
using oracle::Series;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// One property under test. Each sample fills `label` with its inputs before
// doing any work so that thrown errors still produce a counterexample.
class Property {
public:
  Property(const Options &opts, std::string suite, std::string name)
      : ctx_(opts.p, opts.precision),
        sampler_(ctx_, opts.seed ^ fnv1a(suite + "/" + name)),
        floor_(opts.floor()) {
    result_.suite = std::move(suite);
    result_.property = std::move(name);
  }

  const PrimeContext &ctx() const { return ctx_; }
  Sampler &rng() { return sampler_; }
  PropertyResult &result() { return result_; }

  template <class T> bool close(const T &a, const T &b) {
    if (!agrees(a, b))
      return false;
    const int d = agreement_digits(a, b);
    result_.min_digits = std::min(result_.min_digits, d);
    return d >= floor_;
  }

  void run(int n, const std::function<bool(std::string &)> &body) {
    for (int k = 0; k < n; ++k) {
      ++result_.samples;
      std::string label;
      try {
        if (!body(label))
          fail(label);
      } catch (const Error &e) {
        fail(label + " -> " + e.what());
      }
    }
  }

  PropertyResult finish() { return std::move(result_); }

private:
  void fail(std::string counterexample) {
    ++result_.failure_count;
    if (result_.failures.size() < 5)
      result_.failures.push_back(std::move(counterexample));
  }

  PrimeContext ctx_;
  Sampler sampler_;
  int floor_;
  PropertyResult result_;
};

std::string pair_label(const char *n1, const std::string &v1, const char *n2,
                       const std::string &v2) {
  return std::string(n1) + "=" + v1 + ", " + n2 + "=" + v2;
}

QpiElement imaginary(const PadicNumber &x) {
  return QpiElement(PadicNumber::zero(x.context(), x.known_precision()), x);
}

// --- axioms ---------------------------------------------------------------

PropertyResult axiom_identity(const Options &o) {
  Property prop(o, "axioms", "identity");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint x = prop.rng().disk();
    label = "x=" + format(x);
    const DiskPoint zero = DiskPoint::zero(prop.ctx());
    return identical(loop_add(zero, x).value(), x.value()) &&
           identical(loop_add(x, zero).value(), x.value());
  });
  return prop.finish();
}

PropertyResult axiom_left_inverse(const Options &o) {
  Property prop(o, "axioms", "left_inverse");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint x = prop.rng().disk(), y = prop.rng().disk();
    label = pair_label("x", format(x), "y", format(y));
    return prop.close(loop_add(-x, loop_add(x, y)), y);
  });
  return prop.finish();
}

PropertyResult axiom_closure(const Options &o) {
  Property prop(o, "axioms", "closure_ultrametric");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint x = prop.rng().disk(), y = prop.rng().disk();
    label = pair_label("x", format(x), "y", format(y));
    const DiskPoint z = loop_add(x, y);
    const int vx = x.value().valuation(), vy = y.value().valuation();
    const int vz = z.value().valuation_floor();
    if (vz < std::min(vx, vy))
      return false;
    return vx == vy || vz == std::min(vx, vy);
  });
  return prop.finish();
}

PropertyResult axiom_left_divide(const Options &o) {
  Property prop(o, "axioms", "left_divide");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint a = prop.rng().disk(), b = prop.rng().disk();
    label = pair_label("a", format(a), "b", format(b));
    return prop.close(loop_add(a, left_divide(a, b)), b) &&
           prop.close(left_divide(a, loop_add(a, b)), b);
  });
  return prop.finish();
}

PropertyResult axiom_right_solve(const Options &o) {
  Property prop(o, "axioms", "right_solve");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint a = prop.rng().disk(), b = prop.rng().disk();
    label = pair_label("a", format(a), "b", format(b));
    const RightSolveResult y = right_solve(a, b);
    if (!std::holds_alternative<DiskPoint>(y))
      return false;
    return prop.close(loop_add(std::get<DiskPoint>(y), a), b);
  });
  return prop.finish();
}

PropertyResult axiom_left_translation(const Options &o) {
  Property prop(o, "axioms", "left_translation");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint x = prop.rng().disk(), y = prop.rng().disk();
    label = pair_label("x", format(x), "y", format(y));
    return prop.close(
        mobius_action(left_translation_matrix(x), y.value()),
        loop_add(x, y).value());
  });
  return prop.finish();
}

PropertyResult axiom_deviation_unitary(const Options &o) {
  Property prop(o, "axioms", "deviation_unitary");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint x = prop.rng().disk(), y = prop.rng().disk();
    label = pair_label("x1", format(x), "x2", format(y));
    const QpiElement u = deviation(x, y).factor;
    return u.valuation() == 0 &&
           prop.close(u * conj(u), QpiElement::one(prop.ctx()));
  });
  return prop.finish();
}

PropertyResult axiom_al_law(const Options &o) {
  Property prop(o, "axioms", "al_law");
  prop.run(o.samples, [&](std::string &label) {
    Sampler &r = prop.rng();
    const DiskPoint x1 = r.disk(), x2 = r.disk(), x = r.disk(), y = r.disk();
    label = pair_label("x1", format(x1), "x2", format(x2)) + ", " +
            pair_label("x", format(x), "y", format(y));
    const Deviation d = deviation(x1, x2);
    return prop.close(deviation_apply(d, loop_add(x, y)),
                      loop_add(deviation_apply(d, x), deviation_apply(d, y)));
  });
  return prop.finish();
}

PropertyResult axiom_deviation_factorization(const Options &o) {
  Property prop(o, "axioms", "deviation_factorization");
  prop.run(o.samples, [&](std::string &label) {
    const DiskPoint x1 = prop.rng().disk(), x2 = prop.rng().disk();
    label = pair_label("x1", format(x1), "x2", format(x2));
    const ProjectiveRotation path =
        left_translation_matrix(loop_add(x1, x2)).inverse() *
        (left_translation_matrix(x1) * left_translation_matrix(x2));
    return prop.close(path, deviation(x1, x2).rotation());
  });
  return prop.finish();
}

PropertyResult axiom_non_associativity(const Options &o) {
  Property prop(o, "axioms", "non_associativity");
  const PrimeContext &ctx = prop.ctx();
  const mpq_class p(static_cast<long>(o.p));
  const std::vector<GaussianRational> candidates = {
      GaussianRational(p), GaussianRational(0, p), GaussianRational(p, p)};
  for (const auto &a : candidates)
    for (const auto &b : candidates)
      for (const auto &c : candidates) {
        if (!prop.result().witness.empty())
          continue;
        prop.run(1, [&](std::string &label) {
          label = "a=" + format(a) + ", b=" + format(b) + ", c=" + format(c);
          const GaussianRational exact_left =
              oracle::gaussian_loop_add(oracle::gaussian_loop_add(a, b), c);
          const GaussianRational exact_right =
              oracle::gaussian_loop_add(a, oracle::gaussian_loop_add(b, c));
          const DiskPoint ka(to_kernel(a, ctx)), kb(to_kernel(b, ctx)),
              kc(to_kernel(c, ctx));
          const DiskPoint left = loop_add(loop_add(ka, kb), kc);
          const DiskPoint right = loop_add(ka, loop_add(kb, kc));
          // The kernel must reproduce both exact values whether or not the
          // triple associates.
          if (!matches_oracle(left.value(), exact_left) ||
              !matches_oracle(right.value(), exact_right))
            return false;
          if (exact_left == exact_right || agrees(left, right))
            return true;
          prop.result().witness = label + ": (a+b)+c = " + format(left) +
                                  ", a+(b+c) = " + format(right);
          return true;
        });
      }
  if (prop.result().witness.empty()) {
    ++prop.result().failure_count;
    prop.result().failures.push_back("no non-associative triple found");
  }
  return prop.finish();
}

// --- analytic -------------------------------------------------------------

PropertyResult analytic_exp_additivity(const Options &o) {
  Property prop(o, "analytic", "exp_additivity");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3), y = prop.rng().padic(1, 3);
    label = pair_label("x", format(x), "y", format(y));
    return prop.close(exp(x + y), exp(x) * exp(y));
  });
  return prop.finish();
}

PropertyResult analytic_log_exp(const Options &o) {
  Property prop(o, "analytic", "log_exp");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3);
    label = "x=" + format(x);
    return prop.close(log(exp(x)), x);
  });
  return prop.finish();
}

PropertyResult analytic_exp_log(const Options &o) {
  Property prop(o, "analytic", "exp_log");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3);
    label = "x=" + format(x);
    const PadicNumber y = PadicNumber::one(prop.ctx()) + x;
    return prop.close(exp(log(y)), y);
  });
  return prop.finish();
}

PropertyResult analytic_exp_ix(const Options &o) {
  Property prop(o, "analytic", "exp_ix");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3);
    label = "x=" + format(x);
    const Trig<PadicNumber> t = sin_cos_tan(x);
    return prop.close(exp(imaginary(x)), QpiElement(t.cos, t.sin));
  });
  return prop.finish();
}

PropertyResult analytic_pythagoras(const Options &o) {
  Property prop(o, "analytic", "pythagoras");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3);
    label = "x=" + format(x);
    const Trig<PadicNumber> t = sin_cos_tan(x);
    return prop.close(t.sin * t.sin + t.cos * t.cos,
                      PadicNumber::one(prop.ctx()));
  });
  return prop.finish();
}

PropertyResult analytic_sin_addition(const Options &o) {
  Property prop(o, "analytic", "sin_addition");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3), y = prop.rng().padic(1, 3);
    label = pair_label("x", format(x), "y", format(y));
    const Trig<PadicNumber> tx = sin_cos_tan(x), ty = sin_cos_tan(y);
    return prop.close(sin_cos_tan(x + y).sin,
                      tx.sin * ty.cos + tx.cos * ty.sin);
  });
  return prop.finish();
}

PropertyResult analytic_cos_addition(const Options &o) {
  Property prop(o, "analytic", "cos_addition");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3), y = prop.rng().padic(1, 3);
    label = pair_label("x", format(x), "y", format(y));
    const Trig<PadicNumber> tx = sin_cos_tan(x), ty = sin_cos_tan(y);
    return prop.close(sin_cos_tan(x + y).cos,
                      tx.cos * ty.cos - tx.sin * ty.sin);
  });
  return prop.finish();
}

PropertyResult analytic_abs_sin(const Options &o) {
  Property prop(o, "analytic", "abs_sin");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3);
    label = "x=" + format(x);
    const PadicNumber s = sin_cos_tan(x).sin;
    return !s.is_zero() && s.valuation() == x.valuation();
  });
  return prop.finish();
}

PropertyResult analytic_abs_cos(const Options &o) {
  Property prop(o, "analytic", "abs_cos");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3);
    label = "x=" + format(x);
    const PadicNumber c = sin_cos_tan(x).cos;
    return !c.is_zero() && c.valuation() == 0;
  });
  return prop.finish();
}

PropertyResult analytic_sin_isometry(const Options &o) {
  Property prop(o, "analytic", "sin_isometry");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(1, 3), y = prop.rng().padic(1, 3);
    label = pair_label("x", format(x), "y", format(y));
    const Trig<PadicNumber> tx = sin_cos_tan(x), ty = sin_cos_tan(y);
    const PadicNumber dx = x - y, ds = tx.sin - ty.sin, dc = tx.cos - ty.cos;
    if (dx.is_zero() || ds.is_zero())
      return false;
    return ds.valuation() == dx.valuation() &&
           dc.valuation_floor() >= dx.valuation();
  });
  return prop.finish();
}

// Kernel against exact partial sums on rational inputs.
PropertyResult analytic_series(const Options &o, const std::string &fn) {
  Property prop(o, "analytic", "series_" + fn);
  const PrimeContext &ctx = prop.ctx();
  const std::int64_t p = o.p;
  prop.run(o.series_inputs, [&](std::string &label) {
    Sampler &r = prop.rng();
    const mpq_class xq = r.rational(1, 3, 1000);
    const mpq_class alpha = fn == "binom" ? r.rational(0, 0, 100) : mpq_class(0);
    label = "x=" + mpq_class(xq).get_str();
    if (fn == "binom")
      label += ", alpha=" + alpha.get_str();
    const int v = oracle::valuation(xq, p);
    const PadicNumber x = to_kernel(xq, ctx);
    const GaussianRational gx(xq);
    auto partial = [&](Series s, int m) {
      return oracle::series_partial_sum(
          s, gx, oracle::certified_terms(s, v, p, std::max(m, 1)), alpha);
    };
    auto check_real = [&](Series s, const PadicNumber &y) {
      return matches_oracle(y, partial(s, y.known_precision()).re);
    };
    auto check_ext = [&](Series s, const QpiElement &z) {
      return matches_oracle(z, partial(s, z.known_precision()));
    };
    if (fn == "exp")
      return check_real(Series::Exp, exp(x));
    if (fn == "log")
      return check_real(Series::Log1p, log(PadicNumber::one(ctx) + x));
    if (fn == "sin")
      return check_real(Series::Sin, sin_cos_tan(x).sin);
    if (fn == "cos")
      return check_real(Series::Cos, sin_cos_tan(x).cos);
    if (fn == "tan") {
      const PadicNumber t = sin_cos_tan(x).tan;
      const int m = t.known_precision();
      return matches_oracle(t, partial(Series::Sin, m).re /
                                   partial(Series::Cos, m).re);
    }
    if (fn == "arctan")
      return check_ext(Series::Arctan, arctan(QpiElement(x)));
    if (fn == "arcsin")
      return check_ext(Series::Arcsin, arcsin(QpiElement(x)));
    return check_real(Series::Binomial,
                      binomial_series(to_kernel(alpha, ctx), x));
  });
  return prop.finish();
}

// --- clifford -------------------------------------------------------------

QpiMatrix scalar_identity(const PadicNumber &s) {
  return QpiMatrix::diagonal(QpiElement(s), QpiElement(s));
}

PropertyResult clifford_square(const Options &o) {
  Property prop(o, "clifford", "clifford_square");
  prop.run(o.samples, [&](std::string &label) {
    const Vector3 v = prop.rng().vector();
    label = "v=" + format(v);
    const QpiMatrix m = iota(v);
    return prop.close(m * m, scalar_identity(quadratic_form(v)));
  });
  return prop.finish();
}

PropertyResult clifford_anticommutation(const Options &o) {
  Property prop(o, "clifford", "anticommutation");
  prop.run(o.samples, [&](std::string &label) {
    const Vector3 u = prop.rng().vector(), v = prop.rng().vector();
    label = pair_label("u", format(u), "v", format(v));
    const PadicNumber two = from_integer(2, prop.ctx());
    return prop.close(iota(u) * iota(v) + iota(v) * iota(u),
                      scalar_identity(two * quadratic_form(u, v)));
  });
  return prop.finish();
}

PropertyResult clifford_reflection(const Options &o) {
  Property prop(o, "clifford", "reflection");
  prop.run(o.samples, [&](std::string &label) {
    const Vector3 u = prop.rng().axis(), v = prop.rng().vector();
    label = pair_label("u", format(u), "v", format(v));
    const QpiMatrix iu = iota(u);
    return prop.close(iota(reflect(u, v)), -(iu * iota(v) * inverse(iu)));
  });
  return prop.finish();
}

PropertyResult clifford_two_reflections(const Options &o) {
  Property prop(o, "clifford", "two_reflections");
  prop.run(o.samples, [&](std::string &label) {
    Sampler &r = prop.rng();
    const Vector3 u1 = r.axis(), u2 = r.axis(), v = r.vector();
    label = pair_label("u1", format(u1), "u2", format(u2)) + ", v=" + format(v);
    const Vector3 w = reflect(u2, reflect(u1, v));
    if (!prop.close(quadratic_form(w), quadratic_form(v)))
      return false;
    // iota(u2) iota(u1) has the shape [[a, b], [-conj b, conj a]] and acts
    // by conjugation as the composite.
    const QpiMatrix m = iota(u2) * iota(u1);
    const ProjectiveRotation rot = ProjectiveRotation::from_matrix(m);
    const QpiMatrix rm = rot.matrix();
    return prop.close(rm * iota(v) * inverse(rm), iota(w));
  });
  return prop.finish();
}

PropertyResult clifford_psi_lift(const Options &o) {
  Property prop(o, "clifford", "psi_lift");
  prop.run(o.samples, [&](std::string &label) {
    const QpiElement xi = prop.rng().qpi(1, 3);
    label = "xi=" + format(xi);
    return prop.close(psi(lift(xi)), xi);
  });
  return prop.finish();
}

PropertyResult clifford_lift_psi(const Options &o) {
  Property prop(o, "clifford", "lift_psi");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber theta = prop.rng().padic(1, 3);
    const PadicNumber phi = prop.rng().padic(1, 3);
    label = pair_label("theta", format(theta), "phi", format(phi));
    const CupPoint pt = polar_point(theta, phi);
    return prop.close(SpherePoint(lift(psi(pt))), SpherePoint(pt));
  });
  return prop.finish();
}

PropertyResult clifford_polar_image(const Options &o) {
  Property prop(o, "clifford", "polar_image");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber theta = prop.rng().padic(1, 3);
    const PadicNumber phi = prop.rng().padic(1, 3);
    label = pair_label("theta", format(theta), "phi", format(phi));
    const QpiElement image = psi(polar_point(theta, phi));
    const QpiElement expected =
        exp(imaginary(phi)) * sin_cos_tan(theta).tan;
    return prop.close(image, expected) &&
           image.valuation() == theta.valuation();
  });
  return prop.finish();
}

PropertyResult clifford_equivariance(const Options &o) {
  Property prop(o, "clifford", "equivariance");
  prop.run(o.samples, [&](std::string &label) {
    Sampler &r = prop.rng();
    const QpiElement beta = r.qpi(1, 3);
    const PadicNumber a = r.padic(1, 3);
    const QpiElement xi = r.qpi(1, 3);
    label = "beta=" + format(beta) + ", a=" + format(a) + ", xi=" + format(xi);
    const ProjectiveRotation rot = exp_horizontal(beta) * exp_vertical(a);
    const CupPoint pt = lift(xi);
    return prop.close(psi(rotation_act(rot, pt)),
                      mobius_action(pole_conjugate(rot), psi(pt)));
  });
  return prop.finish();
}

PropertyResult clifford_vertical_homomorphism(const Options &o) {
  Property prop(o, "clifford", "vertical_homomorphism");
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber a1 = prop.rng().padic(1, 3), a2 = prop.rng().padic(1, 3);
    label = pair_label("a1", format(a1), "a2", format(a2));
    return prop.close(exp_vertical(a1 + a2),
                      exp_vertical(a1) * exp_vertical(a2));
  });
  return prop.finish();
}

// --- oracle ---------------------------------------------------------------

PropertyResult oracle_from_rational(const Options &o) {
  Property prop(o, "oracle", "from_rational_digits");
  prop.run(o.samples, [&](std::string &label) {
    const mpq_class q = prop.rng().rational(-3, 3);
    label = "q=" + mpq_class(q).get_str();
    return matches_oracle(to_kernel(q, prop.ctx()), q);
  });
  return prop.finish();
}

PropertyResult oracle_sqrt(const Options &o) {
  Property prop(o, "oracle", "sqrt_square");
  prop.run(o.samples, [&](std::string &label) {
    const mpq_class q = prop.rng().rational(-3, 3);
    label = "a=(" + mpq_class(q).get_str() + ")^2";
    const PadicNumber a = to_kernel(q * q, prop.ctx());
    const PadicNumber s = sqrt(a);
    const PadicNumber root = to_kernel(q, prop.ctx());
    return prop.close(s * s, a) && (agrees(s, root) || agrees(s, -root));
  });
  return prop.finish();
}

PropertyResult oracle_parse_format(const Options &o) {
  Property prop(o, "oracle", "parse_format");
  const bool ext = prop.ctx().admits_i();
  prop.run(o.samples, [&](std::string &label) {
    const PadicNumber x = prop.rng().padic(-3, 3);
    label = "x=" + format(x);
    if (!identical(parse(format(x), prop.ctx()), x))
      return false;
    if (!ext)
      return true;
    const QpiElement z = prop.rng().qpi(-3, 3);
    label += ", z=" + format(z);
    return identical(parse_qpi(format(z), prop.ctx()), z);
  });
  return prop.finish();
}

PropertyResult oracle_loop(const Options &o, const std::string &op) {
  Property prop(o, "oracle", op + "_oracle");
  const PrimeContext &ctx = prop.ctx();
  prop.run(o.samples, [&](std::string &label) {
    const GaussianRational a = prop.rng().gaussian(1, 3);
    const GaussianRational b = prop.rng().gaussian(1, 3);
    label = pair_label("a", format(a), "b", format(b));
    const DiskPoint ka(to_kernel(a, ctx)), kb(to_kernel(b, ctx));
    const GaussianRational one(1);
    if (op == "loop_add")
      return matches_oracle(loop_add(ka, kb).value(),
                            oracle::gaussian_loop_add(a, b));
    if (op == "left_divide")
      return matches_oracle(left_divide(ka, kb).value(),
                            (b - a) / (one + oracle::conj(a) * b));
    return matches_oracle(deviation(ka, kb).factor,
                          (one - a * oracle::conj(b)) /
                              (one - oracle::conj(a) * b));
  });
  return prop.finish();
}

// Archimedean model of the same formulas.
PropertyResult oracle_float(const Options &o, const std::string &law) {
  Property prop(o, "oracle", "float_" + law);
  std::mt19937_64 rng(o.seed ^ fnv1a("float/" + law));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto draw = [&] {
    for (;;) {
      const std::complex<double> z(unit(rng), unit(rng));
      if (std::abs(z) <= 0.9)
        return z;
    }
  };
  auto near = [](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) <= 1e-12;
  };
  auto str = [](std::complex<double> z) {
    std::ostringstream s;
    s.precision(17);
    s << z;
    return s.str();
  };
  prop.run(o.float_samples, [&](std::string &label) {
    using oracle::complex_float_loop;
    const std::complex<double> a = draw(), b = draw();
    label = pair_label("a", str(a), "b", str(b));
    if (law == "identity")
      return complex_float_loop(0.0, a) == a && complex_float_loop(a, 0.0) == a;
    if (law == "left_inverse")
      return near(complex_float_loop(-a, complex_float_loop(a, b)), b);
    if (law == "mobius")
      return near(oracle::complex_float_mobius(a, b), complex_float_loop(a, b));
    const std::complex<double> x = draw(), y = draw();
    label += ", x=" + str(x) + ", y=" + str(y);
    const std::complex<double> u = oracle::complex_float_deviation(a, b);
    return near(u * complex_float_loop(x, y),
                complex_float_loop(u * x, u * y));
  });
  return prop.finish();
}

} // namespace

// --- sampling -------------------------------------------------------------

Sampler::Sampler(const PrimeContext &ctx, std::uint64_t seed)
    : ctx_(ctx), rng_(seed) {}

PadicNumber Sampler::padic(int vmin, int vmax) {
  const int v = between(vmin, vmax);
  const int n = ctx_.precision();
  const std::uint64_t p = static_cast<std::uint64_t>(ctx_.p());
  mpz_class unit = 0;
  mpz_class place = 1;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t d = k == 0 ? 1 + below(p - 1) : below(p);
    unit += place * static_cast<unsigned long>(d);
    place *= static_cast<unsigned long>(p);
  }
  return PadicNumber::from_unit(ctx_, v, unit, v + n);
}

QpiElement Sampler::qpi(int vmin, int vmax) {
  const std::uint64_t shape = below(10);
  PadicNumber re = padic(vmin, vmax);
  PadicNumber im = padic(vmin, vmax);
  if (shape == 0)
    re = PadicNumber::zero(ctx_, im.known_precision());
  else if (shape == 1)
    im = PadicNumber::zero(ctx_, re.known_precision());
  return QpiElement(std::move(re), std::move(im));
}

mpq_class Sampler::rational(int vmin, int vmax, long bound) {
  const long p = static_cast<long>(ctx_.p());
  auto pfree = [&] {
    for (;;) {
      const long n = 1 + static_cast<long>(below(static_cast<std::uint64_t>(bound)));
      if (n % p != 0)
        return mpz_class(n);
    }
  };
  const int v = between(vmin, vmax);
  const mpz_class a = pfree(), b = pfree();
  mpq_class q(a, b);
  if (v >= 0)
    q *= mpq_class(detail::pow_p(p, v));
  else
    q /= mpq_class(detail::pow_p(p, -v));
  if (below(2) == 1)
    q = -q;
  q.canonicalize();
  return q;
}

oracle::GaussianRational Sampler::gaussian(int vmin, int vmax, long bound) {
  const std::uint64_t shape = below(10);
  mpq_class re = rational(vmin, vmax, bound);
  mpq_class im = rational(vmin, vmax, bound);
  if (shape == 0)
    re = 0;
  else if (shape == 1)
    im = 0;
  return {re, im};
}

Vector3 Sampler::vector(int vmin, int vmax) {
  PadicNumber a = padic(vmin, vmax);
  PadicNumber b = padic(vmin, vmax);
  PadicNumber c = padic(vmin, vmax);
  return {std::move(a), std::move(b), std::move(c)};
}

Vector3 Sampler::axis() {
  for (;;) {
    Vector3 u = vector();
    const int vmin =
        std::min({u.a.valuation(), u.b.valuation(), u.c.valuation()});
    const PadicNumber q = quadratic_form(u);
    if (!q.is_zero() && q.valuation() == 2 * vmin)
      return u;
  }
}

// --- oracle comparison ----------------------------------------------------

bool matches_oracle(const PadicNumber &x, const mpq_class &q) {
  const oracle::DigitExpansion e =
      oracle::rational_to_padic_digits(q, x.prime(), x.known_precision());
  if (x.is_zero())
    return !e.valuation.has_value();
  if (!e.valuation || *e.valuation != x.valuation())
    return false;
  std::vector<std::int64_t> digits = x.digits();
  while (!digits.empty() && digits.back() == 0)
    digits.pop_back();
  return digits == e.digits;
}

bool matches_oracle(const QpiElement &z, const oracle::GaussianRational &g) {
  return matches_oracle(z.re(), g.re) && matches_oracle(z.im(), g.im);
}

PadicNumber to_kernel(const mpq_class &q, const PrimeContext &ctx) {
  return from_rational(q.get_num(), q.get_den(), ctx);
}

QpiElement to_kernel(const oracle::GaussianRational &g, const PrimeContext &ctx) {
  return QpiElement(to_kernel(g.re, ctx), to_kernel(g.im, ctx));
}

std::string format(const oracle::GaussianRational &g) {
  if (g.im == 0)
    return g.re.get_str();
  std::string s = g.re == 0 ? "" : g.re.get_str() + " + ";
  return s + "(" + g.im.get_str() + ")*i";
}

// --- suites ---------------------------------------------------------------

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {"axioms", "analytic",
                                                 "clifford", "oracle"};
  return names;
}

bool suite_needs_i(const std::string &suite) { return suite != "oracle"; }

std::vector<PropertyResult> run_axioms(const Options &o) {
  PrimeContext(o.p, o.precision).require_i();
  return {axiom_identity(o),          axiom_left_inverse(o),
          axiom_closure(o),           axiom_left_divide(o),
          axiom_right_solve(o),       axiom_left_translation(o),
          axiom_deviation_unitary(o), axiom_al_law(o),
          axiom_deviation_factorization(o), axiom_non_associativity(o)};
}

std::vector<PropertyResult> run_analytic(const Options &o) {
  PrimeContext(o.p, o.precision).require_i();
  std::vector<PropertyResult> out = {
      analytic_exp_additivity(o), analytic_log_exp(o),
      analytic_exp_log(o),        analytic_exp_ix(o),
      analytic_pythagoras(o),     analytic_sin_addition(o),
      analytic_cos_addition(o),   analytic_abs_sin(o),
      analytic_abs_cos(o),        analytic_sin_isometry(o)};
  for (const char *fn :
       {"exp", "log", "sin", "cos", "tan", "arctan", "arcsin", "binom"})
    out.push_back(analytic_series(o, fn));
  return out;
}

std::vector<PropertyResult> run_clifford(const Options &o) {
  PrimeContext(o.p, o.precision).require_i();
  return {clifford_square(o),        clifford_anticommutation(o),
          clifford_reflection(o),    clifford_two_reflections(o),
          clifford_psi_lift(o),      clifford_lift_psi(o),
          clifford_polar_image(o),   clifford_equivariance(o),
          clifford_vertical_homomorphism(o)};
}

std::vector<PropertyResult> run_oracle(const Options &o) {
  const PrimeContext ctx(o.p, o.precision);
  std::vector<PropertyResult> out = {oracle_from_rational(o), oracle_sqrt(o),
                                     oracle_parse_format(o)};
  if (ctx.admits_i())
    for (const char *op : {"loop_add", "left_divide", "deviation"})
      out.push_back(oracle_loop(o, op));
  for (const char *law : {"identity", "left_inverse", "al_law", "mobius"})
    out.push_back(oracle_float(o, law));
  return out;
}

std::vector<PropertyResult> run_suite(const std::string &suite,
                                      const Options &opts) {
  if (suite == "axioms")
    return run_axioms(opts);
  if (suite == "analytic")
    return run_analytic(opts);
  if (suite == "clifford")
    return run_clifford(opts);
  if (suite == "oracle")
    return run_oracle(opts);
  if (suite == "all") {
    PrimeContext(opts.p, opts.precision).require_i();
    std::vector<PropertyResult> out;
    for (const std::string &name : suite_names()) {
      auto part = run_suite(name, opts);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }
  throw Error(ErrorKind::ParseError, "unknown suite '" + suite + "'");
}

bool all_passed(const std::vector<PropertyResult> &results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult &r) { return r.passed(); });
}

std::string format_plain(const std::vector<PropertyResult> &results) {
  std::ostringstream out;
  int failed = 0;
  for (const PropertyResult &r : results) {
    out << r.suite << '/' << r.property << ": "
        << (r.samples - r.failure_count) << '/' << r.samples << ' '
        << (r.passed() ? "pass" : "FAIL");
    if (r.min_digits != INT_MAX)
      out << " (min digits " << r.min_digits << ')';
    out << '\n';
    if (!r.witness.empty())
      out << "  witness: " << r.witness << '\n';
    for (const std::string &f : r.failures)
      out << "  counterexample: " << f << '\n';
    failed += r.passed() ? 0 : 1;
  }
  if (failed == 0)
    out << "all " << results.size() << " properties passed\n";
  else
    out << failed << " of " << results.size() << " properties failed\n";
  return out.str();
}

} // namespace padic::checks
