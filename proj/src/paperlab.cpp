#include "sagbilab/paperlab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sagbilab/error.hpp"
#include "sagbilab/groebner.hpp"
#include "sagbilab/toric.hpp"

namespace sagbilab {

namespace {

const std::vector<std::string> kXY{"x", "y"};

std::string fmt_exp(const ExponentVector& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << ")";
  return os.str();
}

std::vector<std::string> fmt_exps(std::vector<ExponentVector> es) {
  std::sort(es.begin(), es.end());
  std::vector<std::string> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(fmt_exp(e));
  return out;
}

GeneratorSet gens_from_strings(const std::vector<std::string>& polys) {
  std::vector<Polynomial> ps;
  ps.reserve(polys.size());
  for (const auto& s : polys) ps.push_back(parse_polynomial(s, kXY));
  return GeneratorSet::make(kXY, MonomialOrder::grevlex(), std::move(ps));
}

struct Checker {
  ReproductionReport report;

  void expect_eq_exponents(const std::string& label,
                           std::vector<ExponentVector> expected,
                           std::vector<ExponentVector> computed) {
    auto el = fmt_exps(std::move(expected));
    auto cl = fmt_exps(std::move(computed));
    for (const auto& s : el) report.expected.push_back(label + " " + s);
    for (const auto& s : cl) report.computed.push_back(label + " " + s);
    if (el != cl) report.diff.push_back(label + ": exponent sets differ");
  }

  void expect(const std::string& label, bool ok, const std::string& expected,
              const std::string& computed) {
    report.expected.push_back(label + " " + expected);
    report.computed.push_back(label + " " + computed);
    if (!ok) report.diff.push_back(label + ": mismatch");
  }

  ReproductionReport finish(double seconds) {
    report.match = report.diff.empty();
    report.seconds = seconds;
    return report;
  }
};

void check_truncated_run(Checker& ck, const std::vector<std::string>& gens,
                         std::int64_t max_degree,
                         const std::vector<ExponentVector>& expected_initials) {
  SagbiReport r = sagbi_construct(gens_from_strings(gens), max_degree);
  ck.expect("status", r.status == SagbiStatus::Truncated, "Truncated",
            r.status == SagbiStatus::Truncated ? "Truncated" : "Finite");
  ck.expect_eq_exponents("initial", expected_initials,
                         r.basis.initial_exponents());
}

std::int64_t param(const std::optional<std::int64_t>& v, std::int64_t dflt,
                   std::int64_t lo, std::int64_t hi, const char* what) {
  std::int64_t x = v.value_or(dflt);
  if (x < lo || x > hi)
    throw PreconditionError(std::string(what) + " out of the documented range");
  return x;
}

}  // namespace

std::string ReproductionReport::to_json() const {
  nlohmann::json j;
  j["example"] = example;
  j["verdict"] = match ? "Match" : "Mismatch";
  j["expected"] = expected;
  j["computed"] = computed;
  j["diff"] = diff;
  j["seconds"] = seconds;
  return j.dump(2);
}

std::string ReproductionReport::to_text() const {
  std::ostringstream os;
  os << example << ": " << (match ? "Match" : "Mismatch") << "\n";
  if (!match)
    for (const auto& d : diff) os << "  ! " << d << "\n";
  for (const auto& c : computed) os << "  " << c << "\n";
  return os.str();
}

namespace {

void reproduce_e35(Checker& ck, std::int64_t max_degree) {
  check_truncated_run(ck, {"x+y", "x*y", "x*y^2"}, max_degree,
                      golden::e35_initials(max_degree));
}

void reproduce_e36(Checker& ck, std::int64_t s, std::int64_t max_degree) {
  std::vector<std::string> gens;
  {
    std::ostringstream os;
    os << "x^" << s << " + y^" << s;
    gens.push_back(os.str());
  }
  for (std::int64_t i = 0; i < s; ++i)
    for (std::int64_t m = 0; m < 2; ++m) {
      std::ostringstream os;
      os << "x^" << (s + i) << "*y^" << (s - i + s * m);
      gens.push_back(os.str());
    }
  check_truncated_run(ck, gens, max_degree, golden::e36_initials(s, max_degree));
}

void reproduce_e37(Checker& ck, std::int64_t a, std::int64_t b,
                   std::int64_t max_degree) {
  std::vector<std::string> gens{"x+y"};
  for (std::int64_t k = 0; k < a + b; ++k) {
    std::ostringstream os;
    os << "x^" << a << "*y^" << (b + k);
    gens.push_back(os.str());
  }
  check_truncated_run(ck, gens, max_degree, golden::e37_initials(a, b, max_degree));
}

void reproduce_p31(Checker& ck) {
  // Independent case: no cancellation of initial terms is possible.
  SagbiCheck indep = sagbi_check(gens_from_strings({"x+y", "x^2*y"}));
  ck.expect("independent-case check", indep.is_sagbi, "IsSagbi",
            indep.is_sagbi ? "IsSagbi" : "NotSagbi");

  // Dependent case x^2 = (x)^2: completion adjoins xy + y^2/2 and closes.
  SagbiReport r = sagbi_construct(gens_from_strings({"x+y", "x^2"}), 10);
  ck.expect("dependent-case status", r.status == SagbiStatus::Finite, "Finite",
            r.status == SagbiStatus::Finite ? "Finite" : "Truncated");
  Polynomial f = parse_polynomial("x*y + 1/2*y^2", kXY);
  bool has_f = std::count(r.basis.gens.begin(), r.basis.gens.end(), f) > 0;
  ck.expect("dependent-case basis contains x*y + 1/2*y^2", has_f, "yes",
            has_f ? "yes" : "no");
  // x^2 itself subduces to zero over the reduced basis.
  SubductionResult s = subduct(parse_polynomial("x^2", kXY), r.basis);
  ck.expect("x^2 subduces over the basis", s.r.is_zero(), "r = 0",
            s.r.is_zero() ? "r = 0" : "r = " + s.r.format());
}

void reproduce_p32(Checker& ck) {
  SagbiReport r = sagbi_construct(gens_from_strings({"x+y", "x^2+y^2"}), 10);
  ck.expect("status", r.status == SagbiStatus::Finite, "Finite",
            r.status == SagbiStatus::Finite ? "Finite" : "Truncated");
  std::vector<Polynomial> expected{parse_polynomial("x+y", kXY),
                                   parse_polynomial("x*y", kXY)};
  bool eq = r.basis.gens == expected;
  std::ostringstream cs;
  for (const auto& g : r.basis.gens) cs << "{" << g.format() << "} ";
  ck.expect("reduced basis", eq, "{x + y} {x*y}", cs.str());
}

void reproduce_t34_instance(Checker& ck, const std::string& tag,
                            const ExponentVector& v1, const ExponentVector& v2,
                            const ExponentVector& u, std::int64_t max_degree) {
  FiniteGenerators fg = thm34_finite_generators(v1, v2, {u});
  GeneratorSet F = GeneratorSet::make(fg.vars, MonomialOrder::grevlex(), fg.generators);
  SagbiReport r = sagbi_construct(F, max_degree);
  ck.expect(tag + " status", r.status == SagbiStatus::Truncated, "Truncated",
            r.status == SagbiStatus::Truncated ? "Truncated" : "Finite");

  AffineMonoid monoid = construct_module_monoid(v1, v2, {u});
  std::vector<ExponentVector> expected;
  for (const auto& g : monoid.generators_in_box(max_degree))
    if (total_degree(g) <= max_degree) expected.push_back(g);
  ck.expect_eq_exponents(tag + " initial", expected, r.basis.initial_exponents());
}

void reproduce_t34(Checker& ck, std::int64_t max_degree) {
  reproduce_t34_instance(ck, "axis", {1, 0}, {0, 1}, {2, 1}, max_degree);
  reproduce_t34_instance(ck, "slanted", {2, 1}, {1, 2}, {3, 3}, max_degree);
}

void reproduce_e51(Checker& ck, std::int64_t max_degree) {
  check_truncated_run(ck, {"x+y", "x^2*y", "x^2*y^2", "x^3*y^3"}, max_degree,
                      golden::e51_initials(max_degree));
}

void reproduce_e52(Checker& ck, std::int64_t max_degree) {
  check_truncated_run(ck, {"x^2+y^2", "x^2*y", "x^2*y^2"}, max_degree,
                      golden::e52_initials(max_degree));
}

void reproduce_e53(Checker& ck, std::int64_t max_degree) {
  SagbiReport r = sagbi_construct(gens_from_strings({"x*y+y^2", "x", "x*y^2"}),
                                  max_degree);
  ck.expect("status", r.status == SagbiStatus::Truncated, "Truncated",
            r.status == SagbiStatus::Truncated ? "Truncated" : "Finite");
  ck.expect_eq_exponents("initial", golden::e53_initials(max_degree),
                         r.basis.initial_exponents());
  // Monomials at even y-degree, binomials x*y^m + c*y^{m+1} at odd.
  for (const auto& g : r.basis.gens) {
    ExponentVector e = g.initial_exponent(r.basis.order);
    if (e[0] != 1) continue;
    bool odd = e[1] % 2 == 1;
    std::vector<ExponentVector> expect_support =
        odd ? std::vector<ExponentVector>{{0, e[1] + 1}, {1, e[1]}}
            : std::vector<ExponentVector>{{1, e[1]}};
    bool ok = g.support() == expect_support;
    ck.expect("shape at " + fmt_exp(e), ok,
              odd ? "binomial" : "monomial", ok ? "as expected" : g.format());
  }
}

void reproduce_e54(Checker& ck, std::int64_t max_degree) {
  check_truncated_run(ck, {"x^2-y^2", "x^3-y^3", "x^4-y^4"}, max_degree,
                      golden::e54_initials(max_degree));
  // Sign-flipped generators close up into a finite basis.
  SagbiReport flipped =
      sagbi_construct(gens_from_strings({"x^2+y^2", "x^3+y^3", "x^4+y^4"}), 12);
  ck.expect("flipped status", flipped.status == SagbiStatus::Finite, "Finite",
            flipped.status == SagbiStatus::Finite ? "Finite" : "Truncated");
  bool eq = flipped.basis.gens == golden::e54_flipped_finite_basis();
  std::ostringstream cs;
  for (const auto& g : flipped.basis.gens) cs << "{" << g.format() << "} ";
  ck.expect("flipped basis", eq,
            "{x^2 + y^2} {x^3 + y^3} {x^2*y^2} {x^3*y^3}", cs.str());
}

}  // namespace

ReproductionReport reproduce(const ExampleId& id) {
  auto start = std::chrono::steady_clock::now();
  Checker ck;
  ck.report.example = id.name;
  std::int64_t max_degree = param(id.max_degree, -1, -1, 30, "max degree");

  if (id.name == "E3.5") {
    reproduce_e35(ck, max_degree < 0 ? 12 : max_degree);
  } else if (id.name == "E3.6") {
    reproduce_e36(ck, param(id.s, 2, 1, 4, "s"), max_degree < 0 ? 18 : max_degree);
  } else if (id.name == "E3.7") {
    reproduce_e37(ck, param(id.a, 2, 1, 6, "a"), param(id.b, 1, 1, 6, "b"),
                  max_degree < 0 ? 14 : max_degree);
  } else if (id.name == "P3.1") {
    reproduce_p31(ck);
  } else if (id.name == "P3.2") {
    reproduce_p32(ck);
  } else if (id.name == "T3.4") {
    reproduce_t34(ck, max_degree < 0 ? 18 : max_degree);
  } else if (id.name == "T4.1") {
    return thm41_verify(param(id.m, 2, 2, 4, "m"), param(id.k_max, 3, 1, 4, "k_max"));
  } else if (id.name == "E5.1") {
    reproduce_e51(ck, max_degree < 0 ? 12 : max_degree);
  } else if (id.name == "E5.2") {
    reproduce_e52(ck, max_degree < 0 ? 12 : max_degree);
  } else if (id.name == "E5.3") {
    reproduce_e53(ck, max_degree < 0 ? 8 : max_degree);
  } else if (id.name == "E5.4") {
    reproduce_e54(ck, max_degree < 0 ? 28 : max_degree);
  } else {
    throw PreconditionError("unknown example id: " + id.name);
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  return ck.finish(secs);
}

namespace {

// y^{j^2} * (x + coeff*y) over the given ring.
Polynomial conforming_gen(const std::vector<std::string>& vars, std::int64_t j,
                          const Polynomial& coeff_poly) {
  std::size_t yi = 1;
  ExponentVector xe(vars.size(), 0), ye(vars.size(), 0);
  xe[0] = 1;
  ye[yi] = 1;
  Polynomial x_p = Polynomial::monomial(vars, xe, Rational(1));
  Polynomial y_p = Polynomial::monomial(vars, ye, Rational(1));
  ExponentVector pre(vars.size(), 0);
  pre[yi] = j * j;
  return Polynomial::monomial(vars, pre, Rational(1)) * (x_p + coeff_poly * y_p);
}

Polynomial var_poly(const std::vector<std::string>& vars, const std::string& name) {
  return parse_polynomial(name, vars);
}

bool is_sum_of_two_squares(std::int64_t t) {
  for (std::int64_t p = 0; p * p <= t; ++p) {
    std::int64_t rest = t - p * p;
    std::int64_t q = static_cast<std::int64_t>(std::lround(std::sqrt(double(rest))));
    for (std::int64_t d = -1; d <= 1; ++d) {
      std::int64_t c = q + d;
      if (c >= 0 && c * c == rest) return true;
    }
  }
  return false;
}

}  // namespace

ReproductionReport thm41_verify(std::int64_t m, std::int64_t k_max) {
  auto start = std::chrono::steady_clock::now();
  Checker ck;
  {
    std::ostringstream os;
    os << "T4.1(m=" << m << ",k_max=" << k_max << ")";
    ck.report.example = os.str();
  }
  if (m < 2 || m > 4 || k_max < 1 || k_max > 4)
    throw PreconditionError("parameters out of the documented range");

  // Base case: the printed three-term expansion over Q[x,y,a0,a1,a2].
  {
    std::vector<std::string> vars{"x", "y", "a0", "a1", "a2"};
    std::vector<Polynomial> g;
    for (std::int64_t i = 0; i <= 2; ++i)
      g.push_back(conforming_gen(vars, i, var_poly(vars, "a" + std::to_string(i))));
    Polynomial coeff = var_poly(vars, "3*a0 + a2 - 4*a1");
    Polynomial lhs = g[0].pow(3) * g[2] - g[1].pow(4) - coeff * g[0] * g[1] * g[2];

    std::map<std::string, Polynomial> to_a{{"X0", var_poly(vars, "a0")},
                                           {"X1", var_poly(vars, "a1")},
                                           {"X2", var_poly(vars, "a2")}};
    auto h = golden::thm41_h_generators();
    Polynomial rhs = h[0].substitute(to_a) * var_poly(vars, "x^2*y^6") +
                     h[1].substitute(to_a) * var_poly(vars, "x*y^7") +
                     h[2].substitute(to_a) * var_poly(vars, "y^8");
    bool ok = lhs == rhs;
    ck.expect("base-case expansion", ok, "three printed coefficient polynomials",
              ok ? "identical" : "differs");
  }

  // Reduced lex Groebner basis of the coefficient relations.
  {
    auto h = golden::thm41_h_generators();
    Ideal ideal{h[0].vars(), h};
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::lex());
    auto expected = golden::thm41_groebner_basis();
    std::sort(expected.begin(), expected.end(),
              [&gb](const Polynomial& a, const Polynomial& b) {
                return order_less(gb.order, a.initial_exponent(gb.order),
                                  b.initial_exponent(gb.order));
              });
    bool ok = gb.elements == expected;
    std::ostringstream cs;
    for (const auto& e : gb.elements) cs << "{" << e.format() << "} ";
    ck.expect("reduced lex GB", ok, "the three printed polynomials", cs.str());
    bool quartic = !gb.elements.empty() &&
                   gb.elements.front() ==
                       parse_polynomial("X1^4 - 4*X1^3*X2 + 6*X1^2*X2^2 - "
                                        "4*X1*X2^3 + X2^4",
                                        h[0].vars());
    ck.expect("smallest GB element is (X1-X2)^4", quartic, "yes",
              quartic ? "yes" : "no");
  }

  // Induction identities over Q[x,y,a,b].
  {
    std::vector<std::string> vars{"x", "y", "a", "b"};
    Polynomial a_p = var_poly(vars, "a");
    Polynomial ab_p = var_poly(vars, "a + b");
    Polynomial b_p = var_poly(vars, "b");
    auto gj = [&](std::int64_t j) { return conforming_gen(vars, j, a_p); };
    auto gdev = [&](std::int64_t j) { return conforming_gen(vars, j, ab_p); };
    Polynomial xay2 = var_poly(vars, "x + a*y").pow(2);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      {
        Polynomial gi = gdev(2 * k + 1);
        Polynomial lhs = b_p.pow(2) * gj(1) * gj(2) * gi -
                         b_p * gj(0).pow(2) * gj(2) * gi +
                         gj(0) * gj(1).pow(3) * gi -
                         gj(0) * gj(k - 1) * gj(k + 1).pow(3);
        ExponentVector ye(vars.size(), 0);
        ye[1] = 4 * k * k + 4 * k + 7;
        Polynomial rhs =
            b_p.pow(3) * Polynomial::monomial(vars, ye, Rational(1)) * xay2;
        bool ok = lhs == rhs;
        ck.expect("odd identity k=" + std::to_string(k), ok, "holds",
                  ok ? "holds" : "fails");
      }
      {
        Polynomial gi = gdev(2 * k);
        Polynomial lhs = b_p.pow(2) * gj(1).pow(2) * gi -
                         b_p * gj(0).pow(2) * gj(1) * gi + gj(0).pow(4) * gi -
                         gj(0) * gj(k).pow(4);
        ExponentVector ye(vars.size(), 0);
        ye[1] = 4 * k * k + 3;
        Polynomial rhs =
            b_p.pow(3) * Polynomial::monomial(vars, ye, Rational(1)) * xay2;
        bool ok = lhs == rhs;
        ck.expect("even identity k=" + std::to_string(k), ok, "holds",
                  ok ? "holds" : "fails");
      }
    }
  }

  // Obstruction: the leading exponents of both identities lie outside the
  // monoid, since squares are 0 or 1 mod 4.
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t t : {4 * k * k + 4 * k + 7, 4 * k * k + 3}) {
      bool mod_ok = t % 4 == 3;
      bool brute_ok = !is_sum_of_two_squares(t);
      ck.expect("no two-square split of y-degree " + std::to_string(t),
                mod_ok && brute_ok, "none (3 mod 4)",
                mod_ok && brute_ok ? "none" : "found");
    }
  }

  // Rewriting step: x -> x - a*y maps each generator to a monomial, and
  // every toric relation of the initial exponents vanishes at the g_i.
  {
    std::vector<std::string> vars{"x", "y", "a"};
    Polynomial a_p = var_poly(vars, "a");
    std::vector<Polynomial> g;
    for (std::int64_t i = 0; i <= m; ++i) g.push_back(conforming_gen(vars, i, a_p));
    std::map<std::string, Polynomial> sigma{
        {"x", var_poly(vars, "x - a*y")},
        {"y", var_poly(vars, "y")},
        {"a", a_p}};
    bool all_monomial = true;
    for (std::int64_t i = 0; i <= m; ++i) {
      ExponentVector e(vars.size(), 0);
      e[0] = 1;
      e[1] = i * i;
      if (!(g[static_cast<std::size_t>(i)].substitute(sigma) ==
            Polynomial::monomial(vars, e, Rational(1))))
        all_monomial = false;
    }
    ck.expect("substitution sends each generator to x*y^(i^2)", all_monomial,
              "yes", all_monomial ? "yes" : "no");

    std::vector<ExponentVector> cols;
    for (std::int64_t i = 0; i <= m; ++i) cols.push_back({1, i * i});
    BinomialIdeal rels = toric_ideal(ExponentMatrix::from_columns(cols));
    bool all_vanish = true;
    std::map<std::string, Polynomial> to_g;
    for (std::size_t i = 0; i < g.size(); ++i)
      to_g.emplace("X" + std::to_string(i), g[i]);
    for (const auto& rel : rels.generators)
      if (!rel.substitute(to_g).is_zero()) all_vanish = false;
    ck.expect("all " + std::to_string(rels.generators.size()) +
                  " toric relations vanish at the generators",
              all_vanish, "yes", all_vanish ? "yes" : "no");
  }

  // Finite SAGBI check at the sample value a = 1.
  {
    std::vector<Polynomial> g;
    for (std::int64_t i = 0; i <= m; ++i)
      g.push_back(conforming_gen(kXY, i, Polynomial::constant(kXY, Rational(1))));
    SagbiCheck check =
        sagbi_check(GeneratorSet::make(kXY, MonomialOrder::grevlex(), g));
    ck.expect("finite SAGBI check at a=1", check.is_sagbi, "IsSagbi",
              check.is_sagbi ? "IsSagbi" : "NotSagbi");
  }

  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  return ck.finish(secs);
}

std::string plot_monoid_svg(const std::vector<ExponentVector>& members,
                            const std::vector<ExponentVector>& irreducible_points,
                            const std::vector<ExponentVector>& rays,
                            std::int64_t bound) {
  const std::int64_t pitch = 24, margin = 30;
  const std::int64_t size = 2 * margin + bound * pitch;
  auto px = [&](std::int64_t v) { return margin + v * pitch; };
  auto py = [&](std::int64_t v) { return size - margin - v * pitch; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size
     << " " << size << "\">\n";
  for (std::int64_t i = 0; i <= bound; ++i) {
    os << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i)
       << "\" y2=\"" << py(bound)
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\""
       << px(bound) << "\" y2=\"" << py(i)
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  std::vector<ExponentVector> sorted_rays = rays;
  std::sort(sorted_rays.begin(), sorted_rays.end());
  for (const auto& r : sorted_rays) {
    if (r.size() != 2 || (r[0] == 0 && r[1] == 0)) continue;
    std::int64_t scale = bound;
    std::int64_t mx = std::max(r[0], r[1]);
    if (mx > 0) scale = bound / mx + 1;
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
       << px(r[0] * scale) << "\" y2=\"" << py(r[1] * scale)
       << "\" stroke=\"#555555\" stroke-width=\"2\"/>\n";
  }
  std::vector<ExponentVector> sorted_members = members;
  std::sort(sorted_members.begin(), sorted_members.end());
  for (const auto& p : sorted_members) {
    if (p.size() != 2 || p[0] > bound || p[1] > bound) continue;
    os << "<circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1])
       << "\" r=\"4\" fill=\"black\"/>\n";
  }
  std::vector<ExponentVector> sorted_irr = irreducible_points;
  std::sort(sorted_irr.begin(), sorted_irr.end());
  for (const auto& p : sorted_irr) {
    if (p.size() != 2 || p[0] > bound || p[1] > bound) continue;
    os << "<circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1])
       << "\" r=\"8\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sagbilab
