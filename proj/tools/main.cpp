#include <cctype>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sagbilab/error.hpp"
#include "sagbilab/groebner.hpp"
#include "sagbilab/io.hpp"
#include "sagbilab/monoid.hpp"
#include "sagbilab/paperlab.hpp"
#include "sagbilab/sagbi.hpp"
#include "sagbilab/toric.hpp"

namespace {

using namespace sagbilab;

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grlex") return MonomialOrder::grlex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name.rfind("weight:", 0) == 0) {
    std::vector<std::int64_t> w;
    std::istringstream in(name.substr(7));
    std::string tok;
    while (std::getline(in, tok, ',')) w.push_back(std::stoll(tok));
    return MonomialOrder::weight_then_lex(std::move(w));
  }
  throw PreconditionError("unknown order '" + name +
                          "' (use lex, grlex, grevlex, weight:w1,w2,...)");
}

std::string order_name(const MonomialOrder& o) {
  switch (o.kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::WeightThenLex: return "weight_then_lex";
    case OrderKind::Block: return "block";
  }
  return "?";
}

ExponentVector parse_point(const std::string& text) {
  ExponentVector p;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    p.push_back(std::stoll(tok, &used));
    if (used != tok.size()) throw PreconditionError("bad coordinate: " + tok);
  }
  if (p.empty()) throw PreconditionError("empty point");
  return p;
}

std::vector<ExponentVector> parse_points(const std::string& text) {
  std::vector<ExponentVector> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ';'))
    if (!tok.empty()) out.push_back(parse_point(tok));
  return out;
}

// Monoid grammar: `a,b` points, `a,b+m*c,d` families, `(1,n^2)` stream,
// semicolon-separated.
AffineMonoid parse_monoid_spec(const std::string& text) {
  AffineMonoid m;
  m.dim = 0;
  std::istringstream in(text);
  std::string tok;
  auto note_dim = [&m](const ExponentVector& v) {
    if (m.dim == 0)
      m.dim = v.size();
    else if (m.dim != v.size())
      throw DimensionError("mixed point dimensions in monoid spec");
  };
  while (std::getline(in, tok, ';')) {
    std::string t;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) continue;
    if (t == "(1,n^2)") {
      m.stream = AffineMonoid::Stream::OneNSquared;
      note_dim({1, 0});
      continue;
    }
    auto plus = t.find("+m*");
    if (plus != std::string::npos) {
      AffineMonoid::Family fam{parse_point(t.substr(0, plus)),
                               parse_point(t.substr(plus + 3))};
      note_dim(fam.base);
      note_dim(fam.period);
      m.families.push_back(std::move(fam));
      continue;
    }
    ExponentVector p = parse_point(t);
    note_dim(p);
    m.finite_gens.push_back(std::move(p));
  }
  if (m.dim == 0) throw PreconditionError("empty monoid spec");
  return m;
}

nlohmann::json exps_json(const std::vector<ExponentVector>& es) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : es) a.push_back(e);
  return a;
}

std::string fmt_point(const ExponentVector& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

GeneratorSet load_gens(const std::string& path, const std::string& order) {
  GeneratorFile f = read_generator_file(path);
  return GeneratorSet::make(f.vars, parse_order(order), f.polys);
}

int run(int argc, char** argv) {
  CLI::App app{"sagbilab: SAGBI bases, toric ideals, and affine monoid geometry"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string gens_path, order = "grevlex", poly_text, matrix_path, out_path;
  std::int64_t max_deg = 10, bound = 10;

  auto* sagbi_cmd = app.add_subcommand("sagbi", "SAGBI basis operations");
  sagbi_cmd->require_subcommand(1);
  auto* sagbi_check_cmd = sagbi_cmd->add_subcommand("check", "SAGBI criterion");
  sagbi_check_cmd->add_option("--gens", gens_path, "generator file")->required();
  sagbi_check_cmd->add_option("--order", order, "monomial order");
  auto* sagbi_compute_cmd =
      sagbi_cmd->add_subcommand("compute", "degree-truncated completion");
  sagbi_compute_cmd->add_option("--gens", gens_path)->required();
  sagbi_compute_cmd->add_option("--max-deg", max_deg)->required();
  sagbi_compute_cmd->add_option("--order", order);

  auto* subduce_cmd = app.add_subcommand("subduce", "subduct one polynomial");
  subduce_cmd->add_option("--gens", gens_path)->required();
  subduce_cmd->add_option("--poly", poly_text)->required();
  subduce_cmd->add_option("--order", order);

  auto* toric_cmd = app.add_subcommand("toric", "toric ideal of a matrix");
  toric_cmd->add_option("--matrix", matrix_path)->required();

  auto* gb_cmd = app.add_subcommand("groebner", "reduced Groebner basis");
  gb_cmd->add_option("--gens", gens_path)->required();
  gb_cmd->add_option("--order", order);

  std::string spec_text, v1_text, v2_text, us_text, plot_path;
  auto* monoid_cmd = app.add_subcommand("monoid", "affine monoid geometry");
  monoid_cmd->require_subcommand(1);
  auto* irr_cmd = monoid_cmd->add_subcommand("irreducibles", "box-bounded irreducibles");
  irr_cmd->add_option("--gens", spec_text)->required();
  irr_cmd->add_option("--bound", bound)->required();
  auto* cone_cmd = monoid_cmd->add_subcommand("cone", "cone of the generators");
  cone_cmd->add_option("--gens", spec_text)->required();
  cone_cmd->add_option("--bound", bound);
  auto* construct_cmd =
      monoid_cmd->add_subcommand("construct", "module-shaped monoid");
  construct_cmd->add_option("--v1", v1_text)->required();
  construct_cmd->add_option("--v2", v2_text)->required();
  construct_cmd->add_option("--us", us_text)->required();
  construct_cmd->add_option("--plot", plot_path, "write an SVG diagram");
  construct_cmd->add_option("--bound", bound);

  std::string example_name;
  std::int64_t p_s = -1, p_a = -1, p_b = -1, p_m = 2, p_k = 3, p_maxdeg = -1;
  auto* paper_cmd = app.add_subcommand("paper", "reproduction harness");
  paper_cmd->require_subcommand(1);
  auto* repro_cmd = paper_cmd->add_subcommand("reproduce", "one catalogued example");
  repro_cmd->add_option("--example", example_name)->required();
  repro_cmd->add_option("--s", p_s);
  repro_cmd->add_option("--a", p_a);
  repro_cmd->add_option("--b", p_b);
  repro_cmd->add_option("--m", p_m);
  repro_cmd->add_option("--k-max", p_k);
  repro_cmd->add_option("--max-deg", p_maxdeg);
  auto* thm41_cmd = paper_cmd->add_subcommand("thm41", "full verification pipeline");
  thm41_cmd->add_option("--m", p_m);
  thm41_cmd->add_option("--k-max", p_k);

  auto* plot_cmd = app.add_subcommand("plot", "SVG lattice diagram of a monoid");
  plot_cmd->add_option("--gens", spec_text)->required();
  plot_cmd->add_option("--bound", bound)->required();
  plot_cmd->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  if (sagbi_check_cmd->parsed()) {
    GeneratorSet F = load_gens(gens_path, order);
    SagbiCheck c = sagbi_check(F);
    if (json) {
      nlohmann::json j;
      j["order"] = order_name(F.order);
      j["is_sagbi"] = c.is_sagbi;
      j["relations_checked"] = c.relations_checked;
      if (c.witness_binomial) j["witness_binomial"] = c.witness_binomial->format();
      if (c.witness_remainder) j["witness_remainder"] = c.witness_remainder->format();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (c.is_sagbi ? "IsSagbi" : "NotSagbi") << " (order "
                << order_name(F.order) << ", " << c.relations_checked
                << " relations checked)\n";
      if (c.witness_binomial)
        std::cout << "witness relation: " << c.witness_binomial->format()
                  << "\nwitness remainder: " << c.witness_remainder->format()
                  << "\n";
    }
  } else if (sagbi_compute_cmd->parsed()) {
    GeneratorSet F = load_gens(gens_path, order);
    SagbiReport r = sagbi_construct(F, max_deg);
    if (json) {
      nlohmann::json j;
      j["order"] = order_name(F.order);
      j["status"] = r.status == SagbiStatus::Finite ? "Finite" : "Truncated";
      j["rounds"] = r.rounds;
      j["max_degree_reached"] = r.max_degree_reached;
      nlohmann::json basis = nlohmann::json::array();
      for (const auto& g : r.basis.gens) basis.push_back(g.format());
      j["basis"] = basis;
      j["initial_exponents"] = exps_json(r.basis.initial_exponents());
      if (r.certificate)
        j["certificate_relations"] = r.certificate->relations_checked;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (r.status == SagbiStatus::Finite ? "Finite" : "Truncated")
                << " after " << r.rounds << " rounds (order "
                << order_name(F.order) << ")\n";
      for (const auto& g : r.basis.gens)
        std::cout << "  " << g.format() << "    in: "
                  << fmt_point(g.initial_exponent(F.order)) << "\n";
    }
  } else if (subduce_cmd->parsed()) {
    GeneratorSet F = load_gens(gens_path, order);
    Polynomial f = parse_polynomial(poly_text, F.vars);
    SubductionResult s = subduct(f, F);
    if (json) {
      nlohmann::json j;
      j["q"] = s.q.format();
      j["r"] = s.r.format();
      j["c"] = to_string(s.c);
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : s.q_expression) {
        nlohmann::json tj;
        tj["coefficient"] = to_string(t.coefficient);
        tj["multiplicities"] = t.multiplicities;
        terms.push_back(tj);
      }
      j["q_expression"] = terms;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "q = " << s.q.format() << "\nr = " << s.r.format()
                << "\nc = " << to_string(s.c) << "\n";
    }
  } else if (toric_cmd->parsed()) {
    BinomialIdeal ideal = toric_ideal(read_matrix_file(matrix_path));
    if (json) {
      nlohmann::json j;
      j["vars"] = ideal.vars;
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : ideal.generators) gens.push_back(g.format());
      j["generators"] = gens;
      std::cout << j.dump(2) << "\n";
    } else {
      if (ideal.generators.empty()) std::cout << "(no relations)\n";
      for (const auto& g : ideal.generators) std::cout << g.format() << "\n";
    }
  } else if (gb_cmd->parsed()) {
    GeneratorFile f = read_generator_file(gens_path);
    GroebnerBasis gb = buchberger(Ideal{f.vars, f.polys}, parse_order(order));
    if (json) {
      nlohmann::json j;
      j["order"] = order_name(gb.order);
      nlohmann::json els = nlohmann::json::array();
      for (const auto& g : gb.elements) els.push_back(g.format());
      j["elements"] = els;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& g : gb.elements) std::cout << g.format() << "\n";
    }
  } else if (irr_cmd->parsed()) {
    AffineMonoid m = parse_monoid_spec(spec_text);
    auto irr = irreducibles(m, bound);
    if (json) {
      std::cout << exps_json(irr).dump(2) << "\n";
    } else {
      for (const auto& p : irr) std::cout << fmt_point(p) << "\n";
    }
  } else if (cone_cmd->parsed()) {
    AffineMonoid m = parse_monoid_spec(spec_text);
    Cone2D c = cone_of(m.generators_in_box(bound));
    if (json) {
      nlohmann::json j;
      j["ray1"] = c.ray1;
      j["ray2"] = c.ray2;
      j["normal1"] = c.normal1;
      j["normal2"] = c.normal2;
      j["degenerate"] = c.degenerate;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "rays: " << fmt_point(c.ray1) << " " << fmt_point(c.ray2)
                << (c.degenerate ? " (degenerate)" : "") << "\n";
      if (!c.degenerate)
        std::cout << "normals: " << fmt_point(c.normal1) << " "
                  << fmt_point(c.normal2) << "\n";
    }
  } else if (construct_cmd->parsed()) {
    AffineMonoid m = construct_module_monoid(parse_point(v1_text),
                                             parse_point(v2_text),
                                             parse_points(us_text));
    auto gens = m.generators_in_box(bound);
    if (!plot_path.empty()) {
      Cone2D c = cone_of(gens);
      write_text_file(plot_path,
                      plot_monoid_svg(m.elements_in_box(bound),
                                      irreducibles(m, bound),
                                      {c.ray1, c.ray2}, bound));
    }
    if (json) {
      nlohmann::json j;
      j["generators_in_box"] = exps_json(gens);
      FinitenessResult fin = is_finitely_generated(m, bound);
      j["finitely_generated"] =
          fin.verdict == FinitenessVerdict::Yes
              ? "Yes"
              : fin.verdict == FinitenessVerdict::No ? "No" : "Unknown";
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& p : gens) std::cout << fmt_point(p) << "\n";
    }
  } else if (repro_cmd->parsed()) {
    ExampleId id;
    id.name = example_name;
    if (p_s >= 0) id.s = p_s;
    if (p_a >= 0) id.a = p_a;
    if (p_b >= 0) id.b = p_b;
    if (repro_cmd->count("--m")) id.m = p_m;
    if (repro_cmd->count("--k-max")) id.k_max = p_k;
    if (p_maxdeg >= 0) id.max_degree = p_maxdeg;
    ReproductionReport rep = reproduce(id);
    std::cout << (json ? rep.to_json() + "\n" : rep.to_text());
  } else if (thm41_cmd->parsed()) {
    ReproductionReport rep = thm41_verify(p_m, p_k);
    std::cout << (json ? rep.to_json() + "\n" : rep.to_text());
  } else if (plot_cmd->parsed()) {
    AffineMonoid m = parse_monoid_spec(spec_text);
    write_text_file(out_path,
                    plot_monoid_svg(m.elements_in_box(bound),
                                    irreducibles(m, bound), {}, bound));
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sagbilab::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
