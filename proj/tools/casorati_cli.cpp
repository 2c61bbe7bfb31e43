#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casorati/algebraic_ode.hpp"
#include "casorati/dependence.hpp"
#include "casorati/difference_form.hpp"
#include "casorati/errors.hpp"
#include "casorati/expression.hpp"
#include "casorati/monodromy.hpp"
#include "casorati/operator_calculus.hpp"
#include "casorati/transforms.hpp"

using namespace casorati;
using Json = nlohmann::ordered_json;

namespace {

struct Output {
  std::string text;
  Json json = Json::object();
};

struct Globals {
  bool json = false;
  bool exact = false;
  bool numeric = false;
  double tolerance = 1e-10;
  int trunc = 16;
  std::string window;
};

// ---- formatting ----

std::string str(const BigRational& q) { return to_string(q); }
std::string str(const RationalFunction& r, char var = 'x') { return to_string(r, var); }

std::string str(Complex z) {
  // drop rounding noise in either component
  const double scale = 1e-13 * std::max(1.0, std::abs(z));
  if (std::abs(z.real()) < scale) z.real(0);
  if (std::abs(z.imag()) < scale) z.imag(0);
  char buf[64];
  if (z.imag() == 0) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real() == 0 ? 0.0 : z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

std::string str(const ExactExponent& e) {
  if (e.modulus == 1) return str(e.turn);
  std::string s = "log(" + str(e.modulus) + ")/(2*pi*i)";
  if (e.turn != 0) s += " + " + str(e.turn);
  return s;
}

Json coeff_list(const std::vector<RationalFunction>& c, char var = 'x') {
  Json out = Json::array();
  for (const auto& r : c) out.push_back(str(r, var));
  return out;
}

Json form_json(const DifferenceForm& f) {
  return Json{{"form", to_string(f)}, {"order", f.order()}, {"coeffs", coeff_list(f.coeffs())}};
}

Json relation_json(const Relation& r) {
  Json out = Json::array();
  for (const auto& q : r) out.push_back(str(q));
  return out;
}

std::string relation_text(const Relation& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + str(r[i]);
  return s + ")";
}

// ---- argument parsing ----

Window parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorCode::InvalidArgument, "window must look like a..b");
  try {
    const long a = std::stol(text.substr(0, dots)), b = std::stol(text.substr(dots + 2));
    if (b < a) fail(ErrorCode::InvalidArgument, "empty window");
    return {a, b + 1};
  } catch (const std::logic_error&) {
    fail(ErrorCode::InvalidArgument, "window must look like a..b");
  }
}

Matrix<BigRational> parse_matrix(const std::string& text) {
  std::vector<std::vector<BigRational>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<BigRational> r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) r.push_back(parse_constant(entry));
    rows.push_back(std::move(r));
  }
  const size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) fail(ErrorCode::InvalidArgument, "matrix must be square, rows separated by ';'");
  Matrix<BigRational> m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<GridFunction> sample_sequences(const std::vector<std::string>& seqs, long first, long last) {
  std::vector<GridFunction> out;
  for (const auto& s : seqs) {
    const RationalFunction r = parse_rational_function(s, 't');
    out.push_back(GridFunction::tabulate(first, last, [&](long t) { return r(BigRational(t)); }));
  }
  return out;
}

bool numeric_mode(const Globals& g) { return g.numeric && !g.exact; }

// ---- subcommands ----

Output cmd_mul(const std::string& a, const std::string& b) {
  const DifferenceForm p = parse_form(a) * parse_form(b);
  return {to_string(p), form_json(p)};
}

Output cmd_divrem(const std::string& a, const std::string& b) {
  const auto d = form_divrem(parse_form(a), parse_form(b));
  return {"quotient: " + to_string(d.quotient) + "\nremainder: " + to_string(d.remainder),
          Json{{"quotient", form_json(d.quotient)}, {"remainder", form_json(d.remainder)}}};
}

Output cmd_ruffini(const std::string& a, const std::string& gamma) {
  const auto d = ruffini_divide(parse_form(a), parse_rational_function(gamma));
  return {"quotient: " + to_string(d.quotient) + "\nremainder: " + str(d.remainder),
          Json{{"quotient", form_json(d.quotient)}, {"remainder", str(d.remainder)}}};
}

Output cmd_apply(const Globals& g, const std::string& form_text, const std::string& seq) {
  if (g.window.empty()) fail(ErrorCode::InvalidArgument, "apply needs --window a..b");
  const DifferenceForm form = parse_form(form_text);
  const Window w = parse_window(g.window);
  const auto f = sample_sequences({seq}, w.begin, w.end - 1 + std::max(0, form.order()))[0];
  Output out;
  Json values = Json::array();
  for (long t = w.begin; t < w.end; ++t) {
    const BigRational v = form_apply(form, f, t);
    out.text += (out.text.empty() ? "" : "\n") + std::to_string(t) + ": " + str(v);
    values.push_back(Json{{"t", t}, {"value", str(v)}});
  }
  out.json = Json{{"values", values}};
  return out;
}

Output cmd_casoratian(const std::vector<std::string>& seqs, long at) {
  const long n = static_cast<long>(seqs.size());
  const BigRational v = casoratian(sample_sequences(seqs, at, at + n - 1), at);
  return {str(v), Json{{"at", at}, {"value", str(v)}}};
}

const char* case_name(DependenceCase c) {
  switch (c) {
    case DependenceCase::A: return "A";
    case DependenceCase::B: return "B";
    default: return "None";
  }
}

Json report_json(const DependenceReport& r) {
  Json rels = Json::array();
  for (const auto& rel : r.relations) rels.push_back(relation_json(rel));
  return Json{{"window", Json::array({r.window.begin, r.window.end - 1})},
              {"rank", r.rank},
              {"case", case_name(r.dependence)},
              {"relations", rels}};
}

std::string report_text(const DependenceReport& r) {
  std::string s = "window " + std::to_string(r.window.begin) + ".." + std::to_string(r.window.end - 1) + ": rank " +
                  std::to_string(r.rank) + ", case " + case_name(r.dependence);
  for (const auto& rel : r.relations) s += "\n  relation " + relation_text(rel);
  return s;
}

Output cmd_dependence(const std::vector<std::string>& seqs, long at, long extra) {
  const long n = static_cast<long>(seqs.size()) - 1;
  const auto r = christoffel_analyze(sample_sequences(seqs, at, at + n + extra), at, extra);
  return {report_text(r), report_json(r)};
}

Output cmd_scan(const Globals& g, const std::vector<std::string>& seqs, long length) {
  if (g.window.empty()) fail(ErrorCode::InvalidArgument, "scan needs --window a..b");
  const Window w = parse_window(g.window);
  const auto reports = windowed_scan(sample_sequences(seqs, w.begin, w.end - 1), w, length);
  Output out;
  Json arr = Json::array();
  for (const auto& r : reports) {
    out.text += (out.text.empty() ? "" : "\n") + report_text(r);
    arr.push_back(report_json(r));
  }
  out.json = Json{{"windows", arr}};
  return out;
}

MonodromySpec monodromy(const Globals& g, const std::string& m) {
  return MonodromySpec::exact(parse_matrix(m), numeric_mode(g) ? Mode::Numeric : Mode::Exact, g.tolerance);
}

Output cmd_companion(const std::string& m) {
  const DifferenceForm f = companion_difference_equation(parse_matrix(m));
  return {to_string(f), form_json(f)};
}

Output cmd_minimal(const std::string& m) {
  const DifferenceForm f = minimal_relation(parse_matrix(m));
  return {to_string(f), form_json(f)};
}

Output cmd_local_structure(const Globals& g, const std::string& m) {
  const auto ls = local_structure(monodromy(g, m));
  Output out;
  Json blocks = Json::array();
  for (const auto& b : ls.blocks) {
    const std::string ev = b.exact_eigenvalue ? str(*b.exact_eigenvalue) : str(b.eigenvalue);
    const std::string ex = b.exact_exponent ? str(*b.exact_exponent) : str(b.exponent);
    std::string sizes;
    Json js = Json::array();
    for (int s : b.jordan_sizes) {
      sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
      js.push_back(s);
    }
    out.text += (out.text.empty() ? "" : "\n") + std::string("eigenvalue ") + ev + ", exponent " + ex + ", jordan [" +
                sizes + "]";
    blocks.push_back(Json{{"eigenvalue", ev}, {"exponent", ex}, {"jordan_sizes", js}});
  }
  out.json = Json{{"blocks", blocks}};
  return out;
}

template <class Local>
Output list_output(const std::vector<Local>& sols) {
  Output out;
  Json arr = Json::array();
  for (size_t j = 0; j < sols.size(); ++j) {
    out.text += (j ? "\n" : "") + std::string("y") + std::to_string(j + 1) + " = " + to_string(sols[j]);
    arr.push_back(to_string(sols[j]));
  }
  out.json = Json{{"solutions", arr}};
  return out;
}

Output cmd_canonical_system(const Globals& g, const std::string& m) {
  const auto spec = monodromy(g, m);
  if (numeric_mode(g)) return list_output(canonical_fundamental_system(spec));
  return list_output(canonical_fundamental_system_exact(spec));
}

Output cmd_theta_det(const Globals& g, const std::string& m, const std::vector<std::string>& combos) {
  const auto spec = monodromy(g, m);
  auto rows = [&](size_t n) {
    std::vector<std::vector<BigRational>> out;
    for (const auto& c : combos) {
      std::vector<BigRational> row;
      std::stringstream ss(c);
      std::string e;
      while (std::getline(ss, e, ',')) row.push_back(parse_constant(e));
      if (row.size() != n) fail(ErrorCode::InvalidArgument, "each --combo needs one coefficient per solution");
      out.push_back(std::move(row));
    }
    if (out.empty())
      for (size_t i = 0; i < n; ++i) {
        out.emplace_back(n, BigRational(0));
        out.back()[i] = 1;
      }
    return out;
  };
  auto family = [&](const auto& sols) {
    using Local = std::decay_t<decltype(sols[0])>;
    std::vector<Local> fam;
    for (const auto& row : rows(sols.size())) {
      Local y;
      for (size_t j = 0; j < sols.size(); ++j) {
        if constexpr (std::is_same_v<Local, ExactLocal>)
          y = y + sols[j].scaled(row[j]);
        else
          y = y + sols[j].scaled(to_complex(row[j]));
      }
      fam.push_back(y);
    }
    return fam;
  };
  Output out;
  if (numeric_mode(g)) {
    const auto det = theta_determinant(family(canonical_fundamental_system(spec)));
    const double mx = max_abs_coefficient(det);
    out.text = to_string(det) + "\nmax coefficient " + str(Complex(mx));
    out.json = Json{{"determinant", to_string(det)}, {"max_abs_coefficient", mx}};
  } else {
    const auto det = theta_determinant(family(canonical_fundamental_system_exact(spec)));
    out.text = to_string(det);
    out.json = Json{{"determinant", to_string(det)}, {"zero", det.is_zero()}};
  }
  return out;
}

Output cmd_transform(const std::string& op_text) {
  const auto rel = diff_to_difference(parse_differential_operator(op_text));
  const auto emb = as_theta_form(rel);
  Json terms = Json::object();
  for (const auto& [s, c] : rel.terms) terms[std::to_string(s)] = to_string(c);
  return {to_string(rel) + "\ntheta form: " + to_string(emb.form) + " (offset " + std::to_string(emb.offset) + ")",
          Json{{"relation", to_string(rel)}, {"terms", terms}, {"theta_form", form_json(emb.form)},
               {"offset", emb.offset}}};
}

Output cmd_transform_inverse(const std::string& rel_text, long offset) {
  const auto rel = parse_relation(rel_text, offset);
  const auto op = difference_to_diff(rel);
  if (!op) fail(ErrorCode::InvalidArgument, "relation is not the image of a differential operator");
  return {to_string(*op), Json{{"relation", to_string(rel)}, {"operator", to_string(*op)}}};
}

Json ode_json(const LinearODE& ode) {
  return Json{{"order", ode.order()}, {"coeffs", coeff_list(ode.coeffs)}, {"equation", to_string(ode) + " = 0"}};
}

Output cmd_tannery(const std::string& f) {
  const auto ode = tannery_ode(parse_bivariate(f));
  return {to_string(ode) + " = 0", ode_json(ode)};
}

Output cmd_tannery_shape(const std::string& f_text) {
  const auto f = parse_bivariate(f_text);
  const auto ode = tannery_ode(f);
  const auto phi = derivative_table(f, std::max(f.degree_y(), 1)).phi;
  const bool shaped = check_tannery_shape(ode, phi);
  return {to_string(ode) + " = 0\nphi = " + str(phi) + "\nshape: " + (shaped ? "yes" : "no"),
          Json{{"ode", ode_json(ode)}, {"phi", str(phi)}, {"shape", shaped}}};
}

Output cmd_verify_numeric(const std::string& f_text, std::vector<double> xs) {
  const auto f = parse_bivariate(f_text);
  const auto ode = tannery_ode(f);
  if (xs.empty()) xs = {0.37, 1.21, -0.83, 2.47, -1.69};
  std::vector<Complex> pts(xs.begin(), xs.end());
  const double r = verify_ode_numeric(f, ode, pts);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return {to_string(ode) + " = 0\nresidual " + buf, Json{{"ode", ode_json(ode)}, {"residual", r}}};
}

Output operator_output(const TruncatedOperator& a) {
  Json cols = Json::array();
  for (int j = 0; j <= a.reliable_degree(); ++j) cols.push_back(to_string(a.column(j)));
  return {to_string(a), Json{{"label", a.label()},
                             {"truncation", a.truncation()},
                             {"reliable_degree", a.reliable_degree()},
                             {"columns", cols}}};
}

Output cmd_funcder(const Globals& g, const std::string& op) {
  return operator_output(functional_derivative(parse_operator(op, g.trunc)));
}

Output cmd_mult_check(const Globals& g, const std::string& op, const std::string& alpha, const std::string& xi) {
  const auto a = parse_operator(op, g.trunc);
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  for (int i = 0; i <= a.reliable_degree(); ++i)
    for (int j = i; i + j <= a.reliable_degree(); ++j)
      pairs.emplace_back(Polynomial::monomial(1, i), Polynomial::monomial(1, j));
  const bool ok = check_multiplication_identity(a, parse_rational_function(alpha), parse_rational_function(xi), pairs);
  return {std::string(ok ? "holds" : "fails") + " on " + std::to_string(pairs.size()) + " monomial pairs",
          Json{{"holds", ok}, {"pairs", pairs.size()}}};
}

Output cmd_classify(const Globals& g, const std::string& op) {
  const auto s = classify_mult_operator(parse_operator(op, g.trunc));
  const bool der = s.form == MultSpec::Form::DerivationLike;
  Output out;
  out.text = std::string(der ? "derivation-like" : "substitution-like") + "\nalpha = " + str(s.alpha) +
             "\nxi = " + str(s.xi) + "\nxi1 = " + str(s.xi1);
  out.json = Json{{"form", der ? "derivation-like" : "substitution-like"},
                  {"alpha", str(s.alpha)},
                  {"xi", str(s.xi)},
                  {"xi1", str(s.xi1)}};
  if (s.mu) {
    out.text += "\nmu = " + to_string(*s.mu);
    out.json["mu"] = to_string(*s.mu);
  }
  return out;
}

Output cmd_grevy(const Globals& g, const std::vector<std::string>& ops) {
  std::vector<TruncatedOperator> v;
  for (const auto& o : ops) v.push_back(parse_operator(o, g.trunc));
  const auto det = grevy_determinant(v);
  Output out = operator_output(det);
  const bool zero = is_zero_on_reliable_block(det);
  out.text += std::string("\nzero on reliable block: ") + (zero ? "yes" : "no");
  out.json["zero"] = zero;
  return out;
}

Output cmd_nsymb(const Globals& g, const std::vector<std::string>& lambdas, const std::vector<std::string>& cands) {
  std::vector<RationalFunction> lam;
  for (const auto& l : lambdas) lam.push_back(parse_rational_function(l));
  std::vector<Polynomial> cs;
  for (const auto& c : cands) cs.push_back(parse_polynomial(c));
  Output out;
  Json arr = Json::array();
  for (const auto& r : nsymb_solution_check(lam, cs, g.trunc)) {
    out.text += (out.text.empty() ? "" : "\n") + to_string(r.candidate) + ": " +
                (r.operator_vanishes ? "solution" : "not a solution") + " (exact through degree " +
                std::to_string(r.reliable_degree) + ")";
    arr.push_back(Json{{"candidate", to_string(r.candidate)},
                       {"solution", r.operator_vanishes},
                       {"reliable_degree", r.reliable_degree}});
  }
  out.json = Json{{"candidates", arr}};
  return out;
}

Output cmd_cauchy(const Globals& g, const std::string& f_text) {
  const Polynomial f = parse_polynomial(f_text, 'x');
  Output out;
  Json arr = Json::array();
  if (numeric_mode(g)) {
    for (const auto& t : cauchy_partial_fractions_numeric(f)) {
      Json cs = Json::array();
      std::string line = "root " + str(t.root) + " (multiplicity " + std::to_string(t.multiplicity) + "):";
      for (const auto& c : t.coeffs) {
        cs.push_back(str(c));
        line += " " + str(c);
      }
      out.text += (out.text.empty() ? "" : "\n") + line;
      arr.push_back(Json{{"root", str(t.root)}, {"multiplicity", t.multiplicity}, {"coeffs", cs}});
    }
  } else {
    for (const auto& t : cauchy_partial_fractions(f)) {
      Json cs = Json::array();
      std::string line = "root " + str(t.root) + " (multiplicity " + std::to_string(t.multiplicity) + "):";
      for (const auto& c : t.coeffs) {
        cs.push_back(str(c));
        line += " " + str(c);
      }
      out.text += (out.text.empty() ? "" : "\n") + line;
      arr.push_back(Json{{"root", str(t.root)}, {"multiplicity", t.multiplicity}, {"coeffs", cs}});
    }
  }
  out.json = Json{{"terms", arr}};
  return out;
}

bool mentions(const Expr& e, char s) {
  if (e.kind == Expr::Kind::Symbol) return e.symbol == s;
  for (const auto& a : e.args)
    if (mentions(a, s)) return true;
  return false;
}

Output cmd_parse(const std::string& text) {
  const Expr e = parse_expression(text);
  std::string normal;
  if (mentions(e, 'y')) {
    if (mentions(e, 'T') || mentions(e, 't')) fail(ErrorCode::InvalidArgument, "y cannot be mixed with T or t");
    normal = to_string(parse_bivariate(text));
  } else if (mentions(e, 't')) {
    if (mentions(e, 'x') || mentions(e, 'T')) fail(ErrorCode::InvalidArgument, "t cannot be mixed with x or T");
    normal = str(parse_rational_function(text, 't'), 't');
  } else {
    normal = to_string(parse_form(text));
  }
  return {normal, Json{{"tree", to_string(e)}, {"normalized", normal}}};
}

Output cmd_selftest(std::uint64_t seed) {
  int ok = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    const Expr e = random_expression(seed * 1000003u + static_cast<std::uint64_t>(i), 4);
    const std::string printed = to_string(e);
    const DifferenceForm value = DifferenceForm(evaluate_ore(e, 'x', OreRule::Shift));
    const bool tree_ok = parse_expression(printed) == e;
    const bool value_ok = parse_form(to_string(value)) == value;
    if (tree_ok && value_ok) ++ok;
  }
  Output out;
  out.text = "selftest seed " + std::to_string(seed) + ": " + std::to_string(ok) + "/" + std::to_string(total) +
             " round trips";
  out.json = Json{{"seed", seed}, {"passed", ok}, {"total", total}};
  if (ok != total) fail(ErrorCode::PreconditionViolated, out.text);
  return out;
}

int exit_code_for(ErrorCode c) { return c == ErrorCode::SyntaxError ? 2 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact difference-form and operator toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Structured output");
  auto* exact = app.add_flag("--exact", g.exact, "Exact arithmetic (default)");
  app.add_flag("--numeric", g.numeric, "Floating-point fallback where exact roots are unavailable")->excludes(exact);
  app.add_option("--tolerance", g.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--trunc", g.trunc, "Polynomial truncation degree for operators")->check(CLI::NonNegativeNumber);
  app.add_option("--window", g.window, "Integer window a..b");

  std::function<Output()> run;
  std::string a1, a2, a3;
  std::vector<std::string> list1, list2;
  long at = 0, extra = 0, length = 1, offset = 0;
  std::vector<double> xs;
  std::uint64_t seed = 1;

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  auto* c = sub("mul", "Product of two difference forms");
  c->add_option("A", a1)->required();
  c->add_option("B", a2)->required();
  c->callback([&] { run = [&] { return cmd_mul(a1, a2); }; });

  c = sub("divrem", "Left division A = Q*B + R");
  c->add_option("A", a1)->required();
  c->add_option("B", a2)->required();
  c->callback([&] { run = [&] { return cmd_divrem(a1, a2); }; });

  c = sub("ruffini", "Division by T - gamma");
  c->add_option("A", a1)->required();
  c->add_option("gamma", a2)->required();
  c->callback([&] { run = [&] { return cmd_ruffini(a1, a2); }; });

  c = sub("apply", "Apply a form to a sequence in t over --window");
  c->add_option("form", a1)->required();
  c->add_option("--seq", a2, "Sequence as a rational function of t")->required();
  c->callback([&] { run = [&] { return cmd_apply(g, a1, a2); }; });

  c = sub("casoratian", "Casoratian of sequences at a point");
  c->add_option("--seq", list1, "Sequence in t (repeat)")->required();
  c->add_option("--at", at, "Base point")->required();
  c->callback([&] { run = [&] { return cmd_casoratian(list1, at); }; });

  c = sub("dependence", "Rank analysis of n+1 sequences on at..at+n+extra");
  c->add_option("--seq", list1, "Sequence in t (repeat)")->required();
  c->add_option("--at", at, "First sample point")->required();
  c->add_option("--extra", extra, "Extra rows beyond n+1")->check(CLI::NonNegativeNumber);
  c->callback([&] { run = [&] { return cmd_dependence(list1, at, extra); }; });

  c = sub("scan", "Sliding-window dependence scan over --window");
  c->add_option("--seq", list1, "Sequence in t (repeat)")->required();
  c->add_option("--length", length, "Window length")->required()->check(CLI::PositiveNumber);
  c->callback([&] { run = [&] { return cmd_scan(g, list1, length); }; });

  c = sub("companion", "Companion difference equation of a matrix \"a,b;c,d\"");
  c->add_option("matrix", a1)->required();
  c->callback([&] { run = [&] { return cmd_companion(a1); }; });

  c = sub("minimal", "Minimal constant-coefficient relation of a matrix");
  c->add_option("matrix", a1)->required();
  c->callback([&] { run = [&] { return cmd_minimal(a1); }; });

  c = sub("local-structure", "Eigenvalues, exponents and Jordan sizes");
  c->add_option("matrix", a1)->required();
  c->callback([&] { run = [&] { return cmd_local_structure(g, a1); }; });

  c = sub("canonical-system", "Canonical fundamental system of local solutions");
  c->add_option("matrix", a1)->required();
  c->callback([&] { run = [&] { return cmd_canonical_system(g, a1); }; });

  c = sub("theta-det", "Theta determinant of combinations of the canonical system");
  c->add_option("matrix", a1)->required();
  c->add_option("--combo", list1, "Comma-separated coefficients of one family member (repeat)");
  c->callback([&] { run = [&] { return cmd_theta_det(g, a1, list1); }; });

  c = sub("transform", "Difference relation of a differential operator in y (T = d/dy)");
  c->add_option("operator", a1)->required();
  c->callback([&] { run = [&] { return cmd_transform(a1); }; });

  c = sub("transform-inverse", "Differential operator of a relation given as a T-form");
  c->add_option("relation", a1)->required();
  c->add_option("--offset", offset, "Shift of the T-form relative to f(x)");
  c->callback([&] { run = [&] { return cmd_transform_inverse(a1, offset); }; });

  c = sub("tannery", "Linear ODE satisfied by the roots of f(x, y) = 0");
  c->add_option("f", a1)->required();
  c->callback([&] { run = [&] { return cmd_tannery(a1); }; });

  c = sub("tannery-shape", "Shape test of the ODE against phi");
  c->add_option("f", a1)->required();
  c->callback([&] { run = [&] { return cmd_tannery_shape(a1); }; });

  c = sub("verify-numeric", "Numeric residual of the ODE at sample abscissae");
  c->add_option("f", a1)->required();
  c->add_option("--at", xs, "Sample abscissa (repeat)");
  c->callback([&] { run = [&] { return cmd_verify_numeric(a1, xs); }; });

  c = sub("funcder", "Functional derivative of an operator");
  c->add_option("operator", a1)->required();
  c->callback([&] { run = [&] { return cmd_funcder(g, a1); }; });

  c = sub("mult-check", "Multiplication identity for an operator");
  c->add_option("operator", a1)->required();
  c->add_option("--alpha", a2)->required();
  c->add_option("--xi", a3)->required();
  c->callback([&] { run = [&] { return cmd_mult_check(g, a1, a2, a3); }; });

  c = sub("classify", "Canonical multiplication family of an operator");
  c->add_option("operator", a1)->required();
  c->callback([&] { run = [&] { return cmd_classify(g, a1); }; });

  c = sub("grevy", "Operator determinant of a family");
  c->add_option("--op", list1, "Operator (repeat)")->required();
  c->callback([&] { run = [&] { return cmd_grevy(g, list1); }; });

  c = sub("nsymb-check", "Substitution solutions of a symbolic equation");
  c->add_option("--lambda", list1, "lambda_0 .. lambda_n (repeat, in order)")->required();
  c->add_option("--candidate", list2, "Candidate a(x) (repeat)")->required();
  c->callback([&] { run = [&] { return cmd_nsymb(g, list1, list2); }; });

  c = sub("cauchy-pf", "Partial fractions of 1/F(x)");
  c->add_option("F", a1)->required();
  c->callback([&] { run = [&] { return cmd_cauchy(g, a1); }; });

  c = sub("parse", "Parse and normalize an expression");
  c->add_option("expr", a1)->required();
  c->callback([&] { run = [&] { return cmd_parse(a1); }; });

  c = sub("selftest", "Randomized print/parse round trips");
  c->add_option("--seed", seed, "Seed");
  c->callback([&] { run = [&] { return cmd_selftest(seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Output out = run();
    std::cout << (g.json ? out.json.dump(2) : out.text) << "\n";
    return 0;
  } catch (const Error& e) {
    if (g.json) {
      std::cout << Json{{"error", Json{{"code", std::string(to_string(e.code())) }, {"message", e.what()}}}}.dump(2)
                << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
