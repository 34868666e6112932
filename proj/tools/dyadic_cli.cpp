/*
 * Copyright 2026 The dyadic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// dyadic: command-line front end. stdout carries data, stderr diagnostics.
// Exit codes: 0 ok, 1 verification failed, 2 bad arguments.

#include <dyadic/dyadic.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace dyadic;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadArgs = 2;

struct Globals {
  unsigned precision = 256;
  unsigned tolerance_bits = 0;  // 0: half the precision
  std::string format = "json";
  std::string out;
  bool inject_fault = false;

  EvalContext context() const {
    return EvalContext(precision, tolerance_bits ? tolerance_bits : precision / 2);
  }
};

std::string sci(const Real& v, int digits = 6) { return v.str(digits, std::ios_base::scientific); }

std::string full(const Real& v, unsigned bits) { return v.str(digits10_for_bits(bits)); }

json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string basis_name(const BasisTag& b) { return b.name(); }

std::string tex_matrix(const ScaledMatrix& m) {
  std::ostringstream os;
  const long d = m.log2_denom();
  if (d > 0) os << "\\frac{1}{2^{" << d << "}}";
  else if (d < 0) os << "2^{" << -d << "}";
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    for (std::size_t j = 1; j <= m.dim(); ++j) os << (j > 1 ? " & " : "") << m.at(i, j);
    os << (i < m.dim() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string csv_matrix(const ScaledMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    for (std::size_t j = 1; j <= m.dim(); ++j) os << (j > 1 ? "," : "") << m.at(i, j);
    os << "\n";
  }
  return os.str();
}

std::string tex_poly(const IntPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    BigInt a = abs(c[k]);
    os << (c[k] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1 || k == 0) os << a;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^{" << k << "}";
    first = false;
  }
  return first ? "0" : os.str();
}

class Emitter {
 public:
  explicit Emitter(const Globals& g) : g_(g) {}

  void text(const std::string& s) {
    if (g_.out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(g_.out);
    if (!f) throw std::runtime_error("cannot open output file " + g_.out);
    f << s;
  }
  void json_doc(const json& j) { text(j.dump(2) + "\n"); }

 private:
  const Globals& g_;
};

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw std::invalid_argument("format '" + g.format + "' is not available for this command");
}

// Bump one entry so the expansion no longer matches.
void corrupt(ScaledMatrix& m) { m.at(1, 1) += 1; }

int cmd_minpoly(const Globals& g, int n, const std::string& form) {
  if (n < 2 || n > 16) throw std::invalid_argument("minpoly: n must be in [2, 16]");
  if (form != "nested" && form != "closed" && form != "both")
    throw std::invalid_argument("minpoly: form must be nested, closed or both");
  const EvalContext ctx = g.context();
  json j{{"n", n}, {"form", form}};
  IntPolynomial primary;
  bool ok = true;
  if (form == "nested" || form == "both") {
    IntPolynomial p = nested_minpoly(n);
    if (g.inject_fault) p = p + IntPolynomial{BigInt(1)};
    j["nested"] = strings(p.coeffs());
    primary = p;
  }
  if (form == "closed" || form == "both") {
    IntPolynomial p = closed_minpoly(n);
    j["closed"] = strings(p.coeffs());
    if (form == "both") {
      const bool eq = (primary == p);
      j["equal"] = eq;
      ok = ok && eq;
    }
    primary = (form == "both") ? primary : p;
    if (g.inject_fault && form == "closed") primary = primary + IntPolynomial{BigInt(1)};
  }
  // numeric check: max |f(+-cos((2i-1)pi/2^n))|
  const EvalContext wide = ctx.widened(max_coeff_bits(primary) + 32);
  Real worst = 0;
  {
    PrecisionGuard pg(ctx.precision_bits());
    for (long i = 1; i <= (1L << (n - 2)); ++i) {
      Real x = wide.cos_dyadic(BigInt(2 * i - 1), n);
      Real a = abs(poly_eval(primary, x, wide)), b = abs(poly_eval(primary, Real(-x), wide));
      if (a > worst) worst = a;
      if (b > worst) worst = b;
    }
  }
  const bool roots_ok = ctx.within(worst);
  ok = ok && roots_ok;
  j["root_residual"] = sci(worst);
  j["tolerance"] = sci(ctx.tolerance());
  j["verified"] = ok;

  Emitter e(g);
  if (g.format == "json") {
    e.json_doc(j);
  } else if (g.format == "csv") {
    std::ostringstream os;
    os << "degree,coefficient\n";
    const auto& c = primary.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) os << k << "," << c[k] << "\n";
    e.text(os.str());
  } else {
    e.text(tex_poly(primary) + "\n");
  }
  if (!ok) std::cerr << "minpoly: verification failed (root residual " << sci(worst) << ")\n";
  return ok ? kOk : kFailed;
}

json matrix_json(const ScaledMatrix& m, long r) {
  json rows = json::array();
  for (std::size_t i = 1; i <= m.dim(); ++i) rows.push_back(strings(m.row(i)));
  return json{{"n", m.basis().n},
              {"r", r},
              {"basis", basis_name(m.basis())},
              {"log2_denom", m.log2_denom()},
              {"scale", m.scale().str()},
              {"entries", rows}};
}

ScaledMatrix build_matrix(long r, int n, const std::string& basis) {
  if (basis != "cos" && basis != "sin") throw std::invalid_argument("basis must be cos or sin");
  if (n < 2 || n > 12) throw std::invalid_argument("matrix: n must be in [2, 12]");
  return power_matrix(r, n, basis == "cos");
}

int cmd_matrix(const Globals& g, int n, long r, const std::string& basis) {
  ScaledMatrix m = build_matrix(r, n, basis);
  if (g.inject_fault) corrupt(m);
  const EvalContext ctx = g.context();
  const Real res = power_matrix_residual(m, r, ctx);
  const bool ok = ctx.within(res);
  Emitter e(g);
  if (g.format == "json") {
    json j = matrix_json(m, r);
    j["residual"] = sci(res);
    j["verified"] = ok;
    e.json_doc(j);
  } else if (g.format == "csv") {
    e.text(csv_matrix(m));
  } else {
    e.text(tex_matrix(m));
  }
  if (!ok) std::cerr << "matrix: expansion residual " << sci(res) << " exceeds tolerance\n";
  return ok ? kOk : kFailed;
}

int cmd_verify(const Globals& g, int n, long r, const std::string& basis) {
  require_format(g, {"json"});
  ScaledMatrix m = build_matrix(r, n, basis);
  if (g.inject_fault) corrupt(m);
  const EvalContext ctx = g.context();
  const Real res = power_matrix_residual(m, r, ctx);
  const bool ok = ctx.within(res);
  Emitter(g).json_doc(json{{"n", n},
                           {"r", r},
                           {"basis", basis_name(m.basis())},
                           {"precision_bits", ctx.precision_bits()},
                           {"residual", sci(res)},
                           {"tolerance", sci(ctx.tolerance())},
                           {"verified", ok}});
  return ok ? kOk : kFailed;
}

int cmd_zeta(const Globals& g, const std::string& s_text, int n, const std::string& method, long max_terms) {
  require_format(g, {"json"});
  const EvalContext ctx = g.context();
  PrecisionGuard pg(ctx.precision_bits());
  Real s;
  try {
    s = Real(s_text);
  } catch (const std::exception&) {
    throw std::invalid_argument("zeta: s must be a real number");
  }
  if (!(s > 1)) throw std::invalid_argument("zeta: s must be greater than 1");
  if (n < 3 || n > 20) throw std::invalid_argument("zeta: n must be in [3, 20]");
  if (max_terms < 1) throw std::invalid_argument("zeta: max-terms must be at least 1");
  ZetaApproxResult r;
  if (method == "sine-sum") {
    r = zeta_sine_sum(s, n, ctx);
  } else if (method == "binomial") {
    r = zeta_binomial_series(s, n, max_terms, ctx);
  } else if (method == "weighted3" || method == "weighted5") {
    const int want = method == "weighted3" ? 3 : 5;
    if (s != want) throw std::invalid_argument("zeta: " + method + " needs s = " + std::to_string(want));
    r = want == 3 ? zeta3_weighted(n, ctx) : zeta5_weighted(n, ctx);
  } else {
    throw std::invalid_argument("zeta: method must be sine-sum, binomial, weighted3 or weighted5");
  }
  json j{{"s", s_text},
         {"n", n},
         {"method", to_string(r.method)},
         {"value", full(r.value, ctx.precision_bits())},
         {"terms_used", r.terms_used},
         {"status", to_string(r.status)}};
  if (r.reference_error) j["reference_error"] = sci(*r.reference_error);
  if (r.method == ZetaMethod::BinomialSeries) j["tail_ratio"] = sci(r.tail_ratio, 12);
  Emitter(g).json_doc(j);
  const bool ok = r.status != SeriesStatus::TermsExhausted;
  if (!ok) std::cerr << "zeta: series did not settle within " << max_terms << " terms\n";
  return ok ? kOk : kFailed;
}

int cmd_sums(const Globals& g, int s, int n) {
  require_format(g, {"json"});
  if (s < 2 || s > 8) throw std::invalid_argument("sums: s must be in [2, 8]");
  if (n < 3 || n > 12) throw std::invalid_argument("sums: n must be in [3, 12]");
  const EvalContext ctx = g.context();
  CscPowerSum c = S_closed_form(s, n);
  if (g.inject_fault) {
    if (c.scalar) c.value += 1;
    else c.weights[0] += 1;
  }
  const Real closed = c.evaluate(ctx), numeric = csc_power_sum_direct(s, n, ctx);
  PrecisionGuard pg(ctx.precision_bits());
  const Real gap = abs(closed - numeric);
  const bool ok = ctx.within(gap / (numeric > 1 ? numeric : Real(1)));
  json j{{"s", s}, {"n", n}, {"scalar", c.scalar}};
  if (c.scalar) {
    j["closed"] = c.value.str();
  } else {
    json w = json::array();
    for (const auto& x : c.weights) w.push_back(x.str());
    j["weights"] = w;
  }
  j["closed_value"] = full(closed, ctx.precision_bits());
  j["numeric"] = full(numeric, ctx.precision_bits());
  j["gap"] = sci(gap);
  j["verified"] = ok;
  Emitter(g).json_doc(j);
  return ok ? kOk : kFailed;
}

int cmd_group(const Globals& g, int n) {
  require_format(g, {"json", "csv"});
  if (n < 3 || n > 10) throw std::invalid_argument("group: n must be in [3, 10]");
  auto t = cayley_table(n);
  if (g.inject_fault && t.size() >= 2) std::swap(t[0][0], t[0][1]);
  const GroupAxioms ax = check_group_axioms(t);
  Emitter e(g);
  if (g.format == "csv") {
    std::ostringstream os;
    for (const auto& row : t) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
      os << "\n";
    }
    e.text(os.str());
  } else {
    e.json_doc(json{{"n", n},
                    {"order", t.size()},
                    {"table", t},
                    {"generator", ax.generator},
                    {"axioms",
                     {{"closure", ax.closure},
                      {"associative", ax.associative},
                      {"commutative", ax.commutative},
                      {"identity", ax.identity},
                      {"inverses", ax.inverses}}},
                    {"cyclic", ax.cyclic},
                    {"verified", ax.all()}});
  }
  return ax.all() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dyadic-angle trigonometry"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--precision", g.precision, "working precision in bits")->check(CLI::Range(64u, 1u << 16));
  app.add_option("--tolerance-bits", g.tolerance_bits, "tolerance 2^-bits (default: precision/2)");
  app.add_option("--format", g.format, "json, csv or tex")->check(CLI::IsMember({"json", "csv", "tex"}));
  app.add_option("--out", g.out, "write data to FILE instead of stdout");
  app.add_flag("--inject-fault", g.inject_fault, "test hook: corrupt the result before checking it")
      ->group("");

  int n = 0;
  long r = 0;
  std::string form = "closed", basis = "cos", method = "sine-sum", s_text;
  int s_int = 0;
  long max_terms = 100000;

  auto* mp = app.add_subcommand("minpoly", "minimal polynomial of cos((2i-1)pi/2^n)");
  mp->add_option("--n", n)->required();
  mp->add_option("--form", form, "nested, closed or both");

  auto* mx = app.add_subcommand("matrix", "power-of-cosine (or sine) change-of-basis matrix");
  mx->add_option("--n", n)->required();
  mx->add_option("--r", r)->required();
  mx->add_option("--basis", basis, "cos or sin");

  auto* vf = app.add_subcommand("verify", "numeric residual of a matrix");
  vf->add_option("--n", n)->required();
  vf->add_option("--r", r)->required();
  vf->add_option("--basis", basis, "cos or sin");

  auto* zt = app.add_subcommand("zeta", "zeta(s) approximations at level n");
  zt->add_option("--s", s_text)->required();
  zt->add_option("--n", n)->required();
  zt->add_option("--method", method, "sine-sum, binomial, weighted3 or weighted5");
  zt->add_option("--max-terms", max_terms);

  auto* sm = app.add_subcommand("sums", "closed form of sum csc^s((2i-1)pi/2^n)");
  sm->add_option("--s", s_int)->required();
  sm->add_option("--n", n)->required();

  auto* gr = app.add_subcommand("group", "Cayley table of the index group");
  gr->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (mp->parsed()) {
      require_format(g, {"json", "csv", "tex"});
      return cmd_minpoly(g, n, form);
    }
    if (mx->parsed()) return cmd_matrix(g, n, r, basis);
    if (vf->parsed()) return cmd_verify(g, n, r, basis);
    if (zt->parsed()) return cmd_zeta(g, s_text, n, method, max_terms);
    if (sm->parsed()) return cmd_sums(g, s_int, n);
    if (gr->parsed()) return cmd_group(g, n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadArgs;
}
