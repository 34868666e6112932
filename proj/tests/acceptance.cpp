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
// Acceptance run: one PASS/FAIL line per criterion.
//
// The exit code is nonzero if any criterion fails, except when a criterion's
// only failing checks are ones listed as unattainable below (the statement
// being checked is false as written). Those still print FAIL, followed by
// the diagnostic.

#include <dyadic/dyadic.hpp>

#include <json.hpp>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace dyadic;

namespace {

struct Outcome {
  bool pass = true;
  // every failing check is on the unattainable list
  bool only_known = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    only_known = false;
    notes.push_back(why);
  }
  void fail_known(const std::string& why) {
    pass = false;
    notes.push_back("unattainable: " + why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Rows = std::vector<std::vector<long>>;

bool rows_equal(const ScaledMatrix& m, const Rows& want, std::initializer_list<std::size_t> which = {}) {
  std::vector<std::size_t> rows(which);
  if (rows.empty())
    for (std::size_t i = 1; i <= want.size(); ++i) rows.push_back(i);
  if (m.dim() != want.front().size()) return false;
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 1; j <= m.dim(); ++j)
      if (m.at(rows[k], j) != want[which.size() ? k : rows[k] - 1][j - 1]) return false;
  return true;
}

ScaledMatrix from_rows(BasisTag b, long log2_denom, const Rows& rows) {
  ScaledMatrix m(b, log2_denom);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i + 1, j + 1) = rows[i][j];
  return m;
}

std::string sci(const Real& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << static_cast<double>(x);
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome minimal_polynomial() {
  Outcome o;
  const std::vector<long> want = {1, -128, 2688, -21504, 84480, -180224, 212992, -131072, 32768};
  const IntPolynomial c = closed_minpoly(5);
  bool ok = c.degree() == 16;
  for (std::size_t k = 0; k <= 16; ++k) ok = ok && c.coeff(k) == ((k % 2) ? BigInt(0) : BigInt(want[k / 2]));
  o.expect(ok, "closed_minpoly(5) coefficients differ");
  for (int n = 3; n <= 10; ++n) o.expect(nested_minpoly(n) == closed_minpoly(n), "nested != closed at n=" + std::to_string(n));
  return o;
}

Outcome odd_matrices() {
  Outcome o;
  const ScaledMatrix m15 = odd_power_matrix(15, 4);
  o.expect(m15.log2_denom() == 14 &&
               rows_equal(m15, {{6434, 4990, 2898, 910},
                                {-2898, 6434, -910, -4990},
                                {-4990, 910, 6434, 2898},
                                {-910, 2898, -4990, 6434}}),
           "r=15 n=4 differs");
  // the printed r = 7 matrix lists rows 1, 2 and 4; row 3 follows from the
  // conjugation law and is checked by the numeric residual in criterion 3
  const ScaledMatrix m7 = odd_power_matrix(7, 4);
  o.expect(m7.log2_denom() == 6 && rows_equal(m7, {{35, 21, 7, 1}, {-7, 35, -1, -21}, {-1, 7, -21, 35}}, {1, 2, 4}),
           "r=7 n=4 differs");
  o.expect(conjugation_invariance(m7, GroupElement{2}), "r=7 row 3 breaks conjugation law");
  long pairs = 0;
  for (int n = 2; n <= 7; ++n)
    for (long r = 1; r <= 21; r += 2, ++pairs)
      o.expect(matrix_scatter(r, n) == matrix_gather(r, n), "scatter != gather r=" + std::to_string(r) + " n=" + std::to_string(n));
  o.notes.push_back(std::to_string(pairs) + " scatter/gather pairs");
  return o;
}

Outcome numeric_residuals() {
  Outcome o;
  EvalContext ctx(256);
  PrecisionGuard g(256);
  const Real bound = ldexp(Real(1), -128);
  Real worst = 0;
  std::string worst_at;
  long count = 0;
  auto check = [&](long r, int n, bool cosb) {
    const ScaledMatrix m = power_matrix(r, n, cosb);
    const Real res = power_matrix_residual(m, r, ctx);
    ++count;
    if (res > worst) {
      worst = res;
      worst_at = "r=" + std::to_string(r) + " n=" + std::to_string(n);
    }
    o.expect(res < bound, "residual " + sci(res) + " at r=" + std::to_string(r) + " n=" + std::to_string(n));
  };
  for (int n = 2; n <= 7; ++n)
    for (long r = 1; r <= 21; r += 2)
      for (bool cosb : {true, false}) check(r, n, cosb);
  for (int n = 3; n <= 6; ++n)
    for (long r = 0; r <= 20; r += 2) check(r, n, true);
  for (int n = 3; n <= 7; ++n)
    for (long r : {-1, -3, -5})
      for (bool cosb : {true, false}) check(r, n, cosb);
  o.notes.push_back(std::to_string(count) + " matrices, max residual " + sci(worst) + " (" + worst_at + ")");
  return o;
}

Outcome even_matrices() {
  Outcome o;
  const BasisTag b4{BasisKind::EvenCos, 4}, b5{BasisKind::EvenCos, 5};
  o.expect(even_matrix(16, 4) == from_rows(b4, 15, {{6434, 11424, 7888, 3808},
                                                     {6434, -3808, -7888, 11424},
                                                     {6434, 3808, -7888, -11424},
                                                     {6434, -11424, 7888, -3808}}),
           "r=16 n=4 differs");
  Rows printed = {{6435, 11440, 8008, 4368, 1820, 560, 120, 16},
                  {6435, -560, -120, 11440, -1820, -16, 8008, -4368},
                  {6435, -4368, 120, 16, -1820, 11440, -8008, 560},
                  {6435, -16, -8008, 560, 1820, -4368, -120, 11440},
                  {6435, 16, -8008, -560, 1820, 4368, -120, -11440},
                  {6435, 4368, 120, -16, -1820, -114400, -8008, -560},
                  {6435, 560, -120, -11440, -1820, 16, 8008, 4368},
                  {6435, -11440, 8008, -4368, 1820, -560, 120, -16}};
  const ScaledMatrix as_printed = from_rows(b5, 15, printed);
  printed[5][5] = -11440;
  const ScaledMatrix corrected = from_rows(b5, 15, printed);
  const ScaledMatrix built = even_matrix(16, 5);
  o.expect(built == corrected, "r=16 n=5 differs from the corrected matrix");
  long diffs = 0;
  for (std::size_t i = 1; i <= 8; ++i)
    for (std::size_t j = 1; j <= 8; ++j) diffs += built.at(i, j) != as_printed.at(i, j);
  o.expect(diffs == 1, "expected exactly one entry to differ from print, got " + std::to_string(diffs));

  EvalContext ctx(256);
  PrecisionGuard g(256);
  const Real good = verify_even_numeric(corrected, 16, ctx), bad = verify_even_numeric(as_printed, 16, ctx);
  o.expect(ctx.within(good), "corrected matrix residual " + sci(good));
  o.expect(bad > 1, "printed matrix should fail numerically");
  o.notes.push_back("numeric residual corrected " + sci(good) + ", as printed " + sci(bad));
  return o;
}

Outcome negative_powers() {
  Outcome o;
  const ScaledMatrix c1 = negative_power_matrix(-1, 4, true), s1 = negative_power_matrix(-1, 4, false);
  o.expect(c1.scale() == 2 && rows_equal(c1, {{1, -1, 1, -1}, {-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, 1, 1}}),
           "sec matrix differs");
  o.expect(rows_equal(s1, {{1, 1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, -1, 1}}), "csc matrix differs");
  const ScaledMatrix s3 = negative_power_matrix(-3, 4, false), c3 = negative_power_matrix(-3, 4, true);
  o.expect(s3.scale() == 8 && rows_equal(s3, {{2, 5, 7, 8}, {7, 2, -8, 5}, {5, 8, 2, -7}, {-8, 7, -5, 2}}),
           "csc^3 matrix differs");
  o.expect(rows_equal(c3, {{2, -5, 7, -8}, {-7, 2, 8, 5}, {5, -8, 2, 7}, {8, 7, 5, 2}}), "sec^3 matrix differs");
  o.expect(reverse_rows_cols(c1) == s1 && reverse_rows_cols(s1) == c1, "reversal fails for r=-1");
  o.expect(reverse_rows_cols(c3) == s3 && reverse_rows_cols(s3) == c3, "reversal fails for r=-3");
  return o;
}

Outcome group_structure() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const GroupAxioms a = check_group_axioms(n);
    o.expect(a.all(), "group axioms or cyclicity fail at n=" + std::to_string(n));
  }
  const std::vector<long> powers = {1, 3, 5, 7, 9, 11, 13, 15};
  for (int n : {4, 5}) {
    std::vector<ScaledMatrix> ms;
    for (long r : powers) ms.push_back(odd_power_matrix(r, n));
    for (std::size_t a = 0; a < ms.size(); ++a) {
      o.expect(is_normal(ms[a]), "not normal r=" + std::to_string(powers[a]) + " n=" + std::to_string(n));
      for (std::size_t b = a + 1; b < ms.size(); ++b)
        o.expect(commutes(ms[a], ms[b]), "r=" + std::to_string(powers[a]) + ", " + std::to_string(powers[b]) +
                                             " do not commute at n=" + std::to_string(n));
    }
    for (const ScaledMatrix& m : ms)
      for (long a = 1; a <= (1L << (n - 2)); ++a)
        o.expect(conjugation_invariance(m, GroupElement{a}), "conjugation invariance fails at n=" + std::to_string(n));
  }
  return o;
}

Outcome identities() {
  Outcome o;
  long even_ok = 0, odd_flipped = 0, other = 0;
  for (long r = 1; r <= 64; ++r)
    for (long k = 1; k <= r; ++k) {
      const LemmaSides s = lemma_sum_identity(r, k);
      if (s.holds()) {
        // a pass at odd r would contradict the known sign flip
        if (r % 2) ++other; else ++even_ok;
      } else if (r % 2 && s.lhs == -s.rhs) {
        ++odd_flipped;
      } else {
        ++other;
      }
    }
  if (odd_flipped) {
    std::ostringstream os;
    os << "binomial lemma false for all " << odd_flipped << " pairs with odd r (lhs = -rhs exactly); holds for all "
       << even_ok << " pairs with even r";
    o.fail_known(os.str());
  }
  o.expect(other == 0, std::to_string(other) + " lemma pairs outside the sign-flip pattern");
  o.expect(verify_recursion(16), "odd Chebyshev recursion fails");
  for (long i = 1; i <= 8; ++i)
    for (long j = 1; j <= 8; ++j) o.expect(composition_commutes(i, j), "composition does not commute");
  for (int n = 2; n <= 6; ++n) {
    const IntPolynomial f = closed_minpoly(n);
    for (long i = 1; i <= (1L << (n - 2)); ++i)
      o.expect(inverse_reduces_to_identity(i, n, f), "inverse index reduction fails at n=" + std::to_string(n));
  }
  return o;
}

Outcome sums() {
  Outcome o;
  {
    EvalContext ctx(256);
    PrecisionGuard g(256);
    const Real bound = ldexp(Real(1), -100);
    Real worst = 0;
    for (int s = 2; s <= 8; ++s)
      for (int n = 3; n <= 8; ++n) {
        const Real gap = abs(S_closed_form(s, n).evaluate(ctx) / csc_power_sum_direct(s, n, ctx) - 1);
        worst = gap > worst ? gap : worst;
        o.expect(gap < bound, "S(" + std::to_string(s) + "," + std::to_string(n) + ") off by " + sci(gap));
      }
    o.notes.push_back("S max relative gap " + sci(worst));
    const std::vector<std::pair<long, long>> merca = {{2, 1},  {3, 1},  {3, 4},  {3, 10},  {4, 3},  {5, 2},  {5, 7},
                                                      {5, 13}, {6, 1},  {6, 5},  {7, 3},   {7, 10}, {8, 9},  {9, 4},
                                                      {10, 12}, {11, 6}, {12, 13}, {13, 20}, {16, 17}, {20, 25}};
    long wrap = 0;
    for (const auto& [N, p] : merca) {
      wrap += p >= N;
      o.expect(ctx.within(Real(merca_sum(N, p)) - merca_lhs(N, p, ctx)),
               "Merca sum fails at N=" + std::to_string(N) + " p=" + std::to_string(p));
    }
    o.notes.push_back(std::to_string(merca.size()) + " Merca pairs (" + std::to_string(wrap) + " with p >= N)");
  }
  EvalContext ctx(512);
  PrecisionGuard g(512);
  for (int n = 2; n <= 6; ++n)
    for (long p = 1; p <= 40; ++p) {
      const Real lhs = integer_power_average_lhs(p, n, ctx);
      const BigInt rounded(round(lhs));
      o.expect(rounded == integer_power_average(p, n) && ctx.within(lhs - Real(rounded)),
               "power average fails at p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  return o;
}

Outcome zeta() {
  Outcome o;
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (int s = 2; s <= 5; ++s) {
    std::vector<Real> err;
    for (int n = 5; n <= 12; ++n) err.push_back(*zeta_sine_sum(Real(s), n, ctx).reference_error);
    bool decreasing = true;
    for (std::size_t k = 1; k < err.size(); ++k) decreasing = decreasing && err[k] < err[k - 1];
    if (!decreasing) {
      const std::string what = "sine-sum error not strictly decreasing for s=" + std::to_string(s);
      // S(2, n) is an exact rational, so the s = 2 value is exact at every n
      if (s == 2 && err.back() < ldexp(Real(1), -200))
        o.fail_known(what + ": exact at every level, errors are rounding noise (max " +
                     sci(*std::max_element(err.begin(), err.end())) + ")");
      else
        o.fail(what);
    }
    if (s == 3) {
      o.expect(err.back() < Real("1e-4"), "s=3 n=12 error " + sci(err.back()));
      o.notes.push_back("s=3 n=12 error " + sci(err.back()));
    }
  }
  const Real e3 = *zeta3_weighted(12, ctx).reference_error, e5 = *zeta5_weighted(12, ctx).reference_error;
  o.expect(e3 < Real("1e-4"), "zeta3_weighted n=12 error " + sci(e3));
  o.expect(e5 < Real("1e-4"), "zeta5_weighted n=12 error " + sci(e5));
  o.notes.push_back("weighted n=12 errors " + sci(e3) + ", " + sci(e5));

  const Real two40 = ldexp(Real(1), -40);
  Real worst = 0;
  for (int s : {3, 5})
    for (int n : {4, 5, 6}) {
      const LevelIdentity li = finite_level_identity(s, n, 1000000, ctx);
      worst = li.gap > worst ? li.gap : worst;
      o.expect(li.status == SeriesStatus::Converged && li.gap < two40,
               "level identity s=" + std::to_string(s) + " n=" + std::to_string(n) + " gap " + sci(li.gap));
    }
  o.notes.push_back("level identity max gap " + sci(worst));

  for (long j : {1, 2}) {
    std::vector<BernoulliCheck> c;
    for (int n : {4, 6, 8}) c.push_back(bernoulli_limit_check(j, n, 10000000, ctx));
    for (std::size_t k = 1; k < c.size(); ++k) {
      const bool shrinks = c[k - 1].gap > 4 * c[k].gap;
      const std::string at = "j=" + std::to_string(j) + " n=" + std::to_string(4 + 2 * (k - 1));
      if (c[k].status != SeriesStatus::Converged) {
        o.fail("Bernoulli series did not converge at " + at);
      } else if (!shrinks) {
        // the j = 1 series sums to exactly 1/2 at every level; what is left is
        // truncation at the stopping rule, far below any level error
        if (j == 1 && c[k - 1].gap < ldexp(Real(1), -100) && c[k].gap < ldexp(Real(1), -100))
          o.fail_known("Bernoulli gap cannot shrink at " + at + ": exact at every level (gaps " + sci(c[k - 1].gap) +
                       ", " + sci(c[k].gap) + ")");
        else
          o.fail("Bernoulli gap does not shrink by 4 at " + at);
      }
    }
    if (j == 2) o.notes.push_back("j=2 gaps " + sci(c[0].gap) + ", " + sci(c[1].gap) + ", " + sci(c[2].gap));
  }
  return o;
}

// CLI ---------------------------------------------------------------------

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string cmd = std::string("\"") + DYADIC_CLI + "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_end_to_end() {
  Outcome o;
  struct Case {
    std::string command, ok, failing, bad;
    std::vector<std::string> keys;
  };
  const std::vector<Case> cases = {
      {"minpoly", "minpoly --n 6 --form both", "minpoly --n 6 --form both --inject-fault", "minpoly --n 2 --form nested",
       {"n", "form", "nested", "closed", "equal", "root_residual", "tolerance", "verified"}},
      {"matrix", "matrix --n 4 --r 15", "matrix --n 4 --r 15 --inject-fault", "matrix --n 4 --r -7",
       {"n", "r", "basis", "log2_denom", "scale", "entries", "residual", "verified"}},
      {"verify", "verify --n 5 --r -3 --basis sin", "verify --n 5 --r -3 --inject-fault", "verify --n 5 --r 3 --basis tan",
       {"n", "r", "basis", "precision_bits", "residual", "tolerance", "verified"}},
      {"zeta", "zeta --s 3 --n 4 --method binomial", "zeta --s 3 --n 4 --method binomial --max-terms 5",
       "zeta --s 0.5 --n 5", {"s", "n", "method", "value", "terms_used", "status"}},
      {"sums", "sums --s 5 --n 5", "sums --s 5 --n 5 --inject-fault", "sums --s 9 --n 5",
       {"s", "n", "scalar", "weights", "closed_value", "numeric", "gap", "verified"}},
      {"group", "group --n 6", "group --n 6 --inject-fault", "group --n 11",
       {"n", "order", "table", "generator", "axioms", "cyclic", "verified"}},
  };
  auto keys_ok = [&](const CliResult& r, const std::vector<std::string>& keys) {
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return false;
    for (const auto& k : keys)
      if (!j.contains(k)) return false;
    return true;
  };
  for (const Case& c : cases) {
    const CliResult ok = cli(c.ok), bad_run = cli(c.failing), bad_args = cli(c.bad);
    o.expect(ok.code == 0 && keys_ok(ok, c.keys), c.command + ": success case, exit " + std::to_string(ok.code));
    o.expect(bad_run.code == 1 && keys_ok(bad_run, c.keys),
             c.command + ": failure case, exit " + std::to_string(bad_run.code));
    o.expect(bad_args.code == 2, c.command + ": bad-argument case, exit " + std::to_string(bad_args.code));
  }
  o.notes.push_back(std::to_string(cases.size()) + " commands x 3 cases");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "minimal polynomial", 1, minimal_polynomial},
      {2, "odd power matrices", 10, odd_matrices},
      {3, "numeric residuals", 60, numeric_residuals},
      {4, "even power matrices", 0, even_matrices},
      {5, "negative powers", 0, negative_powers},
      {6, "group and structure", 30, group_structure},
      {7, "identities", 60, identities},
      {8, "sums", 0, sums},
      {9, "zeta", 300, zeta},
      {10, "cli end-to-end", 0, cli_end_to_end},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      std::ostringstream os;
      os << "runtime " << secs << " s over budget " << c.budget_s << " s";
      o.fail(os.str());
    }
    std::printf("criterion %d: %s  %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    if (!o.pass && !o.only_known) ++unexpected;
    std::fflush(stdout);
  }
  std::printf("unexpected failures: %d\n", unexpected);
  return unexpected ? 1 : 0;
}
