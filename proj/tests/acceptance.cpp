// Acceptance gate: one PASS/FAIL line per criterion, failures followed by
// indented detail lines.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schrodist/errors.hpp"
#include "schrodist/gf.hpp"
#include "schrodist/invseq.hpp"
#include "schrodist/permutation.hpp"
#include "schrodist/recur.hpp"
#include "schrodist/xseries.hpp"

using namespace schrodist;

namespace {

MPoly q() { return MPoly::var(Var::q); }
MPoly p() { return MPoly::var(Var::p); }
MPoly v() { return MPoly::var(Var::v); }
MPoly w() { return MPoly::var(Var::w); }
MPoly qn(int k) { return q().pow(static_cast<unsigned>(k)); }

// Collects failures for one criterion.
struct Gate {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string id_of(ACase c) {
  std::string id = a_case_id(c);
  std::replace(id.begin(), id.end(), ',', '_');
  return id;
}

const gf::Library& assets() {
  static const gf::Library library = gf::Library::load(gf::Library::default_dir());
  return library;
}

// Coefficient of x^n as an integral polynomial, or the evaluation error.
std::string coeff_or_error(gf::Evaluator& ev, const std::string& name, int n, MPoly& out) {
  try {
    out = ev.coeff_distribution(name, static_cast<std::size_t>(n));
    return "";
  } catch (const Error& e) {
    return e.what();
  }
}

// ---------------------------------------------------------------------------

void equidistribution(Gate& g) {
  for (int n = 1; n <= 9; ++n) {
    const MPoly target = last_dist_distribution(n);
    for (const auto& pair : schroeder_pairs()) {
      g.expect(first_desc_distribution(n, pair) == target, pair.id() + " differs at n=" + std::to_string(n));
    }
  }
}

void duality(Gate& g) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pair : schroeder_pairs()) {
      g.expect(asc_last_distribution(n, pair.reversed()) == first_desc_distribution(n, pair),
               pair.reversed().id() + " differs at n=" + std::to_string(n));
    }
  }
}

void golden_values(Gate& g) {
  const auto u = build_u_table(5);
  g.expect(u[5].at(2, 4) == 4 * qn(2) + 2 * qn(3), "u_5(2,4)");
  const PolyTable& u3 = u[3];
  g.expect(u3.at(1, 1) == 1 && u3.at(1, 2) == q() && u3.at(2, 1) == q() && u3.at(2, 2) == q() &&
               u3.at(3, 1) == q() && u3.at(3, 2).is_zero() && u3.entries().size() == 5,
           "u_3 table");
  const std::vector<std::pair<std::pair<int, int>, MPoly>> u4{
      {{1, 1}, 1},          {{1, 2}, q()},        {{1, 3}, q() + qn(2)}, {{2, 1}, q()},
      {{2, 2}, 3 * q()},    {{2, 3}, 2 * qn(2)},  {{3, 1}, q() + qn(2)}, {{3, 2}, 2 * qn(2)},
      {{3, 3}, q() + qn(2)}, {{4, 1}, q() + 2 * qn(2)}, {{4, 2}, 2 * qn(2)}};
  for (const auto& [key, value] : u4) g.expect(u[4].at(key.first, key.second) == value, "u_4 entry");
  g.expect(u[4].entries().size() == u4.size() && u[4].at(4, 3).is_zero(), "u_4 support");

  const auto r = build_r_table(5);
  g.expect(r[1].at(2, 0) == p(), "r_1(2,0)");
  g.expect(r[2].at(3, 1) == p().pow(2) * q() && r[2].at(3, 0) == p(), "r_2");
  g.expect(r[3].at(4, 0) == p() && r[3].at(4, 1) == p() * q() * (1 + p()) && r[3].at(4, 2) == p().pow(3) * qn(2) &&
               r[3].at(3, 0) == p().pow(2) * q() * (1 + p()) && r[3].entries().size() == 4,
           "r_3 table");
  const std::vector<std::pair<std::pair<int, int>, MPoly>> r4{
      {{3, 0}, (2 * p().pow(2) + p().pow(3)) * q() + (p().pow(3) + 2 * p().pow(4)) * qn(2)},
      {{4, 0}, (p().pow(2) + p().pow(3) + p().pow(4)) * q()},
      {{5, 0}, p()},
      {{4, 1}, (p().pow(2) + 2 * p().pow(3) + 2 * p().pow(4)) * qn(2)},
      {{5, 1}, (2 * p() + p().pow(2)) * q()},
      {{5, 2}, (p() + p().pow(2) + p().pow(3)) * qn(2)},
      {{5, 3}, p().pow(4) * qn(3)}};
  for (const auto& [key, value] : r4) g.expect(r[4].at(key.first, key.second) == value, "r_4 entry");
  g.expect(r[4].entries().size() == r4.size(), "r_4 support");
  g.expect(r[5].at(4, 0) == p().pow(2) * q() * (1 + p()).pow(2) + p().pow(3) * qn(2) * (1 + 2 * p() + 3 * p().pow(2)),
           "r_5(4,0)");

  const auto de = build_de_tables(10);
  g.expect(de.d_at(3, 1, 1) == q() + 1 && de.d_at(3, 1, 2) == q() && de.d_at(3, 1, 3).is_zero(), "d_3(1,.)");
  g.expect(de.d_at(3, 2, 1) == 2 * q() && de.d_at(3, 2, 2).is_zero() && de.d_at(3, 2, 3).is_zero(), "d_3(2,.)");
  g.expect(de.d_at(3, 3, 1) == q() + qn(2) && de.d_at(3, 3, 2) == q() + qn(2) && de.d_at(3, 3, 3) == qn(2),
           "d_3(3,.)");
  g.expect(de.e_at(3, 1) == 1 + 2 * q() && de.e_at(3, 2) == 2 * q() && de.e_at(3, 3) == qn(2), "e_3");
  for (int n = 4; n <= 10; ++n) {
    g.expect(de.d_at(n, 1, n - 1) == qn(n - 2), "d_n(1,n-1) at n=" + std::to_string(n));
    g.expect(de.d_at(n, n, n - 1) == (n - 2) * qn(n - 2) + qn(n - 1), "d_n(n,n-1) at n=" + std::to_string(n));
    g.expect(de.e_at(n, n - 1) == (n - 1) * qn(n - 2), "e_n(n-1) at n=" + std::to_string(n));
  }

  const auto a = build_a_table(4, ACase::k1324_1342);
  const std::vector<std::pair<std::pair<int, int>, MPoly>> a4{
      {{1, 2}, 1 + q()},       {{1, 3}, 0},             {{1, 4}, q() + qn(2)}, {{2, 1}, q() + qn(2)},
      {{2, 3}, 2 * q()},       {{2, 4}, q() + qn(2)},   {{3, 1}, q() + qn(2)}, {{3, 2}, 2 * qn(2)},
      {{3, 4}, q() + qn(2)},   {{4, 1}, q() + qn(2)},   {{4, 2}, 2 * qn(2)},   {{4, 3}, qn(2) + qn(3)}};
  for (const auto& [key, value] : a4) {
    g.expect(a.at(4, key.first, key.second) == value,
             "a_4(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
  }

  std::set<std::string> r540;
  const auto patterns = PatternPair::parse("1324,1423").patterns();
  for (const auto& perm : enumerate_avoiders(5, patterns)) {
    if (act_dact(perm) == ActiveSites{4, 0}) r540.insert(perm.compact());
  }
  g.expect(r540 == std::set<std::string>{"23145", "32145", "34125", "35124", "42135", "43125", "45123", "52134",
                                         "53124", "54123"},
           "R_5(4,0)");
}

void dp_equals_oracle(Gate& g) {
  const int n_max = 8;
  const auto u = build_u_table(n_max);
  const auto r = build_r_table(n_max);
  const auto de = build_de_tables(n_max);
  for (int n = 2; n <= n_max; ++n) g.expect(u[static_cast<std::size_t>(n)] == u_oracle(n), "u at n=" + std::to_string(n));
  for (int n = 1; n <= n_max; ++n) {
    g.expect(r[static_cast<std::size_t>(n)] == oracle::r_table(n), "r at n=" + std::to_string(n));
    g.expect(de.d[static_cast<std::size_t>(n)] == oracle::d_table(n), "d at n=" + std::to_string(n));
    const auto e = oracle::e_row(n);
    for (int m = 1; m <= n; ++m) g.expect(de.e_at(n, m) == e[static_cast<std::size_t>(m)], "e at n=" + std::to_string(n));
  }
  for (ACase c : all_a_cases()) {
    const auto a = build_a_table(n_max, c);
    for (int n = 2; n <= n_max; ++n) {
      g.expect(a.table(n) == oracle::a_table(n, c), "a " + a_case_id(c) + " at n=" + std::to_string(n));
    }
  }
}

// Localizes a failing printed (1243,1423) A+ against the corrected formula,
// which keeps the summands that the recurrence confirms.
void localize_aplus(Gate& g) {
  const auto& printed = *assets().get("Aplus_1243_1423").tree;
  const auto& fixed = *assets().get("Aplus_1243_1423_rederived").tree;
  if (printed.kind != gf::Kind::Sum || fixed.kind != gf::Kind::Sum ||
      printed.children.size() != fixed.children.size()) {
    return;
  }
  static const char* kLabels[] = {"r(x)t(vwx) summand", "t(vwx) summand", "r(x) summand", "alpha summand"};
  for (std::size_t k = 0; k < printed.children.size() && k < 4; ++k) {
    const bool same = gf::same_tree(*printed.children[k], *fixed.children[k]);
    g.failures.push_back(std::string("  Aplus_1243_1423 ") + kLabels[k] + ": " +
                         (same ? "agrees with the recurrence-validated form" : "differs from the recurrence-validated form"));
  }
  // The corrected form itself, reported separately from the printed one.
  gf::Evaluator ev(assets(), 11);
  const ATable table = build_a_table(10, ACase::k1243_1423);
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    MPoly plus;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) plus += table.at(n, i, j) * v().pow(i) * w().pow(j);
    }
    MPoly got;
    ok = ok && coeff_or_error(ev, "Aplus_1243_1423_rederived", n, got).empty() && got == plus;
  }
  g.failures.push_back(std::string("  Aplus_1243_1423_rederived (not a transcription) vs DP, n<=10: ") +
                       (ok ? "equal" : "UNEQUAL"));
}

void series_equals_dp(Gate& g) {
  gf::Evaluator ev(assets(), 13);
  auto check = [&](const std::string& name, int n, const MPoly& expected) {
    MPoly got;
    const std::string error = coeff_or_error(ev, name, n, got);
    if (!error.empty()) {
      g.expect(false, name + " n=" + std::to_string(n) + ": " + error);
      return false;
    }
    g.expect(got == expected, name + " differs from the DP at n=" + std::to_string(n));
    return got == expected;
  };

  const auto u = build_u_table(12);
  for (int n = 1; n <= 12; ++n) check("master", n, u_distribution(u, n));
  for (int n = 2; n <= 12; ++n) check("U", n, assemble_u(u, n));

  const auto de = build_de_tables(10);
  for (int n = 1; n <= 10; ++n) {
    MPoly d, e;
    for (int i = 1; i <= n; ++i) {
      for (int m = 1; m <= n; ++m) d += de.d_at(n, i, m) * v().pow(i) * w().pow(m - 1);
    }
    for (int m = 1; m <= n; ++m) e += de.e_at(n, m) * v().pow(m - 1);
    check("D", n, d);
    check("E_1342_1423", n, e);
  }

  for (ACase c : all_a_cases()) {
    const ATable table = build_a_table(10, c);
    const std::string name = "A_" + id_of(c) + "_vw";
    for (int n = 2; n <= 10; ++n) {
      MPoly all;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) all += table.at(n, i, j) * v().pow(i) * w().pow(j);
      }
      if (!check(name, n, all)) break;  // one line per failing assembly
    }
  }

  // px + R(x,1,1) = px/(1-pqx) + U(x,p,1): master with v read as p against
  // the r tables.
  const auto r = build_r_table(12);
  for (int n = 1; n <= 12; ++n) check("master", n, r_distribution(r, n));

  for (int n = 2; n <= 10; ++n) {
    MPoly e, c;
    for (int j = 0; j <= n - 2; ++j) e += r[static_cast<std::size_t>(n)].at(n + 1, j) * v().pow(j);
    for (int i = 0; i <= n - 1; ++i) c += r[static_cast<std::size_t>(n)].at(i + 2, i) * v().pow(i);
    check("E_1324_1423", n, e);
    check("C_1324_1423", n, c);
  }
  if (!g.failures.empty()) localize_aplus(g);
}

void schroeder_consistency(Gate& g) {
  const int n_max = 12;
  const auto tri = schroeder_triangle(n_max);
  const auto u = build_u_table(n_max);
  const auto r = build_r_table(n_max);
  const auto de = build_de_tables(n_max);
  std::vector<ATable> as;
  for (ACase c : all_a_cases()) as.push_back(build_a_table(n_max, c));
  gf::Evaluator ev(assets(), 13);
  const auto counts = oracle::schroeder_by_count(9);

  auto row_matches = [&](const MPoly& dist, int n) {
    const MPoly at_q1 = dist.subst(Var::q, 1);
    BigInt sum = 0;
    bool ok = true;
    for (int k = 1; k <= n; ++k) {
      const BigInt& s = tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      sum += s;
      ok = ok && at_q1.coeff(Monomial::of(Var::v, static_cast<unsigned>(k))) == Rational(s);
    }
    return ok && at_q1.evaluate({1, 1, 1, 1}) == Rational(sum);
  };

  for (int n = 1; n <= n_max; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    std::vector<std::pair<std::string, MPoly>> dists{
        {"u", u_distribution(u, n)}, {"r", r_distribution(r, n)}, {"d", d_distribution(de, n)}};
    for (const auto& a : as) dists.emplace_back("a " + a_case_id(a.which()), a_distribution(a, n));
    dists.emplace_back("master series", ev.coeff_distribution("master", static_cast<std::size_t>(n)));
    if (n <= 8) {
      dists.emplace_back("invseq brute force", last_dist_distribution(n));
      for (const auto& pair : schroeder_pairs()) dists.emplace_back(pair.id() + " brute force", first_desc_distribution(n, pair));
    }
    for (const auto& [label, dist] : dists) g.expect(row_matches(dist, n), label + at);
  }
  for (int n = 1; n <= 9; ++n) {
    const MPoly total = ev.coeff_distribution("U_x_1_1", static_cast<std::size_t>(n)) + qn(n - 1);
    BigInt row = 0;
    for (const auto& s : tri[static_cast<std::size_t>(n)]) row += s;
    g.expect(total.evaluate({1, 1, 1, 1}) == Rational(counts[static_cast<std::size_t>(n)]) && row == counts[static_cast<std::size_t>(n)],
             "U(x,1,1) at n=" + std::to_string(n));
  }
}

void screening(Gate& g, std::vector<std::string>& notes) {
  const int n = 6;
  const MPoly target = last_dist_distribution(n);
  std::vector<Permutation> patterns;
  std::vector<int> letters{1, 2, 3, 4};
  do {
    patterns.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::set<std::string> matched;
  for (std::size_t a = 0; a < patterns.size(); ++a) {
    for (std::size_t b = a + 1; b < patterns.size(); ++b) {
      const PatternPair pair{patterns[a], patterns[b]};
      if (first_desc_distribution(n, pair) == target) matched.insert(pair.id());
    }
  }
  std::set<std::string> six;
  for (const auto& pair : schroeder_pairs()) six.insert(pair.id());
  for (const auto& id : six) g.expect(matched.contains(id), id + " does not match at n=6");
  for (const auto& id : matched) {
    if (!six.contains(id)) notes.push_back("  additional coincidence at n=6: " + id);
  }
  notes.push_back("  " + std::to_string(matched.size()) + " of 276 pairs match at n=6");
}

void property_suites(Gate& g) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> exp(0, 3), num(-9, 9), den(1, 5);
  auto poly = [&](int terms) {
    std::vector<MPoly::Term> out;
    for (int k = 0; k < terms; ++k) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      out.emplace_back(Monomial::from_exponents(exp(rng), exp(rng), exp(rng), exp(rng)), c);
    }
    return MPoly::from_terms(std::move(out));
  };
  auto series = [&](const MPoly& constant) {
    std::vector<MPoly> coeffs{constant};
    for (int k = 1; k < 6; ++k) coeffs.push_back(poly(2));
    return XSeries::from_coeffs(std::move(coeffs));
  };
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const MPoly a = poly(4), b = poly(3), c = poly(2);
    bool ok = a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a * b == b * a && (a + b) - b == a;
    if (!b.is_zero()) ok = ok && MPoly::divide_exact(a * b, b) == a;
    const XSeries s = series(poly(2)), unit = series(1), d = series(Rational(5, 3)), e = series(1 + w());
    const XSeries root = series_sqrt(unit);
    ok = ok && root * root == unit && series_div(s * d, d) == s && series_div_exact(s * e, e) == s;
    if (!ok) ++bad;
  }
  g.expect(bad == 0, std::to_string(bad) + " of 100 random exact-arithmetic instances broke an invariant");

  for (const auto& name : assets().names()) {
    const auto& tree = *assets().get(name).tree;
    g.expect(gf::same_tree(*gf::parse(gf::render(tree)), tree), "render/parse round trip of " + name);
  }

  gf::Evaluator ev(assets(), 12);
  for (const auto& name : assets().names()) {
    try {
      const auto report = integrality_check(ev.eval_asset(name));
      g.expect(report.integral, name + ": non-integral coefficient of x^" +
                                    std::to_string(report.first_offender.value_or(0)));
    } catch (const Error& err) {
      g.expect(false, name + ": " + err.what());
    }
  }
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    std::string title;
    std::function<void(Gate&, std::vector<std::string>&)> run;
  };
  const std::vector<Criterion> criteria{
      {"equidistribution, six pairs, n=1..9, brute force", [](Gate& g, auto&) { equidistribution(g); }},
      {"asc/last on reversed pairs, n=1..7", [](Gate& g, auto&) { duality(g); }},
      {"golden values", [](Gate& g, auto&) { golden_values(g); }},
      {"DP equals brute force, all tables, n<=8", [](Gate& g, auto&) { dp_equals_oracle(g); }},
      {"series equals DP for every assembled formula", [](Gate& g, auto&) { series_equals_dp(g); }},
      {"Schroeder consistency", [](Gate& g, auto&) { schroeder_consistency(g); }},
      {"screening of all pattern pairs at n=6", [](Gate& g, auto& notes) { screening(g, notes); }},
      {"property suites", [](Gate& g, auto&) { property_suites(g); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Gate gate;
    std::vector<std::string> notes;
    const auto start = Clock::now();
    try {
      criteria[k].run(gate, notes);
    } catch (const std::exception& e) {
      gate.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = gate.failures.empty();
    if (!pass) ++failed;
    char time_text[32];
    std::snprintf(time_text, sizeof time_text, "%.2fs", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].title << " (" << time_text
              << ")\n";
    for (const auto& line : gate.failures) std::cout << (line.starts_with("  ") ? "" : "  ") << line << '\n';
    for (const auto& line : notes) std::cout << line << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
