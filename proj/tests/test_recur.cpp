#include <doctest.h>

#include "oracles.hpp"
#include "schrodist/errors.hpp"
#include "schrodist/invseq.hpp"
#include "schrodist/recur.hpp"

using namespace schrodist;

namespace {

MPoly q() { return MPoly::var(Var::q); }
MPoly p() { return MPoly::var(Var::p); }
MPoly v() { return MPoly::var(Var::v); }

std::string dump(const PolyTable& t) {
  std::string out;
  for (const auto& [key, poly] : t.entries()) {
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")=" + poly.to_string() + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("u table: values listed for n = 3 and n = 4") {
  const auto u = build_u_table(5);
  CHECK(u[3].at(1, 1) == 1);
  CHECK(u[3].at(1, 2) == q());
  CHECK(u[3].at(2, 2) == q());
  CHECK(u[3].at(3, 2).is_zero());
  CHECK(u[4].at(2, 2) == 3 * q());
  CHECK(u[4].at(4, 1) == q() + 2 * q().pow(2));
  CHECK(u[5].at(2, 4) == 4 * q().pow(2) + 2 * q().pow(3));
}

TEST_CASE("u table matches the inversion-sequence oracle through n = 8") {
  const auto u = build_u_table(8);
  for (int n = 2; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(dump(u[static_cast<std::size_t>(n)]) == dump(u_oracle(n)));
    CHECK(u_distribution(u, n) == last_dist_distribution(n));
  }
}

TEST_CASE("r table: hand values and the grouped oracle") {
  const auto r = build_r_table(8);
  CHECK(r[5].at(4, 0) == p().pow(2) * q() * (1 + p()).pow(2) +
                             p().pow(3) * q().pow(2) * (1 + 2 * p() + 3 * p().pow(2)));
  CHECK(r[4].at(4, 1) == (p().pow(2) + 2 * p().pow(3) + 2 * p().pow(4)) * q().pow(2));
  for (int n = 1; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(dump(r[static_cast<std::size_t>(n)]) == dump(oracle::r_table(n)));
    for (int j = 0; j <= n - 2; ++j) CHECK(r[static_cast<std::size_t>(n)].at(n + 1, j) == r_top_closed_form(n, j));
  }
}

TEST_CASE("d and e tables match the definitions through n = 8") {
  const auto t = build_de_tables(8);
  CHECK(t.e_at(3, 1) == 1 + 2 * q());
  CHECK(t.d_at(3, 2, 1) == 2 * q());
  for (int n = 1; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(dump(t.d[static_cast<std::size_t>(n)]) == dump(oracle::d_table(n)));
    const auto e = oracle::e_row(n);
    for (int m = 1; m <= n; ++m) {
      INFO("m = " << m);
      CHECK(t.e_at(n, m) == e[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("d table edge closed forms") {
  const auto t = build_de_tables(10);
  for (int n = 4; n <= 10; ++n) {
    INFO("n = " << n);
    CHECK(t.d_at(n, 1, n - 1) == q().pow(static_cast<unsigned>(n - 2)));
    CHECK(t.d_at(n, n, n - 1) == (n - 2) * q().pow(static_cast<unsigned>(n - 2)) + q().pow(static_cast<unsigned>(n - 1)));
    CHECK(t.e_at(n, n - 1) == (n - 1) * q().pow(static_cast<unsigned>(n - 2)));
  }
}

TEST_CASE("a tables match first-two-letter grouping through n = 8") {
  for (ACase which : all_a_cases()) {
    const auto a = build_a_table(8, which);
    for (int n = 2; n <= 8; ++n) {
      INFO(a_case_id(which) << " n = " << n);
      CHECK(dump(a.table(n)) == dump(oracle::a_table(n, which)));
    }
  }
}

TEST_CASE("a table for 1324,1342 at n = 4") {
  const auto a = build_a_table(4, ACase::k1324_1342);
  CHECK(a.at(4, 2, 3) == 2 * q());
  CHECK(a.at(4, 4, 3) == q().pow(2) + q().pow(3));
  CHECK(a.at(4, 1, 2) == 1 + q());
  CHECK_THROWS_AS(parse_a_case("1234,1243"), InvalidArgument);
}

TEST_CASE("all recurrence distributions coincide through n = 12") {
  const int n_max = 12;
  const auto u = build_u_table(n_max);
  const auto r = build_r_table(n_max);
  const auto de = build_de_tables(n_max);
  std::vector<ATable> as;
  for (ACase which : all_a_cases()) as.push_back(build_a_table(n_max, which));
  const auto tri = schroeder_triangle(n_max);
  for (int n = 2; n <= n_max; ++n) {
    INFO("n = " << n);
    const MPoly target = u_distribution(u, n);
    CHECK(r_distribution(r, n) == target);
    CHECK(d_distribution(de, n) == target);
    for (const auto& a : as) CHECK(a_distribution(a, n) == target);
    const MPoly at_q1 = target.subst(Var::q, 1);
    for (int k = 1; k <= n; ++k) {
      CHECK(at_q1.coeff(Monomial::of(Var::v, static_cast<unsigned>(k))) ==
            Rational(tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("Schroeder triangle rows") {
  const auto tri = schroeder_triangle(5);
  CHECK(tri[2] == std::vector<BigInt>{0, 1, 1});
  CHECK(tri[3] == std::vector<BigInt>{0, 2, 2, 2});
  const std::vector<long> sums{1, 2, 6, 22, 90};
  for (int n = 1; n <= 5; ++n) {
    BigInt total = 0;
    for (const auto& value : tri[static_cast<std::size_t>(n)]) total += value;
    CHECK(total == sums[static_cast<std::size_t>(n - 1)]);
  }
}
