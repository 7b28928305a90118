#include "schrodist/errors.hpp"
#include "schrodist/recur.hpp"

namespace schrodist {

namespace {

MPoly pq_monomial(unsigned ep, unsigned eq) {
  return MPoly::monomial(Monomial::from_exponents(eq, 0, 0, ep));
}

}  // namespace

MPoly r_top_closed_form(int n, int j) {
  MPoly out;
  if (j < 0 || j > n - 2) return out;
  for (int l = 1; l <= n - 1; ++l) {
    const BigInt count = binomial(n - l - 1, n - j - 2);
    if (count != 0) {
      out += pq_monomial(static_cast<unsigned>(l), static_cast<unsigned>(j)) * Rational(count);
    }
  }
  return out;
}

std::vector<PolyTable> build_r_table(int n_max) {
  if (n_max < 1) throw InvalidArgument("build_r_table needs n_max >= 1");
  std::vector<PolyTable> r;
  for (int n = 0; n <= n_max; ++n) r.emplace_back(n);
  const MPoly p = MPoly::var(Var::p);
  const MPoly pq = pq_monomial(1, 1);
  r[1].set(2, 0, p);

  for (int n = 2; n <= n_max; ++n) {
    const PolyTable& prev = r[static_cast<std::size_t>(n - 1)];
    PolyTable& cur = r[static_cast<std::size_t>(n)];
    // All active sites: alpha n beta with alpha increasing, beta decreasing.
    for (int j = 0; j <= n - 2; ++j) cur.set(n + 1, j, r_top_closed_form(n, j));
    // Only the decreasing permutation has dact = act - 2.
    cur.set(n + 1, n - 1, pq_monomial(static_cast<unsigned>(n), static_cast<unsigned>(n - 1)));
    if (n == 2) continue;

    // act = dact + 3.
    for (int j = 0; j <= n - 3; ++j) {
      MPoly value = pq * prev.at(j + 2, j - 1);
      MPoly first_sum;
      for (int i = j + 3; i <= n; ++i) first_sum += prev.at(i, j);
      value += pq * first_sum;
      MPoly second_sum;
      for (int k = j + 1; k <= n - 2; ++k) {
        for (int i = k + 2; i <= n; ++i) second_sum += prev.at(i, k);
      }
      value += p * second_sum;
      cur.set(j + 3, j, std::move(value));
    }
    // act >= dact + 4, act <= n.
    for (int i = 4; i <= n; ++i) {
      for (int j = 0; j + 4 <= i; ++j) {
        MPoly value = pq * prev.at(i - 1, j - 1) + p * prev.at(i - 1, j);
        MPoly tail;
        for (int l = i; l <= n; ++l) tail += prev.at(l, j);
        value += pq * tail;
        cur.set(i, j, std::move(value));
      }
    }
  }
  return r;
}

MPoly r_distribution(const std::vector<PolyTable>& r, int n) {
  if (n == 1) return MPoly::var(Var::v);
  MPoly total;
  for (const auto& [key, poly] : r.at(static_cast<std::size_t>(n)).entries()) total += poly;
  std::array<std::optional<MPoly>, 4> rename;
  rename[static_cast<unsigned>(Var::p)] = MPoly::var(Var::v);
  return total.subst(rename);
}

}  // namespace schrodist
