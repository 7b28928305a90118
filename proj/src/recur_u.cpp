#include "schrodist/recur.hpp"

#include "schrodist/errors.hpp"

namespace schrodist {

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

namespace {

MPoly q_pow(unsigned e) { return MPoly::monomial(Monomial::of(Var::q, e)); }

}  // namespace

std::vector<PolyTable> build_u_table(int n_max) {
  if (n_max < 2) throw InvalidArgument("build_u_table needs n_max >= 2");
  std::vector<PolyTable> u;
  for (int n = 0; n <= n_max; ++n) u.emplace_back(n);
  const MPoly q = MPoly::var(Var::q);
  u[2].set(1, 1, MPoly(1));

  for (int n = 3; n <= n_max; ++n) {
    const PolyTable& prev = u[static_cast<std::size_t>(n - 1)];
    const PolyTable& prev2 = u[static_cast<std::size_t>(n - 2)];
    PolyTable& cur = u[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        MPoly value;
        if (i < j) {
          if (j == n - 1) value += q_pow(static_cast<unsigned>(n - 2));
          value += prev.at(j, i);
          MPoly inner;
          for (int k = 1; k <= i - 1; ++k) inner += prev2.at(j - 1, k) + prev.at(j - 1, k);
          value += q * inner;
        } else if (j < i) {
          MPoly inner;
          for (int l = 1; l <= i - 1; ++l) inner += prev.at(l, j);
          value = q * inner;
        } else if (i <= n - 2) {
          for (int k = 1; k <= i - 1; ++k) value += prev.at(i, k);
          for (int l = 1; l <= i; ++l) value += prev.at(l, i);
        } else if (n == 3) {
          value = q;
        } else {
          // u_n(n-1, n-1): w'(n-1)(n-1) with w' an unrestricted member of length n-2.
          MPoly inner;
          for (const auto& [key, poly] : prev2.entries()) inner += poly;
          value = q_pow(static_cast<unsigned>(n - 2)) + q * inner;
        }
        cur.set(i, j, std::move(value));
      }
    }
  }
  return u;
}

MPoly assemble_u(const std::vector<PolyTable>& u, int n) {
  MPoly out;
  if (n < 2) return out;
  for (const auto& [key, poly] : u.at(static_cast<std::size_t>(n)).entries()) {
    out += poly.mul_monomial(
        Monomial::from_exponents(0, static_cast<unsigned>(key.first), static_cast<unsigned>(key.second), 0));
  }
  return out;
}

MPoly u_distribution(const std::vector<PolyTable>& u, int n) {
  const MPoly increasing =
      MPoly::monomial(Monomial::from_exponents(static_cast<unsigned>(n - 1), static_cast<unsigned>(n), 0, 0));
  if (n < 2) return increasing;
  return assemble_u(u, n).subst(Var::w, 1) + increasing;
}

std::vector<std::vector<BigInt>> schroeder_triangle(int n_max) {
  if (n_max < 1) throw InvalidArgument("schroeder_triangle needs n_max >= 1");
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max) + 1);
  rows[1] = {0, 1};
  if (n_max >= 2) rows[2] = {0, 1, 1};
  for (int n = 3; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    const auto& above = rows[static_cast<std::size_t>(n - 1)];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n - 2; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      row[uk] = row[uk - 1] + 2 * above[uk] - above[uk - 1];
    }
    row[static_cast<std::size_t>(n - 1)] = row[static_cast<std::size_t>(n - 2)];
    row[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(n - 2)];
  }
  return rows;
}

}  // namespace schrodist
