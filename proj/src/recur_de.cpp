#include "schrodist/errors.hpp"
#include "schrodist/recur.hpp"

namespace schrodist {

namespace {

const MPoly kZero;

MPoly q_pow(int e) { return MPoly::monomial(Monomial::of(Var::q, static_cast<unsigned>(e))); }

}  // namespace

const MPoly& DETables::d_at(int n, int i, int m) const {
  if (n < 1 || n >= static_cast<int>(d.size())) return kZero;
  return d[static_cast<std::size_t>(n)].at(i, m);
}

// D_a(m) = 0 whenever m is outside [1, a].
const MPoly& DETables::big_d_at(int n, int m) const {
  if (n < 1 || n >= static_cast<int>(big_d.size()) || m < 1 || m > n) return kZero;
  return big_d[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

const MPoly& DETables::e_at(int n, int m) const {
  if (n < 1 || n >= static_cast<int>(e.size()) || m < 1 || m > n) return kZero;
  return e[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

DETables build_de_tables(int n_max) {
  if (n_max < 1) throw InvalidArgument("build_de_tables needs n_max >= 1");
  DETables t;
  const auto size = static_cast<std::size_t>(n_max) + 1;
  t.d.resize(size);
  t.big_d.resize(size);
  t.e.resize(size);
  const MPoly q = MPoly::var(Var::q);

  for (int n = 1; n <= n_max; ++n) {
    PolyTable& dn = t.d[static_cast<std::size_t>(n)];
    dn = PolyTable(n);
    // d_n(i, n) = delta_{i,n} q^(n-1); d_n(i, m) = 0 for n-m+1 <= i <= n-1.
    dn.set(n, n, q_pow(n - 1));
    if (n == 2) {
      dn.set(1, 1, MPoly(1));
      dn.set(2, 1, q);
    } else if (n >= 3) {
      for (int m = 1; m <= n - 1; ++m) {
        // First letter n.
        dn.set(n, m, q * t.big_d_at(n - 1, m == 1 ? 1 : m - 1));
        // First letter n - m.
        {
          MPoly value = q * t.big_d_at(n - 2, m == 1 ? 1 : m - 1);
          MPoly inner;
          for (int j = 1; j <= n - m - 1; ++j) inner += t.d_at(n - 1, j, m);
          value += q * inner;
          dn.set(n - m, m, std::move(value));
        }
        // First letter below n - m.
        for (int i = 1; i <= n - m - 1; ++i) {
          MPoly value = t.d_at(n - 1, i, m) + q * t.big_d_at(n - 2, n - i - 1);
          MPoly smaller;
          for (int j = 1; j <= i - 1; ++j) smaller += t.d_at(n - 1, j, m);
          value += q * smaller;
          MPoly split;
          for (int j = i + 2; j <= n - m; ++j) {
            for (int a = 0; a <= i - 1; ++a) {
              const MPoly& left = t.e_at(j - a - 2, j - i - 1);
              if (left.is_zero()) continue;
              const MPoly& right = t.d_at(n - j + a + 1, a + 1, m);
              if (right.is_zero()) continue;
              split += left * right;
            }
          }
          value += q * split;
          dn.set(i, m, std::move(value));
        }
      }
    }

    auto& dn_sums = t.big_d[static_cast<std::size_t>(n)];
    dn_sums.assign(static_cast<std::size_t>(n) + 1, MPoly());
    for (const auto& [key, poly] : dn.entries()) dn_sums[static_cast<std::size_t>(key.second)] += poly;

    // e_n(m) uses e_{n-a} with a >= 1 only, so it can follow D_n.
    auto& en = t.e[static_cast<std::size_t>(n)];
    en.assign(static_cast<std::size_t>(n) + 1, MPoly());
    for (int m = 1; m <= n; ++m) {
      MPoly split;
      for (int a = 1; a <= n - m; ++a) split += t.e_at(n - a, m) * t.big_d_at(a, 1);
      en[static_cast<std::size_t>(m)] = dn_sums[static_cast<std::size_t>(m)] - q * split;
    }
  }
  return t;
}

MPoly d_distribution(const DETables& tables, int n) {
  MPoly out;
  for (int i = 1; i <= n; ++i) {
    out += tables.d_at(n, i, 1).mul_monomial(Monomial::of(Var::v, static_cast<unsigned>(i)));
  }
  return out;
}

}  // namespace schrodist
