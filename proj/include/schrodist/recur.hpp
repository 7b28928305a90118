#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schrodist/mpoly.hpp"
#include "schrodist/permutation.hpp"
#include "schrodist/tables.hpp"

namespace schrodist {

BigInt binomial(long top, long bottom);

// ---------------------------------------------------------------------------
// Inversion sequences: u_n(i, j) by last letter and height.

/// Tables u_0 .. u_{n_max}; u_0 and u_1 are empty.
std::vector<PolyTable> build_u_table(int n_max);

/// U_n(v, w) = sum u_n(i, j) v^i w^j.
MPoly assemble_u(const std::vector<PolyTable>& u, int n);
/// U_n(v, 1) + v^n q^(n-1): the (last, dist) distribution over I_n(>=,-,>).
MPoly u_distribution(const std::vector<PolyTable>& u, int n);

// ---------------------------------------------------------------------------
// S_n(1324,1423): r_n(i, j) by active sites and active descents, in p and q.

/// Tables r_0 .. r_{n_max}; r_0 is empty and r_1 holds r_1(2,0) = p.
std::vector<PolyTable> build_r_table(int n_max);
/// r_n(n+1, j) from its binomial closed form.
MPoly r_top_closed_form(int n, int j);
/// Sum of r_n(i, j) with p renamed to v (and v itself for n = 1).
MPoly r_distribution(const std::vector<PolyTable>& r, int n);

// ---------------------------------------------------------------------------
// S_n(1342,1423): d_n(i, m), D_n(m), e_n(m).

struct DETables {
  /// d[n].at(i, m)
  std::vector<PolyTable> d;
  /// big_d[n][m] = D_n(m), m in 1..n
  std::vector<std::vector<MPoly>> big_d;
  /// e[n][m], m in 1..n
  std::vector<std::vector<MPoly>> e;

  const MPoly& d_at(int n, int i, int m) const;
  const MPoly& big_d_at(int n, int m) const;
  const MPoly& e_at(int n, int m) const;
};

DETables build_de_tables(int n_max);
/// Sum_i v^i d_n(i, 1).
MPoly d_distribution(const DETables& tables, int n);

// ---------------------------------------------------------------------------
// Four pairs treated through the second letter: a_n(i, j).

enum class ACase { k1324_1342, k1243_1423, k1243_1342, k1243_1324 };

const std::vector<ACase>& all_a_cases();
/// Throws InvalidArgument (unknown case) for anything but the four ids.
ACase parse_a_case(std::string_view id);
std::string a_case_id(ACase which);

class ATable {
 public:
  ATable(ACase which, std::vector<PolyTable> tables);
  ACase which() const { return which_; }
  int n_max() const { return static_cast<int>(tables_.size()) - 1; }
  const PolyTable& table(int n) const { return tables_.at(static_cast<std::size_t>(n)); }
  PolyTable& table(int n) { return tables_.at(static_cast<std::size_t>(n)); }

  /// a_n(i, j); zero outside 1 <= i != j <= n.
  const MPoly& at(int n, int i, int j) const;
  /// a_n(i) = sum_j a_n(i, j), with a_1(1) = 1.
  MPoly row(int n, int i) const;
  /// a_n = sum_i a_n(i), with a_0 = 1.
  MPoly total(int n) const;

 private:
  ACase which_;
  std::vector<PolyTable> tables_;
};

ATable build_a_table(int n_max, ACase which);
/// Sum_i v^i a_n(i).
MPoly a_distribution(const ATable& table, int n);

// ---------------------------------------------------------------------------

/// rows[n][k] = S_{n,k} for 1 <= k <= n, with rows[n][0] = 0.
std::vector<std::vector<BigInt>> schroeder_triangle(int n_max);

}  // namespace schrodist
