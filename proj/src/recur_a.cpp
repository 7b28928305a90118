#include <functional>
#include <memory>

#include "schrodist/errors.hpp"
#include "schrodist/recur.hpp"

namespace schrodist {

const std::vector<ACase>& all_a_cases() {
  static const std::vector<ACase> cases = {ACase::k1324_1342, ACase::k1243_1423, ACase::k1243_1342,
                                           ACase::k1243_1324};
  return cases;
}

ACase parse_a_case(std::string_view id) {
  for (ACase c : all_a_cases()) {
    if (a_case_id(c) == id) return c;
  }
  throw InvalidArgument("unknown case '" + std::string(id) +
                        "'; expected one of 1324,1342 1243,1423 1243,1342 1243,1324");
}

std::string a_case_id(ACase which) {
  switch (which) {
    case ACase::k1324_1342: return "1324,1342";
    case ACase::k1243_1423: return "1243,1423";
    case ACase::k1243_1342: return "1243,1342";
    case ACase::k1243_1324: return "1243,1324";
  }
  return "";
}

ATable::ATable(ACase which, std::vector<PolyTable> tables) : which_(which), tables_(std::move(tables)) {}

const MPoly& ATable::at(int n, int i, int j) const {
  static const MPoly kZero;
  if (n < 2 || n > n_max() || i == j) return kZero;
  return tables_[static_cast<std::size_t>(n)].at(i, j);
}

MPoly ATable::row(int n, int i) const {
  if (n == 1) return i == 1 ? MPoly(1) : MPoly();
  MPoly out;
  for (int j = 1; j <= n; ++j) out += at(n, i, j);
  return out;
}

MPoly ATable::total(int n) const {
  if (n == 0 || n == 1) return MPoly(1);
  MPoly out;
  if (n < 0 || n > n_max()) return out;
  for (const auto& [key, poly] : tables_[static_cast<std::size_t>(n)].entries()) out += poly;
  return out;
}

namespace {

class ABuilder {
 public:
  ABuilder(ACase which, int n_max) : which_(which) {
    std::vector<PolyTable> tables;
    for (int n = 0; n <= n_max; ++n) tables.emplace_back(n);
    table_ = std::make_unique<ATable>(which, std::move(tables));
  }

  ATable build() {
    const int n_max = table_->n_max();
    if (n_max >= 2) {
      set(2, 1, 2, MPoly(1));
      set(2, 2, 1, q_);
    }
    if (n_max >= 3) {
      set(3, 1, 2, MPoly(1));
      for (auto [i, j] : {std::pair{1, 3}, {2, 1}, {2, 3}, {3, 1}}) set(3, i, j, q_);
      set(3, 3, 2, q_ * q_);
    }
    for (int n = 4; n <= n_max; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          set(n, i, j, j < i ? q_ * a_row(n - 1, j) : upper(n, i, j));
        }
      }
    }
    return std::move(*table_);
  }

 private:
  const MPoly& a(int n, int i, int j) const { return table_->at(n, i, j); }
  MPoly a_row(int n, int i) const { return table_->row(n, i); }
  MPoly a_total(int n) const { return table_->total(n); }
  void set(int n, int i, int j, MPoly value) { table_->table(n).set(i, j, std::move(value)); }

  MPoly q_pow(long e) const { return MPoly::monomial(Monomial::of(Var::q, static_cast<unsigned>(e))); }

  // Weight q^(c+1) * C(i-a-1, c) shared by the triple sums below.
  MPoly weight(int i, int a, int c) const {
    return q_pow(c + 1) * Rational(binomial(i - a - 1, c));
  }

  // sum_{a=1}^{i-1} sum_{c=0}^{i-a-1} sum_{b=lo}^{hi} weight * a_{n-c-2}(a, b)
  MPoly triple(int n, int i, const std::function<int(int, int)>& hi) const {
    MPoly out;
    for (int a_ = 1; a_ <= i - 1; ++a_) {
      for (int c = 0; c <= i - a_ - 1; ++c) {
        MPoly inner;
        for (int b = a_ + 1; b <= hi(a_, c); ++b) inner += a(n - c - 2, a_, b);
        if (!inner.is_zero()) out += weight(i, a_, c) * inner;
      }
    }
    return out;
  }

  // sum_{a=1}^{i-1} sum_{c=0}^{i-a-1} weight * a_{n-c-2}(a, col(c))
  MPoly single(int n, int i, const std::function<int(int)>& col) const {
    MPoly out;
    for (int a_ = 1; a_ <= i - 1; ++a_) {
      for (int c = 0; c <= i - a_ - 1; ++c) {
        const MPoly& entry = a(n - c - 2, a_, col(c));
        if (!entry.is_zero()) out += weight(i, a_, c) * entry;
      }
    }
    return out;
  }

  // Entries with j > i.
  MPoly upper(int n, int i, int j) const {
    switch (which_) {
      case ACase::k1324_1342: return upper_1324_1342(n, i, j);
      case ACase::k1243_1423: return upper_1243_1423(n, i, j);
      case ACase::k1243_1342: return upper_1243_1342(n, i, j);
      case ACase::k1243_1324: return upper_1243_1324(n, i, j);
    }
    throw InvalidArgument("unknown case");
  }

  MPoly upper_1324_1342(int n, int i, int j) const {
    if (j == i + 1) return a_row(n - 1, i);
    if (j < n) return {};
    MPoly lower_rows;
    if (i <= n - 3) {
      for (int k = 1; k <= i; ++k) lower_rows += a_row(n - 2, k);
      return q_ * a(n - 1, i, n - 1) + q_ * lower_rows;
    }
    // i = n - 2
    for (int k = 1; k <= n - 3; ++k) lower_rows += a_row(n - 2, k);
    return q_ * q_ * a_total(n - 3) + q_ * lower_rows;
  }

  MPoly upper_1243_1423(int n, int i, int j) const {
    if (j == i + 1) {
      if (i == n - 1) return q_ * a_total(n - 2);
      return a(n - 1, i, i + 1) + triple(n, i, [i](int, int c) { return i - c; });
    }
    if (j == i + 2) {
      if (i == n - 2) return q_ * a_total(n - 2);
      return q_ * a(n - 1, i, i + 1) + a(n - 1, i, i + 2) +
             triple(n, i, [i](int, int c) { return i - c + 1; });
    }
    MPoly value = q_ * a(n - 1, i, j - 1) + single(n, i, [j](int c) { return j - c - 2; });
    if (j != n) value += a(n - 1, i, j) + single(n, i, [j](int c) { return j - c - 1; });
    return value;
  }

  // Last column shared by (1243,1342) and (1243,1324).
  MPoly last_column(int n, int i) const {
    MPoly below, above;
    for (int k = 1; k <= i - 1; ++k) below += a(n - 1, i, k);
    for (int k = i + 1; k <= n - 1; ++k) above += a(n - 1, i, k);
    return below + q_ * above;
  }

  MPoly upper_1243_1342(int n, int i, int j) const {
    if (j == n) return last_column(n, i);
    MPoly between;
    for (int k = i + 1; k <= j - 1; ++k) between += a(n - 1, i, k);
    MPoly value = q_ * between + triple(n, i, [j](int, int c) { return j - c - 2; });
    if (j == i + 1) value += a(n - 1, i, i + 1) + single(n, i, [i](int c) { return i - c; });
    return value;
  }

  MPoly upper_1243_1324(int n, int i, int j) const {
    if (j == n) return last_column(n, i);
    if (j == i + 1) {
      MPoly value = a(n - 1, i, i + 1);
      for (int a_ = 1; a_ <= i - 1; ++a_) {
        for (int b = a_ + 1; b <= i; ++b) {
          for (int c = 0; c <= i - b; ++c) {
            const MPoly& entry = a(n - c - 2, a_, b);
            if (!entry.is_zero()) value += weight(i, a_, c) * entry;
          }
        }
      }
      return value;
    }
    return a(n - 1, i, j) + single(n, i, [j](int c) { return j - c - 1; });
  }

  ACase which_;
  std::unique_ptr<ATable> table_;
  MPoly q_ = MPoly::var(Var::q);
};

}  // namespace

ATable build_a_table(int n_max, ACase which) {
  if (n_max < 1) throw InvalidArgument("build_a_table needs n_max >= 1");
  return ABuilder(which, n_max).build();
}

MPoly a_distribution(const ATable& table, int n) {
  MPoly out;
  for (int i = 1; i <= n; ++i) {
    out += table.row(n, i).mul_monomial(Monomial::of(Var::v, static_cast<unsigned>(i)));
  }
  return out;
}

}  // namespace schrodist
