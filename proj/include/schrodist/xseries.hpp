#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schrodist/mpoly.hpp"

namespace schrodist {

/// Power series in x with MPoly coefficients, known modulo x^order. The
/// coefficient of x^k is stored for 0 <= k < order.
class XSeries {
 public:
  XSeries() = default;
  explicit XSeries(std::size_t order) : coeffs_(order) {}
  XSeries(std::size_t order, const MPoly& constant);
  static XSeries from_coeffs(std::vector<MPoly> coeffs);
  /// The series x itself.
  static XSeries x(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const MPoly& operator[](std::size_t k) const { return coeffs_[k]; }
  MPoly& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  XSeries truncated(std::size_t order) const;

  XSeries operator-() const;
  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const MPoly& b);
  friend bool operator==(const XSeries& a, const XSeries& b) = default;

  std::string to_string() const;

 private:
  std::vector<MPoly> coeffs_;
};

XSeries series_add(const XSeries& a, const XSeries& b);
XSeries series_neg(const XSeries& a);
XSeries series_mul(const XSeries& a, const XSeries& b);
XSeries series_pow(const XSeries& a, unsigned exponent);

/// num / den where the constant term of den is a nonzero rational.
/// Throws NonInvertibleConstantTerm otherwise.
XSeries series_div(const XSeries& num, const XSeries& den);

/// num / den where the constant term of den is any nonzero polynomial and
/// the quotient is known to have polynomial coefficients. Every step is an
/// exact polynomial division; throws NotDivisible when one is not.
XSeries series_div_exact(const XSeries& num, const XSeries& den);

/// Principal square root. Throws BadConstantTerm unless the constant term is 1.
XSeries series_sqrt(const XSeries& s);

/// Substitution x -> m*x for a monomial m with coefficient 1.
/// Throws NotAMonomial otherwise.
XSeries series_scale_x(const XSeries& s, const MPoly& m);

/// Applies MPoly::subst to every coefficient.
XSeries series_subst(const XSeries& s, const std::array<std::optional<MPoly>, 4>& images);

struct IntegralityReport {
  bool integral = true;
  std::optional<std::size_t> first_offender;
};

IntegralityReport integrality_check(const XSeries& s);

}  // namespace schrodist
