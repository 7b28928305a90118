#include "schrodist/xseries.hpp"

#include <algorithm>

#include "schrodist/errors.hpp"

namespace schrodist {

XSeries::XSeries(std::size_t order, const MPoly& constant) : coeffs_(order) {
  if (order > 0) coeffs_[0] = constant;
}

XSeries XSeries::from_coeffs(std::vector<MPoly> coeffs) {
  XSeries out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

XSeries XSeries::x(std::size_t order) {
  XSeries out(order);
  if (order > 1) out.coeffs_[1] = MPoly(1);
  return out;
}

bool XSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& c) { return c.is_zero(); });
}

XSeries XSeries::truncated(std::size_t order) const {
  XSeries out = *this;
  out.coeffs_.resize(std::min(order, coeffs_.size()));
  return out;
}

XSeries XSeries::operator-() const {
  XSeries out(order());
  for (std::size_t k = 0; k < order(); ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  XSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  XSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  XSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < out.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < out.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

XSeries operator*(const XSeries& a, const MPoly& b) {
  XSeries out(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) out.coeffs_[k] = a.coeffs_[k] * b;
  return out;
}

std::string XSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k > 0) out += "*x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

XSeries series_add(const XSeries& a, const XSeries& b) { return a + b; }
XSeries series_neg(const XSeries& a) { return -a; }
XSeries series_mul(const XSeries& a, const XSeries& b) { return a * b; }

XSeries series_pow(const XSeries& a, unsigned exponent) {
  XSeries result(a.order(), MPoly(1));
  XSeries base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

XSeries series_div(const XSeries& num, const XSeries& den) {
  const std::size_t order = std::min(num.order(), den.order());
  if (order == 0) return XSeries();
  if (!den[0].is_constant() || den[0].is_zero()) {
    throw NonInvertibleConstantTerm("series division: constant term " + den[0].to_string() +
                                    " is not a nonzero rational");
  }
  const Rational inv = Rational(1) / den[0].constant_term();
  XSeries out(order);
  for (std::size_t k = 0; k < order; ++k) {
    MPoly acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) {
      if (!den[j].is_zero() && !out[k - j].is_zero()) acc -= den[j] * out[k - j];
    }
    out[k] = acc * inv;
  }
  return out;
}

XSeries series_div_exact(const XSeries& num, const XSeries& den) {
  const std::size_t order = std::min(num.order(), den.order());
  if (order == 0) return XSeries();
  if (den[0].is_constant()) return series_div(num, den);
  XSeries out(order);
  for (std::size_t k = 0; k < order; ++k) {
    MPoly acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) {
      if (!den[j].is_zero() && !out[k - j].is_zero()) acc -= den[j] * out[k - j];
    }
    auto quotient = MPoly::divide_exact(acc, den[0]);
    if (!quotient) {
      throw NotDivisible("series division: coefficient of x^" + std::to_string(k) +
                         " is not divisible by " + den[0].to_string());
    }
    out[k] = std::move(*quotient);
  }
  return out;
}

XSeries series_sqrt(const XSeries& s) {
  const std::size_t order = s.order();
  if (order == 0) return XSeries();
  if (s[0] != MPoly(1)) {
    throw BadConstantTerm("series sqrt: constant term " + s[0].to_string() + " is not 1");
  }
  // R^2 = S solved coefficient by coefficient: 2*R_k = S_k - sum_{0<j<k} R_j R_{k-j}.
  XSeries out(order);
  out[0] = MPoly(1);
  const Rational half(1, 2);
  for (std::size_t k = 1; k < order; ++k) {
    MPoly acc = s[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (!out[j].is_zero() && !out[k - j].is_zero()) acc -= out[j] * out[k - j];
    }
    out[k] = acc * half;
  }
  return out;
}

XSeries series_scale_x(const XSeries& s, const MPoly& m) {
  if (!m.is_unit_monomial()) {
    throw NotAMonomial("scale_x: " + m.to_string() + " is not a monomial with coefficient 1");
  }
  const Monomial mono = m.leading_term().first;
  XSeries out(s.order());
  Monomial power;
  for (std::size_t k = 0; k < s.order(); ++k) {
    out[k] = s[k].mul_monomial(power);
    power = power * mono;
  }
  return out;
}

XSeries series_subst(const XSeries& s, const std::array<std::optional<MPoly>, 4>& images) {
  XSeries out(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) out[k] = s[k].subst(images);
  return out;
}

IntegralityReport integrality_check(const XSeries& s) {
  for (std::size_t k = 0; k < s.order(); ++k) {
    if (!s[k].is_integral()) return {false, k};
  }
  return {};
}

}  // namespace schrodist
