#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schrodist {

using Rational = mpq_class;
using BigInt = mpz_class;

/// The four coefficient variables. Declaration order is the rendering and
/// comparison order of exponent vectors.
enum class Var : std::uint8_t { q = 0, v = 1, w = 2, p = 3 };

inline constexpr std::array<Var, 4> kAllVars = {Var::q, Var::v, Var::w, Var::p};

char var_name(Var var);
/// Throws UnknownVariable for anything other than q, v, w, p.
Var parse_var(std::string_view name);

/// Exponent vector (e_q, e_v, e_w, e_p) packed 16 bits per variable, q in the
/// most significant slot, so integer order is lexicographic order.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t key) : key_(key) {}
  static Monomial from_exponents(unsigned eq, unsigned ev, unsigned ew, unsigned ep);
  static Monomial of(Var var, unsigned exponent = 1);

  unsigned exponent(Var var) const {
    return static_cast<unsigned>((key_ >> shift(var)) & 0xffffu);
  }
  std::uint64_t key() const { return key_; }
  bool is_one() const { return key_ == 0; }
  bool divides(Monomial other) const;

  friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_); }
  friend Monomial operator/(Monomial a, Monomial b) { return Monomial(a.key_ - b.key_); }
  friend bool operator==(Monomial a, Monomial b) = default;
  friend auto operator<=>(Monomial a, Monomial b) = default;

 private:
  static constexpr unsigned shift(Var var) { return 48u - 16u * static_cast<unsigned>(var); }
  std::uint64_t key_ = 0;
};

/// Exact polynomial in q, v, w, p with rational coefficients. Terms are kept
/// sorted by monomial with no zero coefficients, so structural equality is
/// polynomial equality.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() = default;
  MPoly(long value);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& value);  // NOLINT(google-explicit-constructor)
  static MPoly var(Var var);
  static MPoly monomial(Monomial mono, const Rational& coeff = 1);
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coeff(Monomial mono) const;
  /// True iff the polynomial is a single monomial with coefficient 1.
  bool is_unit_monomial() const;
  /// Every coefficient has denominator 1.
  bool is_integral() const;
  bool has_nonnegative_coefficients() const;
  unsigned degree(Var var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly pow(unsigned exponent) const;
  MPoly mul_monomial(Monomial mono) const;

  /// Partial evaluation var := value.
  MPoly subst(Var var, const Rational& value) const;
  /// Simultaneous substitution of polynomials for variables. Entries left as
  /// std::nullopt keep their variable.
  MPoly subst(const std::array<std::optional<MPoly>, 4>& images) const;
  Rational evaluate(const std::array<Rational, 4>& point) const;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

  /// Canonical text, e.g. "4*q^2*v + 2*q^3*v"; "0" for the zero polynomial.
  std::string to_string() const;

  /// Term with the largest monomial. Precondition: non-zero.
  const Term& leading_term() const { return terms_.back(); }

 private:
  void add_scaled(const MPoly& other, const Rational& scale);
  std::vector<Term> terms_;
};

std::string to_string(const Rational& value);

}  // namespace schrodist
