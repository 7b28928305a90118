#include "schrodist/mpoly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "schrodist/errors.hpp"

namespace schrodist {

char var_name(Var var) {
  static constexpr char kNames[] = {'q', 'v', 'w', 'p'};
  return kNames[static_cast<unsigned>(var)];
}

Var parse_var(std::string_view name) {
  if (name == "q") return Var::q;
  if (name == "v") return Var::v;
  if (name == "w") return Var::w;
  if (name == "p") return Var::p;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

Monomial Monomial::from_exponents(unsigned eq, unsigned ev, unsigned ew, unsigned ep) {
  return Monomial((std::uint64_t{eq} << 48) | (std::uint64_t{ev} << 32) |
                  (std::uint64_t{ew} << 16) | std::uint64_t{ep});
}

Monomial Monomial::of(Var var, unsigned exponent) {
  return Monomial(std::uint64_t{exponent} << shift(var));
}

bool Monomial::divides(Monomial other) const {
  for (Var var : kAllVars) {
    if (exponent(var) > other.exponent(var)) return false;
  }
  return true;
}

MPoly::MPoly(long value) {
  if (value != 0) terms_.emplace_back(Monomial(), Rational(value));
}

MPoly::MPoly(const Rational& value) {
  if (sgn(value) != 0) terms_.emplace_back(Monomial(), value);
}

MPoly MPoly::var(Var var) { return monomial(Monomial::of(var)); }

MPoly MPoly::monomial(Monomial mono, const Rational& coeff) {
  MPoly out;
  if (sgn(coeff) != 0) out.terms_.emplace_back(mono, coeff);
  return out;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  MPoly out;
  for (auto& [mono, c] : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == mono) {
      out.terms_.back().second += c;
    } else {
      out.terms_.emplace_back(mono, std::move(c));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return sgn(t.second) == 0; });
  return out;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return 0;
}

Rational MPoly::coeff(Monomial mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, Monomial m) { return t.first < m; });
  if (it != terms_.end() && it->first == mono) return it->second;
  return 0;
}

bool MPoly::is_unit_monomial() const {
  return terms_.size() == 1 && terms_[0].second == 1;
}

bool MPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

bool MPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return sgn(t.second) >= 0; });
}

unsigned MPoly::degree(Var var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(var));
  return d;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void MPoly::add_scaled(const MPoly& other, const Rational& scale) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, b->second * scale);
      ++b;
    } else {
      Rational sum = a->second + b->second * scale;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

MPoly& MPoly::operator+=(const MPoly& other) {
  add_scaled(other, 1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  add_scaled(other, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= scalar;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;

  std::unordered_map<std::uint64_t, std::size_t> slot;
  slot.reserve(a.terms_.size() * b.terms_.size());
  std::vector<MPoly::Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = ma * mb;
      mpq_mul(product.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = slot.try_emplace(m.key(), acc.size());
      if (inserted) {
        acc.emplace_back(m, product);
      } else {
        acc[it->second].second += product;
      }
    }
  }
  std::erase_if(acc, [](const MPoly::Term& t) { return sgn(t.second) == 0; });
  std::sort(acc.begin(), acc.end(),
            [](const MPoly::Term& x, const MPoly::Term& y) { return x.first < y.first; });
  MPoly out;
  out.terms_ = std::move(acc);
  return out;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::mul_monomial(Monomial mono) const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.first = t.first * mono;
  return out;
}

MPoly MPoly::subst(Var var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) {
    const unsigned e = mono.exponent(var);
    Rational factor;
    mpz_pow_ui(factor.get_num_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(factor.get_den_mpz_t(), value.get_den_mpz_t(), e);
    factor.canonicalize();
    out.emplace_back(mono / Monomial::of(var, e), c * factor);
  }
  return from_terms(std::move(out));
}

MPoly MPoly::subst(const std::array<std::optional<MPoly>, 4>& images) const {
  // Power caches per variable keep repeated exponents cheap.
  std::array<std::vector<MPoly>, 4> powers;
  auto power_of = [&](Var var, unsigned e) -> const MPoly& {
    auto& cache = powers[static_cast<unsigned>(var)];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * *images[static_cast<unsigned>(var)]);
    return cache[e];
  };
  MPoly out;
  for (const auto& [mono, c] : terms_) {
    Monomial kept;
    MPoly term(c);
    for (Var var : kAllVars) {
      const unsigned e = mono.exponent(var);
      if (e == 0) continue;
      if (images[static_cast<unsigned>(var)]) {
        term = term * power_of(var, e);
      } else {
        kept = kept * Monomial::of(var, e);
      }
    }
    out += term.mul_monomial(kept);
  }
  return out;
}

Rational MPoly::evaluate(const std::array<Rational, 4>& point) const {
  Rational total = 0;
  for (const auto& [mono, c] : terms_) {
    Rational value = c;
    for (Var var : kAllVars) {
      for (unsigned e = mono.exponent(var); e > 0; --e) value *= point[static_cast<unsigned>(var)];
    }
    total += value;
  }
  return total;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a * (Rational(1) / b.terms_[0].second);
  if (b.terms_.size() == 1) {
    const auto& [mb, cb] = b.terms_[0];
    MPoly out;
    const Rational inv = Rational(1) / cb;
    for (const auto& [ma, ca] : a.terms_) {
      if (!mb.divides(ma)) return std::nullopt;
      out.terms_.emplace_back(ma / mb, ca * inv);
    }
    return out;
  }
  // Lex-leading-term division; with a single divisor a nonzero remainder
  // exists iff the leading monomial of b fails to divide that of the residue.
  std::map<std::uint64_t, Rational> rest;
  for (const auto& [m, c] : a.terms_) rest.emplace(m.key(), c);
  const auto& [lead_mono, lead_coeff] = b.leading_term();
  const Rational inv_lead = Rational(1) / lead_coeff;
  std::vector<Term> quotient;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const Monomial top_mono(top->first);
    if (!lead_mono.divides(top_mono)) return std::nullopt;
    const Monomial qm = top_mono / lead_mono;
    const Rational qc = top->second * inv_lead;
    rest.erase(top);
    for (auto it = b.terms_.rbegin() + 1; it != b.terms_.rend(); ++it) {
      const std::uint64_t key = (it->first * qm).key();
      auto [slot, inserted] = rest.try_emplace(key);
      slot->second -= it->second * qc;
      if (sgn(slot->second) == 0) rest.erase(slot);
    }
    quotient.emplace_back(qm, qc);
  }
  return from_terms(std::move(quotient));
}

std::string to_string(const Rational& value) {
  return value.get_den() == 1 ? value.get_num().get_str() : value.get_str();
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    std::string factors;
    for (Var var : kAllVars) {
      const unsigned e = mono.exponent(var);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(var);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += schrodist::to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += schrodist::to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

}  // namespace schrodist
