#include <algorithm>

#include "schrodist/errors.hpp"
#include "schrodist/gf.hpp"

namespace schrodist::gf {

// A fraction num / (den[0] * den[1] * ...). Denominator factors whose
// constant term is a rational are divided out at once; the others (such as
// 2*(v-1) at x = 0) stay pending until the whole subtree is assembled, when
// the quotient is known to have polynomial coefficients.
struct Evaluator::Value {
  XSeries num;
  std::vector<XSeries> den;
};

namespace {

XSeries product_of(const std::vector<XSeries>& factors, std::size_t order) {
  XSeries out(order, MPoly(1));
  for (const auto& f : factors) out = out * f;
  return out;
}

Var coefficient_var(char c) { return parse_var(std::string_view(&c, 1)); }

}  // namespace

std::string Evaluator::where(const Node& node) const {
  std::string text = render(node);
  if (text.size() > 60) text = text.substr(0, 57) + "...";
  std::string out = " in '" + text + "' [" + std::to_string(node.span.begin) + "," + std::to_string(node.span.end) + ")";
  if (!current_.empty()) out += " of @" + current_;
  return out;
}

Evaluator::Evaluator(const Library& library, std::size_t order) : library_(library), order_(order) {
  if (order == 0) throw InvalidArgument("series order must be at least 1");
}

XSeries Evaluator::finalize(Value value, const Node& node) {
  if (value.den.empty()) return std::move(value.num);
  try {
    return series_div_exact(value.num, product_of(value.den, order_));
  } catch (const NotDivisible& e) {
    throw NotDivisible(std::string(e.what()) + where(node));
  } catch (const NonInvertibleConstantTerm& e) {
    throw NonInvertibleConstantTerm(std::string(e.what()) + where(node));
  }
}

Evaluator::Value Evaluator::value_of(const Node& node) {
  const auto& kids = node.children;
  switch (node.kind) {
    case Kind::Literal: return {XSeries(order_, MPoly(Rational(node.literal))), {}};
    case Kind::Var:
      if (node.var == 'x') return {XSeries::x(order_), {}};
      return {XSeries(order_, MPoly::var(coefficient_var(node.var))), {}};
    case Kind::Neg: {
      Value inner = value_of(*kids[0]);
      inner.num = -inner.num;
      return inner;
    }
    case Kind::Sum:
    case Kind::Difference: {
      Value acc = value_of(*kids[0]);
      for (std::size_t k = 1; k < kids.size(); ++k) {
        Value next = value_of(*kids[k]);
        if (node.kind == Kind::Difference) next.num = -next.num;
        // Bring both over the least common multiple of the factor lists,
        // matching factors up to sign.
        std::vector<XSeries> acc_extra = acc.den;
        std::vector<XSeries> next_extra;
        for (auto& f : next.den) {
          auto it = std::find(acc_extra.begin(), acc_extra.end(), f);
          if (it == acc_extra.end()) {
            it = std::find(acc_extra.begin(), acc_extra.end(), -f);
            if (it != acc_extra.end()) next.num = -next.num;
          }
          if (it != acc_extra.end()) {
            acc_extra.erase(it);
          } else {
            next_extra.push_back(f);
          }
        }
        acc.num = acc.num * product_of(next_extra, order_) + next.num * product_of(acc_extra, order_);
        for (auto& f : next_extra) acc.den.push_back(std::move(f));
      }
      return acc;
    }
    case Kind::Product: {
      Value acc = value_of(*kids[0]);
      for (std::size_t k = 1; k < kids.size(); ++k) {
        Value next = value_of(*kids[k]);
        acc.num = acc.num * next.num;
        for (auto& f : next.den) acc.den.push_back(std::move(f));
      }
      return acc;
    }
    case Kind::Quotient: {
      Value top = value_of(*kids[0]);
      // Factors of a product denominator are kept apart so that sums can
      // share them.
      std::vector<const Node*> factors;
      if (kids[1]->kind == Kind::Product) {
        for (const auto& f : kids[1]->children) factors.push_back(f.get());
      } else {
        factors.push_back(kids[1].get());
      }
      for (const Node* factor : factors) {
        Value bottom = value_of(*factor);
        top.num = top.num * product_of(bottom.den, order_);
        const MPoly& lead = bottom.num[0];
        if (lead.is_zero()) {
          throw NonInvertibleConstantTerm("division by a series with zero constant term" + where(*factor));
        }
        if (lead.is_constant()) {
          top.num = series_div(top.num, bottom.num);
        } else {
          top.den.push_back(std::move(bottom.num));
        }
      }
      return top;
    }
    case Kind::Power: {
      Value base = value_of(*kids[0]);
      Value out{series_pow(base.num, node.exponent), {}};
      for (unsigned k = 0; k < node.exponent; ++k) {
        out.den.insert(out.den.end(), base.den.begin(), base.den.end());
      }
      return out;
    }
    case Kind::Sqrt: {
      XSeries arg = finalize(value_of(*kids[0]), *kids[0]);
      try {
        return {series_sqrt(arg), {}};
      } catch (const BadConstantTerm& e) {
        throw BadConstantTerm(std::string(e.what()) + where(node));
      }
    }
    case Kind::Ref: {
      const XSeries& base = eval_asset(node.ref);
      if (node.bindings.empty()) return {base, {}};
      return {apply_bindings(base, node.bindings), {}};
    }
  }
  throw InvalidArgument("unknown node kind");
}

XSeries Evaluator::apply_bindings(const XSeries& series, const std::vector<Binding>& bindings) {
  std::array<std::optional<MPoly>, 4> images;
  std::optional<MPoly> x_scale;
  for (const auto& binding : bindings) {
    const XSeries image = finalize(value_of(*binding.image), *binding.image);
    if (binding.var == 'x') {
      // The image must be m*x for a monomial m.
      for (std::size_t k = 0; k < image.order(); ++k) {
        if (k != 1 && !image[k].is_zero()) {
          throw NotAMonomial("x may only be rebound to a monomial times x, got " + render(*binding.image));
        }
      }
      x_scale = image.order() > 1 ? image[1] : MPoly(1);
    } else {
      for (std::size_t k = 1; k < image.order(); ++k) {
        if (!image[k].is_zero()) {
          throw InvalidArgument(std::string("image of ") + binding.var + " must not involve x: " +
                                render(*binding.image));
        }
      }
      images[static_cast<std::size_t>(coefficient_var(binding.var))] = image[0];
    }
  }
  // Coefficient variables first, then x -> m*x, so that a rebinding such as
  // [x=v*x, v=w] does not rename the v introduced by the scaling.
  XSeries out = series_subst(series, images);
  if (x_scale) out = series_scale_x(out, *x_scale);
  return out;
}

XSeries Evaluator::eval(const Node& expr) { return finalize(value_of(expr), expr); }

XSeries Evaluator::eval(std::string_view text) {
  const NodePtr tree = parse(text);
  return eval(*tree);
}

const XSeries& Evaluator::eval_asset(std::string_view name) {
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  const Asset& asset = library_.get(name);
  if (in_progress_.contains(name)) throw InvalidArgument("asset @" + asset.name + " refers to itself");
  in_progress_.insert(asset.name);
  const std::string outer = current_;
  current_ = asset.name;
  XSeries result;
  try {
    result = eval(*asset.tree);
  } catch (...) {
    in_progress_.erase(asset.name);
    current_ = outer;
    throw;
  }
  in_progress_.erase(asset.name);
  current_ = outer;
  return cache_.emplace(asset.name, std::move(result)).first->second;
}

MPoly Evaluator::coeff_distribution(std::string_view name, std::size_t n) {
  if (n >= order_) {
    throw OrderTooSmall("coefficient of x^" + std::to_string(n) + " needs order at least " +
                        std::to_string(n + 1) + ", evaluator has " + std::to_string(order_));
  }
  const MPoly& coeff = eval_asset(name)[n];
  if (!coeff.is_integral()) {
    throw NonIntegralCoefficient("@" + std::string(name) + ": coefficient of x^" + std::to_string(n) +
                                 " is not integral: " + coeff.to_string());
  }
  return coeff;
}

XSeries eval_series(std::string_view text, std::size_t order) {
  static const Library kEmpty;
  Evaluator evaluator(kEmpty, order);
  return evaluator.eval(text);
}

}  // namespace schrodist::gf
