#include <cctype>

#include "schrodist/errors.hpp"
#include "schrodist/gf.hpp"

namespace schrodist::gf {

namespace {

bool is_var_letter(char c) { return c == 'x' || c == 'q' || c == 'v' || c == 'w' || c == 'p'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    auto node = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static std::shared_ptr<Node> make(Kind kind, std::size_t begin) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->span.begin = begin;
    return node;
  }

  NodePtr finish(std::shared_ptr<Node> node) const {
    node->span.end = pos_;
    return node;
  }

  // An n-ary Sum or Product built by the current loop (as opposed to one
  // that came out of parentheses) absorbs further operands.
  NodePtr expr() {
    const std::size_t begin = (skip_space(), pos_);
    NodePtr left = term();
    std::shared_ptr<Node> open_sum;
    while (true) {
      const char op = peek();
      if (op != '+' && op != '-') return left;
      ++pos_;
      NodePtr right = term();
      if (op == '+') {
        if (!open_sum) {
          open_sum = make(Kind::Sum, begin);
          open_sum->children.push_back(left);
        }
        open_sum->children.push_back(right);
        open_sum->span.end = pos_;
        left = open_sum;
      } else {
        auto diff = make(Kind::Difference, begin);
        diff->children = {left, right};
        left = finish(diff);
        open_sum.reset();
      }
    }
  }

  NodePtr term() {
    const std::size_t begin = (skip_space(), pos_);
    NodePtr left = unary();
    std::shared_ptr<Node> open_product;
    while (true) {
      const char op = peek();
      if (op != '*' && op != '/') return left;
      ++pos_;
      NodePtr right = unary();
      if (op == '*') {
        if (!open_product) {
          open_product = make(Kind::Product, begin);
          open_product->children.push_back(left);
        }
        open_product->children.push_back(right);
        open_product->span.end = pos_;
        left = open_product;
      } else {
        auto quot = make(Kind::Quotient, begin);
        quot->children = {left, right};
        left = finish(quot);
        open_product.reset();
      }
    }
  }

  NodePtr unary() {
    if (peek() == '-') {
      auto node = make(Kind::Neg, pos_);
      ++pos_;
      node->children.push_back(unary());
      return finish(node);
    }
    return power();
  }

  NodePtr power() {
    const std::size_t begin = (skip_space(), pos_);
    NodePtr base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (digits == pos_) fail("expected a non-negative integer exponent");
    auto node = make(Kind::Power, begin);
    node->exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(digits, pos_ - digits))));
    node->children.push_back(base);
    return finish(node);
  }

  NodePtr atom() {
    const char c = peek();
    const std::size_t begin = pos_;
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      auto node = make(Kind::Literal, begin);
      node->literal = BigInt(std::string(text_.substr(begin, pos_ - begin)));
      return finish(node);
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '@') return reference();
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      if (text_.substr(pos_, 4) == "sqrt" && (pos_ + 4 >= text_.size() || !is_name_char(text_[pos_ + 4]))) {
        pos_ += 4;
        expect('(');
        auto node = make(Kind::Sqrt, begin);
        node->children.push_back(expr());
        expect(')');
        return finish(node);
      }
      if (!is_var_letter(c)) {
        throw UnknownVariable("unknown variable '" + std::string(1, c) + "' at offset " + std::to_string(pos_));
      }
      ++pos_;
      auto node = make(Kind::Var, begin);
      node->var = c;
      return finish(node);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr reference() {
    const std::size_t begin = pos_;
    ++pos_;
    const std::size_t name_begin = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (name_begin == pos_) fail("expected an asset name after '@'");
    auto node = make(Kind::Ref, begin);
    node->ref = std::string(text_.substr(name_begin, pos_ - name_begin));
    if (peek() == '[') {
      ++pos_;
      while (true) {
        const char var = peek();
        if (!std::isalpha(static_cast<unsigned char>(var))) fail("expected a variable to rebind");
        if (!is_var_letter(var)) {
          throw UnknownVariable("unknown variable '" + std::string(1, var) + "' at offset " + std::to_string(pos_));
        }
        ++pos_;
        expect('=');
        node->bindings.push_back({var, expr()});
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    return finish(node);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Node& node) {
  switch (node.kind) {
    case Kind::Sum:
    case Kind::Difference: return 1;
    case Kind::Product:
    case Kind::Quotient: return 2;
    case Kind::Neg: return 3;
    case Kind::Power: return 4;
    default: return 5;
  }
}

std::string wrap(const Node& node, bool parens) {
  return parens ? "(" + render(node) + ")" : render(node);
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Node& node) {
  const auto& kids = node.children;
  switch (node.kind) {
    case Kind::Literal: return node.literal.get_str();
    case Kind::Var: return std::string(1, node.var);
    case Kind::Neg: return "-" + wrap(*kids[0], precedence(*kids[0]) < 3);
    case Kind::Sum: {
      std::string out = wrap(*kids[0], kids[0]->kind == Kind::Sum);
      for (std::size_t k = 1; k < kids.size(); ++k) out += " + " + wrap(*kids[k], precedence(*kids[k]) < 2);
      return out;
    }
    case Kind::Difference:
      return render(*kids[0]) + " - " + wrap(*kids[1], precedence(*kids[1]) < 2);
    case Kind::Product: {
      std::string out = wrap(*kids[0], kids[0]->kind != Kind::Quotient && precedence(*kids[0]) < 3);
      for (std::size_t k = 1; k < kids.size(); ++k) out += "*" + wrap(*kids[k], precedence(*kids[k]) < 3);
      return out;
    }
    case Kind::Quotient:
      return wrap(*kids[0], precedence(*kids[0]) < 2) + "/" + wrap(*kids[1], precedence(*kids[1]) < 3);
    case Kind::Power:
      return wrap(*kids[0], precedence(*kids[0]) < 5) + "^" + std::to_string(node.exponent);
    case Kind::Sqrt: return "sqrt(" + render(*kids[0]) + ")";
    case Kind::Ref: {
      std::string out = "@" + node.ref;
      if (node.bindings.empty()) return out;
      out += "[";
      for (std::size_t k = 0; k < node.bindings.size(); ++k) {
        if (k > 0) out += ", ";
        out += std::string(1, node.bindings[k].var) + "=" + render(*node.bindings[k].image);
      }
      return out + "]";
    }
  }
  return "";
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.literal != b.literal || a.var != b.var || a.exponent != b.exponent ||
      a.ref != b.ref || a.children.size() != b.children.size() || a.bindings.size() != b.bindings.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!same_tree(*a.children[k], *b.children[k])) return false;
  }
  for (std::size_t k = 0; k < a.bindings.size(); ++k) {
    if (a.bindings[k].var != b.bindings[k].var || !same_tree(*a.bindings[k].image, *b.bindings[k].image)) {
      return false;
    }
  }
  return true;
}

std::set<char> variables(const Node& node) {
  std::set<char> out;
  if (node.kind == Kind::Var) out.insert(node.var);
  for (const auto& child : node.children) out.merge(variables(*child));
  for (const auto& binding : node.bindings) out.merge(variables(*binding.image));
  return out;
}

std::set<std::string> references(const Node& node) {
  std::set<std::string> out;
  if (node.kind == Kind::Ref) out.insert(node.ref);
  for (const auto& child : node.children) out.merge(references(*child));
  for (const auto& binding : node.bindings) out.merge(references(*binding.image));
  return out;
}

}  // namespace schrodist::gf
