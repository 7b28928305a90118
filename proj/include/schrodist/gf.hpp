#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "schrodist/mpoly.hpp"
#include "schrodist/xseries.hpp"

// Generating-function expressions: a parser for the formula language, the
// formula assets, and a truncated-series evaluator.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | x | q | v | w | p | '(' expr ')' | 'sqrt' '(' expr ')'
//          | '@' name ('[' var '=' expr (',' var '=' expr)* ']')?
//
// '@name' refers to another asset; the bracket rebinds its variables, e.g.
// @t[x=v*x] is t(vx). Bindings apply simultaneously.

namespace schrodist::gf {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class Kind { Literal, Var, Neg, Sum, Difference, Product, Quotient, Power, Sqrt, Ref };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Binding {
  char var = 0;
  NodePtr image;
};

struct Node {
  Kind kind = Kind::Literal;
  Span span;
  BigInt literal;
  char var = 0;
  unsigned exponent = 0;
  std::string ref;
  std::vector<Binding> bindings;
  /// Sum and Product are n-ary; Difference and Quotient have two children.
  std::vector<NodePtr> children;
};

/// Throws SyntaxError (with offset) or UnknownVariable.
NodePtr parse(std::string_view text);

/// Text that parses back to a structurally identical tree.
std::string render(const Node& node);

/// Equality of trees ignoring spans.
bool same_tree(const Node& a, const Node& b);

/// Variables appearing in the tree, not looking through references.
std::set<char> variables(const Node& node);
/// Names referenced with '@'.
std::set<std::string> references(const Node& node);

// ---------------------------------------------------------------------------

struct Asset {
  std::string name;
  std::string file;
  std::string anchor;
  std::string variables;
  std::string source;
  NodePtr tree;
};

/// A set of assets read from a directory with a manifest. Manifest lines are
/// "name | file | anchor | variables"; '#' starts a comment line. In an asset
/// file, '#' lines are comments and the rest is the formula.
class Library {
 public:
  Library() = default;
  static Library load(const std::filesystem::path& dir);
  /// Directory compiled in at build time, overridable with SCHRODIST_ASSETS.
  static std::filesystem::path default_dir();

  void add(Asset asset);
  bool contains(std::string_view name) const;
  /// Throws UnknownAsset.
  const Asset& get(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Asset, std::less<>> assets_;
};

/// Evaluates expressions and assets modulo x^order. Asset expansions are
/// cached, so one evaluator should serve every query at a given order.
class Evaluator {
 public:
  Evaluator(const Library& library, std::size_t order);

  std::size_t order() const { return order_; }
  XSeries eval(const Node& expr);
  XSeries eval(std::string_view text);
  const XSeries& eval_asset(std::string_view name);

  /// Coefficient of x^n of an asset, integrality-checked. Throws
  /// OrderTooSmall when n >= order and NonIntegralCoefficient.
  MPoly coeff_distribution(std::string_view name, std::size_t n);

 private:
  struct Value;
  Value value_of(const Node& node);
  XSeries finalize(Value value, const Node& node);
  XSeries apply_bindings(const XSeries& series, const std::vector<Binding>& bindings);
  /// " in '<text>' [begin,end) of @asset" for error messages.
  std::string where(const Node& node) const;

  const Library& library_;
  std::size_t order_;
  std::map<std::string, XSeries, std::less<>> cache_;
  std::set<std::string, std::less<>> in_progress_;
  std::string current_;
};

/// Evaluates a self-contained expression (no '@' references).
XSeries eval_series(std::string_view text, std::size_t order);

}  // namespace schrodist::gf
