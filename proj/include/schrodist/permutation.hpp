#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schrodist/mpoly.hpp"

namespace schrodist {

/// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless letters is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> letters);
  /// Accepts "6 2 1 5 4 3" or, for n < 10, the compact form "621543".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  int operator[](int index) const { return letters_[static_cast<std::size_t>(index)]; }
  std::span<const int> letters() const { return letters_; }
  Permutation reversed() const;

  /// "6 2 1 5 4 3".
  std::string to_string() const;
  /// "621543"; only meaningful for n < 10.
  std::string compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> letters_;
};

/// A pair of patterns named by its identifier string, e.g. "1324,1423".
struct PatternPair {
  Permutation first;
  Permutation second;

  static PatternPair parse(std::string_view id);
  std::string id() const;
  PatternPair reversed() const { return {first.reversed(), second.reversed()}; }
  std::vector<Permutation> patterns() const { return {first, second}; }
  friend bool operator==(const PatternPair&, const PatternPair&) = default;
};

/// The six pairs for which the first-letter/descent distribution matches the
/// inversion-sequence distribution, in the canonical listing order.
const std::vector<PatternPair>& schroeder_pairs();

/// True iff some subsequence of perm is order-isomorphic to pattern.
bool contains_pattern(std::span<const int> perm, std::span<const int> pattern);
bool contains_pattern(const Permutation& perm, const Permutation& pattern);
bool avoids_all(const Permutation& perm, std::span<const Permutation> patterns);

struct PermStats {
  int first = 0;
  int last = 0;
  int desc = 0;
  int asc = 0;
  friend bool operator==(const PermStats&, const PermStats&) = default;
};

PermStats stats(const Permutation& perm);

/// Visits every member of S_n avoiding all patterns, in lexicographic order.
/// Prefixes are extended one letter at a time and pruned as soon as an
/// occurrence of a pattern ends at the newest letter.
void for_each_avoider(int n, std::span<const Permutation> patterns,
                      const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_avoiders(int n, std::span<const Permutation> patterns);

/// Sum over S_n(pair) of q^desc v^first.
MPoly first_desc_distribution(int n, const PatternPair& pair);
/// Sum over S_n(pair) of q^asc v^last.
MPoly asc_last_distribution(int n, const PatternPair& pair);

struct ActiveSites {
  int act = 0;
  int dact = 0;
  friend bool operator==(const ActiveSites&, const ActiveSites&) = default;
};

/// Inserts a new minimum at gap `gap` (0..n) after shifting every letter up.
Permutation insert_minimum(const Permutation& perm, int gap);

/// Active sites and active descents of a member of S_n(1324,1423). Sites come
/// from literally inserting a new minimum into every gap; active descents are
/// the descent gaps among them other than the leftmost one. Throws
/// InputNotInClass.
ActiveSites act_dact(const Permutation& perm);
/// Gap indices (0..n) that are active, ascending.
std::vector<int> active_gaps(const Permutation& perm);

}  // namespace schrodist
