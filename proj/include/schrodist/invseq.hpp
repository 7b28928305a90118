#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schrodist/mpoly.hpp"
#include "schrodist/permutation.hpp"
#include "schrodist/tables.hpp"

namespace schrodist {

/// Inversion sequence in the positive convention: 1 <= e_i <= i.
class InvSeq {
 public:
  InvSeq() = default;
  /// Throws InvalidArgument when some entry leaves [1, i].
  explicit InvSeq(std::vector<int> entries);
  /// "1 2 1 2 3 6" or, when every entry is a single digit, "121236".
  static InvSeq parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int index) const { return entries_[static_cast<std::size_t>(index)]; }
  std::span<const int> entries() const { return entries_; }
  std::string to_string() const;

  friend bool operator==(const InvSeq&, const InvSeq&) = default;
  friend auto operator<=>(const InvSeq&, const InvSeq&) = default;

 private:
  std::vector<int> entries_;
};

/// e_i = 1 + #{letters right of the letter i that are smaller than i}.
InvSeq from_permutation(const Permutation& perm);

/// Membership in I_n(>=,-,>): no i<j<k with e_i >= e_j and e_i > e_k.
/// Uses the running maximum of e_1..e_{j-1} among entries weakly above e_j.
bool avoids(std::span<const int> e);
bool avoids(const InvSeq& e);
/// The plain cubic triple scan, kept as a cross-check for avoids().
bool avoids_naive(std::span<const int> e);

struct SeqStats {
  int last = 0;
  int dist = 0;
  /// Largest e_i with e_i >= e_{i+1}; 0 when e is strictly increasing.
  int hght = 0;
  friend bool operator==(const SeqStats&, const SeqStats&) = default;
};

SeqStats seq_stats(const InvSeq& e);

/// Visits every member of I_n(>=,-,>) in lexicographic order.
void for_each_member(int n, const std::function<void(const InvSeq&)>& visit);
std::vector<InvSeq> enumerate_members(int n);

/// Sum over I_n(>=,-,>) of q^(dist-1) v^last.
MPoly last_dist_distribution(int n);

using UTable = PolyTable;

/// Brute-force u_n(i, j) = sum over U_n(i, j) of q^(dist-1). The strictly
/// increasing sequence has no height and is left out.
UTable u_oracle(int n);

}  // namespace schrodist
