#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "schrodist/errors.hpp"
#include "schrodist/invseq.hpp"
#include "schrodist/permutation.hpp"

using namespace schrodist;

namespace {

MPoly q() { return MPoly::var(Var::q); }
MPoly v() { return MPoly::var(Var::v); }

// Pattern containment by trying every index subset.
bool contains_by_subsets(const std::vector<int>& perm, const std::vector<int>& pattern) {
  const std::size_t n = perm.size(), k = pattern.size();
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) sub.push_back(perm[i]);
    }
    bool same = true;
    for (std::size_t a = 0; a < k && same; ++a) {
      for (std::size_t b = 0; b < k && same; ++b) same = (sub[a] < sub[b]) == (pattern[a] < pattern[b]);
    }
    if (same) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation parsing and printing") {
  const auto p = Permutation::parse("621543");
  CHECK(p.to_string() == "6 2 1 5 4 3");
  CHECK(Permutation::parse("6 2 1 5 4 3") == p);
  CHECK(p.reversed().compact() == "345126");
  CHECK_THROWS_AS(Permutation::parse("1224"), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
  CHECK(PatternPair::parse("1324,1423").id() == "1324,1423");
  CHECK_THROWS_AS(PatternPair::parse("1324"), InvalidArgument);
}

TEST_CASE("containment agrees with the subset scan") {
  const auto patterns = all_perms(4);
  for (int n = 4; n <= 6; ++n) {
    for (const auto& perm : all_perms(n)) {
      for (const auto& pattern : {patterns[1], patterns[5], patterns[10], patterns[23]}) {
        CHECK(contains_pattern(perm, pattern) == contains_by_subsets(perm, pattern));
      }
    }
  }
}

TEST_CASE("statistics of a permutation") {
  CHECK(stats(Permutation::parse("621543")) == PermStats{6, 3, 4, 1});
  CHECK(stats(Permutation::parse("1")) == PermStats{1, 1, 0, 0});
}

TEST_CASE("first/desc at small n") {
  for (const auto& pair : schroeder_pairs()) {
    CHECK(first_desc_distribution(1, pair) == v());
    CHECK(first_desc_distribution(2, pair) == v() + q() * v().pow(2));
  }
}

TEST_CASE("class sizes are the large Schroeder numbers") {
  const std::vector<std::size_t> sizes{1, 2, 6, 22, 90, 394, 1806};
  for (const auto& pair : schroeder_pairs()) {
    const auto patterns = pair.patterns();
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_avoiders(n, patterns).size() == sizes[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("asc/last on the reversed pair mirrors first/desc") {
  for (const auto& pair : schroeder_pairs()) {
    for (int n = 1; n <= 6; ++n) CHECK(asc_last_distribution(n, pair.reversed()) == first_desc_distribution(n, pair));
  }
}

TEST_CASE("active sites in S_n(1324,1423)") {
  CHECK(act_dact(Permutation::parse("23145")) == ActiveSites{4, 0});
  CHECK(act_dact(Permutation::parse("54321")) == ActiveSites{6, 4});
  CHECK(act_dact(Permutation::parse("12")) == ActiveSites{3, 0});
  CHECK_THROWS_AS(act_dact(Permutation::parse("1324")), InputNotInClass);
  CHECK(insert_minimum(Permutation::parse("21"), 1) == Permutation::parse("312"));

  std::set<std::string> r540;
  const auto patterns = PatternPair::parse("1324,1423").patterns();
  for (const auto& p : enumerate_avoiders(5, patterns)) {
    if (act_dact(p) == ActiveSites{4, 0}) r540.insert(p.compact());
  }
  CHECK(r540 == std::set<std::string>{"23145", "32145", "34125", "35124", "42135", "43125", "45123", "52134",
                                      "53124", "54123"});
}

TEST_CASE("inversion sequences") {
  const auto e = from_permutation(Permutation::parse("621543"));
  CHECK(e.to_string() == "1 2 1 2 3 6");
  CHECK(InvSeq::parse("121236") == e);
  CHECK_THROWS_AS(InvSeq({1, 3}), InvalidArgument);
  CHECK(seq_stats(InvSeq::parse("1213")) == SeqStats{3, 3, 2});
  CHECK(seq_stats(InvSeq::parse("123")).hght == 0);
  CHECK(avoids(InvSeq::parse("1123")));
  CHECK_FALSE(avoids(InvSeq::parse("1221")));
}

TEST_CASE("fast membership agrees with the triple scan") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> e(static_cast<std::size_t>(n), 1);
    while (true) {
      CHECK(avoids(e) == avoids_naive(e));
      int k = n - 1;
      while (k >= 0 && e[static_cast<std::size_t>(k)] == k + 1) e[static_cast<std::size_t>(k--)] = 1;
      if (k < 0) break;
      ++e[static_cast<std::size_t>(k)];
    }
  }
}

TEST_CASE("last/dist at small n") {
  CHECK(last_dist_distribution(1) == v());
  CHECK(last_dist_distribution(3) == v() * (1 + q()) + 2 * q() * v().pow(2) + (q() + q().pow(2)) * v().pow(3));
  const std::vector<std::size_t> sizes{1, 2, 6, 22, 90, 394, 1806};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_members(n).size() == sizes[static_cast<std::size_t>(n - 1)]);
}
