#include "schrodist/invseq.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "schrodist/errors.hpp"

namespace schrodist {

InvSeq::InvSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > static_cast<int>(i) + 1) {
      throw InvalidArgument("entry " + std::to_string(i + 1) + " of inversion sequence out of range");
    }
  }
}

InvSeq InvSeq::parse(std::string_view text) {
  std::vector<int> entries;
  if (text.find_first_of(" \t,") != std::string_view::npos) {
    std::string buffer(text);
    std::replace(buffer.begin(), buffer.end(), ',', ' ');
    std::istringstream in(buffer);
    int value = 0;
    while (in >> value) entries.push_back(value);
    if (!in.eof()) throw InvalidArgument("malformed inversion sequence '" + std::string(text) + "'");
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument("malformed inversion sequence '" + std::string(text) + "'");
      }
      entries.push_back(c - '0');
    }
  }
  return InvSeq(std::move(entries));
}

std::string InvSeq::to_string() const {
  std::string out;
  for (int e : entries_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

InvSeq from_permutation(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (int idx = 0; idx < n; ++idx) position[static_cast<std::size_t>(perm[idx])] = idx;
  std::vector<int> entries(static_cast<std::size_t>(n), 1);
  for (int letter = 1; letter <= n; ++letter) {
    for (int idx = position[static_cast<std::size_t>(letter)] + 1; idx < n; ++idx) {
      if (perm[idx] < letter) ++entries[static_cast<std::size_t>(letter - 1)];
    }
  }
  return InvSeq(std::move(entries));
}

bool avoids(std::span<const int> e) {
  // For a fixed middle index j the strongest witness is the largest e_i
  // (i < j) with e_i >= e_j; any later e_k below it is a violation.
  const std::size_t n = e.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    int best = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (e[i] >= e[j]) best = std::max(best, e[i]);
    }
    if (best == 0) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (best > e[k]) return false;
    }
  }
  return true;
}

bool avoids(const InvSeq& e) { return avoids(e.entries()); }

bool avoids_naive(std::span<const int> e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (e[i] >= e[j] && e[i] > e[k]) return false;
      }
    }
  }
  return true;
}

SeqStats seq_stats(const InvSeq& e) {
  SeqStats s;
  const int n = e.size();
  if (n == 0) return s;
  s.last = e[n - 1];
  s.dist = static_cast<int>(std::set<int>(e.entries().begin(), e.entries().end()).size());
  for (int i = 0; i + 1 < n; ++i) {
    if (e[i] >= e[i + 1]) s.hght = std::max(s.hght, e[i]);
  }
  return s;
}

void for_each_member(int n, const std::function<void(const InvSeq&)>& visit) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  // Membership is hereditary for prefixes; a new last entry can only
  // complete a triple as its k.
  std::function<void()> extend = [&] {
    const std::size_t len = prefix.size();
    if (static_cast<int>(len) == n) {
      visit(InvSeq(prefix));
      return;
    }
    // Smallest value the next entry may take: above every e_i that has a
    // later e_j <= e_i.
    int floor = 1;
    for (std::size_t j = 1; j < len; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (prefix[i] >= prefix[j]) floor = std::max(floor, prefix[i]);
      }
    }
    for (int value = floor; value <= static_cast<int>(len) + 1; ++value) {
      prefix.push_back(value);
      extend();
      prefix.pop_back();
    }
  };
  extend();
}

std::vector<InvSeq> enumerate_members(int n) {
  std::vector<InvSeq> out;
  for_each_member(n, [&](const InvSeq& e) { out.push_back(e); });
  return out;
}

MPoly last_dist_distribution(int n) {
  std::vector<MPoly::Term> terms;
  for_each_member(n, [&](const InvSeq& e) {
    const SeqStats s = seq_stats(e);
    terms.emplace_back(Monomial::from_exponents(static_cast<unsigned>(s.dist - 1),
                                                static_cast<unsigned>(s.last), 0, 0),
                       1);
  });
  return MPoly::from_terms(std::move(terms));
}

UTable u_oracle(int n) {
  UTable table(n);
  std::map<std::pair<int, int>, std::vector<MPoly::Term>> buckets;
  for_each_member(n, [&](const InvSeq& e) {
    const SeqStats s = seq_stats(e);
    if (s.hght == 0) return;
    buckets[{s.last, s.hght}].emplace_back(
        Monomial::from_exponents(static_cast<unsigned>(s.dist - 1), 0, 0, 0), 1);
  });
  for (auto& [key, terms] : buckets) table.set(key.first, key.second, MPoly::from_terms(std::move(terms)));
  return table;
}

}  // namespace schrodist
