#include "schrodist/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schrodist/errors.hpp"

namespace schrodist {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(sorted.size()));
    }
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> letters;
  const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
  if (spaced) {
    std::string buffer(text);
    std::replace(buffer.begin(), buffer.end(), ',', ' ');
    std::istringstream in(buffer);
    int letter = 0;
    while (in >> letter) letters.push_back(letter);
    if (!in.eof()) throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
      }
      letters.push_back(c - '0');
    }
  }
  return Permutation(std::move(letters));
}

Permutation Permutation::reversed() const {
  Permutation out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int letter : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

std::string Permutation::compact() const {
  std::string out;
  for (int letter : letters_) out += std::to_string(letter);
  return out;
}

PatternPair PatternPair::parse(std::string_view id) {
  const auto comma = id.find(',');
  if (comma == std::string_view::npos) {
    throw InvalidArgument("pattern pair '" + std::string(id) + "' must look like 1324,1423");
  }
  return {Permutation::parse(id.substr(0, comma)), Permutation::parse(id.substr(comma + 1))};
}

std::string PatternPair::id() const { return first.compact() + "," + second.compact(); }

const std::vector<PatternPair>& schroeder_pairs() {
  static const std::vector<PatternPair> pairs = [] {
    std::vector<PatternPair> out;
    for (const char* id : {"1243,1324", "1243,1342", "1243,1423", "1324,1342", "1324,1423",
                           "1342,1423"}) {
      out.push_back(PatternPair::parse(id));
    }
    return out;
  }();
  return pairs;
}

namespace {

// Occurrence of pattern whose last letter is perm[len - 1], within perm[0, len).
bool occurs_ending_at(std::span<const int> perm, std::size_t len, std::span<const int> pattern) {
  const std::size_t k = pattern.size();
  if (k == 0) return true;
  if (k > len) return false;
  // The last pattern slot is pinned to perm[len - 1]; the rest are searched.
  std::vector<int> chosen(k, 0);
  chosen[k - 1] = perm[len - 1];
  struct Search {
    std::span<const int> perm, pattern;
    std::size_t limit;
    std::vector<int>& chosen;
    bool run(std::size_t pos, std::size_t start) {
      if (pos + 1 == chosen.size()) return true;
      for (std::size_t idx = start; idx < limit; ++idx) {
        const int value = perm[idx];
        bool consistent = true;
        for (std::size_t t = 0; t < pos && consistent; ++t) {
          consistent = (pattern[t] < pattern[pos]) == (chosen[t] < value);
        }
        if (consistent) {
          consistent = (pattern[pos] < pattern.back()) == (value < chosen.back());
        }
        if (!consistent) continue;
        chosen[pos] = value;
        if (run(pos + 1, idx + 1)) return true;
      }
      return false;
    }
  };
  Search search{perm, pattern, len - 1, chosen};
  return search.run(0, 0);
}

}  // namespace

bool contains_pattern(std::span<const int> perm, std::span<const int> pattern) {
  if (pattern.size() > perm.size()) return false;
  if (pattern.empty()) return true;
  std::vector<int> chosen(pattern.size(), 0);
  // Values are never 0 so 0 marks "not yet chosen".
  struct Search {
    std::span<const int> perm, pattern;
    std::vector<int>& chosen;
    bool run(std::size_t pos, std::size_t start) {
      if (pos == pattern.size()) return true;
      const std::size_t remaining = pattern.size() - pos;
      for (std::size_t idx = start; idx + remaining <= perm.size(); ++idx) {
        const int value = perm[idx];
        bool consistent = true;
        for (std::size_t t = 0; t < pos && consistent; ++t) {
          consistent = (pattern[t] < pattern[pos]) == (chosen[t] < value);
        }
        if (!consistent) continue;
        chosen[pos] = value;
        if (run(pos + 1, idx + 1)) return true;
      }
      return false;
    }
  };
  Search search{perm, pattern, chosen};
  return search.run(0, 0);
}

bool contains_pattern(const Permutation& perm, const Permutation& pattern) {
  return contains_pattern(perm.letters(), pattern.letters());
}

bool avoids_all(const Permutation& perm, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& pat) { return contains_pattern(perm, pat); });
}

PermStats stats(const Permutation& perm) {
  PermStats s;
  const int n = perm.size();
  if (n == 0) return s;
  s.first = perm[0];
  s.last = perm[n - 1];
  for (int i = 0; i + 1 < n; ++i) {
    if (perm[i] > perm[i + 1]) ++s.desc;
  }
  s.asc = n - 1 - s.desc;
  return s;
}

void for_each_avoider(int n, std::span<const Permutation> patterns,
                      const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void()> extend = [&] {
    if (static_cast<int>(prefix.size()) == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int letter = 1; letter <= n; ++letter) {
      if (used[static_cast<std::size_t>(letter)]) continue;
      prefix.push_back(letter);
      const bool blocked = std::any_of(patterns.begin(), patterns.end(), [&](const Permutation& pat) {
        return occurs_ending_at(prefix, prefix.size(), pat.letters());
      });
      if (!blocked) {
        used[static_cast<std::size_t>(letter)] = true;
        extend();
        used[static_cast<std::size_t>(letter)] = false;
      }
      prefix.pop_back();
    }
  };
  extend();
}

std::vector<Permutation> enumerate_avoiders(int n, std::span<const Permutation> patterns) {
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& perm) { out.push_back(perm); });
  return out;
}

MPoly first_desc_distribution(int n, const PatternPair& pair) {
  const auto patterns = pair.patterns();
  std::vector<MPoly::Term> terms;
  for_each_avoider(n, patterns, [&](const Permutation& perm) {
    const PermStats s = stats(perm);
    terms.emplace_back(Monomial::from_exponents(static_cast<unsigned>(s.desc),
                                                static_cast<unsigned>(s.first), 0, 0),
                       1);
  });
  return MPoly::from_terms(std::move(terms));
}

MPoly asc_last_distribution(int n, const PatternPair& pair) {
  const auto patterns = pair.patterns();
  std::vector<MPoly::Term> terms;
  for_each_avoider(n, patterns, [&](const Permutation& perm) {
    const PermStats s = stats(perm);
    terms.emplace_back(Monomial::from_exponents(static_cast<unsigned>(s.asc),
                                                static_cast<unsigned>(s.last), 0, 0),
                       1);
  });
  return MPoly::from_terms(std::move(terms));
}

Permutation insert_minimum(const Permutation& perm, int gap) {
  const int n = perm.size();
  if (gap < 0 || gap > n) throw InvalidArgument("gap out of range");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    if (i == gap) letters.push_back(1);
    letters.push_back(perm[i] + 1);
  }
  if (gap == n) letters.push_back(1);
  return Permutation(std::move(letters));
}

namespace {

const std::vector<Permutation>& class_1324_1423() {
  static const std::vector<Permutation> patterns = PatternPair::parse("1324,1423").patterns();
  return patterns;
}

}  // namespace

std::vector<int> active_gaps(const Permutation& perm) {
  const auto& patterns = class_1324_1423();
  if (!avoids_all(perm, patterns)) {
    throw InputNotInClass(perm.to_string() + " contains 1324 or 1423");
  }
  std::vector<int> gaps;
  for (int gap = 0; gap <= perm.size(); ++gap) {
    if (avoids_all(insert_minimum(perm, gap), patterns)) gaps.push_back(gap);
  }
  return gaps;
}

ActiveSites act_dact(const Permutation& perm) {
  const auto gaps = active_gaps(perm);
  ActiveSites out;
  out.act = static_cast<int>(gaps.size());
  // Gap g sits between letters g and g+1 (1-based). The leftmost active gap
  // follows the letter x that starts the rightmost 213/312, and x always
  // exceeds the letter after it; that gap is not counted, so dact is the
  // length of the decreasing tail. 23145 has act 4 and dact 0 this way.
  for (std::size_t k = 1; k < gaps.size(); ++k) {
    const int gap = gaps[k];
    if (gap >= 1 && gap <= perm.size() - 1 && perm[gap - 1] > perm[gap]) ++out.dact;
  }
  return out;
}

}  // namespace schrodist
