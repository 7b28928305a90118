#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schrodist/mpoly.hpp"

namespace schrodist::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { text, json, tsv };
enum class Mode { brute, dp, series, all };

struct RunConfig {
  std::string command;
  /// Table kind for `table`; asset name or expression for `expand`.
  std::string subject;
  int n_min = 1;
  int n_max = 8;
  std::size_t order = 16;
  /// Pair ids such as "1243,1324"; empty means the six pairs.
  std::vector<std::string> pairs;
  std::string case_id;
  Mode mode = Mode::all;
  Format format = Format::text;
  std::vector<std::pair<Var, Rational>> at;
  unsigned jobs = 1;
  int brute_ceiling = 9;
  bool screen_all_pairs = false;
  /// Also group screened pairs that agree with each other.
  bool coincidences = false;
  /// Use the printed (1243,1423) A+ transcription instead of the corrected one.
  bool as_printed = false;
  std::filesystem::path assets;
};

struct Check {
  int n = 0;
  std::string pair;
  std::string pipeline;
  /// EQUAL, UNEQUAL, SKIPPED, ERROR; screening uses MATCH and DIFFER.
  std::string verdict;
  std::string detail;
};

struct Row {
  int n = 0;
  std::vector<int> index;
  std::string value;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<Row> rows;

  /// False when some check is UNEQUAL or ERROR.
  bool ok() const;
};

/// SCHRODIST_ORDER when set, else 16.
std::size_t default_order();

/// "A..B" or "A".
std::pair<int, int> parse_range(std::string_view text);
/// "q=1", "v=-3/2".
std::pair<Var, Rational> parse_assignment(std::string_view text);
/// Splits "1243,1324,1342,1423" into pair ids two patterns at a time; "all"
/// gives the six pairs. Underscores are accepted in place of commas.
std::vector<std::string> parse_pairs(std::string_view text);

/// Throws InvalidArgument.
void validate(const RunConfig& config);

Report cmd_verify(const RunConfig& config);
Report cmd_table(const RunConfig& config);
Report cmd_expand(const RunConfig& config);
Report cmd_crosscheck(const RunConfig& config);
/// Validates, then dispatches on config.command.
Report run(const RunConfig& config);

std::string render(const Report& report, Format format);

}  // namespace schrodist::cli
