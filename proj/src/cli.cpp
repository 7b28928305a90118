#include "schrodist/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "schrodist/errors.hpp"
#include "schrodist/gf.hpp"
#include "schrodist/invseq.hpp"
#include "schrodist/permutation.hpp"
#include "schrodist/recur.hpp"

namespace schrodist::cli {

namespace {

// Runs body(0..count-1) on up to `jobs` threads. Results go to slots indexed
// by task, so output order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return "";
  return std::string(s.substr(first, s.find_last_not_of(" \t") - first + 1));
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string s = trim(text);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw InvalidArgument("bad " + std::string(what) + ": '" + s + "'");
  return value;
}

// A distribution computed by one pipeline, or the reason it is absent.
struct Cell {
  std::optional<MPoly> value;
  std::string verdict;  // SKIPPED or ERROR when value is empty
  std::string note;
};

Cell skipped(std::string note) { return {std::nullopt, "SKIPPED", std::move(note)}; }
Cell failed(std::string note) { return {std::nullopt, "ERROR", std::move(note)}; }

std::string first_difference(const MPoly& got, const MPoly& expected) {
  const MPoly diff = got - expected;
  const Monomial mono = diff.terms().front().first;
  return "first difference at " + MPoly::monomial(mono).to_string() + ": expected " +
         to_string(expected.coeff(mono)) + ", got " + to_string(got.coeff(mono));
}

Check compare(int n, std::string pair, std::string pipeline, const Cell& got, const Cell& expected) {
  Check check{n, std::move(pair), std::move(pipeline), "", ""};
  for (const Cell* cell : {&got, &expected}) {
    if (!cell->value) {
      check.verdict = cell->verdict;
      check.detail = cell->note;
      return check;
    }
  }
  if (*got.value == *expected.value) {
    check.verdict = "EQUAL";
    check.detail = got.value->to_string();
  } else {
    check.verdict = "UNEQUAL";
    check.detail = first_difference(*got.value, *expected.value);
  }
  return check;
}

// ---------------------------------------------------------------------------
// What each pipeline computes for a target. "invseq" is the (last, dist)
// distribution over I_n(>=,-,>); the pairs give (first, desc).

constexpr std::string_view kInvSeq = "invseq";

std::string series_expression(const std::string& target, bool as_printed) {
  if (target == kInvSeq || target == "1324,1423") return "@master";
  if (target == "1342,1423") return "@D[w=0]";
  std::string id = target;
  std::replace(id.begin(), id.end(), ',', '_');
  std::string name = "A_" + id + "_vw";
  if (id == "1243_1423" && !as_printed) name += "_rederived";
  return "v*x + @" + name + "[w=1]";
}

std::vector<Cell> brute_column(const std::string& target, const RunConfig& config) {
  std::vector<Cell> out;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    if (n > config.brute_ceiling) {
      out.push_back(skipped("above brute-force ceiling " + std::to_string(config.brute_ceiling)));
    } else if (target == kInvSeq) {
      out.push_back({last_dist_distribution(n), "", ""});
    } else {
      out.push_back({first_desc_distribution(n, PatternPair::parse(target)), "", ""});
    }
  }
  return out;
}

std::vector<Cell> dp_column(const std::string& target, const RunConfig& config) {
  const int n_max = config.n_max;
  // The builders want at least two levels.
  const int build_max = std::max(n_max, 2);
  std::vector<MPoly> values(static_cast<std::size_t>(n_max) + 1);
  if (target == kInvSeq) {
    const auto u = build_u_table(build_max);
    for (int n = config.n_min; n <= n_max; ++n) values[static_cast<std::size_t>(n)] = u_distribution(u, n);
  } else if (target == "1324,1423") {
    const auto r = build_r_table(build_max);
    for (int n = config.n_min; n <= n_max; ++n) values[static_cast<std::size_t>(n)] = r_distribution(r, n);
  } else if (target == "1342,1423") {
    const auto de = build_de_tables(build_max);
    for (int n = config.n_min; n <= n_max; ++n) values[static_cast<std::size_t>(n)] = d_distribution(de, n);
  } else {
    const auto a = build_a_table(build_max, parse_a_case(target));
    for (int n = config.n_min; n <= n_max; ++n) values[static_cast<std::size_t>(n)] = a_distribution(a, n);
  }
  std::vector<Cell> out;
  for (int n = config.n_min; n <= n_max; ++n) out.push_back({values[static_cast<std::size_t>(n)], "", ""});
  return out;
}

std::vector<Cell> series_column(const std::string& target, const RunConfig& config, const gf::Library& library) {
  const std::size_t count = static_cast<std::size_t>(config.n_max - config.n_min + 1);
  const std::string expr = series_expression(target, config.as_printed);
  XSeries series;
  try {
    gf::Evaluator evaluator(library, config.order);
    series = evaluator.eval(expr);
  } catch (const Error& e) {
    return std::vector<Cell>(count, failed(expr + ": " + e.what()));
  }
  std::vector<Cell> out;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const MPoly& coeff = series[static_cast<std::size_t>(n)];
    if (!coeff.is_integral()) {
      out.push_back(failed(expr + ": coefficient of x^" + std::to_string(n) + " is not integral"));
    } else {
      out.push_back({coeff, "", ""});
    }
  }
  return out;
}

bool uses_series(const RunConfig& config) {
  return config.command == "expand" || config.command == "crosscheck" ||
         (config.command == "verify" && !config.screen_all_pairs &&
          (config.mode == Mode::series || config.mode == Mode::all));
}

gf::Library load_library(const RunConfig& config) {
  return gf::Library::load(config.assets.empty() ? gf::Library::default_dir() : config.assets);
}

std::vector<std::string> requested_pairs(const RunConfig& config) {
  if (!config.pairs.empty()) return config.pairs;
  std::vector<std::string> out;
  for (const auto& pair : schroeder_pairs()) out.push_back(pair.id());
  return out;
}

Report screen(const RunConfig& config) {
  std::vector<Permutation> patterns;
  std::vector<int> letters{1, 2, 3, 4};
  do {
    patterns.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::vector<PatternPair> pairs;
  for (std::size_t a = 0; a < patterns.size(); ++a) {
    for (std::size_t b = a + 1; b < patterns.size(); ++b) pairs.push_back({patterns[a], patterns[b]});
  }
  std::vector<std::string> expected_ids;
  for (const auto& pair : schroeder_pairs()) expected_ids.push_back(pair.id());

  Report report{"verify", {}, {}};
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const MPoly target = last_dist_distribution(n);
    std::vector<MPoly> dists(pairs.size());
    parallel_for(pairs.size(), config.jobs, [&](std::size_t k) { dists[k] = first_desc_distribution(n, pairs[k]); });
    std::vector<std::string> matched;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string id = pairs[k].id();
      if (dists[k] == target) {
        matched.push_back(id);
        report.checks.push_back({n, id, "screen", "MATCH", ""});
      } else {
        report.checks.push_back({n, id, "screen", "DIFFER", first_difference(dists[k], target)});
      }
    }
    std::string extra, missing;
    for (const auto& id : matched) {
      if (std::find(expected_ids.begin(), expected_ids.end(), id) == expected_ids.end()) extra += " " + id;
    }
    for (const auto& id : expected_ids) {
      if (std::find(matched.begin(), matched.end(), id) == matched.end()) missing += " " + id;
    }
    Check summary{n, "*", "screen", missing.empty() ? "EQUAL" : "UNEQUAL", ""};
    summary.detail = std::to_string(matched.size()) + " of " + std::to_string(pairs.size()) + " pairs match";
    if (!extra.empty()) summary.detail += "; beyond the six:" + extra;
    if (!missing.empty()) summary.detail += "; missing:" + missing;
    report.checks.push_back(summary);

    if (config.coincidences) {
      // Pairs that differ from the target but agree with some other pair.
      std::map<std::string, std::vector<std::string>> groups;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (dists[k] != target) groups[dists[k].to_string()].push_back(pairs[k].id());
      }
      for (const auto& [dist, ids] : groups) {
        if (ids.size() < 2) continue;
        std::string joined;
        for (const auto& id : ids) joined += (joined.empty() ? "" : " ") + id;
        report.checks.push_back({n, joined, "coincide", "INFO", dist});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Tables.

void add_rows(Report& report, int n, const PolyTable& table) {
  for (const auto& [key, poly] : table.entries()) report.rows.push_back({n, {key.first, key.second}, poly.to_string()});
}

}  // namespace

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.verdict == "UNEQUAL" || c.verdict == "ERROR"; });
}

std::size_t default_order() {
  if (const char* env = std::getenv("SCHRODIST_ORDER"); env != nullptr && *env != '\0') {
    const int order = parse_int(env, "SCHRODIST_ORDER");
    if (order < 1) throw InvalidArgument("SCHRODIST_ORDER must be positive");
    return static_cast<std::size_t>(order);
  }
  return 16;
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text, "range");
    return {n, n};
  }
  return {parse_int(text.substr(0, dots), "range"), parse_int(text.substr(dots + 2), "range")};
}

std::pair<Var, Rational> parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw InvalidArgument("expected var=value, got '" + std::string(text) + "'");
  const Var var = parse_var(trim(text.substr(0, eq)));
  const std::string value = trim(text.substr(eq + 1));
  Rational r;
  if (value.empty() || r.set_str(value, 10) != 0) throw InvalidArgument("bad value in '" + std::string(text) + "'");
  r.canonicalize();
  return {var, r};
}

std::vector<std::string> parse_pairs(std::string_view text) {
  if (trim(text) == "all") return requested_pairs({});
  std::string s(text);
  std::replace(s.begin(), s.end(), '_', ',');
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    if (!trim(part).empty()) parts.push_back(trim(part));
  }
  if (parts.empty() || parts.size() % 2 != 0) {
    throw InvalidArgument("pair list needs an even number of patterns: '" + std::string(text) + "'");
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < parts.size(); k += 2) {
    out.push_back(PatternPair::parse(parts[k] + "," + parts[k + 1]).id());
  }
  return out;
}

void validate(const RunConfig& config) {
  static const std::vector<std::string> kCommands{"verify", "table", "expand", "crosscheck"};
  if (std::find(kCommands.begin(), kCommands.end(), config.command) == kCommands.end()) {
    throw InvalidArgument("unknown command '" + config.command + "'");
  }
  const int floor = config.command == "expand" ? 0 : 1;
  if (config.n_min < floor || config.n_max < config.n_min) {
    throw InvalidArgument("bad range " + std::to_string(config.n_min) + ".." + std::to_string(config.n_max));
  }
  if (config.jobs == 0) throw InvalidArgument("--jobs must be at least 1");
  if (config.brute_ceiling < 0) throw InvalidArgument("brute-force ceiling must be non-negative");
  if (uses_series(config) && config.order <= static_cast<std::size_t>(config.n_max)) {
    throw InvalidArgument("order " + std::to_string(config.order) + " must exceed n_max " +
                          std::to_string(config.n_max));
  }
  for (const auto& id : config.pairs) {
    const auto& six = schroeder_pairs();
    const bool known = std::any_of(six.begin(), six.end(), [&](const PatternPair& p) { return p.id() == id; });
    if (!known) throw InvalidArgument("no pipelines for pair " + id + "; only the six pairs are supported");
  }
  if (config.command == "table") {
    static const std::vector<std::string> kKinds{"u", "r", "d", "e", "a", "triangle"};
    if (std::find(kKinds.begin(), kKinds.end(), config.subject) == kKinds.end()) {
      throw InvalidArgument("unknown table '" + config.subject + "' (u, r, d, e, a, triangle)");
    }
    if (config.subject == "a") parse_a_case(config.case_id);
  }
  if (config.command == "expand" && config.subject.empty()) throw InvalidArgument("expand needs an asset name");
}

Report cmd_verify(const RunConfig& config) {
  if (config.screen_all_pairs) return screen(config);
  const auto pairs = requested_pairs(config);
  const bool brute = config.mode == Mode::brute || config.mode == Mode::all;
  const bool dp = config.mode == Mode::dp || config.mode == Mode::all;
  const bool series = config.mode == Mode::series || config.mode == Mode::all;
  std::optional<gf::Library> library;
  if (series) library = load_library(config);

  // The reference is the inversion-sequence distribution, counted directly
  // up to the brute-force ceiling and from the DP beyond it.
  std::vector<Cell> reference = brute_column(std::string(kInvSeq), config);
  const std::vector<Cell> reference_dp = dp_column(std::string(kInvSeq), config);
  for (std::size_t k = 0; k < reference.size(); ++k) {
    if (!reference[k].value) reference[k] = reference_dp[k];
  }

  struct Columns {
    std::vector<Cell> brute, dp, series;
  };
  std::vector<Columns> columns(pairs.size());
  parallel_for(pairs.size() * 3, config.jobs, [&](std::size_t task) {
    const std::string& pair = pairs[task / 3];
    Columns& out = columns[task / 3];
    switch (task % 3) {
      case 0: if (brute) out.brute = brute_column(pair, config); break;
      case 1: if (dp) out.dp = dp_column(pair, config); break;
      default: if (series) out.series = series_column(pair, config, *library); break;
    }
  });

  Report report{"verify", {}, {}};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int n = config.n_min; n <= config.n_max; ++n) {
      const auto k = static_cast<std::size_t>(n - config.n_min);
      if (brute) report.checks.push_back(compare(n, pairs[p], "brute", columns[p].brute[k], reference[k]));
      if (dp) report.checks.push_back(compare(n, pairs[p], "dp", columns[p].dp[k], reference[k]));
      if (series) report.checks.push_back(compare(n, pairs[p], "series", columns[p].series[k], reference[k]));
    }
  }
  return report;
}

Report cmd_crosscheck(const RunConfig& config) {
  std::vector<std::string> targets{std::string(kInvSeq)};
  for (const auto& id : requested_pairs(config)) targets.push_back(id);
  const gf::Library library = load_library(config);

  std::vector<std::array<std::vector<Cell>, 3>> columns(targets.size());
  parallel_for(targets.size() * 3, config.jobs, [&](std::size_t task) {
    const std::string& target = targets[task / 3];
    auto& out = columns[task / 3][task % 3];
    switch (task % 3) {
      case 0: out = brute_column(target, config); break;
      case 1: out = dp_column(target, config); break;
      default: out = series_column(target, config, library); break;
    }
  });

  Report report{"crosscheck", {}, {}};
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (int n = config.n_min; n <= config.n_max; ++n) {
      const auto k = static_cast<std::size_t>(n - config.n_min);
      const auto& [b, d, s] = columns[t];
      report.checks.push_back(compare(n, targets[t], "brute~dp", b[k], d[k]));
      report.checks.push_back(compare(n, targets[t], "brute~series", b[k], s[k]));
      report.checks.push_back(compare(n, targets[t], "dp~series", d[k], s[k]));
    }
  }
  return report;
}

Report cmd_table(const RunConfig& config) {
  Report report{"table", {}, {}};
  const int n_max = std::max(config.n_max, 2);
  const std::string& kind = config.subject;
  if (kind == "u") {
    const auto u = build_u_table(n_max);
    for (int n = config.n_min; n <= config.n_max; ++n) add_rows(report, n, u[static_cast<std::size_t>(n)]);
  } else if (kind == "r") {
    const auto r = build_r_table(n_max);
    for (int n = config.n_min; n <= config.n_max; ++n) add_rows(report, n, r[static_cast<std::size_t>(n)]);
  } else if (kind == "d" || kind == "e") {
    const auto de = build_de_tables(n_max);
    for (int n = config.n_min; n <= config.n_max; ++n) {
      if (kind == "d") {
        add_rows(report, n, de.d[static_cast<std::size_t>(n)]);
        continue;
      }
      for (int m = 1; m <= n; ++m) {
        const MPoly& e = de.e_at(n, m);
        if (!e.is_zero()) report.rows.push_back({n, {m}, e.to_string()});
      }
    }
  } else if (kind == "a") {
    const auto a = build_a_table(n_max, parse_a_case(config.case_id));
    for (int n = std::max(config.n_min, 2); n <= config.n_max; ++n) add_rows(report, n, a.table(n));
  } else {
    const auto tri = schroeder_triangle(n_max);
    for (int n = config.n_min; n <= config.n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        report.rows.push_back({n, {k}, tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].get_str()});
      }
    }
  }
  return report;
}

Report cmd_expand(const RunConfig& config) {
  const gf::Library library = load_library(config);
  gf::Evaluator evaluator(library, config.order);
  const bool is_name = std::all_of(config.subject.begin(), config.subject.end(),
                                   [](unsigned char c) { return std::isalnum(c) || c == '_'; });
  const XSeries series = is_name ? evaluator.eval_asset(config.subject) : evaluator.eval(config.subject);
  Report report{"expand", {}, {}};
  for (int n = config.n_min; n <= config.n_max; ++n) {
    MPoly coeff = series[static_cast<std::size_t>(n)];
    for (const auto& [var, value] : config.at) coeff = coeff.subst(var, value);
    report.rows.push_back({n, {}, coeff.to_string()});
  }
  return report;
}

Report run(const RunConfig& config) {
  validate(config);
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "table") return cmd_table(config);
  if (config.command == "expand") return cmd_expand(config);
  return cmd_crosscheck(config);
}

std::string render(const Report& report, Format format) {
  auto index_text = [](const std::vector<int>& index) {
    std::string out;
    for (int i : index) out += (out.empty() ? "" : ",") + std::to_string(i);
    return out;
  };
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = report.command;
      doc["ok"] = report.ok();
      doc["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : report.checks) {
        doc["checks"].push_back(
            {{"n", c.n}, {"pair", c.pair}, {"pipeline", c.pipeline}, {"verdict", c.verdict}, {"detail", c.detail}});
      }
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : report.rows) doc["rows"].push_back({{"n", r.n}, {"index", r.index}, {"value", r.value}});
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::tsv:
      if (!report.checks.empty()) {
        out << "n\tpair\tpipeline\tverdict\tdetail\n";
        for (const auto& c : report.checks) {
          out << c.n << '\t' << c.pair << '\t' << c.pipeline << '\t' << c.verdict << '\t' << c.detail << '\n';
        }
      }
      if (!report.rows.empty()) {
        out << "n\tindex\tvalue\n";
        for (const auto& r : report.rows) out << r.n << '\t' << index_text(r.index) << '\t' << r.value << '\n';
      }
      break;
    case Format::text: {
      for (const auto& c : report.checks) {
        out << "n=" << c.n << "  " << c.pair << "  " << c.pipeline << "  " << c.verdict;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
      }
      for (const auto& r : report.rows) {
        out << "n=" << r.n;
        if (!r.index.empty()) out << "  (" << index_text(r.index) << ")";
        out << "  " << r.value << '\n';
      }
      if (!report.checks.empty()) {
        const auto bad = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) {
          return c.verdict == "UNEQUAL" || c.verdict == "ERROR";
        });
        out << (bad == 0 ? "all checks passed" : std::to_string(bad) + " check(s) failed") << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace schrodist::cli
