#include <CLI11.hpp>

#include <iostream>

#include "schrodist/cli.hpp"
#include "schrodist/errors.hpp"

using namespace schrodist;

int main(int argc, char** argv) {
  CLI::App app{"Exact (first, desc) and (last, dist) distributions for Schroeder pattern pairs"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string range = "1..8";
  std::string pairs;
  std::vector<std::string> at;
  std::size_t order = 0;
  const std::map<std::string, cli::Format> formats{
      {"text", cli::Format::text}, {"json", cli::Format::json}, {"tsv", cli::Format::tsv}};
  const std::map<std::string, cli::Mode> modes{
      {"brute", cli::Mode::brute}, {"dp", cli::Mode::dp}, {"series", cli::Mode::series}, {"all", cli::Mode::all}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", range, "Length range A..B or a single length")->capture_default_str();
    sub->add_option("--format", config.format, "text, json or tsv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
    sub->add_option("--assets", config.assets, "Formula asset directory");
  };
  auto series_opts = [&](CLI::App* sub) {
    sub->add_option("--order", order, "Series truncation order (default $SCHRODIST_ORDER or 16)");
  };
  auto pipeline_opts = [&](CLI::App* sub) {
    sub->add_option("--pairs", pairs, "Pair list such as 1243,1324 or 'all'");
    sub->add_option("--brute-ceiling", config.brute_ceiling, "Largest n counted by brute force")
        ->capture_default_str();
    sub->add_flag("--as-printed", config.as_printed, "Use the printed (1243,1423) A+ formula");
  };

  auto* verify = app.add_subcommand("verify", "Compare each pair's distribution with the inversion-sequence one");
  common(verify);
  series_opts(verify);
  pipeline_opts(verify);
  verify->add_option("--mode", config.mode, "brute, dp, series or all")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  verify->add_flag("--screen-all-pairs", config.screen_all_pairs, "Brute-force every pair of length-4 patterns");
  verify->add_flag("--coincidences", config.coincidences, "With screening, group pairs that agree with each other");

  auto* table = app.add_subcommand("table", "Dump a recurrence table");
  common(table);
  table->add_option("kind", config.subject, "u, r, d, e, a or triangle")->required();
  table->add_option("--case", config.case_id, "Case for the a table, e.g. 1324,1342");

  auto* expand = app.add_subcommand("expand", "Series coefficients of a formula asset");
  common(expand);
  series_opts(expand);
  expand->add_option("asset", config.subject, "Asset name, or an expression over assets such as 'x/(1-q*x) + @U_x_1_1'")->required();
  expand->add_option("--at", at, "Substitute var=value in each coefficient");

  auto* crosscheck = app.add_subcommand("crosscheck", "Pairwise agreement of brute force, DP and series");
  common(crosscheck);
  series_opts(crosscheck);
  pipeline_opts(crosscheck);

  CLI11_PARSE(app, argc, argv);

  try {
    config.command = app.get_subcommands().front()->get_name();
    std::tie(config.n_min, config.n_max) = cli::parse_range(range);
    config.order = order != 0 ? order : cli::default_order();
    if (!pairs.empty()) config.pairs = cli::parse_pairs(pairs);
    for (const auto& text : at) config.at.push_back(cli::parse_assignment(text));
    cli::validate(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const cli::Report report = cli::run(config);
    std::cout << cli::render(report, config.format);
    return report.ok() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
