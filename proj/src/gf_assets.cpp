#include <cstdlib>
#include <fstream>
#include <sstream>

#include "schrodist/errors.hpp"
#include "schrodist/gf.hpp"

#ifndef SCHRODIST_ASSET_DIR
#define SCHRODIST_ASSET_DIR "assets"
#endif

namespace schrodist::gf {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, sep)) out.push_back(trim(field));
  return out;
}

std::string read_formula(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open asset file " + path.string());
  std::string formula, line;
  while (std::getline(in, line)) {
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!formula.empty()) formula += ' ';
    formula += body;
  }
  return formula;
}

}  // namespace

std::filesystem::path Library::default_dir() {
  if (const char* env = std::getenv("SCHRODIST_ASSETS"); env != nullptr && *env != '\0') return env;
  return SCHRODIST_ASSET_DIR;
}

Library Library::load(const std::filesystem::path& dir) {
  const auto manifest = dir / "manifest.txt";
  std::ifstream in(manifest);
  if (!in) throw InvalidArgument("cannot open " + manifest.string());
  Library library;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split(body, '|');
    if (fields.size() != 4) {
      throw InvalidArgument(manifest.string() + ":" + std::to_string(line_no) +
                            ": expected 'name | file | anchor | variables'");
    }
    Asset asset{fields[0], fields[1], fields[2], fields[3], read_formula(dir / fields[1]), nullptr};
    try {
      asset.tree = parse(asset.source);
    } catch (const SyntaxError& e) {
      throw SyntaxError("asset " + asset.name + ": " + e.what(), e.offset());
    }
    library.add(std::move(asset));
  }
  return library;
}

void Library::add(Asset asset) {
  if (!asset.tree) asset.tree = parse(asset.source);
  const std::string name = asset.name;
  assets_.insert_or_assign(name, std::move(asset));
}

bool Library::contains(std::string_view name) const { return assets_.find(name) != assets_.end(); }

const Asset& Library::get(std::string_view name) const {
  auto it = assets_.find(name);
  if (it == assets_.end()) throw UnknownAsset("unknown asset '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> Library::names() const {
  std::vector<std::string> out;
  for (const auto& [name, asset] : assets_) out.push_back(name);
  return out;
}

}  // namespace schrodist::gf
