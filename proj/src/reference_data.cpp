#include "ahatom/reference_data.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ahatom/error.hpp"

namespace ahatom {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("malformed " + std::string(what) + " '" +
                          std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("malformed number '" + std::string(s) + "'");
  }
  return v;
}

// Calls fn(line_number, line) for each non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    fn(lineno, line);
  }
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_tabulated(int z) {
  if (z < 1 || z > kMaxTabulatedZ) {
    throw InvalidArgument("no tabulated data for Z=" + std::to_string(z) +
                          " (1 <= Z <= " + std::to_string(kMaxTabulatedZ) + ")");
  }
}

}  // namespace

std::string_view to_string(Unit unit) {
  switch (unit) {
    case Unit::hartree: return "hartree";
    case Unit::eV: return "eV";
    case Unit::dimensionless: return "dimensionless";
  }
  return "dimensionless";
}

Unit parse_unit(std::string_view text) {
  text = trim(text);
  if (text == "hartree") return Unit::hartree;
  if (text == "eV") return Unit::eV;
  if (text == "dimensionless") return Unit::dimensionless;
  throw InvalidArgument("unknown unit '" + std::string(text) + "'");
}

void ReferenceDataset::add(ReferenceRow row) {
  auto key = std::make_pair(row.z, row.label);
  if (index_.count(key) != 0) {
    throw InvalidArgument("duplicate reference row (Z=" + std::to_string(row.z) +
                          ", " + row.label + ")");
  }
  index_.emplace(std::move(key), rows_.size());
  rows_.push_back(std::move(row));
}

std::optional<double> ReferenceDataset::find(int z, std::string_view label) const {
  const auto it = index_.find(std::make_pair(z, std::string(label)));
  if (it == index_.end()) return std::nullopt;
  return rows_[it->second].value;
}

ReferenceDataset ReferenceDataset::parse(std::string_view csv) {
  ReferenceDataset data;
  bool header = true;
  for_each_line(csv, [&](std::size_t lineno, std::string_view line) {
    const auto cells = split(line, ',');
    if (header) {
      header = false;
      if (cells.size() == 4 && trim(cells[0]) == "Z" && trim(cells[1]) == "label") {
        return;
      }
      throw InvalidArgument("reference CSV: expected header Z,label,value,unit");
    }
    if (cells.size() != 4) {
      throw InvalidArgument("reference CSV line " + std::to_string(lineno) +
                            ": expected 4 columns");
    }
    ReferenceRow row;
    row.z = parse_int(cells[0], "Z");
    row.label = std::string(trim(cells[1]));
    row.value = parse_double(cells[2]);
    row.unit = parse_unit(cells[3]);
    data.add(std::move(row));
  });
  return data;
}

ReferenceDataset ReferenceDataset::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open reference file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const ReferenceDataset& ReferenceDataset::bundled() {
  static const ReferenceDataset data = parse(bundled::table2_reference());
  return data;
}

std::map<int, Configuration> parse_configuration_manifest(std::string_view text) {
  std::map<int, Configuration> out;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) {
      throw InvalidArgument("configuration manifest line " +
                            std::to_string(lineno) + ": missing configuration");
    }
    const int z = parse_int(line.substr(0, sp), "Z");
    if (!out.emplace(z, Configuration::parse(line.substr(sp + 1))).second) {
      throw InvalidArgument("configuration manifest: Z=" + std::to_string(z) +
                            " listed twice");
    }
  });
  return out;
}

std::map<int, std::vector<SubshellKey>> parse_shell_manifest(std::string_view text) {
  std::map<int, std::vector<SubshellKey>> out;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string token;
    in >> token;
    const int z = parse_int(token, "Z");
    std::vector<SubshellKey> shells;
    while (in >> token) shells.push_back(SubshellKey::parse(token));
    if (shells.empty()) {
      throw InvalidArgument("shell manifest line " + std::to_string(lineno) +
                            ": no shells");
    }
    if (!out.emplace(z, std::move(shells)).second) {
      throw InvalidArgument("shell manifest: Z=" + std::to_string(z) +
                            " listed twice");
    }
  });
  return out;
}

const Configuration& reference_configuration(int z) {
  static const auto manifest =
      parse_configuration_manifest(bundled::reference_configurations());
  check_tabulated(z);
  return manifest.at(z);
}

const std::vector<SubshellKey>& ip_shells(int z) {
  static const auto manifest = parse_shell_manifest(bundled::ip_shells());
  check_tabulated(z);
  return manifest.at(z);
}

}  // namespace ahatom
