#include "ahatom/subshell.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "ahatom/error.hpp"

namespace ahatom {

namespace {

constexpr std::string_view kLetters = "spdfghik";

struct NobleCore {
  std::string_view symbol;
  int electrons;
};
constexpr NobleCore kCores[] = {{"[He]", 2},  {"[Ne]", 10}, {"[Ar]", 18},
                                {"[Kr]", 36}, {"[Xe]", 54}, {"[Rn]", 86}};

}  // namespace

SubshellKey::SubshellKey(int n_, int l_) : n(n_), l(l_) {
  if (n < 1 || l < 0 || l >= n) {
    throw InvalidArgument("invalid subshell (n=" + std::to_string(n) +
                          ", l=" + std::to_string(l) + ")");
  }
}

char l_letter(int l) {
  if (l < 0 || l >= static_cast<int>(kLetters.size())) {
    throw InvalidArgument("no spectroscopic letter for l=" + std::to_string(l));
  }
  return kLetters[static_cast<std::size_t>(l)];
}

int l_from_letter(char c) {
  const auto pos = kLetters.find(static_cast<char>(std::tolower(c)));
  if (pos == std::string_view::npos) {
    throw InvalidArgument(std::string("unknown angular momentum letter '") + c +
                          "'");
  }
  return static_cast<int>(pos);
}

std::string SubshellKey::label() const {
  return std::to_string(n) + l_letter(l);
}

SubshellKey SubshellKey::parse(std::string_view token) {
  int n = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr == first || ptr + 1 != last) {
    throw InvalidArgument("malformed subshell label '" + std::string(token) +
                          "'");
  }
  return SubshellKey(n, l_from_letter(*ptr));
}

bool madelung_less(const SubshellKey& a, const SubshellKey& b) {
  const int sa = a.n + a.l;
  const int sb = b.n + b.l;
  if (sa != sb) return sa < sb;
  return a.n < b.n;
}

std::vector<SubshellKey> madelung_order(int n_cap, int l_max) {
  std::vector<SubshellKey> keys;
  for (int n = 1; n <= n_cap; ++n) {
    for (int l = 0; l < n && l <= l_max; ++l) keys.emplace_back(n, l);
  }
  std::sort(keys.begin(), keys.end(), madelung_less);
  return keys;
}

Configuration::Configuration(const Map& occupancy) {
  for (const auto& [key, count] : occupancy) set(key, count);
}

void Configuration::set(const SubshellKey& key, int count) {
  if (count < 0 || count > key.capacity()) {
    throw InvalidArgument("occupancy " + std::to_string(count) + " of " +
                          key.label() + " outside [0, " +
                          std::to_string(key.capacity()) + "]");
  }
  total_ -= occupancy(key);
  if (count == 0) {
    occ_.erase(key);
  } else {
    occ_[key] = count;
  }
  total_ += count;
}

void Configuration::add(const SubshellKey& key, int delta) {
  set(key, occupancy(key) + delta);
}

int Configuration::occupancy(const SubshellKey& key) const {
  const auto it = occ_.find(key);
  return it == occ_.end() ? 0 : it->second;
}

Configuration Configuration::without_electron(const SubshellKey& key) const {
  if (!occupied(key)) {
    throw InvalidArgument("subshell " + key.label() + " is not occupied");
  }
  Configuration ion = *this;
  ion.add(key, -1);
  return ion;
}

std::string Configuration::to_string() const {
  std::vector<std::pair<SubshellKey, int>> items(occ_.begin(), occ_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return madelung_less(a.first, b.first);
  });
  std::string out;
  for (const auto& [key, count] : items) {
    if (!out.empty()) out += ' ';
    out += key.label() + std::to_string(count);
  }
  return out;
}

Configuration Configuration::parse(std::string_view text) {
  Configuration config;
  std::set<SubshellKey> seen;
  std::istringstream in{std::string(text)};
  std::string token;
  bool first = true;
  while (in >> token) {
    if (token.front() == '[') {
      const auto* core = std::find_if(std::begin(kCores), std::end(kCores),
                                      [&](const NobleCore& c) {
                                        return c.symbol == token;
                                      });
      if (!first || core == std::end(kCores)) {
        throw InvalidArgument("unexpected core token '" + token + "'");
      }
      for (const auto& [key, count] : aufbau_configuration(core->electrons)) {
        config.set(key, count);
        seen.insert(key);
      }
      first = false;
      continue;
    }
    first = false;
    // <n><letter><count>
    std::size_t pos = 0;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == 0 || pos + 1 >= token.size()) {
      throw InvalidArgument("malformed configuration token '" + token + "'");
    }
    const auto key = SubshellKey::parse(std::string_view(token).substr(0, pos + 1));
    int count = 0;
    const auto* cfirst = token.data() + pos + 1;
    const auto* clast = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(cfirst, clast, count);
    if (ec != std::errc() || ptr != clast) {
      throw InvalidArgument("malformed occupancy in token '" + token + "'");
    }
    if (!seen.insert(key).second) {
      throw InvalidArgument("subshell " + key.label() + " listed twice");
    }
    config.set(key, count);
  }
  return config;
}

Configuration aufbau_configuration(int n_electrons, int n_cap, int l_max) {
  if (n_electrons < 0) throw InvalidArgument("negative electron count");
  Configuration config;
  int remaining = n_electrons;
  for (const auto& key : madelung_order(n_cap, l_max)) {
    if (remaining == 0) break;
    const int put = std::min(remaining, key.capacity());
    config.set(key, put);
    remaining -= put;
  }
  if (remaining > 0) {
    throw InvalidArgument(std::to_string(n_electrons) +
                          " electrons exceed the capacity below n_cap=" +
                          std::to_string(n_cap));
  }
  return config;
}

bool madelung_preferred(const Configuration& a, const Configuration& b) {
  std::vector<SubshellKey> keys;
  for (const auto& [k, _] : a) keys.push_back(k);
  for (const auto& [k, _] : b) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), madelung_less);
  for (const auto& k : keys) {
    const int ga = a.occupancy(k);
    const int gb = b.occupancy(k);
    if (ga != gb) return ga > gb;
  }
  return false;
}

}  // namespace ahatom
