#include "skw/config.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "skw/error.hpp"

namespace skw {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& v, int line, const std::string& key) {
  std::int64_t out = 0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  if (!v.empty() && v[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line, "line " + std::to_string(line) + ": value of '" + key + "' is not an integer: '" + v + "'");
  }
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  for (char ch : n) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

}  // namespace

SessionConfig parse_config(const std::string& text) {
  SessionConfig cfg;
  std::set<std::string> seen;
  std::vector<std::string> problems;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line, "line " + std::to_string(line) + ": expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "line " + std::to_string(line) + ": empty key");
    if (value.empty()) throw ParseError(line, "line " + std::to_string(line) + ": empty value for '" + key + "'");
    if (!seen.insert(key).second) throw ParseError(line, "line " + std::to_string(line) + ": duplicate key '" + key + "'");

    SessionParams& p = cfg.params;
    if (key == "prime") {
      std::int64_t v = parse_int(value, line, key);
      if (v <= 0) {
        problems.push_back("prime must be positive");
      } else {
        p.prime = static_cast<std::uint64_t>(v);
      }
    } else if (key == "a") {
      p.a = parse_int(value, line, key);
    } else if (key == "b") {
      p.b = parse_int(value, line, key);
    } else if (key == "c") {
      p.c = parse_int(value, line, key);
    } else if (key == "seed") {
      std::int64_t v = parse_int(value, line, key);
      if (v < 0) problems.push_back("seed must be non-negative");
      p.seed = static_cast<std::uint64_t>(v);
    } else if (key == "window_s") {
      p.window_s = static_cast<int>(parse_int(value, line, key));
    } else if (key == "window_b") {
      p.window_b = static_cast<int>(parse_int(value, line, key));
    } else if (key == "jet_cap") {
      p.jet_cap = static_cast<int>(parse_int(value, line, key));
    } else if (key == "order_floor") {
      p.order_floor = parse_int(value, line, key);
    } else if (key == "K_orbit" || key == "k_orbit") {
      p.k_orbit = parse_int(value, line, key);
    } else if (key.rfind("point.", 0) == 0) {
      std::string name = key.substr(6);
      if (!valid_name(name)) {
        problems.push_back("line " + std::to_string(line) + ": bad point name '" + name + "'");
        continue;
      }
      PointSpec spec;
      if (value != "auto") {
        std::array<std::int64_t, 3> xyz{};
        std::istringstream parts(value);
        std::string item;
        int count = 0;
        while (std::getline(parts, item, ',')) {
          if (count == 3) throw ParseError(line, "line " + std::to_string(line) + ": point needs exactly three coordinates");
          xyz[static_cast<std::size_t>(count++)] = parse_int(trim(item), line, key);
        }
        if (count != 3) throw ParseError(line, "line " + std::to_string(line) + ": point needs exactly three coordinates");
        spec.coords = xyz;
      }
      cfg.points[name] = spec;
    } else {
      problems.push_back("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }

  for (const char* k : {"a", "b", "c"}) {
    if (!seen.count(k)) problems.push_back(std::string("missing required key '") + k + "'");
  }
  const SessionParams& p = cfg.params;
  if (!(p.prime > 3 && p.prime < (1ULL << 31) && is_prime(p.prime))) {
    problems.push_back("prime " + std::to_string(p.prime) + " is not a prime in (3, 2^31)");
  }
  if (p.window_s < 4 || p.window_s > 40) problems.push_back("window_s must lie in [4, 40]");
  if (p.window_b < 1 || p.window_b > 60) problems.push_back("window_b must lie in [1, 60]");
  if (p.jet_cap < 1 || p.jet_cap > 8) problems.push_back("jet_cap must lie in [1, 8]");
  if (p.order_floor && *p.order_floor < 1) problems.push_back("order_floor must be positive");
  if (p.k_orbit && *p.k_orbit < 1) problems.push_back("K_orbit must be positive");
  if (!problems.empty()) {
    std::string msg;
    for (const auto& s : problems) msg += (msg.empty() ? "" : "; ") + s;
    throw Error(Errc::ValidationError, msg);
  }
  return cfg;
}

std::string to_text(const SessionConfig& config) {
  const SessionParams& p = config.params;
  std::ostringstream out;
  out << "prime = " << p.prime << "\n";
  out << "a = " << p.a << "\nb = " << p.b << "\nc = " << p.c << "\n";
  out << "seed = " << p.seed << "\n";
  out << "window_s = " << p.window_s << "\nwindow_b = " << p.window_b << "\n";
  out << "jet_cap = " << p.jet_cap << "\n";
  if (p.order_floor) out << "order_floor = " << *p.order_floor << "\n";
  if (p.k_orbit) out << "K_orbit = " << *p.k_orbit << "\n";
  for (const auto& [name, spec] : config.points) {
    out << "point." << name << " = ";
    if (spec.coords) {
      out << (*spec.coords)[0] << "," << (*spec.coords)[1] << "," << (*spec.coords)[2];
    } else {
      out << "auto";
    }
    out << "\n";
  }
  return out.str();
}

std::map<std::string, Point> resolve_points(const Session& s, const SessionConfig& config) {
  std::map<std::string, Point> out;
  const PrimeField& F = s.field();
  for (const auto& [name, spec] : config.points) {
    if (!spec.coords) {
      out.emplace(name, s.auto_point(name));
      continue;
    }
    Triple t{F.from_int((*spec.coords)[0]), F.from_int((*spec.coords)[1]), F.from_int((*spec.coords)[2])};
    try {
      out.emplace(name, s.curve().make_point(t));
    } catch (const Error& e) {
      throw Error(e.code(), "point." + name + ": " + e.what());
    }
  }
  return out;
}

}  // namespace skw
