#include "curvball/surface_config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

#include "curvball/catalog.hpp"
#include "curvball/errors.hpp"

namespace curvball {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Column of the first non-space character of s[from..].
int firstColumn(const std::string& s, std::size_t from) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return static_cast<int>(from) + 1;
}

bool validName(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

double parseNumber(const std::string& text, int line, int column) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("expected a number", line, column);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError("malformed number '" + t + "'", line, column);
  }
  return v;
}

const std::map<std::string, std::set<std::string>>& knownKeys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"sphere", {"r", "cx", "cy", "cz"}},
      {"ellipsoid", {"a", "b", "c", "cx", "cy", "cz"}},
      {"perturbed", {"amp", "f", "coeffs", "cx", "cy", "cz"}},
      {"torus", {"R", "r"}},
      {"tube", {"R", "r", "extent"}},
      {"cylinder", {"r", "h"}},
      {"mainbody", {}},
      {"fishbowl", {"plateLength", "plateGap", "halfCircleRadius", "tunnelDelta"}},
  };
  return keys;
}

void checkKeys(const SurfaceSpec& spec) {
  const auto it = knownKeys().find(spec.type);
  if (it == knownKeys().end()) throw ConfigError("unknown surface type '" + spec.type + "'", spec.line, spec.column);
  std::set<std::string> seen;
  for (const SurfaceSpec::Entry& e : spec.entries) {
    if (!it->second.count(e.key)) {
      throw ConfigError("unknown key '" + e.key + "' for " + spec.type, e.line, e.keyColumn);
    }
    if (!seen.insert(e.key).second) throw ConfigError("duplicate key '" + e.key + "'", e.line, e.keyColumn);
  }
}

double number(const SurfaceSpec& spec, const std::string& key, double fallback) {
  const SurfaceSpec::Entry* e = spec.find(key);
  return e ? parseNumber(e->value, e->line, e->column) : fallback;
}

Vec3 center(const SurfaceSpec& spec) {
  return {number(spec, "cx", 0.0), number(spec, "cy", 0.0), number(spec, "cz", 0.0)};
}

RadialPerturbation perturbation(const SurfaceSpec& spec) {
  const SurfaceSpec::Entry* f = spec.find("f");
  const SurfaceSpec::Entry* coeffs = spec.find("coeffs");
  if (f && coeffs) throw ConfigError("give either f or coeffs, not both", coeffs->line, coeffs->column);
  if (coeffs) {
    std::vector<double> values;
    std::size_t start = 0;
    const std::string& text = coeffs->value;
    while (true) {
      const std::size_t semi = text.find(';', start);
      const std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      values.push_back(parseNumber(item, coeffs->line, coeffs->column + static_cast<int>(start)));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (values.size() > RadialPerturbation::kMaxMonomials) {
      throw ConfigError("at most " + std::to_string(RadialPerturbation::kMaxMonomials) + " coefficients",
                        coeffs->line, coeffs->column);
    }
    return RadialPerturbation::monomials(values);
  }
  if (f && trim(f->value) != "cos3theta") {
    throw ConfigError("unknown perturbation '" + trim(f->value) + "'", f->line, f->column);
  }
  return RadialPerturbation::cos3Theta();
}

}  // namespace

const SurfaceSpec::Entry* SurfaceSpec::find(const std::string& key) const {
  for (const Entry& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

SurfaceSpec parseInlineSpec(const std::string& text) {
  SurfaceSpec spec;
  const std::size_t colon = text.find(':');
  spec.type = trim(text.substr(0, colon));
  spec.column = firstColumn(text, 0);
  if (!validName(spec.type)) throw ConfigError("expected a surface type", 1, spec.column);
  if (colon == std::string::npos) return spec;
  std::size_t start = colon + 1;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string::npos ? text.size() : comma;
    const std::string item = text.substr(start, stop - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected key=value", 1, firstColumn(text, start));
    }
    SurfaceSpec::Entry e;
    e.key = trim(item.substr(0, eq));
    e.value = trim(item.substr(eq + 1));
    e.line = 1;
    e.column = firstColumn(text, start + eq + 1);
    e.keyColumn = firstColumn(text, start);
    if (!validName(e.key)) throw ConfigError("invalid key", 1, e.keyColumn);
    spec.entries.push_back(std::move(e));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  checkKeys(spec);
  return spec;
}

SurfaceSpec parseSpecFile(std::istream& in) {
  SurfaceSpec spec;
  bool haveSection = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    const std::size_t comment = text.find_first_of("#;");
    if (comment != std::string::npos) text.resize(comment);
    if (trim(text).empty()) continue;
    const int col = firstColumn(text, 0);
    const std::string body = trim(text);
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError("unterminated section header", line, col);
      if (haveSection) throw ConfigError("only one surface section is allowed", line, col);
      spec.type = trim(body.substr(1, body.size() - 2));
      spec.line = line;
      spec.column = col + 1;
      if (!validName(spec.type)) throw ConfigError("invalid section name", line, col + 1);
      haveSection = true;
      continue;
    }
    if (!haveSection) throw ConfigError("key before any [section]", line, col);
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line, col);
    SurfaceSpec::Entry e;
    e.key = trim(text.substr(0, eq));
    e.value = trim(text.substr(eq + 1));
    e.line = line;
    e.column = firstColumn(text, eq + 1);
    e.keyColumn = col;
    if (!validName(e.key)) throw ConfigError("invalid key", line, col);
    if (e.value.empty()) throw ConfigError("missing value", line, static_cast<int>(eq) + 2);
    spec.entries.push_back(std::move(e));
  }
  if (!haveSection) throw ConfigError("no [section] naming a surface type", line + 1, 1);
  checkKeys(spec);
  return spec;
}

SurfaceSpec loadSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path, 0, 0);
  return parseSpecFile(in);
}

FishbowlParams fishbowlParams(const SurfaceSpec& spec) {
  FishbowlParams p;
  p.plateLength = number(spec, "plateLength", p.plateLength);
  p.plateGap = number(spec, "plateGap", p.plateGap);
  p.halfCircleRadius = number(spec, "halfCircleRadius", p.halfCircleRadius);
  p.tunnelDelta = number(spec, "tunnelDelta", p.tunnelDelta);
  return p;
}

Surface buildSurface(const SurfaceSpec& spec) {
  checkKeys(spec);
  const std::string& t = spec.type;
  if (t == "sphere") return makeSphere(center(spec), number(spec, "r", 1.0));
  if (t == "ellipsoid") {
    return makeEllipsoid(center(spec), number(spec, "a", 1.0), number(spec, "b", 1.0), number(spec, "c", 1.0));
  }
  if (t == "perturbed") return makePerturbedSphere(perturbation(spec), number(spec, "amp", 0.05), center(spec));
  if (t == "torus") return makeTorus(number(spec, "R", 2.0), number(spec, "r", 1.0));
  if (t == "tube") {
    return makeTubeSegment(number(spec, "R", 2.0), number(spec, "r", 1.0),
                           number(spec, "extent", 2.0 * std::numbers::pi));
  }
  if (t == "cylinder") return makeCylinder(number(spec, "r", 1.0), number(spec, "h", 2.0));
  if (t == "mainbody") return makeRevolution(mainBodyProfile(), "main body");
  return buildFishbowl(fishbowlParams(spec));
}

}  // namespace curvball
