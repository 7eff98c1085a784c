#include "entangler/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "entangler/errors.hpp"

namespace entangler {

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const char* emit_name(Emit e) {
  switch (e) {
    case Emit::kCouplings: return "couplings";
    case Emit::kEvolution: return "evolution";
    case Emit::kEntanglement: return "entanglement";
    case Emit::kProtocol: return "protocol";
    case Emit::kFig2: return "fig2";
    case Emit::kFig3: return "fig3";
  }
  return "?";
}

std::vector<double> RunConfig::tau_grid() const {
  std::vector<double> grid(tau_points);
  for (int i = 0; i < tau_points; ++i)
    grid[i] = tau_max * static_cast<double>(i) /
              static_cast<double>(tau_points - 1);
  return grid;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_real(const std::string& s, int line, int col) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !std::isfinite(v))
    throw ParseError(line, col, "expected a number, got '" + s + "'");
  return v;
}

// Accepts "a", "bi", "a+bi", "a-bi" (also with suffix j).
cdouble parse_complex(std::string s, int line, int col) {
  s = trim(s);
  if (s.empty()) throw ParseError(line, col, "empty complex literal");
  const bool imaginary = s.back() == 'i' || s.back() == 'j';
  if (!imaginary) return cdouble(parse_real(s, line, col), 0.0);

  s.pop_back();
  // Find the split between real and imaginary parts: the last '+'/'-'
  // that is not a leading sign and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') &&
        s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    std::string im = trim(s);
    if (im.empty() || im == "+") im = "1";
    else if (im == "-") im = "-1";
    return cdouble(0.0, parse_real(im, line, col));
  }
  std::string im = trim(s.substr(split));
  if (im == "+") im = "1";
  else if (im == "-") im = "-1";
  return cdouble(parse_real(trim(s.substr(0, split)), line, col),
                 parse_real(im, line, col));
}

struct Entry {
  std::string value;
  int line;
  int col;
};

void fill_triple_real(std::array<double, 3>& dst, const Entry& e,
                      const std::string& key) {
  const auto items = split_list(e.value);
  if (items.size() != 3)
    throw ValidationError(key + " must have exactly 3 entries");
  for (int i = 0; i < 3; ++i) dst[i] = parse_real(items[i], e.line, e.col);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  cfg.config_hash = fnv1a64(text);

  // First pass: tokenize into section-qualified key/value entries.
  std::vector<std::pair<std::string, Entry>> entries;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    ++line_no;
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;

    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;

    if (t.front() == '[') {
      if (t.back() != ']')
        throw ParseError(line_no, static_cast<int>(t.size()),
                         "unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section != "physical" && section != "thresholds")
        throw ValidationError("unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, 1, "expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ParseError(line_no, 1, "missing key");
    Entry e{trim(t.substr(eq + 1)), line_no, static_cast<int>(eq + 2)};
    if (e.value.empty()) throw ParseError(line_no, e.col, "missing value");
    entries.emplace_back(section.empty() ? key : section + "." + key, e);
  }

  bool emit_given = false;
  for (const auto& [key, e] : entries) {
    if (key == "tau_max") {
      cfg.tau_max = parse_real(e.value, e.line, e.col);
      if (!(cfg.tau_max > 0.0))
        throw ValidationError("tau_max must be > 0");
    } else if (key == "tau_points") {
      cfg.tau_points = static_cast<int>(parse_real(e.value, e.line, e.col));
      if (cfg.tau_points < 2)
        throw ValidationError("tau_points must be >= 2");
    } else if (key == "tau_off") {
      cfg.tau_off = parse_real(e.value, e.line, e.col);
      if (cfg.tau_off < 0.0) throw ValidationError("tau_off must be >= 0");
    } else if (key == "gamma_list") {
      cfg.gamma_list.clear();
      for (const auto& item : split_list(e.value)) {
        const double g = parse_real(item, e.line, e.col);
        if (g < 0.0)
          throw ValidationError("gamma_list: gamma_spont must be >= 0");
        cfg.gamma_list.push_back(g);
      }
      if (cfg.gamma_list.empty())
        throw ValidationError("gamma_list must be nonempty");
    } else if (key == "output_path") {
      cfg.output_path = e.value;
    } else if (key == "emit") {
      cfg.emit.clear();
      emit_given = true;
      for (const auto& item : split_list(e.value)) {
        if (item == "couplings") cfg.emit.insert(Emit::kCouplings);
        else if (item == "evolution") cfg.emit.insert(Emit::kEvolution);
        else if (item == "entanglement") cfg.emit.insert(Emit::kEntanglement);
        else if (item == "protocol") cfg.emit.insert(Emit::kProtocol);
        else if (item == "fig2") cfg.emit.insert(Emit::kFig2);
        else if (item == "fig3") cfg.emit.insert(Emit::kFig3);
        else throw ValidationError("emit: unknown target '" + item + "'");
      }
    } else if (key == "physical.g") {
      cfg.physical.g = parse_real(e.value, e.line, e.col);
      if (!(cfg.physical.g > 0.0)) throw ValidationError("g must be > 0");
    } else if (key == "physical.delta") {
      cfg.physical.delta = parse_real(e.value, e.line, e.col);
      if (!(cfg.physical.delta > 0.0))
        throw ValidationError("delta must be > 0");
    } else if (key == "physical.kappa") {
      cfg.physical.kappa = parse_real(e.value, e.line, e.col);
      if (!(cfg.physical.kappa > 0.0))
        throw ValidationError("kappa must be > 0");
    } else if (key == "physical.eps") {
      const auto items = split_list(e.value);
      if (items.size() != 3)
        throw ValidationError("eps must have exactly 3 entries");
      for (int i = 0; i < 3; ++i)
        cfg.physical.eps[i] = parse_complex(items[i], e.line, e.col);
    } else if (key == "physical.phi") {
      fill_triple_real(cfg.physical.phi, e, "phi");
    } else if (key == "physical.gamma_laser") {
      cfg.physical.gamma_laser = parse_real(e.value, e.line, e.col);
      if (!(cfg.physical.gamma_laser > 0.0))
        throw ValidationError("gamma_laser must be > 0");
    } else if (key == "physical.gamma_spont") {
      cfg.physical.gamma_spont = parse_real(e.value, e.line, e.col);
      if (cfg.physical.gamma_spont < 0.0)
        throw ValidationError("gamma_spont must be >= 0");
    } else if (key == "physical.nu") {
      cfg.physical.nu = parse_real(e.value, e.line, e.col);
      if (cfg.physical.nu < 0.0) throw ValidationError("nu must be >= 0");
    } else if (key == "physical.fiber_lengths") {
      fill_triple_real(cfg.physical.fiber_lengths, e, "fiber_lengths");
      for (double l : cfg.physical.fiber_lengths)
        if (l < 0.0) throw ValidationError("fiber_lengths must be >= 0");
    } else if (key == "thresholds.much_greater") {
      cfg.thresholds.much_greater = parse_real(e.value, e.line, e.col);
    } else if (key == "thresholds.much_less") {
      cfg.thresholds.much_less = parse_real(e.value, e.line, e.col);
    } else if (key == "thresholds.approx_rel") {
      cfg.thresholds.approx_rel = parse_real(e.value, e.line, e.col);
    } else {
      throw ValidationError("unknown key '" + key + "'");
    }
  }

  if (!emit_given) cfg.emit = {Emit::kFig2, Emit::kFig3};
  return cfg;
}

}  // namespace entangler
