#include "nlkg/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace nlkg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& field,
                       const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ": [" << field << "] " << msg;
  throw config_error(os.str());
}

double parse_double(const std::string& origin, int line, const std::string& field,
                    const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    fail(origin, line, field, "expected a number, got '" + v + "'");
  }
}

long parse_int(const std::string& origin, int line, const std::string& field,
               const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    fail(origin, line, field, "expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& origin, int line, const std::string& field,
                const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  fail(origin, line, field, "expected true/false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& origin, int line, const std::string& field,
                               const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(origin, line, field, item));
  }
  if (out.empty()) fail(origin, line, field, "expected a comma-separated list");
  return out;
}

template <typename T, std::size_t N>
std::array<T, N> parse_vec(const std::string& origin, int line, const std::string& field,
                           const std::string& v) {
  std::array<T, N> out{};
  std::stringstream ss(v);
  std::string item;
  std::size_t i = 0;
  while (ss >> item) {
    if (i >= N) fail(origin, line, field, "too many components");
    if constexpr (std::is_integral_v<T>)
      out[i++] = static_cast<T>(parse_int(origin, line, field, item));
    else
      out[i++] = parse_double(origin, line, field, item);
  }
  if (i == 0) fail(origin, line, field, "expected components");
  return out;
}

Scenario parse_scenario(const std::string& origin, int line, const std::string& v) {
  if (v == "evolve") return Scenario::Evolve;
  if (v == "scatter") return Scenario::Scatter;
  if (v == "kernel") return Scenario::Kernel;
  if (v == "basis") return Scenario::Basis;
  if (v == "born") return Scenario::Born;
  if (v == "verify") return Scenario::Verify;
  fail(origin, line, "run.scenario", "unknown scenario '" + v + "'");
}

ProfileSpec::Kind parse_kind(const std::string& origin, int line, const std::string& field,
                             const std::string& v) {
  if (v == "gaussian") return ProfileSpec::Kind::Gaussian;
  if (v == "mode") return ProfileSpec::Kind::Mode;
  if (v == "hermite") return ProfileSpec::Kind::Hermite;
  if (v == "random") return ProfileSpec::Kind::RandomDraw;
  if (v == "file") return ProfileSpec::Kind::File;
  fail(origin, line, field, "unknown preset '" + v + "'");
}

void set_profile_key(ProfileSpec& p, const std::string& origin, int line,
                     const std::string& section, const std::string& key, const std::string& v) {
  const std::string field = section + "." + key;
  if (key == "preset")
    p.kind = parse_kind(origin, line, field, v);
  else if (key == "amplitude")
    p.amplitude = parse_double(origin, line, field, v);
  else if (key == "width")
    p.width = parse_double(origin, line, field, v);
  else if (key == "center")
    p.center = parse_vec<double, 3>(origin, line, field, v);
  else if (key == "velocity")
    p.velocity = parse_vec<double, 3>(origin, line, field, v);
  else if (key == "index")
    p.index = parse_vec<int, 3>(origin, line, field, v);
  else if (key == "seed")
    p.seed = static_cast<std::uint64_t>(parse_int(origin, line, field, v));
  else if (key == "corr_length")
    p.corr_length = parse_double(origin, line, field, v);
  else if (key == "path")
    p.path = v;
  else
    fail(origin, line, field, "unknown key");
}

void validate(const RunConfig& c, const std::string& origin) {
  try {
    (void)c.grid();
  } catch (const std::invalid_argument& e) {
    throw config_error(origin + ": [grid] " + e.what());
  }
  if (!(c.integrator.dt > 0.0)) throw config_error(origin + ": [integrator.dt] must be > 0");
  if (c.integrator.order != 2 && c.integrator.order != 4)
    throw config_error(origin + ": [integrator.order] must be 2 or 4");
  if (!(c.T > 0.0)) throw config_error(origin + ": [matching.T] must be > 0");
  if (c.threads < 1) throw config_error(origin + ": [run.threads] must be >= 1");
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(origin, line, s, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(origin, line, section, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    const std::string field = section + "." + key;

    if (section == "grid") {
      if (key == "dim") cfg.dim = static_cast<int>(parse_int(origin, line, field, val));
      else if (key == "n") cfg.n = static_cast<int>(parse_int(origin, line, field, val));
      else if (key == "box_length") cfg.box_length = parse_double(origin, line, field, val);
      else if (key == "mass") cfg.mass = parse_double(origin, line, field, val);
      else if (key == "coupling") cfg.coupling = parse_double(origin, line, field, val);
      else fail(origin, line, field, "unknown key");
    } else if (section == "integrator") {
      if (key == "dt") cfg.integrator.dt = parse_double(origin, line, field, val);
      else if (key == "order") cfg.integrator.order = static_cast<int>(parse_int(origin, line, field, val));
      else if (key == "dealias") cfg.integrator.dealias = parse_bool(origin, line, field, val);
      else fail(origin, line, field, "unknown key");
    } else if (section == "matching") {
      if (key == "T") cfg.T = parse_double(origin, line, field, val);
      else if (key == "cauchy_check") cfg.cauchy_check = parse_bool(origin, line, field, val);
      else fail(origin, line, field, "unknown key");
    } else if (section == "run") {
      if (key == "scenario") cfg.scenario = parse_scenario(origin, line, val);
      else if (key == "out_dir") cfg.out_dir = val;
      else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(origin, line, field, val));
      else if (key == "threads") cfg.threads = static_cast<int>(parse_int(origin, line, field, val));
      else fail(origin, line, field, "unknown key");
    } else if (section == "profile") {
      set_profile_key(cfg.profile, origin, line, section, key, val);
    } else if (section == "profile2") {
      set_profile_key(cfg.profile2, origin, line, section, key, val);
    } else if (section == "evolve") {
      if (key == "t_final") cfg.t_final = parse_double(origin, line, field, val);
      else if (key == "stride") cfg.snapshot_stride = static_cast<int>(parse_int(origin, line, field, val));
      else fail(origin, line, field, "unknown key");
    } else if (section == "scatter") {
      if (key == "t_intertwine") cfg.t_intertwine = parse_double(origin, line, field, val);
      else if (key == "lambda_sweep") cfg.lambda_sweep = parse_list(origin, line, field, val);
      else fail(origin, line, field, "unknown key");
    } else if (section == "kernel") {
      if (key == "t1") cfg.t1 = parse_double(origin, line, field, val);
      else if (key == "s1") cfg.s1 = parse_double(origin, line, field, val);
      else if (key == "t2") cfg.t2 = parse_double(origin, line, field, val);
      else if (key == "s2") cfg.s2 = parse_double(origin, line, field, val);
      else if (key == "smear") cfg.smear_path = val;
      else fail(origin, line, field, "unknown key");
    } else if (section == "born") {
      if (key == "eps_list") cfg.eps_list = parse_list(origin, line, field, val);
      else fail(origin, line, field, "unknown key");
    } else {
      fail(origin, line, section.empty() ? key : section, "unknown section");
    }
  }
  validate(cfg, origin);
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw config_error("cannot open config file " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str(), path.string());
}

ProfileSpec parse_profile_spec(const std::string& text) {
  ProfileSpec p;
  const auto colon = text.find(':');
  const std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  if (head != "gaussian" && head != "mode" && head != "hermite" && head != "random") {
    p.kind = ProfileSpec::Kind::File;
    p.path = text;
    return p;
  }
  p.kind = parse_kind("<arg>", 1, "profile", head);
  if (colon == std::string::npos) return p;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw config_error("profile spec: expected key=value in '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    std::string val = trim(item.substr(eq + 1));
    // allow "index=2 1 0" style vectors with spaces
    set_profile_key(p, "<arg>", 1, "profile", key, val);
  }
  return p;
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Evolve: return "evolve";
    case Scenario::Scatter: return "scatter";
    case Scenario::Kernel: return "kernel";
    case Scenario::Basis: return "basis";
    case Scenario::Born: return "born";
    case Scenario::Verify: return "verify";
  }
  return "?";
}

}  // namespace nlkg
