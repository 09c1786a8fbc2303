#include "softbte/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include <nlohmann/json.hpp>

#include "softbte/errors.hpp"

namespace softbte {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string print_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(const std::string& s) {
  double x = 0.0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc() || p != end || s.empty()) throw ConfigError("cannot parse '" + s + "' as a number");
  return x;
}

long long parse_integer(const std::string& s) {
  long long x = 0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc() || p != end || s.empty()) throw ConfigError("cannot parse '" + s + "' as an integer");
  return x;
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  throw ConfigError("cannot parse '" + s + "' as a boolean");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_number(item));
  }
  return out;
}

std::string print_list(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ", ") + print_number(x);
  return out;
}

struct Field {
  std::string key;
  ValueKind kind;
  std::function<void(const std::string&)> set;
  std::function<std::string()> get;
};

Field number(std::string key, double& ref) {
  return {std::move(key), ValueKind::kNumber, [&ref](const std::string& s) { ref = parse_number(s); },
          [&ref] { return print_number(ref); }};
}

template <class Int>
Field integer(std::string key, Int& ref) {
  return {std::move(key), ValueKind::kInteger,
          [&ref](const std::string& s) {
            const long long v = parse_integer(s);
            if (v < 0 && std::is_unsigned_v<Int>) throw ConfigError("must be non-negative");
            ref = static_cast<Int>(v);
          },
          [&ref] { return std::to_string(ref); }};
}

Field boolean(std::string key, bool& ref) {
  return {std::move(key), ValueKind::kBoolean, [&ref](const std::string& s) { ref = parse_bool(s); },
          [&ref] { return std::string(ref ? "true" : "false"); }};
}

template <class E>
Field choice(std::string key, E& ref, std::vector<std::pair<std::string, E>> names) {
  auto set = [&ref, names](const std::string& s) {
    for (const auto& [n, v] : names)
      if (n == s) {
        ref = v;
        return;
      }
    std::string valid;
    for (const auto& nv : names) valid += (valid.empty() ? "" : ", ") + nv.first;
    throw ConfigError("unknown value '" + s + "' (expected one of: " + valid + ")");
  };
  auto get = [&ref, names] {
    for (const auto& [n, v] : names)
      if (v == ref) return n;
    return std::string("?");
  };
  return {std::move(key), ValueKind::kText, set, get};
}

Field list(std::string key, std::vector<double>& ref) {
  return {std::move(key), ValueKind::kNumberList, [&ref](const std::string& s) { ref = parse_list(s); },
          [&ref] { return print_list(ref); }};
}

Field text(std::string key, std::string& ref) {
  return {std::move(key), ValueKind::kText, [&ref](const std::string& s) { ref = s; }, [&ref] { return ref; }};
}

std::vector<Field> fields(RunConfig& c) {
  auto& m = c.sim;
  auto& v = c.verify;
  std::vector<Field> f;
  f.push_back(number("model.gamma", m.model.gamma));
  f.push_back(number("model.eps_cutoff", m.model.eps_cutoff));
  f.push_back(choice("model.angular_model", m.model.angular_model, {{"abs-cos", AngularModel::kAbsCos}}));
  f.push_back(choice("model.cutoff_shape", m.model.cutoff_shape, {{"cubic-smoothstep", CutoffShape::kCubicSmoothstep}}));
  f.push_back(number("weights.q", m.weights.q));
  f.push_back(number("weights.vartheta", m.weights.vartheta));
  f.push_back(number("weights.beta", m.weights.beta));
  f.push_back(number("weights.s0", m.weights.s0));
  f.push_back(number("weights.p", v.gamma.p));
  f.push_back(number("grid.radius", m.radius));
  f.push_back(integer("grid.n", m.n_per_dim));
  f.push_back(choice("collision.interpolation", m.collision.interpolation,
                     {{"maxwell-weighted", InterpolationMode::kMaxwellWeighted}, {"plain", InterpolationMode::kPlain}}));
  f.push_back(choice("collision.boundary", m.collision.boundary,
                     {{"extend", BoundaryMode::kExtend}, {"drop", BoundaryMode::kDrop}}));
  f.push_back(integer("collision.sphere_points", m.collision.sphere_points));
  f.push_back(choice("layout.kind", m.layout.kind, {{"homogeneous", LayoutKind::kHomogeneous}, {"slab", LayoutKind::kSlab}}));
  f.push_back(integer("layout.nx", m.layout.nx));
  f.push_back(number("layout.period", m.layout.period));
  f.push_back(choice("initial.kind", m.initial.kind,
                     {{"equilibrium", InitialKind::kEquilibrium},
                      {"bump", InitialKind::kBump},
                      {"shifted-maxwellian", InitialKind::kShiftedMaxwellian}}));
  f.push_back(number("initial.amplitude", m.initial.amplitude));
  f.push_back(number("initial.mode", m.initial.mode));
  f.push_back(number("initial.temperature", m.initial.temperature));
  f.push_back(boolean("initial.conserve", m.initial.conserve));
  f.push_back(number("time.dt", m.dt));
  f.push_back(number("time.t_end", m.t_end));
  f.push_back(choice("stepper.scheme", m.stepper.scheme, {{"picard", Scheme::kPicard}, {"h-form", Scheme::kHForm}}));
  f.push_back(integer("stepper.inner_iterations", m.stepper.inner_iterations));
  f.push_back(boolean("stepper.conservation_project", m.stepper.conservation_project));
  f.push_back(boolean("stepper.decay_only", m.stepper.decay_only));
  f.push_back(number("fit.window", c.fit_window));
  f.push_back(integer("run.seed", m.seed));
  f.push_back(number("run.instability_factor", m.instability_factor));
  f.push_back(text("output.dir", c.out_dir));
  f.push_back(number("verify.nu.max_speed", v.nu.max_speed));
  f.push_back(integer("verify.nu.points", v.nu.points));
  f.push_back(integer("verify.nu.refine", v.nu.refine));
  f.push_back(integer("verify.k1.pairs", v.k1_pairs));
  f.push_back(integer("verify.k2.train", v.k2.train_bumps));
  f.push_back(integer("verify.k2.holdout", v.k2.holdout_bumps));
  f.push_back(number("verify.k2.width", v.k2.width));
  f.push_back(number("verify.k2.s2", v.k2.s2));
  f.push_back(list("verify.klowcut.eps", v.eps_grid));
  f.push_back(integer("verify.kchi.train", v.kchi.train));
  f.push_back(integer("verify.kchi.holdout", v.kchi.holdout));
  f.push_back(number("verify.kchi.max_speed", v.kchi.max_speed));
  f.push_back(integer("verify.gamma.train", v.gamma.train));
  f.push_back(integer("verify.gamma.holdout", v.gamma.holdout));
  f.push_back(integer("verify.entropy.runs", v.entropy_runs));
  f.push_back(number("verify.entropy.amplitude", v.entropy_amplitude));
  f.push_back(number("verify.entropy.t_end", v.entropy_t_end));
  f.push_back(number("verify.entropy.floor", v.entropy.floor));
  f.push_back(boolean("verify.entropy.adversarial", v.entropy_adversarial));
  f.push_back(integer("verify.decay.n", v.decay_n_per_dim));
  f.push_back(number("verify.decay.dt", v.decay_dt));
  f.push_back(number("verify.decay.t_end", v.decay_t_end));
  f.push_back(number("verify.decay.amplitude", v.decay_amplitude));
  f.push_back(list("sweep.gamma", c.sweep.gammas));
  f.push_back(list("sweep.vartheta", c.sweep.varthetas));
  return f;
}

// Applies key/value pairs; `where` renders the location of an entry for diagnostics.
void apply(RunConfig& config, const std::vector<std::pair<std::string, std::string>>& entries,
           const std::function<std::string(std::size_t)>& where) {
  auto table = fields(config);
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [key, value] = entries[i];
    auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return f.key == key; });
    if (it == table.end()) throw ConfigError(where(i) + "unknown key '" + key + "'");
    if (auto [prev, fresh] = seen.emplace(key, i); !fresh)
      throw ConfigError(where(i) + "duplicate key '" + key + "' (first set at " + where(prev->second) + ")");
    try {
      it->set(value);
    } catch (const ConfigError& e) {
      throw ConfigError(where(i) + key + ": " + e.what());
    }
  }
  config.validate();
  config.verify.decay_fit = config.fit_options();
}

void flatten_json(const nlohmann::json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_json(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    std::string s;
    for (const auto& x : j) {
      if (!x.is_number()) throw ConfigError(prefix + ": arrays must hold numbers");
      s += (s.empty() ? "" : ",") + print_number(x.get<double>());
    }
    out.emplace_back(prefix, s);
    return;
  }
  if (j.is_boolean()) {
    out.emplace_back(prefix, j.get<bool>() ? "true" : "false");
  } else if (j.is_number_integer()) {
    out.emplace_back(prefix, std::to_string(j.get<long long>()));
  } else if (j.is_number()) {
    out.emplace_back(prefix, print_number(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    throw ConfigError(prefix + ": null is not a valid value");
  }
}

}  // namespace

void RunConfig::validate() const {
  sim.validate();
  if (verify.gamma.p > 0.0) validate_p(verify.gamma.p, sim.model.gamma);
  if (!(fit_window >= 0.0 && fit_window < 1.0)) throw ConfigError("fit.window must lie in [0, 1)");
  if (verify.decay_n_per_dim < 8 || verify.decay_n_per_dim > 64) throw ConfigError("verify.decay.n must lie in [8, 64]");
  if (!(verify.decay_dt > 0.0) || !(verify.decay_t_end > 0.0)) throw ConfigError("verify.decay.dt and verify.decay.t_end must be positive");
  if (!(verify.entropy_t_end > 0.0)) throw ConfigError("verify.entropy.t_end must be positive");
  if (verify.entropy_runs < 1) throw ConfigError("verify.entropy.runs must be at least 1");
  if (verify.eps_grid.size() < 2) throw ConfigError("verify.klowcut.eps needs at least two values");
  for (double e : verify.eps_grid)
    if (!(e > 0.0 && e < 1.0)) throw ConfigError("verify.klowcut.eps values must lie in (0, 1)");
  if (out_dir.empty()) throw ConfigError("output.dir must not be empty");
}

DecayFitOptions RunConfig::fit_options() const {
  DecayFitOptions o = verify.decay_fit;
  o.drop_fraction = fit_window;
  return o;
}

RunConfig parse_run_config(std::string_view text, std::string_view source) {
  const std::string src(source);
  RunConfig config;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(src + ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) throw ConfigError(src + ": top-level JSON value must be an object");
    std::vector<std::pair<std::string, std::string>> entries;
    flatten_json(j, "", entries);
    apply(config, entries, [&](std::size_t i) { return src + ": field " + entries[i].first + ": "; });
    return config;
  }

  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::size_t> lines;
  std::istringstream is{std::string(text)};
  std::string line;
  for (std::size_t n = 1; std::getline(is, line); ++n) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(src + ":" + std::to_string(n) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw ConfigError(src + ":" + std::to_string(n) + ": missing key before '='");
    entries.emplace_back(key, trim(std::string_view(t).substr(eq + 1)));
    lines.push_back(n);
  }
  apply(config, entries, [&](std::size_t i) { return src + ":" + std::to_string(lines[i]) + ": "; });
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), path.string());
}

std::vector<ConfigEntry> flatten(const RunConfig& config) {
  RunConfig copy = config;
  std::vector<ConfigEntry> out;
  for (const auto& f : fields(copy)) out.push_back({f.key, f.kind, f.get()});
  return out;
}

}  // namespace softbte
