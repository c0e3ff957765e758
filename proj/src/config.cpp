#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "wavekin/cli_io.hpp"
#include "wavekin/error.hpp"

namespace wavekin {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* want) {
  throw ValidationError("config key '" + key + "': cannot read '" + value + "' as " + want);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text, const char* want) {
  const std::string v = trim(text);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, text, want);
  return out;
}

int to_int(const std::string& k, const std::string& v) { return parse_number<int>(k, v, "an integer"); }
double to_double(const std::string& k, const std::string& v) {
  const double d = parse_number<double>(k, v, "a number");
  if (!std::isfinite(d)) bad_value(k, v, "a finite number");
  return d;
}

bool to_bool(const std::string& k, const std::string& v) {
  const std::string t = trim(v);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  bad_value(k, v, "a boolean");
}

std::vector<double> to_doubles(const std::string& k, const std::string& v) {
  std::vector<double> out;
  if (trim(v).empty()) return out;
  for (const auto& item : split(v, ',')) out.push_back(to_double(k, item));
  return out;
}

std::string join(const std::vector<double>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_double(v[i]);
  }
  return out;
}

struct Key {
  const char* name;
  std::function<void(RunConfig&, const std::string&, const std::string&)> set;
  std::function<std::optional<std::string>(const RunConfig&)> get;
};

std::optional<std::string> opt_int(const std::optional<int>& v) {
  if (!v) return std::nullopt;
  return std::to_string(*v);
}

const std::vector<Key>& keys() {
  using C = RunConfig;
  using S = std::string;
  static const std::vector<Key> table = {
      {"dimension", [](C& c, const S& k, const S& v) { c.dimension = to_int(k, v); },
       [](const C& c) { return std::optional(std::to_string(c.dimension)); }},
      {"N", [](C& c, const S& k, const S& v) { c.N = to_int(k, v); },
       [](const C& c) { return std::optional(std::to_string(c.N)); }},
      {"N_r", [](C& c, const S& k, const S& v) { c.N_r = to_int(k, v); },
       [](const C& c) { return opt_int(c.N_r); }},
      {"N_s", [](C& c, const S& k, const S& v) { c.N_s = to_int(k, v); },
       [](const C& c) { return opt_int(c.N_s); }},
      {"N_sig", [](C& c, const S& k, const S& v) { c.N_sig = to_int(k, v); },
       [](const C& c) { return opt_int(c.N_sig); }},
      {"S", [](C& c, const S& k, const S& v) { c.S = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.S)); }},
      {"L_factor", [](C& c, const S& k, const S& v) { c.L_factor = to_double(k, v); },
       [](const C& c) -> std::optional<S> {
         if (!c.L_factor) return std::nullopt;
         return format_double(*c.L_factor);
       }},
      {"conv_mode", [](C& c, const S&, const S& v) { c.conv_mode = conv_mode_from_string(trim(v)); },
       [](const C& c) { return std::optional(to_string(c.conv_mode)); }},
      {"dt", [](C& c, const S& k, const S& v) { c.dt = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.dt)); }},
      {"t_end", [](C& c, const S& k, const S& v) { c.t_end = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.t_end)); }},
      {"record_every", [](C& c, const S& k, const S& v) { c.record_every = to_int(k, v); },
       [](const C& c) { return std::optional(std::to_string(c.record_every)); }},
      {"snapshot_every", [](C& c, const S& k, const S& v) { c.snapshot_every = to_int(k, v); },
       [](const C& c) { return std::optional(std::to_string(c.snapshot_every)); }},
      {"threads", [](C& c, const S& k, const S& v) { c.threads = to_int(k, v); },
       [](const C& c) { return std::optional(std::to_string(c.threads)); }},
      {"seed", [](C& c, const S& k, const S& v) {
         c.seed = parse_number<std::uint64_t>(k, v, "an unsigned integer");
       },
       [](const C& c) { return std::optional(std::to_string(c.seed)); }},
      {"output", [](C& c, const S&, const S& v) { c.output = trim(v); },
       [](const C& c) { return std::optional(c.output); }},
      {"ic.kind", [](C& c, const S& k, const S& v) {
         const S kind = trim(v);
         for (const char* ok : {"rayleigh_jeans", "bi_maxwellian", "delta_ring", "kz", "gaussian", "zero"}) {
           if (kind == ok) {
             c.ic.kind = kind;
             return;
           }
         }
         bad_value(k, v, "an initial-condition kind (rayleigh_jeans, bi_maxwellian, delta_ring, kz, gaussian, zero)");
       },
       [](const C& c) { return std::optional(c.ic.kind); }},
      {"ic.mu", [](C& c, const S& k, const S& v) { c.ic.mu = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.mu)); }},
      {"ic.nu", [](C& c, const S& k, const S& v) { c.ic.nu = to_doubles(k, v); },
       [](const C& c) { return std::optional(join(c.ic.nu)); }},
      {"ic.xi", [](C& c, const S& k, const S& v) { c.ic.xi = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.xi)); }},
      {"ic.rho1", [](C& c, const S& k, const S& v) { c.ic.bimax.rho1 = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.bimax.rho1)); }},
      {"ic.rho2", [](C& c, const S& k, const S& v) { c.ic.bimax.rho2 = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.bimax.rho2)); }},
      {"ic.T1", [](C& c, const S& k, const S& v) { c.ic.bimax.T1 = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.bimax.T1)); }},
      {"ic.T2", [](C& c, const S& k, const S& v) { c.ic.bimax.T2 = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.bimax.T2)); }},
      {"ic.radii", [](C& c, const S& k, const S& v) {
         c.ic.radii.clear();
         if (trim(v).empty()) return;
         for (const auto& item : split(v, ',')) {
           const auto parts = split(item, ':');
           if (parts.size() != 2) bad_value(k, v, "a list of radius:coefficient pairs");
           c.ic.radii.push_back({to_double(k, parts[0]), to_double(k, parts[1])});
         }
       },
       [](const C& c) {
         S out;
         for (std::size_t i = 0; i < c.ic.radii.size(); ++i) {
           if (i) out += ',';
           out += format_double(c.ic.radii[i].radius) + ":" + format_double(c.ic.radii[i].coefficient);
         }
         return std::optional(out);
       }},
      {"ic.u", [](C& c, const S& k, const S& v) { c.ic.u = to_double(k, v); },
       [](const C& c) -> std::optional<S> {
         if (!c.ic.u) return std::nullopt;
         return format_double(*c.ic.u);
       }},
      {"ic.theta", [](C& c, const S& k, const S& v) {
         const S t = trim(v);
         if (t == "7/6") c.ic.theta = kKZInverseCascade;
         else if (t == "3/2") c.ic.theta = kKZDirectCascade;
         else c.ic.theta = to_double(k, v);
       },
       [](const C& c) { return std::optional(format_double(c.ic.theta)); }},
      {"ic.eps", [](C& c, const S& k, const S& v) { c.ic.eps = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.eps)); }},
      {"ic.center", [](C& c, const S& k, const S& v) {
         c.ic.centers.clear();
         for (const auto& item : split(v, ';')) c.ic.centers.push_back(to_doubles(k, item));
         if (c.ic.centers.empty()) c.ic.centers.push_back({});
       },
       [](const C& c) {
         S out;
         for (std::size_t i = 0; i < c.ic.centers.size(); ++i) {
           if (i) out += ';';
           out += join(c.ic.centers[i]);
         }
         return std::optional(out);
       }},
      {"ic.T", [](C& c, const S& k, const S& v) { c.ic.T = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.T)); }},
      {"ic.rho", [](C& c, const S& k, const S& v) { c.ic.rho = to_double(k, v); },
       [](const C& c) { return std::optional(format_double(c.ic.rho)); }},
      {"bench.sizes", [](C& c, const S& k, const S& v) {
         c.bench_sizes.clear();
         for (const auto& item : split(v, ',')) c.bench_sizes.push_back(to_int(k, item));
       },
       [](const C& c) {
         S out;
         for (std::size_t i = 0; i < c.bench_sizes.size(); ++i) {
           if (i) out += ',';
           out += std::to_string(c.bench_sizes[i]);
         }
         return std::optional(out);
       }},
      {"bench.repeats", [](C& c, const S& k, const S& v) { c.bench_repeats = to_int(k, v); },
       [](const C& c) { return std::optional(std::to_string(c.bench_repeats)); }},
      {"stationary.zero_field",
       [](C& c, const S& k, const S& v) { c.stationary_zero_field = to_bool(k, v); },
       [](const C& c) { return std::optional(S(c.stationary_zero_field ? "true" : "false")); }},
      {"compare.zero_input",
       [](C& c, const S& k, const S& v) { c.compare_zero_input = to_bool(k, v); },
       [](const C& c) { return std::optional(S(c.compare_zero_input ? "true" : "false")); }},
  };
  return table;
}

}  // namespace

void set_config_value(RunConfig& config, const std::string& key, const std::string& value) {
  const std::string k = trim(key);
  for (const Key& entry : keys()) {
    if (k == entry.name) {
      entry.set(config, k, value);
      return;
    }
  }
  throw ValidationError("unknown config key '" + k + "'");
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ValidationError("override '" + assignment + "' is not key=value");
  set_config_value(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

RunConfig parse_config(std::istream& in, const std::string& source, RunConfig base) {
  RunConfig config = std::move(base);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(source + ":" + std::to_string(lineno) + ": expected key = value");
    }
    try {
      set_config_value(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  return parse_config(in, path, std::move(base));
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  for (const Key& entry : keys()) {
    if (auto v = entry.get(config)) out += std::string(entry.name) + " = " + *v + "\n";
  }
  return out;
}

}  // namespace wavekin
