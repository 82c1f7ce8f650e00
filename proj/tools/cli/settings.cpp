#include "cli/settings.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "restriction_lab/restriction_lab.h"

namespace rlab_cli {
namespace {

enum class Kind { kExperiment, kIndex, kPositive, kCount, kList, kIntList, kFunction, kText };

const std::map<std::string, Kind>& schema() {
  static const std::map<std::string, Kind> keys = {
      {"experiment", Kind::kExperiment},
      {"p", Kind::kIndex},
      {"q", Kind::kIndex},
      {"p_min", Kind::kIndex},
      {"p_max", Kind::kIndex},
      {"q_min", Kind::kIndex},
      {"q_max", Kind::kIndex},
      {"step", Kind::kPositive},
      {"pprime", Kind::kPositive},
      {"rmax", Kind::kPositive},
      {"threshold", Kind::kPositive},
      {"margin", Kind::kPositive},
      {"flat_tolerance", Kind::kPositive},
      {"increment_tolerance", Kind::kPositive},
      {"log_fit_tolerance", Kind::kPositive},
      {"slope_tolerance", Kind::kPositive},
      {"tolerance", Kind::kPositive},
      {"nodes_per_circle", Kind::kCount},
      {"nodes_per_panel", Kind::kCount},
      {"factors", Kind::kCount},
      {"trials", Kind::kCount},
      {"rows", Kind::kCount},
      {"cols", Kind::kCount},
      {"seed", Kind::kCount},
      {"deltas", Kind::kList},
      {"scales", Kind::kList},
      {"radii", Kind::kList},
      {"dims", Kind::kIntList},
      {"g", Kind::kFunction},
      {"h", Kind::kFunction},
      {"output_dir", Kind::kText},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  double v = 0.0;
  if (rlab_parse_scalar(text.c_str(), &v) != RLAB_OK) throw UsageError(rlab_last_error());
  return v;
}

long parse_count(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || *end != '\0' || errno != 0 || v < 0 || v > 2147483647L) {
    throw UsageError("expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

// "b^j..b^k" -> every b^i between j and k inclusive, in the written order.
std::vector<double> parse_power_range(const std::string& lo, const std::string& hi) {
  auto split = [](const std::string& s, double& base, long& exp) {
    const auto caret = s.find('^');
    if (caret == std::string::npos) throw UsageError("range ends must be powers b^k, got '" + s + "'");
    base = parse_number(s.substr(0, caret));
    const std::string e = trim(s.substr(caret + 1));
    char* end = nullptr;
    exp = std::strtol(e.c_str(), &end, 10);
    if (e.empty() || *end != '\0') throw UsageError("bad exponent in '" + s + "'");
  };
  double b1 = 0.0;
  double b2 = 0.0;
  long e1 = 0;
  long e2 = 0;
  split(trim(lo), b1, e1);
  split(trim(hi), b2, e2);
  if (b1 != b2 || !(b1 > 0.0)) throw UsageError("range ends must share a positive base");
  if (std::labs(e2 - e1) > 64) throw UsageError("range is too long");
  std::vector<double> out;
  const long dir = e2 >= e1 ? 1 : -1;
  for (long e = e1;; e += dir) {
    out.push_back(std::pow(b1, static_cast<double>(e)));
    if (e == e2) break;
  }
  return out;
}

}  // namespace

bool is_known_key(const std::string& key) { return schema().count(key) != 0; }

std::vector<double> parse_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return {};
  const auto dots = t.find("..");
  if (dots != std::string::npos) return parse_power_range(t.substr(0, dots), t.substr(dots + 2));
  std::vector<double> out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(trim(item)));
  return out;
}

void validate_setting(const std::string& key, const std::string& value) {
  const auto it = schema().find(key);
  if (it == schema().end()) throw UsageError("unknown key '" + key + "'");
  switch (it->second) {
    case Kind::kExperiment:
      if (std::find(kExperiments.begin(), kExperiments.end(), value) == kExperiments.end()) {
        throw UsageError("unknown experiment '" + value + "'");
      }
      return;
    case Kind::kIndex: {
      rlab_index idx;
      if (rlab_index_parse(value.c_str(), &idx) != RLAB_OK) throw UsageError(rlab_last_error());
      if (idx.infinite) throw UsageError(key + " must be finite");
      return;
    }
    case Kind::kPositive:
      if (!(parse_number(value) > 0.0)) throw UsageError(key + " must be positive");
      return;
    case Kind::kCount:
      parse_count(value);
      return;
    case Kind::kList:
      for (double v : parse_list(value)) {
        if (!(v > 0.0)) throw UsageError(key + " entries must be positive");
      }
      return;
    case Kind::kIntList: {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) parse_count(item);
      return;
    }
    case Kind::kFunction: {
      rlab_function* f = nullptr;
      if (rlab_function_parse(value.c_str(), &f) != RLAB_OK) throw UsageError(rlab_last_error());
      rlab_function_destroy(f);
      return;
    }
    case Kind::kText:
      if (value.empty()) throw UsageError(key + " must not be empty");
      return;
  }
}

Settings parse_config(const std::string& text) {
  Settings out;
  std::stringstream ss(text);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw UsageError(where + "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (out.count(key)) throw UsageError(where + "duplicate key '" + key + "'");
    try {
      validate_setting(key, value);
    } catch (const UsageError& e) {
      throw UsageError(where + e.what());
    }
    out[key] = value;
  }
  return out;
}

Settings load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Settings experiment_defaults(const std::string& experiment) {
  const Settings region = {
      {"p_min", "1"},     {"p_max", "1.6"},         {"q_min", "1"},         {"q_max", "4"},
      {"step", "0.05"},   {"factors", "2"},         {"deltas", "2^-2..2^-7"}, {"scales", "1,2,4,8,16"},
      {"threshold", "0.05"}, {"margin", "0.05"},    {"nodes_per_circle", "0"},
  };
  if (experiment == "region") return region;
  if (experiment == "dimension-check") {
    Settings s = region;
    s.erase("factors");
    s["dims"] = "1,2,3";
    return s;
  }
  if (experiment == "knapp") {
    return {{"p", "1.2"},         {"q", "1"},          {"deltas", "2^-3..2^-8"},  {"factors", "2"},
            {"nodes_per_circle", "0"}, {"slope_tolerance", "0.05"}};
  }
  if (experiment == "dilation") {
    return {{"p", "1"},         {"q", "1"},           {"scales", "1,2,4,8,16"}, {"factors", "2"},
            {"nodes_per_circle", "256"}, {"threshold", "0.05"}, {"margin", "0.05"}};
  }
  if (experiment == "extension-tail") {
    return {{"pprime", "4"},
            {"rmax", "200"},
            {"radii", ""},
            {"factors", "2"},
            {"nodes_per_panel", "24"},
            {"flat_tolerance", "0.1"},
            {"increment_tolerance", "1e-6"},
            {"log_fit_tolerance", "0.05"}};
  }
  if (experiment == "tensor-check") {
    return {{"g", "knapp:1/8"}, {"h", "gaussian:1"}, {"p", "1.2"}, {"q", "2"}, {"nodes_per_circle", "256"},
            {"tolerance", "1e-10"}};
  }
  if (experiment == "minkowski") {
    return {{"p", "1.5"}, {"q", "2"}, {"trials", "1000"}, {"rows", "8"}, {"cols", "8"}, {"seed", "1"}};
  }
  throw UsageError("unknown experiment '" + experiment + "'");
}

Settings resolve(const std::string& experiment, const Settings& config, const Settings& flags,
                 const std::string& env_out) {
  Settings s = experiment_defaults(experiment);
  for (const auto& [k, v] : config) {
    if (s.count(k)) s[k] = v;
  }
  for (const auto& [k, v] : flags) {
    validate_setting(k, v);
    if (k != "output_dir") s[k] = v;
  }
  s["experiment"] = experiment;
  if (flags.count("output_dir")) {
    s["output_dir"] = flags.at("output_dir");
  } else if (!env_out.empty()) {
    s["output_dir"] = env_out;
  } else if (config.count("output_dir")) {
    s["output_dir"] = config.at("output_dir");
  } else {
    s["output_dir"] = "out";
  }
  return s;
}

double get_number(const Settings& s, const std::string& key) { return parse_number(s.at(key)); }

int get_int(const Settings& s, const std::string& key) { return static_cast<int>(parse_count(s.at(key))); }

std::vector<double> get_list(const Settings& s, const std::string& key) { return parse_list(s.at(key)); }

std::vector<int> get_int_list(const Settings& s, const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(s.at(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_count(item)));
  return out;
}

std::string format_plan(const Settings& s) {
  std::string out = "experiment=" + s.at("experiment") + "\n";
  for (const auto& [k, v] : s) {
    if (k != "experiment") out += k + "=" + v + "\n";
  }
  return out;
}

}  // namespace rlab_cli
