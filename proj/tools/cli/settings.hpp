#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlab_cli {

inline const std::vector<std::string> kExperiments = {"region",       "knapp",           "dilation", "extension-tail",
                                                      "tensor-check", "dimension-check", "minkowski"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolved key=value settings for one run. Keys use underscores.
using Settings = std::map<std::string, std::string>;

// Throws UsageError with "line N: ..." on unknown keys, malformed lines or
// values that fail validation.
Settings load_config(const std::string& path);
Settings parse_config(const std::string& text);

// Throws UsageError when `value` is not acceptable for `key`.
void validate_setting(const std::string& key, const std::string& value);
bool is_known_key(const std::string& key);

// Keys that `experiment` reads, with their defaults.
Settings experiment_defaults(const std::string& experiment);

// defaults < config < flags. Config keys the experiment does not read are
// dropped. `env_out` is RESTRICTION_LAB_OUT (may be empty).
Settings resolve(const std::string& experiment, const Settings& config, const Settings& flags,
                 const std::string& env_out);

// Typed accessors. Lists accept "a,b,c" or "b^j..b^k" (every power between).
double get_number(const Settings& s, const std::string& key);
int get_int(const Settings& s, const std::string& key);
std::vector<double> get_list(const Settings& s, const std::string& key);
std::vector<int> get_int_list(const Settings& s, const std::string& key);
std::vector<double> parse_list(const std::string& text);

std::string format_plan(const Settings& s);

}  // namespace rlab_cli
