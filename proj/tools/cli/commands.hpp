#pragma once

#include <ostream>
#include <stdexcept>

#include "cli/settings.hpp"

namespace rlab_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagreement = 2;

// A library call failed; carries rlab_last_error().
class LibraryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs settings.at("experiment"), writes its files under output_dir and
// prints a summary. Returns kExitOk or kExitDisagreement.
int run_experiment(const Settings& settings, std::ostream& out);

}  // namespace rlab_cli
