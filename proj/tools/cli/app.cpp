#include "cli/app.hpp"

#include <map>
#include <memory>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/settings.hpp"

namespace rlab_cli {
namespace {

const std::map<std::string, std::string>& key_help() {
  static const std::map<std::string, std::string> help = {
      {"p", "Lebesgue index p (decimal, fraction or b^k)"},
      {"q", "Lebesgue index q"},
      {"p_min", "smallest p of the grid"},
      {"p_max", "largest p of the grid"},
      {"q_min", "smallest q of the grid"},
      {"q_max", "largest q of the grid"},
      {"step", "grid step for p and q"},
      {"factors", "number of circle factors n"},
      {"dims", "comma list of n values"},
      {"deltas", "Knapp widths, a,b,c or 2^-j..2^-k"},
      {"scales", "dilation scales lambda, a,b,c or 2^j..2^k"},
      {"threshold", "blow-up slope threshold"},
      {"margin", "boundary margin in the (p, q) plane"},
      {"nodes_per_circle", "grid nodes per circle (0 = max(256, ceil(16 pi / delta_min)))"},
      {"slope_tolerance", "allowed |fitted - expected| slope"},
      {"pprime", "extension exponent p'"},
      {"rmax", "largest radius; dyadic radii down to 3 are used"},
      {"radii", "explicit increasing radii (overrides rmax)"},
      {"nodes_per_panel", "Gauss-Legendre nodes per radial panel"},
      {"flat_tolerance", "|shell exponent| treated as flat"},
      {"increment_tolerance", "relative increment treated as converged"},
      {"log_fit_tolerance", "relative residual allowed for the log fit"},
      {"g", "first factor, e.g. knapp:1/8 or gaussian:1"},
      {"h", "second factor"},
      {"tolerance", "largest acceptable relative error"},
      {"trials", "number of random arrays"},
      {"rows", "surface sample count per array"},
      {"cols", "ambient sample count per array"},
      {"seed", "random seed"},
  };
  return help;
}

const std::map<std::string, std::string>& csv_columns() {
  static const std::map<std::string, std::string> cols = {
      {"region", "region.csv: p,q,knapp_growth,dilation_growth,status,predicted_admissible,agrees; region.svg"},
      {"knapp", "knapp.csv: delta,ratio; knapp.svg"},
      {"dilation", "dilation.csv: lambda,ratio; dilation.svg"},
      {"extension-tail", "extension_tail.csv: pprime,radius,truncated_norm"},
      {"tensor-check", "tensor_check.csv: g,h,p,q,nodes_per_circle,relative_error"},
      {"dimension-check", "dimension_check.csv: p,q,status_n<n> per n"},
      {"minkowski", "minkowski.csv: trial,lhs,rhs,holds"},
  };
  return cols;
}

std::string flag_name(const std::string& key) {
  if (key == "nodes_per_circle") return "--nodes";
  // Single letters would collide with -h.
  if (key == "g" || key == "h") return "--factor-" + key;
  std::string f = "--" + key;
  for (char& c : f) {
    if (c == '_') c = '-';
  }
  return f;
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d = {
      {"region", "Classify a (p, q) grid with the Knapp and dilation families"},
      {"knapp", "Knapp cap sweep and log-log slope fit"},
      {"dilation", "Annular dilation sweep probing the p < 4/3 constraint"},
      {"extension-tail", "L^{p'} tail probe of the extension of F = 1"},
      {"tensor-check", "Check that torus ratios of g (x) h factor into circle ratios"},
      {"dimension-check", "Compare region classifications across n"},
      {"minkowski", "Random mixed-norm Minkowski inequality checks"},
  };
  return d;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& env_out) {
  CLI::App app{"Numerical checks of Fourier restriction to the torus T^n in R^{2n}", "restriction-lab"};
  app.footer("Exit codes: 0 success, 1 usage or runtime error, 2 disagreement with the predicted region.\n"
             "Output directory: --out, else RESTRICTION_LAB_OUT, else config output_dir, else ./out.");
  std::string config_path;
  std::string out_dir;
  bool print_plan = false;
  app.add_option("--config", config_path, "key=value config file (# comments); flags override it");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--print-plan", print_plan, "print the resolved plan and exit");
  app.require_subcommand(0, 1);

  struct Bound {
    CLI::Option* option;
    std::string key;
  };
  std::map<std::string, std::vector<Bound>> bound;
  // Stable storage for option values.
  std::vector<std::unique_ptr<std::string>> storage;
  for (const auto& name : kExperiments) {
    CLI::App* sub = app.add_subcommand(name, descriptions().at(name));
    sub->fallthrough();
    sub->footer("CSV: " + csv_columns().at(name));
    for (const auto& [key, def] : experiment_defaults(name)) {
      storage.push_back(std::make_unique<std::string>());
      std::string help = key_help().at(key);
      if (!def.empty()) help += " [default " + def + "]";
      bound[name].push_back({sub->add_option(flag_name(key), *storage.back(), help), key});
    }
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Settings config;
    if (!config_path.empty()) config = load_config(config_path);
    std::string experiment;
    Settings flags;
    const auto subs = app.get_subcommands();
    if (!subs.empty()) {
      experiment = subs.front()->get_name();
      for (const auto& b : bound[experiment]) {
        if (b.option->count() > 0) flags[b.key] = b.option->as<std::string>();
      }
    } else if (config.count("experiment")) {
      experiment = config.at("experiment");
    } else {
      err << "error: no experiment given (use a subcommand or experiment= in the config)\n" << app.help();
      return kExitError;
    }
    if (!out_dir.empty()) flags["output_dir"] = out_dir;
    const Settings plan = resolve(experiment, config, flags, env_out);
    if (print_plan) {
      out << format_plan(plan);
      return kExitOk;
    }
    return run_experiment(plan, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const LibraryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace rlab_cli
