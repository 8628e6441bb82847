// lacost: location-management signaling cost models from the command line.
//
//   lacost betas    --scenario s.txt [--algorithm simple|advanced|both]
//   lacost costs    --scenario s.txt [--reading literal|principled]
//   lacost sweep    --param F --values 0.2,0.8,1.0,1.5
//   lacost figure   8 --out data/
//   lacost simulate --seed 7
//   lacost dump-defaults
//
// Exit codes: 0 success, 1 runtime/numeric failure, 2 usage/config error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lacost/error.hpp"
#include "lacost/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Errors raised while reading inputs are usage errors whatever their kind.
struct InputError {
  std::string message;
};

void emit(const lacost::CsvTable& table, const std::optional<fs::path>& out_dir,
          const std::string& file_name) {
  if (!out_dir) {
    table.write(std::cout);
    return;
  }
  fs::create_directories(*out_dir);
  const fs::path path = *out_dir / file_name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lacost::Error(lacost::ErrorKind::Config, "cannot write " + path.string());
  table.write(out);
  std::cerr << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Location management signaling cost models"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string scenario_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string algorithm;
  std::string reading;

  app.add_option("--scenario", scenario_path, "Scenario file (key = value)")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Write CSV files into this directory instead of stdout");
  app.add_option("--seed", seed, "Override sim.seed");
  app.add_option("--algorithm", algorithm, "Tally algorithm: simple, advanced or both");
  app.add_option("--reading", reading, "Paging reading: literal or principled");

  auto* betas = app.add_subcommand("betas", "Boundary tallies and beta parameters");
  auto* costs = app.add_subcommand("costs", "Classical vs statistics-based cost report");

  auto* sweep = app.add_subcommand("sweep", "Savings optimum over list sizes per parameter value");
  std::string sweep_param = "F";
  std::string sweep_values;
  sweep->add_option("--param", sweep_param,
                    "F, rate_ratio, p_inside, cost_ratio, calls_per_update or fixed");
  sweep->add_option("--values", sweep_values, "Comma-separated values of the parameter");

  auto* figure = app.add_subcommand("figure", "Curve data for one figure");
  int figure_id = 0;
  figure->add_option("id", figure_id, "Figure number (3, 5, 6, 7, 8, 9, 10)")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo validation of the analytic models");
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> trials;
  simulate->add_option("--steps", steps, "Random-walk steps");
  simulate->add_option("--trials", trials, "Paging trials");

  auto* dump = app.add_subcommand("dump-defaults", "Print the default scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::optional<fs::path> out =
      out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir);

  lacost::Scenario scenario;
  try {
    try {
      scenario = scenario_path.empty() ? lacost::Scenario::defaults()
                                       : lacost::Scenario::load(scenario_path);
      if (seed) scenario.seed = *seed;
      if (!algorithm.empty()) scenario.algorithm = lacost::parse_tally_selection(algorithm);
      if (!reading.empty()) scenario.reading = lacost::parse_reading(reading);
      if (steps) scenario.walk_steps = *steps;
      if (trials) scenario.paging_trials = *trials;
      scenario.validate();
    } catch (const lacost::Error& e) {
      throw InputError{e.what()};
    }

    if (*dump) {
      if (out) {
        fs::create_directories(*out);
        std::ofstream f(*out / "scenario.txt", std::ios::binary);
        scenario.dump(f);
      } else {
        scenario.dump(std::cout);
      }
    } else if (*betas) {
      emit(lacost::cmd_betas(scenario), out, "betas.csv");
    } else if (*costs) {
      emit(lacost::cmd_costs(scenario), out, "costs.csv");
    } else if (*sweep) {
      lacost::SweepSpec spec;
      try {
        spec.parameter = sweep_param;
        spec.values = lacost::parse_number_list(sweep_values);
      } catch (const lacost::Error& e) {
        throw InputError{e.what()};
      }
      lacost::SweepOutput result;
      try {
        result = lacost::cmd_sweep(scenario, spec);
      } catch (const lacost::Error& e) {
        if (e.kind() == lacost::ErrorKind::Usage) throw InputError{e.what()};
        throw;
      }
      emit(result.summary, out, "sweep_" + spec.parameter + ".csv");
      if (out) emit(result.curves, out, "sweep_" + spec.parameter + "_curves.csv");
    } else if (*figure) {
      lacost::CsvTable table;
      try {
        table = lacost::cmd_figure(scenario, figure_id);
      } catch (const lacost::Error& e) {
        if (e.kind() == lacost::ErrorKind::Usage) throw InputError{e.what()};
        throw;
      }
      emit(table, out, "figure" + std::to_string(figure_id) + ".csv");
    } else if (*simulate) {
      emit(lacost::cmd_simulate(scenario), out, "simulate.csv");
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
