#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lacost/beta_engine.hpp"
#include "lacost/cost_models.hpp"
#include "lacost/csv.hpp"
#include "lacost/grid_topology.hpp"
#include "lacost/savings_analyzer.hpp"

namespace lacost {

enum class TallySelection { Simple, Advanced, Both };

TallySelection parse_tally_selection(std::string_view text);
const char* to_string(TallySelection s) noexcept;

// Everything a CLI run needs. Scenario files are flat "key = value" text
// with dotted sections; '#' starts a comment. Unset keys keep the defaults
// below, and traffic.lambda_t2 defaults to traffic.lambda_t1 / 100.
struct Scenario {
  Geometry geometry = Geometry::Square;
  int m = 10;
  PartitionScheme partition = PartitionScheme::quadrants();
  TallySelection algorithm = TallySelection::Advanced;

  NetworkParams network;
  ByteTable bytes = ByteTable::defaults();
  std::string interface_id{kRadioInterface};
  double cells_per_la = 10.0;
  PagingReading reading = PagingReading::Principled;
  std::vector<double> alphas{0.8, 0.1, 0.05};

  SavingsParams radio;
  KRange k_range{1, 30};
  Distribution::Kind distribution = Distribution::Kind::UniformConditional;
  FixedNetworkConfig fixed;

  std::uint64_t seed = 20140101;
  std::uint64_t walk_steps = 1'000'000;
  std::uint64_t paging_trials = 100'000;

  static Scenario defaults() { return {}; }

  // Throws Error(Config) naming every unknown key; relative partition map
  // paths resolve against base_dir.
  static Scenario parse(std::istream& in, const std::filesystem::path& base_dir = {});
  static Scenario load(const std::filesystem::path& file);

  void dump(std::ostream& out) const;
  std::string dump() const;

  // Runs every component validation; throws the first violation.
  void validate() const;

  CellGrid grid() const;
  Partition make_partition() const;
  ProbabilityList probability_list() const;
  Distribution savings_distribution() const;
  // Betas for the cost commands: advanced tally unless only simple was chosen.
  BetaSet betas() const;
  FigureContext figure_context() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Tally report: one row per requested algorithm.
CsvTable cmd_betas(const Scenario& s);

// CS and AS rows of update, paging and list-maintenance costs.
CsvTable cmd_costs(const Scenario& s);

struct SweepSpec {
  // F | rate_ratio | p_inside | cost_ratio | calls_per_update | fixed
  std::string parameter = "F";
  std::vector<double> values;
};

struct SweepOutput {
  CsvTable summary;
  CsvTable curves;
};

SweepOutput cmd_sweep(const Scenario& s, const SweepSpec& spec);

CsvTable cmd_figure(const Scenario& s, int figure_id);

// Walk-oracle and paging-oracle comparisons against the analytic values.
CsvTable cmd_simulate(const Scenario& s);

std::vector<double> parse_number_list(std::string_view text);

}  // namespace lacost
