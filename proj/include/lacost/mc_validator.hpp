#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lacost/cost_models.hpp"
#include "lacost/csv.hpp"
#include "lacost/grid_topology.hpp"

namespace lacost {

// Random numbers for the simulators. Each chunk of work gets its own
// std::mt19937_64 seeded with splitmix64(seed, chunk index), and values are
// mapped to ranges without std distributions, so results are identical on
// every platform and for any worker count.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

struct WalkConfig {
  CellGrid grid;
  Partition partition;
  std::uint64_t steps = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct CrossingStats {
  std::uint64_t moves_total = 0;
  std::uint64_t crossings_same_vlr = 0;   // dot-class events
  std::uint64_t crossings_other_vlr = 0;  // x-class events
  double empirical_beta1 = 0.0;
  double std_error = 0.0;  // binomial, at the empirical beta1
  // Ratio-estimator spread across the independent fixed-length walks. Crossings
  // inside one walk cluster along borders, so this is the realistic error; zero
  // when there are fewer than two walks.
  double batch_std_error = 0.0;

  std::uint64_t crossings() const noexcept { return crossings_same_vlr + crossings_other_vlr; }
  friend bool operator==(const CrossingStats&, const CrossingStats&) = default;
};

// Walk on the torus tiling of the zone: every step moves to a uniformly chosen
// neighbor, and border crossings are classified as staying in the VLR zone or
// leaving it. The walk is split into fixed-length chunks, each started from a
// uniformly drawn cell (the stationary distribution of the regular graph).
CrossingStats walk_crossing_stats(const WalkConfig& config);

struct PagingSimResult {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  friend bool operator==(const PagingSimResult&, const PagingSimResult&) = default;
};

// Sequential paging replayed per trial: draw the LA the user is in (or
// outside the list), page the list in order, accumulate bytes per hour.
PagingSimResult simulate_paging(const ProbabilityList& list, const NetworkParams& params,
                                const ByteTable& bytes, std::string_view interface_id, double N,
                                std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

struct ValidationRow {
  std::string check;
  double analytic = 0.0;
  double empirical = 0.0;
  double std_error = 0.0;

  double z_score() const noexcept;
};

CsvTable validation_report(const std::vector<ValidationRow>& rows);

}  // namespace lacost
