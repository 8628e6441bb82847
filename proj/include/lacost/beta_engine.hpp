#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lacost/grid_topology.hpp"

namespace lacost {

enum class TallyAlgorithm { Simple, Advanced };

const char* to_string(TallyAlgorithm a) noexcept;
TallyAlgorithm parse_algorithm(std::string_view text);

struct CellTally {
  std::uint32_t x = 0;
  std::uint32_t dot = 0;
};

// Per-cell "x" (exposure to another VLR zone) and "dot" (exposure to another
// location area of the same zone) marks, with their totals.
struct BoundaryTally {
  TallyAlgorithm algorithm = TallyAlgorithm::Advanced;
  std::uint64_t x_total = 0;
  std::uint64_t dot_total = 0;
  std::vector<CellTally> per_cell;
};

// beta1: LA crossing stays in the VLR zone; beta2: it leaves the zone, split
// 80/20 between the TMSI (beta21) and IMSI (beta22) procedures.
struct BetaSet {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta21 = 0.0;
  double beta22 = 0.0;
};

inline constexpr double kTmsiShare = 0.8;

BoundaryTally tally_simple(const CellGrid& grid, const Partition& partition);
BoundaryTally tally_advanced(const CellGrid& grid, const Partition& partition);
BoundaryTally tally(const CellGrid& grid, const Partition& partition, TallyAlgorithm algorithm);

BetaSet betas_from_tally(const BoundaryTally& tally);
BetaSet betas_from_counts(std::uint64_t x_total, std::uint64_t dot_total);
// beta1 given directly; beta2 = 1 - beta1 and the 80/20 split.
BetaSet betas_from_beta1(double beta1);

struct PercentReduction {
  double x_pct = 0.0;
  double dot_pct = 0.0;
};

// Reduction of hexagonal tallies relative to square tallies, in percent.
PercentReduction percent_reduction(const BoundaryTally& square, const BoundaryTally& hexagonal);

}  // namespace lacost
