#include "lacost/beta_engine.hpp"

#include <string>

#include "lacost/error.hpp"

namespace lacost {

const char* to_string(TallyAlgorithm a) noexcept {
  return a == TallyAlgorithm::Simple ? "simple" : "advanced";
}

TallyAlgorithm parse_algorithm(std::string_view text) {
  if (text == "simple") return TallyAlgorithm::Simple;
  if (text == "advanced") return TallyAlgorithm::Advanced;
  throw Error(ErrorKind::Usage, "unknown tally algorithm '" + std::string(text) + "'");
}

namespace {

// Counts out-of-zone and cross-LA in-zone neighbors of every cell. The simple
// algorithm keeps only whether each count is non-zero.
BoundaryTally scan(const CellGrid& grid, const Partition& partition, TallyAlgorithm algorithm) {
  BoundaryTally t;
  t.algorithm = algorithm;
  t.per_cell.resize(grid.cell_count());
  for (CellId id = 0; id < grid.cell_count(); ++id) {
    const LaId la = partition.la_of(id);
    CellTally c;
    for (const Coord& n : grid.neighbors(id)) {
      if (!grid.in_zone(n)) {
        ++c.x;
      } else if (partition.la_of(grid.id_of(n)) != la) {
        ++c.dot;
      }
    }
    if (algorithm == TallyAlgorithm::Simple) {
      c.x = c.x ? 1 : 0;
      c.dot = c.dot ? 1 : 0;
    }
    t.x_total += c.x;
    t.dot_total += c.dot;
    t.per_cell[id] = c;
  }
  return t;
}

}  // namespace

BoundaryTally tally_simple(const CellGrid& grid, const Partition& partition) {
  return scan(grid, partition, TallyAlgorithm::Simple);
}

BoundaryTally tally_advanced(const CellGrid& grid, const Partition& partition) {
  return scan(grid, partition, TallyAlgorithm::Advanced);
}

BoundaryTally tally(const CellGrid& grid, const Partition& partition, TallyAlgorithm algorithm) {
  return scan(grid, partition, algorithm);
}

BetaSet betas_from_beta1(double beta1) {
  if (!(beta1 >= 0.0 && beta1 <= 1.0)) {
    throw Error(ErrorKind::InvalidProbability, "beta1 must lie in [0,1]");
  }
  BetaSet b;
  b.beta1 = beta1;
  b.beta2 = 1.0 - beta1;
  b.beta21 = kTmsiShare * b.beta2;
  b.beta22 = (1.0 - kTmsiShare) * b.beta2;
  return b;
}

BetaSet betas_from_counts(std::uint64_t x_total, std::uint64_t dot_total) {
  const std::uint64_t total = x_total + dot_total;
  if (total == 0) {
    throw Error(ErrorKind::DegenerateTally, "tally has neither x nor dot marks");
  }
  BetaSet b;
  b.beta1 = static_cast<double>(dot_total) / static_cast<double>(total);
  b.beta2 = static_cast<double>(x_total) / static_cast<double>(total);
  b.beta21 = kTmsiShare * b.beta2;
  b.beta22 = (1.0 - kTmsiShare) * b.beta2;
  return b;
}

BetaSet betas_from_tally(const BoundaryTally& tally) {
  return betas_from_counts(tally.x_total, tally.dot_total);
}

PercentReduction percent_reduction(const BoundaryTally& square, const BoundaryTally& hexagonal) {
  if (square.algorithm != TallyAlgorithm::Advanced ||
      hexagonal.algorithm != TallyAlgorithm::Advanced) {
    throw Error(ErrorKind::Domain, "percent reduction compares advanced tallies only");
  }
  if (square.per_cell.size() != hexagonal.per_cell.size()) {
    throw Error(ErrorKind::Domain, "percent reduction needs zones of the same dimension");
  }
  if (square.x_total == 0 || square.dot_total == 0) {
    throw Error(ErrorKind::DegenerateTally, "square tally has a zero total");
  }
  auto pct = [](std::uint64_t sq, std::uint64_t hex) {
    return 100.0 * (static_cast<double>(sq) - static_cast<double>(hex)) / static_cast<double>(sq);
  };
  return {pct(square.x_total, hexagonal.x_total), pct(square.dot_total, hexagonal.dot_total)};
}

}  // namespace lacost
