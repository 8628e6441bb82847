#pragma once

// Test-only reference computations. Nothing here calls into the library's
// adjacency tables or tally code: neighbors are found by scanning a window
// around each cell and testing the geometry's distance function.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "lacost/grid_topology.hpp"

namespace oracle {

// Moore distance 1 for squares; hex distance 1 in axial coordinates.
inline bool touches(lacost::Geometry g, int dr, int dc) {
  if (dr == 0 && dc == 0) return false;
  if (g == lacost::Geometry::Square) return std::abs(dr) <= 1 && std::abs(dc) <= 1;
  return (std::abs(dr) + std::abs(dc) + std::abs(dr + dc)) == 2;
}

using Labeling = std::function<int(int row, int col)>;

struct Counts {
  std::uint64_t boundary = 0;           // directed, into other zones
  std::uint64_t cross_la_pairs = 0;     // undirected, in-zone, different labels
  std::uint64_t in_zone_directed = 0;   // all directed in-zone adjacencies
  std::uint64_t border_cells = 0;       // cells with an outside neighbor
  std::uint64_t dot_cells = 0;          // cells with a cross-LA in-zone neighbor
};

inline Counts brute_force(lacost::Geometry g, int m, const Labeling& label) {
  Counts out;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      bool border = false;
      bool dot = false;
      for (int dr = -2; dr <= 2; ++dr) {
        for (int dc = -2; dc <= 2; ++dc) {
          if (!touches(g, dr, dc)) continue;
          const int rr = r + dr;
          const int cc = c + dc;
          const bool inside = rr >= 0 && cc >= 0 && rr < m && cc < m;
          if (!inside) {
            ++out.boundary;
            border = true;
            continue;
          }
          ++out.in_zone_directed;
          if (label(rr, cc) != label(r, c)) {
            dot = true;
            // Count each unordered pair once.
            if (rr * m + cc > r * m + c) ++out.cross_la_pairs;
          }
        }
      }
      out.border_cells += border ? 1 : 0;
      out.dot_cells += dot ? 1 : 0;
    }
  }
  return out;
}

inline Labeling quadrants(int m) {
  return [m](int r, int c) { return (r >= m / 2 ? 2 : 0) + (c >= m / 2 ? 1 : 0); };
}

inline Labeling halves(int m) {
  return [m](int, int c) { return c >= m / 2 ? 1 : 0; };
}

inline Labeling from_assignment(const std::vector<lacost::LaId>& a, int m) {
  return [a, m](int r, int c) { return static_cast<int>(a[static_cast<std::size_t>(r * m + c)]); };
}

// Random labels 0..n-1 with every label used (n <= m*m), row-major.
inline std::vector<lacost::LaId> random_assignment(int m, int n, std::mt19937_64& rng) {
  const auto cells = static_cast<std::size_t>(m * m);
  std::vector<lacost::LaId> a(cells);
  std::vector<std::size_t> order(cells);
  for (std::size_t i = 0; i < cells; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < cells; ++i) {
    a[order[i]] = static_cast<lacost::LaId>(i < static_cast<std::size_t>(n)
                                                ? i
                                                : std::uniform_int_distribution<int>(0, n - 1)(rng));
  }
  return a;
}

// Sequential-paging expectation by explicit enumeration of where the user is.
inline double paging_expectation(const std::vector<double>& alphas, double success, double fail,
                                 double N) {
  double p_in = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    double rank_cost = success;
    for (std::size_t j = 0; j < i; ++j) rank_cost += fail;
    total += alphas[i] * rank_cost;
    p_in += alphas[i];
  }
  double outside = success;
  for (std::size_t j = 0; j < alphas.size(); ++j) outside += fail;
  total += (1.0 - p_in) * outside;
  return N * total;
}

}  // namespace oracle
