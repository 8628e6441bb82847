#include "lacost/mc_validator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "lacost/error.hpp"

namespace lacost {

namespace {

constexpr std::uint64_t kWalkChunk = 1u << 16;
constexpr std::uint64_t kPagingChunk = 1u << 14;

// Unbiased enough for n <= 8: the multiply-shift bias is below 2^-32.
std::uint32_t below(std::mt19937_64& rng, std::uint32_t n) {
  return static_cast<std::uint32_t>(((rng() >> 32) * n) >> 32);
}

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

unsigned worker_count(unsigned requested, std::uint64_t chunks) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(chunks, 1)));
}

// Runs body(chunk) for every chunk, striding chunks over the workers. Each
// chunk writes only its own output slot.
template <typename Body>
void for_each_chunk(std::uint64_t chunks, unsigned workers, Body body) {
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([=, &body] {
      for (std::uint64_t c = w; c < chunks; c += workers) body(c);
    });
  }
}

struct Transition {
  CellId next;
  std::uint8_t kind;  // 0 same LA, 1 other LA same VLR, 2 other VLR
};

struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(chunk + 0x632be59bd9b4e019ull));
}

CrossingStats walk_crossing_stats(const WalkConfig& config) {
  if (config.steps < 1) throw Error(ErrorKind::Domain, "walk needs at least one step");
  const CellGrid& grid = config.grid;
  const Partition& partition = config.partition;
  if (partition.assignment().size() != grid.cell_count()) {
    throw Error(ErrorKind::Coverage, "partition does not match the grid");
  }

  const auto degree = static_cast<std::uint32_t>(grid.degree());
  std::vector<Transition> table(grid.cell_count() * degree);
  for (CellId id = 0; id < grid.cell_count(); ++id) {
    const auto nbrs = grid.neighbors(id);
    for (std::uint32_t d = 0; d < degree; ++d) {
      const Coord target = nbrs[d];
      const NeighborClass cls = classify_adjacency(grid, partition, id, target);
      // Leaving the zone lands in the matching cell of the neighboring copy.
      table[id * degree + d] = {grid.id_of(grid.wrap(target)), static_cast<std::uint8_t>(cls)};
    }
  }

  const std::uint64_t chunks = (config.steps + kWalkChunk - 1) / kWalkChunk;
  std::vector<std::array<std::uint64_t, 3>> counts(chunks, {0, 0, 0});
  const auto cells = static_cast<std::uint32_t>(grid.cell_count());

  for_each_chunk(chunks, worker_count(config.workers, chunks), [&](std::uint64_t c) {
    std::mt19937_64 rng(derive_seed(config.seed, c));
    const std::uint64_t begin = c * kWalkChunk;
    const std::uint64_t len = std::min(kWalkChunk, config.steps - begin);
    std::array<std::uint64_t, 3> local{0, 0, 0};
    CellId at = below(rng, cells);
    for (std::uint64_t s = 0; s < len; ++s) {
      const Transition& t = table[at * degree + below(rng, degree)];
      ++local[t.kind];
      at = t.next;
    }
    counts[c] = local;
  });

  CrossingStats stats;
  for (const auto& k : counts) {
    stats.moves_total += k[0] + k[1] + k[2];
    stats.crossings_same_vlr += k[1];
    stats.crossings_other_vlr += k[2];
  }
  const std::uint64_t n = stats.crossings();
  if (n > 0) {
    const double b = static_cast<double>(stats.crossings_same_vlr) / static_cast<double>(n);
    stats.empirical_beta1 = b;
    stats.std_error = std::sqrt(b * (1.0 - b) / static_cast<double>(n));
    if (chunks > 1) {
      double ss = 0.0;
      for (const auto& k : counts) {
        const double r = static_cast<double>(k[1]) - b * static_cast<double>(k[1] + k[2]);
        ss += r * r;
      }
      const double c = static_cast<double>(chunks);
      stats.batch_std_error = std::sqrt(ss * c / (c - 1.0)) / static_cast<double>(n);
    }
  }
  return stats;
}

PagingSimResult simulate_paging(const ProbabilityList& list, const NetworkParams& params,
                                const ByteTable& bytes, std::string_view interface_id, double N,
                                std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw Error(ErrorKind::Domain, "paging simulation needs at least one trial");
  if (N < 1.0) throw Error(ErrorKind::Domain, "cells per LA must be at least 1");
  const InterfaceBytes& b = bytes.at(interface_id);
  const double page_found = params.lambda_t1 * b.nbp1 + params.lambda_t2 * b.nbp2;
  const double page_missed = b.nbp2 * (params.lambda_t1 + params.lambda_t2);

  std::vector<double> cumulative;
  cumulative.reserve(list.k());
  double acc = 0.0;
  for (double a : list.alphas()) cumulative.push_back(acc += a);
  const auto k = static_cast<double>(list.k());

  const std::uint64_t chunks = (trials + kPagingChunk - 1) / kPagingChunk;
  std::vector<Moments> parts(chunks);
  for_each_chunk(chunks, worker_count(workers, chunks), [&](std::uint64_t c) {
    std::mt19937_64 rng(derive_seed(seed, c));
    const std::uint64_t begin = c * kPagingChunk;
    const std::uint64_t len = std::min(kPagingChunk, trials - begin);
    Moments m;
    for (std::uint64_t t = 0; t < len; ++t) {
      const double u = unit(rng);
      const auto hit = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      // Rank i (0-based) pays i misses; outside the list pays k misses and
      // then the page of the LA the user registered in.
      const double misses = hit == cumulative.end()
                                ? k
                                : static_cast<double>(hit - cumulative.begin());
      m.add(N * (misses * page_missed + page_found));
    }
    parts[c] = m;
  });

  Moments total;
  for (const auto& m : parts) total.merge(m);
  PagingSimResult r;
  r.trials = total.n;
  r.mean = total.mean;
  r.std_error =
      total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n))
                  : 0.0;
  return r;
}

double ValidationRow::z_score() const noexcept {
  const double diff = empirical - analytic;
  if (std_error > 0.0) return diff / std_error;
  if (diff == 0.0) return 0.0;
  return diff > 0 ? std::numeric_limits<double>::infinity()
                  : -std::numeric_limits<double>::infinity();
}

CsvTable validation_report(const std::vector<ValidationRow>& rows) {
  CsvTable t;
  t.header = {"check", "analytic", "empirical", "std_error", "z_score"};
  for (const auto& r : rows) {
    t.add_row({r.check, format_number(r.analytic), format_number(r.empirical),
               format_number(r.std_error), format_number(r.z_score())});
  }
  return t;
}

}  // namespace lacost
