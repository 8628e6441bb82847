#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lacost {

enum class Geometry { Square, Hexagonal };

const char* to_string(Geometry g) noexcept;
Geometry parse_geometry(std::string_view text);

using CellId = std::uint32_t;
using LaId = std::uint32_t;

// Grid coordinate. For square zones this is (row, col); for hexagonal zones
// it is the axial pair with row = r and col = q. Coordinates outside
// [0, m) address cells of a neighboring VLR zone.
struct Coord {
  int row = 0;
  int col = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

// A VLR administered zone of m x m cells. Square cells use Moore
// (8-neighbor) adjacency; hexagonal cells form an axial parallelogram with
// 6 neighbors. The zone is embedded in an infinite tiling of identical
// zones, so every cell has a full set of neighbors, some of them outside.
class CellGrid {
 public:
  CellGrid(Geometry geometry, int m);

  Geometry geometry() const noexcept { return geometry_; }
  int dimension() const noexcept { return m_; }
  std::size_t cell_count() const noexcept {
    return static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_);
  }
  // Neighbors per cell in the infinite tiling: 8 or 6.
  int degree() const noexcept;

  std::span<const Coord> offsets() const noexcept;

  bool in_zone(Coord c) const noexcept {
    return c.row >= 0 && c.col >= 0 && c.row < m_ && c.col < m_;
  }
  Coord coord_of(CellId id) const;
  CellId id_of(Coord c) const;

  // All neighbor coordinates of a cell, in offset order; may lie outside.
  std::vector<Coord> neighbors(CellId id) const;
  std::vector<CellId> in_zone_neighbors(CellId id) const;
  int out_of_zone_neighbor_count(CellId id) const;
  bool adjacent(Coord a, Coord b) const noexcept;

  // Maps any coordinate of the tiling onto the zone copy it corresponds to.
  Coord wrap(Coord c) const noexcept;

 private:
  Geometry geometry_;
  int m_;
};

CellGrid build_grid(Geometry geometry, int m);

// Directed adjacencies from in-zone cells to cells of other zones.
std::uint64_t boundary_adjacency_count(const CellGrid& grid);

// 20 + 12(m-2) for square, 14 + 8(m-2) for hexagonal.
std::uint64_t boundary_adjacency_closed_form(Geometry geometry, int m);

class Partition {
 public:
  // Validates coverage: one LA per cell, dense ids 0..la_count-1, no empty LA.
  Partition(const CellGrid& grid, std::vector<LaId> assignment);

  LaId la_of(CellId id) const { return assignment_.at(id); }
  std::size_t la_count() const noexcept { return sizes_.size(); }
  std::span<const LaId> assignment() const noexcept { return assignment_; }
  // Cells per LA, indexed by LA id.
  std::span<const std::size_t> la_sizes() const noexcept { return sizes_; }
  // Sizes joined by ';' in ascending order, e.g. "25;25;25;25".
  std::string sizes_label() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<LaId> assignment_;
  std::vector<std::size_t> sizes_;
};

enum class SchemeKind { Single, Quadrants, Halves, VerticalStrips, Blocks, Explicit };

struct PartitionScheme {
  SchemeKind kind = SchemeKind::Single;
  int strips = 0;
  int block_rows = 0;
  int block_cols = 0;
  std::filesystem::path map_file;

  static PartitionScheme of(SchemeKind kind) {
    PartitionScheme s;
    s.kind = kind;
    return s;
  }
  static PartitionScheme single() { return of(SchemeKind::Single); }
  static PartitionScheme quadrants() { return of(SchemeKind::Quadrants); }
  static PartitionScheme halves() { return of(SchemeKind::Halves); }
  static PartitionScheme vertical_strips(int n) {
    PartitionScheme s = of(SchemeKind::VerticalStrips);
    s.strips = n;
    return s;
  }
  static PartitionScheme blocks(int rows, int cols) {
    PartitionScheme s = of(SchemeKind::Blocks);
    s.block_rows = rows;
    s.block_cols = cols;
    return s;
  }
  static PartitionScheme explicit_map(std::filesystem::path file) {
    PartitionScheme s = of(SchemeKind::Explicit);
    s.map_file = std::move(file);
    return s;
  }

  // "single", "quadrants", "halves", "strips:N", "blocks:RxC", "explicit".
  std::string label() const;
  static PartitionScheme parse(std::string_view text);

  friend bool operator==(const PartitionScheme&, const PartitionScheme&) = default;
};

Partition make_partition(const CellGrid& grid, const PartitionScheme& scheme);

// Explicit map text: "geometry m la_count" header, then m rows of m LA ids.
Partition read_partition_map(const CellGrid& grid, std::istream& in);
Partition load_partition_map(const CellGrid& grid, const std::filesystem::path& file);
void write_partition_map(const CellGrid& grid, const Partition& partition, std::ostream& out);

enum class NeighborClass { SameLA, OtherLAsameVLR, OtherVLR };

const char* to_string(NeighborClass c) noexcept;

NeighborClass classify_adjacency(const CellGrid& grid, const Partition& partition, CellId cell,
                                 Coord neighbor);

}  // namespace lacost
