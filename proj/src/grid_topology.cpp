#include "lacost/grid_topology.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lacost/error.hpp"

namespace lacost {

namespace {

constexpr std::array<Coord, 8> kMooreOffsets{{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1},
}};

// Axial (dr, dq): (0,+-1), (+-1,0), (-1,+1), (+1,-1).
constexpr std::array<Coord, 6> kHexOffsets{{
    {0, 1}, {0, -1}, {1, 0}, {-1, 0}, {-1, 1}, {1, -1},
}};

int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int parse_positive(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    throw Error(ErrorKind::Usage, std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

const char* to_string(Geometry g) noexcept {
  return g == Geometry::Square ? "square" : "hexagonal";
}

Geometry parse_geometry(std::string_view text) {
  if (text == "square") return Geometry::Square;
  if (text == "hexagonal" || text == "hex") return Geometry::Hexagonal;
  throw Error(ErrorKind::Usage, "unknown geometry '" + std::string(text) + "'");
}

CellGrid::CellGrid(Geometry geometry, int m) : geometry_(geometry), m_(m) {
  if (m < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "zone dimension must be at least 2, got " + std::to_string(m));
  }
}

int CellGrid::degree() const noexcept {
  return geometry_ == Geometry::Square ? 8 : 6;
}

std::span<const Coord> CellGrid::offsets() const noexcept {
  if (geometry_ == Geometry::Square) return kMooreOffsets;
  return kHexOffsets;
}

Coord CellGrid::coord_of(CellId id) const {
  if (id >= cell_count()) {
    throw Error(ErrorKind::Adjacency, "cell id " + std::to_string(id) + " outside zone");
  }
  return {static_cast<int>(id) / m_, static_cast<int>(id) % m_};
}

CellId CellGrid::id_of(Coord c) const {
  if (!in_zone(c)) {
    throw Error(ErrorKind::Adjacency, "coordinate (" + std::to_string(c.row) + "," +
                                          std::to_string(c.col) + ") outside zone");
  }
  return static_cast<CellId>(c.row * m_ + c.col);
}

std::vector<Coord> CellGrid::neighbors(CellId id) const {
  const Coord c = coord_of(id);
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (const Coord& d : offsets()) out.push_back({c.row + d.row, c.col + d.col});
  return out;
}

std::vector<CellId> CellGrid::in_zone_neighbors(CellId id) const {
  std::vector<CellId> out;
  for (const Coord& n : neighbors(id)) {
    if (in_zone(n)) out.push_back(id_of(n));
  }
  return out;
}

int CellGrid::out_of_zone_neighbor_count(CellId id) const {
  int count = 0;
  for (const Coord& n : neighbors(id)) count += in_zone(n) ? 0 : 1;
  return count;
}

bool CellGrid::adjacent(Coord a, Coord b) const noexcept {
  const Coord d{b.row - a.row, b.col - a.col};
  const auto offs = offsets();
  return std::find(offs.begin(), offs.end(), d) != offs.end();
}

Coord CellGrid::wrap(Coord c) const noexcept {
  return {floor_mod(c.row, m_), floor_mod(c.col, m_)};
}

CellGrid build_grid(Geometry geometry, int m) { return CellGrid(geometry, m); }

std::uint64_t boundary_adjacency_count(const CellGrid& grid) {
  // Only border cells can have outside neighbors, but the full scan is cheap.
  std::uint64_t total = 0;
  for (CellId id = 0; id < grid.cell_count(); ++id) {
    total += static_cast<std::uint64_t>(grid.out_of_zone_neighbor_count(id));
  }
  return total;
}

std::uint64_t boundary_adjacency_closed_form(Geometry geometry, int m) {
  if (m < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "zone dimension must be at least 2, got " + std::to_string(m));
  }
  const auto k = static_cast<std::uint64_t>(m - 2);
  return geometry == Geometry::Square ? 20 + 12 * k : 14 + 8 * k;
}

Partition::Partition(const CellGrid& grid, std::vector<LaId> assignment)
    : assignment_(std::move(assignment)) {
  if (assignment_.size() != grid.cell_count()) {
    throw Error(ErrorKind::Coverage, "partition covers " + std::to_string(assignment_.size()) +
                                         " cells, zone has " + std::to_string(grid.cell_count()));
  }
  const LaId max_id = *std::max_element(assignment_.begin(), assignment_.end());
  sizes_.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (LaId la : assignment_) ++sizes_[la];
  for (std::size_t la = 0; la < sizes_.size(); ++la) {
    if (sizes_[la] == 0) {
      throw Error(ErrorKind::Coverage, "location area " + std::to_string(la) + " is empty");
    }
  }
}

std::string Partition::sizes_label() const {
  std::vector<std::size_t> sorted(sizes_.begin(), sizes_.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(sorted[i]);
  }
  return out;
}

std::string PartitionScheme::label() const {
  switch (kind) {
    case SchemeKind::Single: return "single";
    case SchemeKind::Quadrants: return "quadrants";
    case SchemeKind::Halves: return "halves";
    case SchemeKind::VerticalStrips: return "strips:" + std::to_string(strips);
    case SchemeKind::Blocks:
      return "blocks:" + std::to_string(block_rows) + "x" + std::to_string(block_cols);
    case SchemeKind::Explicit: return "explicit";
  }
  return "?";
}

PartitionScheme PartitionScheme::parse(std::string_view text) {
  if (text == "single") return single();
  if (text == "quadrants") return quadrants();
  if (text == "halves") return halves();
  if (text == "explicit") return of(SchemeKind::Explicit);
  if (text.starts_with("strips:")) {
    return vertical_strips(parse_positive(text.substr(7), "strip count"));
  }
  if (text.starts_with("blocks:")) {
    const auto body = text.substr(7);
    const auto x = body.find('x');
    if (x == std::string_view::npos) {
      throw Error(ErrorKind::Usage, "blocks scheme must be 'blocks:RxC'");
    }
    return blocks(parse_positive(body.substr(0, x), "block rows"),
                  parse_positive(body.substr(x + 1), "block cols"));
  }
  throw Error(ErrorKind::Usage, "unknown partition scheme '" + std::string(text) + "'");
}

Partition make_partition(const CellGrid& grid, const PartitionScheme& scheme) {
  const int m = grid.dimension();
  int rows = 1;
  int cols = 1;
  switch (scheme.kind) {
    case SchemeKind::Explicit:
      return load_partition_map(grid, scheme.map_file);
    case SchemeKind::Single:
      break;
    case SchemeKind::Quadrants:
      rows = cols = 2;
      break;
    case SchemeKind::Halves:
      cols = 2;
      break;
    case SchemeKind::VerticalStrips:
      cols = scheme.strips;
      break;
    case SchemeKind::Blocks:
      rows = scheme.block_rows;
      cols = scheme.block_cols;
      break;
  }
  if (rows < 1 || cols < 1 || m % rows != 0 || m % cols != 0) {
    throw Error(ErrorKind::Partition, "scheme " + scheme.label() +
                                          " does not divide a zone of dimension " +
                                          std::to_string(m));
  }
  const int block_h = m / rows;
  const int block_w = m / cols;
  std::vector<LaId> assignment(grid.cell_count());
  for (CellId id = 0; id < assignment.size(); ++id) {
    const Coord c = grid.coord_of(id);
    assignment[id] = static_cast<LaId>((c.row / block_h) * cols + c.col / block_w);
  }
  return Partition(grid, std::move(assignment));
}

Partition read_partition_map(const CellGrid& grid, std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorKind::Coverage, "partition map is empty");
  std::istringstream hs(header);
  std::string geometry_text;
  int m = 0;
  long la_count = 0;
  if (!(hs >> geometry_text >> m >> la_count)) {
    throw Error(ErrorKind::Coverage, "partition map header must be 'geometry m la_count'");
  }
  if (parse_geometry(geometry_text) != grid.geometry() || m != grid.dimension()) {
    throw Error(ErrorKind::Coverage, "partition map is for a " + geometry_text + " zone of " +
                                         std::to_string(m) + ", grid is " +
                                         to_string(grid.geometry()) + " of " +
                                         std::to_string(grid.dimension()));
  }
  if (la_count < 1) throw Error(ErrorKind::Coverage, "partition map declares no location areas");

  std::vector<LaId> assignment;
  assignment.reserve(grid.cell_count());
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long> ids;
    long v = 0;
    while (ls >> v) ids.push_back(v);
    if (!ls.eof()) throw Error(ErrorKind::Coverage, "non-numeric entry in partition map row " + std::to_string(row));
    if (ids.empty()) continue;
    if (row >= m) throw Error(ErrorKind::Coverage, "partition map has more than " + std::to_string(m) + " rows");
    if (ids.size() != static_cast<std::size_t>(m)) {
      throw Error(ErrorKind::Coverage, "partition map row " + std::to_string(row) + " has " +
                                           std::to_string(ids.size()) + " entries, expected " +
                                           std::to_string(m));
    }
    for (long id : ids) {
      if (id < 0 || id >= la_count) {
        throw Error(ErrorKind::Coverage, "LA id " + std::to_string(id) + " outside 0.." +
                                             std::to_string(la_count - 1));
      }
      assignment.push_back(static_cast<LaId>(id));
    }
    ++row;
  }
  if (row != m) {
    throw Error(ErrorKind::Coverage, "partition map has " + std::to_string(row) + " rows, expected " +
                                         std::to_string(m));
  }
  Partition p(grid, std::move(assignment));
  if (p.la_count() != static_cast<std::size_t>(la_count)) {
    throw Error(ErrorKind::Coverage, "partition map declares " + std::to_string(la_count) +
                                         " location areas but uses " + std::to_string(p.la_count()));
  }
  return p;
}

Partition load_partition_map(const CellGrid& grid, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Config, "cannot open partition map " + file.string());
  return read_partition_map(grid, in);
}

void write_partition_map(const CellGrid& grid, const Partition& partition, std::ostream& out) {
  const int m = grid.dimension();
  out << to_string(grid.geometry()) << ' ' << m << ' ' << partition.la_count() << '\n';
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      if (c) out << ' ';
      out << partition.la_of(grid.id_of({r, c}));
    }
    out << '\n';
  }
}

const char* to_string(NeighborClass c) noexcept {
  switch (c) {
    case NeighborClass::SameLA: return "same_la";
    case NeighborClass::OtherLAsameVLR: return "other_la_same_vlr";
    case NeighborClass::OtherVLR: return "other_vlr";
  }
  return "?";
}

NeighborClass classify_adjacency(const CellGrid& grid, const Partition& partition, CellId cell,
                                 Coord neighbor) {
  const Coord from = grid.coord_of(cell);
  if (!grid.adjacent(from, neighbor)) {
    throw Error(ErrorKind::Adjacency, "cells (" + std::to_string(from.row) + "," +
                                          std::to_string(from.col) + ") and (" +
                                          std::to_string(neighbor.row) + "," +
                                          std::to_string(neighbor.col) + ") are not adjacent");
  }
  if (!grid.in_zone(neighbor)) return NeighborClass::OtherVLR;
  return partition.la_of(grid.id_of(neighbor)) == partition.la_of(cell)
             ? NeighborClass::SameLA
             : NeighborClass::OtherLAsameVLR;
}

}  // namespace lacost
