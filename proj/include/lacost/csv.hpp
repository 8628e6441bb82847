#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lacost {

// Shortest decimal string that round-trips to the same double.
std::string format_number(double value);
std::string format_number(std::int64_t value);
std::string format_number(std::uint64_t value);
std::string format_number(int value);
// Fixed precision, used for the golden-comparison companion columns.
std::string format_fixed(double value, int decimals);

// In-memory CSV table: '#'-prefixed metadata lines, a header row, data rows.
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_meta(std::string_view key, std::string_view value);
  void add_row(std::vector<std::string> row);
  void write(std::ostream& out) const;
  std::string str() const;
};

}  // namespace lacost
