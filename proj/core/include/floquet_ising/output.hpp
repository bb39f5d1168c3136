#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace floquet_ising {

/// Numeric table; flags are stored as 0/1.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  std::size_t column_index(const std::string& name) const;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// 17 significant digits; inf, -inf and nan spelled out.
std::string format_double(double x);

void write_csv(std::ostream& os, const Metadata& meta, const Table& table);
void write_json(std::ostream& os, const Metadata& meta, const Table& table);

struct CsvDocument {
  Metadata metadata;
  Table table;
};

CsvDocument read_csv(std::istream& is);

}  // namespace floquet_ising
