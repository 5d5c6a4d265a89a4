#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace kgsymm::cli {

using ojson = nlohmann::ordered_json;

/// One cell of a result table; monostate prints as null / empty.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Metadata plus one table. JSON nests the rows under `rows_key`; TSV
/// prints only the table.
struct Report {
  ojson meta = ojson::object();
  std::string rows_key = "rows";
  Table table;
};

enum class Format { Json, Tsv };

/// "%.12e"; non-finite values become null.
std::string format_double(double v);
void write_json(const ojson& j, std::ostream& os, int indent = 0);
void write_report(const Report& r, Format f, std::ostream& os);

}  // namespace kgsymm::cli
