#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace kgsymm::cli {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void write_json(const ojson& j, std::ostream& os, int indent) {
  const std::string pad(indent + 2, ' ');
  const std::string close(indent, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << ojson(it.key()).dump() << ": ";
        write_json(it.value(), os, indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(j[i], os, indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case ojson::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

namespace {

ojson cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else
          return v;
      },
      c);
}

std::string cell_tsv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return "";
        else if constexpr (std::is_same_v<T, double>)
          return format_double(v);
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>)
          return v;
        else
          return std::to_string(v);
      },
      c);
}

}  // namespace

void write_report(const Report& r, Format f, std::ostream& os) {
  if (f == Format::Tsv) {
    for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << (i ? "\t" : "") << r.table.columns[i];
    os << "\n";
    for (const auto& row : r.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << cell_tsv(row[i]);
      os << "\n";
    }
    return;
  }
  ojson doc = r.meta;
  ojson rows = ojson::array();
  for (const auto& row : r.table.rows) {
    ojson obj = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc[r.rows_key] = std::move(rows);
  write_json(doc, os);
  os << "\n";
}

}  // namespace kgsymm::cli
