#include "etr/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace etr {

std::string render_table(const Relation& r) {
  std::ostringstream out;
  if (r.signature().empty()) {
    out << "()\n";
    if (!r.extent().empty()) out << "()\n";
    return out.str();
  }

  bool first = true;
  for (const auto& [idx, dom] : r.signature()) {
    if (!first) out << '\t';
    out << idx.name;
    first = false;
  }
  out << '\n';

  std::vector<std::vector<std::string>> rows;
  rows.reserve(r.extent().size());
  for (const Tuple& t : r.extent()) {
    std::vector<std::string> row;
    row.reserve(t.size());
    for (const auto& [idx, value] : t) row.push_back(value.literal);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << '\t';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_count(const Relation& r) {
  return std::to_string(r.extent().size()) + "\n";
}

}  // namespace etr
