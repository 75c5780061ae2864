#include "cdlab/group_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cdlab {

namespace {

// reads the next non-comment, non-blank line; returns false at EOF
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    return true;
  }
  return false;
}

std::vector<int> parse_row(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<int> row;
  int v;
  while (ss >> v) row.push_back(v);
  std::string tail;
  if (ss.clear(), ss >> tail)
    throw ParseError(lineno, "unexpected token '" + tail + "'");
  if (row.empty()) throw ParseError(lineno, "empty row");
  return row;
}

}  // namespace

Group parse_group_text(std::istream& in, std::string label,
                       const GroupLimits& limits) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno))
    throw ParseError(lineno, "missing header line");
  std::istringstream head(line);
  std::string kind;
  int n = 0;
  if (!(head >> kind >> n) || n <= 0)
    throw ParseError(lineno, "expected 'cayley <n>' or 'perm <degree>'");

  if (kind == "cayley") {
    if (n > limits.max_order)
      throw OrderLimitError(static_cast<std::size_t>(limits.max_order));
    std::vector<std::vector<int>> table;
    table.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (!next_line(in, line, lineno))
        throw ParseError(lineno, "expected " + std::to_string(n) +
                                     " table rows, got " + std::to_string(i));
      std::vector<int> row = parse_row(line, lineno);
      if (static_cast<int>(row.size()) != n)
        throw ParseError(lineno, "row has " + std::to_string(row.size()) +
                                     " entries, expected " +
                                     std::to_string(n));
      table.push_back(std::move(row));
    }
    return from_cayley_table(table, std::move(label));
  }

  if (kind == "perm") {
    PermGenSet gens;
    gens.degree = n;
    while (next_line(in, line, lineno)) {
      std::vector<int> row = parse_row(line, lineno);
      if (static_cast<int>(row.size()) != n)
        throw ParseError(lineno, "generator has " +
                                     std::to_string(row.size()) +
                                     " images, expected " + std::to_string(n));
      gens.generators.push_back(std::move(row));
    }
    if (gens.generators.empty())
      throw ParseError(lineno, "no generators given");
    return from_permutation_generators(gens, limits, std::move(label));
  }

  throw ParseError(lineno, "unknown header '" + kind + "'");
}

Group load_group(const std::filesystem::path& path,
                 const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_group_text(in, path.stem().string(), limits);
}

std::string serialize_cayley(const Group& g) {
  std::ostringstream out;
  out << "# " << (g.label().empty() ? "group" : g.label()) << ", order "
      << g.order() << "\n";
  out << "cayley " << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace cdlab
