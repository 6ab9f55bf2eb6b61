#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qgen/render.hpp"
#include "qgen/tables.hpp"

namespace qgen {

// Serialized table forms carry explicit index keys so consumers never have to
// guess the 1-based conventions.

struct SequenceExport {
  std::string kind;
  std::string coefficient_ring;  // "Z" | "Q" | "Z[q,q^-1]" | "Q(q)"
  long start_index = 0;
  long step = 1;
  std::vector<std::string> values;  // canonical renderings
};

template <class C>
SequenceExport make_sequence_export(const std::string& kind,
                                    const std::string& ring, long start,
                                    long step, const std::vector<C>& values) {
  SequenceExport e{kind, ring, start, step, {}};
  e.values.reserve(values.size());
  for (const auto& v : values) e.values.push_back(render(v));
  return e;
}

inline nlohmann::ordered_json to_json(const SequenceExport& e) {
  nlohmann::ordered_json j;
  j["kind"] = e.kind;
  j["coefficient_ring"] = e.coefficient_ring;
  j["values"] = nlohmann::ordered_json::array();
  long idx = e.start_index;
  for (const auto& v : e.values) {
    j["values"].push_back({{"index", idx}, {"value", v}});
    idx += e.step;
  }
  return j;
}

inline std::string to_csv(const SequenceExport& e) {
  std::string out = "index,value\n";
  long idx = e.start_index;
  for (const auto& v : e.values) {
    out += std::to_string(idx) + "," + v + "\n";
    idx += e.step;
  }
  return out;
}

inline std::string to_text(const SequenceExport& e) {
  std::string out;
  for (size_t i = 0; i < e.values.size(); ++i) {
    if (i) out += " ";
    out += e.values[i];
  }
  out += "\n";
  return out;
}

inline std::string to_latex(const SequenceExport& e) {
  std::string out = "\\begin{tabular}{rl}\nindex & value \\\\\n";
  long idx = e.start_index;
  for (const auto& v : e.values) {
    out += std::to_string(idx) + " & $" + v + "$ \\\\\n";
    idx += e.step;
  }
  out += "\\end{tabular}\n";
  return out;
}

// Rectangular view of a ragged or rectangular table; entries already rendered.
struct TableExport {
  std::string kind;
  std::string coefficient_ring;
  std::string row_key = "i";
  std::string col_key = "j";
  long row_start = 1;
  long col_start = 1;
  std::vector<std::vector<std::string>> rows;  // ragged allowed
};

template <class C>
TableExport make_triangle_export(const std::string& kind,
                                 const std::string& ring,
                                 const Triangle<C>& t) {
  TableExport e;
  e.kind = kind;
  e.coefficient_ring = ring;
  for (int i = 1; i <= t.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(t.row(i).size());
    for (const auto& v : t.row(i)) row.push_back(render(v));
    e.rows.push_back(std::move(row));
  }
  return e;
}

inline TableExport make_matrix_export(
    const std::string& kind, const std::string& ring,
    const std::vector<std::vector<Rational>>& m) {
  TableExport e;
  e.kind = kind;
  e.coefficient_ring = ring;
  e.row_key = "n";
  e.col_key = "k";
  e.col_start = 0;
  for (const auto& r : m) {
    std::vector<std::string> row;
    row.reserve(r.size());
    for (const auto& v : r) row.push_back(render(v));
    e.rows.push_back(std::move(row));
  }
  return e;
}

inline nlohmann::ordered_json to_json(const TableExport& e) {
  nlohmann::ordered_json j;
  j["kind"] = e.kind;
  j["coefficient_ring"] = e.coefficient_ring;
  j["rows"] = nlohmann::ordered_json::array();
  long ri = e.row_start;
  for (const auto& row : e.rows) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    long ci = e.col_start;
    for (const auto& v : row) {
      entries.push_back({{e.col_key, ci}, {"value", v}});
      ++ci;
    }
    j["rows"].push_back({{e.row_key, ri}, {"entries", entries}});
    ++ri;
  }
  return j;
}

inline std::string to_csv(const TableExport& e) {
  std::string out = e.row_key + "," + e.col_key + ",value\n";
  long ri = e.row_start;
  for (const auto& row : e.rows) {
    long ci = e.col_start;
    for (const auto& v : row) {
      out += std::to_string(ri) + "," + std::to_string(ci) + "," + v + "\n";
      ++ci;
    }
    ++ri;
  }
  return out;
}

inline std::string to_text(const TableExport& e) {
  std::string out;
  for (const auto& row : e.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ", ";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

// Zero-padded pmatrix, the shape used for the triangle displays.
inline std::string to_latex(const TableExport& e) {
  size_t width = 0;
  for (const auto& row : e.rows) width = std::max(width, row.size());
  std::string out = "\\begin{pmatrix}\n";
  for (const auto& row : e.rows) {
    for (size_t i = 0; i < width; ++i) {
      if (i) out += " & ";
      out += (i < row.size()) ? row[i] : "0";
    }
    out += " \\\\\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

}  // namespace qgen
