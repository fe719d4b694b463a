#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "asch/feas/feasibility.hpp"

struct CatalogRow {
  std::string group;
  long order = 0;
  std::string array;
  std::string kind;
  std::string detail;
  bool alt = false;  // later array in a multi-array row; indices refer to the first one
};

inline std::vector<CatalogRow> load_catalog(const std::string& path) {
  std::ifstream in(path);
  std::vector<CatalogRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    CatalogRow r;
    std::string order;
    std::getline(ls, r.group, '\t');
    std::getline(ls, order, '\t');
    std::getline(ls, r.array, '\t');
    std::getline(ls, r.kind, '\t');
    std::getline(ls, r.detail, '\t');
    std::string pos;
    std::getline(ls, pos, '\t');
    r.alt = pos == "alt";
    r.order = std::stol(order);
    rows.push_back(r);
  }
  return rows;
}

inline std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

// Whether the report contains the catalog's stated reason. Krein triples are
// compared up to permutation, since m_h q^h_ij is symmetric in h, i, j.
inline bool report_matches(const asch::FeasibilityReport& rep, const CatalogRow& row) {
  if (row.kind == "construction") return !rep.infeasible;
  for (const auto& r : rep.reasons) {
    if (row.alt) {
      if (r.check == row.kind || (row.kind == "quotient" && r.check == "quotient_integrality")) return true;
      continue;
    }
    if (row.kind == "krein" && r.check == "krein") {
      std::string a = row.detail.substr(2), b = r.detail.substr(2);  // "h_ij"
      std::string x{a[0], a[2], a[3]}, y{b[0], b[2], b[3]};
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x == y) return true;
    } else if (row.kind == "quotient" && r.check == "quotient_integrality") {
      if (strip_spaces(r.detail) == strip_spaces(row.detail)) return true;
    } else if (row.kind == "conference" && r.check == "conference") {
      if (strip_spaces(r.detail) == strip_spaces(row.detail)) return true;
    } else if (row.kind == r.check) {
      return true;
    }
  }
  return false;
}

inline bool implemented_kind(const std::string& kind) {
  return kind == "handshake" || kind == "multiplicities" || kind == "krein" || kind == "absolute_bound" ||
         kind == "quotient" || kind == "conference" || kind == "construction";
}
