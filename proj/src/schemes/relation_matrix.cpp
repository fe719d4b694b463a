#include "asch/schemes/relation_matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "asch/error.hpp"

namespace asch {

bool RelationMatrix::symmetric() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

std::vector<int> RelationMatrix::neighbours(int x, int i) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if ((*this)(x, y) == i) out.push_back(y);
  return out;
}

void check_well_formed(const RelationMatrix& r, bool require_symmetric) {
  const int n = r.n(), d = r.d();
  if (n <= 0) fail(ErrorKind::not_scheme, "empty relation matrix");
  std::vector<bool> seen(d + 1, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = r(x, y);
      if (x == y && i != 0)
        fail(ErrorKind::not_scheme, "diagonal entry (" + std::to_string(x) + "," + std::to_string(x) + ") is not 0");
      if (x != y && (i < 1 || i > d))
        fail(ErrorKind::not_scheme, "entry (" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                                        std::to_string(i) + " outside 1.." + std::to_string(d));
      seen[i] = true;
      if (require_symmetric && r(y, x) != i)
        fail(ErrorKind::not_scheme, "not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  for (int i = 0; i <= d; ++i)
    if (!seen[i]) fail(ErrorKind::not_scheme, "relation " + std::to_string(i) + " is empty");
}

std::optional<std::vector<long>> structure_constants(const RelationMatrix& r, std::string* witness) {
  const int n = r.n(), D = r.d() + 1;
  std::vector<long> c(static_cast<std::size_t>(D) * D * D, 0);
  std::vector<int> first_x(D, -1), first_y(D, -1);
  std::vector<long> counts(static_cast<std::size_t>(D) * D);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int z = 0; z < n; ++z) ++counts[r(x, z) * D + r(z, y)];
      const int h = r(x, y);
      long* ch = &c[static_cast<std::size_t>(h) * D * D];
      if (first_x[h] < 0) {
        first_x[h] = x;
        first_y[h] = y;
        std::copy(counts.begin(), counts.end(), ch);
      } else if (!std::equal(counts.begin(), counts.end(), ch)) {
        if (witness)
          *witness = std::to_string(first_x[h]) + " " + std::to_string(first_y[h]) + " " + std::to_string(x) + " " +
                     std::to_string(y);
        return std::nullopt;
      }
    }
  return c;
}

IntersectionTensor tensor_from_relation_matrix(const RelationMatrix& r) {
  check_well_formed(r);
  std::string w;
  auto c = structure_constants(r, &w);
  if (!c) fail(ErrorKind::not_scheme, "intersection numbers differ on pairs (x y x' y') " + w);
  IntersectionTensor t(r.d());
  const int D = r.d() + 1;
  for (int h = 0; h < D; ++h)
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) t.p(h, i, j) = (*c)[(static_cast<std::size_t>(h) * D + i) * D + j];
  return t;
}

AxiomCheck verify_scheme_axioms(const RelationMatrix& r) {
  AxiomCheck out;
  try {
    check_well_formed(r);
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  std::string w;
  if (!structure_constants(r, &w)) {
    std::istringstream ws(w);
    int v;
    while (ws >> v) out.witness.push_back(v);
    out.reason = "intersection numbers differ on pairs (x y x' y') " + w;
    return out;
  }
  out.ok = true;
  return out;
}

InducedSubscheme induced_subscheme(const RelationMatrix& r, const std::vector<int>& subset) {
  require(!subset.empty(), ErrorKind::usage, "induced subscheme of an empty set");
  std::vector<bool> used(r.d() + 1, false);
  for (int x : subset) {
    require(x >= 0 && x < r.n(), ErrorKind::usage, "vertex out of range");
    for (int y : subset) used[r(x, y)] = true;
  }
  InducedSubscheme out;
  std::vector<int> renum(r.d() + 1, -1);
  for (int i = 0; i <= r.d(); ++i)
    if (used[i]) {
      renum[i] = static_cast<int>(out.relation_map.size());
      out.relation_map.push_back(i);
    }
  const int m = static_cast<int>(subset.size());
  out.matrix = RelationMatrix(m, static_cast<int>(out.relation_map.size()) - 1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.matrix(a, b) = renum[r(subset[a], subset[b])];
  return out;
}

RelationMatrix read_relation_matrix(std::istream& in) {
  long n = -1, d = -1;
  if (!(in >> n >> d) || n <= 0 || d < 0) fail(ErrorKind::parse, "relation matrix: expected header \"n d\"");
  RelationMatrix r(static_cast<int>(n), static_cast<int>(d));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long v;
      if (!(in >> v))
        fail(ErrorKind::parse, "relation matrix: missing entry at row " + std::to_string(x) + ", column " +
                                   std::to_string(y));
      r(x, y) = static_cast<int>(v);
    }
  return r;
}

void write_relation_matrix(std::ostream& out, const RelationMatrix& r) {
  out << r.n() << ' ' << r.d() << '\n';
  for (int x = 0; x < r.n(); ++x) {
    for (int y = 0; y < r.n(); ++y) out << (y ? " " : "") << r(x, y);
    out << '\n';
  }
}

RelationMatrix load_relation_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "cannot open " + path);
  return read_relation_matrix(in);
}

void save_relation_matrix(const std::string& path, const RelationMatrix& r) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot write " + path);
  write_relation_matrix(out, r);
}

}  // namespace asch
