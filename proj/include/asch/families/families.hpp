#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asch/params/tensor.hpp"
#include "asch/schemes/relation_matrix.hpp"

namespace asch {

struct SchemeValue {
  RelationMatrix matrix;
  std::string name;  // e.g. "K3 x K13"
  bool symmetric() const { return matrix.symmetric(); }
  // Counted from the matrix; throws ErrorKind::not_scheme.
  IntersectionTensor tensor() const { return tensor_from_relation_matrix(matrix); }
};

SchemeValue complete_scheme(int n);           // K(n)
SchemeValue cyclic_group_scheme(int n);       // Z(n), non-symmetric for n > 2
SchemeValue cyclic_scheme(int n);             // C(n) = Z(n) symmetrized
SchemeValue johnson_scheme(int n, int k);     // J(n, k), relation = k - |A n B|
SchemeValue hamming_scheme(int d, int q);     // H(d, q)
// Cyc(q, r) for a prime power q <= 2^16 and r | q - 1; non-symmetric unless
// q is even or (q - 1)/r is even.
SchemeValue cyclotomic_scheme(long q, int r);

// Relation (i, j) gets index i*(d'+1) + j.
SchemeValue direct_product(const SchemeValue& a, const SchemeValue& b);
// Outer relations keep indices 1..d, fibre relation j >= 1 becomes d + j.
// Throws ErrorKind::usage if the fibres do not share one parameter set.
SchemeValue lexicographic_coproduct(const SchemeValue& a, const std::vector<SchemeValue>& fibres);
SchemeValue lexicographic_product(const SchemeValue& a, const SchemeValue& b);
// Classes indexed by composition vectors u, in descending lexicographic order
// (so u = (k, 0, ..., 0) is the identity).
SchemeValue hamming_power(int k, const SchemeValue& a);
// R_i u R_i^T, classes numbered by smallest member. Throws ErrorKind::refused
// unless the input is a commutative association scheme.
SchemeValue symmetrization(const SchemeValue& a);

// smith40, paircube40 or c352.
SchemeValue special_scheme(const std::string& name);

// Constructor by name and arguments: "K 5", "J 5 2", "H 3 2", "C 5", "Z 5",
// "Cyc 13 2", plus "smith40", "paircube40", "c352". Throws ErrorKind::usage.
SchemeValue named_scheme(const std::string& family, const std::vector<long>& args);

// Relabeling perm (perm[0] = 0, new index perm[i] for old i) under which the
// tensor has the given parameter array; nullopt if none exists.
std::optional<std::vector<int>> match_parameter_array(const IntersectionTensor& t, const ParameterArray& a);

// Renumbers relations: new index perm[i] for old i.
RelationMatrix relabel_relations(const RelationMatrix& r, const std::vector<int>& perm);

}  // namespace asch
