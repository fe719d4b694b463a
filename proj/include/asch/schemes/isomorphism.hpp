#pragma once

#include <optional>
#include <vector>

#include "asch/exact/rational.hpp"
#include "asch/schemes/relation_matrix.hpp"

namespace asch {

struct SchemeIsomorphism {
  std::vector<int> phi;  // vertex x of the first scheme maps to phi[x]
  std::vector<int> psi;  // relation i maps to psi[i]
};

// Backtracking with colour refinement. With allow_relation_permutation unset
// psi is the identity.
std::optional<SchemeIsomorphism> are_isomorphic(const RelationMatrix& a, const RelationMatrix& b,
                                                bool allow_relation_permutation = false);

inline constexpr int kDefaultAutomorphismBound = 64;

// Order of the group of vertex permutations preserving every relation.
// Throws ErrorKind::refused above `vertex_bound` vertices.
Integer automorphism_count(const RelationMatrix& r, int vertex_bound = kDefaultAutomorphismBound);

// Orbit-stabilizer count over all (phi, psi) with psi a relation permutation.
Integer automorphism_count_with_relation_permutations(const RelationMatrix& r,
                                                      int vertex_bound = kDefaultAutomorphismBound);

// Every automorphism (psi = identity) as a vertex permutation, in search
// order. Throws ErrorKind::refused once more than `limit` are found.
std::vector<std::vector<int>> all_automorphisms(const RelationMatrix& r, std::size_t limit = 100000);

// Relation permutations psi (psi[0] = 0) for which some automorphism exists.
std::vector<std::vector<int>> relation_permutations_realized(const RelationMatrix& r);

}  // namespace asch
