#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clutter/complex.hpp"
#include "clutter/linalg.hpp"

namespace clb {

// coefficient choice for homology and Betti computations
struct FieldSpec {
  enum class Kind { rationals, prime_field, integers };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;
  static FieldSpec Q() { return {Kind::rationals, 0}; }
  static FieldSpec GF(std::uint32_t p) { return {Kind::prime_field, p}; }
  static FieldSpec Z() { return {Kind::integers, 0}; }
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;
};

// reduced homology of an augmented chain complex; dimension -1 is included,
// so the empty complex has rank 1 in dimension -1 and the void complex is
// zero everywhere
struct HomologyProfile {
  int top_dim = kVoidDim;
  // rank[k] = free rank in dimension k-1, indices 0..top_dim+1
  std::vector<long long> rank;
  // torsion[k] = torsion coefficients (> 1) in dimension k-1; filled only
  // over the integers
  std::vector<std::vector<unsigned long long>> torsion;

  long long rank_at(int dim) const;
  std::vector<unsigned long long> torsion_at(int dim) const;
  bool trivial() const;  // all ranks zero and no torsion
};

// signed boundary matrix: rows = faces with k-1 vertices, columns = faces
// with k vertices; entry for dropping the j-th smallest vertex is (-1)^j
IntMat boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper);

// faces_by_card as produced by SimplicialComplex::faces_by_card
HomologyProfile homology(const std::vector<std::vector<Face>>& faces_by_card, FieldSpec f);
HomologyProfile homology(const SimplicialComplex& k, FieldSpec f);

// nonempty faces properly contained in exactly one facet
std::vector<Face> free_faces(const SimplicialComplex& k);
// remove every face containing the given free face
SimplicialComplex collapse_at(const SimplicialComplex& k, Face free_face);

enum class SearchStatus { found, refuted, unknown };
std::string to_string(SearchStatus s);

struct CollapseResult {
  SearchStatus status = SearchStatus::unknown;
  std::vector<Face> sequence;  // free faces used, in order
  long long states = 0;
};
// depth-first search over collapse sequences until stop() holds; smallest
// free face first, backtracking, memoized visited complexes; refuted means
// the whole space was exhausted, unknown means the budget ran out
CollapseResult collapse_search(const SimplicialComplex& k,
                               const std::function<bool(const SimplicialComplex&)>& stop,
                               long long budget = 1000000);

}  // namespace clb
