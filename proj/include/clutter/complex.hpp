#pragma once
#include <vector>

#include "clutter/face.hpp"

namespace clb {

// dim() result for the void complex
inline constexpr int kVoidDim = -2;

// A simplicial complex on [n], presented by its facets (inclusion-maximal
// faces). The void complex (no faces at all) and the empty complex (single
// face {}) are distinct: void has no facets, empty has the single facet {}.
class SimplicialComplex {
public:
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex empty_complex(int n);
  static SimplicialComplex simplex(int n, Face f);
  // keeps the maximal faces of the given list (normalizes any presentation)
  SimplicialComplex(int n, std::vector<Face> faces);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
  int dim() const;  // -1 for the empty complex, kVoidDim for void
  bool pure() const;
  bool is_face(Face f) const;
  Face support() const;  // union of facets

  // faces grouped by cardinality: result[k] = sorted list of faces with k
  // vertices; result[0] = {{}} for any nonvoid complex; empty vector for void
  std::vector<std::vector<Face>> faces_by_card() const;
  std::vector<Face> all_faces() const;
  long long face_count() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  int n_ = 0;
  std::vector<Face> facets_;  // maximal, sorted lex
};

// faces of the complex contained in w
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, Face w);
// faces of dimension <= i (pure=false), or the complex generated by the
// i-dimensional faces (pure=true); requires i <= dim(k)
SimplicialComplex skeleton(const SimplicialComplex& k, int i, bool pure);
// all unions of a face of a with a face of b; same n, disjoint supports
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// proper subsets of f; the empty complex when |f| = 1, void when f = {}
SimplicialComplex boundary_of_simplex(int n, Face f);
// faces of k that do not contain e (e nonempty)
SimplicialComplex remove_cofaces(const SimplicialComplex& k, Face e);

}  // namespace clb
