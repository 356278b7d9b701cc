#pragma once
#include <vector>

#include "clutter/face.hpp"

namespace clb {

// A d-uniform clutter on [n]: a set of d-subsets of {1,...,n} ("circuits").
// Circuits are kept sorted in lex order on their vertex sequences.
class UniformClutter {
public:
  UniformClutter(int n, int d, std::vector<Face> circuits);
  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Face>& circuits() const { return circuits_; }
  int size() const { return static_cast<int>(circuits_.size()); }
  bool contains(Face f) const;
  bool operator==(const UniformClutter&) const = default;

private:
  int n_ = 0, d_ = 0;
  std::vector<Face> circuits_;
};

// all d-subsets of [n]
UniformClutter complete_clutter(int n, int d);
// complete_clutter(n, d) minus the circuits of c
UniformClutter complement(const UniformClutter& c);
// drop every circuit containing e (e any subset)
UniformClutter deletion(const UniformClutter& c, Face e);
// same n and d required; circuits of a not in b
UniformClutter difference(const UniformClutter& a, const std::vector<Face>& remove);
// e together with all vertices c such that e+{c} is a circuit; requires |e| = d-1
Face closed_neighborhood(const UniformClutter& c, Face e);
// true when every d-subset of f is a circuit (vacuously true for |f| < d)
bool is_clique(const UniformClutter& c, Face f);
// the (d-1)-subsets of circuits, i.e. maximal faces of the clique complex
// below circuit level that lie inside some circuit
std::vector<Face> maximal_subcircuits(const UniformClutter& c);
// e is simplicial when its closed neighborhood is a clique; requires |e| = d-1
bool is_simplicial(const UniformClutter& c, Face e);
// all simplicial (d-1)-subsets of [n] (including ones contained in no circuit)
std::vector<Face> simplicial_elements(const UniformClutter& c);

}  // namespace clb
