#include "clutter/stanley_reisner.hpp"

#include <stdexcept>

namespace clb {

Ideal circuit_ideal_of_complement(const UniformClutter& c) {
  return Ideal(c.n(), complement(c).circuits());
}

SimplicialComplex stanley_reisner_complex(const Ideal& i, int guard_n) {
  if (i.is_unit()) throw std::invalid_argument("the unit ideal has no Stanley-Reisner complex");
  if (i.n() > guard_n) throw std::invalid_argument("ground set too large for face enumeration");
  std::vector<Face> faces;
  for (Face s : all_subsets(Face::full(i.n())))
    if (sr_is_face(i, s)) faces.push_back(s);
  return SimplicialComplex(i.n(), std::move(faces));
}

Ideal stanley_reisner_ideal(const SimplicialComplex& k, int guard_n) {
  if (k.is_void()) throw std::invalid_argument("the void complex has no Stanley-Reisner ideal");
  if (k.n() > guard_n) throw std::invalid_argument("ground set too large for face enumeration");
  std::vector<Face> gens;
  for (Face s : all_subsets(Face::full(k.n()))) {
    if (k.is_face(s)) continue;
    bool minimal = true;
    for (int v : s.vertices()) minimal = minimal && k.is_face(s.without(v));
    if (minimal) gens.push_back(s);
  }
  return Ideal(k.n(), std::move(gens));
}

SimplicialComplex clique_complex(const UniformClutter& c, int guard_n) {
  if (c.n() > guard_n) throw std::invalid_argument("ground set too large for clique enumeration");
  std::vector<Face> faces;
  for (Face s : all_subsets(Face::full(c.n())))
    if (is_clique(c, s)) faces.push_back(s);
  return SimplicialComplex(c.n(), std::move(faces));
}

std::pair<Ideal, SimplicialComplex> component_ideal(const Ideal& i, int t, int guard_n) {
  if (i.is_zero() || i.is_unit()) throw std::invalid_argument("component of a degenerate ideal");
  if (t < i.max_degree()) throw std::invalid_argument("component degree below the top generator degree");
  if (t > i.n()) throw std::invalid_argument("component degree exceeds the number of variables");
  std::vector<Face> gens;
  for (Face s : k_subsets(Face::full(i.n()), t))
    if (i.contains(s)) gens.push_back(s);
  Ideal comp(i.n(), std::move(gens));

  SimplicialComplex base = stanley_reisner_complex(i, guard_n);
  std::vector<Face> faces = base.facets();
  for (Face s : k_subsets(Face::full(i.n()), t - 1)) faces.push_back(s);
  return {comp, SimplicialComplex(i.n(), std::move(faces))};
}

}  // namespace clb
