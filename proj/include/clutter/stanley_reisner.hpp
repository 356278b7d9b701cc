#pragma once
#include <utility>

#include "clutter/clutter.hpp"
#include "clutter/complex.hpp"
#include "clutter/ideal.hpp"

namespace clb {

// the ideal attached to a clutter: generated by the circuits of the complement
Ideal circuit_ideal_of_complement(const UniformClutter& c);

// S is a face of the Stanley-Reisner complex of I iff S contains no generator
inline bool sr_is_face(const Ideal& i, Face s) { return !i.contains(s); }

// complex whose nonfaces are the monomials of I; rejects the unit ideal,
// guarded enumeration over 2^n subsets
SimplicialComplex stanley_reisner_complex(const Ideal& i, int guard_n = 20);
// ideal generated by the minimal nonfaces of the complex
Ideal stanley_reisner_ideal(const SimplicialComplex& k, int guard_n = 20);

// faces = cliques of c (every subset of size < d included)
SimplicialComplex clique_complex(const UniformClutter& c, int guard_n = 20);

// degree-t component: generators are the t-subsets containing a generator of
// I; also returns the complex obtained from the Stanley-Reisner complex of I
// by adding the full (t-2)-skeleton of the simplex on [n], whose
// Stanley-Reisner ideal the component is. Requires t >= max generator degree
// and a nonzero, proper I.
std::pair<Ideal, SimplicialComplex> component_ideal(const Ideal& i, int t, int guard_n = 20);

}  // namespace clb
