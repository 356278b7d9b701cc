#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clutter/clutter.hpp"
#include "clutter/complex.hpp"
#include "clutter/ideal.hpp"
#include "clutter/io.hpp"
#include "clutter/reduction.hpp"

namespace clb {

// A named example shipped with the library.  The text is the canonical
// serialized form; `checksum` pins it (verified on every access, together
// with the declared face count) so a silent edit of the embedded data cannot
// go unnoticed.
struct Fixture {
  std::string name;
  std::string description;
  InputKind kind;
  int faces;               // circuit/generator/facet count the text must have
  std::uint32_t checksum;  // crc32 of `text`
  std::string text;
};

// All named fixtures, in catalog order.  `complete-N-D` fixtures are not
// listed; they are synthesized on demand by `fixture_clutter`.
const std::vector<Fixture>& fixture_catalog();

// Look up a fixture by name; throws std::invalid_argument for unknown names.
const Fixture& fixture(const std::string& name);

// Typed accessors.  `fixture_clutter` additionally accepts dynamic names of
// the form `complete-N-D` (the full d-uniform clutter on [N]).  Each call
// re-validates the embedded text against its checksum and face count.
UniformClutter fixture_clutter(const std::string& name);
Ideal fixture_ideal(const std::string& name);
SimplicialComplex fixture_complex(const std::string& name);

// The six-step order that witnesses reducibility of `chordal-6-3`.
std::vector<Face> chordal_6_3_order();

// The three-step removal sequence taking `reducible-graph-9` to its stage-3
// subgraph (fixtures `reducible-graph-9-s1` … `-s3` hold the intermediate
// stages).
RemovalSequence reducible_graph_9_sequence();

// The same sequence with the second step's circuit set copied verbatim from
// the source that published it, which lists {5,7} — an edge not containing
// the pivot vertex 6.  Replaying it must fail; kept as a regression input.
RemovalSequence reducible_graph_9_misprinted_sequence();

// The degree-3 monomial {3,4,5} whose addition to `stability-ideal-5` keeps
// all Betti numbers above the stability bound yet lowers the one at the
// bound.
Face stability_ideal_5_added_monomial();

}  // namespace clb
