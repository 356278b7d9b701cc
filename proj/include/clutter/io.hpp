#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "clutter/betti.hpp"
#include "clutter/clutter.hpp"
#include "clutter/complex.hpp"
#include "clutter/ideal.hpp"

namespace clb {

// Error raised by any parser; `line` is 1-based when the input position is
// known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// ---------------------------------------------------------------------------
// Text formats.
//
// Lines are whitespace-separated integers; `#` starts a comment that runs to
// the end of the line; blank lines are skipped.  The first content line is a
// header: `n d` for clutters, `n` for ideals and complexes.  Every following
// line is one face given by its vertices (1-based).  A line containing only
// `.` denotes the empty face: the unit ideal's generator, or the empty
// complex's sole facet.  An ideal with no generator lines is the zero ideal;
// a complex with no facet lines is the void complex.
//
// Emitters prefix a marker comment (`# clutter`, `# ideal`, `# complex`) so
// the one-integer header stays unambiguous; parse_* functions accept input
// with or without the marker.
// ---------------------------------------------------------------------------

UniformClutter parse_clutter(const std::string& text);
Ideal parse_ideal(const std::string& text);
SimplicialComplex parse_complex(const std::string& text);

std::string emit_clutter(const UniformClutter& c);
std::string emit_ideal(const Ideal& i);
std::string emit_complex(const SimplicialComplex& k);

// ---------------------------------------------------------------------------
// JSON formats (auto-detected by a leading `{`).
//
//   clutter  {"n": 6, "d": 3, "circuits": [[1,2,3], ...]}
//   ideal    {"n": 5, "generators": [[1,4,5], ...]}
//   complex  {"n": 8, "facets": [[1,3,5], ...]}
//   table    {"n": 5, "entries": [{"i": 0, "W": [1,4,5], "count": 1}, ...]}
//
// The same parse_* entry points accept either syntax.
// ---------------------------------------------------------------------------

std::string emit_clutter_json(const UniformClutter& c);
std::string emit_ideal_json(const Ideal& i);
std::string emit_complex_json(const SimplicialComplex& k);

std::string emit_betti_table_json(const BettiTable& t);
BettiTable parse_betti_table(const std::string& text);

// Betti diagram of the quotient ring, tab-separated: columns are homological
// degrees, rows are shifts j - i, the corner entry is 1, zeros print as `.`.
std::string emit_betti_table_tsv(const BettiTable& t);

// What a piece of input text claims to be.
enum class InputKind { clutter, ideal, complex_ };

// Classify input text: honours a `# clutter` / `# ideal` / `# complex` marker
// or JSON key set; for unmarked text, a two-integer header means clutter and a
// one-integer header falls back to `fallback`.
InputKind classify_input(const std::string& text, InputKind fallback);

// CRC-32 (polynomial 0xEDB88320) of a byte string; used to pin embedded
// fixture text.
std::uint32_t crc32(const std::string& bytes);

}  // namespace clb
