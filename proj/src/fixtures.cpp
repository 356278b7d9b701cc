#include "clutter/fixtures.hpp"

#include <cctype>
#include <stdexcept>

namespace clb {

namespace {

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> v;
  v.push_back(Fixture{
      "chordal-6-3",
      "reducible 3-uniform clutter on 6 vertices (6-step order)",
      InputKind::clutter, 8, 0x6CBB7856u,
      "# clutter\n"
      "6 3\n"
      "1 2 3\n"
      "1 2 4\n"
      "1 2 5\n"
      "1 2 6\n"
      "1 3 4\n"
      "1 5 6\n"
      "2 3 4\n"
      "2 5 6\n"
      ""});
  v.push_back(Fixture{
      "nonchordal-5-3",
      "3-uniform clutter on 5 vertices with no simplicial maximal subcircuit",
      InputKind::clutter, 6, 0xA3138B6Eu,
      "# clutter\n"
      "5 3\n"
      "1 2 3\n"
      "1 2 4\n"
      "1 3 4\n"
      "2 3 5\n"
      "2 4 5\n"
      "3 4 5\n"
      ""});
  v.push_back(Fixture{
      "reducible-graph-9",
      "graph on 9 vertices reduced in 3 steps by simplicial vertices 1, 6, 8",
      InputKind::clutter, 13, 0x78DF853Fu,
      "# clutter\n"
      "9 2\n"
      "1 2\n"
      "1 3\n"
      "1 5\n"
      "2 3\n"
      "2 5\n"
      "3 4\n"
      "3 5\n"
      "4 5\n"
      "5 6\n"
      "5 7\n"
      "6 7\n"
      "7 8\n"
      "7 9\n"
      ""});
  v.push_back(Fixture{
      "reducible-graph-9-s1",
      "stage 1 of the reducible-graph-9 walk",
      InputKind::clutter, 11, 0x99827712u,
      "# clutter\n"
      "9 2\n"
      "1 2\n"
      "2 3\n"
      "2 5\n"
      "3 4\n"
      "3 5\n"
      "4 5\n"
      "5 6\n"
      "5 7\n"
      "6 7\n"
      "7 8\n"
      "7 9\n"
      ""});
  v.push_back(Fixture{
      "reducible-graph-9-s2",
      "stage 2 of the reducible-graph-9 walk",
      InputKind::clutter, 9, 0xFE788736u,
      "# clutter\n"
      "9 2\n"
      "1 2\n"
      "2 3\n"
      "2 5\n"
      "3 4\n"
      "3 5\n"
      "4 5\n"
      "5 7\n"
      "7 8\n"
      "7 9\n"
      ""});
  v.push_back(Fixture{
      "reducible-graph-9-s3",
      "stage 3 of the reducible-graph-9 walk",
      InputKind::clutter, 8, 0xF5C0864Bu,
      "# clutter\n"
      "9 2\n"
      "1 2\n"
      "2 3\n"
      "2 5\n"
      "3 4\n"
      "3 5\n"
      "4 5\n"
      "5 7\n"
      "7 9\n"
      ""});
  v.push_back(Fixture{
      "stability-ideal-5",
      "two cubic generators whose Betti number at the stability bound drops when {3,4,5} is added",
      InputKind::ideal, 2, 0x538E9F7Fu,
      "# ideal\n"
      "5\n"
      "1 4 5\n"
      "2 3 5\n"
      ""});
  v.push_back(Fixture{
      "bowtie",
      "two triangles glued at a vertex; edge ideal has linear quotients yet the graph is not reducible from the complete graph",
      InputKind::clutter, 6, 0xBD2A15F6u,
      "# clutter\n"
      "5 2\n"
      "1 2\n"
      "1 3\n"
      "2 3\n"
      "3 4\n"
      "3 5\n"
      "4 5\n"
      ""});
  v.push_back(Fixture{
      "five-cycle",
      "cycle on 5 vertices; edge ideal with a strictly supermultiplicative shift vector",
      InputKind::clutter, 5, 0x01DAA576u,
      "# clutter\n"
      "5 2\n"
      "1 2\n"
      "1 5\n"
      "2 3\n"
      "3 4\n"
      "4 5\n"
      ""});
  v.push_back(Fixture{
      "dunce-hat",
      "8-vertex triangulation of the dunce hat: homology-trivial, no free face, not 2-collapsible",
      InputKind::complex_, 17, 0x9FF97315u,
      "# complex\n"
      "8\n"
      "1 2 4\n"
      "1 2 7\n"
      "1 2 8\n"
      "1 3 4\n"
      "1 3 5\n"
      "1 3 6\n"
      "1 5 6\n"
      "1 7 8\n"
      "2 3 5\n"
      "2 3 7\n"
      "2 3 8\n"
      "2 4 5\n"
      "3 4 8\n"
      "3 6 7\n"
      "4 5 6\n"
      "4 6 8\n"
      "6 7 8\n"
      ""});
  v.push_back(Fixture{
      "bing-house",
      "12-vertex triangulation of the house with two rooms: contractible, no free face",
      InputKind::complex_, 33, 0x7DEB1ED6u,
      "# complex\n"
      "12\n"
      "1 2 3\n"
      "1 2 7\n"
      "1 3 10\n"
      "1 4 7\n"
      "1 4 10\n"
      "2 3 5\n"
      "2 3 6\n"
      "2 3 8\n"
      "2 3 11\n"
      "2 4 5\n"
      "2 4 10\n"
      "2 5 6\n"
      "2 7 8\n"
      "2 10 12\n"
      "2 11 12\n"
      "3 4 6\n"
      "3 4 7\n"
      "3 5 7\n"
      "3 7 9\n"
      "3 8 9\n"
      "3 10 11\n"
      "4 5 8\n"
      "4 5 10\n"
      "4 6 11\n"
      "4 7 8\n"
      "4 10 11\n"
      "5 6 7\n"
      "5 6 8\n"
      "5 6 11\n"
      "5 10 12\n"
      "5 11 12\n"
      "6 7 9\n"
      "6 8 9\n"
      ""});
  v.push_back(Fixture{
      "rp2-minimal",
      "6-vertex triangulation of the real projective plane: 2-torsion in degree-1 homology",
      InputKind::complex_, 10, 0xDFAE51F2u,
      "# complex\n"
      "6\n"
      "1 2 3\n"
      "1 2 4\n"
      "1 3 5\n"
      "1 4 6\n"
      "1 5 6\n"
      "2 3 6\n"
      "2 4 5\n"
      "2 5 6\n"
      "3 4 5\n"
      "3 4 6\n"
      ""});
  return v;
}

void validate(const Fixture& f) {
  if (crc32(f.text) != f.checksum)
    throw std::runtime_error("fixture '" + f.name + "' failed its checksum");
  int body = 0;
  bool counted_header = false;
  std::size_t pos = 0;
  while (pos < f.text.size()) {
    auto end = f.text.find('\n', pos);
    std::string line = f.text.substr(pos, end - pos);
    pos = (end == std::string::npos) ? f.text.size() : end + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    if (!counted_header)
      counted_header = true;
    else
      ++body;
  }
  if (body != f.faces)
    throw std::runtime_error("fixture '" + f.name + "' face count mismatch");
}

// `complete-N-D` names synthesize the full clutter on demand.
bool parse_complete_name(const std::string& name, int& n, int& d) {
  if (name.rfind("complete-", 0) != 0) return false;
  auto rest = name.substr(9);
  auto dash = rest.find('-');
  if (dash == std::string::npos) return false;
  try {
    std::size_t used = 0;
    n = std::stoi(rest.substr(0, dash), &used);
    if (used != dash) return false;
    d = std::stoi(rest.substr(dash + 1), &used);
    if (used != rest.size() - dash - 1) return false;
  } catch (const std::exception&) {
    return false;
  }
  return n >= 1 && d >= 1;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

UniformClutter fixture_clutter(const std::string& name) {
  int n = 0, d = 0;
  if (parse_complete_name(name, n, d)) {
    if (n > 64 || d > n)
      throw std::invalid_argument("fixture '" + name + "' is out of range");
    return complete_clutter(n, d);
  }
  const Fixture& f = fixture(name);
  if (f.kind != InputKind::clutter)
    throw std::invalid_argument("fixture '" + name + "' is not a clutter");
  validate(f);
  return parse_clutter(f.text);
}

Ideal fixture_ideal(const std::string& name) {
  const Fixture& f = fixture(name);
  if (f.kind != InputKind::ideal)
    throw std::invalid_argument("fixture '" + name + "' is not an ideal");
  validate(f);
  return parse_ideal(f.text);
}

SimplicialComplex fixture_complex(const std::string& name) {
  const Fixture& f = fixture(name);
  if (f.kind != InputKind::complex_)
    throw std::invalid_argument("fixture '" + name + "' is not a complex");
  validate(f);
  return parse_complex(f.text);
}

std::vector<Face> chordal_6_3_order() {
  return {Face::of({1, 3}), Face::of({1, 4}), Face::of({2, 4}),
          Face::of({1, 2}), Face::of({2, 6}), Face::of({1, 5})};
}

RemovalSequence reducible_graph_9_sequence() {
  RemovalSequence seq;
  seq.steps.push_back({Face::of({1}), {Face::of({1, 3}), Face::of({1, 5})}});
  seq.steps.push_back({Face::of({6}), {Face::of({5, 6}), Face::of({6, 7})}});
  seq.steps.push_back({Face::of({8}), {Face::of({7, 8})}});
  return seq;
}

RemovalSequence reducible_graph_9_misprinted_sequence() {
  RemovalSequence seq = reducible_graph_9_sequence();
  seq.steps[1].A = {Face::of({5, 6}), Face::of({5, 7})};
  return seq;
}

Face stability_ideal_5_added_monomial() { return Face::of({3, 4, 5}); }

}  // namespace clb
