#pragma once
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace clb {

// A face: a finite subset of the vertex set [n] = {1,...,n}, stored as a
// bitmask (vertex v <-> bit v-1). Vertex labels must stay within 1..64.
class Face {
public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
  static Face of(std::initializer_list<int> verts);
  // validates labels are in [1, n] and distinct
  static Face from_vertices(const std::vector<int>& verts, int n);
  static Face full(int n);  // {1,...,n}

  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return v >= 1 && v <= 64 && (bits_ >> (v - 1)) & 1; }
  bool subset_of(Face g) const { return (bits_ & ~g.bits_) == 0; }
  bool proper_subset_of(Face g) const { return subset_of(g) && bits_ != g.bits_; }
  bool intersects(Face g) const { return (bits_ & g.bits_) != 0; }

  Face unite(Face g) const { return Face(bits_ | g.bits_); }
  Face intersect(Face g) const { return Face(bits_ & g.bits_); }
  Face minus(Face g) const { return Face(bits_ & ~g.bits_); }
  Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << (v - 1))); }
  Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  int max_vertex() const;              // largest vertex label, 0 for the empty face
  std::vector<int> vertices() const;   // increasing order
  std::string str() const;             // "{1,3,4}", "{}" for the empty face

  bool operator==(const Face&) const = default;
  // integer comparison == colex order on vertex sets
  bool operator<(Face g) const { return bits_ < g.bits_; }

private:
  std::uint64_t bits_ = 0;
};

// lexicographic comparison of the increasing vertex sequences
// ({1,4} < {2,3}; shorter prefix wins)
bool lex_less(Face a, Face b);

// all k-subsets of the vertices of ground, lex order
std::vector<Face> k_subsets(Face ground, int k);
// all subsets of ground (2^|ground| of them) in increasing bitmask order
std::vector<Face> all_subsets(Face ground);

long long binomial(long long n, long long k);

}  // namespace clb
