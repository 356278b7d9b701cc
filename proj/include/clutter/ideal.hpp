#pragma once
#include <vector>

#include "clutter/face.hpp"

namespace clb {

// A squarefree monomial ideal in K[x_1,...,x_n], presented by its unique
// minimal generating set of squarefree monomials (faces). The zero ideal has
// no generators; the unit ideal is generated by the empty face.
class Ideal {
public:
  Ideal(int n, std::vector<Face> gens);  // minimalizes the generating set
  int n() const { return n_; }
  const std::vector<Face>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].empty(); }
  // membership of the squarefree monomial with support f
  bool contains(Face f) const;
  bool equigenerated() const;
  int min_degree() const;  // 0 for the zero ideal
  int max_degree() const;
  bool operator==(const Ideal&) const = default;

private:
  int n_ = 0;
  std::vector<Face> gens_;  // antichain, sorted lex
};

// I : x_f, generated by { g minus f : g generator }, minimalized
Ideal colon_ideal(const Ideal& i, Face f);
// I + (x_f)
Ideal add_generator(const Ideal& i, Face f);
// I intersect (x_f) = minimalized { g union f }
Ideal intersect_principal(const Ideal& i, Face f);
// (x_f) * I; every generator must be disjoint from f to stay squarefree
Ideal multiply_principal(const Ideal& i, Face f);
// true when every generator is a single variable (the zero ideal counts)
bool generated_by_variables(const Ideal& i);

}  // namespace clb
