#include "clutter/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace clb {

Ideal::Ideal(int n, std::vector<Face> gens) : n_(n) {
  if (n < 0 || n > 64) throw std::invalid_argument("n out of range 0..64");
  Face ground = Face::full(n);
  for (Face g : gens)
    if (!g.subset_of(ground))
      throw std::invalid_argument("generator " + g.str() + " not inside [" + std::to_string(n) + "]");
  // minimal generators: drop any monomial divisible by another
  for (Face g : gens) {
    bool minimal = true;
    for (Face h : gens) minimal = minimal && !h.proper_subset_of(g);
    if (minimal) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), lex_less);
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool Ideal::contains(Face f) const {
  for (Face g : gens_)
    if (g.subset_of(f)) return true;
  return false;
}

bool Ideal::equigenerated() const {
  for (Face g : gens_)
    if (g.size() != gens_[0].size()) return false;
  return true;
}

int Ideal::min_degree() const {
  int m = 0;
  for (Face g : gens_) m = (m == 0) ? g.size() : std::min(m, g.size());
  return m;
}

int Ideal::max_degree() const {
  int m = 0;
  for (Face g : gens_) m = std::max(m, g.size());
  return m;
}

Ideal colon_ideal(const Ideal& i, Face f) {
  std::vector<Face> gens;
  for (Face g : i.gens()) gens.push_back(g.minus(f));
  return Ideal(i.n(), std::move(gens));
}

Ideal add_generator(const Ideal& i, Face f) {
  std::vector<Face> gens = i.gens();
  gens.push_back(f);
  return Ideal(i.n(), std::move(gens));
}

Ideal intersect_principal(const Ideal& i, Face f) {
  std::vector<Face> gens;
  for (Face g : i.gens()) gens.push_back(g.unite(f));
  return Ideal(i.n(), std::move(gens));
}

Ideal multiply_principal(const Ideal& i, Face f) {
  std::vector<Face> gens;
  for (Face g : i.gens()) {
    if (g.intersects(f))
      throw std::invalid_argument("product with x_" + f.str() + " leaves squarefree monomials");
    gens.push_back(g.unite(f));
  }
  return Ideal(i.n(), std::move(gens));
}

bool generated_by_variables(const Ideal& i) {
  for (Face g : i.gens())
    if (g.size() != 1) return false;
  return true;
}

}  // namespace clb
