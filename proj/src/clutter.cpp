#include "clutter/clutter.hpp"

#include <algorithm>
#include <stdexcept>

namespace clb {

UniformClutter::UniformClutter(int n, int d, std::vector<Face> circuits)
    : n_(n), d_(d), circuits_(std::move(circuits)) {
  if (n < 0 || n > 64) throw std::invalid_argument("n out of range 0..64");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  Face ground = Face::full(n);
  for (Face f : circuits_) {
    if (f.size() != d) throw std::invalid_argument("circuit " + f.str() + " is not a " + std::to_string(d) + "-set");
    if (!f.subset_of(ground)) throw std::invalid_argument("circuit " + f.str() + " not inside [" + std::to_string(n) + "]");
  }
  std::sort(circuits_.begin(), circuits_.end(), lex_less);
  auto dup = std::adjacent_find(circuits_.begin(), circuits_.end());
  if (dup != circuits_.end()) throw std::invalid_argument("duplicate circuit " + dup->str());
}

bool UniformClutter::contains(Face f) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), f, lex_less);
}

UniformClutter complete_clutter(int n, int d) {
  return UniformClutter(n, d, k_subsets(Face::full(n), d));
}

UniformClutter complement(const UniformClutter& c) {
  std::vector<Face> out;
  for (Face f : k_subsets(Face::full(c.n()), c.d()))
    if (!c.contains(f)) out.push_back(f);
  return UniformClutter(c.n(), c.d(), std::move(out));
}

UniformClutter deletion(const UniformClutter& c, Face e) {
  std::vector<Face> out;
  for (Face f : c.circuits())
    if (!e.subset_of(f)) out.push_back(f);
  return UniformClutter(c.n(), c.d(), std::move(out));
}

UniformClutter difference(const UniformClutter& a, const std::vector<Face>& remove) {
  std::vector<Face> out;
  for (Face f : a.circuits()) {
    bool drop = false;
    for (Face r : remove) drop = drop || r == f;
    if (!drop) out.push_back(f);
  }
  return UniformClutter(a.n(), a.d(), std::move(out));
}

Face closed_neighborhood(const UniformClutter& c, Face e) {
  if (e.size() != c.d() - 1)
    throw std::invalid_argument("closed neighborhood needs a (d-1)-subset, got " + e.str());
  Face nb = e;
  for (Face f : c.circuits())
    if (e.subset_of(f)) nb = nb.unite(f);
  return nb;
}

bool is_clique(const UniformClutter& c, Face f) {
  if (f.size() < c.d()) return true;
  for (Face s : k_subsets(f, c.d()))
    if (!c.contains(s)) return false;
  return true;
}

std::vector<Face> maximal_subcircuits(const UniformClutter& c) {
  std::vector<Face> out;
  for (Face f : c.circuits())
    for (int v : f.vertices()) out.push_back(f.without(v));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial(const UniformClutter& c, Face e) {
  return is_clique(c, closed_neighborhood(c, e));
}

std::vector<Face> simplicial_elements(const UniformClutter& c) {
  std::vector<Face> out;
  for (Face e : k_subsets(Face::full(c.n()), c.d() - 1))
    if (is_simplicial(c, e)) out.push_back(e);
  return out;
}

}  // namespace clb
