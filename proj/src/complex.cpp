#include "clutter/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace clb {

SimplicialComplex SimplicialComplex::void_complex(int n) { return SimplicialComplex(n, {}); }

SimplicialComplex SimplicialComplex::empty_complex(int n) { return SimplicialComplex(n, {Face()}); }

SimplicialComplex SimplicialComplex::simplex(int n, Face f) { return SimplicialComplex(n, {f}); }

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> faces) : n_(n) {
  if (n < 0 || n > 64) throw std::invalid_argument("n out of range 0..64");
  Face ground = Face::full(n);
  for (Face f : faces)
    if (!f.subset_of(ground)) throw std::invalid_argument("face " + f.str() + " not inside [" + std::to_string(n) + "]");
  // keep maximal faces only
  for (Face f : faces) {
    bool maximal = true;
    for (Face g : faces) maximal = maximal && !f.proper_subset_of(g);
    if (maximal) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), lex_less);
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

int SimplicialComplex::dim() const {
  if (is_void()) return kVoidDim;
  int mx = 0;
  for (Face f : facets_) mx = std::max(mx, f.size());
  return mx - 1;
}

bool SimplicialComplex::pure() const {
  for (Face f : facets_)
    if (f.size() - 1 != dim()) return false;
  return true;
}

bool SimplicialComplex::is_face(Face f) const {
  for (Face g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

Face SimplicialComplex::support() const {
  Face s;
  for (Face f : facets_) s = s.unite(f);
  return s;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_card() const {
  std::vector<std::vector<Face>> out;
  if (is_void()) return out;
  out.resize(dim() + 2);
  std::unordered_set<std::uint64_t> seen;
  for (Face f : facets_)
    for (Face s : all_subsets(f))
      if (seen.insert(s.bits()).second) out[s.size()].push_back(s);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (auto& level : faces_by_card())
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

long long SimplicialComplex::face_count() const {
  long long c = 0;
  for (auto& level : faces_by_card()) c += static_cast<long long>(level.size());
  return c;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, Face w) {
  std::vector<Face> faces;
  for (Face f : k.facets()) faces.push_back(f.intersect(w));
  return SimplicialComplex(k.n(), std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int i, bool pure) {
  if (k.is_void()) throw std::invalid_argument("skeleton of the void complex");
  if (i > k.dim()) throw std::invalid_argument("skeleton dimension exceeds complex dimension");
  if (i < -1) throw std::invalid_argument("skeleton dimension below -1");
  std::vector<Face> faces;
  if (pure) {
    // generated by the i-dimensional faces
    auto by_card = k.faces_by_card();
    faces = by_card[i + 1];
  } else {
    for (Face f : k.facets()) {
      if (f.size() - 1 <= i) {
        faces.push_back(f);
      } else {
        for (Face s : k_subsets(f, i + 1)) faces.push_back(s);
      }
    }
  }
  return SimplicialComplex(k.n(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.n() != b.n()) throw std::invalid_argument("join needs matching ground sets");
  if (a.support().intersects(b.support()))
    throw std::invalid_argument("join needs disjoint supports");
  std::vector<Face> faces;
  for (Face f : a.facets())
    for (Face g : b.facets()) faces.push_back(f.unite(g));
  return SimplicialComplex(a.n(), std::move(faces));
}

SimplicialComplex boundary_of_simplex(int n, Face f) {
  std::vector<Face> faces;
  for (int v : f.vertices()) faces.push_back(f.without(v));
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex remove_cofaces(const SimplicialComplex& k, Face e) {
  if (e.empty()) throw std::invalid_argument("remove_cofaces needs a nonempty face");
  std::vector<Face> faces;
  for (Face f : k.all_faces())
    if (!e.subset_of(f)) faces.push_back(f);
  return SimplicialComplex(k.n(), std::move(faces));
}

}  // namespace clb
