#include "clutter/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace clb {

std::string FieldSpec::str() const {
  switch (kind) {
    case Kind::rationals: return "q";
    case Kind::prime_field: return "gf:" + std::to_string(p);
    case Kind::integers: return "z";
  }
  return "?";
}

long long HomologyProfile::rank_at(int dim) const {
  int idx = dim + 1;
  if (idx < 0 || idx >= static_cast<int>(rank.size())) return 0;
  return rank[idx];
}

std::vector<unsigned long long> HomologyProfile::torsion_at(int dim) const {
  int idx = dim + 1;
  if (idx < 0 || idx >= static_cast<int>(torsion.size())) return {};
  return torsion[idx];
}

bool HomologyProfile::trivial() const {
  for (long long r : rank)
    if (r != 0) return false;
  for (auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

IntMat boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::unordered_map<std::uint64_t, int> row;
  row.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i].bits()] = static_cast<int>(i);
  IntMat m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    auto verts = upper[j].vertices();
    int sign = 1;
    for (int k = 0; k < static_cast<int>(verts.size()); ++k) {
      Face sub = upper[j].without(verts[k]);
      m.at(row.at(sub.bits()), static_cast<int>(j)) = sign;
      sign = -sign;
    }
  }
  return m;
}

HomologyProfile homology(const std::vector<std::vector<Face>>& by_card, FieldSpec f) {
  HomologyProfile out;
  if (by_card.empty()) return out;  // void complex
  int levels = static_cast<int>(by_card.size());
  out.top_dim = levels - 2;

  // ranks of the boundary maps; boundary[k]: C_{k-1} -> C_{k-2} in
  // cardinality terms, so index k covers maps for k = 1..levels-1
  std::vector<int> brank(levels + 1, 0);
  std::vector<SmithResult> smith(levels + 1);
  for (int k = 1; k < levels; ++k) {
    IntMat m = boundary_matrix(by_card[k - 1], by_card[k]);
    switch (f.kind) {
      case FieldSpec::Kind::rationals: brank[k] = rank_rational(m); break;
      case FieldSpec::Kind::prime_field: brank[k] = rank_mod_p(m, f.p); break;
      case FieldSpec::Kind::integers:
        smith[k] = smith_normal_form(m);
        brank[k] = smith[k].rank;
        break;
    }
  }
  out.rank.assign(levels, 0);
  out.torsion.assign(levels, {});
  for (int k = 0; k < levels; ++k) {
    long long faces = static_cast<long long>(by_card[k].size());
    long long upper = (k + 1 < levels) ? brank[k + 1] : 0;
    out.rank[k] = faces - brank[k] - upper;
    if (f.kind == FieldSpec::Kind::integers && k + 1 < levels) {
      for (const mpz_class& d : smith[k + 1].invariant_factors)
        if (d > 1) {
          if (!d.fits_ulong_p()) throw std::runtime_error("torsion coefficient out of range");
          out.torsion[k].push_back(d.get_ui());
        }
    }
  }
  return out;
}

HomologyProfile homology(const SimplicialComplex& k, FieldSpec f) {
  return homology(k.faces_by_card(), f);
}

std::vector<Face> free_faces(const SimplicialComplex& k) {
  std::vector<Face> out;
  for (Face s : k.all_faces()) {
    if (s.empty()) continue;
    int count = 0;
    for (Face g : k.facets())
      if (s.proper_subset_of(g)) ++count;
    if (count == 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

SimplicialComplex collapse_at(const SimplicialComplex& k, Face free_face) {
  return remove_cofaces(k, free_face);
}

namespace {

// exact canonical key (facets are kept sorted), so memo hits are never
// hash collisions
std::string complex_key(const SimplicialComplex& k) {
  std::string s;
  s.reserve(k.facets().size() * 8);
  for (Face f : k.facets()) {
    std::uint64_t b = f.bits();
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((b >> (8 * i)) & 0xff));
  }
  return s;
}

struct CollapseCtx {
  const std::function<bool(const SimplicialComplex&)>& stop;
  long long budget;
  long long states = 0;
  bool out_of_budget = false;
  std::unordered_set<std::string> seen;
  std::vector<Face> path;
};

bool collapse_dfs(CollapseCtx& ctx, const SimplicialComplex& cur) {
  if (ctx.stop(cur)) return true;
  if (++ctx.states > ctx.budget) {
    ctx.out_of_budget = true;
    return false;
  }
  if (!ctx.seen.insert(complex_key(cur)).second) return false;
  for (Face s : free_faces(cur)) {
    ctx.path.push_back(s);
    if (collapse_dfs(ctx, collapse_at(cur, s))) return true;
    ctx.path.pop_back();
    if (ctx.out_of_budget) return false;
  }
  return false;
}

}  // namespace

CollapseResult collapse_search(const SimplicialComplex& k,
                               const std::function<bool(const SimplicialComplex&)>& stop,
                               long long budget) {
  CollapseCtx ctx{stop, budget};
  CollapseResult res;
  bool found = collapse_dfs(ctx, k);
  res.states = ctx.states;
  if (found) {
    res.status = SearchStatus::found;
    res.sequence = ctx.path;
  } else {
    res.status = ctx.out_of_budget ? SearchStatus::unknown : SearchStatus::refuted;
  }
  return res;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::refuted: return "refuted";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

}  // namespace clb
