#include "clutter/reduction.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "clutter/stanley_reisner.hpp"

namespace clb {

UniformClutter apply_removal_step(const UniformClutter& c, const RemovalStep& step) {
  if (step.e.size() != c.d() - 1)
    throw InvalidStepError("step element " + step.e.str() + " is not a (d-1)-subset");
  if (!is_simplicial(c, step.e))
    throw InvalidStepError("step element " + step.e.str() + " is not simplicial");
  if (step.A.empty()) throw InvalidCircuitsError("empty circuit batch");
  for (Face f : step.A) {
    if (!step.e.proper_subset_of(f))
      throw InvalidCircuitsError("batch circuit " + f.str() + " does not contain " + step.e.str());
    if (!c.contains(f))
      throw InvalidCircuitsError("batch circuit " + f.str() + " is not a current circuit");
  }
  return difference(c, step.A);
}

namespace {

// s statistic of a step against the base clutter: variables i outside e with
// e+{i} outside the base, i.e. generators x_i x_e of the base ideal's colon
long long base_s_stat(const UniformClutter& base, Face e) {
  return base.n() - closed_neighborhood(base, e).size();
}

}  // namespace

ReplayOutcome verify_removal_sequence(const UniformClutter& base, const RemovalSequence& seq) {
  ReplayOutcome out;
  UniformClutter cur = base;
  std::vector<Face> removed;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const RemovalStep& step = seq.steps[k];
    StepStats st;
    try {
      UniformClutter next = apply_removal_step(cur, step);
      st.s = base_s_stat(base, step.e);
      for (Face f : removed)
        if (step.e.proper_subset_of(f)) ++st.t;
      out.stats.push_back(st);
      removed.insert(removed.end(), step.A.begin(), step.A.end());
      cur = next;
    } catch (const std::invalid_argument& ex) {
      out.failed_step = static_cast<int>(k);
      out.error = ex.what();
      return out;
    }
  }
  out.ok = true;
  out.final_clutter = cur;
  return out;
}

namespace {

struct SubclutterCtx {
  const UniformClutter& base;
  std::vector<Face> removable;  // circuits of base absent from the target
  long long budget;
  long long states = 0;
  bool out_of_budget = false;
  std::unordered_set<std::uint64_t> failed;  // removed-subset masks
  std::vector<RemovalStep> path;
};

// lexicographically first (d-1)-subset of f that is simplicial in cur
std::optional<Face> removal_witness(const UniformClutter& cur, Face f) {
  std::vector<Face> subs;
  for (int v : f.vertices()) subs.push_back(f.without(v));
  std::sort(subs.begin(), subs.end(), lex_less);
  for (Face e : subs)
    if (is_simplicial(cur, e)) return e;
  return std::nullopt;
}

bool subclutter_dfs(SubclutterCtx& ctx, const UniformClutter& cur, std::uint64_t removed_mask,
                    std::size_t removed_count) {
  if (removed_count == ctx.removable.size()) return true;
  if (++ctx.states > ctx.budget) {
    ctx.out_of_budget = true;
    return false;
  }
  if (ctx.failed.count(removed_mask)) return false;
  for (std::size_t idx = 0; idx < ctx.removable.size(); ++idx) {
    if ((removed_mask >> idx) & 1) continue;
    Face f = ctx.removable[idx];
    auto e = removal_witness(cur, f);
    if (!e) continue;
    ctx.path.push_back({*e, {f}});
    if (subclutter_dfs(ctx, difference(cur, {f}), removed_mask | (std::uint64_t{1} << idx),
                       removed_count + 1))
      return true;
    ctx.path.pop_back();
    if (ctx.out_of_budget) return false;
  }
  ctx.failed.insert(removed_mask);
  return false;
}

}  // namespace

SubclutterResult subclutter_search(const UniformClutter& c, const UniformClutter& d,
                                   long long budget) {
  if (c.n() != d.n() || c.d() != d.d())
    throw std::invalid_argument("subclutter search needs matching n and d");
  std::vector<Face> removable;
  for (Face f : c.circuits())
    if (!d.contains(f)) removable.push_back(f);
  for (Face f : d.circuits())
    if (!c.contains(f))
      throw std::invalid_argument("target circuit " + f.str() + " is missing from the source");
  if (removable.size() > 60)
    throw std::invalid_argument("too many removable circuits for the subset search");
  SubclutterCtx ctx{c, removable, budget};
  SubclutterResult res;
  bool found = subclutter_dfs(ctx, c, 0, 0);
  res.states = ctx.states;
  if (found) {
    res.status = SearchStatus::found;
    res.witness = RemovalSequence{ctx.path};
  } else {
    res.status = ctx.out_of_budget ? SearchStatus::unknown : SearchStatus::refuted;
  }
  return res;
}

namespace {

std::string clutter_key(const UniformClutter& c) {
  std::string s;
  s.reserve(c.circuits().size() * 8);
  for (Face f : c.circuits()) {
    std::uint64_t b = f.bits();
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((b >> (8 * i)) & 0xff));
  }
  return s;
}

struct DeletionCtx {
  long long budget;
  long long states = 0;
  bool out_of_budget = false;
  std::unordered_set<std::string> seen;
  std::vector<Face> path;
};

bool deletion_dfs(DeletionCtx& ctx, const UniformClutter& cur) {
  if (cur.size() == 0) return true;
  if (++ctx.states > ctx.budget) {
    ctx.out_of_budget = true;
    return false;
  }
  if (!ctx.seen.insert(clutter_key(cur)).second) return false;
  for (Face e : maximal_subcircuits(cur)) {
    if (!is_simplicial(cur, e)) continue;
    ctx.path.push_back(e);
    if (deletion_dfs(ctx, deletion(cur, e))) return true;
    ctx.path.pop_back();
    if (ctx.out_of_budget) return false;
  }
  return false;
}

}  // namespace

ChordalityResult chordality_search(const UniformClutter& c, ChordalityMode mode,
                                   long long budget) {
  ChordalityResult res;
  if (mode == ChordalityMode::whole_deletion) {
    DeletionCtx ctx{budget};
    bool found = deletion_dfs(ctx, c);
    res.states = ctx.states;
    if (found) {
      res.status = SearchStatus::found;
      res.order = ctx.path;
    } else {
      res.status = ctx.out_of_budget ? SearchStatus::unknown : SearchStatus::refuted;
    }
  } else {
    SubclutterResult sub = subclutter_search(c, UniformClutter(c.n(), c.d(), {}), budget);
    res.status = sub.status;
    res.states = sub.states;
    res.sequence = sub.witness;
  }
  return res;
}

BettiTable predicted_delta(const UniformClutter& c, Face e, Face f) {
  if (!c.contains(f)) throw std::invalid_argument("circuit " + f.str() + " is not in the clutter");
  if (!e.proper_subset_of(f) || e.size() != c.d() - 1)
    throw std::invalid_argument("element " + e.str() + " is not a (d-1)-subset of " + f.str());
  if (!is_simplicial(c, e))
    throw std::invalid_argument("element " + e.str() + " is not simplicial");
  Ideal colon = colon_ideal(circuit_ideal_of_complement(c), f);
  Face vars;
  for (int j : Face::full(c.n()).minus(f).vertices())
    if (colon.contains(Face().with(j))) vars = vars.with(j);
  BettiTable delta;
  delta.n = c.n();
  for (Face t : all_subsets(vars)) delta.add(t.size(), f.unite(t), 1);
  return delta;
}

SplittingReport splitting_check(const UniformClutter& c, Face e, Face f, FieldSpec field,
                                BettiOptions opt) {
  if (!c.contains(f) || !e.proper_subset_of(f) || e.size() != c.d() - 1 || !is_simplicial(c, e))
    throw std::invalid_argument("splitting check needs a simplicial element inside a circuit");
  SplittingReport rep;
  Ideal base = circuit_ideal_of_complement(c);
  Ideal colon = colon_ideal(base, f);

  std::vector<Face> expected_vars;
  for (int j : Face::full(c.n()).minus(closed_neighborhood(c, e)).vertices())
    expected_vars.push_back(Face().with(j));
  rep.colon_is_variables =
      generated_by_variables(colon) && colon == Ideal(c.n(), expected_vars);
  if (!rep.colon_is_variables) rep.detail += "colon ideal differs from the neighborhood variables; ";

  Ideal lhs = intersect_principal(base, f);
  Ideal rhs = multiply_principal(colon, f);
  rep.intersection_matches = lhs == rhs;
  if (!rep.intersection_matches) rep.detail += "intersection with the principal ideal differs; ";

  BettiTable tj = betti_table(add_generator(base, f), field, opt);
  BettiTable ti = betti_table(base, field, opt);
  BettiTable tp;
  tp.n = c.n();
  tp.add(0, f, 1);
  BettiTable tx = betti_table(lhs, field, opt);
  rep.betti_splits = true;
  std::set<std::pair<int, std::uint64_t>> keys;
  for (auto* t : {&tj, &ti, &tp})
    for (auto& [key, cnt] : t->entries) keys.insert(key);
  for (auto& [key, cnt] : tx.entries) keys.insert({key.first + 1, key.second});
  for (auto& [i, w] : keys) {
    long long want = ti.get(i, Face(w)) + tp.get(i, Face(w)) +
                     (i >= 1 ? tx.get(i - 1, Face(w)) : 0);
    if (tj.get(i, Face(w)) != want) {
      rep.betti_splits = false;
      rep.detail += "betti additivity fails at (" + std::to_string(i) + ", " + Face(w).str() + "); ";
    }
  }
  return rep;
}

StrandPrediction predicted_linear_strand(const UniformClutter& base, const RemovalSequence& seq,
                                         const BettiTable& base_table) {
  ReplayOutcome replay = verify_removal_sequence(base, seq);
  if (!replay.ok)
    throw std::invalid_argument("invalid removal sequence at step " +
                                std::to_string(replay.failed_step) + ": " + replay.error);
  StrandPrediction out;
  out.pd_quotient = base_table.pd_quotient();
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    long long reach = replay.stats[k].t + replay.stats[k].s +
                      static_cast<long long>(seq.steps[k].A.size());
    out.pd_quotient = std::max<int>(out.pd_quotient, static_cast<int>(reach));
  }
  std::vector<long long> strand = base_table.strand(base.d());
  strand.resize(std::max<std::size_t>(std::max(out.pd_quotient, 1), strand.size()), 0);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    long long t = replay.stats[k].t, s = replay.stats[k].s;
    for (long long j = 0; j < static_cast<long long>(seq.steps[k].A.size()); ++j)
      for (std::size_t i = 0; i < strand.size(); ++i)
        strand[i] += binomial(t + s + j, static_cast<long long>(i));
  }
  while (strand.size() > 1 && strand.back() == 0) strand.pop_back();
  out.strand = std::move(strand);
  return out;
}

RemovalHomologyReport removal_homology_check(const UniformClutter& c, Face e, Face f,
                                             FieldSpec field) {
  if (!c.contains(f) || !e.proper_subset_of(f) || e.size() != c.d() - 1 || !is_simplicial(c, e))
    throw std::invalid_argument("homology check needs a simplicial element inside a circuit");
  RemovalHomologyReport rep;
  rep.d = c.d();
  SimplicialComplex full = clique_complex(c);
  SimplicialComplex star_removed = remove_cofaces(full, e);
  SimplicialComplex circuit_removed = remove_cofaces(full, f);
  Face nb = closed_neighborhood(c, e);
  std::vector<Face> link_facets;
  for (int v : e.vertices()) link_facets.push_back(nb.without(v));
  SimplicialComplex link_join(c.n(), std::move(link_facets));

  HomologyProfile h_full = homology(full, field);
  HomologyProfile h_star = homology(star_removed, field);
  HomologyProfile h_circ = homology(circuit_removed, field);
  HomologyProfile h_join = homology(link_join, field);

  int top = std::max(full.dim(), c.d());
  for (int dim = c.d() - 1; dim <= top; ++dim)
    if (h_full.rank_at(dim) != h_star.rank_at(dim)) rep.above_matches = false;
  for (int dim = -1; dim <= top; ++dim) {
    if (dim == c.d() - 2) continue;
    if (h_full.rank_at(dim) != h_circ.rank_at(dim)) rep.off_degree_matches = false;
  }
  long long lhs = h_star.rank_at(c.d() - 2) - h_full.rank_at(c.d() - 2) +
                  h_join.rank_at(c.d() - 3) - h_star.rank_at(c.d() - 3);
  rep.boundary_identity = lhs == 0;
  return rep;
}

bool is_squarefree_stable(const Ideal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("stability of the unit ideal");
  if (!ideal.equigenerated())
    throw std::invalid_argument("stability asks for an equigenerated ideal");
  for (Face u : ideal.gens()) {
    int m = u.max_vertex();
    for (int j = 1; j < m; ++j) {
      if (u.contains(j)) continue;
      if (!ideal.contains(u.without(m).with(j))) return false;
    }
  }
  return true;
}

RemovalSequence stable_removal_sequence(const Ideal& ideal) {
  if (!is_squarefree_stable(ideal))
    throw std::invalid_argument("the ideal is not squarefree stable");
  std::vector<Face> gens = ideal.gens();
  std::sort(gens.begin(), gens.end());  // increasing colex
  RemovalSequence seq;
  for (Face u : gens) seq.steps.push_back({u.without(u.max_vertex()), {u}});
  return seq;
}

std::vector<long long> stable_betti_strand(const Ideal& ideal) {
  if (!is_squarefree_stable(ideal))
    throw std::invalid_argument("the ideal is not squarefree stable");
  int d = ideal.min_degree();
  long long top = 0;
  for (Face u : ideal.gens()) top = std::max<long long>(top, u.max_vertex() - d);
  std::vector<long long> out(static_cast<std::size_t>(top) + 1, 0);
  for (Face u : ideal.gens())
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += binomial(u.max_vertex() - d, static_cast<long long>(i));
  return out;
}

ObstructionReport obstruction_check(const SimplicialComplex& k, long long budget,
                                    BettiOptions opt) {
  if (k.is_void() || k.dim() < 1)
    throw std::invalid_argument("obstruction check needs a complex of dimension at least 1");
  ObstructionReport rep;
  rep.pure = k.pure();
  rep.homology_trivial = homology(k, FieldSpec::Z()).trivial();
  rep.no_free_face = free_faces(k).empty();
  // the facet clutter only exists for a pure complex; without it the
  // conclusions stay at their unknown/false defaults
  if (!rep.pure) return rep;

  int d = k.dim() + 1;
  UniformClutter facets(k.n(), d, k.facets());
  rep.clique_dim_matches = true;
  for (Face s : k_subsets(Face::full(k.n()), d + 1))
    if (is_clique(facets, s)) rep.clique_dim_matches = false;

  rep.whole_deletion = chordality_search(facets, ChordalityMode::whole_deletion, budget).status;
  rep.empty_subclutter = chordality_search(facets, ChordalityMode::empty_subclutter, budget).status;

  Ideal ideal = circuit_ideal_of_complement(facets);
  rep.linear_q = has_linear_resolution(ideal, FieldSpec::Q(), opt);
  rep.linear_gf2 = has_linear_resolution(ideal, FieldSpec::GF(2), opt);
  rep.linear_gf3 = has_linear_resolution(ideal, FieldSpec::GF(3), opt);
  rep.certificate = field_independence_certificate(ideal, opt);
  return rep;
}

}  // namespace clb
