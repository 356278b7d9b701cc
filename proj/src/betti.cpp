#include "clutter/betti.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "clutter/stanley_reisner.hpp"

namespace clb {

long long BettiTable::get(int i, Face w) const {
  auto it = entries.find({i, w.bits()});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, Face w, long long c) {
  if (c == 0) return;
  auto key = std::make_pair(i, w.bits());
  auto [it, fresh] = entries.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) entries.erase(it);
  }
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (auto& [key, c] : entries)
    if (key.first == i) s += c;
  return s;
}

std::map<std::pair<int, int>, long long> BettiTable::graded() const {
  std::map<std::pair<int, int>, long long> out;
  for (auto& [key, c] : entries) out[{key.first, Face(key.second).size()}] += c;
  return out;
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> r;
  for (auto& [key, c] : entries) {
    int v = Face(key.second).size() - key.first;
    if (!r || v > *r) r = v;
  }
  return r;
}

int BettiTable::pd_quotient() const {
  int mx = -1;
  for (auto& [key, c] : entries) mx = std::max(mx, key.first);
  return mx + 1;
}

std::vector<long long> BettiTable::strand(int d) const {
  std::vector<long long> out(std::max(pd_quotient(), 1), 0);
  for (auto& [key, c] : entries) {
    auto [i, w] = key;
    if (Face(w).size() == i + d) out[i] += c;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long long> BettiTable::t_vector() const {
  int pd = pd_quotient();
  std::vector<long long> t(pd + 1, 0);
  for (auto& [key, c] : entries) {
    auto [i, w] = key;
    t[i + 1] = std::max(t[i + 1], static_cast<long long>(Face(w).size()));
  }
  return t;
}

std::vector<long long> BettiTable::r_vector() const {
  std::vector<long long> r = t_vector();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= static_cast<long long>(i);
  return r;
}

BettiTable add_tables(const BettiTable& a, const BettiTable& b) {
  BettiTable out = a;
  out.n = std::max(a.n, b.n);
  for (auto& [key, c] : b.entries) out.add(key.first, Face(key.second), c);
  return out;
}

namespace {

void check_betti_input(const Ideal& i, FieldSpec f, const BettiOptions& opt) {
  if (i.is_unit()) throw std::invalid_argument("Betti numbers of the unit ideal are not defined here");
  if (i.n() > opt.max_n)
    throw std::invalid_argument("ground set exceeds the table guard (" + std::to_string(opt.max_n) +
                                "); raise max_n explicitly for larger sweeps");
  if (f.kind == FieldSpec::Kind::integers)
    throw std::invalid_argument("Betti numbers need field coefficients (q or gf:p)");
}

// faces of the Stanley-Reisner complex restricted to w, grouped by
// cardinality (index 0 holds the empty face)
std::vector<std::vector<Face>> restricted_faces(const Ideal& ideal, Face w) {
  std::vector<std::vector<Face>> by_card(w.size() + 1);
  int top = 0;
  for (Face s : all_subsets(w))
    if (sr_is_face(ideal, s)) {
      by_card[s.size()].push_back(s);
      top = std::max(top, s.size());
    }
  by_card.resize(top + 1);
  if (by_card[0].empty()) by_card.clear();  // no faces at all: void restriction
  for (auto& level : by_card) std::sort(level.begin(), level.end());
  return by_card;
}

std::vector<std::pair<int, long long>> hochster_cells(const Ideal& ideal, Face w, FieldSpec f) {
  std::vector<std::pair<int, long long>> out;
  HomologyProfile prof = homology(restricted_faces(ideal, w), f);
  for (int i = 0; i < w.size() || i == 0; ++i) {
    long long v = prof.rank_at(w.size() - i - 2);
    if (v != 0) out.emplace_back(i, v);
  }
  return out;
}

}  // namespace

long long hochster_betti(const Ideal& ideal, int hom_degree, Face w, FieldSpec f) {
  if (f.kind == FieldSpec::Kind::integers)
    throw std::invalid_argument("Betti numbers need field coefficients (q or gf:p)");
  if (ideal.is_unit()) throw std::invalid_argument("Betti numbers of the unit ideal are not defined here");
  HomologyProfile prof = homology(restricted_faces(ideal, w), f);
  return prof.rank_at(w.size() - hom_degree - 2);
}

BettiTable betti_table_serial(const Ideal& ideal, FieldSpec f, BettiOptions opt) {
  check_betti_input(ideal, f, opt);
  BettiTable out;
  out.n = ideal.n();
  for (Face w : all_subsets(Face::full(ideal.n())))
    for (auto [i, v] : hochster_cells(ideal, w, f)) out.add(i, w, v);
  return out;
}

BettiTable betti_table(const Ideal& ideal, FieldSpec f, BettiOptions opt) {
  check_betti_input(ideal, f, opt);
  std::vector<Face> subsets = all_subsets(Face::full(ideal.n()));
  std::vector<std::vector<std::pair<int, long long>>> cells(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(subsets.size()); ++idx)
    cells[idx] = hochster_cells(ideal, subsets[idx], f);
  BettiTable out;
  out.n = ideal.n();
  for (std::size_t idx = 0; idx < subsets.size(); ++idx)
    for (auto [i, v] : cells[idx]) out.add(i, subsets[idx], v);
  return out;
}

bool has_linear_resolution(const Ideal& ideal, FieldSpec f, BettiOptions opt) {
  if (ideal.is_zero()) return true;
  if (!ideal.equigenerated())
    throw std::invalid_argument("linear resolution asks for an equigenerated ideal");
  int d = ideal.min_degree();
  for (auto& [key, c] : betti_table(ideal, f, opt).entries)
    if (Face(key.second).size() - key.first != d) return false;
  return true;
}

int regularity_by_components(const Ideal& ideal, FieldSpec f, BettiOptions opt) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("regularity of a degenerate ideal");
  for (int t = ideal.max_degree(); t <= ideal.n(); ++t) {
    Ideal comp = component_ideal(ideal, t, opt.max_n).first;
    if (has_linear_resolution(comp, f, opt)) return t;
  }
  throw std::logic_error("no linear component found");  // unreachable: top component is principal
}

namespace {

struct QuotientsCtx {
  const std::vector<Face>& gens;
  long long budget;
  long long states = 0;
  bool out_of_budget = false;
  std::unordered_set<std::uint64_t> failed;  // generator index sets
  std::vector<Face> order;
};

// the colon of the chosen set by g is variable-generated iff every residual
// contains a singleton residual
bool admissible(const std::vector<Face>& gens, std::uint64_t chosen, std::size_t g) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (!((chosen >> a) & 1)) continue;
    Face res = gens[a].minus(gens[g]);
    bool covered = false;
    for (std::size_t b = 0; b < gens.size() && !covered; ++b) {
      if (!((chosen >> b) & 1)) continue;
      Face other = gens[b].minus(gens[g]);
      covered = other.size() == 1 && other.subset_of(res);
    }
    if (!covered) return false;
  }
  return true;
}

bool quotients_dfs(QuotientsCtx& ctx, std::uint64_t chosen) {
  if (ctx.order.size() == ctx.gens.size()) return true;
  if (++ctx.states > ctx.budget) {
    ctx.out_of_budget = true;
    return false;
  }
  if (ctx.failed.count(chosen)) return false;
  for (std::size_t g = 0; g < ctx.gens.size(); ++g) {
    if ((chosen >> g) & 1) continue;
    if (!admissible(ctx.gens, chosen, g)) continue;
    ctx.order.push_back(ctx.gens[g]);
    if (quotients_dfs(ctx, chosen | (std::uint64_t{1} << g))) return true;
    ctx.order.pop_back();
    if (ctx.out_of_budget) return false;
  }
  ctx.failed.insert(chosen);
  return false;
}

}  // namespace

QuotientsResult linear_quotients_search(const Ideal& ideal, long long budget) {
  if (ideal.gens().size() > 60)
    throw std::invalid_argument("too many generators for the ordering search");
  QuotientsCtx ctx{ideal.gens(), budget};
  QuotientsResult res;
  bool found = quotients_dfs(ctx, 0);
  res.states = ctx.states;
  if (found) {
    res.status = SearchStatus::found;
    res.order = ctx.order;
  } else {
    res.status = ctx.out_of_budget ? SearchStatus::unknown : SearchStatus::refuted;
  }
  return res;
}

DiagnosticsReport resolution_diagnostics(const BettiTable& table) {
  DiagnosticsReport rep;
  rep.t = table.t_vector();
  rep.r = table.r_vector();
  int pd = table.pd_quotient();
  long long c = *std::max_element(rep.r.begin(), rep.r.end());
  rep.regularity_quotient = static_cast<int>(c);
  for (int i = 1; i <= pd; ++i)
    for (int j = i; i + j <= pd; ++j)
      if (rep.t[i + j] > rep.t[i] + rep.t[j]) {
        rep.subadditive = false;
        rep.subadditivity_failures.emplace_back(i, j);
      }
  int g = 0;
  while (rep.r[g] != c) ++g;
  rep.peak_index = g;
  for (int i = 0; i < g; ++i)
    if (rep.r[i] > rep.r[i + 1]) {
      rep.special_shape = false;
      rep.shape_failures.push_back(i);
    }
  for (int i = g; i < pd; ++i)
    if (rep.r[i + 1] > rep.r[i]) {
      rep.special_shape = false;
      rep.shape_failures.push_back(i);
    }
  return rep;
}

namespace {

std::vector<unsigned> torsion_primes_at(const Ideal& ideal, Face w) {
  std::vector<unsigned> out;
  HomologyProfile prof = homology(restricted_faces(ideal, w), FieldSpec::Z());
  for (auto& level : prof.torsion)
    for (unsigned long long t : level)
      for (unsigned p : prime_factors(mpz_class(static_cast<unsigned long>(t))))
        out.push_back(p);
  return out;
}

CertificateReport certificate_merge(std::vector<std::vector<unsigned>> primes) {
  CertificateReport rep;
  for (auto& v : primes)
    rep.torsion_primes.insert(rep.torsion_primes.end(), v.begin(), v.end());
  std::sort(rep.torsion_primes.begin(), rep.torsion_primes.end());
  rep.torsion_primes.erase(std::unique(rep.torsion_primes.begin(), rep.torsion_primes.end()),
                           rep.torsion_primes.end());
  rep.certified = rep.torsion_primes.empty();
  return rep;
}

}  // namespace

CertificateReport field_independence_certificate_serial(const Ideal& ideal, BettiOptions opt) {
  if (ideal.is_unit()) throw std::invalid_argument("certificate of the unit ideal");
  if (ideal.n() > opt.max_n) throw std::invalid_argument("ground set exceeds the table guard");
  std::vector<std::vector<unsigned>> primes;
  for (Face w : all_subsets(Face::full(ideal.n()))) primes.push_back(torsion_primes_at(ideal, w));
  return certificate_merge(std::move(primes));
}

CertificateReport field_independence_certificate(const Ideal& ideal, BettiOptions opt) {
  if (ideal.is_unit()) throw std::invalid_argument("certificate of the unit ideal");
  if (ideal.n() > opt.max_n) throw std::invalid_argument("ground set exceeds the table guard");
  std::vector<Face> subsets = all_subsets(Face::full(ideal.n()));
  std::vector<std::vector<unsigned>> primes(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(subsets.size()); ++idx)
    primes[idx] = torsion_primes_at(ideal, subsets[idx]);
  return certificate_merge(std::move(primes));
}

StabilityReport generator_stability_check(const Ideal& ideal, Face f, FieldSpec field,
                                          BettiOptions opt) {
  if (ideal.is_zero()) throw std::invalid_argument("stability check needs a nonzero base ideal");
  if (!ideal.equigenerated())
    throw std::invalid_argument("stability check needs an equigenerated base ideal");
  if (ideal.contains(f)) throw std::invalid_argument("the added monomial already lies in the ideal");
  if (static_cast<int>(f.size()) < ideal.min_degree())
    throw std::invalid_argument("the added monomial must have degree at least the generator degree");
  StabilityReport rep;
  rep.d = ideal.min_degree();
  Ideal colon = colon_ideal(ideal, f);
  auto creg = betti_table(colon, field, opt).regularity();
  rep.r = creg.value();  // colon contains the nonzero ideal, so it is nonzero
  BettiTable before = betti_table(ideal, field, opt);
  BettiTable after = betti_table(add_generator(ideal, f), field, opt);
  std::set<std::pair<int, std::uint64_t>> keys;
  for (auto& [key, c] : before.entries) keys.insert(key);
  for (auto& [key, c] : after.entries) keys.insert(key);
  for (auto& key : keys) {
    auto [i, w] = key;
    if (Face(w).size() <= rep.d + i + rep.r) continue;
    if (before.get(i, Face(w)) != after.get(i, Face(w))) rep.violations.emplace_back(i, Face(w));
  }
  return rep;
}

}  // namespace clb
