#include "clutter/random_gen.hpp"

#include <algorithm>
#include <set>

namespace clb {

int InstanceGen::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

bool InstanceGen::coin(double p) {
  return std::bernoulli_distribution(p)(eng_);
}

UniformClutter InstanceGen::clutter(int n, int d, double keep_prob,
                                    bool require_nonempty) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Face> circuits;
    for (Face f : k_subsets(Face::full(n), d))
      if (coin(keep_prob)) circuits.push_back(f);
    if (circuits.empty() && require_nonempty) continue;
    return UniformClutter(n, d, circuits);
  }
  // Probability keep_prob was tiny; fall back to one random circuit.
  auto all = k_subsets(Face::full(n), d);
  return UniformClutter(n, d, {all[static_cast<std::size_t>(
                                  uniform(0, static_cast<int>(all.size()) - 1))]});
}

std::optional<std::pair<Face, Face>> InstanceGen::simplicial_pair(
    const UniformClutter& c) {
  std::vector<Face> simp = simplicial_elements(c);
  // keep only elements that lie inside at least one circuit
  std::vector<std::pair<Face, std::vector<Face>>> usable;
  for (Face e : simp) {
    std::vector<Face> supersets;
    for (Face f : c.circuits())
      if (e.proper_subset_of(f)) supersets.push_back(f);
    if (!supersets.empty()) usable.emplace_back(e, std::move(supersets));
  }
  if (usable.empty()) return std::nullopt;
  auto& [e, supersets] =
      usable[static_cast<std::size_t>(uniform(0, static_cast<int>(usable.size()) - 1))];
  Face f = supersets[static_cast<std::size_t>(
      uniform(0, static_cast<int>(supersets.size()) - 1))];
  return std::make_pair(e, f);
}

RemovalSequence InstanceGen::removal_sequence(const UniformClutter& start,
                                              int max_steps) {
  RemovalSequence seq;
  UniformClutter cur = start;
  for (int k = 0; k < max_steps; ++k) {
    auto pick = simplicial_pair(cur);
    if (!pick) break;
    Face e = pick->first;
    std::vector<Face> supersets;
    for (Face f : cur.circuits())
      if (e.proper_subset_of(f)) supersets.push_back(f);
    std::vector<Face> batch;
    for (Face f : supersets)
      if (coin(0.5)) batch.push_back(f);
    if (batch.empty()) batch.push_back(pick->second);
    RemovalStep step{e, batch};
    cur = apply_removal_step(cur, step);
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

Ideal InstanceGen::ideal(int n, int min_deg, int max_deg, int draws) {
  std::vector<Face> gens;
  for (int k = 0; k < draws; ++k) {
    int deg = uniform(min_deg, std::min(max_deg, n));
    auto pool = k_subsets(Face::full(n), deg);
    gens.push_back(pool[static_cast<std::size_t>(
        uniform(0, static_cast<int>(pool.size()) - 1))]);
  }
  return Ideal(n, gens);
}

Ideal InstanceGen::stable_ideal(int n, int d, int seeds) {
  auto pool = k_subsets(Face::full(n), d);
  std::set<Face> gens;
  for (int k = 0; k < seeds; ++k)
    gens.insert(pool[static_cast<std::size_t>(
        uniform(0, static_cast<int>(pool.size()) - 1))]);
  // close under: largest variable of u traded for any smaller absent one
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Face> snapshot(gens.begin(), gens.end());
    for (Face u : snapshot) {
      int m = u.max_vertex();
      for (int j = 1; j < m; ++j) {
        if (u.contains(j)) continue;
        Face v = u.without(m).with(j);
        if (gens.insert(v).second) grew = true;
      }
    }
  }
  return Ideal(n, std::vector<Face>(gens.begin(), gens.end()));
}

}  // namespace clb
