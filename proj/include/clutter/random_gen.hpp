#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "clutter/clutter.hpp"
#include "clutter/ideal.hpp"
#include "clutter/reduction.hpp"

namespace clb {

// Seeded instance generator for randomized verification sweeps.  All draws go
// through one engine so a (seed, call sequence) pair reproduces exactly.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi);      // inclusive bounds
  bool coin(double p);              // true with probability p
  std::mt19937_64& engine() { return eng_; }

  // Random d-uniform clutter on [n]: every d-subset kept with probability
  // keep_prob (resampled until nonempty when require_nonempty).
  UniformClutter clutter(int n, int d, double keep_prob, bool require_nonempty = true);

  // A uniformly chosen simplicial element e of c together with a random
  // circuit F containing it; nullopt when c has none.
  std::optional<std::pair<Face, Face>> simplicial_pair(const UniformClutter& c);

  // Random walk of removal steps starting from `start`: up to max_steps
  // steps, each removing a random nonempty batch of circuits over a random
  // simplicial element.  May return an empty sequence.
  RemovalSequence removal_sequence(const UniformClutter& start, int max_steps);

  // Random squarefree ideal with generator degrees in [min_deg, max_deg]
  // (minimalized; may come out equigenerated by chance).
  Ideal ideal(int n, int min_deg, int max_deg, int draws);

  // Random equigenerated squarefree stable ideal: closes random degree-d
  // seeds under trading the largest variable for every smaller absent one.
  Ideal stable_ideal(int n, int d, int seeds);

 private:
  std::mt19937_64 eng_;
};

}  // namespace clb
