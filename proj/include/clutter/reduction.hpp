#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clutter/betti.hpp"
#include "clutter/clutter.hpp"
#include "clutter/complex.hpp"

namespace clb {

// one reduction step: a simplicial (d-1)-subset e and a nonempty batch A of
// circuits containing e that get removed together
struct RemovalStep {
  Face e;
  std::vector<Face> A;
};

struct RemovalSequence {
  std::vector<RemovalStep> steps;
};

// per-step replay data: t = circuits removed by earlier steps that contain
// this step's e; s = variables x_i with x_i * x_e in the ideal of the base
// clutter's complement
struct StepStats {
  long long t = 0;
  long long s = 0;
};

// e not simplicial at the time of the step
struct InvalidStepError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// A empty, or some member is not a current circuit containing e
struct InvalidCircuitsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

UniformClutter apply_removal_step(const UniformClutter& c, const RemovalStep& step);

struct ReplayOutcome {
  bool ok = false;
  int failed_step = -1;  // index of the first invalid step, -1 when ok
  std::string error;
  std::optional<UniformClutter> final_clutter;
  std::vector<StepStats> stats;
};
// replays the sequence from base, validating every step and collecting stats
ReplayOutcome verify_removal_sequence(const UniformClutter& base, const RemovalSequence& seq);

struct SubclutterResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<RemovalSequence> witness;
  long long states = 0;
};
// can d be reached from c by removal steps? Steps are normalized to
// singletons (a batch splits into singletons because e stays simplicial
// while circuits containing it are removed), so the search runs over subsets
// of c minus d; refuted is an exhaustive proof
SubclutterResult subclutter_search(const UniformClutter& c, const UniformClutter& d,
                                   long long budget = 1000000);

enum class ChordalityMode { whole_deletion, empty_subclutter };

struct ChordalityResult {
  SearchStatus status = SearchStatus::unknown;
  std::vector<Face> order;                  // whole_deletion witness
  std::optional<RemovalSequence> sequence;  // empty_subclutter witness
  long long states = 0;
};
// whole_deletion: iteratively delete every circuit containing some
// simplicial maximal subcircuit until no circuit remains;
// empty_subclutter: reach the empty clutter by removal steps. The first
// implies the second; the modes are tracked separately.
ChordalityResult chordality_search(const UniformClutter& c, ChordalityMode mode,
                                   long long budget = 1000000);

// predicted change of the ideal's Betti table when the circuit f (containing
// the simplicial e) is removed from c, i.e. when x_f is added to the ideal
// of the complement: +1 in exactly the cells (|T|, f+T) for T a set of
// variables of the colon ideal
BettiTable predicted_delta(const UniformClutter& c, Face e, Face f);

struct SplittingReport {
  bool colon_is_variables = false;     // colon generated by the expected variables
  bool intersection_matches = false;   // I and (x_f) intersect in x_f * colon
  bool betti_splits = false;           // additivity of the three tables
  std::string detail;
};
SplittingReport splitting_check(const UniformClutter& c, Face e, Face f, FieldSpec field,
                                BettiOptions opt = {});

struct StrandPrediction {
  std::vector<long long> strand;  // predicted (i, i+d) Betti numbers of the result
  int pd_quotient = 0;
};
// closed-form linear strand and projective dimension after a removal
// sequence, from the base table and the per-step (t, s, |A|) data
StrandPrediction predicted_linear_strand(const UniformClutter& base, const RemovalSequence& seq,
                                         const BettiTable& base_table);

struct RemovalHomologyReport {
  bool above_matches = true;      // ranks agree above dimension d-2 after dropping e's cofaces
  bool off_degree_matches = true; // ranks agree away from d-2 after removing the circuit
  bool boundary_identity = true;  // rank bookkeeping in dimensions d-2, d-3
  int d = 0;
};
// homology bookkeeping for one circuit removal: compares the clique complex,
// the complex minus cofaces of e, the clique complex after removing f, and
// the boundary-of-e join with the rest of e's neighborhood
RemovalHomologyReport removal_homology_check(const UniformClutter& c, Face e, Face f,
                                             FieldSpec field);

// every generator stays inside the ideal when its largest variable is traded
// for any smaller absent one; requires an equigenerated ideal
bool is_squarefree_stable(const Ideal& i);
// the canonical removal sequence of a squarefree stable ideal: generators in
// increasing colex order, each removed at its largest variable
RemovalSequence stable_removal_sequence(const Ideal& i);
// closed-form linear strand of a squarefree stable ideal: entry i is the sum
// of binomial(max_vertex(u) - d, i) over generators u
std::vector<long long> stable_betti_strand(const Ideal& i);

struct ObstructionReport {
  // hypotheses on the pure (d-1)-dimensional complex
  bool pure = false;
  bool homology_trivial = false;  // reduced integral homology vanishes everywhere
  bool no_free_face = false;
  bool clique_dim_matches = false;  // the facet clutter has no clique of size d+1
  bool hypotheses_hold() const {
    return pure && homology_trivial && no_free_face && clique_dim_matches;
  }
  // conclusions for the facet clutter and its attached ideal
  SearchStatus whole_deletion = SearchStatus::unknown;     // expected refuted
  SearchStatus empty_subclutter = SearchStatus::unknown;   // expected refuted
  bool linear_q = false, linear_gf2 = false, linear_gf3 = false;
  CertificateReport certificate;
};
// certifies that a homology-trivial pure complex with no free face and no
// oversized clique yields a non-chordal facet clutter whose attached ideal
// has a linear resolution over every field
ObstructionReport obstruction_check(const SimplicialComplex& k, long long budget = 1000000,
                                    BettiOptions opt = {});

}  // namespace clb
