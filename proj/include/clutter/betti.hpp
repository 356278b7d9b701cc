#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clutter/homology.hpp"
#include "clutter/ideal.hpp"

namespace clb {

// multigraded Betti numbers of a squarefree monomial ideal: entry (i, W) is
// the Betti number of the ideal (not the quotient) in homological degree i
// and squarefree multidegree W; only nonzero entries are stored
struct BettiTable {
  int n = 0;
  std::map<std::pair<int, std::uint64_t>, long long> entries;

  long long get(int i, Face w) const;
  void add(int i, Face w, long long c);
  long long total(int i) const;
  // coarse grading: (i, j) -> sum over |W| = j
  std::map<std::pair<int, int>, long long> graded() const;
  // max |W| - i over entries; empty table (zero ideal) has no regularity
  std::optional<int> regularity() const;
  // projective dimension of the quotient: 1 + max homological degree, 0 for
  // the empty table
  int pd_quotient() const;
  // linear strand vector: entry i is the (i, i+d) graded Betti number
  std::vector<long long> strand(int d) const;
  // shift vector of the quotient: t[0] = 0, t[i] = max degree in quotient
  // homological position i, up to pd_quotient
  std::vector<long long> t_vector() const;
  std::vector<long long> r_vector() const;  // r[i] = t[i] - i

  bool operator==(const BettiTable&) const = default;
};

BettiTable add_tables(const BettiTable& a, const BettiTable& b);

struct BettiOptions {
  int max_n = 16;  // refuse full-table sweeps above this many vertices
};

// single Hochster cell: reduced homology rank of the restriction of the
// Stanley-Reisner complex to W, in dimension |W| - i - 2
long long hochster_betti(const Ideal& i, int hom_degree, Face w, FieldSpec f);

// full multigraded table by the Hochster sweep over all W; the two versions
// return identical tables, the first distributes W cells across OpenMP
// threads, the second is the sequential reference
BettiTable betti_table(const Ideal& i, FieldSpec f, BettiOptions opt = {});
BettiTable betti_table_serial(const Ideal& i, FieldSpec f, BettiOptions opt = {});

// all Betti numbers sit on the strand |W| - i = d; requires an equigenerated
// ideal (the zero ideal passes vacuously)
bool has_linear_resolution(const Ideal& i, FieldSpec f, BettiOptions opt = {});

// smallest t >= max generator degree whose degree-t component has t-linear
// resolution; equals the regularity of the ideal
int regularity_by_components(const Ideal& i, FieldSpec f, BettiOptions opt = {});

struct QuotientsResult {
  SearchStatus status = SearchStatus::unknown;
  std::vector<Face> order;  // admissible generator ordering when found
  long long states = 0;
};
// search for a generator ordering with variable-generated colon ideals at
// every step; refuted is an exhaustive proof of nonexistence
QuotientsResult linear_quotients_search(const Ideal& i, long long budget = 1000000);

struct DiagnosticsReport {
  std::vector<long long> t, r;
  int regularity_quotient = 0;
  bool subadditive = true;
  std::vector<std::pair<int, int>> subadditivity_failures;
  bool special_shape = true;
  int peak_index = 0;  // first position where r reaches its maximum
  std::vector<int> shape_failures;
};
DiagnosticsReport resolution_diagnostics(const BettiTable& table);

struct CertificateReport {
  bool certified = false;
  std::vector<unsigned> torsion_primes;
};
// integral homology of every induced restriction of the Stanley-Reisner
// complex; certified means torsion-free everywhere, hence the Betti table is
// the same over every field
CertificateReport field_independence_certificate(const Ideal& i, BettiOptions opt = {});
CertificateReport field_independence_certificate_serial(const Ideal& i, BettiOptions opt = {});

struct StabilityReport {
  int d = 0;  // generator degree of the base ideal
  int r = 0;  // regularity of the colon ideal
  std::vector<std::pair<int, Face>> violations;  // entries above the bound that moved
};
// adding one squarefree generator x_F to an equigenerated ideal leaves every
// Betti number with |W| > d + i + r unchanged, r = reg(I : x_F); returns the
// (expected empty) list of violations
StabilityReport generator_stability_check(const Ideal& i, Face f, FieldSpec field,
                                          BettiOptions opt = {});

}  // namespace clb
