#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "clutter/betti.hpp"
#include "clutter/clutter.hpp"
#include "clutter/complex.hpp"
#include "clutter/fixtures.hpp"
#include "clutter/homology.hpp"
#include "clutter/ideal.hpp"
#include "clutter/random_gen.hpp"
#include "clutter/stanley_reisner.hpp"

using namespace clb;

namespace {

// Independent oracle: the multigraded Betti number in degree W is the reduced
// homology, one dimension down, of the complex of subsets S of W whose
// complement-in-W monomial lies in the ideal. Built directly from ideal
// membership; shares nothing with the engine's restriction sweep.
BettiTable koszul_oracle(const Ideal& ideal, FieldSpec field) {
  BettiTable t;
  t.n = ideal.n();
  for (Face w : all_subsets(Face::full(ideal.n()))) {
    if (!ideal.contains(w)) continue;  // otherwise the complex below is void
    std::vector<Face> faces;
    for (Face s : all_subsets(w))
      if (ideal.contains(w.minus(s))) faces.push_back(s);
    SimplicialComplex kw(ideal.n(), faces);
    auto h = homology(kw, field);
    for (int i = 0; i <= w.size(); ++i) {
      long long rank = h.rank_at(i - 1);
      if (rank != 0) t.add(i, w, rank);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("betti table struct bookkeeping") {
  BettiTable t;
  t.n = 5;
  t.add(0, Face::of({1, 2}), 1);
  t.add(0, Face::of({3, 4}), 1);
  t.add(1, Face::of({1, 2, 3, 4}), 2);
  t.add(1, Face::of({1, 2, 3, 4}), 1);  // accumulates
  CHECK(t.get(1, Face::of({1, 2, 3, 4})) == 3);
  CHECK(t.get(2, Face::full(5)) == 0);
  CHECK(t.total(0) == 2);
  CHECK(t.total(1) == 3);
  auto g = t.graded();
  CHECK(g.at({0, 2}) == 2);
  CHECK(g.at({1, 4}) == 3);
  CHECK(*t.regularity() == 3);
  CHECK(t.pd_quotient() == 2);
  CHECK(t.strand(2) == std::vector<long long>{2});  // trailing zeros trimmed
  CHECK(t.t_vector() == std::vector<long long>{0, 2, 4});
  CHECK(t.r_vector() == std::vector<long long>{0, 1, 2});

  BettiTable empty;
  empty.n = 4;
  CHECK(!empty.regularity().has_value());
  CHECK(empty.pd_quotient() == 0);
  CHECK(empty.t_vector() == std::vector<long long>{0});

  BettiTable sum = add_tables(t, t);
  CHECK(sum.get(1, Face::of({1, 2, 3, 4})) == 6);
  CHECK(sum.entries.size() == t.entries.size());
}

TEST_CASE("engine tables match the upper-Koszul oracle on random ideals") {
  InstanceGen gen(101);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = gen.uniform(3, 6);
    Ideal ideal = gen.ideal(n, 1, std::min(n, 4), gen.uniform(1, 5));
    if (ideal.is_unit()) continue;
    for (auto field : {FieldSpec::Q(), FieldSpec::GF(2)}) {
      auto engine = betti_table(ideal, field);
      auto oracle = koszul_oracle(ideal, field);
      CHECK(engine.n == oracle.n);
      CHECK(engine.entries == oracle.entries);
      if (!engine.entries.empty()) ++nontrivial;
    }
  }
  CHECK(nontrivial >= 40);
}

TEST_CASE("engine tables match the oracle on clutter ideals over three fields") {
  InstanceGen gen(103);
  for (int trial = 0; trial < 12; ++trial) {
    int n = gen.uniform(4, 6), d = gen.uniform(2, 3);
    Ideal ideal = circuit_ideal_of_complement(gen.clutter(n, d, 0.5));
    if (ideal.is_zero()) continue;
    for (auto field : {FieldSpec::Q(), FieldSpec::GF(2), FieldSpec::GF(3)}) {
      CHECK(betti_table(ideal, field).entries == koszul_oracle(ideal, field).entries);
    }
  }
}

TEST_CASE("single-cell engine values match the oracle") {
  InstanceGen gen(107);
  for (int trial = 0; trial < 15; ++trial) {
    int n = gen.uniform(3, 6);
    Ideal ideal = gen.ideal(n, 1, 3, gen.uniform(1, 4));
    if (ideal.is_unit() || ideal.is_zero()) continue;
    auto oracle = koszul_oracle(ideal, FieldSpec::Q());
    for (Face w : all_subsets(Face::full(n)))
      for (int i = 0; i <= w.size(); ++i) {
        long long expect = 0;
        auto it = oracle.entries.find({i, w.bits()});
        if (it != oracle.entries.end()) expect = it->second;
        CHECK(hochster_betti(ideal, i, w, FieldSpec::Q()) == expect);
      }
  }
}

TEST_CASE("frozen small tables") {
  // triangle edge ideal
  Ideal tri(3, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3})});
  auto t = betti_table(tri, FieldSpec::Q());
  CHECK(t.entries.size() == 4);
  CHECK(t.get(0, Face::of({1, 2})) == 1);
  CHECK(t.get(0, Face::of({1, 3})) == 1);
  CHECK(t.get(0, Face::of({2, 3})) == 1);
  CHECK(t.get(1, Face::of({1, 2, 3})) == 2);
  CHECK(*t.regularity() == 2);
  CHECK(t.pd_quotient() == 2);

  // two generators sharing a variable
  Ideal pair(4, {Face::of({1, 2, 4}), Face::of({1, 3, 4})});
  auto tp = betti_table(pair, FieldSpec::Q());
  CHECK(tp.entries.size() == 3);
  CHECK(tp.get(1, Face::of({1, 2, 3, 4})) == 1);

  // the stability fixture: exact table, both before and after the extra
  // generator, over the rationals
  Ideal st = fixture_ideal("stability-ideal-5");
  auto tb = betti_table(st, FieldSpec::Q());
  CHECK(tb.entries.size() == 3);
  CHECK(tb.get(0, Face::of({1, 4, 5})) == 1);
  CHECK(tb.get(0, Face::of({2, 3, 5})) == 1);
  CHECK(tb.get(1, Face::full(5)) == 1);
  CHECK(*tb.regularity() == 4);
  CHECK(tb.pd_quotient() == 2);

  auto ta = betti_table(add_generator(st, stability_ideal_5_added_monomial()), FieldSpec::Q());
  CHECK(ta.entries.size() == 5);
  CHECK(ta.get(0, Face::of({3, 4, 5})) == 1);
  CHECK(ta.get(1, Face::of({1, 3, 4, 5})) == 1);
  CHECK(ta.get(1, Face::of({2, 3, 4, 5})) == 1);
  CHECK(ta.get(1, Face::full(5)) == 0);
  CHECK(*ta.regularity() == 3);
}

TEST_CASE("zero and unit ideals, size guard") {
  CHECK(betti_table(Ideal(4, {}), FieldSpec::Q()).entries.empty());
  CHECK_THROWS_AS(betti_table(Ideal(3, {Face()}), FieldSpec::Q()), std::invalid_argument);
  BettiOptions tight;
  tight.max_n = 4;
  CHECK_THROWS_AS(betti_table(Ideal(5, {Face::of({1, 2})}), FieldSpec::Q(), tight),
                  std::invalid_argument);
  BettiOptions wide;
  wide.max_n = 5;
  CHECK(betti_table(Ideal(5, {Face::of({1, 2})}), FieldSpec::Q(), wide).entries.size() == 1);
}

TEST_CASE("parallel and serial sweeps produce identical tables") {
  InstanceGen gen(109);
  for (int trial = 0; trial < 10; ++trial) {
    int n = gen.uniform(4, 7);
    Ideal ideal = gen.ideal(n, 1, 4, gen.uniform(2, 6));
    if (ideal.is_unit()) continue;
    for (auto field : {FieldSpec::Q(), FieldSpec::GF(2)}) {
      auto par = betti_table(ideal, field);
      auto ser = betti_table_serial(ideal, field);
      CHECK(par.n == ser.n);
      CHECK(par.entries == ser.entries);
    }
  }
  // same for the certificate
  Ideal bt = circuit_ideal_of_complement(fixture_clutter("bowtie"));
  auto cp = field_independence_certificate(bt);
  auto cs = field_independence_certificate_serial(bt);
  CHECK(cp.certified == cs.certified);
  CHECK(cp.torsion_primes == cs.torsion_primes);
}

TEST_CASE("linear resolutions: squarefree Veronese yes, pentagon no") {
  for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {5, 3}}) {
    Ideal ver(n, k_subsets(Face::full(n), d));
    CHECK(has_linear_resolution(ver, FieldSpec::Q()));
    CHECK(has_linear_resolution(ver, FieldSpec::GF(2)));
  }
  Ideal penta = circuit_ideal_of_complement(fixture_clutter("five-cycle"));
  CHECK(penta.gens() == std::vector<Face>{Face::of({1, 3}), Face::of({1, 4}),
                                          Face::of({2, 4}), Face::of({2, 5}),
                                          Face::of({3, 5})});
  CHECK(!has_linear_resolution(penta, FieldSpec::Q()));
  CHECK_THROWS_AS(has_linear_resolution(Ideal(4, {Face::of({1}), Face::of({2, 3})}),
                                        FieldSpec::Q()),
                  std::invalid_argument);
  CHECK(has_linear_resolution(Ideal(4, {}), FieldSpec::Q()));
}

TEST_CASE("linear quotients search with witness replay") {
  Ideal bt = circuit_ideal_of_complement(fixture_clutter("bowtie"));
  CHECK(bt.gens() == std::vector<Face>{Face::of({1, 4}), Face::of({1, 5}),
                                       Face::of({2, 4}), Face::of({2, 5})});
  auto res = linear_quotients_search(bt);
  CHECK(res.status == SearchStatus::found);
  REQUIRE(res.order.size() == bt.gens().size());
  // replay: every successive colon ideal is generated by variables
  for (std::size_t k = 1; k < res.order.size(); ++k) {
    Ideal prefix(bt.n(), std::vector<Face>(res.order.begin(),
                                           res.order.begin() + static_cast<long>(k)));
    CHECK(generated_by_variables(colon_ideal(prefix, res.order[k])));
  }

  // the pentagon ideal admits no such order at all
  Ideal penta = circuit_ideal_of_complement(fixture_clutter("five-cycle"));
  CHECK(linear_quotients_search(penta).status == SearchStatus::refuted);

  // the edge ideal of the bowtie graph itself (the misprint reading of the
  // attached ideal) also refutes: the bowtie's complement is a four-cycle
  Ideal printed(5, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3}),
                    Face::of({3, 4}), Face::of({3, 5}), Face::of({4, 5})});
  CHECK(linear_quotients_search(printed).status == SearchStatus::refuted);

  // a starved budget answers unknown
  CHECK(linear_quotients_search(penta, 2).status == SearchStatus::unknown);

  // found orders exist for every stable ideal (they always have linear
  // quotients in colex order)
  InstanceGen gen(113);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal st = gen.stable_ideal(6, 3, gen.uniform(1, 3));
    CHECK(linear_quotients_search(st).status == SearchStatus::found);
  }
}

TEST_CASE("componentwise regularity equals table regularity") {
  Ideal st = fixture_ideal("stability-ideal-5");
  CHECK(regularity_by_components(st, FieldSpec::Q()) == 4);

  InstanceGen gen(127);
  int mixed_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = gen.uniform(3, 6);
    Ideal ideal = gen.ideal(n, 1, std::min(4, n), gen.uniform(2, 5));
    if (ideal.is_zero() || ideal.is_unit()) continue;
    if (!ideal.equigenerated()) ++mixed_seen;
    auto table = betti_table(ideal, FieldSpec::Q());
    CHECK(regularity_by_components(ideal, FieldSpec::Q()) == *table.regularity());
  }
  CHECK(mixed_seen >= 8);
  CHECK_THROWS_AS(regularity_by_components(Ideal(4, {}), FieldSpec::Q()),
                  std::invalid_argument);
}

TEST_CASE("field independence certificate finds the projective-plane prime") {
  Ideal rp2 = stanley_reisner_ideal(fixture_complex("rp2-minimal"));
  auto cert = field_independence_certificate(rp2);
  CHECK(!cert.certified);
  CHECK(std::find(cert.torsion_primes.begin(), cert.torsion_primes.end(), 2u) !=
        cert.torsion_primes.end());
  // and indeed the Betti tables over Q and GF(2) differ
  CHECK(betti_table(rp2, FieldSpec::Q()).entries !=
        betti_table(rp2, FieldSpec::GF(2)).entries);

  // torsion-free example certifies, and certification is honest: tables agree
  Ideal bt = circuit_ideal_of_complement(fixture_clutter("bowtie"));
  auto cert2 = field_independence_certificate(bt);
  CHECK(cert2.certified);
  CHECK(cert2.torsion_primes.empty());
  CHECK(betti_table(bt, FieldSpec::Q()).entries ==
        betti_table(bt, FieldSpec::GF(2)).entries);
}

TEST_CASE("certified ideals have field-independent tables, randomized") {
  InstanceGen gen(131);
  for (int trial = 0; trial < 15; ++trial) {
    int n = gen.uniform(3, 6);
    Ideal ideal = gen.ideal(n, 1, 3, gen.uniform(1, 4));
    if (ideal.is_unit() || ideal.is_zero()) continue;
    auto cert = field_independence_certificate(ideal);
    if (cert.certified) {
      auto q = betti_table(ideal, FieldSpec::Q());
      for (auto field : {FieldSpec::GF(2), FieldSpec::GF(3)})
        CHECK(betti_table(ideal, field).entries == q.entries);
    } else {
      CHECK(!cert.torsion_primes.empty());
    }
  }
}

TEST_CASE("resolution diagnostics: frozen pentagon values") {
  Ideal penta = circuit_ideal_of_complement(fixture_clutter("five-cycle"));
  auto diag = resolution_diagnostics(betti_table(penta, FieldSpec::Q()));
  CHECK(diag.t == std::vector<long long>{0, 2, 3, 5});
  CHECK(diag.r == std::vector<long long>{0, 1, 1, 2});
  CHECK(diag.regularity_quotient == 2);
  CHECK(diag.subadditive);
  CHECK(diag.subadditivity_failures.empty());
  CHECK(diag.special_shape);
  CHECK(diag.peak_index == 3);
  CHECK(diag.shape_failures.empty());

  Ideal tri(3, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3})});
  auto dt = resolution_diagnostics(betti_table(tri, FieldSpec::Q()));
  CHECK(dt.t == std::vector<long long>{0, 2, 3});
  CHECK(dt.r == std::vector<long long>{0, 1, 1});
  CHECK(dt.regularity_quotient == 1);
  CHECK(dt.subadditive);
  CHECK(dt.special_shape);
}

TEST_CASE("stability of the table under one extra generator") {
  // fixture case: the bound d + i + reg(colon) is met exactly, never exceeded
  Ideal st = fixture_ideal("stability-ideal-5");
  Face u = stability_ideal_5_added_monomial();
  CHECK(colon_ideal(st, u).gens() == std::vector<Face>{Face::of({1}), Face::of({2})});
  auto rep = generator_stability_check(st, u, FieldSpec::Q());
  CHECK(rep.d == 3);
  CHECK(rep.r == 1);
  CHECK(rep.violations.empty());
  // the top-degree entry moves exactly at |W| = d + i + r = 5, showing the
  // bound is tight
  CHECK(betti_table(st, FieldSpec::Q()).get(1, Face::full(5)) == 1);
  CHECK(betti_table(add_generator(st, u), FieldSpec::Q()).get(1, Face::full(5)) == 0);

  CHECK_THROWS_AS(generator_stability_check(Ideal(4, {Face::of({1}), Face::of({2, 3})}),
                                            Face::of({3, 4}), FieldSpec::Q()),
                  std::invalid_argument);

  InstanceGen gen(137);
  for (int trial = 0; trial < 12; ++trial) {
    int n = gen.uniform(4, 6), d = gen.uniform(2, 3);
    auto c = gen.clutter(n, d, 0.6);
    Ideal base = circuit_ideal_of_complement(c);
    if (base.is_zero()) continue;
    auto picks = k_subsets(Face::full(n), d);
    Face extra = picks[static_cast<std::size_t>(
        gen.uniform(0, static_cast<int>(picks.size()) - 1))];
    if (base.contains(extra)) continue;
    for (auto field : {FieldSpec::Q(), FieldSpec::GF(2)})
      CHECK(generator_stability_check(base, extra, field).violations.empty());
  }
}
