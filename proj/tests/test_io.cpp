#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "clutter/betti.hpp"
#include "clutter/clutter.hpp"
#include "clutter/fixtures.hpp"
#include "clutter/io.hpp"
#include "clutter/random_gen.hpp"
#include "clutter/stanley_reisner.hpp"

using namespace clb;

namespace {

// expects a ParseError carrying the given 1-based line and message fragment
template <typename F>
void expect_parse_error(F&& f, int line, const std::string& fragment) {
  try {
    f();
    FAIL_CHECK("no ParseError for fragment '" << fragment << "'");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("crc32 reference vectors") {
  CHECK(crc32("") == 0u);
  CHECK(crc32("123456789") == 0xCBF43926u);
  CHECK(crc32("a") == 0xE8B7BE43u);
}

TEST_CASE("text emitters: markers, one face per line, dot conventions") {
  CHECK(emit_clutter(fixture_clutter("bowtie")) ==
        "# clutter\n5 2\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n");
  CHECK(emit_ideal(Ideal(3, {Face()})) == "# ideal\n3\n.\n");
  CHECK(emit_ideal(Ideal(3, {})) == "# ideal\n3\n");
  CHECK(emit_complex(SimplicialComplex(3, {Face()})) == "# complex\n3\n.\n");
  CHECK(emit_complex(SimplicialComplex::void_complex(3)) == "# complex\n3\n");
}

TEST_CASE("text roundtrips for every catalog fixture and degenerate inputs") {
  for (const auto& fx : fixture_catalog()) {
    CAPTURE(fx.name);
    CHECK(crc32(fx.text) == fx.checksum);
    switch (fx.kind) {
      case InputKind::clutter: {
        auto c = fixture_clutter(fx.name);
        CHECK(c.size() == fx.faces);
        CHECK(parse_clutter(emit_clutter(c)) == c);
        CHECK(parse_clutter(emit_clutter_json(c)) == c);
        break;
      }
      case InputKind::ideal: {
        auto i = fixture_ideal(fx.name);
        CHECK(static_cast<int>(i.gens().size()) == fx.faces);
        CHECK(parse_ideal(emit_ideal(i)) == i);
        CHECK(parse_ideal(emit_ideal_json(i)) == i);
        break;
      }
      case InputKind::complex_: {
        auto k = fixture_complex(fx.name);
        CHECK(static_cast<int>(k.facets().size()) == fx.faces);
        CHECK(parse_complex(emit_complex(k)) == k);
        CHECK(parse_complex(emit_complex_json(k)) == k);
        break;
      }
    }
  }

  // the corrected two-room house fixture is pinned by checksum
  CHECK(fixture("bing-house").checksum == 0x7DEB1ED6u);

  for (auto i : {Ideal(4, {}), Ideal(4, {Face()}), Ideal(1, {Face::of({1})})}) {
    CHECK(parse_ideal(emit_ideal(i)) == i);
    CHECK(parse_ideal(emit_ideal_json(i)) == i);
  }
  for (auto k : {SimplicialComplex::void_complex(2), SimplicialComplex(2, {Face()}),
                 SimplicialComplex(1, {Face::of({1})})}) {
    CHECK(parse_complex(emit_complex(k)) == k);
    CHECK(parse_complex(emit_complex_json(k)) == k);
  }
  auto empty_clutter = UniformClutter(4, 2, {});
  CHECK(parse_clutter(emit_clutter(empty_clutter)) == empty_clutter);
  CHECK(parse_clutter(emit_clutter_json(empty_clutter)) == empty_clutter);
}

TEST_CASE("roundtrips on randomized instances") {
  InstanceGen gen(191);
  for (int trial = 0; trial < 25; ++trial) {
    int n = gen.uniform(1, 9);
    auto c = gen.clutter(n, gen.uniform(1, std::min(3, n)), 0.5, false);
    CHECK(parse_clutter(emit_clutter(c)) == c);
    CHECK(parse_clutter(emit_clutter_json(c)) == c);

    auto i = gen.ideal(n, 1, std::min(3, n), gen.uniform(0, 6));
    CHECK(parse_ideal(emit_ideal(i)) == i);
    CHECK(parse_ideal(emit_ideal_json(i)) == i);

    std::vector<Face> faces;
    int draws = gen.uniform(0, 6);
    for (int j = 0; j < draws; ++j) faces.push_back(gen.ideal(n, 1, n, 1).gens().at(0));
    SimplicialComplex k(n, faces);
    CHECK(parse_complex(emit_complex(k)) == k);
    CHECK(parse_complex(emit_complex_json(k)) == k);
  }
}

TEST_CASE("parsers accept comments, blank lines, and missing markers") {
  auto c = parse_clutter("  # leading comment\n\n 5 2 # header\n 1   2\n\n2 3 # face\n");
  CHECK(c == UniformClutter(5, 2, {Face::of({1, 2}), Face::of({2, 3})}));
  CHECK(parse_ideal("3\n") == Ideal(3, {}));
  CHECK(parse_ideal("3\n.\n").is_unit());
  CHECK(parse_complex("2\n") == SimplicialComplex::void_complex(2));
  CHECK(parse_complex("2\n.\n") == SimplicialComplex(2, {Face()}));
}

TEST_CASE("parse errors carry 1-based line numbers") {
  expect_parse_error([] { parse_clutter("# clutter\n5 2\n1 x\n"); }, 3,
                     "expected an integer, got 'x'");
  expect_parse_error([] { parse_clutter("5 2\n1 2\n3 9\n"); }, 3, "vertex 9 outside 1..5");
  expect_parse_error([] { parse_clutter("5\n1 2\n"); }, 1, "clutter header must be 'n d'");
  expect_parse_error([] { parse_clutter("5 2\n1 2\n1 2 3\n"); }, 1,
                     "circuit {1,2,3} is not a 2-set");
  expect_parse_error([] { parse_ideal("4 2\n1 2\n"); }, 1, "ideal header must be a single 'n'");
  expect_parse_error([] { parse_ideal("3\n\n# c\n1 . 2\n"); }, 4,
                     "'.' cannot be mixed with vertices");
  expect_parse_error([] { parse_ideal("   \n# only comments\n"); }, 0, "empty input");
  expect_parse_error([] { parse_complex("3 1\n1 2\n"); }, 1,
                     "complex header must be a single 'n'");
  // JSON errors have no line position
  expect_parse_error([] { parse_complex(R"({"n": 3, "facets": [[1], [4]]})"); }, 0,
                     "vertex 4 outside 1..3");
  expect_parse_error([] { parse_clutter(R"({"n": 3 "d")"); }, 0, "invalid JSON");
  expect_parse_error([] { parse_clutter(R"({"n": 3, "d": 2, "circuits": 7})"); }, 0,
                     "missing array field 'circuits'");
  expect_parse_error([] { parse_ideal(R"({"generators": []})"); }, 0,
                     "missing integer field 'n'");
}

TEST_CASE("input classification") {
  CHECK(classify_input("# ideal\n3\n", InputKind::clutter) == InputKind::ideal);
  CHECK(classify_input("# complex\n3\n", InputKind::clutter) == InputKind::complex_);
  CHECK(classify_input("# clutter\n3 2\n", InputKind::ideal) == InputKind::clutter);
  // JSON key set decides
  CHECK(classify_input(R"({"n":2,"facets":[]})", InputKind::clutter) == InputKind::complex_);
  CHECK(classify_input(R"({"n":2,"generators":[]})", InputKind::clutter) == InputKind::ideal);
  CHECK(classify_input(R"({"n":2,"d":1,"circuits":[]})", InputKind::ideal) ==
        InputKind::clutter);
  // unmarked text: a two-integer header is a clutter, one integer defers
  CHECK(classify_input("4 2\n1 2\n", InputKind::ideal) == InputKind::clutter);
  CHECK(classify_input("4\n1 2\n", InputKind::complex_) == InputKind::complex_);
  CHECK(classify_input("4\n1 2\n", InputKind::ideal) == InputKind::ideal);
}

TEST_CASE("fixture catalog lookups and dynamic complete clutters") {
  CHECK(fixture_catalog().size() == 12);
  CHECK(fixture("bowtie").kind == InputKind::clutter);
  CHECK_THROWS_AS(fixture("no-such-fixture"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_clutter("no-such-fixture"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_ideal("bowtie"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_clutter("dunce-hat"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_complex("stability-ideal-5"), std::invalid_argument);

  CHECK(fixture_clutter("complete-5-2") == complete_clutter(5, 2));
  CHECK(fixture_clutter("complete-9-9") == complete_clutter(9, 9));
  CHECK_THROWS_AS(fixture_clutter("complete-65-2"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_clutter("complete-4-0"), std::invalid_argument);
}

TEST_CASE("betti table JSON and the tab-separated diagram") {
  BettiTable t;
  t.n = 3;
  t.add(0, Face::of({1, 2}), 1);
  t.add(1, Face::of({1, 2, 3}), 2);
  CHECK(emit_betti_table_json(t) ==
        R"({"n":3,"entries":[{"i":0,"W":[1,2],"count":1},{"i":1,"W":[1,2,3],"count":2}]})");
  auto back = parse_betti_table(emit_betti_table_json(t));
  CHECK(back.n == t.n);
  CHECK(back.entries == t.entries);

  // tables only have a JSON form
  expect_parse_error([] { parse_betti_table("3\n1 2\n"); }, 0,
                     "betti tables are parsed from JSON only");
  expect_parse_error([] { parse_betti_table(R"({"n":0,"entries":[]})"); }, 0,
                     "n must be in 1..64");
  expect_parse_error([] { parse_betti_table(R"({"n":3,"entries":[{"i":-1,"W":[1]}]})"); }, 0,
                     "homological degree must be >= 0");

  auto fx = betti_table(fixture_ideal("stability-ideal-5"), FieldSpec::Q());
  CHECK(emit_betti_table_tsv(fx) ==
        "j-i\\i\t0\t1\t2\n"
        "0\t1\t.\t.\n"
        "1\t.\t.\t.\n"
        "2\t.\t2\t.\n"
        "3\t.\t.\t1\n");
  auto fx_back = parse_betti_table(emit_betti_table_json(fx));
  CHECK(fx_back.entries == fx.entries);

  // roundtrip through JSON for a computed table with many cells
  auto big = betti_table(circuit_ideal_of_complement(fixture_clutter("five-cycle")),
                         FieldSpec::GF(2));
  auto big_back = parse_betti_table(emit_betti_table_json(big));
  CHECK(big_back.entries == big.entries);
  CHECK(big_back.n == big.n);
}
