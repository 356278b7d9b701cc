// cbetti: command-line front end for the clutter/Betti library.
//
// Exit codes: 0 = success / verified / witness found; 1 = verification
// failure or exhaustive refutation; 2 = search budget exhausted (unknown);
// 3 = usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clutter/betti.hpp"
#include "clutter/clutter.hpp"
#include "clutter/complex.hpp"
#include "clutter/fixtures.hpp"
#include "clutter/homology.hpp"
#include "clutter/ideal.hpp"
#include "clutter/io.hpp"
#include "clutter/random_gen.hpp"
#include "clutter/reduction.hpp"
#include "clutter/stanley_reisner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

int status_exit(clb::SearchStatus s, bool found_is_ok = true) {
  switch (s) {
    case clb::SearchStatus::found:
      return found_is_ok ? kOk : kFail;
    case clb::SearchStatus::refuted:
      return found_is_ok ? kFail : kOk;
    case clb::SearchStatus::unknown:
      return kUnknown;
  }
  return kUsage;
}

clb::FieldSpec parse_field(const std::string& s) {
  if (s == "q") return clb::FieldSpec::Q();
  if (s == "z") return clb::FieldSpec::Z();
  if (s.rfind("gf:", 0) == 0) {
    unsigned long p = std::stoul(s.substr(3));
    if (p < 2) throw CLI::ValidationError("--field", "gf:p needs p >= 2");
    return clb::FieldSpec::GF(static_cast<std::uint32_t>(p));
  }
  throw CLI::ValidationError("--field", "expected q, gf:p, or z");
}

// Resolve an input argument to text: `fixtures:NAME`, `-` (stdin), or a path.
std::string input_text(const std::string& arg) {
  if (arg.rfind("fixtures:", 0) == 0) {
    std::string name = arg.substr(9);
    if (name.rfind("complete-", 0) == 0)
      return clb::emit_clutter(clb::fixture_clutter(name));
    return clb::fixture(name).text;
  }
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open input file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

clb::UniformClutter clutter_input(const std::string& arg) {
  std::string text = input_text(arg);
  if (clb::classify_input(text, clb::InputKind::clutter) != clb::InputKind::clutter)
    throw std::runtime_error("'" + arg + "' does not contain a clutter");
  return clb::parse_clutter(text);
}

// Any input kind viewed as a squarefree monomial ideal: an ideal directly,
// a clutter through the ideal of its complement, a complex through its
// minimal nonfaces.
clb::Ideal ideal_input(const std::string& arg) {
  std::string text = input_text(arg);
  switch (clb::classify_input(text, clb::InputKind::ideal)) {
    case clb::InputKind::clutter:
      return clb::circuit_ideal_of_complement(clb::parse_clutter(text));
    case clb::InputKind::ideal:
      return clb::parse_ideal(text);
    case clb::InputKind::complex_:
      return clb::stanley_reisner_ideal(clb::parse_complex(text));
  }
  throw std::runtime_error("unreachable");
}

// Any input kind viewed as a complex: a complex directly, a clutter through
// its clique complex, an ideal through its Stanley-Reisner complex.
clb::SimplicialComplex complex_input(const std::string& arg) {
  std::string text = input_text(arg);
  switch (clb::classify_input(text, clb::InputKind::complex_)) {
    case clb::InputKind::clutter:
      return clb::clique_complex(clb::parse_clutter(text));
    case clb::InputKind::ideal:
      return clb::stanley_reisner_complex(clb::parse_ideal(text));
    case clb::InputKind::complex_:
      return clb::parse_complex(text);
  }
  throw std::runtime_error("unreachable");
}

clb::Face parse_face_arg(const std::string& s, int n, const char* what) {
  std::vector<int> verts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::istringstream ts(tok);
    int v = 0;
    while (ts >> v) verts.push_back(v);
  }
  if (verts.empty())
    throw std::runtime_error(std::string(what) + ": no vertices given");
  return clb::Face::from_vertices(verts, n);
}

std::string face_str(clb::Face f) { return f.str(); }

void print_sequence(const clb::RemovalSequence& seq) {
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    std::cout << "  step " << k + 1 << ": e = " << seq.steps[k].e.str() << ", removed";
    for (clb::Face f : seq.steps[k].A) std::cout << ' ' << f.str();
    std::cout << '\n';
  }
}

void print_table(const clb::BettiTable& table, bool json) {
  if (json) {
    std::cout << clb::emit_betti_table_json(table) << '\n';
    return;
  }
  std::cout << clb::emit_betti_table_tsv(table);
  if (table.entries.empty()) {
    std::cout << "zero ideal: empty table\n";
    return;
  }
  auto reg = table.regularity();
  std::cout << "regularity(ideal) = " << (reg ? *reg : 0) << '\n';
  std::cout << "pd(quotient) = " << table.pd_quotient() << '\n';
}

// --------------------------------------------------------------------------
// verify subcommand helpers
// --------------------------------------------------------------------------

struct VerifyConfig {
  std::string mode;
  std::string input;
  std::string e_arg, f_arg, monomial_arg;
  bool random = false;
  std::uint64_t seed = 1;
  int n = 6, d = 3, trials = 50;
  clb::FieldSpec field = clb::FieldSpec::Q();
  clb::BettiOptions opt;
};

// Draw a clutter that admits a simplicial element with a containing circuit.
std::optional<std::pair<clb::UniformClutter, std::pair<clb::Face, clb::Face>>>
draw_triple(clb::InstanceGen& gen, int n, int d) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto c = gen.clutter(n, d, 0.35 + 0.5 * (gen.uniform(0, 100) / 100.0));
    auto pick = gen.simplicial_pair(c);
    if (pick) return std::make_pair(c, *pick);
  }
  return std::nullopt;
}

int verify_delta(const VerifyConfig& cfg) {
  auto run_one = [&](const clb::UniformClutter& c, clb::Face e, clb::Face f,
                     const std::string& label) -> bool {
    clb::Ideal base = clb::circuit_ideal_of_complement(c);
    clb::BettiTable before = clb::betti_table(base, cfg.field, cfg.opt);
    clb::BettiTable after =
        clb::betti_table(clb::add_generator(base, f), cfg.field, cfg.opt);
    clb::BettiTable predicted =
        clb::add_tables(before, clb::predicted_delta(c, e, f));
    if (predicted == after) return true;
    std::cout << "MISMATCH " << label << ": e = " << e.str() << ", F = " << f.str()
              << '\n'
              << clb::emit_clutter(c);
    return false;
  };

  if (!cfg.random) {
    auto c = clutter_input(cfg.input);
    clb::Face e = parse_face_arg(cfg.e_arg, c.n(), "--e");
    clb::Face f = parse_face_arg(cfg.f_arg, c.n(), "--f");
    bool ok = run_one(c, e, f, "input");
    std::cout << (ok ? "delta formula verified\n" : "delta formula FAILED\n");
    return ok ? kOk : kFail;
  }
  clb::InstanceGen gen(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    auto drawn = draw_triple(gen, cfg.n, cfg.d);
    if (!drawn) continue;
    auto& [c, pair] = *drawn;
    if (!run_one(c, pair.first, pair.second, "trial " + std::to_string(t)))
      return kFail;
  }
  std::cout << "delta formula verified on " << cfg.trials << " random instances (seed "
            << cfg.seed << ")\n";
  return kOk;
}

int verify_splitting(const VerifyConfig& cfg) {
  auto run_one = [&](const clb::UniformClutter& c, clb::Face e, clb::Face f,
                     const std::string& label) -> bool {
    auto rep = clb::splitting_check(c, e, f, cfg.field, cfg.opt);
    if (rep.colon_is_variables && rep.intersection_matches && rep.betti_splits)
      return true;
    std::cout << "MISMATCH " << label << ": e = " << e.str() << ", F = " << f.str()
              << " (" << rep.detail << ")\n"
              << clb::emit_clutter(c);
    return false;
  };
  if (!cfg.random) {
    auto c = clutter_input(cfg.input);
    clb::Face e = parse_face_arg(cfg.e_arg, c.n(), "--e");
    clb::Face f = parse_face_arg(cfg.f_arg, c.n(), "--f");
    bool ok = run_one(c, e, f, "input");
    std::cout << (ok ? "splitting verified\n" : "splitting FAILED\n");
    return ok ? kOk : kFail;
  }
  clb::InstanceGen gen(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    auto drawn = draw_triple(gen, cfg.n, cfg.d);
    if (!drawn) continue;
    auto& [c, pair] = *drawn;
    if (!run_one(c, pair.first, pair.second, "trial " + std::to_string(t)))
      return kFail;
  }
  std::cout << "splitting verified on " << cfg.trials << " random instances (seed "
            << cfg.seed << ")\n";
  return kOk;
}

int verify_removal_homology(const VerifyConfig& cfg) {
  auto run_one = [&](const clb::UniformClutter& c, clb::Face e, clb::Face f,
                     const std::string& label) -> bool {
    auto rep = clb::removal_homology_check(c, e, f, cfg.field);
    if (rep.above_matches && rep.off_degree_matches && rep.boundary_identity)
      return true;
    std::cout << "MISMATCH " << label << ": e = " << e.str() << ", F = " << f.str()
              << '\n'
              << clb::emit_clutter(c);
    return false;
  };
  if (!cfg.random) {
    auto c = clutter_input(cfg.input);
    clb::Face e = parse_face_arg(cfg.e_arg, c.n(), "--e");
    clb::Face f = parse_face_arg(cfg.f_arg, c.n(), "--f");
    bool ok = run_one(c, e, f, "input");
    std::cout << (ok ? "removal homology bookkeeping verified\n"
                     : "removal homology bookkeeping FAILED\n");
    return ok ? kOk : kFail;
  }
  clb::InstanceGen gen(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    auto drawn = draw_triple(gen, cfg.n, cfg.d);
    if (!drawn) continue;
    auto& [c, pair] = *drawn;
    if (!run_one(c, pair.first, pair.second, "trial " + std::to_string(t)))
      return kFail;
  }
  std::cout << "removal homology bookkeeping verified on " << cfg.trials
            << " random instances (seed " << cfg.seed << ")\n";
  return kOk;
}

int verify_strand(const VerifyConfig& cfg) {
  auto run_one = [&](const clb::UniformClutter& base, const clb::RemovalSequence& seq,
                     const std::string& label) -> bool {
    auto replay = clb::verify_removal_sequence(base, seq);
    if (!replay.ok) {
      std::cout << "invalid sequence in " << label << ": " << replay.error << '\n';
      return false;
    }
    clb::Ideal base_ideal = clb::circuit_ideal_of_complement(base);
    clb::BettiTable base_table = clb::betti_table(base_ideal, cfg.field, cfg.opt);
    auto pred = clb::predicted_linear_strand(base, seq, base_table);
    clb::Ideal final_ideal = clb::circuit_ideal_of_complement(*replay.final_clutter);
    clb::BettiTable final_table = clb::betti_table(final_ideal, cfg.field, cfg.opt);
    auto actual = final_table.strand(base.d());
    while (!actual.empty() && actual.back() == 0) actual.pop_back();
    auto predicted = pred.strand;
    while (!predicted.empty() && predicted.back() == 0) predicted.pop_back();
    if (predicted == actual && pred.pd_quotient == final_table.pd_quotient())
      return true;
    std::cout << "MISMATCH " << label << " (" << seq.steps.size() << " steps)\n"
              << clb::emit_clutter(base);
    return false;
  };

  if (!cfg.random) {
    if (cfg.input == "fixtures:reducible-graph-9") {
      bool ok = run_one(clb::fixture_clutter("reducible-graph-9"),
                        clb::reducible_graph_9_sequence(), "stored sequence");
      std::cout << (ok ? "strand formula verified\n" : "strand formula FAILED\n");
      return ok ? kOk : kFail;
    }
    throw std::runtime_error(
        "strand mode needs --random or fixtures:reducible-graph-9");
  }
  clb::InstanceGen gen(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    clb::UniformClutter base = (t % 2 == 0)
                                   ? clb::complete_clutter(cfg.n, cfg.d)
                                   : gen.clutter(cfg.n, cfg.d, 0.7);
    auto seq = gen.removal_sequence(base, gen.uniform(1, 4));
    if (!run_one(base, seq, "trial " + std::to_string(t))) return kFail;
  }
  std::cout << "strand formula verified on " << cfg.trials << " random instances (seed "
            << cfg.seed << ")\n";
  return kOk;
}

int verify_stability(const VerifyConfig& cfg) {
  auto run_one = [&](const clb::Ideal& base, clb::Face u,
                     const std::string& label) -> bool {
    auto rep = clb::generator_stability_check(base, u, cfg.field, cfg.opt);
    if (rep.violations.empty()) return true;
    std::cout << "MISMATCH " << label << ": u = " << u.str() << '\n';
    for (auto& [i, w] : rep.violations)
      std::cout << "  moved at i = " << i << ", W = " << w.str() << '\n';
    return false;
  };
  if (!cfg.random) {
    clb::Ideal base = ideal_input(cfg.input);
    clb::Face u = cfg.monomial_arg.empty() && cfg.input == "fixtures:stability-ideal-5"
                      ? clb::stability_ideal_5_added_monomial()
                      : parse_face_arg(cfg.monomial_arg, base.n(), "--monomial");
    bool ok = run_one(base, u, "input");
    std::cout << (ok ? "stability bound verified\n" : "stability bound FAILED\n");
    return ok ? kOk : kFail;
  }
  clb::InstanceGen gen(cfg.seed);
  int done = 0;
  for (int t = 0; t < cfg.trials * 20 && done < cfg.trials; ++t) {
    auto c = gen.clutter(cfg.n, cfg.d, 0.5);
    clb::Ideal base = clb::circuit_ideal_of_complement(c);
    if (base.is_zero() || c.circuits().empty()) continue;
    const auto& circ = c.circuits();
    clb::Face u = circ[static_cast<std::size_t>(
        gen.uniform(0, static_cast<int>(circ.size()) - 1))];
    ++done;
    if (!run_one(base, u, "trial " + std::to_string(t))) return kFail;
  }
  std::cout << "stability bound verified on " << done << " random instances (seed "
            << cfg.seed << ")\n";
  return kOk;
}

int verify_component(const VerifyConfig& cfg) {
  auto run_one = [&](const clb::Ideal& ideal, const std::string& label) -> bool {
    clb::BettiTable table = clb::betti_table(ideal, cfg.field, cfg.opt);
    auto reg = table.regularity();
    if (!reg) return true;  // zero ideal: nothing to compare
    int by_components = clb::regularity_by_components(ideal, cfg.field, cfg.opt);
    if (by_components == *reg) return true;
    std::cout << "MISMATCH " << label << ": regularity " << *reg
              << " vs by-components " << by_components << '\n';
    return false;
  };
  if (!cfg.random) {
    bool ok = run_one(ideal_input(cfg.input), "input");
    std::cout << (ok ? "component regularity verified\n"
                     : "component regularity FAILED\n");
    return ok ? kOk : kFail;
  }
  clb::InstanceGen gen(cfg.seed);
  int done = 0;
  for (int t = 0; t < cfg.trials * 20 && done < cfg.trials; ++t) {
    clb::Ideal ideal = gen.ideal(cfg.n, 2, std::max(2, cfg.d), gen.uniform(2, 6));
    if (ideal.is_zero() || ideal.is_unit()) continue;
    ++done;
    if (!run_one(ideal, "trial " + std::to_string(t))) return kFail;
  }
  std::cout << "component regularity verified on " << done
            << " random instances (seed " << cfg.seed << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of squarefree monomial ideals via clutter reductions"};
  app.require_subcommand(1);

  std::string input, second_input, field_str = "q", homology_field_str = "z";
  std::string mode_str = "deletion";
  std::string e_arg, f_arg, monomial_arg, out_path;
  bool json = false, serial = false;
  long long budget = 1000000;
  int max_n = 16;
  VerifyConfig vcfg;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_str, "coefficients: q, gf:p, or z")
        ->default_val("q");
  };
  auto add_max_n = [&](CLI::App* sub) {
    sub->add_option("--max-n", max_n, "vertex-count guard for full table sweeps")
        ->default_val(16);
  };

  auto* betti_cmd = app.add_subcommand("betti", "full multigraded Betti table");
  betti_cmd->add_option("input", input, "clutter/ideal/complex: path, -, or fixtures:NAME")
      ->required();
  add_field(betti_cmd);
  add_max_n(betti_cmd);
  betti_cmd->add_flag("--json", json, "emit the table as JSON");
  betti_cmd->add_flag("--serial", serial, "use the sequential reference engine");

  auto* homology_cmd = app.add_subcommand("homology", "reduced homology profile");
  homology_cmd->add_option("input", input, "complex/clutter/ideal input")->required();
  homology_cmd->add_option("--field", homology_field_str, "coefficients: q, gf:p, or z")
      ->default_val("z");

  auto* chordal_cmd = app.add_subcommand("chordal", "search for a full reduction order");
  chordal_cmd->add_option("input", input, "clutter input")->required();
  chordal_cmd->add_option("--mode", mode_str, "deletion | empty-subclutter")
      ->default_val("deletion");
  chordal_cmd->add_option("--budget", budget, "search state budget")->default_val(1000000);

  auto* sub_cmd = app.add_subcommand("subclutter", "can the second clutter be reached from the first?");
  sub_cmd->add_option("base", input, "starting clutter")->required();
  sub_cmd->add_option("target", second_input, "target subclutter")->required();
  sub_cmd->add_option("--budget", budget, "search state budget")->default_val(1000000);

  auto* stable_cmd = app.add_subcommand("stable", "squarefree-stable test, canonical sequence, strand");
  stable_cmd->add_option("input", input, "ideal input")->required();

  auto* quot_cmd = app.add_subcommand("quotients", "search for a linear-quotients ordering");
  quot_cmd->add_option("input", input, "ideal input")->required();
  quot_cmd->add_option("--budget", budget, "search state budget")->default_val(1000000);

  auto* diag_cmd = app.add_subcommand("diagnostics", "shift vectors, subadditivity, shape");
  diag_cmd->add_option("input", input, "ideal input")->required();
  add_field(diag_cmd);
  add_max_n(diag_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify", "check a closed-form formula against the homology oracle");
  verify_cmd
      ->add_option("mode", vcfg.mode,
                   "delta | splitting | removal-homology | strand | stability | component")
      ->required();
  verify_cmd->add_option("input", vcfg.input, "input (see per-mode help)");
  verify_cmd->add_option("--e", vcfg.e_arg, "simplicial element, e.g. '1 3'");
  verify_cmd->add_option("--f", vcfg.f_arg, "circuit containing e, e.g. '1 2 3'");
  verify_cmd->add_option("--monomial", vcfg.monomial_arg, "added generator (stability)");
  verify_cmd->add_flag("--random", vcfg.random, "run seeded random trials");
  verify_cmd->add_option("--seed", vcfg.seed, "random seed")->default_val(1);
  verify_cmd->add_option("--n", vcfg.n, "vertex count for random instances")->default_val(6);
  verify_cmd->add_option("--d", vcfg.d, "uniformity for random instances")->default_val(3);
  verify_cmd->add_option("--trials", vcfg.trials, "number of random trials")->default_val(50);
  add_field(verify_cmd);
  add_max_n(verify_cmd);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or dump named examples");
  fixtures_cmd->add_option("name", input, "fixture to dump (omit to list)");
  fixtures_cmd->add_flag("--json", json, "dump as JSON");

  auto* hunt_cmd = app.add_subcommand(
      "hunt", "random search for a clutter separating the two reducibility notions");
  hunt_cmd->add_option("--seed", vcfg.seed, "random seed")->default_val(1);
  hunt_cmd->add_option("--trials", vcfg.trials, "number of random clutters")->default_val(100);
  hunt_cmd->add_option("--n", vcfg.n, "vertex count")->default_val(6);
  hunt_cmd->add_option("--d", vcfg.d, "uniformity")->default_val(3);
  hunt_cmd->add_option("--budget", budget, "per-search state budget")->default_val(1000000);
  hunt_cmd->add_option("--out", out_path, "write any separating clutter to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every flag/argument problem is a usage error
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    clb::FieldSpec field = parse_field(field_str);
    clb::BettiOptions opt;
    opt.max_n = max_n;

    if (*betti_cmd) {
      clb::Ideal ideal = ideal_input(input);
      clb::BettiTable table = serial ? clb::betti_table_serial(ideal, field, opt)
                                     : clb::betti_table(ideal, field, opt);
      print_table(table, json);
      return kOk;
    }

    if (*homology_cmd) {
      clb::SimplicialComplex k = complex_input(input);
      clb::HomologyProfile prof = clb::homology(k, parse_field(homology_field_str));
      if (k.is_void()) {
        std::cout << "void complex: no homology\n";
        return kOk;
      }
      for (int dim = -1; dim <= prof.top_dim; ++dim) {
        std::cout << "H~" << dim << ": rank " << prof.rank_at(dim);
        auto tors = prof.torsion_at(dim);
        if (!tors.empty()) {
          std::cout << ", torsion";
          for (auto t : tors) std::cout << " " << t;
        }
        std::cout << '\n';
      }
      return kOk;
    }

    if (*chordal_cmd) {
      clb::ChordalityMode mode;
      if (mode_str == "deletion")
        mode = clb::ChordalityMode::whole_deletion;
      else if (mode_str == "empty-subclutter")
        mode = clb::ChordalityMode::empty_subclutter;
      else
        throw std::runtime_error("--mode must be deletion or empty-subclutter");
      auto c = clutter_input(input);
      auto res = clb::chordality_search(c, mode, budget);
      std::cout << clb::to_string(res.status) << " (" << res.states << " states)\n";
      if (res.status == clb::SearchStatus::found) {
        if (mode == clb::ChordalityMode::whole_deletion) {
          std::cout << "order:";
          for (clb::Face e : res.order) std::cout << ' ' << face_str(e);
          std::cout << '\n';
        } else if (res.sequence) {
          print_sequence(*res.sequence);
        }
      }
      return status_exit(res.status);
    }

    if (*sub_cmd) {
      auto base = clutter_input(input);
      auto target = clutter_input(second_input);
      auto res = clb::subclutter_search(base, target, budget);
      std::cout << clb::to_string(res.status) << " (" << res.states << " states)\n";
      if (res.status == clb::SearchStatus::found && res.witness)
        print_sequence(*res.witness);
      return status_exit(res.status);
    }

    if (*stable_cmd) {
      clb::Ideal ideal = ideal_input(input);
      bool stable = clb::is_squarefree_stable(ideal);
      std::cout << (stable ? "squarefree stable\n" : "not squarefree stable\n");
      if (!stable) return kFail;
      auto seq = clb::stable_removal_sequence(ideal);
      print_sequence(seq);
      auto strand = clb::stable_betti_strand(ideal);
      std::cout << "linear strand:";
      for (auto v : strand) std::cout << ' ' << v;
      std::cout << '\n';
      return kOk;
    }

    if (*quot_cmd) {
      clb::Ideal ideal = ideal_input(input);
      auto res = clb::linear_quotients_search(ideal, budget);
      std::cout << clb::to_string(res.status) << " (" << res.states << " states)\n";
      if (res.status == clb::SearchStatus::found) {
        std::cout << "order:";
        for (clb::Face g : res.order) std::cout << ' ' << face_str(g);
        std::cout << '\n';
      }
      return status_exit(res.status);
    }

    if (*diag_cmd) {
      clb::Ideal ideal = ideal_input(input);
      clb::BettiTable table = clb::betti_table(ideal, field, opt);
      auto rep = clb::resolution_diagnostics(table);
      std::cout << "t-vector:";
      for (auto v : rep.t) std::cout << ' ' << v;
      std::cout << "\nr-vector:";
      for (auto v : rep.r) std::cout << ' ' << v;
      std::cout << "\nregularity(quotient) = " << rep.regularity_quotient << '\n';
      std::cout << "subadditive: " << (rep.subadditive ? "yes" : "no") << '\n';
      for (auto& [i, j] : rep.subadditivity_failures)
        std::cout << "  t[" << i + j << "] > t[" << i << "] + t[" << j << "]\n";
      std::cout << "monotone-then-peak shape: " << (rep.special_shape ? "yes" : "no")
                << " (peak at " << rep.peak_index << ")\n";
      for (int i : rep.shape_failures) std::cout << "  shape breaks at position " << i << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      vcfg.field = field;
      vcfg.opt = opt;
      if (vcfg.mode == "delta") return verify_delta(vcfg);
      if (vcfg.mode == "splitting") return verify_splitting(vcfg);
      if (vcfg.mode == "removal-homology") return verify_removal_homology(vcfg);
      if (vcfg.mode == "strand") return verify_strand(vcfg);
      if (vcfg.mode == "stability") return verify_stability(vcfg);
      if (vcfg.mode == "component") return verify_component(vcfg);
      throw std::runtime_error("unknown verify mode '" + vcfg.mode + "'");
    }

    if (*fixtures_cmd) {
      if (input.empty()) {
        for (const auto& f : clb::fixture_catalog()) {
          const char* kind = f.kind == clb::InputKind::clutter   ? "clutter"
                             : f.kind == clb::InputKind::ideal   ? "ideal"
                                                                 : "complex";
          std::cout << f.name << "\t" << kind << "\t" << f.faces << " faces\t"
                    << f.description << '\n';
        }
        std::cout << "complete-N-D\tclutter\t(synthesized on demand)\n";
        return kOk;
      }
      if (input.rfind("complete-", 0) == 0) {
        auto c = clb::fixture_clutter(input);
        std::cout << (json ? clb::emit_clutter_json(c) + "\n" : clb::emit_clutter(c));
        return kOk;
      }
      const auto& f = clb::fixture(input);
      if (!json) {
        std::cout << f.text;
        return kOk;
      }
      switch (f.kind) {
        case clb::InputKind::clutter:
          std::cout << clb::emit_clutter_json(clb::fixture_clutter(input)) << '\n';
          break;
        case clb::InputKind::ideal:
          std::cout << clb::emit_ideal_json(clb::fixture_ideal(input)) << '\n';
          break;
        case clb::InputKind::complex_:
          std::cout << clb::emit_complex_json(clb::fixture_complex(input)) << '\n';
          break;
      }
      return kOk;
    }

    if (*hunt_cmd) {
      clb::InstanceGen gen(vcfg.seed);
      int hits = 0, decided = 0;
      for (int t = 0; t < vcfg.trials; ++t) {
        auto c = gen.clutter(vcfg.n, vcfg.d, 0.3 + 0.4 * (gen.uniform(0, 100) / 100.0));
        auto del = clb::chordality_search(c, clb::ChordalityMode::whole_deletion, budget);
        auto emp = clb::chordality_search(c, clb::ChordalityMode::empty_subclutter, budget);
        if (del.status == clb::SearchStatus::unknown ||
            emp.status == clb::SearchStatus::unknown)
          continue;
        ++decided;
        if (del.status != emp.status) {
          ++hits;
          std::cout << "separating clutter found (deletion " << clb::to_string(del.status)
                    << ", empty-subclutter " << clb::to_string(emp.status) << "):\n";
          std::string text = clb::emit_clutter(c);
          if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << text;
            std::cout << "written to " << out_path << '\n';
          } else {
            std::cout << text;
          }
        }
      }
      std::cout << "hunt: " << decided << " decided trials, " << hits
                << " separating examples (seed " << vcfg.seed << ")\n";
      return kOk;
    }
  } catch (const clb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
