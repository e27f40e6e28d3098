// Command-line front end for the gentle library.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure,
// 3 internal consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gentle/corpus.hpp"
#include "gentle/curves.hpp"
#include "gentle/homalg.hpp"
#include "gentle/selfcheck.hpp"
#include "gentle/surface.hpp"
#include "gentle/tilting.hpp"

using namespace gentle;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  bool json = false;
  bool dot = false;
  std::string field = "prime";
  int probe_window = 2;
  std::uint64_t seed = 1;

  Field make_field() const {
    if (field == "rational") return Field::rationals();
    if (field == "prime") return Field::prime();
    return Field::prime(std::stoll(field));
  }
};

// exit-code-2 wrapper: parse and validate a presentation file
GentlePresentation load_validated(const std::string& path) {
  GentlePresentation p = parse_presentation(slurp(path));
  auto rep = validate_gentle(p);
  if (!rep.ok()) {
    for (auto& v : rep.violations) std::cerr << v.code << ": " << v.message << "\n";
    std::exit(2);
  }
  return p;
}

GradedWord load_word(const DiscModel& m, const std::string& text) {
  CurveWord w = word_from_string(m, text);
  auto rep = validate_word(m, w);
  if (!rep.ok()) {
    for (auto& v : rep.violations) std::cerr << "word: " << v << "\n";
    std::exit(2);
  }
  return {w, grade_word(m, w, 0)};
}

std::vector<ProjComplex> window_probes(const ProjComplex& x, const Field& F, int window) {
  std::vector<ProjComplex> probes;
  for (int d = 1; d <= window; ++d) {
    probes.push_back(shift(F, x, d));
    probes.push_back(shift(F, x, -d));
  }
  return probes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gentle algebras, surface models and derived invariants"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--dot", opt.dot, "DOT diagram output (surface)");
  app.add_option("--field", opt.field, "prime | rational | <prime number>");
  app.add_option("--probe-window", opt.probe_window, "fingerprint probe shift window");
  app.add_option("--seed", opt.seed, "seed for corpus/selftest");

  std::string file, file2, word1, word2, arcs_file;

  auto* c_validate = app.add_subcommand("validate", "check the gentle axioms");
  c_validate->add_option("file", file)->required();

  auto* c_surface = app.add_subcommand("surface", "ribbon surface report");
  c_surface->add_option("file", file)->required();

  auto* c_invariant = app.add_subcommand("invariant", "derived invariant");
  c_invariant->add_option("file", file)->required();

  auto* c_equiv = app.add_subcommand("equiv", "decide derived equivalence");
  c_equiv->add_option("file", file)->required();
  c_equiv->add_option("file2", file2)->required();

  auto* c_complex = app.add_subcommand("complex", "string/band complex of a word");
  c_complex->add_option("file", file)->required();
  c_complex->add_option("word", word1)->required();

  auto* c_hom = app.add_subcommand("hom", "Hom profile between two word complexes");
  c_hom->add_option("file", file)->required();
  c_hom->add_option("word", word1)->required();
  c_hom->add_option("word2", word2)->required();

  auto* c_cone = app.add_subcommand("cone", "cone over the contact morphism of two arcs");
  c_cone->add_option("file", file)->required();
  c_cone->add_option("word", word1)->required();
  c_cone->add_option("word2", word2)->required();

  auto* c_tau = app.add_subcommand("tau", "fractional twist of a word");
  c_tau->add_option("file", file)->required();
  c_tau->add_option("word", word1)->required();

  auto* c_twist = app.add_subcommand("twist", "spherical twist of a word along a band");
  c_twist->add_option("file", file)->required();
  c_twist->add_option("band", word1)->required();
  c_twist->add_option("word", word2)->required();

  auto* c_endo = app.add_subcommand("endo", "endomorphism presentation of an arc system");
  c_endo->add_option("file", file)->required();
  c_endo->add_option("arcs", arcs_file, "arc system file (default: dual arcs)");

  auto* c_corpus = app.add_subcommand("corpus", "emit seeded random gentle presentations");
  CorpusSpec cspec;
  c_corpus->add_option("--count", cspec.count);
  c_corpus->add_option("--max-vertices", cspec.max_vertices);
  c_corpus->add_option("--max-arrows", cspec.max_arrows);

  auto* c_selftest = app.add_subcommand("selftest", "run the acceptance suite");

  // allow the global flags after the subcommand arguments
  for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) {
      GentlePresentation p = parse_presentation(slurp(file));
      auto rep = validate_gentle(p);
      if (opt.json) {
        json j;
        j["ok"] = rep.ok();
        j["violations"] = json::array();
        for (auto& v : rep.violations)
          j["violations"].push_back({{"code", v.code}, {"message", v.message},
                                     {"witnesses", v.witnesses}});
        std::cout << j.dump(2) << "\n";
      } else if (rep.ok()) {
        std::cout << "ok\n";
      } else {
        for (auto& v : rep.violations) std::cout << v.code << ": " << v.message << "\n";
      }
      return rep.ok() ? 0 : 2;
    }

    if (c_surface->parsed()) {
      GentlePresentation p = load_validated(file);
      if (opt.dot) {
        std::cout << surface_dot(p);
        return 0;
      }
      json j = surface_report_json(p);
      if (opt.json) {
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      RibbonSurface s = ribbon_surface(p);
      std::cout << "chi " << s.euler_characteristic << ", genus " << s.genus
                << ", boundary components " << s.boundary.size() << ", punctures "
                << s.punctures << "\n";
      for (auto& c : s.boundary)
        std::cout << "  component: marked " << c.marked_count << ", winding " << c.winding
                  << "\n";
      return 0;
    }

    if (c_invariant->parsed()) {
      DerivedInvariant inv = derived_invariant(load_validated(file));
      if (opt.json) {
        json j;
        j["genus"] = inv.genus;
        j["components"] = json::array();
        for (auto& [m, w] : inv.pairs)
          j["components"].push_back({{"marked", m}, {"winding", w}});
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "genus " << inv.genus << "; components:";
        for (auto& [m, w] : inv.pairs) std::cout << " (" << m << "," << w << ")";
        std::cout << "\n";
      }
      return 0;
    }

    if (c_equiv->parsed()) {
      auto r = decide_derived_equivalence(load_validated(file), load_validated(file2));
      std::string verdict = r.verdict == EquivalenceVerdict::Equivalent ? "Equivalent"
                            : r.verdict == EquivalenceVerdict::NotEquivalent
                                ? "NotEquivalent"
                                : "InvariantsMatchUndecided";
      if (opt.json) {
        json j{{"verdict", verdict}};
        if (!r.witness.empty()) j["witness"] = r.witness;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << verdict;
        if (!r.witness.empty()) std::cout << " (" << r.witness << ")";
        std::cout << "\n";
      }
      return 0;
    }

    Field F = opt.make_field();

    if (c_complex->parsed()) {
      GentlePresentation p = load_validated(file);
      DiscModel m = build_disc_model(p);
      GradedWord w = load_word(m, word1);
      ProjComplex X = word_complex(m, F, w.word, F.one());
      std::cout << (opt.json ? complex_to_json(F, p, X).dump(2)
                             : complex_to_string(F, p, X))
                << "\n";
      return 0;
    }

    if (c_hom->parsed()) {
      GentlePresentation p = load_validated(file);
      DiscModel m = build_disc_model(p);
      ProjComplex X = word_complex(m, F, load_word(m, word1).word, F.one());
      ProjComplex Y = word_complex(m, F, load_word(m, word2).word, F.one());
      HomProfile prof = hom_profile(F, p, X, Y);
      if (opt.json) {
        json j;
        for (auto& [d, n] : prof) j["profile"][std::to_string(d)] = n;
        j["total"] = total_dim(prof);
        j["fingerprint_x"] = fingerprint(F, p, X, window_probes(Y, F, opt.probe_window));
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& [d, n] : prof)
          std::cout << "degree " << d << ": dim " << n << "\n";
        if (prof.empty()) std::cout << "zero\n";
      }
      return 0;
    }

    if (c_cone->parsed()) {
      GentlePresentation p = load_validated(file);
      DiscModel m = build_disc_model(p);
      GradedWord w1 = load_word(m, word1);
      GradedWord w2 = load_word(m, word2);
      if (w1.word.band || w2.word.band || w1.word.end_disc != w2.word.start_disc) {
        std::cerr << "cone expects two arcs sharing end(first) == start(second)\n";
        return 2;
      }
      Occ e = m.partner_of(w1.word.cross.back());
      Occ f = w2.word.cross.front();
      Path u = e.side == f.side ? Path{m.vertex_of(e), {}}
                                : m.chord_path(e.disc, std::min(e.side, f.side),
                                               std::max(e.side, f.side));
      w2.grade = grade_word(m, w2.word, w1.grade.back());
      ProjComplex X = string_complex(m, F, w1);
      ProjComplex Y = string_complex(m, F, w2);
      Propagation pr =
          propagate_component(F, p, X, Y, (int)w1.word.cross.size() - 1, 0, {F.one(), u});
      if (!pr.map) {
        std::cerr << "contact morphism does not close to a chain map\n";
        return 3;
      }
      ProjComplex cone = minimize(F, p, mapping_cone(F, p, X, Y, *pr.map));
      std::cout << (opt.json ? complex_to_json(F, p, cone).dump(2)
                             : complex_to_string(F, p, cone))
                << "\n";
      return 0;
    }

    if (c_tau->parsed()) {
      GentlePresentation p = load_validated(file);
      DiscModel m = build_disc_model(p);
      GradedWord w = tau_translate(m, load_word(m, word1));
      if (opt.json)
        std::cout << word_to_json(m, w.word).dump(2) << "\n";
      else
        std::cout << word_to_string(m, w.word) << "\n";
      return 0;
    }

    if (c_twist->parsed()) {
      GentlePresentation p = load_validated(file);
      DiscModel m = build_disc_model(p);
      GradedWord b = load_word(m, word1);
      if (!b.word.band) {
        std::cerr << "twist expects a band word first\n";
        return 2;
      }
      ProjComplex B = band_complex(m, F, b.word, b.grade, F.one());
      if (!is_spherical(m, F, B)) {
        std::cerr << "band complex is not spherical\n";
        return 2;
      }
      GradedWord w = load_word(m, word2);
      ProjComplex T = spherical_twist(m, F, B, word_complex(m, F, w.word, F.one()));
      auto idc = identify_string(m, F, T);
      if (idc)
        std::cout << word_to_string(m, idc->curve.word) << "\n";
      else
        std::cout << complex_to_string(F, p, T) << "\n";
      return 0;
    }

    if (c_endo->parsed()) {
      GentlePresentation p = load_validated(file);
      DiscModel m = build_disc_model(p);
      ArcSystem s =
          arcs_file.empty() ? dual_arc_system(m) : parse_arc_system(m, slurp(arcs_file));
      TiltingReport rep = check_tilting(m, F, s);
      if (!rep.ok()) {
        for (auto& v : rep.violations) std::cerr << v << "\n";
        return 2;
      }
      std::cout << emit_presentation(endo_presentation(m, F, s));
      return 0;
    }

    if (c_corpus->parsed()) {
      cspec.seed = opt.seed;
      auto corpus = gen_corpus(cspec);
      if (opt.json) {
        json j = json::array();
        for (auto& p : corpus) j.push_back(presentation_to_json(p));
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& p : corpus) std::cout << emit_presentation(p) << "\n";
      }
      return 0;
    }

    if (c_selftest->parsed()) {
      SelfCheckReport rep = run_acceptance(std::cout, opt.seed);
      return rep.all_pass() ? 0 : 3;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
