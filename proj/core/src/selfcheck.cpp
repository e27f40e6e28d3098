#include "gentle/selfcheck.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "gentle/corpus.hpp"
#include "gentle/curves.hpp"
#include "gentle/homalg.hpp"
#include "gentle/surface.hpp"
#include "gentle/tilting.hpp"

namespace gentle {

std::string fixture_gp(const std::string& name) {
  if (name == "kronecker")
    return "vertices: x y\narrow a: x -> y\narrow b: x -> y\n";
  if (name == "a2") return "vertices: 1 2\narrow a: 1 -> 2\n";
  if (name == "a3_linear")
    return "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";
  if (name == "a3_sink")
    return "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 2\n";
  if (name == "a3_source")
    return "vertices: 1 2 3\narrow a: 2 -> 1\narrow b: 2 -> 3\n";
  if (name == "dual_numbers")
    return "vertices: 1\narrow a: 1 -> 1\nrel a a\n";
  if (name == "bad_loop") return "vertices: 1\narrow a: 1 -> 1\n";
  throw std::invalid_argument("unknown fixture " + name);
}

std::vector<GentlePresentation> an_orientations(int n) {
  std::vector<GentlePresentation> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::ostringstream gp;
    gp << "vertices:";
    for (int v = 1; v <= n; ++v) gp << " " << v;
    gp << "\n";
    for (int i = 0; i < n - 1; ++i) {
      gp << "arrow e" << i << ": ";
      if (mask & (1 << i))
        gp << (i + 2) << " -> " << (i + 1) << "\n";
      else
        gp << (i + 1) << " -> " << (i + 2) << "\n";
    }
    out.push_back(parse_presentation(gp.str()));
  }
  return out;
}

namespace {

using clock_type = std::chrono::steady_clock;

struct Checker {
  std::ostream& out;
  SelfCheckReport report;

  void run(int number, const std::string& name, double budget_seconds,
           const std::function<std::string()>& body) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    auto t0 = clock_type::now();
    try {
      r.detail = body();  // empty string = pass
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    if (r.pass && budget_seconds > 0 && r.seconds > budget_seconds) {
      r.pass = false;
      r.detail = "runtime budget exceeded";
    }
    out << "criterion " << number << " (" << name << "): " << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) out << " - " << r.detail;
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.2fs]", r.seconds);
    out << buf << "\n" << std::flush;
    report.results.push_back(std::move(r));
  }
};

std::optional<CurveWord> random_arc(std::mt19937_64& rng, const DiscModel& m, int len) {
  int total = 0;
  for (auto& d : m.discs) total += d.sides();
  if (total == 0) return std::nullopt;
  int pick = (int)(rng() % total);
  Occ c{0, 0};
  for (int d = 0; d < (int)m.discs.size(); ++d) {
    if (pick < m.discs[d].sides()) {
      c = {d, pick};
      break;
    }
    pick -= m.discs[d].sides();
  }
  CurveWord w;
  w.cross.push_back(c);
  for (int k = 1; k < len; ++k) {
    Occ q = m.partner_of(w.cross.back());
    int sides = m.discs[q.disc].sides();
    if (sides <= 1) break;
    int s = (int)(rng() % (sides - 1));
    if (s >= q.side) ++s;
    w.cross.push_back({q.disc, s});
  }
  w.start_disc = w.cross.front().disc;
  w.end_disc = m.partner_of(w.cross.back()).disc;
  return w;
}

std::optional<CurveWord> random_band(std::mt19937_64& rng, const DiscModel& m, int len) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    auto arc = random_arc(rng, m, len);
    if (!arc || (int)arc->cross.size() != len) continue;
    CurveWord w = *arc;
    w.band = true;
    w.start_disc = w.end_disc = -1;
    if (!validate_word(m, w).ok()) continue;
    if (winding_number(m, w) != 0) continue;
    return w;
  }
  return std::nullopt;
}

std::string check_profiles_match(const Field& F, const GentlePresentation& p,
                                 const ProjComplex& X, const ProjComplex& Y) {
  HomProfile prof = hom_profile(F, p, X, Y);
  HomProfile got;
  for (auto& f : alp_basis(F, p, X, Y)) ++got[f.degree];
  if (prof != got) {
    std::ostringstream o;
    o << "alp/profile mismatch:";
    for (auto& [d, n] : prof) o << " oracle[" << d << "]=" << n;
    for (auto& [d, n] : got) o << " alp[" << d << "]=" << n;
    return o.str();
  }
  return "";
}

}  // namespace

SelfCheckReport run_acceptance(std::ostream& out, std::uint64_t seed) {
  Checker ck{out};
  Field F = Field::prime();
  CorpusSpec cspec{50, 8, 16, seed};
  std::vector<GentlePresentation> corpus = gen_corpus(cspec);

  ck.run(1, "gentle validation", 1.0, [&]() -> std::string {
    for (auto name : {"kronecker", "a2", "a3_linear", "a3_sink", "a3_source", "dual_numbers"}) {
      auto p = parse_presentation(fixture_gp(name));
      if (!validate_gentle(p).ok()) return std::string(name) + " failed validation";
    }
    for (size_t i = 0; i < corpus.size(); ++i)
      if (!validate_gentle(corpus[i]).ok())
        return "corpus algebra " + std::to_string(i) + " failed validation";
    auto bad = parse_presentation(fixture_gp("bad_loop"));
    auto rep = validate_gentle(bad);
    if (rep.ok()) return "loop without relation validated";
    bool adm = false;
    for (auto& v : rep.violations)
      if (v.code == "admissibility") adm = true;
    if (!adm) return "loop failure is not an admissibility violation";
    return "";
  });

  ck.run(2, "surface golden values", 1.0, [&]() -> std::string {
    RibbonSurface k = ribbon_surface(parse_presentation(fixture_gp("kronecker")));
    if (k.euler_characteristic != 0 || k.genus != 0 || k.boundary.size() != 2)
      return "kronecker surface shape wrong";
    for (auto& c : k.boundary)
      if (c.marked_count != 1 || c.winding != 0) return "kronecker component values wrong";
    for (int n = 2; n <= 4; ++n)
      for (auto& p : an_orientations(n)) {
        RibbonSurface s = ribbon_surface(p);
        if (s.boundary.size() != 1 || s.boundary[0].marked_count != n + 1)
          return "A_" + std::to_string(n) + " orientation has wrong boundary";
      }
    RibbonSurface d = ribbon_surface(parse_presentation(fixture_gp("dual_numbers")));
    int zero = 0;
    for (auto& c : d.boundary)
      if (c.marked_count == 0) ++zero;
    if (zero != 1 || d.punctures != 1) return "dual numbers puncture count wrong";
    return "";
  });

  ck.run(3, "AAG and winding consistency", 10.0, [&]() -> std::string {
    for (size_t i = 0; i < corpus.size(); ++i) {
      const auto& p = corpus[i];
      RibbonSurface s = ribbon_surface(p);
      Threads t = threads(p);
      int marked = 0, zero = 0, wsum = 0;
      for (auto& c : s.boundary) {
        marked += c.marked_count;
        wsum += c.winding;
        if (c.marked_count == 0) ++zero;
      }
      if (marked != (int)t.permitted.size())
        return "algebra " + std::to_string(i) + ": marked points vs permitted threads";
      if (zero != (int)t.full_relation_cycles.size())
        return "algebra " + std::to_string(i) + ": punctures vs full relation cycles";
      int chi = p.quiver.num_vertices() - p.quiver.num_arrows();
      if (s.euler_characteristic != chi ||
          chi != 2 * s.components - 2 * s.genus - (int)s.boundary.size())
        return "algebra " + std::to_string(i) + ": Euler characteristic inconsistent";
      if (wsum != 2 * chi) return "algebra " + std::to_string(i) + ": winding sum != 2 chi";
    }
    return "";
  });

  ck.run(4, "fractional Calabi-Yau law", 60.0, [&]() -> std::string {
    for (size_t i = 0; i < corpus.size(); ++i) {
      const auto& p = corpus[i];
      DiscModel m = build_disc_model(p);
      auto walks = trace_boundary(m);
      BoundaryWords bw = boundary_words(m);
      for (size_t s = 0; s < bw.segments.size(); ++s) {
        const auto& walk = walks[bw.segment_component[s]];
        GradedWord delta{bw.segments[s], grade_word(m, bw.segments[s], 0)};
        GradedWord it = delta;
        for (int k = 0; k < walk.marked_count; ++k) it = tau_translate(m, it);
        if (canonical_key(m, it.word) != canonical_key(m, delta.word))
          return "algebra " + std::to_string(i) + " segment " + std::to_string(s) +
                 ": twist orbit does not close";
        ProjComplex lhs = string_complex(m, F, it);
        ProjComplex rhs = shift(F, string_complex(m, F, delta), -walk.winding);
        if (!same_fingerprint(F, p, lhs, rhs))
          return "algebra " + std::to_string(i) + " segment " + std::to_string(s) +
                 ": grading shift is not -winding";
      }
    }
    return "";
  });

  ck.run(5, "basis/oracle agreement", 60.0, [&]() -> std::string {
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    int done = 0;
    size_t ci = 0;
    int guard = 0;
    while (done < 200 && ++guard < 5000) {
      const auto& p = corpus[ci++ % corpus.size()];
      DiscModel m = build_disc_model(p);
      auto make = [&]() -> std::optional<ProjComplex> {
        int len = 1 + (int)(rng() % 6);
        if (rng() % 3 == 0) {
          auto b = random_band(rng, m, std::max(2, len));
          if (!b) return std::nullopt;
          return band_complex(m, F, *b, grade_word(m, *b, 0), F.from_int(1 + (int)(rng() % 5)));
        }
        auto a = random_arc(rng, m, len);
        if (!a) return std::nullopt;
        return string_complex(m, F, {*a, grade_word(m, *a, 0)});
      };
      auto X = make(), Y = make();
      if (!X || !Y) continue;
      std::string err = check_profiles_match(F, p, *X, *Y);
      if (!err.empty()) return "pair " + std::to_string(done) + ": " + err;
      ++done;
    }
    if (done < 200) return "could not draw 200 word pairs";
    return "";
  });

  ck.run(6, "cone equals crossing resolution", 0.0, [&]() -> std::string {
    std::vector<GentlePresentation> pool = corpus;
    pool.push_back(parse_presentation(fixture_gp("a2")));
    pool.push_back(parse_presentation(fixture_gp("dual_numbers")));
    int done = 0;
    for (auto& p : pool) {
      DiscModel m = build_disc_model(p);
      // declared crossings: pairs of dual-arc ends at a shared marked point
      struct End {
        int vertex;
        Occ enter;
        bool at_start;
      };
      std::map<int, std::vector<End>> at_disc;
      for (int v = 0; v < p.quiver.num_vertices(); ++v) {
        CurveWord w = dual_arc(m, v).word;
        at_disc[w.start_disc].push_back({v, w.cross.front(), true});
        at_disc[m.partner_of(w.cross.back()).disc].push_back(
            {v, m.partner_of(w.cross.back()), false});
      }
      for (auto& [d, ends] : at_disc)
        for (auto& e : ends)
          for (auto& f : ends) {
            if (e.enter.side >= f.enter.side) continue;
            CurveWord w1 = dual_arc(m, e.vertex).word;
            if (e.at_start) w1 = reverse_word(m, w1);  // e becomes the terminal end
            CurveWord w2 = dual_arc(m, f.vertex).word;
            if (!f.at_start) w2 = reverse_word(m, w2);  // f becomes the initial end
            Grading g1 = grade_word(m, w1, 0);
            Grading g2 = grade_word(m, w2, g1.back());
            ProjComplex X1 = string_complex(m, F, {w1, g1});
            ProjComplex X2 = string_complex(m, F, {w2, g2});
            Path u = m.chord_path(d, e.enter.side, f.enter.side);
            Propagation pr = propagate_component(F, p, X1, X2, (int)w1.cross.size() - 1, 0,
                                                 {F.one(), u});
            if (!pr.map) return "contact morphism did not close";
            ProjComplex cone = mapping_cone(F, p, X1, X2, *pr.map);
            auto resolved = resolve_crossing(m, w1, w2);
            GradedWord spliced;
            spliced.word.cross = w1.cross;
            spliced.word.cross.insert(spliced.word.cross.end(), w2.cross.begin(),
                                      w2.cross.end());
            spliced.word.start_disc = w1.start_disc;
            spliced.word.end_disc = w2.end_disc;
            for (int x : g1) spliced.grade.push_back(x - 1);
            for (int x : g2) spliced.grade.push_back(x);
            spliced = reduce_word_graded(m, spliced);
            if (resolved.empty() != spliced.word.cross.empty())
              return "resolution and splice disagree";
            ProjComplex expected;
            if (!resolved.empty()) {
              if (canonical_key(m, resolved[0]) != canonical_key(m, spliced.word))
                return "resolution and splice words differ";
              expected = string_complex(m, F, spliced);
            }
            if (!same_fingerprint(F, p, cone, expected))
              return "cone fingerprint differs from resolved word (" + p.quiver.vertices[0] +
                     " algebra, crossing at disc " + std::to_string(d) + ")";
            ++done;
          }
      if (done >= 60) break;
    }
    if (done < 50) return "only " + std::to_string(done) + " declared crossings";
    return "";
  });

  ck.run(7, "endomorphism round-trip", 30.0, [&]() -> std::string {
    std::vector<GentlePresentation> pool = corpus;
    pool.push_back(parse_presentation(fixture_gp("a2")));
    pool.push_back(parse_presentation(fixture_gp("kronecker")));
    pool.push_back(parse_presentation(fixture_gp("dual_numbers")));
    for (size_t i = 0; i < pool.size(); ++i) {
      RoundtripResult r = roundtrip_check(pool[i], F);
      if (!r.ok) return "algebra " + std::to_string(i) + ": " + r.detail;
    }
    return "";
  });

  ck.run(8, "derived-equivalence decisions", 0.0, [&]() -> std::string {
    auto a3 = an_orientations(3);
    for (auto& p : a3)
      for (auto& q : a3) {
        auto r = decide_derived_equivalence(p, q);
        if (r.verdict != EquivalenceVerdict::Equivalent)
          return "A3 orientations not all equivalent";
      }
    auto r = decide_derived_equivalence(parse_presentation(fixture_gp("a2")),
                                        parse_presentation(fixture_gp("dual_numbers")));
    if (r.verdict != EquivalenceVerdict::NotEquivalent)
      return "A2 vs dual numbers not rejected";
    if (r.witness.empty()) return "NotEquivalent verdict lacks a witness";
    for (size_t i = 0; i < corpus.size(); ++i) {
      auto rr = decide_derived_equivalence(corpus[i], corpus[i]);
      if (rr.verdict != EquivalenceVerdict::Equivalent)
        return "decide not reflexive on algebra " + std::to_string(i);
    }
    for (size_t i = 0; i + 1 < corpus.size(); i += 3) {
      auto ab = decide_derived_equivalence(corpus[i], corpus[i + 1]);
      auto ba = decide_derived_equivalence(corpus[i + 1], corpus[i]);
      if (ab.verdict != ba.verdict) return "decide not symmetric";
      if (ab.verdict == EquivalenceVerdict::NotEquivalent && ab.witness.empty())
        return "missing witness";
    }
    return "";
  });

  ck.run(9, "spherical twist is the Dehn twist", 0.0, [&]() -> std::string {
    auto p = parse_presentation(fixture_gp("kronecker"));
    DiscModel m = build_disc_model(p);
    // the unique band class: crossings x, y with gaps (a,>), (b,<)
    CurveWord band = word_from_string(m, "band(1): x -[a,>]- y -[b,<]-");
    ProjComplex B = band_complex(m, F, band, grade_word(m, band, 0), F.one());
    if (!is_spherical(m, F, B)) return "Kronecker band not recognized as 1-spherical";
    if (!same_fingerprint(F, p, spherical_twist(m, F, B, B), B))
      return "twist of the band itself is not the band";

    // hand resolution on the cylinder: the twist advances the winding of an
    // end-to-end arc by one, so the x arc goes to the y arc, and the y arc
    // to the word crossing y, x, y with the middle crossing one degree down
    int d_a = -1, d_b = -1;
    for (int d = 0; d < (int)m.discs.size(); ++d) {
      if (m.discs[d].thread.arrows == std::vector<int>{0}) d_a = d;
      if (m.discs[d].thread.arrows == std::vector<int>{1}) d_b = d;
    }
    if (d_a < 0 || d_b < 0) return "unexpected disc model";

    ProjComplex Tx = spherical_twist(m, F, B, stalk_complex(0));
    if (!same_fingerprint(F, p, Tx, stalk_complex(1)))
      return "twisted x arc is not the y arc";

    ProjComplex Ty = spherical_twist(m, F, B, stalk_complex(1));
    auto wrapped = [&](int d1, int d2) {
      CurveWord w;
      w.cross = {{d1, 1}, {d2, 0}, {d1, 1}};
      w.start_disc = d1;
      w.end_disc = d2;
      return w;
    };
    bool matched = false;
    for (CurveWord w : {wrapped(d_a, d_b), wrapped(d_b, d_a)}) {
      if (!validate_word(m, w).ok()) return "hand-resolved word invalid";
      ProjComplex E = string_complex(m, F, {w, grade_word(m, w, 0)});
      if (same_fingerprint(F, p, Ty, E)) matched = true;
    }
    if (!matched) return "twisted y arc does not match the wrapped word";
    return "";
  });

  ck.run(10, "Auslander-Reiten check", 0.0, [&]() -> std::string {
    std::vector<GentlePresentation> pool{parse_presentation(fixture_gp("a2")),
                                         parse_presentation(fixture_gp("kronecker"))};
    for (auto& q : an_orientations(3)) pool.push_back(q);
    for (size_t i = 0; i < pool.size(); ++i) {
      DiscModel m = build_disc_model(pool[i]);
      BoundaryWords bw = boundary_words(m);
      for (size_t s = 0; s < bw.segments.size(); ++s) {
        GradedWord delta{bw.segments[s], grade_word(m, bw.segments[s], 0)};
        if (!ar_check(m, F, delta))
          return "algebra " + std::to_string(i) + " segment " + std::to_string(s) +
                 " fails the connecting-morphism check";
      }
    }
    return "";
  });

  return ck.report;
}

}  // namespace gentle
