#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gentle/corpus.hpp"
#include "gentle/selfcheck.hpp"
#include "gentle/tilting.hpp"

using namespace gentle;

static GentlePresentation fx(const char* name) {
  return parse_presentation(fixture_gp(name));
}

TEST_CASE("dual arc systems are tilting") {
  Field F = Field::prime();
  for (auto name : {"kronecker", "a2", "a3_linear", "a3_sink", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    TiltingReport r = check_tilting(m, F, dual_arc_system(m));
    CHECK(r.ok());
    if (!r.ok()) MESSAGE(name << ": " << r.violations.front());
  }
}

TEST_CASE("duplicated arc is rejected") {
  Field F = Field::prime();
  GentlePresentation p = fx("a2");
  DiscModel m = build_disc_model(p);
  ArcSystem s = dual_arc_system(m);
  s.arcs.push_back(s.arcs[0]);
  CHECK_FALSE(check_tilting(m, F, s).ok());
}

TEST_CASE("incomplete system fails generation") {
  Field F = Field::prime();
  GentlePresentation p = fx("kronecker");
  DiscModel m = build_disc_model(p);
  ArcSystem s = dual_arc_system(m);
  s.arcs.pop_back();
  CHECK_FALSE(check_tilting(m, F, s).ok());
}

TEST_CASE("arc system text round-trip") {
  Field F = Field::prime();
  GentlePresentation p = fx("a3_sink");
  DiscModel m = build_disc_model(p);
  ArcSystem s = dual_arc_system(m);
  std::ostringstream text;
  text << "# dual arcs\n";
  for (auto& a : s.arcs) text << word_to_string(m, a.word) << "\n";
  ArcSystem back = parse_arc_system(m, text.str());
  REQUIRE(back.arcs.size() == s.arcs.size());
  CHECK(check_tilting(m, F, back).ok());
}

TEST_CASE("round-trip on fixtures") {
  Field F = Field::prime();
  for (auto name : {"a2", "kronecker", "dual_numbers", "a3_linear", "a3_sink", "a3_source"}) {
    RoundtripResult r = roundtrip_check(fx(name), F);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(name << ": " << r.detail);
  }
}

TEST_CASE("round-trip on a corpus sample") {
  Field F = Field::prime();
  for (auto& p : gen_corpus({10, 6, 12, 5})) {
    RoundtripResult r = roundtrip_check(p, F);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(emit_presentation(p) << ": " << r.detail);
  }
}

TEST_CASE("endo presentation preserves the derived invariant") {
  Field F = Field::prime();
  for (auto& p : gen_corpus({8, 5, 10, 9})) {
    DiscModel m = build_disc_model(p);
    GentlePresentation e = endo_presentation(m, F, dual_arc_system(m));
    CHECK(derived_invariant(p) == derived_invariant(e));
  }
}

TEST_CASE("corpus generation is deterministic") {
  CorpusSpec spec{12, 6, 12, 42};
  auto a = gen_corpus(spec);
  auto b = gen_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(emit_presentation(a[i]) == emit_presentation(b[i]));
  for (auto& p : a) CHECK(validate_gentle(p).ok());
}

TEST_CASE("zero-arrow spec gives semisimple quivers") {
  for (auto& p : gen_corpus({5, 4, 0, 2})) {
    CHECK(p.quiver.num_arrows() == 0);
    CHECK(p.relations.empty());
  }
}
