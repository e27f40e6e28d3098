#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gentle/corpus.hpp"
#include "gentle/selfcheck.hpp"
#include "gentle/surface.hpp"

using namespace gentle;

static GentlePresentation fx(const char* name) {
  return parse_presentation(fixture_gp(name));
}

TEST_CASE("kronecker is a cylinder with one marked point per side") {
  RibbonSurface s = ribbon_surface(fx("kronecker"));
  CHECK(s.euler_characteristic == 0);
  CHECK(s.genus == 0);
  REQUIRE(s.boundary.size() == 2);
  for (auto& c : s.boundary) {
    CHECK(c.marked_count == 1);
    CHECK(c.winding == 0);
  }
  CHECK(s.punctures == 0);
}

TEST_CASE("A_n is a disc with n+1 marked points, any orientation") {
  for (int n = 2; n <= 4; ++n)
    for (auto& p : an_orientations(n)) {
      RibbonSurface s = ribbon_surface(p);
      CHECK(s.genus == 0);
      REQUIRE(s.boundary.size() == 1);
      CHECK(s.boundary[0].marked_count == n + 1);
      CHECK(s.euler_characteristic == 1);
    }
}

TEST_CASE("dual numbers carry a puncture") {
  RibbonSurface s = ribbon_surface(fx("dual_numbers"));
  CHECK(s.punctures == 1);
  DerivedInvariant inv = derived_invariant(fx("dual_numbers"));
  CHECK(inv.genus == 0);
  REQUIRE(inv.pairs.size() == 2);
  std::vector<std::pair<int, int>> want{{0, -1}, {1, 1}};
  CHECK(inv.pairs == want);
}

TEST_CASE("corpus consistency laws") {
  for (auto& p : gen_corpus({25, 6, 12, 7})) {
    RibbonSurface s = ribbon_surface(p);
    int chi = p.quiver.num_vertices() - p.quiver.num_arrows();
    CHECK(s.euler_characteristic == chi);
    CHECK(chi == 2 * s.components - 2 * s.genus - (int)s.boundary.size());
    int wsum = 0, marked = 0;
    for (auto& c : s.boundary) {
      wsum += c.winding;
      marked += c.marked_count;
    }
    CHECK(wsum == 2 * chi);
    CHECK(marked == (int)threads(p).permitted.size());
  }
}

TEST_CASE("derived invariant is a presentation invariant") {
  GentlePresentation p = fx("a3_linear");
  GentlePresentation q = relabel(p, {1, 2, 0}, {1, 0}, {"x", "y", "z"}, {"f", "g"});
  CHECK(derived_invariant(p) == derived_invariant(q));
}

TEST_CASE("equivalence verdicts") {
  auto a3 = an_orientations(3);
  for (auto& p : a3)
    for (auto& q : a3)
      CHECK(decide_derived_equivalence(p, q).verdict == EquivalenceVerdict::Equivalent);
  auto r = decide_derived_equivalence(fx("a2"), fx("dual_numbers"));
  CHECK(r.verdict == EquivalenceVerdict::NotEquivalent);
  CHECK_FALSE(r.witness.empty());
  CHECK(decide_derived_equivalence(fx("kronecker"), fx("kronecker")).verdict ==
        EquivalenceVerdict::Equivalent);
}

TEST_CASE("surface report json shape") {
  json j = surface_report_json(fx("kronecker"));
  CHECK(j["chi"] == 0);
  CHECK(j["genus"] == 0);
  CHECK(j["components"].size() == 2);
  for (auto& c : j["components"]) {
    CHECK(c["marked"] == 1);
    CHECK(c["winding"] == 0);
  }
}

TEST_CASE("boundary trace covers each segment once") {
  for (auto name : {"kronecker", "a2", "dual_numbers", "a3_sink"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    auto walks = trace_boundary(m);
    std::set<std::pair<int, int>> seen;
    int total = 0;
    for (auto& d : m.discs) total += d.sides();
    for (auto& w : walks)
      for (auto& s : w.segments) CHECK(seen.insert({s.disc, s.seg}).second);
    CHECK((int)seen.size() == total);
  }
}
