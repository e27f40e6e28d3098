#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/selfcheck.hpp"

using namespace gentle;

static GentlePresentation fx(const char* name) {
  return parse_presentation(fixture_gp(name));
}

TEST_CASE("parse and emit round-trip") {
  for (auto name : {"kronecker", "a2", "a3_linear", "a3_sink", "a3_source", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    GentlePresentation q = parse_presentation(emit_presentation(p));
    CHECK(q.quiver.vertices == p.quiver.vertices);
    CHECK(q.quiver.num_arrows() == p.quiver.num_arrows());
    CHECK(q.relations == p.relations);
  }
}

TEST_CASE("json round-trip") {
  GentlePresentation p = fx("dual_numbers");
  GentlePresentation q = presentation_from_json(presentation_to_json(p));
  CHECK(q.quiver.vertices == p.quiver.vertices);
  CHECK(q.relations == p.relations);
}

TEST_CASE("fixture validation") {
  for (auto name : {"kronecker", "a2", "a3_linear", "a3_sink", "a3_source", "dual_numbers"})
    CHECK(validate_gentle(fx(name)).ok());
}

TEST_CASE("loop without relation fails admissibility") {
  auto rep = validate_gentle(fx("bad_loop"));
  REQUIRE_FALSE(rep.ok());
  bool adm = false;
  for (auto& v : rep.violations)
    if (v.code == "admissibility") adm = true;
  CHECK(adm);
}

TEST_CASE("path arithmetic respects relations") {
  GentlePresentation p = fx("dual_numbers");
  Path a{-1, {0}};
  auto sq = path_mul(p, a, a);
  REQUIRE(sq.has_value());
  CHECK(sq->zero);

  GentlePresentation l = fx("a3_linear");
  Path u{-1, {0}}, v{-1, {1}};
  auto uv = path_mul(l, u, v);
  REQUIRE(uv.has_value());
  CHECK_FALSE(uv->zero);
  CHECK(uv->path.arrows == std::vector<int>{0, 1});
  CHECK_FALSE(path_mul(l, v, u).has_value());  // not composable
}

TEST_CASE("path basis sizes") {
  CHECK(path_basis(fx("a2")).size() == 3);            // e1, e2, a
  CHECK(path_basis(fx("kronecker")).size() == 4);     // e_x, e_y, a, b
  CHECK(path_basis(fx("dual_numbers")).size() == 2);  // e1, a
  CHECK(path_basis(fx("a3_linear")).size() == 6);     // 3 trivial + a, b, ab
}

TEST_CASE("thread counts") {
  for (auto name : {"kronecker", "a2", "a3_linear", "a3_sink", "a3_source", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    Threads t = threads(p);
    CHECK((int)t.permitted.size() ==
          2 * p.quiver.num_vertices() - p.quiver.num_arrows());
    // every laminate occurs exactly twice over the permitted threads
    std::vector<int> occ(p.quiver.num_vertices(), 0);
    for (auto& th : t.permitted) {
      if (th.body.trivial()) {
        occ[th.body.base_vertex]++;  // one-sided disc
      } else {
        occ[path_source(p, th.body)]++;
        occ[path_target(p, th.body)]++;
        for (size_t i = 0; i + 1 < th.body.arrows.size(); ++i)
          occ[p.quiver.arrows[th.body.arrows[i]].tgt]++;
      }
    }
    for (int v = 0; v < p.quiver.num_vertices(); ++v) CHECK(occ[v] == 2);
  }
  CHECK(threads(fx("dual_numbers")).full_relation_cycles.size() == 1);
  CHECK(threads(fx("a2")).full_relation_cycles.empty());
}

TEST_CASE("isomorphism testing") {
  auto a3 = an_orientations(3);
  REQUIRE(a3.size() == 4);
  // masks 0 and 3 are the two linear orientations; 1 and 2 are the source
  // and sink orientations, which are opposite, not isomorphic
  CHECK(isomorphic_presentations(a3[0], a3[3]));
  CHECK_FALSE(isomorphic_presentations(a3[1], a3[2]));
  CHECK_FALSE(isomorphic_presentations(a3[0], a3[1]));
  bool sink1 = isomorphic_presentations(a3[1], fx("a3_sink"));
  bool src1 = isomorphic_presentations(a3[1], fx("a3_source"));
  CHECK(sink1 != src1);
  CHECK_FALSE(isomorphic_presentations(fx("a2"), fx("dual_numbers")));
}

TEST_CASE("relabel preserves validity") {
  GentlePresentation p = fx("a3_linear");
  GentlePresentation q = relabel(p, {2, 0, 1}, {1, 0}, {"p", "q", "r"}, {"u", "v"});
  CHECK(validate_gentle(q).ok());
  CHECK(isomorphic_presentations(p, q));
}
