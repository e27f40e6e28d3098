#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/corpus.hpp"
#include "gentle/homalg.hpp"
#include "gentle/selfcheck.hpp"

using namespace gentle;

static GentlePresentation fx(const char* name) {
  return parse_presentation(fixture_gp(name));
}

TEST_CASE("dual arc complexes are stalks") {
  Field F = Field::prime();
  for (auto name : {"kronecker", "a2", "a3_linear", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    for (int v = 0; v < p.quiver.num_vertices(); ++v) {
      ProjComplex X = string_complex(m, F, dual_arc(m, v));
      REQUIRE(X.terms.size() == 1);
      CHECK(X.terms[0].vertex == v);
      CHECK(X.terms[0].degree == 0);
      CHECK(X.diff.empty());
    }
  }
}

TEST_CASE("d squared vanishes on boundary-word complexes") {
  Field F = Field::prime();
  for (auto& p : gen_corpus({15, 6, 12, 3})) {
    DiscModel m = build_disc_model(p);
    BoundaryWords bw = boundary_words(m);
    for (auto& w : bw.segments) {
      ProjComplex X = string_complex(m, F, {w, grade_word(m, w, 0)});
      CHECK(check_dsquared(F, p, X));
      CHECK(X.terms.size() == w.cross.size());
    }
    for (auto& w : bw.loops) {
      if (w.cross.empty() || winding_number(m, w) != 0) continue;
      ProjComplex X = band_complex(m, F, w, grade_word(m, w, 0), F.from_int(2));
      CHECK(check_dsquared(F, p, X));
    }
  }
}

TEST_CASE("identify_string inverts the construction") {
  Field F = Field::prime();
  for (auto name : {"kronecker", "a2", "a3_sink", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    for (auto& w : boundary_words(m).segments) {
      GradedWord gw{w, grade_word(m, w, 0)};
      auto idc = identify_string(m, F, string_complex(m, F, gw));
      REQUIRE(idc.has_value());
      CHECK_FALSE(idc->curve.word.band);
      CHECK(canonical_key(m, idc->curve.word) == canonical_key(m, w));
    }
  }
}

TEST_CASE("identify_string recovers band parameter") {
  Field F = Field::prime();
  GentlePresentation p = fx("kronecker");
  DiscModel m = build_disc_model(p);
  CurveWord b = word_from_string(m, "band: x -[a,>]- y -[b,<]-");
  for (int lam : {1, 2, 5}) {
    ProjComplex X = band_complex(m, F, b, grade_word(m, b, 0), F.from_int(lam));
    auto idc = identify_string(m, F, X);
    REQUIRE(idc.has_value());
    CHECK(idc->curve.word.band);
    CHECK(canonical_key(m, idc->curve.word) == canonical_key(m, b));
  }
}

TEST_CASE("shift and sum") {
  Field F = Field::prime();
  GentlePresentation p = fx("a3_linear");
  DiscModel m = build_disc_model(p);
  CurveWord w = boundary_words(m).segments[0];
  ProjComplex X = string_complex(m, F, {w, grade_word(m, w, 0)});
  ProjComplex S = shift(F, X, 2);
  REQUIRE(S.terms.size() == X.terms.size());
  for (size_t i = 0; i < X.terms.size(); ++i)
    CHECK(S.terms[i].degree == X.terms[i].degree - 2);
  CHECK(check_dsquared(F, p, shift(F, X, 1)));
  ProjComplex D = direct_sum(X, S);
  CHECK(D.terms.size() == 2 * X.terms.size());
  CHECK(check_dsquared(F, p, D));
}

TEST_CASE("path-linear algebra respects the ideal") {
  Field F = Field::prime();
  GentlePresentation p = fx("dual_numbers");
  PathLin a{{F.one(), Path{-1, {0}}}};
  CHECK(lin_mul(F, p, a, a).empty());
  PathLin two = lin_add(F, a, a);
  REQUIRE(two.size() == 1);
  CHECK(two[0].coef == F.from_int(2));
  CHECK(lin_add(F, a, lin_scale(F, F.from_int(-1), a)).empty());
}
