#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "gentle/homalg.hpp"
#include "gentle/selfcheck.hpp"

using namespace gentle;

static GentlePresentation fx(const char* name) {
  return parse_presentation(fixture_gp(name));
}

TEST_CASE("dual arcs are valid single crossings") {
  for (auto name : {"kronecker", "a2", "a3_linear", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    for (int v = 0; v < p.quiver.num_vertices(); ++v) {
      GradedWord w = dual_arc(m, v);
      CHECK(validate_word(m, w.word).ok());
      CHECK(w.word.length() == 1);
      CHECK(m.vertex_of(w.word.cross[0]) == v);
    }
  }
}

TEST_CASE("canonical key is reversal invariant") {
  for (auto name : {"kronecker", "a2", "a3_sink"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    for (auto& w : boundary_words(m).segments)
      CHECK(canonical_key(m, w) == canonical_key(m, reverse_word(m, w)));
  }
}

TEST_CASE("grading follows gap direction") {
  for (auto name : {"kronecker", "a2", "a3_sink", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    for (auto& w : boundary_words(m).segments) {
      Grading g = grade_word(m, w, 5);
      CHECK(g[0] == 5);
      for (int i = 0; i + 1 < w.length(); ++i) {
        int step = gap_at(m, w, i).dir() == GapDir::Forward ? 1 : -1;
        CHECK(g[i + 1] == g[i] + step);
      }
    }
  }
}

TEST_CASE("kronecker band") {
  GentlePresentation p = fx("kronecker");
  DiscModel m = build_disc_model(p);
  CurveWord b = word_from_string(m, "band: x -[a,>]- y -[b,<]-");
  CHECK(b.band);
  CHECK(validate_word(m, b).ok());
  CHECK(winding_number(m, b) == 0);

  // doubling the cycle breaks primitivity
  CurveWord bb = b;
  bb.cross.insert(bb.cross.end(), b.cross.begin(), b.cross.end());
  CHECK_FALSE(validate_word(m, bb).ok());

  // homotopic to a boundary loop
  BoundaryWords bw = boundary_words(m);
  bool found = false;
  for (auto& l : bw.loops)
    if (!l.cross.empty() && canonical_key(m, l) == canonical_key(m, b)) found = true;
  CHECK(found);
}

TEST_CASE("word text round-trip") {
  for (auto name : {"kronecker", "a2", "a3_linear", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    BoundaryWords bw = boundary_words(m);
    std::vector<CurveWord> words;
    for (int v = 0; v < p.quiver.num_vertices(); ++v)
      words.push_back(dual_arc(m, v).word);
    for (auto& w : bw.segments) words.push_back(w);
    for (auto& w : bw.loops)
      if (!w.cross.empty()) words.push_back(w);
    for (auto& w : words) {
      CurveWord back = word_from_string(m, word_to_string(m, w));
      CHECK(canonical_key(m, back) == canonical_key(m, w));
    }
  }
}

TEST_CASE("reduction cancels a backtrack") {
  GentlePresentation p = fx("a2");
  DiscModel m = build_disc_model(p);
  CurveWord w = dual_arc(m, 0).word;
  CurveWord back = reverse_word(m, w);
  CurveWord zig = w;
  zig.cross.insert(zig.cross.end(), back.cross.begin(), back.cross.end());
  zig.end_disc = back.end_disc;
  CHECK(reduce_word(m, zig).cross.empty());
}

TEST_CASE("tau orbit closes after one boundary period") {
  for (auto name : {"a2", "a3_linear", "a3_sink", "kronecker", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    auto walks = trace_boundary(m);
    BoundaryWords bw = boundary_words(m);
    for (size_t s = 0; s < bw.segments.size(); ++s) {
      GradedWord w{bw.segments[s], grade_word(m, bw.segments[s], 0)};
      GradedWord it = w;
      int period = walks[bw.segment_component[s]].marked_count;
      for (int k = 0; k < period; ++k) {
        it = tau_translate(m, it);
        CHECK(validate_word(m, it.word).ok());
      }
      CHECK(canonical_key(m, it.word) == canonical_key(m, w.word));
    }
  }
}

TEST_CASE("boundary words per marked point") {
  for (auto name : {"a2", "kronecker", "a3_source", "dual_numbers"}) {
    GentlePresentation p = fx(name);
    DiscModel m = build_disc_model(p);
    auto walks = trace_boundary(m);
    BoundaryWords bw = boundary_words(m);
    int marked = 0;
    for (auto& w : walks) marked += w.marked_count;
    CHECK((int)bw.segments.size() == marked);
    CHECK(bw.loops.size() == walks.size());
    for (auto& w : bw.segments) CHECK(validate_word(m, w).ok());
  }
}

TEST_CASE("classification against the boundary") {
  GentlePresentation a2 = fx("a2");
  DiscModel m2 = build_disc_model(a2);
  Field F = Field::prime();
  // in a triangle every simple arc between marked points is boundary parallel
  for (int v = 0; v < 2; ++v)
    CHECK(classify_word(m2, F, dual_arc(m2, v)) == WordClass::BoundarySegment);

  GentlePresentation k = fx("kronecker");
  DiscModel mk = build_disc_model(k);
  CurveWord b = word_from_string(mk, "band: x -[a,>]- y -[b,<]-");
  CHECK(classify_word(mk, F, {b, grade_word(mk, b, 0)}) == WordClass::BoundaryNonsegment);

  // A3: a disc with 4 marked points carries 4 boundary-parallel arcs and
  // 2 diagonals; enumerate all short reduced words and classify
  GentlePresentation a3 = fx("a3_linear");
  DiscModel m3 = build_disc_model(a3);
  std::set<std::vector<int>> seg_keys, ess_keys;
  std::vector<Occ> all;
  for (int d = 0; d < (int)m3.discs.size(); ++d)
    for (int s = 0; s < m3.discs[d].sides(); ++s) all.push_back({d, s});
  std::function<void(CurveWord&)> grow = [&](CurveWord& w) {
    w.end_disc = m3.partner_of(w.cross.back()).disc;
    GradedWord gw{w, grade_word(m3, w, 0)};
    WordClass c = classify_word(m3, F, gw);
    if (c == WordClass::BoundarySegment) seg_keys.insert(canonical_key(m3, w));
    if (c == WordClass::Essential) ess_keys.insert(canonical_key(m3, w));
    if ((int)w.cross.size() >= 4) return;
    Occ q = m3.partner_of(w.cross.back());
    for (int s = 0; s < m3.discs[q.disc].sides(); ++s) {
      if (s == q.side) continue;
      w.cross.push_back({q.disc, s});
      grow(w);
      w.cross.pop_back();
    }
  };
  for (Occ c0 : all) {
    CurveWord w;
    w.cross = {c0};
    w.start_disc = c0.disc;
    grow(w);
  }
  CHECK(seg_keys.size() == 4);
  CHECK(ess_keys.size() == 2);
}
