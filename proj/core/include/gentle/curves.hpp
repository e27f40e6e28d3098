#pragma once
// Graded arcs and bands as laminate-crossing words; gradings, winding
// numbers, the fractional twist and curve classification.

#include <optional>
#include <string>
#include <vector>

#include "gentle/surface.hpp"

namespace gentle {

// A curve is stored through its laminate crossings. cross[i] is the side
// occurrence the curve reaches first; after crossing it sits in the disc of
// the partner occurrence. Arcs additionally record the discs whose marked
// points carry the endpoints.
struct CurveWord {
  bool band = false;
  std::vector<Occ> cross;
  int start_disc = -1;  // arcs only
  int end_disc = -1;    // arcs only

  int length() const { return (int)cross.size(); }
  bool operator==(const CurveWord&) const = default;
};

// Grading: one integer per crossing (term degrees of the complex).
using Grading = std::vector<int>;

struct GradedWord {
  CurveWord word;
  Grading grade;
};

enum class GapDir { Forward, Backward };

struct Gap {
  int disc = -1;
  int side_from = -1;  // side of partner(cross[i])
  int side_to = -1;    // side of cross[i+1]
  GapDir dir() const { return side_from < side_to ? GapDir::Forward : GapDir::Backward; }
  int lo() const { return std::min(side_from, side_to); }
  int hi() const { return std::max(side_from, side_to); }
};

// Gap i sits between cross[i] and cross[i+1] (cyclic for bands; arcs have
// length()-1 gaps). Precondition: validated word.
Gap gap_at(const DiscModel& m, const CurveWord& w, int i);
int gap_count(const CurveWord& w);

struct WordReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

WordReport validate_word(const DiscModel& m, const CurveWord& w);

CurveWord reverse_word(const DiscModel& m, const CurveWord& w);
GradedWord reverse_word(const DiscModel& m, const GradedWord& w);

// Deterministic canonical key (minimum over reversal, and rotations for
// bands); equal keys <=> same unoriented homotopy class at desk scale.
std::vector<int> canonical_key(const DiscModel& m, const CurveWord& w);

Grading grade_word(const DiscModel& m, const CurveWord& w, int seed);  // throws on ungradable band
int winding_number(const DiscModel& m, const CurveWord& w);            // bands

// Bigon removal: cancel adjacent crossings that undo each other (cyclic
// for bands); may return an empty word (contractible curve).
CurveWord reduce_word(const DiscModel& m, const CurveWord& w);
GradedWord reduce_word_graded(const DiscModel& m, const GradedWord& w);

// Fractional twist: both endpoints slide to the predecessor marked point
// along the traced walk orientation; result is reduced. Grades of surviving
// crossings are preserved, new ones follow the grading equation.
GradedWord tau_translate(const DiscModel& m, const GradedWord& w);
CurveWord tau_translate(const DiscModel& m, const CurveWord& w);

// Boundary parallels: one arc per marked point (to the next marked point in
// walk orientation) and one loop word per walk.
struct BoundaryWords {
  std::vector<CurveWord> segments;
  std::vector<CurveWord> loops;            // empty-walk loops included
  std::vector<int> segment_component;      // walk index per segment
  std::vector<int> loop_component;
};
BoundaryWords boundary_words(const DiscModel& m);

enum class WordClass { Essential, BoundarySegment, BoundaryNonsegment, Generic };
// defined in homalg.cpp (needs the Hom oracle)
struct Field;
WordClass classify_word(const DiscModel& m, const Field& F, const GradedWord& w);

// Text notation:
//   arc: x1 -[u1,>]- x2 -[u2,<]- x3 @ (discA, 0) .. (discB, 0)
//   band: x1 -[u1,>]- x2 -[u2,<]-
std::string word_to_string(const DiscModel& m, const CurveWord& w);
CurveWord word_from_string(const DiscModel& m, const std::string& text);

json word_to_json(const DiscModel& m, const CurveWord& w);

}  // namespace gentle
