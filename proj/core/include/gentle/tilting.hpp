#pragma once
// Geometric tilting criterion for arc systems and recovery of the
// endomorphism presentation.

#include "gentle/homalg.hpp"

namespace gentle {

struct ArcSystem {
  std::vector<GradedWord> arcs;  // finite arcs, graded (seeds fix shifts)
};

ArcSystem dual_arc_system(const DiscModel& m);
// One arc per non-empty line, curve-word text notation.
ArcSystem parse_arc_system(const DiscModel& m, const std::string& text);

struct TiltingReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// (1) pairwise distinct simple arcs meeting only at marked points (Hom
// totals must match boundary contact counts), (2) consistent shift
// assignment over the contact graph (zero winding of contact cycles),
// (3) concatenation closure reaches every dual arc.
TiltingReport check_tilting(const DiscModel& m, const Field& F, const ArcSystem& s);

GentlePresentation endo_presentation(const DiscModel& m, const Field& F, const ArcSystem& s);

struct RoundtripResult {
  bool ok = false;
  std::string detail;
};
// endo_presentation of the dual-arc system is isomorphic to p.
RoundtripResult roundtrip_check(const GentlePresentation& p, const Field& F);

}  // namespace gentle
