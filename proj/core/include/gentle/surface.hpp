#pragma once
// Combinatorial disc model of the marked surface of a gentle algebra,
// boundary tracing, winding numbers and the derived invariant.

#include <map>
#include <string>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

// One disc per permitted thread. Polygon sides are laminate occurrences,
// listed clockwise; the marked point sits on the boundary segment between
// the last and the first side.
struct Disc {
  Path thread;                  // trivial path => trivial thread disc
  std::vector<int> side_vertex; // laminate per side, size k (k = len+1, or 1)
  int sides() const { return (int)side_vertex.size(); }
};

struct Occ {                    // laminate side occurrence
  int disc = -1;
  int side = -1;
  bool operator==(const Occ&) const = default;
  auto operator<=>(const Occ&) const = default;
};

struct DiscModel {
  const GentlePresentation* pres = nullptr;
  std::vector<Disc> discs;
  // partner[d][s] = the other occurrence of the same laminate
  std::vector<std::vector<Occ>> partner;

  Occ partner_of(Occ o) const { return partner[o.disc][o.side]; }
  int vertex_of(Occ o) const { return discs[o.disc].side_vertex[o.side]; }
  bool marked_segment(int disc, int seg) const { return seg == discs[disc].sides() - 1; }
  // arrows of the disc's thread between side positions a < b (exclusive a, inclusive b)
  Path chord_path(int disc, int a, int b) const;
};

DiscModel build_disc_model(const GentlePresentation& p);

// A boundary segment of disc d following side s (from the head of side s to
// the tail of side s+1, polygon clockwise). Marked iff s == sides-1.
struct SegRef {
  int disc = -1;
  int seg = -1;
  bool operator==(const SegRef&) const = default;
  auto operator<=>(const SegRef&) const = default;
};

struct BoundaryWalk {
  std::vector<SegRef> segments;  // cyclic, in walk orientation
  int marked_count = 0;
  int winding = 0;               // +1 per marked segment, -1 per unmarked one
};

std::vector<BoundaryWalk> trace_boundary(const DiscModel& m);

// Winding of a walk; reversed=true negates (orientation reversal).
int boundary_winding(const DiscModel& m, const BoundaryWalk& walk, bool reversed = false);

struct BoundaryComponent {
  int marked_count = 0;
  int winding = 0;
  bool is_unmarked() const { return marked_count == 0; }
  std::pair<int, int> aag_pair() const { return {marked_count, marked_count - winding}; }
  auto operator<=>(const BoundaryComponent&) const = default;
};

struct RibbonSurface {
  int euler_characteristic = 0;
  int genus = 0;                            // total over connected components
  int components = 0;                       // connected surface components
  std::vector<BoundaryComponent> boundary;  // sorted (multiset order)
  int punctures = 0;
};

struct DerivedInvariant {
  int genus = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted multiset of (marked, winding)
  bool operator==(const DerivedInvariant&) const = default;
};

RibbonSurface ribbon_surface(const GentlePresentation& p);
DerivedInvariant derived_invariant(const GentlePresentation& p);

enum class EquivalenceVerdict { Equivalent, NotEquivalent, InvariantsMatchUndecided };

struct EquivalenceResult {
  EquivalenceVerdict verdict;
  std::string witness;  // set for NotEquivalent: the mismatching data
};

EquivalenceResult decide_derived_equivalence(const GentlePresentation& p,
                                             const GentlePresentation& q);

json surface_report_json(const GentlePresentation& p);
std::string surface_dot(const GentlePresentation& p);  // disc-adjacency ribbon graph

}  // namespace gentle
