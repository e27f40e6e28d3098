#pragma once
// Complexes of indecomposable projectives with path-linear differential
// entries; string and band complexes of graded curves, and the inverse
// identification of a complex as a curve.

#include <map>
#include <optional>

#include "gentle/curves.hpp"
#include "gentle/field.hpp"

namespace gentle {

struct Term {
  int vertex = -1;   // projective at this vertex
  int degree = 0;    // homological degree
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

// coef * path, path in e_x A e_y acting by right multiplication
struct PathTerm {
  FieldElem coef;
  Path path;
};
using PathLin = std::vector<PathTerm>;

PathLin lin_normalize(const Field& F, PathLin v);  // sort, merge, drop zeros
PathLin lin_add(const Field& F, const PathLin& a, const PathLin& b);
PathLin lin_scale(const Field& F, FieldElem c, const PathLin& a);
// left-to-right composite: (a then b), reduced by the relations
PathLin lin_mul(const Field& F, const GentlePresentation& p, const PathLin& a,
                const PathLin& b);

// Differential raises degree by one; diff[{i,j}] is the component from
// term i into term j.
struct ProjComplex {
  std::vector<Term> terms;
  std::map<std::pair<int, int>, PathLin> diff;
};

ProjComplex string_complex(const DiscModel& m, const Field& F, const GradedWord& w);
ProjComplex band_complex(const DiscModel& m, const Field& F, const CurveWord& w,
                         const Grading& g, FieldElem lambda);
// from a word with an unspecified grading seed (seed 0 for arcs)
ProjComplex word_complex(const DiscModel& m, const Field& F, const CurveWord& w,
                         FieldElem lambda);

// [n]: degrees drop by n, differential picks up (-1)^n
ProjComplex shift(const Field& F, const ProjComplex& c, int n);
ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b);
bool check_dsquared(const Field& F, const GentlePresentation& p, const ProjComplex& c);

// stable sort by (degree, vertex); permutes differential accordingly
ProjComplex canonicalize(const ProjComplex& c);

struct IdentifiedCurve {
  GradedWord curve;
  FieldElem lambda;  // bands; scaling class of the cycle
};
// Reconstructs the graded curve of a string or band complex; nullopt when
// the complex is not of that shape.
std::optional<IdentifiedCurve> identify_string(const DiscModel& m, const Field& F,
                                               const ProjComplex& c);

std::string complex_to_string(const Field& F, const GentlePresentation& p,
                              const ProjComplex& c);
json complex_to_json(const Field& F, const GentlePresentation& p, const ProjComplex& c);

}  // namespace gentle
