#pragma once
// Homotopy-category linear algebra: Hom profiles, chain-map bases, cones,
// minimization, crossing resolution, AR and spherical-twist checks.

#include "gentle/objects.hpp"

namespace gentle {

// Degree-d map X -> Y; comp[{i,j}] is the component from X term i to Y
// term j (deg_Y(j) = deg_X(i) + d), acting by right path multiplication.
struct ChainMap {
  int degree = 0;
  std::map<std::pair<int, int>, PathLin> comp;
};

using HomProfile = std::map<int, int>;  // degree -> dim Hom(X, Y[degree])
int total_dim(const HomProfile& h);

HomProfile hom_profile(const Field& F, const GentlePresentation& p, const ProjComplex& X,
                       const ProjComplex& Y);

// Basis of Hom(X, Y[d]) modulo homotopy across all degrees, one chain map
// per class; deterministic (seed-lexicographic propagation then greedy
// independence against the boundary space).
std::vector<ChainMap> alp_basis(const Field& F, const GentlePresentation& p,
                                const ProjComplex& X, const ProjComplex& Y);

struct Propagation {
  bool null_homotopic = false;
  std::optional<ChainMap> map;  // empty when the seed admits no closure
};
// Unique deterministic closure of a single scalar*path seed component at
// (term i of X, term j of Y) into a chain map.
Propagation propagate_component(const Field& F, const GentlePresentation& p,
                                const ProjComplex& X, const ProjComplex& Y, int i, int j,
                                const PathTerm& seed);

// f: X -> Y then g: Y -> Z; degrees add.
ChainMap compose(const Field& F, const GentlePresentation& p, const ChainMap& f,
                 const ChainMap& g);
bool is_null_homotopic(const Field& F, const GentlePresentation& p, const ProjComplex& X,
                       const ProjComplex& Y, const ChainMap& f);
bool is_chain_map(const Field& F, const GentlePresentation& p, const ProjComplex& X,
                  const ProjComplex& Y, const ChainMap& f);

ProjComplex mapping_cone(const Field& F, const GentlePresentation& p, const ProjComplex& X,
                         const ProjComplex& Y, const ChainMap& f);  // degree 0 f
// Gaussian cancellation of invertible entries; result has radical entries.
ProjComplex minimize(const Field& F, const GentlePresentation& p, const ProjComplex& c);
bool is_iso(const Field& F, const GentlePresentation& p, const ProjComplex& X,
            const ProjComplex& Y, const ChainMap& f);

ProjComplex stalk_complex(int vertex);  // P_vertex in degree 0

// Iso-invariant signature: self profile plus profiles against each stalk
// projective (both directions) and any extra probes.
std::string fingerprint(const Field& F, const GentlePresentation& p, const ProjComplex& X,
                        const std::vector<ProjComplex>& extra_probes = {});
json fingerprint_json(const Field& F, const GentlePresentation& p, const ProjComplex& X);
// Fingerprint comparison with mutual probes (sound for iso, separating at
// desk scale).
bool same_fingerprint(const Field& F, const GentlePresentation& p, const ProjComplex& A,
                      const ProjComplex& B);

// Smoothing of a declared boundary intersection: arcs sharing the marked
// point of end_disc(w1) == start_disc(w2) splice into one reduced word.
std::vector<CurveWord> resolve_crossing(const DiscModel& m, const CurveWord& w1,
                                        const CurveWord& w2);

// AR triangle check for a finite arc word: some degree-1 class
// h: X -> X_tau[1] kills every non-invertible basis map U -> X over the
// probe set (dual arcs and their twists).
bool ar_check(const DiscModel& m, const Field& F, const GradedWord& delta);

bool is_spherical(const DiscModel& m, const Field& F, const ProjComplex& X);
ProjComplex spherical_twist(const DiscModel& m, const Field& F, const ProjComplex& X,
                            const ProjComplex& Y);

// Dual arc word of laminate v (single crossing, representing P_v).
GradedWord dual_arc(const DiscModel& m, int vertex);

}  // namespace gentle
