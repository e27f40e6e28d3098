#pragma once
// Quivers with quadratic zero relations, gentle axioms, path arithmetic,
// permitted/forbidden threads.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gentle {

using json = nlohmann::json;

struct Arrow {
  std::string id;
  int src = -1;  // vertex index
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;           // declaration order
  std::vector<Arrow> arrows;                   // declaration order
  std::map<std::string, int> vertex_index;
  std::map<std::string, int> arrow_index;

  int num_vertices() const { return (int)vertices.size(); }
  int num_arrows() const { return (int)arrows.size(); }
};

// Relations are ordered arrow pairs (a,b) with tgt(a)==src(b); the
// left-to-right composite a.b is zero.
struct GentlePresentation {
  Quiver quiver;
  std::set<std::pair<int, int>> relations;

  bool in_ideal(int a, int b) const { return relations.count({a, b}) > 0; }
};

// Path: arrow sequence in traversal order (consecutive arrows compose
// left-to-right); empty path is the trivial path at base_vertex.
struct Path {
  int base_vertex = -1;  // meaningful iff arrows.empty()
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  int length() const { return (int)arrows.size(); }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

int path_source(const GentlePresentation& p, const Path& w);
int path_target(const GentlePresentation& p, const Path& w);
bool path_admissible(const GentlePresentation& p, const Path& w);
// Concatenation reduced by relations: nullopt when non-composable,
// Path when admissible, zero flag when the composite dies in I.
struct PathProduct {
  bool zero = false;
  Path path;  // valid iff !zero
};
std::optional<PathProduct> path_mul(const GentlePresentation& p, const Path& a, const Path& b);
std::string path_to_string(const GentlePresentation& p, const Path& w);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg), line(line_), column(col_) {}
};

GentlePresentation parse_presentation(const std::string& text);
std::string emit_presentation(const GentlePresentation& p);   // canonical .gp
json presentation_to_json(const GentlePresentation& p);       // canonical JSON
GentlePresentation presentation_from_json(const json& j);

struct AxiomViolation {
  std::string code;      // e.g. "rel-out-not-unique", "admissibility"
  std::string message;
  std::vector<std::string> witnesses;  // arrow ids involved
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_gentle(const GentlePresentation& p);

// All admissible paths, trivial ones included; finite for validated input.
std::vector<Path> path_basis(const GentlePresentation& p);

enum class ThreadKind { Permitted, Forbidden };

struct Thread {
  ThreadKind kind;
  Path body;  // trivial body => trivial thread at body.base_vertex
};

struct Threads {
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;
  std::vector<std::vector<int>> full_relation_cycles;  // arrow cycles, canonical rotation
};

Threads threads(const GentlePresentation& p);

// Relabel vertices/arrows by permutation of indices (property tests).
GentlePresentation relabel(const GentlePresentation& p,
                           const std::vector<int>& vertex_perm,
                           const std::vector<int>& arrow_perm,
                           const std::vector<std::string>& new_vertex_names,
                           const std::vector<std::string>& new_arrow_names);

// Presentation isomorphism under relabeling; feasible at small sizes.
bool isomorphic_presentations(const GentlePresentation& a, const GentlePresentation& b);

}  // namespace gentle
