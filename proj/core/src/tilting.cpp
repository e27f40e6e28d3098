#include "gentle/tilting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gentle {

ArcSystem dual_arc_system(const DiscModel& m) {
  ArcSystem s;
  for (int v = 0; v < m.pres->quiver.num_vertices(); ++v) s.arcs.push_back(dual_arc(m, v));
  return s;
}

ArcSystem parse_arc_system(const DiscModel& m, const std::string& text) {
  ArcSystem s;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    CurveWord w = word_from_string(m, line);
    s.arcs.push_back({w, grade_word(m, w, 0)});
  }
  return s;
}

namespace {

// Ends of an arc: the entering occurrence seen from each endpoint.
struct End {
  int arc = -1;
  bool at_start = true;
  Occ enter;  // first crossing when oriented away from this end
};

std::vector<End> arc_ends(const DiscModel& m, const ArcSystem& s) {
  std::vector<End> ends;
  for (int i = 0; i < (int)s.arcs.size(); ++i) {
    const CurveWord& w = s.arcs[i].word;
    ends.push_back({i, true, w.cross.front()});
    ends.push_back({i, false, m.partner_of(w.cross.back())});
  }
  return ends;
}

int contacts(const DiscModel& m, const ArcSystem& s, int i, int j) {
  const CurveWord &a = s.arcs[i].word, &b = s.arcs[j].word;
  std::vector<int> ea{a.start_disc, a.end_disc}, eb{b.start_disc, b.end_disc};
  int c = 0;
  if (i == j) return ea[0] == ea[1] ? 1 : 0;
  for (int x : ea)
    for (int y : eb)
      if (x == y) ++c;
  return c;
}

}  // namespace

TiltingReport check_tilting(const DiscModel& m, const Field& F, const ArcSystem& s) {
  const GentlePresentation& p = *m.pres;
  TiltingReport r;
  int n = (int)s.arcs.size();
  std::vector<ProjComplex> X;
  for (auto& a : s.arcs) {
    if (a.word.band) {
      r.violations.push_back("system contains a band");
      return r;
    }
    auto rep = validate_word(m, a.word);
    if (!rep.ok()) {
      r.violations.push_back("invalid arc: " + rep.violations.front());
      return r;
    }
    X.push_back(string_complex(m, F, a));
  }
  std::set<std::vector<int>> keys;
  for (auto& a : s.arcs)
    if (!keys.insert(canonical_key(m, a.word)).second)
      r.violations.push_back("condition 1: homotopic arcs in the system");

  // (1) Hom totals equal boundary contact counts
  for (int i = 0; i < n; ++i) {
    int self = total_dim(hom_profile(F, p, X[i], X[i]));
    if (self != 1 + contacts(m, s, i, i))
      r.violations.push_back("condition 1: arc " + std::to_string(i) +
                             " has interior self-intersections (self Hom " +
                             std::to_string(self) + ")");
    for (int j = i + 1; j < n; ++j) {
      int mut = total_dim(hom_profile(F, p, X[i], X[j])) +
                total_dim(hom_profile(F, p, X[j], X[i]));
      if (mut != contacts(m, s, i, j))
        r.violations.push_back("condition 1: arcs " + std::to_string(i) + "," +
                               std::to_string(j) + " meet away from marked points (Hom " +
                               std::to_string(mut) + ", contacts " +
                               std::to_string(contacts(m, s, i, j)) + ")");
    }
  }

  // (2) shift assignment over the contact graph
  struct Edge {
    int to, d;
  };
  std::vector<std::vector<Edge>> adj(n);
  bool cond2 = true;
  for (int i = 0; i < n && cond2; ++i)
    for (int j = 0; j < n && cond2; ++j)
      for (auto& f : alp_basis(F, p, X[i], X[j])) {
        if (i == j) {
          if (f.degree != 0) {
            r.violations.push_back("condition 2: nonzero-degree self morphism on arc " +
                                   std::to_string(i));
            cond2 = false;
            break;
          }
          continue;
        }
        adj[i].push_back({j, f.degree});
        adj[j].push_back({i, -f.degree});
      }
  if (cond2) {
    std::vector<int> pot(n);
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      pot[root] = 0;
      std::vector<int> stack{root};
      while (!stack.empty() && cond2) {
        int v = stack.back();
        stack.pop_back();
        for (auto& e : adj[v]) {
          if (!seen[e.to]) {
            seen[e.to] = true;
            pot[e.to] = pot[v] + e.d;
            stack.push_back(e.to);
          } else if (pot[e.to] != pot[v] + e.d) {
            r.violations.push_back("condition 2: contact cycle with nonzero winding through arcs " +
                                   std::to_string(v) + "," + std::to_string(e.to));
            cond2 = false;
            break;
          }
        }
      }
    }
  }

  // (3) concatenation closure reaches every dual arc
  std::map<std::vector<int>, CurveWord> closure;
  auto insert_word = [&](const CurveWord& w) {
    auto k = canonical_key(m, w);
    if (closure.count(k)) return false;
    closure.emplace(k, w);
    return true;
  };
  size_t max_len = 4;
  for (auto& a : s.arcs) max_len = std::max(max_len, 2 * a.word.cross.size() + 4);
  max_len = std::max(max_len, 2 * m.discs.size() + 4);
  for (auto& a : s.arcs) insert_word(a.word);
  bool grew = true;
  for (int round = 0; round < 32 && grew && closure.size() < 4096; ++round) {
    grew = false;
    std::vector<CurveWord> snapshot;
    for (auto& [k, w] : closure) snapshot.push_back(w);
    for (auto& w1 : snapshot)
      for (auto& w2 : snapshot)
        for (int o1 = 0; o1 < 2; ++o1)
          for (int o2 = 0; o2 < 2; ++o2) {
            CurveWord a = o1 ? reverse_word(m, w1) : w1;
            CurveWord b = o2 ? reverse_word(m, w2) : w2;
            if (a.end_disc != b.start_disc) continue;
            for (auto& sp : resolve_crossing(m, a, b)) {
              if (sp.cross.size() > max_len) continue;
              if (insert_word(sp)) grew = true;
            }
          }
  }
  for (int v = 0; v < p.quiver.num_vertices(); ++v)
    if (!closure.count(canonical_key(m, dual_arc(m, v).word)))
      r.violations.push_back("condition 3: laminate " + p.quiver.vertices[v] +
                             " not geometrically generated");
  return r;
}

GentlePresentation endo_presentation(const DiscModel& m, const Field& F, const ArcSystem& s) {
  const GentlePresentation& p = *m.pres;
  TiltingReport rep = check_tilting(m, F, s);
  if (!rep.ok())
    throw std::runtime_error("arc system is not tilting: " + rep.violations.front());

  int n = (int)s.arcs.size();
  std::vector<ProjComplex> X;
  for (auto& a : s.arcs) X.push_back(string_complex(m, F, a));

  // fan of arc ends at each marked point, swept by entering side
  std::vector<End> ends = arc_ends(m, s);
  std::map<int, std::vector<End>> fan;  // disc -> ordered ends
  for (auto& e : ends) fan[e.enter.disc].push_back(e);
  for (auto& [d, v] : fan)
    std::sort(v.begin(), v.end(), [&](const End& a, const End& b) {
      if (a.enter.side != b.enter.side) return a.enter.side < b.enter.side;
      return std::make_tuple(a.arc, a.at_start) < std::make_tuple(b.arc, b.at_start);
    });

  GentlePresentation out;
  for (int i = 0; i < n; ++i) {
    out.quiver.vertices.push_back("t" + std::to_string(i));
    out.quiver.vertex_index["t" + std::to_string(i)] = i;
  }
  std::vector<ChainMap> arrow_map;
  for (auto& [d, v] : fan)
    for (size_t k = 0; k + 1 < v.size(); ++k) {
      const End &e = v[k], &f = v[k + 1];
      // arrow from the end nearer the marked point; morphism seeded by the
      // chord between the entering sides
      int i = e.arc, j = f.arc;
      int ti = e.at_start ? 0 : (int)s.arcs[i].word.cross.size() - 1;
      int tj = f.at_start ? 0 : (int)s.arcs[j].word.cross.size() - 1;
      Path u;
      if (e.enter.side == f.enter.side)
        u = Path{m.vertex_of(e.enter), {}};
      else
        u = m.chord_path(d, e.enter.side, f.enter.side);
      Propagation pr = propagate_component(F, p, X[i], X[j], ti, tj, {F.one(), u});
      if (!pr.map || pr.null_homotopic)
        throw std::runtime_error("contact morphism did not propagate");
      std::string id = "g" + std::to_string(out.quiver.arrows.size());
      out.quiver.arrow_index[id] = (int)out.quiver.arrows.size();
      out.quiver.arrows.push_back({id, i, j});
      arrow_map.push_back(*pr.map);
    }

  for (int a = 0; a < (int)out.quiver.arrows.size(); ++a)
    for (int b = 0; b < (int)out.quiver.arrows.size(); ++b) {
      if (out.quiver.arrows[a].tgt != out.quiver.arrows[b].src) continue;
      int i = out.quiver.arrows[a].src, jj = out.quiver.arrows[a].tgt,
          k = out.quiver.arrows[b].tgt;
      ChainMap comp = compose(F, p, arrow_map[a], arrow_map[b]);
      (void)jj;
      if (is_null_homotopic(F, p, X[i], X[k], comp)) out.relations.insert({a, b});
    }
  return out;
}

RoundtripResult roundtrip_check(const GentlePresentation& p, const Field& F) {
  RoundtripResult r;
  DiscModel m = build_disc_model(p);
  ArcSystem s = dual_arc_system(m);
  GentlePresentation e = endo_presentation(m, F, s);
  auto v = validate_gentle(e);
  if (!v.ok()) {
    r.detail = "endomorphism presentation not gentle: " + v.violations.front().message;
    return r;
  }
  if (!isomorphic_presentations(p, e)) {
    r.detail = "endomorphism presentation not isomorphic to the input";
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace gentle
