#include "gentle/surface.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gentle {

Path DiscModel::chord_path(int disc, int a, int b) const {
  if (a >= b) throw std::logic_error("chord_path wants a < b");
  Path u;
  const auto& th = discs[disc].thread;
  for (int i = a; i < b; ++i) u.arrows.push_back(th.arrows[i]);
  return u;
}

DiscModel build_disc_model(const GentlePresentation& p) {
  DiscModel m;
  m.pres = &p;
  Threads t = threads(p);
  for (auto& th : t.permitted) {
    Disc d;
    d.thread = th.body;
    if (th.body.trivial()) {
      d.side_vertex = {th.body.base_vertex};
    } else {
      for (int a : th.body.arrows) d.side_vertex.push_back(p.quiver.arrows[a].src);
      d.side_vertex.push_back(p.quiver.arrows[th.body.arrows.back()].tgt);
    }
    m.discs.push_back(d);
  }

  // each vertex must occur on exactly two sides; the pairing is forced
  std::vector<std::vector<Occ>> occs(p.quiver.num_vertices());
  for (int d = 0; d < (int)m.discs.size(); ++d)
    for (int s = 0; s < m.discs[d].sides(); ++s)
      occs[m.discs[d].side_vertex[s]].push_back({d, s});
  for (int v = 0; v < p.quiver.num_vertices(); ++v)
    if (occs[v].size() != 2)
      throw std::runtime_error("disc model inconsistency at vertex " + p.quiver.vertices[v] +
                               ": " + std::to_string(occs[v].size()) + " occurrences");

  m.partner.resize(m.discs.size());
  for (int d = 0; d < (int)m.discs.size(); ++d) m.partner[d].resize(m.discs[d].sides());
  for (int v = 0; v < p.quiver.num_vertices(); ++v) {
    auto [a, b] = std::make_pair(occs[v][0], occs[v][1]);
    m.partner[a.disc][a.side] = b;
    m.partner[b.disc][b.side] = a;
  }
  return m;
}

std::vector<BoundaryWalk> trace_boundary(const DiscModel& m) {
  std::vector<BoundaryWalk> walks;
  std::set<SegRef> seen;
  for (int d = 0; d < (int)m.discs.size(); ++d) {
    for (int s = 0; s < m.discs[d].sides(); ++s) {
      SegRef start{d, s};
      if (seen.count(start)) continue;
      BoundaryWalk w;
      SegRef cur = start;
      do {
        if (seen.count(cur)) throw std::runtime_error("boundary walk does not close");
        seen.insert(cur);
        w.segments.push_back(cur);
        if (m.marked_segment(cur.disc, cur.seg)) {
          ++w.marked_count;
          ++w.winding;
        } else {
          --w.winding;
        }
        // the junction at the end of segment (d,i) is side i+1; cross to its partner
        int k = m.discs[cur.disc].sides();
        Occ nxt = m.partner_of({cur.disc, (cur.seg + 1) % k});
        cur = {nxt.disc, nxt.side};
      } while (!(cur == start));
      walks.push_back(std::move(w));
    }
  }
  // deterministic order
  std::sort(walks.begin(), walks.end(),
            [](const BoundaryWalk& a, const BoundaryWalk& b) { return a.segments < b.segments; });
  return walks;
}

int boundary_winding(const DiscModel&, const BoundaryWalk& walk, bool reversed) {
  return reversed ? -walk.winding : walk.winding;
}

RibbonSurface ribbon_surface(const GentlePresentation& p) {
  DiscModel m = build_disc_model(p);
  auto walks = trace_boundary(m);
  RibbonSurface s;
  s.euler_characteristic = p.quiver.num_vertices() - p.quiver.num_arrows();
  int b = (int)walks.size();
  // connected components of the glued surface (discs joined along laminates)
  std::vector<int> root(m.discs.size());
  for (size_t i = 0; i < root.size(); ++i) root[i] = (int)i;
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (int d = 0; d < (int)m.discs.size(); ++d)
    for (int sd = 0; sd < m.discs[d].sides(); ++sd)
      root[find(d)] = find(m.partner[d][sd].disc);
  int comps = 0;
  for (size_t i = 0; i < root.size(); ++i)
    if (find((int)i) == (int)i) ++comps;
  s.components = comps;
  int twice_genus = 2 * comps - s.euler_characteristic - b;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::runtime_error("genus ill-defined: chi=" + std::to_string(s.euler_characteristic) +
                             " b=" + std::to_string(b));
  s.genus = twice_genus / 2;
  for (auto& w : walks) {
    BoundaryComponent c;
    c.marked_count = w.marked_count;
    c.winding = w.winding;
    s.boundary.push_back(c);
    if (c.is_unmarked()) ++s.punctures;
  }
  std::sort(s.boundary.begin(), s.boundary.end());
  return s;
}

DerivedInvariant derived_invariant(const GentlePresentation& p) {
  RibbonSurface s = ribbon_surface(p);
  DerivedInvariant inv;
  inv.genus = s.genus;
  for (auto& c : s.boundary) inv.pairs.push_back({c.marked_count, c.winding});
  std::sort(inv.pairs.begin(), inv.pairs.end());
  return inv;
}

EquivalenceResult decide_derived_equivalence(const GentlePresentation& p,
                                             const GentlePresentation& q) {
  DerivedInvariant a = derived_invariant(p), b = derived_invariant(q);
  if (!(a == b)) {
    std::ostringstream w;
    auto fmt = [](const DerivedInvariant& i) {
      std::ostringstream o;
      o << "g=" << i.genus << " {";
      for (auto& [m, om] : i.pairs) o << "(" << m << "," << om << ")";
      o << "}";
      return o.str();
    };
    w << "invariant mismatch: " << fmt(a) << " vs " << fmt(b);
    return {EquivalenceVerdict::NotEquivalent, w.str()};
  }
  if (a.genus == 0) return {EquivalenceVerdict::Equivalent, ""};
  if (isomorphic_presentations(p, q)) return {EquivalenceVerdict::Equivalent, ""};
  return {EquivalenceVerdict::InvariantsMatchUndecided, ""};
}

json surface_report_json(const GentlePresentation& p) {
  RibbonSurface s = ribbon_surface(p);
  json j;
  j["chi"] = s.euler_characteristic;
  j["genus"] = s.genus;
  j["components"] = json::array();
  j["aag_pairs"] = json::array();
  for (auto& c : s.boundary) {
    j["components"].push_back({{"marked", c.marked_count}, {"winding", c.winding}});
    auto [m, x] = c.aag_pair();
    j["aag_pairs"].push_back({m, x});
  }
  j["punctures"] = s.punctures;
  return j;
}

std::string surface_dot(const GentlePresentation& p) {
  DiscModel m = build_disc_model(p);
  std::ostringstream out;
  out << "graph disc_model {\n";
  for (int d = 0; d < (int)m.discs.size(); ++d)
    out << "  d" << d << " [label=\"" << path_to_string(p, m.discs[d].thread) << "\"];\n";
  for (int d = 0; d < (int)m.discs.size(); ++d)
    for (int s = 0; s < m.discs[d].sides(); ++s) {
      Occ o = m.partner_of({d, s});
      if (std::make_pair(d, s) <= std::make_pair(o.disc, o.side))
        out << "  d" << d << " -- d" << o.disc << " [label=\"L_"
            << p.quiver.vertices[m.vertex_of({d, s})] << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace gentle
