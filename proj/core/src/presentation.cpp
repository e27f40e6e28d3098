#include "gentle/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace gentle {

int path_source(const GentlePresentation& p, const Path& w) {
  if (w.trivial()) return w.base_vertex;
  return p.quiver.arrows[w.arrows.front()].src;
}

int path_target(const GentlePresentation& p, const Path& w) {
  if (w.trivial()) return w.base_vertex;
  return p.quiver.arrows[w.arrows.back()].tgt;
}

bool path_admissible(const GentlePresentation& p, const Path& w) {
  for (size_t i = 0; i + 1 < w.arrows.size(); ++i) {
    if (p.quiver.arrows[w.arrows[i]].tgt != p.quiver.arrows[w.arrows[i + 1]].src) return false;
    if (p.in_ideal(w.arrows[i], w.arrows[i + 1])) return false;
  }
  return true;
}

std::optional<PathProduct> path_mul(const GentlePresentation& p, const Path& a, const Path& b) {
  if (path_target(p, a) != path_source(p, b)) return std::nullopt;
  PathProduct r;
  r.path = a;
  if (r.path.trivial()) r.path = b;
  else if (!b.trivial()) {
    r.path.arrows.insert(r.path.arrows.end(), b.arrows.begin(), b.arrows.end());
  }
  if (!path_admissible(p, r.path)) {
    r.zero = true;
    r.path = Path{};
  }
  return r;
}

std::string path_to_string(const GentlePresentation& p, const Path& w) {
  if (w.trivial()) return "e_" + p.quiver.vertices[w.base_vertex];
  std::string s;
  for (size_t i = 0; i < w.arrows.size(); ++i) {
    if (i) s += ".";
    s += p.quiver.arrows[w.arrows[i]].id;
  }
  return s;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(isalnum((unsigned char)c) || c == '_' || c == '-')) return false;
  return true;
}

}  // namespace

GentlePresentation parse_presentation(const std::string& text) {
  GentlePresentation p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_vertices = false;
  struct PendingRel { std::string a, b; int line; };
  std::vector<PendingRel> rels;

  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "vertices:") {
      if (saw_vertices) throw ParseError("duplicate vertices line", lineno, 1);
      saw_vertices = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_id(toks[i])) throw ParseError("bad vertex id '" + toks[i] + "'", lineno, 1);
        if (p.quiver.vertex_index.count(toks[i]))
          throw ParseError("duplicate vertex id '" + toks[i] + "'", lineno, 1);
        p.quiver.vertex_index[toks[i]] = (int)p.quiver.vertices.size();
        p.quiver.vertices.push_back(toks[i]);
      }
    } else if (toks[0] == "arrow") {
      // arrow <id>: <src> -> <tgt>
      if (toks.size() != 5 || toks[3] != "->")
        throw ParseError("expected 'arrow <id>: <src> -> <tgt>'", lineno, 1);
      std::string id = toks[1];
      if (id.empty() || id.back() != ':')
        throw ParseError("expected ':' after arrow id", lineno, 1);
      id.pop_back();
      if (!valid_id(id)) throw ParseError("bad arrow id '" + id + "'", lineno, 1);
      if (p.quiver.arrow_index.count(id))
        throw ParseError("duplicate arrow id '" + id + "'", lineno, 1);
      auto vs = p.quiver.vertex_index.find(toks[2]);
      auto vt = p.quiver.vertex_index.find(toks[4]);
      if (vs == p.quiver.vertex_index.end())
        throw ParseError("undeclared vertex '" + toks[2] + "'", lineno, 1);
      if (vt == p.quiver.vertex_index.end())
        throw ParseError("undeclared vertex '" + toks[4] + "'", lineno, 1);
      p.quiver.arrow_index[id] = (int)p.quiver.arrows.size();
      p.quiver.arrows.push_back({id, vs->second, vt->second});
    } else if (toks[0] == "rel") {
      if (toks.size() != 3) throw ParseError("expected 'rel <arrow> <arrow>'", lineno, 1);
      rels.push_back({toks[1], toks[2], lineno});
    } else {
      throw ParseError("unrecognized directive '" + toks[0] + "'", lineno, 1);
    }
  }

  for (auto& r : rels) {
    auto ia = p.quiver.arrow_index.find(r.a);
    auto ib = p.quiver.arrow_index.find(r.b);
    if (ia == p.quiver.arrow_index.end())
      throw ParseError("undeclared arrow '" + r.a + "' in relation", r.line, 1);
    if (ib == p.quiver.arrow_index.end())
      throw ParseError("undeclared arrow '" + r.b + "' in relation", r.line, 1);
    if (p.quiver.arrows[ia->second].tgt != p.quiver.arrows[ib->second].src)
      throw ParseError("relation pair '" + r.a + " " + r.b + "' is not composable", r.line, 1);
    p.relations.insert({ia->second, ib->second});
  }
  return p;
}

std::string emit_presentation(const GentlePresentation& p) {
  std::ostringstream out;
  std::vector<std::string> vs = p.quiver.vertices;
  std::sort(vs.begin(), vs.end());
  out << "vertices:";
  for (auto& v : vs) out << " " << v;
  out << "\n";
  std::vector<int> order(p.quiver.arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.quiver.arrows[a].id < p.quiver.arrows[b].id;
  });
  for (int i : order) {
    const auto& a = p.quiver.arrows[i];
    out << "arrow " << a.id << ": " << p.quiver.vertices[a.src] << " -> "
        << p.quiver.vertices[a.tgt] << "\n";
  }
  std::vector<std::pair<std::string, std::string>> rels;
  for (auto& [a, b] : p.relations)
    rels.push_back({p.quiver.arrows[a].id, p.quiver.arrows[b].id});
  std::sort(rels.begin(), rels.end());
  for (auto& [a, b] : rels) out << "rel " << a << " " << b << "\n";
  return out.str();
}

json presentation_to_json(const GentlePresentation& p) {
  json j;
  std::vector<std::string> vs = p.quiver.vertices;
  std::sort(vs.begin(), vs.end());
  j["vertices"] = vs;
  std::vector<int> order(p.quiver.arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.quiver.arrows[a].id < p.quiver.arrows[b].id;
  });
  j["arrows"] = json::array();
  for (int i : order) {
    const auto& a = p.quiver.arrows[i];
    j["arrows"].push_back({{"id", a.id},
                           {"src", p.quiver.vertices[a.src]},
                           {"tgt", p.quiver.vertices[a.tgt]}});
  }
  std::vector<std::pair<std::string, std::string>> rels;
  for (auto& [a, b] : p.relations)
    rels.push_back({p.quiver.arrows[a].id, p.quiver.arrows[b].id});
  std::sort(rels.begin(), rels.end());
  j["relations"] = json::array();
  for (auto& [a, b] : rels) j["relations"].push_back({a, b});
  return j;
}

GentlePresentation presentation_from_json(const json& j) {
  std::ostringstream gp;
  gp << "vertices:";
  for (auto& v : j.at("vertices")) gp << " " << v.get<std::string>();
  gp << "\n";
  for (auto& a : j.at("arrows"))
    gp << "arrow " << a.at("id").get<std::string>() << ": "
       << a.at("src").get<std::string>() << " -> " << a.at("tgt").get<std::string>() << "\n";
  for (auto& r : j.at("relations"))
    gp << "rel " << r.at(0).get<std::string>() << " " << r.at(1).get<std::string>() << "\n";
  return parse_presentation(gp.str());
}

ValidationReport validate_gentle(const GentlePresentation& p) {
  ValidationReport rep;
  const auto& Q = p.quiver;
  int n = Q.num_arrows();

  auto aid = [&](int i) { return Q.arrows[i].id; };

  // vertex degree bounds
  std::vector<int> indeg(Q.num_vertices(), 0), outdeg(Q.num_vertices(), 0);
  for (auto& a : Q.arrows) {
    outdeg[a.src]++;
    indeg[a.tgt]++;
  }
  for (int v = 0; v < Q.num_vertices(); ++v) {
    if (indeg[v] > 2)
      rep.violations.push_back({"in-degree", "more than two arrows end at vertex " + Q.vertices[v], {}});
    if (outdeg[v] > 2)
      rep.violations.push_back({"out-degree", "more than two arrows start at vertex " + Q.vertices[v], {}});
  }

  // the four local axioms
  for (int a = 0; a < n; ++a) {
    std::vector<std::string> rel_succ, adm_succ;
    for (int b = 0; b < n; ++b) {
      if (Q.arrows[a].tgt != Q.arrows[b].src) continue;
      (p.in_ideal(a, b) ? rel_succ : adm_succ).push_back(aid(b));
    }
    if (rel_succ.size() > 1) {
      auto w = rel_succ;
      w.insert(w.begin(), aid(a));
      rep.violations.push_back({"rel-successor", "arrow " + aid(a) + " has several relation successors", w});
    }
    if (adm_succ.size() > 1) {
      auto w = adm_succ;
      w.insert(w.begin(), aid(a));
      rep.violations.push_back({"adm-successor", "arrow " + aid(a) + " has several non-relation successors", w});
    }
    std::vector<std::string> rel_pred, adm_pred;
    for (int c = 0; c < n; ++c) {
      if (Q.arrows[c].tgt != Q.arrows[a].src) continue;
      (p.in_ideal(c, a) ? rel_pred : adm_pred).push_back(aid(c));
    }
    if (rel_pred.size() > 1) {
      auto w = rel_pred;
      w.insert(w.begin(), aid(a));
      rep.violations.push_back({"rel-predecessor", "arrow " + aid(a) + " has several relation predecessors", w});
    }
    if (adm_pred.size() > 1) {
      auto w = adm_pred;
      w.insert(w.begin(), aid(a));
      rep.violations.push_back({"adm-predecessor", "arrow " + aid(a) + " has several non-relation predecessors", w});
    }
  }

  // admissibility: cycle detection on the composable-without-relation graph
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> stack;
  std::function<bool(int)> dfs = [&](int a) -> bool {
    state[a] = 1;
    stack.push_back(a);
    for (int b = 0; b < n; ++b) {
      if (Q.arrows[a].tgt != Q.arrows[b].src || p.in_ideal(a, b)) continue;
      if (state[b] == 1) {
        // witness cycle
        std::vector<std::string> w;
        auto it = std::find(stack.begin(), stack.end(), b);
        for (; it != stack.end(); ++it) w.push_back(aid(*it));
        rep.violations.push_back({"admissibility", "cyclic path never hits a relation", w});
        return true;
      }
      if (state[b] == 0 && dfs(b)) return true;
    }
    stack.pop_back();
    state[a] = 2;
    return false;
  };
  for (int a = 0; a < n && rep.ok(); ++a)
    if (state[a] == 0) dfs(a);

  return rep;
}

std::vector<Path> path_basis(const GentlePresentation& p) {
  std::vector<Path> basis;
  for (int v = 0; v < p.quiver.num_vertices(); ++v) {
    Path e;
    e.base_vertex = v;
    basis.push_back(e);
  }
  // grow admissible paths arrow by arrow (finite: admissibility validated upstream)
  std::vector<Path> frontier;
  for (int a = 0; a < p.quiver.num_arrows(); ++a) {
    Path w;
    w.arrows = {a};
    frontier.push_back(w);
  }
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (auto& w : frontier) {
      basis.push_back(w);
      int last = w.arrows.back();
      for (int b = 0; b < p.quiver.num_arrows(); ++b) {
        if (p.quiver.arrows[last].tgt != p.quiver.arrows[b].src) continue;
        if (p.in_ideal(last, b)) continue;
        Path w2 = w;
        w2.arrows.push_back(b);
        next.push_back(w2);
      }
    }
    frontier = std::move(next);
    if (basis.size() > 1000000) throw std::runtime_error("path basis blow-up (inadmissible input?)");
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace {

// unique successor/predecessor in a partial matching graph; -1 if none
int adm_succ(const GentlePresentation& p, int a) {
  for (int b = 0; b < p.quiver.num_arrows(); ++b)
    if (p.quiver.arrows[a].tgt == p.quiver.arrows[b].src && !p.in_ideal(a, b)) return b;
  return -1;
}
int adm_pred(const GentlePresentation& p, int a) {
  for (int b = 0; b < p.quiver.num_arrows(); ++b)
    if (p.quiver.arrows[b].tgt == p.quiver.arrows[a].src && !p.in_ideal(b, a)) return b;
  return -1;
}
int rel_succ(const GentlePresentation& p, int a) {
  for (int b = 0; b < p.quiver.num_arrows(); ++b)
    if (p.quiver.arrows[a].tgt == p.quiver.arrows[b].src && p.in_ideal(a, b)) return b;
  return -1;
}
int rel_pred(const GentlePresentation& p, int a) {
  for (int b = 0; b < p.quiver.num_arrows(); ++b)
    if (p.quiver.arrows[b].tgt == p.quiver.arrows[a].src && p.in_ideal(b, a)) return b;
  return -1;
}

}  // namespace

Threads threads(const GentlePresentation& p) {
  Threads t;
  int n = p.quiver.num_arrows();

  // nontrivial permitted threads: maximal chains of the non-relation successor matching
  {
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
      if (adm_pred(p, a) != -1) continue;  // not a chain head
      Path w;
      int cur = a;
      while (cur != -1 && !seen[cur]) {
        seen[cur] = true;
        w.arrows.push_back(cur);
        cur = adm_succ(p, cur);
      }
      t.permitted.push_back({ThreadKind::Permitted, w});
    }
    // cycles in this graph are admissibility failures; validated upstream
  }

  // trivial permitted threads, counted per vertex by the two-occurrence law
  for (int v = 0; v < p.quiver.num_vertices(); ++v) {
    std::vector<int> ins, outs;
    for (int a = 0; a < n; ++a) {
      if (p.quiver.arrows[a].src == v) outs.push_back(a);
      if (p.quiver.arrows[a].tgt == v) ins.push_back(a);
    }
    int matched = 0;
    for (int g : ins)
      for (int b : outs)
        if (!p.in_ideal(g, b)) ++matched;
    int count = 2 - (int)ins.size() - (int)outs.size() + matched;
    for (int k = 0; k < count; ++k) {
      Path e;
      e.base_vertex = v;
      t.permitted.push_back({ThreadKind::Permitted, e});
    }
  }

  // forbidden threads: maximal distinct-arrow chains of the relation matching
  {
    std::vector<bool> head_done(n, false);
    for (int a = 0; a < n; ++a) {
      if (rel_pred(p, a) != -1) continue;
      Path w;
      int cur = a;
      std::set<int> used;
      while (cur != -1 && !used.count(cur)) {
        used.insert(cur);
        w.arrows.push_back(cur);
        head_done[cur] = true;
        cur = rel_succ(p, cur);
      }
      t.forbidden.push_back({ThreadKind::Forbidden, w});
    }
    // relation cycles: arrows not reachable from any chain head
    std::vector<bool> in_cycle(n, false);
    for (int a = 0; a < n; ++a)
      if (!head_done[a] && rel_succ(p, a) != -1 && rel_pred(p, a) != -1) in_cycle[a] = true;
    std::vector<bool> emitted(n, false);
    for (int a = 0; a < n; ++a) {
      if (!in_cycle[a] || emitted[a]) continue;
      std::vector<int> cyc;
      int cur = a;
      do {
        cyc.push_back(cur);
        emitted[cur] = true;
        cur = rel_succ(p, cur);
      } while (cur != a);
      // canonical rotation: start at smallest arrow index
      auto mn = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mn, cyc.end());
      t.full_relation_cycles.push_back(cyc);
      // each rotation is a maximal distinct-arrow relation chain
      for (size_t r = 0; r < cyc.size(); ++r) {
        Path w;
        for (size_t i = 0; i < cyc.size(); ++i) w.arrows.push_back(cyc[(r + i) % cyc.size()]);
        t.forbidden.push_back({ThreadKind::Forbidden, w});
      }
    }
  }

  // trivial forbidden threads: mirror rule (relations and non-relations swapped)
  for (int v = 0; v < p.quiver.num_vertices(); ++v) {
    std::vector<int> ins, outs;
    for (int a = 0; a < n; ++a) {
      if (p.quiver.arrows[a].src == v) outs.push_back(a);
      if (p.quiver.arrows[a].tgt == v) ins.push_back(a);
    }
    int matched = 0;
    for (int g : ins)
      for (int b : outs)
        if (p.in_ideal(g, b)) ++matched;
    int count = 2 - (int)ins.size() - (int)outs.size() + matched;
    for (int k = 0; k < count; ++k) {
      Path e;
      e.base_vertex = v;
      t.forbidden.push_back({ThreadKind::Forbidden, e});
    }
  }

  return t;
}

GentlePresentation relabel(const GentlePresentation& p, const std::vector<int>& vperm,
                           const std::vector<int>& aperm,
                           const std::vector<std::string>& vnames,
                           const std::vector<std::string>& anames) {
  // vperm[i] = new position of old vertex i; names indexed by new position
  GentlePresentation q;
  q.quiver.vertices.resize(p.quiver.num_vertices());
  for (int i = 0; i < p.quiver.num_vertices(); ++i) q.quiver.vertices[vperm[i]] = vnames[vperm[i]];
  for (int i = 0; i < p.quiver.num_vertices(); ++i)
    q.quiver.vertex_index[q.quiver.vertices[i]] = i;
  q.quiver.arrows.resize(p.quiver.num_arrows());
  for (int i = 0; i < p.quiver.num_arrows(); ++i) {
    const auto& a = p.quiver.arrows[i];
    q.quiver.arrows[aperm[i]] = {anames[aperm[i]], vperm[a.src], vperm[a.tgt]};
  }
  for (int i = 0; i < q.quiver.num_arrows(); ++i)
    q.quiver.arrow_index[q.quiver.arrows[i].id] = i;
  for (auto& [a, b] : p.relations) q.relations.insert({aperm[a], aperm[b]});
  return q;
}

bool isomorphic_presentations(const GentlePresentation& a, const GentlePresentation& b) {
  if (a.quiver.num_vertices() != b.quiver.num_vertices()) return false;
  if (a.quiver.num_arrows() != b.quiver.num_arrows()) return false;
  if (a.relations.size() != b.relations.size()) return false;
  int nv = a.quiver.num_vertices();
  int na = a.quiver.num_arrows();

  // degree signature pruning
  auto sig = [](const GentlePresentation& p, int v) {
    int in = 0, out = 0;
    for (auto& ar : p.quiver.arrows) {
      if (ar.src == v) ++out;
      if (ar.tgt == v) ++in;
    }
    return std::make_pair(in, out);
  };

  std::vector<int> vmap(nv, -1), used(nv, 0);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == nv) {
      // map arrows: multigraph matching with relations
      std::vector<int> amap(na, -1), aused(na, 0);
      std::function<bool(int)> parrow = [&](int i) -> bool {
        if (i == na) {
          for (auto& [x, y] : a.relations)
            if (!b.relations.count({amap[x], amap[y]})) return false;
          return true;
        }
        for (int j = 0; j < na; ++j) {
          if (aused[j]) continue;
          if (b.quiver.arrows[j].src != vmap[a.quiver.arrows[i].src]) continue;
          if (b.quiver.arrows[j].tgt != vmap[a.quiver.arrows[i].tgt]) continue;
          amap[i] = j;
          aused[j] = 1;
          if (parrow(i + 1)) return true;
          aused[j] = 0;
          amap[i] = -1;
        }
        return false;
      };
      return parrow(0);
    }
    for (int w = 0; w < nv; ++w) {
      if (used[w] || sig(a, v) != sig(b, w)) continue;
      vmap[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      used[w] = 0;
      vmap[v] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace gentle
