#include "gentle/objects.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gentle {

PathLin lin_normalize(const Field& F, PathLin v) {
  std::sort(v.begin(), v.end(),
            [](const PathTerm& a, const PathTerm& b) { return a.path < b.path; });
  PathLin out;
  for (auto& t : v) {
    if (!out.empty() && out.back().path == t.path)
      out.back().coef = F.add(out.back().coef, t.coef);
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const PathTerm& t) { return F.is_zero(t.coef); }),
            out.end());
  return out;
}

PathLin lin_add(const Field& F, const PathLin& a, const PathLin& b) {
  PathLin v = a;
  v.insert(v.end(), b.begin(), b.end());
  return lin_normalize(F, v);
}

PathLin lin_scale(const Field& F, FieldElem c, const PathLin& a) {
  PathLin v;
  for (auto& t : a) v.push_back({F.mul(c, t.coef), t.path});
  return lin_normalize(F, v);
}

PathLin lin_mul(const Field& F, const GentlePresentation& p, const PathLin& a,
                const PathLin& b) {
  PathLin v;
  for (auto& s : a)
    for (auto& t : b) {
      auto prod = path_mul(p, s.path, t.path);
      if (!prod) throw std::logic_error("lin_mul: non-composable paths");
      if (prod->zero) continue;
      v.push_back({F.mul(s.coef, t.coef), prod->path});
    }
  return lin_normalize(F, v);
}

namespace {

void add_entry(const Field& F, ProjComplex& c, int i, int j, const PathLin& e) {
  auto& slot = c.diff[{i, j}];
  slot = lin_add(F, slot, e);
  if (slot.empty()) c.diff.erase({i, j});
}

}  // namespace

ProjComplex string_complex(const DiscModel& m, const Field& F, const GradedWord& w) {
  if (w.word.band) throw std::invalid_argument("string_complex wants an arc");
  ProjComplex c;
  for (int i = 0; i < w.word.length(); ++i)
    c.terms.push_back({m.vertex_of(w.word.cross[i]), w.grade[i]});
  for (int i = 0; i < gap_count(w.word); ++i) {
    Gap g = gap_at(m, w.word, i);
    PathLin e{{F.one(), m.chord_path(g.disc, g.lo(), g.hi())}};
    if (g.dir() == GapDir::Forward)
      add_entry(F, c, i, i + 1, e);
    else
      add_entry(F, c, i + 1, i, e);
  }
  return c;
}

ProjComplex band_complex(const DiscModel& m, const Field& F, const CurveWord& w,
                         const Grading& g, FieldElem lambda) {
  if (!w.band) throw std::invalid_argument("band_complex wants a band");
  int l = w.length();
  ProjComplex c;
  for (int i = 0; i < l; ++i) c.terms.push_back({m.vertex_of(w.cross[i]), g[i]});
  for (int i = 0; i < l; ++i) {
    Gap gp = gap_at(m, w, i);
    FieldElem coef = (i == l - 1) ? lambda : F.one();
    PathLin e{{coef, m.chord_path(gp.disc, gp.lo(), gp.hi())}};
    int j = (i + 1) % l;
    if (gp.dir() == GapDir::Forward)
      add_entry(F, c, i, j, e);
    else
      add_entry(F, c, j, i, e);
  }
  return c;
}

ProjComplex word_complex(const DiscModel& m, const Field& F, const CurveWord& w,
                         FieldElem lambda) {
  Grading g = grade_word(m, w, 0);
  if (w.band) return band_complex(m, F, w, g, lambda);
  return string_complex(m, F, {w, g});
}

ProjComplex shift(const Field& F, const ProjComplex& c, int n) {
  ProjComplex s = c;
  for (auto& t : s.terms) t.degree -= n;
  if (n % 2 != 0)
    for (auto& [ij, e] : s.diff) e = lin_scale(F, F.from_int(-1), e);
  return s;
}

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b) {
  ProjComplex s = a;
  int off = (int)a.terms.size();
  s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
  for (auto& [ij, e] : b.diff) s.diff[{ij.first + off, ij.second + off}] = e;
  return s;
}

bool check_dsquared(const Field& F, const GentlePresentation& p, const ProjComplex& c) {
  int n = (int)c.terms.size();
  for (auto& [ij, e] : c.diff) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= n || j >= n) return false;
    if (c.terms[j].degree != c.terms[i].degree + 1) return false;
    for (auto& t : e) {
      Path w = t.path;
      if (w.trivial()) w.base_vertex = c.terms[i].vertex;
      if (path_source(p, w) != c.terms[i].vertex || path_target(p, w) != c.terms[j].vertex)
        return false;
      if (!path_admissible(p, w)) return false;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      PathLin acc;
      for (int j = 0; j < n; ++j) {
        auto a = c.diff.find({i, j});
        auto b = c.diff.find({j, k});
        if (a == c.diff.end() || b == c.diff.end()) continue;
        acc = lin_add(F, acc, lin_mul(F, p, a->second, b->second));
      }
      if (!acc.empty()) return false;
    }
  return true;
}

ProjComplex canonicalize(const ProjComplex& c) {
  int n = (int)c.terms.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return c.terms[a] < c.terms[b];
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  ProjComplex out;
  for (int i = 0; i < n; ++i) out.terms.push_back(c.terms[order[i]]);
  for (auto& [ij, e] : c.diff) out.diff[{pos[ij.first], pos[ij.second]}] = e;
  return out;
}

std::optional<IdentifiedCurve> identify_string(const DiscModel& m, const Field& F,
                                               const ProjComplex& c) {
  const GentlePresentation& p = *m.pres;
  int n = (int)c.terms.size();
  if (n == 0) return std::nullopt;

  // arrow -> (disc, position in its unique thread)
  std::map<int, std::pair<int, int>> arrow_pos;
  for (int d = 0; d < (int)m.discs.size(); ++d)
    for (int i = 0; i < (int)m.discs[d].thread.arrows.size(); ++i)
      arrow_pos[m.discs[d].thread.arrows[i]] = {d, i};

  struct Edge {
    int from, to;     // entry direction in the complex
    Occ lo, hi;       // chord side positions in the disc
    FieldElem coef;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> inc(n);
  for (auto& [ij, e] : c.diff) {
    // several gap chords may share one component (e.g. a length-two band)
    if (e.empty() || e.size() > 2) return std::nullopt;
    for (auto& t : e) {
      if (t.path.trivial()) return std::nullopt;
      auto it = arrow_pos.find(t.path.arrows[0]);
      if (it == arrow_pos.end()) return std::nullopt;
      auto [d, a] = it->second;
      int b = a + t.path.length();
      if (b > (int)m.discs[d].thread.arrows.size()) return std::nullopt;
      for (int k = 0; k < t.path.length(); ++k)
        if (m.discs[d].thread.arrows[a + k] != t.path.arrows[k]) return std::nullopt;
      Edge ed{ij.first, ij.second, Occ{d, a}, Occ{d, b}, t.coef};
      inc[ij.first].push_back((int)edges.size());
      inc[ij.second].push_back((int)edges.size());
      edges.push_back(ed);
    }
  }
  for (int i = 0; i < n; ++i)
    if ((int)inc[i].size() > 2) return std::nullopt;

  int ne = (int)edges.size();
  bool band;
  int start;
  if (ne == n - 1) {
    band = false;
    start = -1;
    for (int i = 0; i < n; ++i)
      if ((int)inc[i].size() <= 1) {
        start = i;
        break;
      }
    if (start < 0) return std::nullopt;
  } else if (ne == n && n > 0) {
    band = true;
    start = 0;
    for (int i = 0; i < n; ++i)
      if ((int)inc[i].size() != 2) return std::nullopt;
  } else {
    return std::nullopt;
  }

  // walk the term graph in word order
  std::vector<int> word_term{start};
  std::vector<int> word_edge;  // edge between consecutive word positions
  std::vector<bool> used(ne, false);
  int cur = start;
  while ((int)word_term.size() < n || (band && (int)word_edge.size() < ne)) {
    int next_edge = -1;
    for (int ei : inc[cur])
      if (!used[ei]) {
        next_edge = ei;
        break;
      }
    if (next_edge < 0) return std::nullopt;
    used[next_edge] = true;
    int nxt = edges[next_edge].from == cur ? edges[next_edge].to : edges[next_edge].from;
    word_edge.push_back(next_edge);
    if (band && nxt == start && (int)word_term.size() == n) break;
    word_term.push_back(nxt);
    cur = nxt;
  }
  if ((int)word_term.size() != n) return std::nullopt;
  if (!band && (int)word_edge.size() != ne) return std::nullopt;

  CurveWord w;
  w.band = band;
  w.cross.resize(n);
  std::vector<Occ> src(word_edge.size());
  for (size_t k = 0; k < word_edge.size(); ++k) {
    const Edge& e = edges[word_edge[k]];
    bool forward = e.from == word_term[k];  // entry runs with the word
    if (forward) {
      src[k] = e.lo;
      w.cross[(k + 1) % n] = e.hi;
    } else {
      src[k] = e.hi;
      w.cross[(k + 1) % n] = e.lo;
    }
  }
  if (!band) {
    if (!word_edge.empty())
      w.cross[0] = m.partner_of(src[0]);
    else {
      // stalk: the first occurrence of the laminate
      int v = c.terms[start].vertex;
      bool found = false;
      for (int d = 0; d < (int)m.discs.size() && !found; ++d)
        for (int s = 0; s < m.discs[d].sides() && !found; ++s)
          if (m.discs[d].side_vertex[s] == v) {
            w.cross[0] = {d, s};
            found = true;
          }
      if (!found) return std::nullopt;
    }
    w.start_disc = w.cross[0].disc;
    w.end_disc = m.partner_of(w.cross.back()).disc;
  }
  for (size_t k = 0; k < word_edge.size(); ++k)
    if (!(m.partner_of(w.cross[k]) == src[k])) return std::nullopt;
  if (!validate_word(m, w).ok()) return std::nullopt;

  Grading g(n);
  for (int i = 0; i < n; ++i) {
    if (c.terms[word_term[i]].vertex != m.vertex_of(w.cross[i])) return std::nullopt;
    g[i] = c.terms[word_term[i]].degree;
  }
  for (int i = 0; i < gap_count(w); ++i) {
    int expect = gap_at(m, w, i).dir() == GapDir::Forward ? 1 : -1;
    if (g[(i + 1) % n] != g[i] + expect) return std::nullopt;
  }

  FieldElem lambda = F.one();
  if (band) {
    FieldElem inv = F.one();
    int eps_last = 1;
    for (size_t k = 0; k < word_edge.size(); ++k) {
      const Edge& e = edges[word_edge[k]];
      int eps = e.from == word_term[k] ? 1 : -1;
      inv = F.mul(inv, eps > 0 ? e.coef : F.inv(e.coef));
      if (k + 1 == word_edge.size()) eps_last = eps;
    }
    lambda = eps_last > 0 ? inv : F.inv(inv);
  }
  return IdentifiedCurve{{w, g}, lambda};
}

std::string complex_to_string(const Field& F, const GentlePresentation& p,
                              const ProjComplex& c) {
  std::ostringstream out;
  out << "terms:";
  for (auto& t : c.terms) out << " P_" << p.quiver.vertices[t.vertex] << "[" << t.degree << "]";
  out << "\n";
  for (auto& [ij, e] : c.diff) {
    out << "d(" << ij.first << " -> " << ij.second << ") =";
    bool first = true;
    for (auto& t : e) {
      out << (first ? " " : " + ");
      if (!F.is_zero(F.sub(t.coef, F.one())))
        out << F.to_string(t.coef) << "*";
      out << path_to_string(p, t.path);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

json complex_to_json(const Field& F, const GentlePresentation& p, const ProjComplex& c) {
  json j;
  j["terms"] = json::array();
  for (auto& t : c.terms)
    j["terms"].push_back({{"vertex", p.quiver.vertices[t.vertex]}, {"degree", t.degree}});
  j["differential"] = json::array();
  for (auto& [ij, e] : c.diff) {
    json comp;
    comp["from"] = ij.first;
    comp["to"] = ij.second;
    comp["entry"] = json::array();
    for (auto& t : e)
      comp["entry"].push_back(
          {{"coef", F.to_string(t.coef)}, {"path", path_to_string(p, t.path)}});
    j["differential"].push_back(comp);
  }
  return j;
}

}  // namespace gentle
