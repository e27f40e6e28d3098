#include "gentle/curves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gentle {

int gap_count(const CurveWord& w) { return w.band ? w.length() : w.length() - 1; }

Gap gap_at(const DiscModel& m, const CurveWord& w, int i) {
  Occ q = m.partner_of(w.cross[i]);
  Occ n = w.cross[(i + 1) % w.length()];
  return Gap{q.disc, q.side, n.side};
}

WordReport validate_word(const DiscModel& m, const CurveWord& w) {
  WordReport r;
  int l = w.length();
  if (l == 0) {
    r.violations.push_back("empty word");
    return r;
  }
  auto occ_ok = [&](Occ o) {
    return o.disc >= 0 && o.disc < (int)m.discs.size() && o.side >= 0 &&
           o.side < m.discs[o.disc].sides();
  };
  for (Occ o : w.cross)
    if (!occ_ok(o)) {
      r.violations.push_back("crossing out of range");
      return r;
    }
  for (int i = 0; i < gap_count(w); ++i) {
    Occ q = m.partner_of(w.cross[i]);
    Occ n = w.cross[(i + 1) % l];
    if (q.disc != n.disc)
      r.violations.push_back("gap " + std::to_string(i) + " does not chain: disc " +
                             std::to_string(q.disc) + " vs " + std::to_string(n.disc));
    else if (q == n)
      r.violations.push_back("gap " + std::to_string(i) + " not reduced");
  }
  if (w.band) {
    for (int d = 1; d < l; ++d) {
      if (l % d != 0) continue;
      bool power = true;
      for (int i = 0; i < l && power; ++i)
        if (!(w.cross[i] == w.cross[(i + d) % l])) power = false;
      if (power) {
        r.violations.push_back("band not primitive (period " + std::to_string(d) + ")");
        break;
      }
    }
  } else {
    if (w.start_disc != w.cross.front().disc)
      r.violations.push_back("start disc does not match first crossing");
    if (w.end_disc != m.partner_of(w.cross.back()).disc)
      r.violations.push_back("end disc does not match last crossing");
  }
  return r;
}

CurveWord reverse_word(const DiscModel& m, const CurveWord& w) {
  CurveWord r;
  r.band = w.band;
  for (int i = w.length() - 1; i >= 0; --i) r.cross.push_back(m.partner_of(w.cross[i]));
  if (!w.band) {
    r.start_disc = w.end_disc;
    r.end_disc = w.start_disc;
  }
  return r;
}

GradedWord reverse_word(const DiscModel& m, const GradedWord& w) {
  GradedWord r{reverse_word(m, w.word), w.grade};
  std::reverse(r.grade.begin(), r.grade.end());
  return r;
}

namespace {

std::vector<int> flat_key(const CurveWord& w) {
  std::vector<int> k{w.band ? 0 : 1, w.length(), w.start_disc, w.end_disc};
  for (Occ o : w.cross) {
    k.push_back(o.disc);
    k.push_back(o.side);
  }
  return k;
}

CurveWord rotate_band(const CurveWord& w, int r) {
  CurveWord o = w;
  std::rotate(o.cross.begin(), o.cross.begin() + r, o.cross.end());
  return o;
}

}  // namespace

std::vector<int> canonical_key(const DiscModel& m, const CurveWord& w) {
  std::vector<int> best = flat_key(w);
  if (!w.band) {
    best = std::min(best, flat_key(reverse_word(m, w)));
    return best;
  }
  CurveWord rev = reverse_word(m, w);
  for (int r = 0; r < w.length(); ++r) {
    best = std::min(best, flat_key(rotate_band(w, r)));
    best = std::min(best, flat_key(rotate_band(rev, r)));
  }
  return best;
}

Grading grade_word(const DiscModel& m, const CurveWord& w, int seed) {
  Grading g(w.length());
  g[0] = seed;
  for (int i = 0; i + 1 < w.length(); ++i)
    g[i + 1] = g[i] + (gap_at(m, w, i).dir() == GapDir::Forward ? 1 : -1);
  if (w.band && w.length() > 0) {
    int wrap = g.back() + (gap_at(m, w, w.length() - 1).dir() == GapDir::Forward ? 1 : -1);
    if (wrap != g[0])
      throw std::runtime_error("band is not gradable (winding number " +
                               std::to_string(wrap - g[0]) + ")");
  }
  return g;
}

int winding_number(const DiscModel& m, const CurveWord& w) {
  int s = 0;
  for (int i = 0; i < gap_count(w); ++i)
    s += gap_at(m, w, i).dir() == GapDir::Forward ? 1 : -1;
  return s;
}

namespace {

// Slide the end of an arc to the predecessor marked point along the walk
// orientation. Crossings are appended unreduced; grades follow the grading
// equation, with +1 across the degenerate chord at the first junction.
GradedWord end_slide_unreduced(const DiscModel& m, GradedWord w) {
  SegRef s{w.word.end_disc, m.discs[w.word.end_disc].sides() - 1};
  for (;;) {
    Occ e{s.disc, s.seg};
    Occ q = m.partner_of(w.word.cross.back());
    int a = q.side, b = e.side;
    w.word.cross.push_back(e);
    w.grade.push_back(w.grade.back() + (a <= b ? 1 : -1));
    Occ q2 = m.partner_of(e);
    int k2 = m.discs[q2.disc].sides();
    SegRef prev{q2.disc, (q2.side - 1 + k2) % k2};
    if (prev.seg == k2 - 1) {  // marked: stop here
      w.word.end_disc = q2.disc;
      return w;
    }
    s = prev;
  }
}

}  // namespace

GradedWord reduce_word_graded(const DiscModel& m, const GradedWord& in) {
  GradedWord w = in;
  bool changed = true;
  while (changed && w.word.length() >= 2) {
    changed = false;
    int l = w.word.length();
    for (int i = 0; i < gap_count(w.word); ++i) {
      int j = (i + 1) % l;
      if (m.partner_of(w.word.cross[i]) == w.word.cross[j]) {
        int hi = std::max(i, j), lo = std::min(i, j);
        w.word.cross.erase(w.word.cross.begin() + hi);
        w.word.cross.erase(w.word.cross.begin() + lo);
        if (!w.grade.empty()) {
          w.grade.erase(w.grade.begin() + hi);
          w.grade.erase(w.grade.begin() + lo);
        }
        changed = true;
        break;
      }
    }
  }
  if (!w.word.band && w.word.length() > 0) {
    w.word.start_disc = w.word.cross.front().disc;
    w.word.end_disc = m.partner_of(w.word.cross.back()).disc;
  }
  return w;
}

CurveWord reduce_word(const DiscModel& m, const CurveWord& w) {
  return reduce_word_graded(m, {w, {}}).word;
}

GradedWord tau_translate(const DiscModel& m, const GradedWord& w) {
  if (w.word.band) return w;
  GradedWord t = end_slide_unreduced(m, w);
  t = reverse_word(m, end_slide_unreduced(m, reverse_word(m, t)));
  t = reduce_word_graded(m, t);
  if (t.word.length() == 0) throw std::logic_error("twist reduced an arc to nothing");
  return t;
}

CurveWord tau_translate(const DiscModel& m, const CurveWord& w) {
  if (w.band) return w;
  GradedWord g{w, Grading(w.length(), 0)};
  for (int i = 0; i + 1 < w.length(); ++i)
    g.grade[i + 1] = g.grade[i] + (gap_at(m, w, i).dir() == GapDir::Forward ? 1 : -1);
  return tau_translate(m, g).word;
}

BoundaryWords boundary_words(const DiscModel& m) {
  BoundaryWords out;
  auto walks = trace_boundary(m);
  for (int wi = 0; wi < (int)walks.size(); ++wi) {
    const auto& walk = walks[wi];
    int n = (int)walk.segments.size();
    auto junction = [&](SegRef s) {
      int k = m.discs[s.disc].sides();
      return Occ{s.disc, (s.seg + 1) % k};
    };
    // loop word: one crossing per junction around the walk
    CurveWord loop;
    loop.band = true;
    for (auto& s : walk.segments) loop.cross.push_back(junction(s));
    // loops through monogons backtrack; contractible ones vanish entirely
    out.loops.push_back(reduce_word(m, loop));
    out.loop_component.push_back(wi);
    // one segment arc per marked point, running to the next marked point
    for (int p = 0; p < n; ++p) {
      if (!m.marked_segment(walk.segments[p].disc, walk.segments[p].seg)) continue;
      CurveWord seg;
      seg.start_disc = walk.segments[p].disc;
      for (int j = 0;; ++j) {
        SegRef cur = walk.segments[(p + j) % n];
        seg.cross.push_back(junction(cur));
        SegRef nxt = walk.segments[(p + j + 1) % n];
        if (m.marked_segment(nxt.disc, nxt.seg)) {
          seg.end_disc = nxt.disc;
          break;
        }
      }
      out.segments.push_back(seg);
      out.segment_component.push_back(wi);
    }
  }
  return out;
}

namespace {

std::string disc_name(const DiscModel& m, int d) {
  return path_to_string(*m.pres, m.discs[d].thread);
}

int disc_by_name(const DiscModel& m, const std::string& name) {
  for (int d = 0; d < (int)m.discs.size(); ++d)
    if (disc_name(m, d) == name) return d;
  throw std::runtime_error("unknown disc '" + name + "'");
}

// Chord data of gap i in emission terms: path between the side positions.
struct GapText {
  std::string path;
  bool forward;
};

GapText gap_text(const DiscModel& m, const CurveWord& w, int i) {
  Gap g = gap_at(m, w, i);
  Path u = m.chord_path(g.disc, g.lo(), g.hi());
  return {path_to_string(*m.pres, u), g.dir() == GapDir::Forward};
}

}  // namespace

std::string word_to_string(const DiscModel& m, const CurveWord& w) {
  const GentlePresentation& p = *m.pres;
  std::ostringstream out;
  out << (w.band ? "band:" : "arc:");
  for (int i = 0; i < w.length(); ++i) {
    out << " " << p.quiver.vertices[m.vertex_of(w.cross[i])];
    if (i < gap_count(w)) {
      GapText g = gap_text(m, w, i);
      out << " -[" << g.path << "," << (g.forward ? ">" : "<") << "]-";
    }
  }
  if (!w.band)
    out << " @ (" << disc_name(m, w.start_disc) << ", 0) .. (" << disc_name(m, w.end_disc)
        << ", 0)";
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

CurveWord word_from_string(const DiscModel& m, const std::string& text) {
  const GentlePresentation& p = *m.pres;
  std::string t = trim(text);
  CurveWord w;
  if (t.rfind("arc:", 0) == 0) {
    w.band = false;
    t = t.substr(4);
  } else if (t.rfind("band", 0) == 0) {
    w.band = true;
    t = t.substr(4);
    if (!t.empty() && t[0] == '(') {  // scalar parameter lives at the complex level
      size_t close = t.find(')');
      if (close == std::string::npos) throw std::runtime_error("unclosed band parameter");
      t = t.substr(close + 1);
    }
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw std::runtime_error("missing ':' after band");
    t = t.substr(colon + 1);
  } else {
    throw std::runtime_error("word must start with 'arc:' or 'band'");
  }

  std::string ends;
  if (!w.band) {
    size_t at = t.find('@');
    if (at == std::string::npos) throw std::runtime_error("arc word needs endpoint data");
    ends = trim(t.substr(at + 1));
    t = t.substr(0, at);
  }

  // split "x1 -[u1,>]- x2 -[u2,<]- x3" into vertices and gaps
  std::vector<std::string> verts, gaps;
  std::vector<bool> fwd;
  size_t pos = 0;
  for (;;) {
    size_t open = t.find("-[", pos);
    verts.push_back(trim(t.substr(pos, open == std::string::npos ? std::string::npos
                                                                 : open - pos)));
    if (open == std::string::npos) break;
    size_t close = t.find("]-", open);
    if (close == std::string::npos) throw std::runtime_error("unclosed gap in word");
    std::string inner = t.substr(open + 2, close - open - 2);
    size_t comma = inner.rfind(',');
    if (comma == std::string::npos) throw std::runtime_error("gap needs a direction");
    std::string dir = trim(inner.substr(comma + 1));
    if (dir != ">" && dir != "<") throw std::runtime_error("gap direction must be > or <");
    gaps.push_back(trim(inner.substr(0, comma)));
    fwd.push_back(dir == ">");
    pos = close + 2;
  }
  if (w.band) {
    if (verts.back().empty()) verts.pop_back();  // trailing gap closes the cycle
    if (verts.size() != gaps.size())
      throw std::runtime_error("band word needs one gap per vertex");
  } else {
    if (verts.size() != gaps.size() + 1)
      throw std::runtime_error("arc word needs one vertex more than gaps");
  }
  for (auto& v : verts)
    if (v.empty() || !p.quiver.vertex_index.count(v))
      throw std::runtime_error("unknown vertex '" + v + "' in word");

  // locate each gap path inside its unique thread
  std::map<int, std::pair<int, int>> arrow_pos;  // arrow -> (disc, thread position)
  for (int d = 0; d < (int)m.discs.size(); ++d)
    for (int i = 0; i < (int)m.discs[d].thread.arrows.size(); ++i)
      arrow_pos[m.discs[d].thread.arrows[i]] = {d, i};

  int l = (int)gaps.size() + (w.band ? 0 : 1);
  std::vector<Occ> src(gaps.size()), dst(gaps.size());
  for (size_t i = 0; i < gaps.size(); ++i) {
    std::vector<int> arrs;
    std::stringstream ss(gaps[i]);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
      tok = trim(tok);
      if (!p.quiver.arrow_index.count(tok))
        throw std::runtime_error("unknown arrow '" + tok + "' in gap");
      arrs.push_back(p.quiver.arrow_index.at(tok));
    }
    if (arrs.empty()) throw std::runtime_error("empty gap path");
    auto it = arrow_pos.find(arrs[0]);
    if (it == arrow_pos.end()) throw std::runtime_error("gap arrow not on any thread");
    auto [d, a] = it->second;
    int b = a + (int)arrs.size();
    if (b > (int)m.discs[d].thread.arrows.size())
      throw std::runtime_error("gap path leaves its thread");
    for (size_t k = 0; k < arrs.size(); ++k)
      if (m.discs[d].thread.arrows[a + k] != arrs[k])
        throw std::runtime_error("gap path is not a thread subpath");
    if (fwd[i]) {
      src[i] = {d, a};
      dst[i] = {d, b};
    } else {
      src[i] = {d, b};
      dst[i] = {d, a};
    }
  }

  w.cross.resize(l);
  if (w.band) {
    for (int i = 0; i < l; ++i) w.cross[i] = dst[(i - 1 + l) % l];
  } else {
    if (!gaps.empty()) {
      w.cross[0] = m.partner_of(src[0]);
      for (int i = 1; i < l; ++i) w.cross[i] = dst[i - 1];
    }
    // endpoints "(disc, k) .. (disc, j)"
    size_t dots = ends.find("..");
    if (dots == std::string::npos) throw std::runtime_error("endpoints need '..'");
    auto parse_end = [&](std::string s) {
      s = trim(s);
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::runtime_error("endpoint must be '(disc, index)'");
      s = s.substr(1, s.size() - 2);
      size_t comma = s.rfind(',');
      if (comma == std::string::npos) throw std::runtime_error("endpoint needs an index");
      return disc_by_name(m, trim(s.substr(0, comma)));
    };
    w.start_disc = parse_end(ends.substr(0, dots));
    w.end_disc = parse_end(ends.substr(dots + 2));
    if (gaps.empty()) {
      // single crossing: pick the occurrence matching the endpoint discs
      int v = p.quiver.vertex_index.at(verts[0]);
      bool found = false;
      for (int d = 0; d < (int)m.discs.size() && !found; ++d)
        for (int s = 0; s < m.discs[d].sides() && !found; ++s)
          if (m.discs[d].side_vertex[s] == v && d == w.start_disc &&
              m.partner_of({d, s}).disc == w.end_disc) {
            w.cross[0] = {d, s};
            found = true;
          }
      if (!found) throw std::runtime_error("no crossing matches the endpoint discs");
    }
  }

  for (int i = 0; i < l; ++i)
    if (p.quiver.vertices[m.vertex_of(w.cross[i])] != verts[i])
      throw std::runtime_error("vertex label mismatch at position " + std::to_string(i));
  for (size_t i = 0; i < gaps.size(); ++i)
    if (!(m.partner_of(w.cross[i]) == src[i]))
      throw std::runtime_error("word does not chain at gap " + std::to_string(i));
  auto rep = validate_word(m, w);
  if (!rep.ok()) throw std::runtime_error("invalid word: " + rep.violations.front());
  return w;
}

json word_to_json(const DiscModel& m, const CurveWord& w) {
  json j;
  j["type"] = w.band ? "band" : "arc";
  j["crossings"] = json::array();
  for (Occ o : w.cross)
    j["crossings"].push_back({{"disc", o.disc},
                              {"side", o.side},
                              {"laminate", m.pres->quiver.vertices[m.vertex_of(o)]}});
  if (!w.band) {
    j["start_disc"] = w.start_disc;
    j["end_disc"] = w.end_disc;
  }
  j["text"] = word_to_string(m, w);
  return j;
}

}  // namespace gentle
