#include "gentle/corpus.hpp"

#include <algorithm>
#include <random>

namespace gentle {

namespace {

GentlePresentation try_generate(std::mt19937_64& rng, const CorpusSpec& spec) {
  GentlePresentation p;
  std::uniform_int_distribution<int> nv_dist(1, std::max(1, spec.max_vertices));
  int nv = nv_dist(rng);
  for (int v = 0; v < nv; ++v) {
    std::string name = "v" + std::to_string(v);
    p.quiver.vertex_index[name] = v;
    p.quiver.vertices.push_back(name);
  }
  std::vector<int> out_deg(nv, 0), in_deg(nv, 0);
  int na_target = std::uniform_int_distribution<int>(0, std::min(spec.max_arrows, 2 * nv))(rng);
  for (int a = 0; a < na_target; ++a) {
    std::vector<int> srcs, tgts;
    for (int v = 0; v < nv; ++v) {
      if (out_deg[v] < 2) srcs.push_back(v);
      if (in_deg[v] < 2) tgts.push_back(v);
    }
    if (srcs.empty() || tgts.empty()) break;
    int s = srcs[std::uniform_int_distribution<size_t>(0, srcs.size() - 1)(rng)];
    int t = tgts[std::uniform_int_distribution<size_t>(0, tgts.size() - 1)(rng)];
    std::string id = "a" + std::to_string(p.quiver.arrows.size());
    p.quiver.arrow_index[id] = (int)p.quiver.arrows.size();
    p.quiver.arrows.push_back({id, s, t});
    ++out_deg[s];
    ++in_deg[t];
  }

  // classify every composable pair at each vertex as relation or not,
  // respecting the one-of-each-kind matching constraints
  for (int v = 0; v < nv; ++v) {
    std::vector<int> ins, outs;
    for (int a = 0; a < p.quiver.num_arrows(); ++a) {
      if (p.quiver.arrows[a].tgt == v) ins.push_back(a);
      if (p.quiver.arrows[a].src == v) outs.push_back(a);
    }
    if (ins.empty() || outs.empty()) continue;
    if (ins.size() == 1 && outs.size() == 1) {
      if (rng() & 1) p.relations.insert({ins[0], outs[0]});
    } else if (ins.size() == 2 && outs.size() == 1) {
      // one in-arrow composes to zero, the other survives
      p.relations.insert({ins[rng() & 1], outs[0]});
    } else if (ins.size() == 1 && outs.size() == 2) {
      p.relations.insert({ins[0], outs[rng() & 1]});
    } else {
      // 2x2: relations form one perfect matching, the complement survives
      int flip = (int)(rng() & 1);
      p.relations.insert({ins[0], outs[flip]});
      p.relations.insert({ins[1], outs[1 - flip]});
    }
  }
  return p;
}

}  // namespace

std::vector<GentlePresentation> gen_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<GentlePresentation> out;
  int guard = 0;
  while ((int)out.size() < spec.count && ++guard < spec.count * 1000) {
    GentlePresentation p = try_generate(rng, spec);
    if (validate_gentle(p).ok()) out.push_back(std::move(p));
  }
  if ((int)out.size() < spec.count)
    throw std::runtime_error("corpus generation did not converge");
  return out;
}

}  // namespace gentle
