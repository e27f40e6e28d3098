#pragma once
// Seeded random generation of valid gentle presentations.

#include <cstdint>

#include "gentle/presentation.hpp"

namespace gentle {

struct CorpusSpec {
  int count = 50;
  int max_vertices = 6;
  int max_arrows = 12;
  std::uint64_t seed = 1;
};

// Deterministic per spec; every output passes validate_gentle.
std::vector<GentlePresentation> gen_corpus(const CorpusSpec& spec);

}  // namespace gentle
