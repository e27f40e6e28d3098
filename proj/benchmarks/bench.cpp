#include <benchmark/benchmark.h>

#include "gentle/corpus.hpp"
#include "gentle/homalg.hpp"
#include "gentle/selfcheck.hpp"
#include "gentle/tilting.hpp"

using namespace gentle;

static std::vector<GentlePresentation>& corpus() {
  static auto c = gen_corpus({20, 6, 12, 1});
  return c;
}

static void bm_validate(benchmark::State& state) {
  for (auto _ : state)
    for (auto& p : corpus()) benchmark::DoNotOptimize(validate_gentle(p).ok());
}
BENCHMARK(bm_validate);

static void bm_surface(benchmark::State& state) {
  for (auto _ : state)
    for (auto& p : corpus()) benchmark::DoNotOptimize(ribbon_surface(p).genus);
}
BENCHMARK(bm_surface);

static void bm_hom_profile(benchmark::State& state) {
  Field F = Field::prime();
  GentlePresentation p = parse_presentation(fixture_gp("kronecker"));
  DiscModel m = build_disc_model(p);
  CurveWord b = word_from_string(m, "band: x -[a,>]- y -[b,<]-");
  ProjComplex B = band_complex(m, F, b, grade_word(m, b, 0), F.one());
  for (auto _ : state) benchmark::DoNotOptimize(hom_profile(F, p, B, B).size());
}
BENCHMARK(bm_hom_profile);

static void bm_tau(benchmark::State& state) {
  GentlePresentation p = corpus()[0];
  DiscModel m = build_disc_model(p);
  BoundaryWords bw = boundary_words(m);
  GradedWord w{bw.segments[0], grade_word(m, bw.segments[0], 0)};
  for (auto _ : state) {
    GradedWord it = w;
    for (int k = 0; k < 8; ++k) it = tau_translate(m, it);
    benchmark::DoNotOptimize(it.word.length());
  }
}
BENCHMARK(bm_tau);

static void bm_roundtrip(benchmark::State& state) {
  Field F = Field::prime();
  GentlePresentation p = parse_presentation(fixture_gp("a3_linear"));
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(p, F).ok);
}
BENCHMARK(bm_roundtrip);

BENCHMARK_MAIN();
