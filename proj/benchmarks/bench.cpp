#include <benchmark/benchmark.h>

#include "kspec/bases.hpp"
#include "kspec/hypergraph.hpp"
#include "kspec/parity.hpp"
#include "kspec/pentagram.hpp"
#include "kspec/rank2.hpp"
#include "kspec/rays.hpp"

using namespace kspec;

static void BM_VerifyPentagram(benchmark::State& state) {
  for (auto _ : state) {
    const Pentagram p = build_pentagram();
    benchmark::DoNotOptimize(verify_pentagram(p));
  }
}
BENCHMARK(BM_VerifyPentagram);

static void BM_SignAssignmentScan(benchmark::State& state) {
  const Pentagram p = build_pentagram();
  for (auto _ : state) benchmark::DoNotOptimize(count_sign_assignments(p));
}
BENCHMARK(BM_SignAssignmentScan);

static void BM_DeriveRays(benchmark::State& state) {
  const Pentagram p = build_pentagram();
  for (auto _ : state) benchmark::DoNotOptimize(derive_all_rays(p));
}
BENCHMARK(BM_DeriveRays);

static void BM_EnumerateOctads(benchmark::State& state) {
  const RaySet rays = derive_all_rays(build_pentagram());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orthogonal_octads(rays));
}
BENCHMARK(BM_EnumerateOctads);

static void BM_SearchRank1(benchmark::State& state) {
  const IncidenceSystem sys = from_relations(published_relations_rank1());
  for (auto _ : state) benchmark::DoNotOptimize(search_assignment(sys));
}
BENCHMARK(BM_SearchRank1);

static void BM_SearchRank2(benchmark::State& state) {
  const IncidenceSystem sys = to_incidence_system(published_rank2_proof());
  for (auto _ : state) benchmark::DoNotOptimize(search_assignment(sys));
}
BENCHMARK(BM_SearchRank2);

static void BM_VerifyRank2Proof(benchmark::State& state) {
  const RaySet rays = derive_all_rays(build_pentagram());
  const Rank2Proof proof = published_rank2_proof();
  for (auto _ : state) benchmark::DoNotOptimize(verify_rank2_proof(proof, rays));
}
BENCHMARK(BM_VerifyRank2Proof);

static void BM_EnumerateRank2Proofs(benchmark::State& state) {
  const RaySet rays = derive_all_rays(build_pentagram());
  const RelationSet rs = published_relations_rank1();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rank2_proofs(rs, rays));
}
BENCHMARK(BM_EnumerateRank2Proofs);

static void BM_MaxSatRank1(benchmark::State& state) {
  const IncidenceSystem sys = from_relations(published_relations_rank1());
  for (auto _ : state) benchmark::DoNotOptimize(max_satisfiable_contexts(sys));
}
BENCHMARK(BM_MaxSatRank1);

static void BM_BuildHypergraph(benchmark::State& state) {
  const RaySet rays = derive_all_rays(build_pentagram());
  const Rank2Proof proof = published_rank2_proof();
  const auto labels = relabel_planes(proof);
  for (auto _ : state) benchmark::DoNotOptimize(build_hypergraph(proof, labels, rays));
}
BENCHMARK(BM_BuildHypergraph);

BENCHMARK_MAIN();
