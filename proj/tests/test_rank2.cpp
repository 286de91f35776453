#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "kspec/rank2.hpp"

using namespace kspec;

namespace {

// all-even plane multiplicity, checked the dumb way: encode, sort, count runs
bool naive_all_even(const MatchingFamily& family) {
  std::vector<int> codes;
  codes.reserve(family.size() * 4);
  for (const Matching& m : family)
    for (const RayPair& p : m) codes.push_back(p[0] * 41 + p[1]);
  std::sort(codes.begin(), codes.end());
  for (std::size_t i = 0; i < codes.size();) {
    std::size_t j = i;
    while (j < codes.size() && codes[j] == codes[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

Rank2Proof proof_from_family(const MatchingFamily& family) {
  Rank2Proof p = published_rank2_proof();
  REQUIRE(family.size() == 15);
  std::copy(family.begin(), family.end(), p.matchings.begin());
  return p;
}

}  // namespace

TEST_SUITE("rank2") {

TEST_CASE("plane construction and its guard rails") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const Plane p17 = make_plane(1, 7, rays);
  CHECK(p17.pair == RayPair{1, 7});
  CHECK(p17.matrix.is_idempotent());
  CHECK(p17.matrix.trace_int() == 2);

  // rays 1 and 2 are basis vectors, so the plane is a diagonal projector
  const Plane p12 = make_plane(2, 1, rays);
  CHECK(p12.pair == RayPair{1, 2});
  CHECK(p12.matrix.den() == 1);
  CHECK(p12.matrix.at(0, 0) == 1);
  CHECK(p12.matrix.at(1, 1) == 1);
  CHECK(p12.matrix.at(2, 2) == 0);

  CHECK_THROWS_AS(make_plane(1, 9, rays), std::invalid_argument);  // not orthogonal
  CHECK_THROWS_AS(make_plane(3, 3, rays), std::invalid_argument);
}

TEST_CASE("the published pairing keeps its printed layout") {
  const Rank2Proof proof = published_rank2_proof();
  CHECK(proof.matchings[0] == Matching{{{1, 7}, {2, 8}, {3, 4}, {5, 6}}});
  CHECK(proof.matchings[1] == Matching{{{9, 12}, {13, 16}, {14, 10}, {15, 11}}});

  const auto canon = canonical_matchings(proof);
  CHECK(canon[0] == Matching{{{1, 7}, {2, 8}, {3, 4}, {5, 6}}});
  CHECK(canon[1] == Matching{{{9, 12}, {10, 14}, {11, 15}, {13, 16}}});
  CHECK(canon[5] == Matching{{{1, 2}, {3, 4}, {13, 16}, {14, 15}}});
}

TEST_CASE("the published pairing verifies end to end") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const Rank2Proof proof = published_rank2_proof();
  const Rank2Report rep = verify_rank2_proof(proof, rays);
  CHECK(rep.all_ok());
  for (int r = 0; r < 15; ++r) {
    CHECK(rep.matches_relation[r]);
    CHECK(rep.pairs_orthogonal[r]);
    CHECK(rep.sums_to_identity[r]);
  }
  CHECK(rep.distinct_planes == 30);
  CHECK(rep.multiplicities_all_even);
  CHECK(rep.parity.is_parity_proof);
  CHECK(rep.unsat);

  const auto mult = plane_multiplicities(proof);
  CHECK(mult.size() == 30);
  for (const auto& [pair, n] : mult) CHECK(n == 2);
}

TEST_CASE("a stray rematch of one relation breaks evenness, not geometry") {
  const RaySet rays = derive_all_rays(build_pentagram());
  Rank2Proof proof = published_rank2_proof();
  proof.matchings[0] = Matching{{{1, 2}, {3, 4}, {5, 6}, {7, 8}}};
  const Rank2Report rep = verify_rank2_proof(proof, rays);
  CHECK(rep.matches_relation[0]);
  CHECK(rep.pairs_orthogonal[0]);   // rays 1..8 are the standard basis
  CHECK(rep.sums_to_identity[0]);
  CHECK(!rep.multiplicities_all_even);
  CHECK(!rep.all_ok());
}

TEST_CASE("every perfect matching of a full octet resolves the identity") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const std::array<int, 8> rel = {1, 2, 3, 4, 5, 6, 7, 8};
  const auto ms = perfect_matchings(rel);
  REQUIRE(ms.size() == 105);
  CHECK(std::set<Matching>(ms.begin(), ms.end()).size() == 105);
  for (const Matching& m : ms) {
    // canonical form: each pair sorted, slots in ascending order
    for (const RayPair& p : m) CHECK(p[0] < p[1]);
    CHECK(std::is_sorted(m.begin(), m.end()));
    ExactMatrix sum = ExactMatrix::zero(8);
    for (const RayPair& p : m) sum = sum + make_plane(p[0], p[1], rays).matrix;
    CHECK(sum == ExactMatrix::identity(8));
  }
}

TEST_CASE("the induced abstract system is the thirty-plane one") {
  const Rank2Proof proof = published_rank2_proof();
  const auto ids = plane_ids(proof);
  REQUIRE(ids.size() == 30);
  CHECK(ids.at(RayPair{1, 2}) == 1);    // lexicographically first plane
  CHECK(ids.at(RayPair{38, 39}) == 30);
  const IncidenceSystem sys = to_incidence_system(proof);
  CHECK(sys.outcomes.size() == 30);
  CHECK(sys.contexts.size() == 15);
  CHECK(sys.outcome_rank == 2);
  CHECK(sys.dimension == 8);
  for (const auto& c : sys.contexts) CHECK(c.size() == 4);
  CHECK(max_satisfiable_contexts(sys).max_contexts == 14);
}

TEST_CASE("toy inputs: duplicated relations against a naive product scan") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const std::array<int, 8> A = {1, 2, 3, 4, 5, 6, 7, 8};
  const auto ms = perfect_matchings(A);

  SUBCASE("two copies: exactly the diagonal") {
    const std::vector<std::array<int, 8>> rels = {A, A};
    const auto fast = enumerate_rank2_proofs(rels, rays);
    CHECK(fast.proofs.size() == 105);
    for (const auto& fam : fast.proofs) {
      REQUIRE(fam.size() == 2);
      CHECK(fam[0] == fam[1]);
    }
    std::vector<MatchingFamily> naive;
    for (const Matching& m1 : ms)
      for (const Matching& m2 : ms)
        if (naive_all_even({m1, m2})) naive.push_back({m1, m2});
    std::vector<MatchingFamily> got = fast.proofs;
    std::sort(got.begin(), got.end());
    std::sort(naive.begin(), naive.end());
    CHECK(got == naive);
    CHECK(fast.distinct_plane_histogram == std::map<int, int>{{4, 105}});
  }

  SUBCASE("three copies: parity forbids everything") {
    const std::vector<std::array<int, 8>> rels = {A, A, A};
    const auto fast = enumerate_rank2_proofs(rels, rays);
    CHECK(fast.proofs.empty());
    int naive = 0;
    for (const Matching& m1 : ms)
      for (const Matching& m2 : ms)
        for (const Matching& m3 : ms)
          if (naive_all_even({m1, m2, m3})) ++naive;
    CHECK(naive == 0);
  }
}

TEST_CASE("enumeration refuses an incomplete relation") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const std::vector<std::array<int, 8>> rels = {{1, 2, 3, 4, 5, 6, 7, 9}};
  CHECK_THROWS_AS(enumerate_rank2_proofs(rels, rays), std::invalid_argument);
}

TEST_CASE("full enumeration: 243 pairings, each on exactly 30 planes") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const auto result = enumerate_rank2_proofs(published_relations_rank1(), rays);
  REQUIRE(result.proofs.size() == 243);
  CHECK(result.distinct_plane_histogram == std::map<int, int>{{30, 243}});
  CHECK(std::set<MatchingFamily>(result.proofs.begin(), result.proofs.end()).size() == 243);

  // the published instance is one of them
  const Rank2Proof bundled = published_rank2_proof();
  const int idx = result.index_of(bundled);
  REQUIRE(idx >= 0);
  const auto canon = canonical_matchings(bundled);
  CHECK(std::equal(result.proofs[idx].begin(), result.proofs[idx].end(), canon.begin(),
                   canon.end()));

  // evenness for all, full geometric verification for a sample
  for (std::size_t i = 0; i < result.proofs.size(); ++i) {
    CHECK(naive_all_even(result.proofs[i]));
    if (i % 20 == 0) CHECK(verify_rank2_proof(proof_from_family(result.proofs[i]), rays).all_ok());
  }
}

TEST_CASE("json export shape") {
  const auto j = proof_to_json(published_rank2_proof());
  REQUIRE(j["relations"].size() == 15);
  CHECK(j["relations"][0]["id"] == 1);
  CHECK(j["relations"][0]["pairs"].size() == 4);
  REQUIRE(j["planes"].size() == 30);
  for (const auto& p : j["planes"]) CHECK(p["multiplicity"] == 2);
}

}  // TEST_SUITE
