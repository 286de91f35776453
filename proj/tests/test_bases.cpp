#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "kspec/bases.hpp"
#include "kspec/rays.hpp"

using namespace kspec;

TEST_SUITE("bases") {

TEST_CASE("bundled relation list matches the published rows") {
  const RelationSet rs = published_relations_rank1();
  CHECK(rs.source == "published");
  CHECK(rs.relations[0] == std::array<int, 8>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(rs.relations[5] == std::array<int, 8>{1, 2, 3, 4, 13, 14, 15, 16});
  CHECK(rs.relations[14] == std::array<int, 8>{25, 28, 30, 31, 33, 36, 37, 38});
  // every row strictly increasing, ids in range
  for (const auto& rel : rs.relations) {
    for (int i = 0; i < 7; ++i) CHECK(rel[i] < rel[i + 1]);
    CHECK(rel[0] >= 1);
    CHECK(rel[7] <= 40);
  }
}

TEST_CASE("all fifteen relations resolve the identity") {
  const RaySet rays = derive_all_rays(build_pentagram());
  for (const auto& rel : published_relations_rank1().relations) {
    const CompletenessResult res = verify_completeness(rel, rays);
    CHECK(res.complete);
    CHECK(res.residual.is_zero());
  }
}

TEST_CASE("completeness check rejects a broken octet") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const std::array<int, 8> dup = {1, 2, 3, 4, 5, 6, 7, 7};
  const CompletenessResult res = verify_completeness(dup, rays);
  CHECK(!res.complete);
  CHECK(!res.residual.is_zero());

  const std::array<int, 8> bad_id = {1, 2, 3, 4, 5, 6, 7, 41};
  CHECK_THROWS_AS(verify_completeness(bad_id, rays), std::out_of_range);
}

TEST_CASE("occurrence profile: twenty rays four times, twenty rays twice") {
  const RelationSet rs = published_relations_rank1();
  const auto counts = occurrence_counts(rs);
  REQUIRE(counts.size() == 40);
  int total = 0, fours = 0, twos = 0;
  std::vector<int> quad;
  for (int id = 1; id <= 40; ++id) {
    const int c = counts.at(id);
    total += c;
    CHECK(c % 2 == 0);
    if (c == 4) {
      ++fours;
      quad.push_back(id);
    } else if (c == 2) {
      ++twos;
    }
  }
  CHECK(total == 120);  // 15 relations x 8 slots
  CHECK(fours == 20);
  CHECK(twos == 20);
  const auto& published = quadruple_occurrence_ids();
  CHECK(std::equal(quad.begin(), quad.end(), published.begin(), published.end()));
}

TEST_CASE("exhaustive octad search finds exactly twenty-five") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const auto octads = enumerate_orthogonal_octads(rays);
  REQUIRE(octads.size() == 25);

  // sorted, distinct, each internally increasing
  std::set<std::array<int, 8>> seen(octads.begin(), octads.end());
  CHECK(seen.size() == 25);
  CHECK(std::is_sorted(octads.begin(), octads.end()));
  for (const auto& o : octads)
    for (int i = 0; i < 7; ++i) CHECK(o[i] < o[i + 1]);

  // the fifteen published relations are all among them
  for (const auto& rel : published_relations_rank1().relations) CHECK(seen.count(rel) == 1);

  // structure: five stay inside one table block, twenty straddle two blocks 4+4
  int pure = 0, hybrid = 0;
  for (const auto& o : octads) {
    std::map<int, int> per_block;
    for (int id : o) ++per_block[rays.octad_of(id)];
    if (per_block.size() == 1) {
      ++pure;
    } else {
      REQUIRE(per_block.size() == 2);
      for (const auto& [blk, n] : per_block) CHECK(n == 4);
      ++hybrid;
    }
  }
  CHECK(pure == 5);
  CHECK(hybrid == 20);
}

TEST_CASE("json exports carry the right shapes") {
  const RaySet rays = derive_all_rays(build_pentagram());
  const auto jr = relations_to_json(published_relations_rank1());
  CHECK(jr["source"] == "published");
  REQUIRE(jr["relations"].size() == 15);
  CHECK(jr["relations"][0].size() == 8);
  const auto jo = octads_to_json(enumerate_orthogonal_octads(rays));
  REQUIRE(jo.size() == 25);
  CHECK(jo[0].size() == 8);
}

}  // TEST_SUITE
