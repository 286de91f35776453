#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kspec/matrix.hpp"
#include "kspec/rays.hpp"

namespace kspec {

/// Fifteen completeness relations over ray ids: the five octads plus ten
/// hybrid bases, each summing to the identity.
struct RelationSet {
  std::array<std::array<int, 8>, 15> relations;
  std::string source;  // "published" for the bundled set, "user" for loaded data
};

/// The published fifteen-row relation set (rows in printed order).
RelationSet published_relations_rank1();

struct CompletenessResult {
  bool complete = false;
  ExactMatrix residual;  // sum of projectors minus I; zero iff complete
};

/// Exact check that the ids' rank-1 projectors sum to I. Throws on an id
/// outside 1..40.
CompletenessResult verify_completeness(std::span<const int> ids, const RaySet& rays);

/// Ray id -> number of relations containing it.
std::map<int, int> occurrence_counts(const RelationSet& rs);

/// The twenty ray ids that occur four times across the bundled relations
/// (frozen from the source text; the other twenty ids occur twice).
const std::array<int, 20>& quadruple_occurrence_ids();

/// Every 8-subset of the 40 rays that is pairwise orthogonal (such a subset
/// automatically sums to I, which is re-verified). Complete clique search
/// over the orthogonality graph; octads sorted ascending, list sorted
/// lexicographically, independent of input order.
std::vector<std::array<int, 8>> enumerate_orthogonal_octads(const RaySet& rays);

nlohmann::ordered_json relations_to_json(const RelationSet& rs);
nlohmann::ordered_json octads_to_json(const std::vector<std::array<int, 8>>& octads);

}  // namespace kspec
