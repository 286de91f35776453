#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "kspec/bases.hpp"
#include "kspec/matrix.hpp"
#include "kspec/parity.hpp"
#include "kspec/rays.hpp"

namespace kspec {

using RayPair = std::array<int, 2>;
using Matching = std::array<RayPair, 4>;  // partition of a relation's 8 rays

inline RayPair sorted_pair(int i, int j) { return i < j ? RayPair{i, j} : RayPair{j, i}; }

/// Rank-2 projector onto the span of two orthogonal rays.
struct Plane {
  RayPair pair;        // sorted ray ids
  ExactMatrix matrix;  // P_i + P_j; idempotent, trace 2
};

/// Throws on i == j or a non-orthogonal pair (the sum would not project).
Plane make_plane(int i, int j, const RaySet& rays);

/// One rank-2 coarse-graining of a relation set: a perfect matching per
/// relation. Pair and slot order are kept as constructed (the bundled proof
/// preserves its printed layout, which fixes the hypergraph labels);
/// canonical_matchings is the order-free identity.
struct Rank2Proof {
  RelationSet relations;
  std::array<Matching, 15> matchings;
};

/// Pairs sorted, then slots sorted; two proofs are equal iff these agree.
std::array<Matching, 15> canonical_matchings(const Rank2Proof& proof);

/// Distinct plane -> number of occurrences over the 15 matchings.
std::map<RayPair, int> plane_multiplicities(const Rank2Proof& proof);

/// The published fifteen-row pairing (printed slot order).
Rank2Proof published_rank2_proof();

struct Rank2Report {
  std::array<bool, 15> matches_relation{};   // matching partitions its relation's ids
  std::array<bool, 15> pairs_orthogonal{};   // all 4 pairs have dot 0
  std::array<bool, 15> sums_to_identity{};   // 4 plane matrices add up to I
  int distinct_planes = 0;
  bool multiplicities_all_even = false;
  ParityCertificate parity;  // over the induced plane system
  bool unsat = false;        // complete search on the plane system
  bool all_ok() const;
};

/// Full verification; report-style, never throws on a bad proof.
Rank2Report verify_rank2_proof(const Rank2Proof& proof, const RaySet& rays);

/// Plane -> outcome id 1..n in lexicographic pair order.
std::map<RayPair, int> plane_ids(const Rank2Proof& proof);

/// The proof's abstract system: outcomes = plane ids, contexts = matchings.
IncidenceSystem to_incidence_system(const Rank2Proof& proof);

using MatchingFamily = std::vector<Matching>;  // one matching per relation

struct EnumerationResult {
  /// Every even-multiplicity matching family, canonical form, DFS order.
  std::vector<MatchingFamily> proofs;
  std::map<int, int> distinct_plane_histogram;  // distinct planes -> proof count

  int index_of(const Rank2Proof& proof) const;  // -1 when absent
};

/// Complete depth-first enumeration over per-relation perfect matchings with
/// pair-parity pruning (a pair can only regain even multiplicity in a later
/// relation containing both endpoints — the pruning is exact). Relations are
/// verified complete first; throws invalid_argument otherwise.
EnumerationResult enumerate_rank2_proofs(std::span<const std::array<int, 8>> relations,
                                         const RaySet& rays);
EnumerationResult enumerate_rank2_proofs(const RelationSet& rs, const RaySet& rays);

/// All 105 perfect matchings of 8 ids, canonical form, deterministic order.
std::vector<Matching> perfect_matchings(const std::array<int, 8>& ids);

nlohmann::ordered_json proof_to_json(const Rank2Proof& proof);

}  // namespace kspec
