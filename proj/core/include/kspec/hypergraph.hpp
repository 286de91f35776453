#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kspec/rank2.hpp"

namespace kspec {

/// Orthogonality structure of the 30 planes of the bundled rank-2 proof:
/// vertices are relabeled planes, an edge means the two plane matrices
/// multiply to zero, and each hyperedge is one four-plane completeness
/// relation.
struct PlaneHypergraph {
  std::array<RayPair, 30> vertex_planes{};        // label - 1 -> underlying ray pair
  std::vector<std::array<int, 2>> edges;          // sorted label pairs, lexicographic
  std::array<std::array<int, 4>, 15> hyperedges{};  // labels ascending per relation

  bool operator==(const PlaneHypergraph&) const = default;
};

/// Label scheme of the bundled proof: 1..20 by first appearance across the
/// first five matchings (printed slot order), 21..30 for the ten planes that
/// only occur in the hybrid rows, in their published order. Throws
/// invalid_argument for any other proof — the scheme is defined only here.
std::map<int, RayPair> relabel_planes(const Rank2Proof& proof);

PlaneHypergraph build_hypergraph(const Rank2Proof& proof, const std::map<int, RayPair>& labels,
                                 const RaySet& rays);

std::string export_dot(const PlaneHypergraph& hg);
nlohmann::ordered_json export_json(const PlaneHypergraph& hg);
/// format is "dot" or "json"; anything else throws invalid_argument.
std::string export_hypergraph(const PlaneHypergraph& hg, std::string_view format);

/// Inverse of export_json; throws invalid_argument on ill-formed input.
PlaneHypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace kspec
