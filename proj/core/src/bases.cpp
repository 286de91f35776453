#include "kspec/bases.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace kspec {

RelationSet published_relations_rank1() {
  return {{{
              {1, 2, 3, 4, 5, 6, 7, 8},
              {9, 10, 11, 12, 13, 14, 15, 16},
              {17, 18, 19, 20, 21, 22, 23, 24},
              {25, 26, 27, 28, 29, 30, 31, 32},
              {33, 34, 35, 36, 37, 38, 39, 40},
              {1, 2, 3, 4, 13, 14, 15, 16},
              {1, 2, 5, 6, 21, 22, 23, 24},
              {1, 3, 5, 7, 29, 30, 31, 32},
              {2, 3, 5, 8, 33, 34, 35, 36},
              {9, 10, 13, 14, 19, 20, 23, 24},
              {9, 11, 13, 15, 27, 28, 31, 32},
              {9, 12, 14, 15, 34, 36, 38, 39},
              {17, 19, 21, 23, 26, 28, 30, 32},
              {18, 19, 21, 24, 33, 34, 38, 40},
              {25, 28, 30, 31, 33, 36, 37, 38},
          }},
          "published"};
}

CompletenessResult verify_completeness(std::span<const int> ids, const RaySet& rays) {
  ExactMatrix sum = ExactMatrix::zero(8);
  for (int id : ids) sum = sum + ExactMatrix::projector(rays.ray(id).components);
  ExactMatrix residual = sum - ExactMatrix::identity(8);
  return {residual.is_zero(), residual};
}

std::map<int, int> occurrence_counts(const RelationSet& rs) {
  std::map<int, int> counts;
  for (const auto& rel : rs.relations)
    for (int id : rel) ++counts[id];
  return counts;
}

const std::array<int, 20>& quadruple_occurrence_ids() {
  static const std::array<int, 20> ids = {1,  2,  3,  5,  9,  13, 14, 15, 19, 21,
                                          23, 24, 28, 30, 31, 32, 33, 34, 36, 38};
  return ids;
}

std::vector<std::array<int, 8>> enumerate_orthogonal_octads(const RaySet& rays) {
  // Orthogonality graph as one adjacency bitmask per ray (40 < 64 bits);
  // ordered DFS emits each 8-clique exactly once, ascending.
  std::array<std::uint64_t, 41> adj{};
  for (int i = 1; i <= 40; ++i)
    for (int j = 1; j <= 40; ++j)
      if (i != j && dot(rays.ray(i).components, rays.ray(j).components) == 0)
        adj[i] |= std::uint64_t{1} << j;

  std::vector<std::array<int, 8>> found;
  std::array<int, 8> cur{};
  auto extend = [&](auto&& self, int depth, int start, std::uint64_t common) -> void {
    if (depth == 8) {
      found.push_back(cur);
      return;
    }
    for (int v = start; v <= 40 - (7 - depth); ++v) {
      if (!(common >> v & 1)) continue;
      cur[depth] = v;
      self(self, depth + 1, v + 1, common & adj[v]);
    }
  };
  extend(extend, 0, 1, ~std::uint64_t{0});
  std::sort(found.begin(), found.end());

  for (const auto& o : found)
    if (!verify_completeness(o, rays).complete)
      throw std::runtime_error("enumerate_orthogonal_octads: octad does not sum to I");
  return found;
}

nlohmann::ordered_json relations_to_json(const RelationSet& rs) {
  nlohmann::ordered_json out;
  out["source"] = rs.source;
  out["relations"] = rs.relations;
  return out;
}

nlohmann::ordered_json octads_to_json(const std::vector<std::array<int, 8>>& octads) {
  return nlohmann::ordered_json(octads);
}

}  // namespace kspec
