#include "kspec/rank2.hpp"

#include <algorithm>
#include <stdexcept>

namespace kspec {

Plane make_plane(int i, int j, const RaySet& rays) {
  if (i == j) throw std::invalid_argument("make_plane: equal ray ids");
  if (dot(rays.ray(i).components, rays.ray(j).components) != 0)
    throw std::invalid_argument("make_plane: rays " + std::to_string(i) + "," +
                                std::to_string(j) + " are not orthogonal");
  return {sorted_pair(i, j), ExactMatrix::projector(rays.ray(i).components) +
                                 ExactMatrix::projector(rays.ray(j).components)};
}

std::array<Matching, 15> canonical_matchings(const Rank2Proof& proof) {
  std::array<Matching, 15> out;
  for (int k = 0; k < 15; ++k) {
    Matching m;
    for (int s = 0; s < 4; ++s) m[s] = sorted_pair(proof.matchings[k][s][0], proof.matchings[k][s][1]);
    std::sort(m.begin(), m.end());
    out[k] = m;
  }
  return out;
}

std::map<RayPair, int> plane_multiplicities(const Rank2Proof& proof) {
  std::map<RayPair, int> mult;
  for (const auto& m : proof.matchings)
    for (const auto& p : m) ++mult[sorted_pair(p[0], p[1])];
  return mult;
}

Rank2Proof published_rank2_proof() {
  // Printed slot order preserved: labels 1..20 of the plane hypergraph are
  // assigned by first appearance across the first five rows.
  return {published_relations_rank1(),
          {{
              {{{1, 7}, {2, 8}, {3, 4}, {5, 6}}},
              {{{9, 12}, {13, 16}, {14, 10}, {15, 11}}},
              {{{19, 20}, {21, 22}, {23, 17}, {24, 18}}},
              {{{28, 27}, {30, 29}, {31, 25}, {32, 26}}},
              {{{33, 35}, {34, 40}, {36, 37}, {38, 39}}},
              {{{1, 2}, {3, 4}, {13, 16}, {14, 15}}},
              {{{1, 2}, {5, 6}, {21, 22}, {23, 24}}},
              {{{3, 5}, {1, 7}, {30, 29}, {31, 32}}},
              {{{3, 5}, {2, 8}, {33, 35}, {34, 36}}},
              {{{14, 10}, {9, 13}, {19, 20}, {23, 24}}},
              {{{15, 11}, {9, 13}, {28, 27}, {31, 32}}},
              {{{9, 12}, {14, 15}, {38, 39}, {34, 36}}},
              {{{23, 17}, {19, 21}, {32, 26}, {28, 30}}},
              {{{24, 18}, {19, 21}, {34, 40}, {33, 38}}},
              {{{31, 25}, {28, 30}, {36, 37}, {33, 38}}},
          }}};
}

bool Rank2Report::all_ok() const {
  for (int k = 0; k < 15; ++k)
    if (!matches_relation[k] || !pairs_orthogonal[k] || !sums_to_identity[k]) return false;
  return multiplicities_all_even && parity.is_parity_proof && unsat;
}

Rank2Report verify_rank2_proof(const Rank2Proof& proof, const RaySet& rays) {
  Rank2Report rep;
  const ExactMatrix id = ExactMatrix::identity(8);
  for (int k = 0; k < 15; ++k) {
    const Matching& m = proof.matchings[k];
    std::array<int, 8> flat{};
    for (int s = 0; s < 4; ++s) {
      flat[2 * s] = m[s][0];
      flat[2 * s + 1] = m[s][1];
    }
    std::sort(flat.begin(), flat.end());
    std::array<int, 8> rel = proof.relations.relations[k];
    std::sort(rel.begin(), rel.end());
    rep.matches_relation[k] = flat == rel;

    rep.pairs_orthogonal[k] = true;
    for (const auto& p : m)
      if (p[0] == p[1] || dot(rays.ray(p[0]).components, rays.ray(p[1]).components) != 0)
        rep.pairs_orthogonal[k] = false;
    if (rep.pairs_orthogonal[k]) {
      ExactMatrix sum = ExactMatrix::zero(8);
      for (const auto& p : m) sum = sum + make_plane(p[0], p[1], rays).matrix;
      rep.sums_to_identity[k] = sum == id;
    }
  }
  const auto mult = plane_multiplicities(proof);
  rep.distinct_planes = static_cast<int>(mult.size());
  rep.multiplicities_all_even =
      std::all_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.second % 2 == 0; });
  const IncidenceSystem sys = to_incidence_system(proof);
  rep.parity = check_parity_proof(sys);
  rep.unsat = !search_assignment(sys).has_value();
  return rep;
}

std::map<RayPair, int> plane_ids(const Rank2Proof& proof) {
  std::map<RayPair, int> ids;
  for (const auto& [pair, count] : plane_multiplicities(proof)) {
    const int next = static_cast<int>(ids.size()) + 1;
    ids[pair] = next;  // std::map iterates pairs lexicographically
  }
  return ids;
}

IncidenceSystem to_incidence_system(const Rank2Proof& proof) {
  const auto ids = plane_ids(proof);
  std::vector<std::vector<int>> contexts;
  for (const auto& m : proof.matchings) {
    std::vector<int> c;
    for (const auto& p : m) c.push_back(ids.at(sorted_pair(p[0], p[1])));
    contexts.push_back(std::move(c));
  }
  return make_system(std::move(contexts), 2, 8);
}

std::vector<Matching> perfect_matchings(const std::array<int, 8>& ids) {
  std::array<int, 8> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Matching> out;
  Matching cur{};
  auto rec = [&](auto&& self, std::vector<int> elems, int depth) -> void {
    if (elems.empty()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 1; k < elems.size(); ++k) {
      cur[depth] = {elems[0], elems[k]};
      std::vector<int> rest;
      for (std::size_t t = 1; t < elems.size(); ++t)
        if (t != k) rest.push_back(elems[t]);
      self(self, std::move(rest), depth + 1);
    }
  };
  rec(rec, std::vector<int>(sorted.begin(), sorted.end()), 0);
  return out;  // pairs (i,j) with i<j, slots ascending by first id: canonical
}

int EnumerationResult::index_of(const Rank2Proof& proof) const {
  const auto canon = canonical_matchings(proof);
  const MatchingFamily family(canon.begin(), canon.end());
  const auto it = std::find(proofs.begin(), proofs.end(), family);
  return it == proofs.end() ? -1 : static_cast<int>(it - proofs.begin());
}

EnumerationResult enumerate_rank2_proofs(std::span<const std::array<int, 8>> relations,
                                         const RaySet& rays) {
  for (const auto& rel : relations)
    if (!verify_completeness(rel, rays).complete)
      throw std::invalid_argument("enumerate_rank2_proofs: relation is not a completeness relation");

  const int n = static_cast<int>(relations.size());
  std::vector<std::vector<Matching>> options;
  for (const auto& rel : relations) options.push_back(perfect_matchings(rel));

  // For each unordered pair, the last relation containing both endpoints:
  // past that point an odd multiplicity can never become even again.
  std::map<RayPair, int> last_chance;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        last_chance[sorted_pair(relations[k][a], relations[k][b])] = k;

  EnumerationResult result;
  std::map<RayPair, int> mult;
  MatchingFamily chosen(n);
  auto dfs = [&](auto&& self, int k) -> void {
    if (k == n) {
      for (const auto& [pair, c] : mult)
        if (c % 2) return;  // unreachable past the pruning, kept as a guard
      result.proofs.push_back(chosen);
      int distinct = 0;
      for (const auto& [pair, c] : mult) distinct += c > 0;
      ++result.distinct_plane_histogram[distinct];
      return;
    }
    for (const Matching& m : options[k]) {
      for (const auto& p : m) ++mult[p];
      bool feasible = true;
      for (const auto& [pair, c] : mult)
        if (c % 2 == 1 && last_chance.at(pair) <= k) {
          feasible = false;
          break;
        }
      if (feasible) {
        chosen[k] = m;
        self(self, k + 1);
      }
      for (const auto& p : m) --mult[p];
    }
  };
  dfs(dfs, 0);
  return result;
}

EnumerationResult enumerate_rank2_proofs(const RelationSet& rs, const RaySet& rays) {
  return enumerate_rank2_proofs(std::span<const std::array<int, 8>>(rs.relations), rays);
}

nlohmann::ordered_json proof_to_json(const Rank2Proof& proof) {
  nlohmann::ordered_json out;
  out["relations"] = nlohmann::ordered_json::array();
  for (int k = 0; k < 15; ++k) {
    nlohmann::ordered_json rel;
    rel["id"] = k + 1;
    rel["pairs"] = proof.matchings[k];
    out["relations"].push_back(rel);
  }
  out["planes"] = nlohmann::ordered_json::array();
  for (const auto& [pair, count] : plane_multiplicities(proof)) {
    nlohmann::ordered_json p;
    p["pair"] = pair;
    p["multiplicity"] = count;
    out["planes"].push_back(p);
  }
  return out;
}

}  // namespace kspec
