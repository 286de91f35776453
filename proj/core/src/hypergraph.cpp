#include "kspec/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kspec {

std::map<int, RayPair> relabel_planes(const Rank2Proof& proof) {
  if (canonical_matchings(proof) != canonical_matchings(published_rank2_proof()))
    throw std::invalid_argument("relabel_planes: labeling is defined only for the bundled pairing");

  std::map<int, RayPair> labels;
  std::map<RayPair, int> assigned;
  for (int k = 0; k < 5; ++k)  // first appearance over the five pure rows
    for (const auto& p : proof.matchings[k]) {
      const RayPair sp = sorted_pair(p[0], p[1]);
      if (!assigned.count(sp)) {
        const int label = static_cast<int>(assigned.size()) + 1;
        assigned[sp] = label;
        labels[label] = sp;
      }
    }
  if (assigned.size() != 20)
    throw std::invalid_argument("relabel_planes: expected 20 planes in the pure rows");

  const std::array<RayPair, 10> hybrid_order = {{{1, 2},
                                                 {3, 5},
                                                 {9, 13},
                                                 {14, 15},
                                                 {19, 21},
                                                 {28, 30},
                                                 {23, 24},
                                                 {31, 32},
                                                 {34, 36},
                                                 {33, 38}}};
  for (int k = 0; k < 10; ++k) {
    if (assigned.count(hybrid_order[k]))
      throw std::invalid_argument("relabel_planes: hybrid plane already labeled");
    assigned[hybrid_order[k]] = 21 + k;
    labels[21 + k] = hybrid_order[k];
  }
  for (const auto& [pair, count] : plane_multiplicities(proof))
    if (!assigned.count(pair))
      throw std::invalid_argument("relabel_planes: proof plane missing from label scheme");
  return labels;
}

PlaneHypergraph build_hypergraph(const Rank2Proof& proof, const std::map<int, RayPair>& labels,
                                 const RaySet& rays) {
  if (labels.size() != 30) throw std::invalid_argument("build_hypergraph: need 30 labels");
  PlaneHypergraph hg;
  std::map<RayPair, int> label_of;
  std::array<ExactMatrix, 30> mats;
  for (const auto& [label, pair] : labels) {
    if (label < 1 || label > 30) throw std::invalid_argument("build_hypergraph: label out of 1..30");
    hg.vertex_planes[label - 1] = pair;
    label_of[pair] = label;
    mats[label - 1] = make_plane(pair[0], pair[1], rays).matrix;
  }
  for (int u = 1; u <= 30; ++u)
    for (int v = u + 1; v <= 30; ++v)
      if ((mats[u - 1] * mats[v - 1]).is_zero()) hg.edges.push_back({u, v});
  for (int k = 0; k < 15; ++k) {
    for (int s = 0; s < 4; ++s) {
      const auto& p = proof.matchings[k][s];
      hg.hyperedges[k][s] = label_of.at(sorted_pair(p[0], p[1]));
    }
    std::sort(hg.hyperedges[k].begin(), hg.hyperedges[k].end());
  }
  return hg;
}

std::string export_dot(const PlaneHypergraph& hg) {
  std::ostringstream os;
  os << "graph planes {\n";
  os << "  // vertex = rank-2 projector, edge = matrix product zero\n";
  for (int label = 1; label <= 30; ++label) {
    const RayPair& p = hg.vertex_planes[label - 1];
    os << "  " << label << " [label=\"" << label << ": {" << p[0] << "," << p[1] << "}\"];\n";
  }
  for (const auto& e : hg.edges) os << "  " << e[0] << " -- " << e[1] << ";\n";
  for (int k = 0; k < 15; ++k) {
    const auto& h = hg.hyperedges[k];
    os << "  // hyperedge " << k + 1 << ": {" << h[0] << ", " << h[1] << ", " << h[2] << ", "
       << h[3] << "}\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json export_json(const PlaneHypergraph& hg) {
  nlohmann::ordered_json out;
  out["vertices"] = nlohmann::ordered_json::array();
  for (int label = 1; label <= 30; ++label) {
    nlohmann::ordered_json v;
    v["label"] = label;
    v["pair"] = hg.vertex_planes[label - 1];
    out["vertices"].push_back(v);
  }
  out["edges"] = hg.edges;
  out["hyperedges"] = hg.hyperedges;
  return out;
}

std::string export_hypergraph(const PlaneHypergraph& hg, std::string_view format) {
  if (format == "dot") return export_dot(hg);
  if (format == "json") return export_json(hg).dump(2) + "\n";
  throw std::invalid_argument("export_hypergraph: unknown format '" + std::string(format) + "'");
}

PlaneHypergraph hypergraph_from_json(const nlohmann::json& j) {
  PlaneHypergraph hg;
  try {
    const auto& verts = j.at("vertices");
    if (!verts.is_array() || verts.size() != 30)
      throw std::invalid_argument("hypergraph: need 30 vertices");
    for (const auto& v : verts) {
      const int label = v.at("label").get<int>();
      if (label < 1 || label > 30) throw std::invalid_argument("hypergraph: label out of 1..30");
      hg.vertex_planes[label - 1] = {v.at("pair").at(0).get<int>(), v.at("pair").at(1).get<int>()};
    }
    for (const auto& e : j.at("edges"))
      hg.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    const auto& hyper = j.at("hyperedges");
    if (!hyper.is_array() || hyper.size() != 15)
      throw std::invalid_argument("hypergraph: need 15 hyperedges");
    for (std::size_t k = 0; k < 15; ++k)
      for (int s = 0; s < 4; ++s) hg.hyperedges[k][s] = hyper.at(k).at(s).get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("hypergraph: ill-formed JSON: ") + e.what());
  }
  return hg;
}

}  // namespace kspec
