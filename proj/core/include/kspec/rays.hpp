#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kspec/pentagram.hpp"

namespace kspec {

/// Primitive integer 8-vector in canonical sign form (gcd 1, first nonzero
/// component positive). Ids 1..40 follow the published table's numbering.
struct Ray {
  int id = 0;
  std::array<int, 8> components{};
  bool operator==(const Ray&) const = default;
};

/// gcd-reduce and sign-normalize; throws on the zero vector.
std::array<int, 8> canonicalize(std::span<const int> v);

inline int dot(const std::array<int, 8>& a, const std::array<int, 8>& b) {
  int s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

/// One joint eigenbasis: 8 canonical rays of a pentagram context.
struct Octad {
  int block = 0;       // 1..5, table block (ids 8*(block-1)+1 .. 8*block)
  int context_id = 0;  // 1..5, the pentagram context it diagonalizes
  std::array<Ray, 8> rays;
};

/// Joint eigenvectors of four commuting real observables, one per consistent
/// sign pattern. Each is extracted exactly from the rank-1 projector
/// Prod_i (I + s_i O_i)/2; throws if some nonzero product is not rank 1.
std::vector<std::array<int, 8>> common_eigenbasis(std::span<const PauliObservable> context);

/// The 40 rays with table ids plus the derived octad/context bookkeeping.
class RaySet {
 public:
  RaySet(std::array<Ray, 40> rays, std::array<int, 40> octad_of, std::array<int, 5> context_of_block);

  const Ray& ray(int id) const;           // id 1..40
  int octad_of(int id) const;             // table block 1..5
  int context_of_block(int block) const;  // block 1..5 -> pentagram context 1..5
  Octad octad(int block) const;
  const std::array<Ray, 40>& all() const { return rays_; }

 private:
  std::array<Ray, 40> rays_;
  std::array<int, 40> octad_of_;
  std::array<int, 5> context_of_block_;
};

/// A row of the published 40-ray table, as printed. Symbol count is usually 8
/// but is kept flexible: one row of the source table is malformed.
struct PrintedRow {
  int id = 0;
  std::vector<int> symbols;
};

/// The published table; rows 12, 14/15 and 16 carry transcription defects.
const std::array<PrintedRow, 40>& printed_table();

/// Derive the five octads from the pentagram contexts and assign table ids:
/// each unambiguous printed row names its derived ray; leftover slots take the
/// remaining rays of their octad in descending lexicographic order.
RaySet derive_all_rays(const Pentagram& p);

struct ReconcileReport {
  struct Suspect {
    int id = 0;
    std::string reason;
    std::vector<int> printed;
    std::array<int, 8> derived_replacement{};
  };
  std::vector<int> matched_ids;   // printed row == derived ray (up to sign/scale)
  std::vector<Suspect> suspects;  // rows overridden by derivation
  bool fully_reconciled() const { return matched_ids.size() + suspects.size() == 40; }
};

/// Match derived rays against the printed rows; flags malformed rows,
/// duplicated rows and rows that contradict their octad.
ReconcileReport reconcile_with_table(const RaySet& rays,
                                     const std::array<PrintedRow, 40>& table);

nlohmann::ordered_json rays_to_json(const RaySet& rays);

}  // namespace kspec
