#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kspec/bases.hpp"

namespace kspec {

/// Abstract outcomes grouped into contexts; the shared substrate for the
/// rank-1 and rank-2 unsatisfiability arguments and for user-supplied sets.
struct IncidenceSystem {
  std::vector<int> outcomes;               // distinct ids, ascending
  std::vector<std::vector<int>> contexts;  // ids per context, each sorted
  int outcome_rank = 0;                    // projector rank, 0 when abstract
  int dimension = 0;                       // Hilbert-space dimension, 0 when abstract
};

/// Build a system from raw contexts; outcomes are the ids that appear.
/// Throws on an empty context list or an empty context.
IncidenceSystem make_system(std::vector<std::vector<int>> contexts, int outcome_rank = 0,
                            int dimension = 0);

/// The rank-1 system: 40 outcomes, one context per relation.
IncidenceSystem from_relations(const RelationSet& rs);

/// {0,1} valuation, stored as the set of outcomes valued 1.
struct Assignment {
  std::set<int> ones;
  int value(int id) const { return ones.count(id) ? 1 : 0; }
};

/// True iff every context contains exactly one outcome valued 1.
bool satisfies_exactly_one(const IncidenceSystem& sys, const Assignment& a);
/// Number of contexts containing exactly one outcome valued 1.
int count_satisfied_contexts(const IncidenceSystem& sys, const Assignment& a);

struct ParityCertificate {
  bool is_parity_proof = false;  // all_even && odd_context_count
  bool all_even = false;
  bool odd_context_count = false;
  std::map<int, int> multiplicity;  // outcome -> number of containing contexts
};

/// Parity argument: if every outcome occurs an even number of times and the
/// context count is odd, summing the exactly-one constraints gives
/// even = odd, so no satisfying assignment exists.
ParityCertificate check_parity_proof(const IncidenceSystem& sys);

/// Complete backtracking search with unit propagation over the exactly-one
/// constraints; nullopt is an exhaustive UNSAT, not a timeout.
std::optional<Assignment> search_assignment(const IncidenceSystem& sys);

struct MaxSatResult {
  int max_contexts = 0;
  Assignment witness;
};

/// Largest number of contexts any assignment satisfies, by descending-size
/// subset search over contexts, each subset decided by complete search.
MaxSatResult max_satisfiable_contexts(const IncidenceSystem& sys);

/// Independent confirmation: scan all 2^|outcomes| assignments (outcome count
/// capped at 30; throws beyond that).
int max_satisfiable_contexts_bruteforce(const IncidenceSystem& sys);

/// Parse {"outcomes":[...], "contexts":[[...]]}; outcomes may be omitted, ids
/// are then collected from the contexts. Throws invalid_argument on ill-formed
/// input (wrong shape, empty context, context id missing from outcomes).
IncidenceSystem system_from_json(const nlohmann::json& j);

nlohmann::ordered_json system_to_json(const IncidenceSystem& sys);

}  // namespace kspec
