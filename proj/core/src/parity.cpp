#include "kspec/parity.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>

namespace kspec {

IncidenceSystem make_system(std::vector<std::vector<int>> contexts, int outcome_rank,
                            int dimension) {
  if (contexts.empty()) throw std::invalid_argument("make_system: no contexts");
  IncidenceSystem sys;
  std::set<int> ids;
  for (auto& c : contexts) {
    if (c.empty()) throw std::invalid_argument("make_system: empty context");
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    ids.insert(c.begin(), c.end());
  }
  sys.contexts = std::move(contexts);
  sys.outcomes.assign(ids.begin(), ids.end());
  sys.outcome_rank = outcome_rank;
  sys.dimension = dimension;
  return sys;
}

IncidenceSystem from_relations(const RelationSet& rs) {
  std::vector<std::vector<int>> ctx;
  for (const auto& rel : rs.relations) ctx.emplace_back(rel.begin(), rel.end());
  return make_system(std::move(ctx), 1, 8);
}

bool satisfies_exactly_one(const IncidenceSystem& sys, const Assignment& a) {
  return count_satisfied_contexts(sys, a) == static_cast<int>(sys.contexts.size());
}

int count_satisfied_contexts(const IncidenceSystem& sys, const Assignment& a) {
  int n = 0;
  for (const auto& c : sys.contexts) {
    int ones = 0;
    for (int id : c) ones += a.value(id);
    if (ones == 1) ++n;
  }
  return n;
}

ParityCertificate check_parity_proof(const IncidenceSystem& sys) {
  ParityCertificate cert;
  for (int id : sys.outcomes) cert.multiplicity[id] = 0;
  for (const auto& c : sys.contexts)
    for (int id : c) ++cert.multiplicity[id];
  cert.all_even = std::all_of(cert.multiplicity.begin(), cert.multiplicity.end(),
                              [](const auto& kv) { return kv.second % 2 == 0; });
  cert.odd_context_count = sys.contexts.size() % 2 == 1;
  cert.is_parity_proof = cert.all_even && cert.odd_context_count;
  return cert;
}

namespace {

/// Exactly-one-per-context backtracking over index-mapped outcomes.
/// Complete: branches exhaust the candidates of one unsatisfied context.
class ExactOneSearch {
 public:
  ExactOneSearch(const IncidenceSystem& sys, const std::vector<int>& active) {
    for (std::size_t k = 0; k < sys.outcomes.size(); ++k) index_[sys.outcomes[k]] = static_cast<int>(k);
    state_.assign(sys.outcomes.size(), -1);
    for (int k : active) {
      std::vector<int> c;
      for (int id : sys.contexts[k]) c.push_back(index_.at(id));
      ctx_.push_back(std::move(c));
    }
  }

  std::optional<std::vector<int>> run(const IncidenceSystem& sys) {
    if (!solve()) return std::nullopt;
    std::vector<int> ones;
    for (std::size_t k = 0; k < state_.size(); ++k)
      if (state_[k] == 1) ones.push_back(sys.outcomes[k]);
    return ones;
  }

 private:
  std::map<int, int> index_;
  std::vector<std::vector<int>> ctx_;
  std::vector<signed char> state_;  // -1 unset / 0 / 1
  std::vector<int> trail_;

  void assign(int v, signed char val) {
    state_[v] = val;
    trail_.push_back(v);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      state_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Force zeros next to a satisfied context and ones into single-candidate
  // contexts until a fixed point; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : ctx_) {
        int ones = 0, unset = 0;
        for (int v : c) {
          if (state_[v] == 1) ++ones;
          else if (state_[v] == -1) ++unset;
        }
        if (ones > 1 || (ones == 0 && unset == 0)) return false;
        if (ones == 1 && unset > 0) {
          for (int v : c)
            if (state_[v] == -1) assign(v, 0);
          changed = true;
        } else if (ones == 0 && unset == 1) {
          for (int v : c)
            if (state_[v] == -1) assign(v, 1);
          changed = true;
        }
      }
    }
    return true;
  }

  bool solve() {
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    // Branch on the unsatisfied context with the fewest candidates.
    const std::vector<int>* best = nullptr;
    int best_unset = INT_MAX;
    for (const auto& c : ctx_) {
      int ones = 0, unset = 0;
      for (int v : c) {
        if (state_[v] == 1) ++ones;
        else if (state_[v] == -1) ++unset;
      }
      if (ones == 1) continue;
      if (unset < best_unset) {
        best = &c;
        best_unset = unset;
      }
    }
    if (!best) return true;
    for (int v : *best) {
      if (state_[v] != -1) continue;
      const std::size_t branch = trail_.size();
      assign(v, 1);
      if (solve()) return true;
      undo(branch);
      assign(v, 0);  // exclusive branches: later candidates assume v == 0
    }
    undo(mark);
    return false;
  }
};

std::optional<Assignment> search_subset(const IncidenceSystem& sys,
                                        const std::vector<int>& active) {
  auto ones = ExactOneSearch(sys, active).run(sys);
  if (!ones) return std::nullopt;
  Assignment a;
  a.ones.insert(ones->begin(), ones->end());
  return a;
}

}  // namespace

std::optional<Assignment> search_assignment(const IncidenceSystem& sys) {
  std::vector<int> all(sys.contexts.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  return search_subset(sys, all);
}

MaxSatResult max_satisfiable_contexts(const IncidenceSystem& sys) {
  const int n = static_cast<int>(sys.contexts.size());
  // An assignment satisfying m contexts yields a satisfiable m-subset and
  // vice versa (unconstrained outcomes default to 0), so scanning subset
  // sizes downward finds the maximum.
  for (int size = n; size >= 1; --size) {
    std::vector<int> pick(size);
    for (int k = 0; k < size; ++k) pick[k] = k;
    while (true) {
      if (auto a = search_subset(sys, pick)) return {size, *a};
      int k = size - 1;
      while (k >= 0 && pick[k] == n - size + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {0, Assignment{}};
}

int max_satisfiable_contexts_bruteforce(const IncidenceSystem& sys) {
  const int n = static_cast<int>(sys.outcomes.size());
  if (n > 30) throw std::invalid_argument("bruteforce: more than 30 outcomes");
  std::map<int, int> index;
  for (int k = 0; k < n; ++k) index[sys.outcomes[k]] = k;
  std::vector<std::uint32_t> masks;
  for (const auto& c : sys.contexts) {
    std::uint32_t m = 0;
    for (int id : c) m |= std::uint32_t{1} << index.at(id);
    masks.push_back(m);
  }
  int best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    int sat = 0;
    for (std::uint32_t m : masks) sat += std::popcount(static_cast<std::uint32_t>(a) & m) == 1;
    if (sat > best) best = sat;
  }
  return best;
}

IncidenceSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("contexts") || !j["contexts"].is_array())
    throw std::invalid_argument("incidence system: need an object with a contexts array");
  std::vector<std::vector<int>> contexts;
  for (const auto& c : j["contexts"]) {
    if (!c.is_array()) throw std::invalid_argument("incidence system: context is not an array");
    std::vector<int> ids;
    for (const auto& v : c) {
      if (!v.is_number_integer())
        throw std::invalid_argument("incidence system: outcome id is not an integer");
      ids.push_back(v.get<int>());
    }
    contexts.push_back(std::move(ids));
  }
  IncidenceSystem sys = make_system(std::move(contexts), j.value("outcome_rank", 0),
                                    j.value("dimension", 0));
  if (j.contains("outcomes")) {
    if (!j["outcomes"].is_array())
      throw std::invalid_argument("incidence system: outcomes is not an array");
    std::set<int> declared;
    for (const auto& v : j["outcomes"]) {
      if (!v.is_number_integer())
        throw std::invalid_argument("incidence system: outcome id is not an integer");
      declared.insert(v.get<int>());
    }
    for (int id : sys.outcomes)
      if (!declared.count(id))
        throw std::invalid_argument("incidence system: context uses undeclared outcome " +
                                    std::to_string(id));
    for (int id : declared)
      if (!std::binary_search(sys.outcomes.begin(), sys.outcomes.end(), id))
        throw std::invalid_argument("incidence system: outcome " + std::to_string(id) +
                                    " appears in no context");
  }
  return sys;
}

nlohmann::ordered_json system_to_json(const IncidenceSystem& sys) {
  nlohmann::ordered_json out;
  out["outcomes"] = sys.outcomes;
  out["contexts"] = sys.contexts;
  if (sys.outcome_rank) out["outcome_rank"] = sys.outcome_rank;
  if (sys.dimension) out["dimension"] = sys.dimension;
  return out;
}

}  // namespace kspec
