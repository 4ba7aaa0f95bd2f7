#include "qmut/explore.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace qmut {

namespace {

struct Node {
  Quiver quiver;  // as reached from the seed, so witnesses replay exactly
  MutationSequence witness;
};

// Called once per newly discovered representative, seed included; returning
// true stops the search.
using StopFn = std::function<bool(const Quiver&, const ClassEntry&)>;

class Search {
public:
  Search(const Quiver& seed, const Budget& budget) : budget_(budget) {
    if (!budget.valid())
      throw std::invalid_argument("budget caps must be positive");
    CanonicalForm form = canonicalize(seed);
    index_by_hash_[form.hash].push_back(0);
    report_.representatives.push_back({std::move(form), {}});
    frontier_.push_back({seed, {}});
  }

  void run(const StopFn& stop) {
    if (stop && stop(frontier_.front().quiver, report_.representatives[0]))
      return;
    while (!frontier_.empty()) {
      Node node = std::move(frontier_.front());
      frontier_.pop_front();
      const int depth = static_cast<int>(node.witness.size());
      if (depth >= budget_.max_depth) {
        truncate(Truncation::MaxDepth);
        continue;
      }
      const int n = node.quiver.size();
      for (int k = 0; k < n; ++k) {
        Quiver next;
        try {
          next = mutate(node.quiver, k);
        } catch (const OverflowError&) {
          truncate(Truncation::MaxEntry);
          continue;
        }
        if (next.max_abs_entry() > budget_.max_entry) {
          truncate(Truncation::MaxEntry);
          continue;
        }
        CanonicalForm form = canonicalize(next);
        if (known(form)) continue;
        if (report_.representatives.size() >= budget_.max_quivers) {
          truncate(Truncation::MaxQuivers);
          return;
        }
        MutationSequence witness = node.witness;
        witness.push_back(k);
        index_by_hash_[form.hash].push_back(report_.representatives.size());
        report_.representatives.push_back({std::move(form), witness});
        frontier_.push_back({std::move(next), std::move(witness)});
        if (stop && stop(frontier_.back().quiver,
                         report_.representatives.back())) {
          return;
        }
      }
    }
    report_.complete = report_.truncated_reasons.empty();
  }

  ClassReport take_report() && { return std::move(report_); }

private:
  // Hash lookup with full-matrix confirmation, so correctness never leans
  // on hash injectivity.
  bool known(const CanonicalForm& form) const {
    auto it = index_by_hash_.find(form.hash);
    if (it == index_by_hash_.end()) return false;
    for (std::size_t id : it->second) {
      if (report_.representatives[id].form.matrix == form.matrix) return true;
    }
    return false;
  }

  void truncate(Truncation reason) {
    auto& rs = report_.truncated_reasons;
    if (std::find(rs.begin(), rs.end(), reason) == rs.end()) {
      rs.push_back(reason);
      std::sort(rs.begin(), rs.end());
    }
  }

  Budget budget_;
  ClassReport report_;
  std::deque<Node> frontier_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_by_hash_;
};

}  // namespace

ClassReport explore(const Quiver& seed, const Budget& budget) {
  Search search(seed, budget);
  search.run(nullptr);
  return std::move(search).take_report();
}

EquivalenceOutcome mutation_equivalent(const Quiver& a, const Quiver& b,
                                       const Budget& budget) {
  EquivalenceOutcome out{EquivalenceOutcome::Kind::Unknown, {}, {}};
  if (a.size() != b.size()) {
    out.kind = EquivalenceOutcome::Kind::No;
    return out;
  }
  const CanonicalForm target = canonicalize(b);
  bool hit = false;
  Search search(a, budget);
  search.run([&](const Quiver&, const ClassEntry& entry) {
    if (entry.form.hash != target.hash || entry.form.matrix != target.matrix)
      return false;
    hit = true;
    out.witness = entry.witness;
    return true;
  });
  out.report = std::move(search).take_report();
  if (hit) {
    out.kind = EquivalenceOutcome::Kind::Yes;
  } else if (out.report.complete) {
    out.kind = EquivalenceOutcome::Kind::No;
  }
  return out;
}

AcyclicSearch find_acyclic(const Quiver& seed, const Budget& budget) {
  AcyclicSearch out;
  Search search(seed, budget);
  search.run([&](const Quiver& reached, const ClassEntry& entry) {
    if (!is_acyclic(reached)) return false;
    out.acyclic = reached;
    out.witness = entry.witness;
    return true;
  });
  out.report = std::move(search).take_report();
  return out;
}

}  // namespace qmut
