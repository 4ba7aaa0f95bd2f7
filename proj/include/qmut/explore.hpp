#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qmut/canonical.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

/// Search bounds. Exploration may not terminate without them: mutation
/// classes can be infinite and some equivalence questions have no known
/// decision procedure, so every cap is an honest part of the result.
struct Budget {
  std::size_t max_quivers = 50000;  // distinct canonical forms visited
  int max_depth = 64;               // mutation-word length
  Entry max_entry = 1000000000;     // |entry| cap before a branch is dropped

  bool valid() const {
    return max_quivers > 0 && max_depth > 0 && max_entry > 0;
  }
};

enum class Truncation { MaxQuivers, MaxDepth, MaxEntry };

struct ClassEntry {
  CanonicalForm form;
  MutationSequence witness;  // shortest word from the seed, first found
};

/// Result of a class exploration. complete is only ever true when the
/// frontier emptied with no branch dropped, so a complete report is a
/// proof that representatives is the entire mutation class.
struct ClassReport {
  std::vector<ClassEntry> representatives;
  bool complete = false;
  std::vector<Truncation> truncated_reasons;  // deduplicated, in enum order
};

/// Breadth-first closure of the mutation class of seed, deduplicated by
/// canonical form (hash first, full matrix on collision). Vertices are
/// mutated in increasing order and the frontier is FIFO, so output order
/// and witnesses are reproducible; witnesses are shortest words. A branch
/// that overflows or exceeds max_entry is dropped and recorded, never an
/// error.
ClassReport explore(const Quiver& seed, const Budget& budget = {});

struct EquivalenceOutcome {
  enum class Kind { Yes, No, Unknown };
  Kind kind;
  MutationSequence witness;  // Yes: replays from the first quiver onto the
                             // second up to isomorphism
  ClassReport report;
};

/// Semi-decision of mutation equivalence: Yes with a witness word when the
/// second quiver's canonical form shows up while exploring the first, No
/// only when that exploration completed without meeting it, Unknown when a
/// budget bound.
EquivalenceOutcome mutation_equivalent(const Quiver& a, const Quiver& b,
                                       const Budget& budget = {});

struct AcyclicSearch {
  std::optional<Quiver> acyclic;  // a reached acyclic quiver, if any
  MutationSequence witness;       // word from the seed onto *acyclic
  ClassReport report;

  bool found() const { return acyclic.has_value(); }
};

/// explore() that stops at the first acyclic representative. When nothing
/// acyclic turns up, a complete report proves the seed mutation-cyclic; an
/// incomplete one proves nothing.
AcyclicSearch find_acyclic(const Quiver& seed, const Budget& budget = {});

}  // namespace qmut
