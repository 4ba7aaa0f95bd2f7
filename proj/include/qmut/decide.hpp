#pragma once

#include <array>
#include <memory>
#include <optional>

#include "qmut/explore.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

/// Machine-checkable evidence that a quiver is mutation-cyclic. Three
/// shapes:
///
///  - ThreeVertexInvariant: the named three vertices induce a cyclically
///    oriented subquiver with multiplicities (a, b, c), all >= 2, whose
///    mutation-invariant constant a^2 + b^2 + c^2 - abc is at most 4. No
///    mutation can reach an acyclic quiver from such a triangle.
///  - CyclicSubquiver: the full subquiver on the named vertices is itself
///    mutation-cyclic, certified recursively by inner (indices there are
///    local to the subquiver). A quiver containing a mutation-cyclic full
///    subquiver is mutation-cyclic.
///  - ExhaustedClass: a complete class report with no acyclic member.
///
/// Certificates are validated by check_certificate without trusting the
/// decision pipeline that produced them.
struct Certificate {
  enum class Kind { ThreeVertexInvariant, CyclicSubquiver, ExhaustedClass };

  Kind kind;
  std::vector<int> vertices;           // invariant leaf / subquiver subset
  std::array<Entry, 3> weights{};      // invariant leaf: (|b(v0,v1)|,
                                       //  |b(v1,v2)|, |b(v2,v0)|)
  Entry constant = 0;                  // invariant leaf
  std::shared_ptr<const Certificate> inner;   // subquiver recursion
  std::shared_ptr<const ClassReport> report;  // exhausted class
};

struct Verdict {
  enum class Kind { MutationAcyclic, MutationCyclic, Unknown };

  Kind kind;
  MutationSequence witness;                   // MutationAcyclic: replays
                                              // from the input onto an
                                              // acyclic quiver
  std::optional<Certificate> certificate;     // MutationCyclic
  std::shared_ptr<const ClassReport> report;  // Unknown: what the budget
                                              // allowed before it bound
  // Pipeline stage that settled the verdict when produced by decide():
  // 1 input already acyclic, 2 three-vertex subquiver certificate,
  // 3 class exploration, 4 subquiver recursion, 5 nothing decided.
  // 0 for verdicts built elsewhere.
  int stage = 0;
};

/// The mutation invariant of a 3-vertex quiver with unordered
/// multiplicities a = |b(0,1)|, b = |b(1,2)|, c = |b(2,0)|:
/// a^2 + b^2 + c^2 - abc when the orientation is cyclic, + abc otherwise.
/// Throws std::invalid_argument unless n = 3, OverflowError if the value
/// leaves the Entry range.
Entry markov_constant(const Quiver& q);

/// Total decision for 3-vertex quivers, never Unknown: MutationCyclic with
/// a ThreeVertexInvariant certificate when the orientation is cyclic, all
/// multiplicities are >= 2 and the constant is <= 4; MutationAcyclic with
/// a witness from find_acyclic otherwise.
Verdict decide_three_vertex(const Quiver& q, const Budget& budget = {});

/// Semi-decision pipeline for mutation-acyclicity, earlier stages win:
///   1. acyclic input            -> MutationAcyclic, empty witness
///   2. certified 3-vertex full subquiver (all triples, ascending)
///                               -> MutationCyclic without any exploration
///   3. find_acyclic             -> MutationAcyclic with witness, or
///      (complete, no acyclic)   -> MutationCyclic with ExhaustedClass
///   4. recursion on proper subquivers of size >= 4 under a sub-budget,
///      enabled by recurse_subquivers levels (default off)
///   5. Unknown with the stage-3 report
Verdict decide(const Quiver& q, const Budget& budget = {},
               int recurse_subquivers = 0);

/// Recomputes every claim a certificate makes against q. Malformed
/// certificates yield false, never an exception.
bool check_certificate(const Quiver& q, const Certificate& c);

}  // namespace qmut
