#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmut {

using Entry = std::int64_t;

/// A mutation word: vertex indices applied left to right.
using MutationSequence = std::vector<int>;

/// Raised when an arrow-count computation leaves the range of Entry.
/// Arrow multiplicities can grow doubly exponentially under repeated
/// mutation, so every product and sum is checked.
class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite loop-free, two-cycle-free multidigraph stored as its exchange
/// matrix: entry (i, j) is the signed arrow multiplicity between vertices
/// i and j, positive when the arrows run i -> j. Under this convention the
/// valid matrices are exactly the skew-symmetric ones with zero diagonal.
///
/// Labels are display-only: they never take part in equality, isomorphism
/// or hashing.
class Quiver {
public:
  Quiver() = default;

  /// n isolated vertices.
  explicit Quiver(int n);

  /// Row-major entries; must have size n * n. Content invariants are not
  /// checked here, use validate() at trust boundaries.
  Quiver(int n, std::vector<Entry> entries);

  static Quiver from_rows(const std::vector<std::vector<Entry>>& rows);

  int size() const { return n_; }

  Entry operator()(int i, int j) const {
    return b_[static_cast<std::size_t>(i) * n_ + j];
  }

  /// Sets the signed multiplicity of the pair {i, j}: (i, j) = m and
  /// (j, i) = -m. Throws std::invalid_argument for i == j.
  void set_arrows(int i, int j, Entry m);

  /// Row-major matrix entries.
  const std::vector<Entry>& entries() const { return b_; }

  Entry max_abs_entry() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int i) const;
  void set_label(int i, std::string name);

  /// Labels are excluded: two quivers are equal iff their matrices are.
  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }
  friend bool operator!=(const Quiver& a, const Quiver& b) {
    return !(a == b);
  }

private:
  void check_vertex(int i) const;

  int n_ = 0;
  std::vector<Entry> b_;
  std::vector<std::string> labels_;  // empty, or one per vertex
};

struct Violation {
  enum class Kind { Size, Loop, SkewSymmetry };
  Kind kind;
  int i = -1;
  int j = -1;
  std::string message;
};

/// Reports the first violated representation invariant, or nullopt when the
/// matrix encodes a valid loop-free, two-cycle-free quiver.
std::optional<Violation> validate(const Quiver& q);

/// Mutation at vertex k. Entries in row or column k flip sign; any other
/// entry picks up the composite arrows through k, with created two-cycles
/// cancelled:
///
///   b'(i, j) = b(i, j) + sgn(b(i, k)) * max(b(i, k) * b(k, j), 0)
///
/// The input is left untouched. Throws std::out_of_range for a bad vertex
/// and OverflowError when a count leaves the Entry range.
Quiver mutate(const Quiver& q, int k);

/// Left-to-right composition of mutate(); the empty word is the identity.
Quiver mutate_seq(const Quiver& q, const MutationSequence& word);

/// The induced subquiver on the given vertices, which must be nonempty,
/// distinct and in range. Vertex i of the result is vertices[i] of the
/// input; all arrows between retained vertices survive.
Quiver full_subquiver(const Quiver& q, const std::vector<int>& vertices);

/// True iff the underlying digraph (an edge i -> j wherever b(i, j) > 0)
/// has no directed cycle. Multiplicities are irrelevant here.
bool is_acyclic(const Quiver& q);

/// Relabels vertices: perm[old] = new. perm must be a bijection on [0, n).
Quiver permute(const Quiver& q, const std::vector<int>& perm);

}  // namespace qmut
