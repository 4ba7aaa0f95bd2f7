#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmut/quiver.hpp"

namespace qmut {

/// Raised instead of attempting an unbounded search when a quiver exceeds
/// the canonicalization vertex cap.
class CanonLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCanonLimit = 12;

/// The permutation-minimal representative of a quiver's isomorphism class.
/// matrix is the row-major lexicographic minimum over all vertex
/// relabelings; two quivers are isomorphic iff their canonical matrices are
/// equal. perm realizes the minimum: permute(q, perm).entries() == matrix.
struct CanonicalForm {
  int n = 0;
  std::vector<Entry> matrix;
  std::uint64_t hash = 0;
  std::vector<int> perm;
};

/// Backtracking search over relabelings with candidate vertices ordered by
/// an arrow-multiplicity invariant; branches whose best possible completion
/// cannot beat the current minimum are cut. Deterministic across runs and
/// platforms. Throws CanonLimitError above the vertex cap.
CanonicalForm canonicalize(const Quiver& q, int limit = kDefaultCanonLimit);

bool is_isomorphic(const Quiver& a, const Quiver& b,
                   int limit = kDefaultCanonLimit);

/// The hashed byte serialization: vertex count as a 4-byte big-endian
/// word, then each matrix entry row-major as an 8-byte big-endian
/// two's-complement word. This layout is the stable external contract.
std::vector<std::uint8_t> canonical_bytes(int n,
                                          const std::vector<Entry>& matrix);

/// 64-bit FNV-1a over the serialized bytes.
std::uint64_t canonical_hash(int n, const std::vector<Entry>& matrix);

/// Fixed-width lowercase hex rendering of the hash.
std::string hash_hex(std::uint64_t hash);

/// The canonical representative as a quiver (labels dropped).
Quiver canonical_quiver(const CanonicalForm& form);

}  // namespace qmut
