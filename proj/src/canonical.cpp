#include "qmut/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace qmut {

namespace {

// Search state for the minimum-matrix backtracking. order[p] is the source
// vertex placed at position p; the objective is the row-major flattening of
// the relabeled matrix.
class MinMatrixSearch {
public:
  explicit MinMatrixSearch(const Quiver& q)
      : q_(q), n_(q.size()), candidates_(vertex_order(q)), assigned_(n_, -1),
        used_(n_, false) {
    best_order_ = candidates_;
    best_ = relabeled(best_order_);
    descend(0);
  }

  std::vector<Entry> best() && { return std::move(best_); }
  const std::vector<int>& best_order() const { return best_order_; }

private:
  // Candidate ordering: vertices with heavy incoming multiplicities first,
  // so the initial greedy assignment is already close to minimal and the
  // prefix bound starts cutting early.
  static std::vector<int> vertex_order(const Quiver& q) {
    const int n = q.size();
    std::vector<std::vector<Entry>> key(n);
    for (int v = 0; v < n; ++v) {
      std::vector<Entry> in, out;
      for (int u = 0; u < n; ++u) {
        if (q(u, v) > 0) in.push_back(q(u, v));
        if (q(v, u) > 0) out.push_back(q(v, u));
      }
      std::sort(in.rbegin(), in.rend());
      std::sort(out.rbegin(), out.rend());
      key[v].push_back(in.empty() ? 0 : in.front());
      key[v].insert(key[v].end(), in.begin(), in.end());
      key[v].push_back(-1);  // separator
      key[v].insert(key[v].end(), out.begin(), out.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[a] > key[b]; });
    return order;
  }

  std::vector<Entry> relabeled(const std::vector<int>& order) const {
    std::vector<Entry> m(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        m[static_cast<std::size_t>(i) * n_ + j] = q_(order[i], order[j]);
    return m;
  }

  // Compares the current partial assignment (positions 0..depth-1 fixed)
  // against best_, substituting a lower bound for every entry that still
  // depends on unassigned vertices. A completion can only improve on best_
  // if this optimistic matrix is not already lexicographically larger.
  bool can_beat_best(int depth) {
    // Row bound: the least entry from an assigned vertex into the
    // unassigned pool. Column bound is its mirror image. Pair bound covers
    // entries between two unassigned vertices.
    std::vector<Entry> rowlo(depth), collo(depth);
    for (int i = 0; i < depth; ++i) {
      Entry rlo = 0, clo = 0;
      bool any = false;
      for (int u = 0; u < n_; ++u) {
        if (used_[u]) continue;
        const Entry e = q_(assigned_[i], u);
        if (!any) {
          rlo = e;
          clo = -e;
          any = true;
        } else {
          rlo = std::min(rlo, e);
          clo = std::min(clo, -e);
        }
      }
      rowlo[i] = any ? rlo : 0;
      collo[i] = any ? clo : 0;
    }
    Entry pairlo = 0;
    bool pair_any = false;
    for (int u = 0; u < n_; ++u) {
      if (used_[u]) continue;
      for (int w = 0; w < n_; ++w) {
        if (used_[w] || w == u) continue;
        const Entry e = q_(u, w);
        pairlo = pair_any ? std::min(pairlo, e) : e;
        pair_any = true;
      }
    }

    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        Entry val;
        if (i < depth && j < depth) {
          val = q_(assigned_[i], assigned_[j]);
        } else if (i < depth) {
          val = rowlo[i];
        } else if (j < depth) {
          val = collo[j];
        } else {
          val = pairlo;
        }
        const Entry ref = best_[static_cast<std::size_t>(i) * n_ + j];
        if (val < ref) return true;
        if (val > ref) return false;
      }
    }
    // Optimistic matrix ties best_ exactly, so no completion is strictly
    // smaller.
    return false;
  }

  void descend(int depth) {
    if (depth == n_) {
      std::vector<Entry> m = relabeled(assigned_);
      if (m < best_) {
        best_ = std::move(m);
        best_order_ = assigned_;
      }
      return;
    }
    for (int v : candidates_) {
      if (used_[v]) continue;
      assigned_[depth] = v;
      used_[v] = true;
      if (can_beat_best(depth + 1)) descend(depth + 1);
      used_[v] = false;
    }
    assigned_[depth] = -1;
  }

  const Quiver& q_;
  int n_;
  std::vector<int> candidates_;
  std::vector<int> assigned_;
  std::vector<bool> used_;
  std::vector<Entry> best_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalForm canonicalize(const Quiver& q, int limit) {
  if (q.size() > limit) {
    throw CanonLimitError("quiver on " + std::to_string(q.size()) +
                          " vertices exceeds the canonicalization cap of " +
                          std::to_string(limit));
  }
  MinMatrixSearch search(q);
  CanonicalForm form;
  form.n = q.size();
  // best_order[p] = source vertex at position p, so the realizing
  // permutation (old index -> new index) is its inverse.
  form.perm.resize(form.n);
  for (int p = 0; p < form.n; ++p) form.perm[search.best_order()[p]] = p;
  form.matrix = std::move(search).best();
  form.hash = canonical_hash(form.n, form.matrix);
  return form;
}

bool is_isomorphic(const Quiver& a, const Quiver& b, int limit) {
  if (a.size() != b.size()) return false;
  return canonicalize(a, limit).matrix == canonicalize(b, limit).matrix;
}

std::vector<std::uint8_t> canonical_bytes(int n,
                                          const std::vector<Entry>& matrix) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(4 + matrix.size() * 8);
  const auto u32 = static_cast<std::uint32_t>(n);
  for (int shift = 24; shift >= 0; shift -= 8)
    bytes.push_back(static_cast<std::uint8_t>(u32 >> shift));
  for (Entry e : matrix) {
    const auto u64 = static_cast<std::uint64_t>(e);
    for (int shift = 56; shift >= 0; shift -= 8)
      bytes.push_back(static_cast<std::uint8_t>(u64 >> shift));
  }
  return bytes;
}

std::uint64_t canonical_hash(int n, const std::vector<Entry>& matrix) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint8_t byte : canonical_bytes(n, matrix)) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t hash) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

Quiver canonical_quiver(const CanonicalForm& form) {
  return Quiver(form.n, form.matrix);
}

}  // namespace qmut
