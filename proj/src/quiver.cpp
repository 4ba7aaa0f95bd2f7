#include "qmut/quiver.hpp"

#include <algorithm>
#include <cstdlib>

namespace qmut {

Quiver::Quiver(int n) : n_(n), b_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
}

Quiver::Quiver(int n, std::vector<Entry> entries)
    : n_(n), b_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (b_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("entry count does not match vertex count");
}

Quiver Quiver::from_rows(const std::vector<std::vector<Entry>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Entry> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw std::invalid_argument("ragged row in quiver matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Quiver(n, std::move(flat));
}

void Quiver::check_vertex(int i) const {
  if (i < 0 || i >= n_)
    throw std::out_of_range("vertex " + std::to_string(i) +
                            " out of range for quiver on " +
                            std::to_string(n_) + " vertices");
}

void Quiver::set_arrows(int i, int j, Entry m) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("loops are not representable");
  b_[static_cast<std::size_t>(i) * n_ + j] = m;
  b_[static_cast<std::size_t>(j) * n_ + i] = -m;
}

Entry Quiver::max_abs_entry() const {
  Entry m = 0;
  for (Entry e : b_) m = std::max(m, e < 0 ? -e : e);
  return m;
}

const std::string& Quiver::label(int i) const {
  check_vertex(i);
  static const std::string empty;
  return labels_.empty() ? empty : labels_[i];
}

void Quiver::set_label(int i, std::string name) {
  check_vertex(i);
  if (labels_.empty()) labels_.resize(n_);
  labels_[i] = std::move(name);
}

std::optional<Violation> validate(const Quiver& q) {
  const int n = q.size();
  if (n < 1 || q.entries().size() != static_cast<std::size_t>(n) * n) {
    return Violation{Violation::Kind::Size, -1, -1,
                     "matrix shape does not match vertex count"};
  }
  for (int i = 0; i < n; ++i) {
    if (q(i, i) != 0) {
      return Violation{Violation::Kind::Loop, i, i,
                       "nonzero diagonal entry (loop) at (" +
                           std::to_string(i) + "," + std::to_string(i) + ")"};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (q(i, j) != -q(j, i)) {
        return Violation{Violation::Kind::SkewSymmetry, j, i,
                         "skew-symmetry violated at (" + std::to_string(j) +
                             "," + std::to_string(i) + ")"};
      }
    }
  }
  return std::nullopt;
}

namespace {

Entry checked_mul(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("arrow multiplicity overflow in mutation product");
  return out;
}

Entry checked_add(Entry a, Entry b) {
  Entry out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("arrow multiplicity overflow in mutation sum");
  return out;
}

}  // namespace

Quiver mutate(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 0 || k >= n)
    throw std::out_of_range("mutation vertex " + std::to_string(k) +
                            " out of range");
  Quiver out = q;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i == k || j == k) {
        out.set_arrows(i, j, -q(i, j));
        continue;
      }
      const Entry through = checked_mul(q(i, k), q(k, j));
      Entry e = q(i, j);
      if (through > 0) {
        e = checked_add(e, q(i, k) > 0 ? through : -through);
      }
      out.set_arrows(i, j, e);
    }
  }
  return out;
}

Quiver mutate_seq(const Quiver& q, const MutationSequence& word) {
  Quiver out = q;
  for (int k : word) out = mutate(out, k);
  return out;
}

Quiver full_subquiver(const Quiver& q, const std::vector<int>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("subquiver vertex set is empty");
  const int n = q.size();
  std::vector<bool> seen(n, false);
  for (int v : vertices) {
    if (v < 0 || v >= n)
      throw std::out_of_range("subquiver vertex " + std::to_string(v) +
                              " out of range");
    if (seen[v])
      throw std::invalid_argument("duplicate subquiver vertex " +
                                  std::to_string(v));
    seen[v] = true;
  }
  const int m = static_cast<int>(vertices.size());
  Quiver out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      out.set_arrows(i, j, q(vertices[i], vertices[j]));
  if (q.has_labels()) {
    for (int i = 0; i < m; ++i) out.set_label(i, q.label(vertices[i]));
  }
  return out;
}

bool is_acyclic(const Quiver& q) {
  const int n = q.size();
  // 0 unvisited, 1 on the current path, 2 finished.
  std::vector<int> color(n, 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    color[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (q(v, w) <= 0) continue;
      if (color[w] == 1) return false;
      if (color[w] == 0 && !self(self, w)) return false;
    }
    color[v] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (color[v] == 0 && !dfs(dfs, v)) return false;
  return true;
}

Quiver permute(const Quiver& q, const std::vector<int>& perm) {
  const int n = q.size();
  if (perm.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("permutation length does not match quiver");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw std::invalid_argument("not a permutation of the vertex set");
    hit[p] = true;
  }
  Quiver out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.set_arrows(perm[i], perm[j], q(i, j));
  if (q.has_labels()) {
    for (int i = 0; i < n; ++i) out.set_label(perm[i], q.label(i));
  }
  return out;
}

}  // namespace qmut
