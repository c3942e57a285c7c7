#pragma once

// Combinatorics of the simplicial category: the generators d^i and s^i on
// points, lexicographic ranking of the strictly increasing tuples that index
// coordinates of K(A,n)_q, and the pullback description of how a face or a
// degeneracy acts on one coordinate.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "emforge/errors.hpp"

namespace emforge {

/// d^i : [n] -> [n+1], the coface that skips i.
constexpr int coface_point(int i, int u) noexcept { return u < i ? u : u + 1; }

/// s^i : [n] -> [n-1], the codegeneracy that hits i twice.
constexpr int codegeneracy_point(int i, int u) noexcept { return u <= i ? u : u - 1; }

/// Binomial coefficient, exact for the small arguments used here (n <= 62).
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// Strictly increasing tuple 0 <= u_1 < ... < u_n <= ambient-1.
class SimplexTuple {
 public:
  SimplexTuple() = default;
  SimplexTuple(std::vector<int> entries, int ambient) : entries_(std::move(entries)), ambient_(ambient) {
    if (ambient_ < 0) throw InvalidInput("SimplexTuple: negative ambient");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k] < 0 || entries_[k] >= ambient_)
        throw InvalidInput("SimplexTuple: entry " + std::to_string(entries_[k]) + " outside [0," +
                           std::to_string(ambient_ - 1) + "]");
      if (k > 0 && entries_[k] <= entries_[k - 1])
        throw InvalidInput("SimplexTuple: entries not strictly increasing");
    }
  }

  const std::vector<int>& entries() const noexcept { return entries_; }
  int ambient() const noexcept { return ambient_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_.at(static_cast<std::size_t>(k)); }
  int back() const { return entries_.back(); }

  friend bool operator==(const SimplexTuple& a, const SimplexTuple& b) {
    return a.entries_ == b.entries_ && a.ambient_ == b.ambient_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(entries_[k]);
    }
    return s + ")";
  }

 private:
  std::vector<int> entries_;
  int ambient_ = 0;
};

/// 0-based position of `t` among the n-subsets of {0,...,q-1} in lexicographic order.
inline std::int64_t rank_tuple(const SimplexTuple& t, int q, int n) {
  if (t.size() != n) throw InvalidInput("rank_tuple: tuple length " + std::to_string(t.size()) + " != n");
  if (n > 0 && t.back() >= q) throw InvalidInput("rank_tuple: tuple " + t.str() + " outside ambient " + std::to_string(q));
  std::int64_t rank = 0;
  int prev = -1;
  for (int j = 0; j < n; ++j) {
    for (int x = prev + 1; x < t[j]; ++x) rank += binomial(q - 1 - x, n - 1 - j);
    prev = t[j];
  }
  return rank;
}

inline SimplexTuple unrank_tuple(std::int64_t rank, int q, int n) {
  const std::int64_t total = binomial(q, n);
  if (rank < 0 || rank >= total)
    throw InvalidInput("unrank_tuple: rank " + std::to_string(rank) + " outside [0," + std::to_string(total) + ")");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  int x = 0;
  for (int j = 0; j < n; ++j) {
    for (;; ++x) {
      const std::int64_t block = binomial(q - 1 - x, n - 1 - j);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(x++);
  }
  return SimplexTuple(std::move(out), q);
}

/// Every n-subset of {0,...,q-1}, lexicographically.
inline std::vector<SimplexTuple> all_tuples(int q, int n) {
  std::vector<SimplexTuple> out;
  const std::int64_t total = binomial(q, n);
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t r = 0; r < total; ++r) out.push_back(unrank_tuple(r, q, n));
  return out;
}

struct SignedTuple {
  SimplexTuple tuple;
  int sign = 1;
  friend bool operator==(const SignedTuple&, const SignedTuple&) = default;
};

/// The target coordinate copies one source coordinate.
struct Shifted {
  SimplexTuple target;
  friend bool operator==(const Shifted&, const Shifted&) = default;
};

/// The target coordinate is a signed sum of n+1 source coordinates.
struct Merged {
  std::vector<SignedTuple> terms;
  friend bool operator==(const Merged&, const Merged&) = default;
};

/// The target coordinate is the identity element.
struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};

using FaceAction = std::variant<Shifted, Merged>;
using DegeneracyAction = std::variant<Trivial, Shifted>;

/// How the face d_i : level q -> level q-1 produces coordinate `t` of the
/// target (t lives in ambient q-1). The source coordinates live in ambient q.
inline FaceAction face_branch(int i, const SimplexTuple& t, int q) {
  if (i < 0 || i > q) throw InvalidInput("face_branch: index " + std::to_string(i) + " outside [0," + std::to_string(q) + "]");
  if (t.size() == 0) throw InvalidInput("face_branch: empty tuple");
  if (t.back() > q - 2) throw InvalidInput("face_branch: tuple " + t.str() + " is not a coordinate of level " + std::to_string(q - 1));
  const int n = t.size();
  if (t.back() != i - 1) {
    std::vector<int> img(t.entries());
    for (int& u : img) u = coface_point(i, u);
    return Shifted{SimplexTuple(std::move(img), q)};
  }
  // u_n = i-1 <= q-2, so i <= q-1 and the appended index i is a valid point of [q-1].
  if (i > q - 1) throw ConsistencyError("face_branch: merged branch would index a_{...,q}");
  Merged m;
  m.terms.push_back({SimplexTuple(t.entries(), q), +1});
  for (int j = 1; j <= n; ++j) {
    std::vector<int> e(t.entries());
    e.erase(e.begin() + (n - j));
    e.push_back(i);
    m.terms.push_back({SimplexTuple(std::move(e), q), (j % 2 == 1) ? +1 : -1});
  }
  return m;
}

/// How the degeneracy s_i : level q -> level q+1 produces coordinate `t` of
/// the target (t lives in ambient q+1).
inline DegeneracyAction degeneracy_branch(int i, const SimplexTuple& t, int q) {
  if (i < 0 || i > q) throw InvalidInput("degeneracy_branch: index " + std::to_string(i) + " outside [0," + std::to_string(q) + "]");
  if (t.size() == 0) throw InvalidInput("degeneracy_branch: empty tuple");
  if (t.back() > q) throw InvalidInput("degeneracy_branch: tuple " + t.str() + " is not a coordinate of level " + std::to_string(q + 1));
  if (t.back() == i) return Trivial{};
  std::vector<int> img(t.entries());
  for (int& u : img) u = codegeneracy_point(i, u);
  for (std::size_t k = 1; k < img.size(); ++k)
    if (img[k] == img[k - 1]) return Trivial{};
  return Shifted{SimplexTuple(std::move(img), q)};
}

}  // namespace emforge
