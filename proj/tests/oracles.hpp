#pragma once

// Independent oracles shared by the unit and acceptance tests. They are
// written from the definitions and use none of the library's algorithms.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

// Dense F_2 rank with plain bool rows, sized for the oracle cases below.
inline std::size_t dense_rank_f2(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

// Inhomogeneous bar complex of Z/m with coefficients Z/2: cochains are
// functions on (Z/m)^n, n-tuples numbered with the first slot slowest.
inline std::vector<std::size_t> bar_complex_f2_dims(int m, int n_max) {
  auto pw = [m](int n) {
    std::size_t p = 1;
    for (int k = 0; k < n; ++k) p *= static_cast<std::size_t>(m);
    return p;
  };
  auto decode = [m](std::size_t idx, int n) {
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int k = n; k-- > 0;) {
      g[k] = static_cast<int>(idx % static_cast<std::size_t>(m));
      idx /= static_cast<std::size_t>(m);
    }
    return g;
  };
  auto encode = [m](const std::vector<int>& g) {
    std::size_t idx = 0;
    for (int x : g) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(x);
    return idx;
  };
  // rows indexed by (n+1)-tuples, columns by n-tuples
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::vector<bool>> rows(pw(n + 1), std::vector<bool>(pw(n), false));
    for (std::size_t x = 0; x < pw(n + 1); ++x) {
      const auto g = decode(x, n + 1);
      auto flip = [&](const std::vector<int>& h) { rows[x][encode(h)] = !rows[x][encode(h)]; };
      flip(std::vector<int>(g.begin() + 1, g.end()));
      for (int i = 1; i <= n; ++i) {
        std::vector<int> h;
        for (int j = 0; j < n + 1; ++j) {
          if (j == i - 1) {
            h.push_back((g[j] + g[j + 1]) % m);
            ++j;
          } else {
            h.push_back(g[j]);
          }
        }
        flip(h);
      }
      flip(std::vector<int>(g.begin(), g.end() - 1));
    }
    ranks.push_back(dense_rank_f2(rows));
  }
  std::vector<std::size_t> dims;
  for (int n = 0; n <= n_max; ++n) dims.push_back(pw(n) - ranks[n] - (n ? ranks[n - 1] : 0));
  return dims;
}

// K(Z/2,2) written straight from the coordinate display: level q holds bits
// a_{u,v}, 0 <= u < v < q, lexicographic; faces by the four-case rule.
struct LiteralKa2 {
  static std::vector<std::pair<int, int>> coords(int q) {
    std::vector<std::pair<int, int>> c;
    for (int u = 0; u < q; ++u)
      for (int v = u + 1; v < q; ++v) c.emplace_back(u, v);
    return c;
  }
  static std::size_t face(int q, int i, std::size_t x) {
    const auto src = coords(q), tgt = coords(q - 1);
    auto bit = [&](int u, int v) {
      for (std::size_t k = 0; k < src.size(); ++k)
        if (src[k] == std::make_pair(u, v)) return static_cast<int>((x >> (src.size() - 1 - k)) & 1);
      throw std::logic_error("bad coordinate");
    };
    std::size_t y = 0;
    for (const auto& [u, v] : tgt) {
      int b;
      if (v < i - 1) b = bit(u, v);
      else if (v == i - 1) b = bit(u, v) ^ bit(u, i) ^ bit(v, i);
      else if (u <= i - 1) b = bit(u, v + 1);
      else b = bit(u + 1, v + 1);
      y = (y << 1) | static_cast<std::size_t>(b);
    }
    return y;
  }
};

inline std::vector<std::size_t> literal_secondary_f2_dims(int n_max) {
  std::vector<std::size_t> size, rank;
  for (int q = 0; q <= n_max + 1; ++q) size.push_back(std::size_t(1) << LiteralKa2::coords(q).size());
  for (int q = 0; q <= n_max; ++q) {
    std::vector<std::vector<bool>> rows(size[q + 1], std::vector<bool>(size[q], false));
    for (std::size_t x = 0; x < size[q + 1]; ++x)
      for (int i = 0; i <= q + 1; ++i) {
        const std::size_t y = LiteralKa2::face(q + 1, i, x);
        rows[x][y] = !rows[x][y];
      }
    rank.push_back(dense_rank_f2(rows));
  }
  std::vector<std::size_t> dims;
  for (int q = 0; q <= n_max; ++q) dims.push_back(size[q] - rank[q] - (q ? rank[q - 1] : 0));
  return dims;
}

}  // namespace oracle
