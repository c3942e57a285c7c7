#pragma once

// Smith normal form over the integers, and a diagonalization over Z/m used
// for kernels of maps between free Z/m-modules.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "emforge/matrix.hpp"

namespace emforge {

struct SmithOptions {
  bool track_left = true;          // U
  bool track_left_inverse = true;  // U^{-1}
  bool track_right = true;         // V
};

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_k >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix Uinv;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Nonzero entry of least absolute value in the lower-right block starting at t.
inline bool find_min_pivot(const IntMatrix& D, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < D.rows(); ++r)
    for (std::size_t c = t; c < D.cols(); ++c) {
      const Integer& x = D(r, c);
      if (x == 0) continue;
      Integer a = abs_int(x);
      if (!found || a < best) {
        best = a;
        pr = r;
        pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& M, SmithOptions opt = {}) {
  SmithForm s;
  s.D = M;
  const std::size_t R = M.rows(), C = M.cols();
  if (opt.track_left) s.U = IntMatrix::identity(R);
  if (opt.track_left_inverse) s.Uinv = IntMatrix::identity(R);
  if (opt.track_right) s.V = IntMatrix::identity(C);
  IntMatrix& D = s.D;

  // Elementary operations, mirrored on the transforms.
  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    if (opt.track_left) s.U.swap_rows(a, b);
    if (opt.track_left_inverse) s.Uinv.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {  // R_dst += k R_src
    D.add_row(dst, src, k);
    if (opt.track_left) s.U.add_row(dst, src, k);
    if (opt.track_left_inverse) s.Uinv.add_col(src, dst, Integer(-k));
  };
  auto row_neg = [&](std::size_t r) {
    D.negate_row(r);
    if (opt.track_left) s.U.negate_row(r);
    if (opt.track_left_inverse) s.Uinv.negate_col(r);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    if (opt.track_right) s.V.swap_cols(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    D.add_col(dst, src, k);
    if (opt.track_right) s.V.add_col(dst, src, k);
  };

  const std::size_t n = std::min(R, C);
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!detail::find_min_pivot(D, t, pr, pc)) break;
    for (;;) {
      row_swap(t, pr);
      col_swap(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (D(r, t) == 0) continue;
        Integer q = D(r, t) / D(t, t);
        if (q != 0) row_add(r, t, Integer(-q));
        if (D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (D(t, c) == 0) continue;
        Integer q = D(t, c) / D(t, t);
        if (q != 0) col_add(c, t, Integer(-q));
        if (D(t, c) != 0) clean = false;
      }
      if (!clean) {
        detail::find_min_pivot(D, t, pr, pc);
        continue;
      }
      // Row and column cleared; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t r = t + 1; r < R && divisible; ++r)
        for (std::size_t c = t + 1; c < C; ++c)
          if (D(r, c) % D(t, t) != 0) {
            row_add(t, r, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
      detail::find_min_pivot(D, t, pr, pc);
    }
    if (D(t, t) < 0) row_neg(t);
  }
  s.rank = t;
  return s;
}

/// Invariant factors (> 1) of the cokernel Z^rows / (column span of M).
/// Throws if the cokernel is infinite.
inline std::vector<Integer> cokernel_invariants(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M, {false, false, false});
  if (s.rank < M.rows()) throw InvalidInput("cokernel has a free part");
  std::vector<Integer> out;
  for (const Integer& d : s.diagonal())
    if (d > 1) out.push_back(d);
  return out;
}

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Diagonalization over Z/m: U F V = diag(d) (mod m) with U, V invertible
/// mod m. U is not tracked; V and V^{-1} are.
struct ModularDiagonalForm {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> diag;  // length min(rows, cols)
  Matrix<std::int64_t> V;
  Matrix<std::int64_t> Vinv;
};

inline ModularDiagonalForm modular_diagonalize(Matrix<std::int64_t> F, std::int64_t m) {
  if (m < 1) throw InvalidInput("modular_diagonalize: modulus must be positive");
  const std::size_t R = F.rows(), C = F.cols();
  ModularDiagonalForm out;
  out.modulus = m;
  out.V = Matrix<std::int64_t>::identity(C);
  out.Vinv = Matrix<std::int64_t>::identity(C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) F(r, c) = mod_floor(F(r, c), m);

  // Bezout coefficients (s, x, a', b') with s*a + x*b = g; s=1, x=0 when a | b.
  auto bezout = [m](std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& x, std::int64_t& ap,
                    std::int64_t& bp) {
    std::int64_t g;
    if (b % a == 0) {
      g = a;
      s = 1;
      x = 0;
    } else {
      g = ext_gcd(a, b, s, x);
    }
    ap = a / g;
    bp = b / g;
    s = mod_floor(s, m);
    x = mod_floor(x, m);
  };
  auto mulmod = [m](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
  };

  const std::size_t n = std::min(R, C);
  std::size_t t = 0;
  for (; t < n; ++t) {
    // Pivot: entry generating the largest ideal, i.e. smallest gcd with m.
    std::size_t pr = R, pc = C;
    std::int64_t best = 0;
    for (std::size_t r = t; r < R; ++r)
      for (std::size_t c = t; c < C; ++c) {
        if (F(r, c) == 0) continue;
        const std::int64_t g = std::gcd(F(r, c), m);
        if (pr == R || g < best) {
          best = g;
          pr = r;
          pc = c;
        }
      }
    if (pr == R) break;
    F.swap_rows(t, pr);
    F.swap_cols(t, pc);
    out.V.swap_cols(t, pc);
    out.Vinv.swap_rows(t, pc);
    for (;;) {
      bool dirty = false;
      for (std::size_t c = t + 1; c < C; ++c) {
        const std::int64_t b = F(t, c);
        if (b == 0) continue;
        std::int64_t s, x, ap, bp;
        bezout(F(t, t), b, s, x, ap, bp);
        const std::int64_t nbp = mod_floor(-bp, m), nx = mod_floor(-x, m);
        for (std::size_t r = 0; r < R; ++r) {
          const std::int64_t u = F(r, t), v = F(r, c);
          F(r, t) = (mulmod(s, u) + mulmod(x, v)) % m;
          F(r, c) = (mulmod(nbp, u) + mulmod(ap, v)) % m;
        }
        for (std::size_t r = 0; r < C; ++r) {
          const std::int64_t u = out.V(r, t), v = out.V(r, c);
          out.V(r, t) = (mulmod(s, u) + mulmod(x, v)) % m;
          out.V(r, c) = (mulmod(nbp, u) + mulmod(ap, v)) % m;
        }
        for (std::size_t k = 0; k < C; ++k) {
          const std::int64_t u = out.Vinv(t, k), v = out.Vinv(c, k);
          out.Vinv(t, k) = (mulmod(ap, u) + mulmod(bp, v)) % m;
          out.Vinv(c, k) = (mulmod(nx, u) + mulmod(s, v)) % m;
        }
      }
      for (std::size_t r = t + 1; r < R; ++r) {
        const std::int64_t b = F(r, t);
        if (b == 0) continue;
        std::int64_t s, x, ap, bp;
        bezout(F(t, t), b, s, x, ap, bp);
        const std::int64_t nbp = mod_floor(-bp, m);
        for (std::size_t c = t; c < C; ++c) {
          const std::int64_t u = F(t, c), v = F(r, c);
          F(t, c) = (mulmod(s, u) + mulmod(x, v)) % m;
          F(r, c) = (mulmod(nbp, u) + mulmod(ap, v)) % m;
          if (c > t && F(t, c) != 0) dirty = true;
        }
      }
      if (!dirty) break;
    }
    out.diag.push_back(F(t, t));
  }
  out.diag.resize(n, 0);
  return out;
}

}  // namespace emforge
