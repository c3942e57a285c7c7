#pragma once

// Cohomology of Map(K_*, B) with trivial coefficients, for a simplicial
// group K given through its enumerated levels. Group cohomology comes from
// K(G,1), secondary cohomology from K(A,2).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "emforge/em_construct.hpp"
#include "emforge/errors.hpp"
#include "emforge/fin_ab.hpp"
#include "emforge/simplicial.hpp"

namespace emforge {

/// delta^q : C^q -> C^{q+1} as an integer pattern: row x of K_{q+1} lists
/// (element of K_q, coefficient) with (delta f)(x) = sum coeff * f(element).
struct CoboundaryPattern {
  std::size_t source_dim = 0;  // |K_q|
  std::size_t target_dim = 0;  // |K_{q+1}|
  std::vector<std::vector<std::pair<std::uint32_t, std::int32_t>>> rows;
};

struct CochainComplex {
  std::string subject;
  std::vector<std::size_t> dims;             // |K_q|, q = 0..q_top+1
  std::vector<CoboundaryPattern> coboundary;  // delta^q, q = 0..q_top

  /// delta^q over Z/m as a homomorphism (Z/m)^{|K_q|} -> (Z/m)^{|K_{q+1}|}.
  AbHom over(std::size_t q, std::int64_t m) const {
    const CoboundaryPattern& p = coboundary.at(q);
    Matrix<std::int64_t> a(p.target_dim, p.source_dim);
    for (std::size_t r = 0; r < p.rows.size(); ++r)
      for (const auto& [c, k] : p.rows[r]) a(r, c) = mod_floor(a(r, c) + k, m);
    return AbHom(FinAbGroup::power(FinAbGroup({m}), p.source_dim), FinAbGroup::power(FinAbGroup({m}), p.target_dim),
                 std::move(a));
  }
};

namespace detail {

inline void add_term(std::vector<std::pair<std::uint32_t, std::int32_t>>& row, std::uint32_t col, std::int32_t k) {
  for (auto& [c, v] : row)
    if (c == col) {
      v += k;
      return;
    }
  row.emplace_back(col, k);
}

inline void tidy(std::vector<std::pair<std::uint32_t, std::int32_t>>& row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  std::sort(row.begin(), row.end());
}

inline std::vector<std::size_t> checked_dims(const std::string& subject, const std::function<Integer(int)>& order, int q_top,
                                             const Integer& cap) {
  std::vector<std::size_t> dims;
  for (int q = 0; q <= q_top + 1; ++q) {
    const Integer o = order(q);
    if (o > cap) throw CapExceeded("cochains on level " + std::to_string(q) + " of " + subject, o.str());
    if (o > Integer(std::numeric_limits<std::uint32_t>::max())) throw CapExceeded("cochain level index range", o.str());
    dims.push_back(static_cast<std::size_t>(o));
  }
  return dims;
}

}  // namespace detail

/// Cochains up to degree q_top (levels up to q_top + 1 are enumerated).
inline CochainComplex cochain_complex(const IndexedFamily& K, int q_top, const Integer& cap) {
  if (q_top < 0) throw InvalidInput("cochain_complex: negative top degree");
  CochainComplex cc;
  cc.subject = K.name;
  cc.dims = detail::checked_dims(K.name, K.level_order, q_top, cap);
  for (int q = 0; q <= q_top; ++q) {
    CoboundaryPattern p;
    p.source_dim = cc.dims[q];
    p.target_dim = cc.dims[q + 1];
    p.rows.resize(p.target_dim);
    for (std::size_t x = 0; x < p.target_dim; ++x) {
      for (int i = 0; i <= q + 1; ++i)
        detail::add_term(p.rows[x], static_cast<std::uint32_t>(K.face(q + 1, i, x)), i % 2 == 0 ? 1 : -1);
      detail::tidy(p.rows[x]);
    }
    cc.coboundary.push_back(std::move(p));
  }
  return cc;
}

/// Same complex for a matrix-backed family; elements in enumerate_elements order.
inline CochainComplex cochain_complex(const AbelianFamily& K, int q_top, const Integer& cap) {
  if (q_top < 0) throw InvalidInput("cochain_complex: negative top degree");
  CochainComplex cc;
  cc.subject = K.name;
  cc.dims = detail::checked_dims(K.name, [&K](int q) { return K.level(q).order(); }, q_top, cap);
  for (int q = 0; q <= q_top; ++q) {
    CoboundaryPattern p;
    p.source_dim = cc.dims[q];
    p.target_dim = cc.dims[q + 1];
    p.rows.resize(p.target_dim);
    const FinAbGroup src = K.level(q + 1);
    std::vector<AbHom> faces;
    for (int i = 0; i <= q + 1; ++i) faces.push_back(K.face(q + 1, i));
    std::vector<std::int64_t> x(src.rank(), 0);
    for (std::size_t idx = 0; idx < p.target_dim; ++idx) {
      for (int i = 0; i <= q + 1; ++i) {
        const AbHom& d = faces[static_cast<std::size_t>(i)];
        detail::add_term(p.rows[idx], static_cast<std::uint32_t>(element_index(d.target(), d.apply(x))), i % 2 == 0 ? 1 : -1);
      }
      detail::tidy(p.rows[idx]);
      for (std::size_t k = src.rank(); k-- > 0;) {  // next element, last coordinate fastest
        if (++x[k] < src.modulus(k)) break;
        x[k] = 0;
      }
    }
    cc.coboundary.push_back(std::move(p));
  }
  return cc;
}

enum class CohomologyMethod { Auto, Smith, PrimeField };

inline std::string to_string(CohomologyMethod m) {
  switch (m) {
    case CohomologyMethod::Auto: return "auto";
    case CohomologyMethod::Smith: return "smith";
    case CohomologyMethod::PrimeField: return "prime-field";
  }
  return "?";
}

struct CohomologyOptions {
  CohomologyMethod method = CohomologyMethod::Auto;
  Integer cap = Integer(1) << 20;
  std::size_t dense_cap = std::size_t(1) << 26;  // entries of a dense coboundary matrix for the Smith route
};

struct CohomologyResult {
  std::string subject;
  FinAbGroup coefficients;
  std::vector<FinAbGroup> groups;  // H^0 .. H^{n_max}
  std::vector<std::size_t> dims;   // |K_q|, q = 0..n_max+1
  std::string method;
  double elapsed_ms = 0;
};

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t x = 0, y = 0;
  ext_gcd(mod_floor(a, p), p, x, y);
  return mod_floor(x, p);
}

// Rank over F_2 of the rows of a pattern, in packed 64-bit words.
inline std::size_t rank_f2(const CoboundaryPattern& p) {
  const std::size_t words = (p.source_dim + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis(p.source_dim);  // indexed by pivot column
  std::vector<bool> has(p.source_dim, false);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& row : p.rows) {
    std::fill(v.begin(), v.end(), 0);
    bool any = false;
    for (const auto& [c, k] : row)
      if (k % 2 != 0) {
        v[c / 64] ^= std::uint64_t(1) << (c % 64);
        any = true;
      }
    if (!any) continue;
    for (std::size_t w = 0; w < words; ++w) {
      while (v[w] != 0) {
        const std::size_t col = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
        if (!has[col]) {
          basis[col] = v;
          has[col] = true;
          ++rank;
          goto next_row;
        }
        const auto& b = basis[col];
        for (std::size_t u = w; u < words; ++u) v[u] ^= b[u];
      }
    }
  next_row:;
  }
  return rank;
}

// Rank over F_p, p odd prime.
inline std::size_t rank_fp(const CoboundaryPattern& p, std::int64_t prime) {
  std::vector<std::vector<std::int64_t>> basis(p.source_dim);
  std::vector<bool> has(p.source_dim, false);
  std::size_t rank = 0;
  std::vector<std::int64_t> v(p.source_dim);
  for (const auto& row : p.rows) {
    std::fill(v.begin(), v.end(), 0);
    bool any = false;
    for (const auto& [c, k] : row) {
      v[c] = mod_floor(v[c] + k, prime);
      any |= v[c] != 0;
    }
    if (!any) continue;
    for (std::size_t col = 0; col < v.size(); ++col) {
      if (v[col] == 0) continue;
      if (!has[col]) {
        const std::int64_t inv = inverse_mod(v[col], prime);
        for (std::size_t u = col; u < v.size(); ++u) v[u] = v[u] * inv % prime;
        basis[col] = v;
        has[col] = true;
        ++rank;
        break;
      }
      const std::int64_t f = v[col];
      const auto& b = basis[col];
      for (std::size_t u = col; u < v.size(); ++u) v[u] = mod_floor(v[u] - f * b[u], prime);
    }
  }
  return rank;
}

inline std::size_t rank_mod_prime(const CoboundaryPattern& p, std::int64_t prime) {
  return prime == 2 ? rank_f2(p) : rank_fp(p, prime);
}

}  // namespace detail

/// H^0 .. H^{n_max} of a cochain complex computed up to degree >= n_max.
inline CohomologyResult cohomology(const CochainComplex& cc, const FinAbGroup& B, int n_max, const CohomologyOptions& opt = {}) {
  if (n_max < 0 || static_cast<std::size_t>(n_max) >= cc.coboundary.size())
    throw InvalidInput("cohomology: complex does not reach degree " + std::to_string(n_max));
  const auto t0 = std::chrono::steady_clock::now();
  CohomologyResult res;
  res.subject = cc.subject;
  res.coefficients = B;
  res.dims.assign(cc.dims.begin(), cc.dims.begin() + n_max + 2);
  bool all_prime = true;
  for (std::int64_t b : B.moduli()) all_prime &= detail::is_prime(b);
  CohomologyMethod method = opt.method;
  if (method == CohomologyMethod::Auto) method = all_prime ? CohomologyMethod::PrimeField : CohomologyMethod::Smith;
  if (method == CohomologyMethod::PrimeField && !all_prime)
    throw InvalidInput("cohomology: the prime-field method needs every coefficient summand of prime order");
  res.method = to_string(method);

  std::vector<std::vector<std::int64_t>> moduli(static_cast<std::size_t>(n_max) + 1);
  if (method == CohomologyMethod::PrimeField) {
    for (std::int64_t b : B.moduli()) {
      std::vector<std::size_t> rank;
      for (int q = 0; q <= n_max; ++q) rank.push_back(detail::rank_mod_prime(cc.coboundary[q], b));
      for (int q = 0; q <= n_max; ++q) {
        const std::size_t dim = cc.dims[q] - rank[q] - (q > 0 ? rank[q - 1] : 0);
        moduli[q].insert(moduli[q].end(), dim, b);
      }
    }
  } else {
    for (std::size_t q = 0; q <= static_cast<std::size_t>(n_max); ++q) {
      const std::size_t entries = cc.dims[q] * cc.dims[q + 1];
      if (entries > opt.dense_cap)
        throw CapExceeded("dense coboundary matrix in degree " + std::to_string(q) + " of " + cc.subject, std::to_string(entries));
    }
    for (std::int64_t b : B.moduli())
      for (std::size_t q = 0; q <= static_cast<std::size_t>(n_max); ++q) {
        const AbHom out = cc.over(q, b);
        const AbHom in = q > 0 ? cc.over(q - 1, b) : AbHom::zero(FinAbGroup(), out.source());
        const FinAbGroup h = homology_at(in, out);
        moduli[q].insert(moduli[q].end(), h.moduli().begin(), h.moduli().end());
      }
  }
  for (auto& m : moduli) res.groups.push_back(FinAbGroup(std::move(m)).canonical_form());
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// H^n(G, B), trivial action, from K(G,1).
inline CohomologyResult group_cohomology(const TableGroup& G, const FinAbGroup& B, int n_max, const CohomologyOptions& opt = {}) {
  const IndexedFamily k = kg1_table_family(G);
  return cohomology(cochain_complex(k, n_max, opt.cap), B, n_max, opt);
}

inline CohomologyResult group_cohomology(const FinAbGroup& G, const FinAbGroup& B, int n_max, const CohomologyOptions& opt = {}) {
  return cohomology(cochain_complex(kg1_abelian_family(G), n_max, opt.cap), B, n_max, opt);
}

/// Secondary cohomology of A with coefficients in B, from K(A,2).
inline CohomologyResult secondary_cohomology(const FinAbGroup& A, const FinAbGroup& B, int n_max,
                                             const CohomologyOptions& opt = {}) {
  return cohomology(cochain_complex(kan_family(A, 2), n_max, opt.cap), B, n_max, opt);
}

}  // namespace emforge
