#pragma once

// Eilenberg-MacLane simplicial groups: K(G,1) over a multiplication table or
// an abelian group, and K(A,n) with level q = A^{C(q,n)}. Coordinate
// (tuple of rank r, summand k of A) sits at r * rank(A) + k.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "emforge/errors.hpp"
#include "emforge/fin_ab.hpp"
#include "emforge/report.hpp"
#include "emforge/simplex_index.hpp"
#include "emforge/simplicial.hpp"
#include "emforge/table_group.hpp"

namespace emforge {

inline FinAbGroup kan_level(const FinAbGroup& A, int n, int q) {
  if (n < 1) throw InvalidInput("K(A,n) needs n >= 1");
  if (q < 0) throw InvalidInput("negative simplicial level");
  return FinAbGroup::power(A, static_cast<std::size_t>(binomial(q, n)));
}

using FaceBranchFn = std::function<FaceAction(int i, const SimplexTuple& t, int q)>;
using DegeneracyBranchFn = std::function<DegeneracyAction(int i, const SimplexTuple& t, int q)>;

namespace detail {

inline void check_face_index(int q, int i) {
  if (q < 1) throw InvalidInput("faces start at level 1");
  if (i < 0 || i > q) throw InvalidInput("face index " + std::to_string(i) + " outside [0," + std::to_string(q) + "]");
}

inline void check_degeneracy_index(int q, int i) {
  if (q < 0) throw InvalidInput("negative simplicial level");
  if (i < 0 || i > q) throw InvalidInput("degeneracy index " + std::to_string(i) + " outside [0," + std::to_string(q) + "]");
}

// Adds `sign` times source coordinate block `src` to target block `dst`, summand by summand.
inline void add_block(Matrix<std::int64_t>& m, std::size_t rk, std::int64_t dst, std::int64_t src, int sign) {
  for (std::size_t k = 0; k < rk; ++k) m(dst * rk + k, src * rk + k) += sign;
}

}  // namespace detail

/// d_i : K(A,n)_q -> K(A,n)_{q-1}, one row block per target tuple.
inline AbHom kan_face_matrix_from(const FinAbGroup& A, int n, int q, int i, const FaceBranchFn& branch) {
  detail::check_face_index(q, i);
  const FinAbGroup src = kan_level(A, n, q), tgt = kan_level(A, n, q - 1);
  const std::size_t rk = A.rank();
  Matrix<std::int64_t> m(tgt.rank(), src.rank());
  std::int64_t r = 0;
  for (const SimplexTuple& t : all_tuples(q - 1, n)) {
    const FaceAction act = branch(i, t, q);
    if (const auto* s = std::get_if<Shifted>(&act)) {
      detail::add_block(m, rk, r, rank_tuple(s->target, q, n), +1);
    } else {
      for (const SignedTuple& term : std::get<Merged>(act).terms)
        detail::add_block(m, rk, r, rank_tuple(term.tuple, q, n), term.sign);
    }
    ++r;
  }
  return AbHom(src, tgt, std::move(m));
}

inline AbHom kan_face_matrix(const FinAbGroup& A, int n, int q, int i) {
  return kan_face_matrix_from(A, n, q, i, face_branch);
}

/// s_i : K(A,n)_q -> K(A,n)_{q+1}.
inline AbHom kan_degeneracy_matrix_from(const FinAbGroup& A, int n, int q, int i, const DegeneracyBranchFn& branch) {
  detail::check_degeneracy_index(q, i);
  const FinAbGroup src = kan_level(A, n, q), tgt = kan_level(A, n, q + 1);
  const std::size_t rk = A.rank();
  Matrix<std::int64_t> m(tgt.rank(), src.rank());
  std::int64_t r = 0;
  for (const SimplexTuple& t : all_tuples(q + 1, n)) {
    const DegeneracyAction act = branch(i, t, q);
    if (const auto* s = std::get_if<Shifted>(&act)) detail::add_block(m, rk, r, rank_tuple(s->target, q, n), +1);
    ++r;
  }
  return AbHom(src, tgt, std::move(m));
}

inline AbHom kan_degeneracy_matrix(const FinAbGroup& A, int n, int q, int i) {
  return kan_degeneracy_matrix_from(A, n, q, i, degeneracy_branch);
}

/// Cyclic operator of K(A,2). Levels 0 and 1 are trivial and tau is the identity there.
inline AbHom ka2_cyclic_matrix(const FinAbGroup& A, int q) {
  const FinAbGroup lvl = kan_level(A, 2, q);
  if (q < 2) return AbHom::identity(lvl);
  const std::size_t rk = A.rank();
  Matrix<std::int64_t> m(lvl.rank(), lvl.rank());
  auto at = [q](int u, int v) { return rank_tuple(SimplexTuple({u, v}, q), q, 2); };
  for (int v = 1; v <= q - 1; ++v) {
    const std::int64_t row = at(0, v);
    for (int w = v; w <= q - 1; ++w) detail::add_block(m, rk, row, at(v - 1, w), +1);
    for (int w = v + 1; w <= q - 1; ++w) detail::add_block(m, rk, row, at(v, w), -1);
  }
  for (int u = 1; u < q; ++u)
    for (int v = u + 1; v < q; ++v) detail::add_block(m, rk, at(u, v), at(u - 1, v - 1), +1);
  return AbHom(lvl, lvl, std::move(m));
}

// K(G,1) for abelian G as matrices on G^q; slot j, summand k at j * rank(G) + k.

inline AbHom kg1_face_matrix(const FinAbGroup& G, int q, int i) {
  detail::check_face_index(q, i);
  const FinAbGroup src = FinAbGroup::power(G, q), tgt = FinAbGroup::power(G, q - 1);
  Matrix<std::int64_t> m(tgt.rank(), src.rank());
  const std::size_t rk = G.rank();
  for (int j = 0; j < q - 1; ++j) {
    if (i == 0) {
      detail::add_block(m, rk, j, j + 1, +1);
    } else if (j < i - 1 || i == q) {
      detail::add_block(m, rk, j, j, +1);
    } else if (j == i - 1) {
      detail::add_block(m, rk, j, i - 1, +1);
      detail::add_block(m, rk, j, i, +1);
    } else {
      detail::add_block(m, rk, j, j + 1, +1);
    }
  }
  return AbHom(src, tgt, std::move(m));
}

inline AbHom kg1_degeneracy_matrix(const FinAbGroup& G, int q, int i) {
  detail::check_degeneracy_index(q, i);
  const FinAbGroup src = FinAbGroup::power(G, q), tgt = FinAbGroup::power(G, q + 1);
  Matrix<std::int64_t> m(tgt.rank(), src.rank());
  const std::size_t rk = G.rank();
  for (int j = 0; j <= q; ++j) {
    if (j < i) detail::add_block(m, rk, j, j, +1);
    else if (j > i) detail::add_block(m, rk, j, j - 1, +1);
  }
  return AbHom(src, tgt, std::move(m));
}

inline AbHom kg1_cyclic_matrix(const FinAbGroup& G, int q) {
  const FinAbGroup lvl = FinAbGroup::power(G, q);
  Matrix<std::int64_t> m(lvl.rank(), lvl.rank());
  const std::size_t rk = G.rank();
  for (int j = 0; j < q; ++j) detail::add_block(m, rk, 0, j, -1);
  for (int j = 1; j < q; ++j) detail::add_block(m, rk, j, j - 1, +1);
  return AbHom(lvl, lvl, std::move(m));
}

// K(G,1) over a multiplication table; elements of G^q are q-tuples of element indices.

using GroupTuple = std::vector<int>;

inline GroupTuple kg1_face(const TableGroup& G, int q, int i, const GroupTuple& x) {
  detail::check_face_index(q, i);
  if (static_cast<int>(x.size()) != q) throw InvalidInput("kg1_face: tuple length differs from the level");
  GroupTuple y;
  y.reserve(static_cast<std::size_t>(q - 1));
  for (int j = 0; j < q; ++j) {
    if (j == i - 1 && i < q) {
      y.push_back(G.mul(x[j], x[j + 1]));
      ++j;
    } else if (!(i == 0 && j == 0) && !(i == q && j == q - 1)) {
      y.push_back(x[j]);
    }
  }
  return y;
}

inline GroupTuple kg1_degeneracy(const TableGroup& G, int q, int i, const GroupTuple& x) {
  detail::check_degeneracy_index(q, i);
  if (static_cast<int>(x.size()) != q) throw InvalidInput("kg1_degeneracy: tuple length differs from the level");
  GroupTuple y(x);
  y.insert(y.begin() + i, G.identity());
  return y;
}

inline GroupTuple kg1_cyclic(const TableGroup& G, int q, const GroupTuple& x) {
  if (static_cast<int>(x.size()) != q) throw InvalidInput("kg1_cyclic: tuple length differs from the level");
  if (q == 0) return x;
  int prod = G.identity();
  for (int g : x) prod = G.mul(prod, g);
  GroupTuple y{G.inv(prod)};
  y.insert(y.end(), x.begin(), x.end() - 1);
  return y;
}

/// Row-major index of a tuple in G^q (first slot slowest).
inline std::size_t tuple_index(const TableGroup& G, const GroupTuple& x) {
  std::size_t idx = 0;
  for (int g : x) idx = idx * static_cast<std::size_t>(G.order()) + static_cast<std::size_t>(g);
  return idx;
}

inline GroupTuple tuple_at(const TableGroup& G, int q, std::size_t idx) {
  GroupTuple x(static_cast<std::size_t>(q));
  for (int j = q; j-- > 0;) {
    x[j] = static_cast<int>(idx % static_cast<std::size_t>(G.order()));
    idx /= static_cast<std::size_t>(G.order());
  }
  return x;
}

// Literal piecewise tables for n = 2 and n = 3, written against their own
// coordinate numbering so that they share nothing with the general formula.

namespace tables {

using Coord = std::vector<int>;
using Row = std::vector<std::pair<Coord, int>>;  // signed source coordinates

namespace detail {

inline std::map<Coord, std::size_t> lex_index(int q, int n) {
  std::map<Coord, std::size_t> idx;
  std::size_t k = 0;
  if (n == 2) {
    for (int u = 0; u < q; ++u)
      for (int v = u + 1; v < q; ++v) idx[{u, v}] = k++;
  } else {
    for (int u = 0; u < q; ++u)
      for (int v = u + 1; v < q; ++v)
        for (int w = v + 1; w < q; ++w) idx[{u, v, w}] = k++;
  }
  return idx;
}

inline Row face2(int i, int u, int v) {
  if (v < i - 1) return {{{u, v}, 1}};
  if (v == i - 1) return {{{u, v}, 1}, {{u, i}, 1}, {{v, i}, -1}};
  if (u <= i - 1) return {{{u, v + 1}, 1}};
  return {{{u + 1, v + 1}, 1}};
}

inline Row degeneracy2(int i, int u, int v) {
  if (v < i) return {{{u, v}, 1}};
  if (v == i) return {};
  if (u < i) return {{{u, v - 1}, 1}};
  if (u == i && u < v - 1) return {{{u, v - 1}, 1}};
  if (u == i) return {};
  return {{{u - 1, v - 1}, 1}};
}

inline Row face3(int i, int u, int v, int w) {
  if (w < i - 1) return {{{u, v, w}, 1}};
  if (w == i - 1) return {{{u, v, w}, 1}, {{u, v, i}, 1}, {{u, w, i}, -1}, {{v, w, i}, 1}};
  if (v <= i - 1) return {{{u, v, w + 1}, 1}};
  if (u <= i - 1) return {{{u, v + 1, w + 1}, 1}};
  return {{{u + 1, v + 1, w + 1}, 1}};
}

inline Row degeneracy3(int i, int u, int v, int w) {
  if (w < i) return {{{u, v, w}, 1}};
  if (w == i) return {};
  if (v < i) return {{{u, v, w - 1}, 1}};
  if (v == i && v < w - 1) return {{{u, v, w - 1}, 1}};
  if (v == i) return {};
  if (u < i) return {{{u, v - 1, w - 1}, 1}};
  if (u == i && u < v - 1) return {{{u, v - 1, w - 1}, 1}};
  if (u == i) return {};
  return {{{u - 1, v - 1, w - 1}, 1}};
}

inline AbHom assemble(const FinAbGroup& A, int n, int q_src, int q_tgt, const std::function<Row(const Coord&)>& rule) {
  const auto src_idx = lex_index(q_src, n), tgt_idx = lex_index(q_tgt, n);
  const FinAbGroup src = FinAbGroup::power(A, src_idx.size()), tgt = FinAbGroup::power(A, tgt_idx.size());
  const std::size_t rk = A.rank();
  Matrix<std::int64_t> m(tgt.rank(), src.rank());
  for (const auto& [c, r] : tgt_idx)
    for (const auto& [s, sign] : rule(c)) {
      const auto it = src_idx.find(s);
      if (it == src_idx.end()) throw ConsistencyError("piecewise table refers to a coordinate outside the source level");
      for (std::size_t k = 0; k < rk; ++k) m(r * rk + k, it->second * rk + k) += sign;
    }
  return AbHom(src, tgt, std::move(m));
}

}  // namespace detail

inline AbHom face_matrix(const FinAbGroup& A, int n, int q, int i) {
  emforge::detail::check_face_index(q, i);
  if (n == 2) return detail::assemble(A, 2, q, q - 1, [i](const Coord& c) { return detail::face2(i, c[0], c[1]); });
  if (n == 3) return detail::assemble(A, 3, q, q - 1, [i](const Coord& c) { return detail::face3(i, c[0], c[1], c[2]); });
  throw InvalidInput("piecewise tables exist for n = 2 and n = 3 only");
}

inline AbHom degeneracy_matrix(const FinAbGroup& A, int n, int q, int i) {
  emforge::detail::check_degeneracy_index(q, i);
  if (n == 2) return detail::assemble(A, 2, q, q + 1, [i](const Coord& c) { return detail::degeneracy2(i, c[0], c[1]); });
  if (n == 3)
    return detail::assemble(A, 3, q, q + 1, [i](const Coord& c) { return detail::degeneracy3(i, c[0], c[1], c[2]); });
  throw InvalidInput("piecewise tables exist for n = 2 and n = 3 only");
}

}  // namespace tables

namespace detail {

// Row `r` of an AbHom between coordinate levels of K(A,n), as "a(0,2)-a(1,2)".
inline std::string row_expression(const AbHom& f, std::size_t r, const FinAbGroup& A, int n, int q_src) {
  std::string s;
  const std::size_t rk = A.rank();
  for (std::size_t c = 0; c < f.matrix().cols(); ++c) {
    const std::int64_t x = f.matrix()(r, c);
    if (x == 0) continue;
    const std::int64_t m = f.target().modulus(r);
    const std::int64_t sx = 2 * x > m ? x - m : x;
    if (!s.empty() || sx < 0) s += sx < 0 ? "-" : "+";
    if (sx != 1 && sx != -1) s += std::to_string(sx < 0 ? -sx : sx) + "*";
    s += "a" + unrank_tuple(static_cast<std::int64_t>(c / rk), q_src, n).str();
    if (rk > 1) s += "[" + std::to_string(c % rk) + "]";
  }
  return s.empty() ? "0" : s;
}

inline std::optional<std::size_t> first_row_difference(const AbHom& a, const AbHom& b) {
  if (a.source() != b.source() || a.target() != b.target()) throw ConsistencyError("matrices of different shapes compared");
  for (std::size_t r = 0; r < a.matrix().rows(); ++r)
    for (std::size_t c = 0; c < a.matrix().cols(); ++c)
      if (a.matrix()(r, c) != b.matrix()(r, c)) return r;
  return std::nullopt;
}

}  // namespace detail

/// General-formula matrices against the literal n = 2, 3 tables for
/// q <= q_max, and against the K(G,1) formulas at n = 1 for q <= q_max_n1.
inline VerificationReport crosscheck_specializations(const FinAbGroup& A, int q_max, int q_max_n1 = 8,
                                                     const FaceBranchFn& face = face_branch,
                                                     const DegeneracyBranchFn& degeneracy = degeneracy_branch) {
  VerificationReport rep;
  rep.suite = "crosscheck";
  rep.subject = A.str();
  rep.strategy = Strategy::exhaustive(q_max);
  rep.equality = "matrix";
  const std::size_t rk = A.rank();
  auto compare = [&](const std::string& family, int n, int q, int i, const AbHom& general, const AbHom& literal) {
    ++rep.relations_checked;
    ++rep.families[family];
    if (auto r = detail::first_row_difference(general, literal)) {
      const int q_tgt = family.find("face") != std::string::npos ? q - 1 : q + 1;
      const std::string coord = unrank_tuple(static_cast<std::int64_t>(*r / rk), q_tgt, n).str();
      rep.failures.push_back({family, q, {n, i}, "b" + coord, detail::row_expression(general, *r, A, n, q),
                              detail::row_expression(literal, *r, A, n, q)});
    }
  };
  for (int n : {2, 3})
    for (int q = 0; q <= q_max; ++q) {
      const std::string tag = " (n=" + std::to_string(n) + ")";
      if (q >= 1)
        for (int i = 0; i <= q; ++i)
          compare("general face = table face" + tag, n, q, i, kan_face_matrix_from(A, n, q, i, face),
                  tables::face_matrix(A, n, q, i));
      for (int i = 0; i <= q; ++i)
        compare("general degeneracy = table degeneracy" + tag, n, q, i, kan_degeneracy_matrix_from(A, n, q, i, degeneracy),
                tables::degeneracy_matrix(A, n, q, i));
    }
  for (int q = 0; q <= q_max_n1; ++q) {
    if (q >= 1)
      for (int i = 0; i <= q; ++i)
        compare("general face = K(G,1) face (n=1)", 1, q, i, kan_face_matrix_from(A, 1, q, i, face), kg1_face_matrix(A, q, i));
    for (int i = 0; i <= q; ++i)
      compare("general degeneracy = K(G,1) degeneracy (n=1)", 1, q, i, kan_degeneracy_matrix_from(A, 1, q, i, degeneracy),
              kg1_degeneracy_matrix(A, q, i));
  }
  std::stable_sort(rep.failures.begin(), rep.failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.relation, a.level, a.indices) < std::tie(b.relation, b.level, b.indices);
  });
  return rep;
}

namespace detail {

// Read-mostly memo of structure maps keyed by (kind, q, i).
class MapCache {
 public:
  AbHom get(char kind, int q, int i, const std::function<AbHom()>& make) {
    const auto key = std::make_tuple(kind, q, i);
    {
      std::shared_lock lock(mutex_);
      if (auto it = maps_.find(key); it != maps_.end()) return it->second;
    }
    AbHom h = make();
    std::unique_lock lock(mutex_);
    return maps_.emplace(key, std::move(h)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<char, int, int>, AbHom> maps_;
};

}  // namespace detail

inline std::string kan_name(const FinAbGroup& A, int n) { return "K(" + A.str() + "," + std::to_string(n) + ")"; }

/// K(A,n) from the general formula.
inline AbelianFamily kan_family(const FinAbGroup& A, int n) {
  if (n < 1) throw InvalidInput("K(A,n) needs n >= 1");
  auto cache = std::make_shared<detail::MapCache>();
  AbelianFamily f;
  f.name = kan_name(A, n);
  f.level = [A, n](int q) { return kan_level(A, n, q); };
  f.face = [A, n, cache](int q, int i) { return cache->get('d', q, i, [&] { return kan_face_matrix(A, n, q, i); }); };
  f.degeneracy = [A, n, cache](int q, int i) {
    return cache->get('s', q, i, [&] { return kan_degeneracy_matrix(A, n, q, i); });
  };
  return f;
}

/// K(A,2) with its cyclic operator.
inline AbelianFamily ka2_family(const FinAbGroup& A) {
  AbelianFamily f = kan_family(A, 2);
  auto cache = std::make_shared<detail::MapCache>();
  f.cyclic = [A, cache](int q) { return cache->get('t', q, 0, [&] { return ka2_cyclic_matrix(A, q); }); };
  return f;
}

/// K(G,1) for abelian G, with its cyclic operator.
inline AbelianFamily kg1_abelian_family(const FinAbGroup& G) {
  auto cache = std::make_shared<detail::MapCache>();
  AbelianFamily f;
  f.name = "K(" + G.str() + ",1)";
  f.level = [G](int q) {
    if (q < 0) throw InvalidInput("negative simplicial level");
    return FinAbGroup::power(G, static_cast<std::size_t>(q));
  };
  f.face = [G, cache](int q, int i) { return cache->get('d', q, i, [&] { return kg1_face_matrix(G, q, i); }); };
  f.degeneracy = [G, cache](int q, int i) { return cache->get('s', q, i, [&] { return kg1_degeneracy_matrix(G, q, i); }); };
  f.cyclic = [G, cache](int q) { return cache->get('t', q, 0, [&] { return kg1_cyclic_matrix(G, q); }); };
  return f;
}

inline std::string describe_tuple(const GroupTuple& x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
  return s + ")";
}

/// K(G,1) over a multiplication table; level-q elements numbered by tuple_index.
inline IndexedFamily kg1_table_family(const TableGroup& G) {
  auto g = std::make_shared<const TableGroup>(G);
  IndexedFamily f;
  f.name = "K(" + G.name() + ",1)";
  f.abelian = G.is_abelian();
  f.level_order = [g](int q) {
    const Integer base = g->order();
    return Integer(boost::multiprecision::pow(base, static_cast<unsigned>(q)));
  };
  f.face = [g](int q, int i, std::size_t x) { return tuple_index(*g, kg1_face(*g, q, i, tuple_at(*g, q, x))); };
  f.degeneracy = [g](int q, int i, std::size_t x) {
    return tuple_index(*g, kg1_degeneracy(*g, q, i, tuple_at(*g, q, x)));
  };
  f.cyclic = [g](int q, std::size_t x) { return tuple_index(*g, kg1_cyclic(*g, q, tuple_at(*g, q, x))); };
  f.multiply = [g](int q, std::size_t a, std::size_t b) {
    GroupTuple x = tuple_at(*g, q, a);
    const GroupTuple y = tuple_at(*g, q, b);
    for (int j = 0; j < q; ++j) x[j] = g->mul(x[j], y[j]);
    return tuple_index(*g, x);
  };
  f.describe = [g](int q, std::size_t x) { return describe_tuple(tuple_at(*g, q, x)); };
  return f;
}

/// The same family seen through element indices (enumerate_elements order).
inline IndexedFamily indexed_from_abelian(const AbelianFamily& K) {
  auto k = std::make_shared<const AbelianFamily>(K);
  IndexedFamily f;
  f.name = K.name;
  f.abelian = true;
  f.level_order = [k](int q) { return k->level(q).order(); };
  f.face = [k](int q, int i, std::size_t x) {
    const AbHom d = k->face(q, i);
    return element_index(d.target(), d.apply(element_coords(d.source(), x)));
  };
  f.degeneracy = [k](int q, int i, std::size_t x) {
    const AbHom s = k->degeneracy(q, i);
    return element_index(s.target(), s.apply(element_coords(s.source(), x)));
  };
  if (K.cyclic)
    f.cyclic = [k](int q, std::size_t x) {
      const AbHom t = k->cyclic(q);
      return element_index(t.target(), t.apply(element_coords(t.source(), x)));
    };
  f.multiply = [k](int q, std::size_t a, std::size_t b) {
    const FinAbGroup g = k->level(q);
    auto x = element_coords(g, a);
    const auto y = element_coords(g, b);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[j];
    return element_index(g, x);
  };
  f.describe = [k](int q, std::size_t x) {
    const FinAbGroup g = k->level(q);
    return AbElement(g, element_coords(g, x)).str();
  };
  return f;
}

}  // namespace emforge
