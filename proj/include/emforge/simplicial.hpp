#pragma once

// Simplicial families and the relation verifier. A family is evaluated
// through a context that knows how to build, compose and compare its maps:
// integer matrices for abelian families, functions on enumerated elements
// for finite (possibly non-abelian) groups, and linear maps on tensors for
// Hopf-algebraic modules. The relation suites are written once against that
// interface.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "emforge/errors.hpp"
#include "emforge/fin_ab.hpp"
#include "emforge/report.hpp"
#include "emforge/rng.hpp"

namespace emforge {

/// Simplicial abelian group with matrix-valued structure maps.
struct AbelianFamily {
  std::string name;
  std::function<FinAbGroup(int q)> level;
  std::function<AbHom(int q, int i)> face;        // level q -> q-1, 0 <= i <= q
  std::function<AbHom(int q, int i)> degeneracy;  // level q -> q+1, 0 <= i <= q
  std::function<AbHom(int q)> cyclic;             // optional tau_q
};

/// Finite simplicial group whose level-q elements are numbered 0..|K_q|-1,
/// with 0 the identity.
struct IndexedFamily {
  std::string name;
  bool abelian = false;
  std::function<Integer(int q)> level_order;
  std::function<std::size_t(int q, int i, std::size_t x)> face;
  std::function<std::size_t(int q, int i, std::size_t x)> degeneracy;
  std::function<std::size_t(int q, std::size_t x)> cyclic;  // optional
  std::function<std::size_t(int q, std::size_t a, std::size_t b)> multiply;
  std::function<std::string(int q, std::size_t x)> describe;
};

/// Counterexample to a relation lhs = rhs.
struct Mismatch {
  std::string witness;
  std::string lhs;
  std::string rhs;
};

/// Generator of a relation word. Words are applied right to left.
struct Gen {
  enum class Op { Face, Degeneracy, Cyclic, Transposition };
  Op op;
  int index = 0;
};
using Word = std::vector<Gen>;

inline Gen F(int i) { return {Gen::Op::Face, i}; }
inline Gen S(int i) { return {Gen::Op::Degeneracy, i}; }
inline Gen T() { return {Gen::Op::Cyclic, 0}; }
inline Gen P(int i) { return {Gen::Op::Transposition, i}; }

/// Matrix context: maps are AbHom, equality is exact matrix equality.
class MatrixContext {
 public:
  using map_type = AbHom;
  explicit MatrixContext(const AbelianFamily& family) : family_(family) {}

  std::string subject() const { return family_.name; }
  std::string equality_mode(const Strategy&) const { return "matrix"; }
  bool has_cyclic() const { return static_cast<bool>(family_.cyclic); }
  bool has_transpositions() const { return false; }

  AbHom face(int q, int i) const { return family_.face(q, i); }
  AbHom degeneracy(int q, int i) const { return family_.degeneracy(q, i); }
  AbHom cyclic(int q) const { return family_.cyclic(q); }
  AbHom transposition(int, int) const { throw InvalidInput("abelian family has no symmetric structure"); }
  AbHom identity(int q) const { return AbHom::identity(family_.level(q)); }
  AbHom compose(const AbHom& outer, const AbHom& inner) const { return outer.after(inner); }

  std::optional<Mismatch> compare(const AbHom& lhs, const AbHom& rhs, int, const Strategy&, std::uint64_t) const {
    auto c = lhs.first_difference(rhs);
    if (!c) return std::nullopt;
    return Mismatch{"e_" + std::to_string(*c), AbElement(lhs.target(), lhs.column(*c)).str(),
                    AbElement(rhs.target(), rhs.column(*c)).str()};
  }

 private:
  const AbelianFamily& family_;
};

/// Function-on-indices context; equality by exhaustive or sampled evaluation.
class IndexedContext {
 public:
  struct IndexMap {
    int from = 0;
    int to = 0;
    std::function<std::size_t(std::size_t)> apply;
  };
  using map_type = IndexMap;

  IndexedContext(const IndexedFamily& family, Integer exhaustive_cap = Integer(1) << 22)
      : family_(family), cap_(std::move(exhaustive_cap)) {}

  std::string subject() const { return family_.name; }
  std::string equality_mode(const Strategy& s) const { return s.is_sampled() ? "sampled" : "exhaustive"; }
  bool has_cyclic() const { return static_cast<bool>(family_.cyclic); }
  bool has_transpositions() const { return false; }

  IndexMap face(int q, int i) const {
    const auto& f = family_.face;
    return {q, q - 1, [f, q, i](std::size_t x) { return f(q, i, x); }};
  }
  IndexMap degeneracy(int q, int i) const {
    const auto& s = family_.degeneracy;
    return {q, q + 1, [s, q, i](std::size_t x) { return s(q, i, x); }};
  }
  IndexMap cyclic(int q) const {
    const auto& t = family_.cyclic;
    return {q, q, [t, q](std::size_t x) { return t(q, x); }};
  }
  IndexMap transposition(int, int) const { throw InvalidInput("indexed family has no symmetric structure"); }
  IndexMap identity(int q) const {
    return {q, q, [](std::size_t x) { return x; }};
  }
  IndexMap compose(const IndexMap& outer, const IndexMap& inner) const {
    return {inner.from, outer.to, [o = outer.apply, i = inner.apply](std::size_t x) { return o(i(x)); }};
  }

  std::optional<Mismatch> compare(const IndexMap& lhs, const IndexMap& rhs, int q, const Strategy& s,
                                  std::uint64_t stream) const {
    const Integer order = family_.level_order(q);
    auto check = [&](std::size_t x) -> std::optional<Mismatch> {
      const std::size_t a = lhs.apply(x), b = rhs.apply(x);
      if (a == b) return std::nullopt;
      return Mismatch{family_.describe(q, x), family_.describe(lhs.to, a), family_.describe(rhs.to, b)};
    };
    if (!s.is_sampled()) {
      if (order > cap_)
        throw CapExceeded("exhaustive verification of level " + std::to_string(q) + " of " + family_.name +
                              "; use a sampled strategy",
                          order.str());
      const auto n = static_cast<std::size_t>(order);
      for (std::size_t x = 0; x < n; ++x)
        if (auto m = check(x)) return m;
      return std::nullopt;
    }
    Rng rng(derive_seed(s.seed, stream));
    if (order <= Integer(s.samples)) {
      for (std::size_t x = 0; x < static_cast<std::size_t>(order); ++x)
        if (auto m = check(x)) return m;
      return std::nullopt;
    }
    const auto bound = order > Integer(std::numeric_limits<std::uint64_t>::max()) ? std::numeric_limits<std::uint64_t>::max()
                                                                                     : static_cast<std::uint64_t>(order) - 1;
    std::uniform_int_distribution<std::uint64_t> dist(0, bound);
    for (int k = 0; k < s.samples; ++k)
      if (auto m = check(static_cast<std::size_t>(dist(rng)))) return m;
    return std::nullopt;
  }

 private:
  const IndexedFamily& family_;
  Integer cap_;
};

namespace detail {

template <class Ctx>
class RelationChecker {
 public:
  RelationChecker(const Ctx& ctx, const Strategy& strategy, std::string suite) : ctx_(ctx), strategy_(strategy) {
    report_.suite = std::move(suite);
    report_.subject = ctx.subject();
    report_.strategy = strategy;
    report_.equality = ctx.equality_mode(strategy);
  }

  typename Ctx::map_type build(const Word& w, int q) const {
    std::optional<typename Ctx::map_type> m;
    int level = q;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      typename Ctx::map_type g = gen(*it, level);
      m = m ? ctx_.compose(g, *m) : g;
    }
    return m ? *m : ctx_.identity(q);
  }

  void check(const std::string& family, int q, std::vector<int> indices, const Word& lhs, const Word& rhs) {
    std::uint64_t stream = fnv1a(family);
    stream = splitmix64(stream ^ static_cast<std::uint64_t>(q));
    for (int i : indices) stream = splitmix64(stream ^ static_cast<std::uint64_t>(i + 1));
    auto l = build(lhs, q);
    auto r = build(rhs, q);
    ++report_.relations_checked;
    ++report_.families[family];
    if (auto mm = ctx_.compare(l, r, q, strategy_, stream))
      report_.failures.push_back({family, q, std::move(indices), mm->witness, mm->lhs, mm->rhs});
  }

  VerificationReport finish() {
    std::stable_sort(report_.failures.begin(), report_.failures.end(), [](const Failure& a, const Failure& b) {
      return std::tie(a.relation, a.level, a.indices) < std::tie(b.relation, b.level, b.indices);
    });
    return report_;
  }

 private:
  typename Ctx::map_type gen(const Gen& g, int& level) const {
    switch (g.op) {
      case Gen::Op::Face:
        return ctx_.face(level--, g.index);
      case Gen::Op::Degeneracy:
        return ctx_.degeneracy(level++, g.index);
      case Gen::Op::Cyclic:
        return ctx_.cyclic(level);
      case Gen::Op::Transposition:
        return ctx_.transposition(level, g.index);
    }
    throw InvalidInput("unknown generator");
  }

  const Ctx& ctx_;
  Strategy strategy_;
  VerificationReport report_;
};

}  // namespace detail

/// The five simplicial identity families. Faces are checked on levels up to
/// q_max+1, degeneracies on levels up to q_max.
template <class Ctx>
VerificationReport verify_simplicial(const Ctx& ctx, const Strategy& strategy) {
  const int qm = strategy.q_max;
  if (qm < 1) throw InvalidInput("verify_simplicial: q_max must be at least 1");
  detail::RelationChecker<Ctx> rc(ctx, strategy, "simplicial");
  for (int q = 2; q <= qm + 1; ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i) rc.check("d_i d_j = d_{j-1} d_i", q, {i, j}, {F(i), F(j)}, {F(j - 1), F(i)});
  for (int q = 0; q <= qm - 1; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= j; ++i) rc.check("s_i s_j = s_{j+1} s_i", q, {i, j}, {S(i), S(j)}, {S(j + 1), S(i)});
  for (int q = 0; q <= qm; ++q)
    for (int j = 0; j <= q; ++j) {
      rc.check("d_j s_j = id", q, {j}, {F(j), S(j)}, {});
      rc.check("d_{j+1} s_j = id", q, {j}, {F(j + 1), S(j)}, {});
    }
  for (int q = 1; q <= qm; ++q)
    for (int j = 0; j <= q; ++j) {
      for (int i = 0; i < j; ++i) rc.check("d_i s_j = s_{j-1} d_i", q, {i, j}, {F(i), S(j)}, {S(j - 1), F(i)});
      for (int i = j + 2; i <= q + 1; ++i) rc.check("d_i s_j = s_j d_{i-1}", q, {i, j}, {F(i), S(j)}, {S(j), F(i - 1)});
    }
  return rc.finish();
}

/// Cyclic-category relations on levels 0..q_max.
template <class Ctx>
VerificationReport verify_cyclic(const Ctx& ctx, const Strategy& strategy) {
  if (!ctx.has_cyclic()) throw InvalidInput("verify_cyclic: family has no cyclic operator");
  const int qm = strategy.q_max;
  detail::RelationChecker<Ctx> rc(ctx, strategy, "cyclic");
  for (int q = 0; q <= qm; ++q) {
    if (q >= 1) {
      rc.check("d_0 t = d_q", q, {}, {F(0), T()}, {F(q)});
      for (int i = 1; i <= q; ++i) rc.check("d_i t = t d_{i-1}", q, {i}, {F(i), T()}, {T(), F(i - 1)});
    }
    for (int i = 1; i <= q; ++i) rc.check("s_i t = t s_{i-1}", q, {i}, {S(i), T()}, {T(), S(i - 1)});
    rc.check("s_0 t = t^2 s_q", q, {}, {S(0), T()}, {T(), T(), S(q)});
    rc.check("t^{q+1} = id", q, {}, Word(static_cast<std::size_t>(q + 1), T()), {});
  }
  return rc.finish();
}

/// Coxeter relations of the transpositions t_i = (i,i+1) acting on level q
/// (1 <= i <= q), and t_1 t_2 ... t_q = tau_q when a cyclic operator exists.
template <class Ctx>
VerificationReport verify_symmetric(const Ctx& ctx, const Strategy& strategy) {
  if (!ctx.has_transpositions()) throw InvalidInput("verify_symmetric: family has no symmetric structure");
  const int qm = strategy.q_max;
  detail::RelationChecker<Ctx> rc(ctx, strategy, "symmetric");
  for (int q = 1; q <= qm; ++q) {
    for (int i = 1; i <= q; ++i) rc.check("t_i^2 = id", q, {i}, {P(i), P(i)}, {});
    for (int i = 1; i <= q; ++i)
      for (int j = i + 2; j <= q; ++j) rc.check("t_i t_j = t_j t_i", q, {i, j}, {P(i), P(j)}, {P(j), P(i)});
    for (int i = 1; i + 1 <= q; ++i)
      rc.check("t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}", q, {i}, {P(i), P(i + 1), P(i)}, {P(i + 1), P(i), P(i + 1)});
    if (ctx.has_cyclic()) {
      Word cycle;
      for (int i = 1; i <= q; ++i) cycle.push_back(P(i));
      rc.check("t_1 t_2 ... t_q = tau", q, {}, cycle, {T()});
    }
  }
  return rc.finish();
}

}  // namespace emforge
