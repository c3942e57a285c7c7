#pragma once

// Cyclic modules over a Hopf algebra: H^(δ,σ), its symmetric action, and
// ₂K(H), the linear counterpart of K(A,2).
//
// Every structure map is a "leg program": each source leg is split into a
// number of Sweedler parts by iterated comultiplication, and each part is
// either multiplied into some target leg (possibly through the antipode) or
// absorbed by ε or δ. Target legs are ordered products of such factors.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "emforge/em_construct.hpp"
#include "emforge/hopf.hpp"
#include "emforge/simplex_index.hpp"
#include "emforge/simplicial.hpp"

namespace emforge {

template <class S>
struct LegProgram {
  enum class Sink { Target, Counit, Delta };
  struct Factor {
    int leg = -1;  // source leg, or -1 for a constant
    int part = 0;
    bool antipode = false;
    LinComb<S> constant;
  };

  int source_degree = 0;
  std::vector<int> parts;                   // Sweedler parts per source leg
  std::vector<std::vector<Sink>> sinks;     // per source leg and part
  std::vector<std::vector<Factor>> target;  // ordered factors per target leg; empty means 1

  LegProgram(int source, int target_degree) : source_degree(source), parts(source, 1), target(target_degree) {
    sinks.assign(static_cast<std::size_t>(source), {Sink::Counit});
  }

  int target_degree() const { return static_cast<int>(target.size()); }

  void set_parts(int leg, int k) {
    parts[leg] = k;
    sinks[leg].assign(static_cast<std::size_t>(k), Sink::Counit);
  }
  void send(int leg, int part, int to, bool antipode = false) {
    sinks[leg][part] = Sink::Target;
    target[to].push_back({leg, part, antipode, {}});
  }
  void copy(int leg, int to) { send(leg, 0, to); }
  void absorb_delta(int leg, int part) { sinks[leg][part] = Sink::Delta; }
  void constant(int to, LinComb<S> c) { target[to].push_back({-1, 0, false, std::move(c)}); }

  /// Each (leg, part) feeds exactly one target factor or one character.
  void validate() const {
    std::vector<std::vector<int>> uses(parts.size());
    for (std::size_t s = 0; s < parts.size(); ++s) uses[s].assign(static_cast<std::size_t>(parts[s]), 0);
    for (const auto& leg : target)
      for (const Factor& f : leg)
        if (f.leg >= 0) ++uses.at(static_cast<std::size_t>(f.leg)).at(static_cast<std::size_t>(f.part));
    for (std::size_t s = 0; s < parts.size(); ++s)
      for (int p = 0; p < parts[s]; ++p) {
        const int want = sinks[s][p] == Sink::Target ? 1 : 0;
        if (uses[s][p] != want)
          throw ConsistencyError("leg program: part " + std::to_string(p) + " of leg " + std::to_string(s) +
                                 " is used " + std::to_string(uses[s][p]) + " times");
      }
  }
};

template <class S>
TensorVector<S> run_program(const HopfAlgebra<S>& H, const LegProgram<S>& prog, const TensorVector<S>& x,
                            const std::vector<S>* delta = nullptr) {
  using Sink = typename LegProgram<S>::Sink;
  if (x.degree() != prog.source_degree)
    throw InvalidInput("degree mismatch: tensor of degree " + std::to_string(x.degree()) + ", map expects " +
                       std::to_string(prog.source_degree));
  const int m = prog.source_degree, T = prog.target_degree();
  TensorVector<S> out(T);
  if (const auto* mono = H.monomial()) {
    bool simple = true;
    S konst(1);
    for (const auto& leg : prog.target)
      for (const auto& f : leg)
        if (f.leg < 0) {
          if (f.constant.size() != 1) simple = false;
          else konst *= f.constant.begin()->second;
        }
    if (simple) {
      const int d = H.dim();
      std::vector<int> labels(static_cast<std::size_t>(T));
      for (const auto& [tuple, c0] : x.terms()) {
        S coeff = c0 * konst;
        for (int s = 0; s < m; ++s)
          for (int p = 0; p < prog.parts[s]; ++p) {
            if (prog.sinks[s][p] == Sink::Counit && !mono->counit_one) coeff *= H.counit[tuple[s]];
            else if (prog.sinks[s][p] == Sink::Delta) coeff *= (*delta)[tuple[s]];
          }
        if (ScalarTraits<S>::is_zero(coeff)) continue;
        for (int t = 0; t < T; ++t) {
          int v = mono->unit;
          for (const auto& f : prog.target[t]) {
            const int lbl = f.leg < 0 ? f.constant.begin()->first : f.antipode ? mono->antipode[tuple[f.leg]] : tuple[f.leg];
            v = mono->mul[static_cast<std::size_t>(v) * d + lbl];
          }
          labels[t] = v;
        }
        out.add(labels, coeff);
      }
      return out;
    }
  }
  std::vector<const std::vector<int>*> pick(static_cast<std::size_t>(m));
  std::vector<const std::vector<std::pair<std::vector<int>, S>>*> expansions(static_cast<std::size_t>(m));

  for (const auto& [tuple, c0] : x.terms()) {
    for (int s = 0; s < m; ++s) expansions[s] = &H.sweedler(tuple[s], prog.parts[s]);
    std::function<void(int, S)> rec = [&](int s, S coeff) {
      if (s < m) {
        for (const auto& [parts, c] : *expansions[s]) {
          pick[s] = &parts;
          rec(s + 1, coeff * c);
        }
        return;
      }
      for (int t = 0; t < m; ++t)
        for (int p = 0; p < prog.parts[t]; ++p) {
          const int lbl = (*pick[t])[p];
          if (prog.sinks[t][p] == Sink::Counit) coeff *= H.counit[lbl];
          else if (prog.sinks[t][p] == Sink::Delta) coeff *= (*delta)[lbl];
        }
      if (ScalarTraits<S>::is_zero(coeff)) return;
      // expand the ordered products leg by leg
      std::vector<std::pair<std::vector<int>, S>> acc{{{}, coeff}};
      for (int t = 0; t < T; ++t) {
        LinComb<S> v = H.unit;
        for (const auto& f : prog.target[t]) {
          if (f.leg < 0) {
            v = H.product(v, f.constant);
            continue;
          }
          const int lbl = (*pick[f.leg])[f.part];
          v = H.product(v, f.antipode ? H.antipode[lbl] : HopfAlgebra<S>::basis(lbl));
        }
        std::vector<std::pair<std::vector<int>, S>> next;
        for (const auto& [pre, pc] : acc)
          for (const auto& [b, bc] : v) {
            auto u = pre;
            u.push_back(b);
            next.emplace_back(std::move(u), pc * bc);
          }
        acc = std::move(next);
        if (acc.empty()) return;
      }
      for (auto& [u, c] : acc) out.add(std::move(u), c);
    };
    rec(0, c0);
  }
  return out;
}

// ---- H^(δ,σ) -----------------------------------------------------------------
// Level n is H^{⊗n}; leg j of the displays (1-based) is leg j-1 here.

template <class S>
LegProgram<S> cm_face_program(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InvalidInput("cm face index out of range");
  LegProgram<S> p(n, n - 1);
  if (i == 0) {
    for (int j = 1; j < n; ++j) p.copy(j, j - 1);
  } else if (i == n) {
    p.absorb_delta(n - 1, 0);
    for (int j = 0; j < n - 1; ++j) p.copy(j, j);
  } else {
    for (int j = 0; j < n; ++j) p.copy(j, j < i ? j : j - 1);
  }
  p.validate();
  return p;
}

/// σ_i puts the unit in position i+1 (1-based), i.e. after leg i.
template <class S>
LegProgram<S> cm_degeneracy_program(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw InvalidInput("cm degeneracy index out of range");
  LegProgram<S> p(n, n + 1);
  for (int j = 0; j < n; ++j) p.copy(j, j < i ? j : j + 1);
  p.validate();
  return p;
}

/// δ(h_n<2>) σ S(h_1<1> ... h_n<1>) ⊗ h_1<2> ⊗ ... ⊗ h_{n-1}<2>.
template <class S>
LegProgram<S> cm_cyclic_program(int n, const LinComb<S>& sigma) {
  if (n < 0) throw InvalidInput("cm cyclic operator: negative level");
  LegProgram<S> p(n, n);
  if (n == 0) return p;
  for (int j = 0; j < n; ++j) p.set_parts(j, 2);
  p.constant(0, sigma);
  for (int j = n - 1; j >= 0; --j) p.send(j, 0, 0, true);  // S reverses the product
  for (int j = 0; j + 1 < n; ++j) p.send(j, 1, j + 1);
  p.absorb_delta(n - 1, 1);
  p.validate();
  return p;
}

/// Transposition (i,i+1), 1 <= i <= n, acting on H^{⊗n}:
/// h_{i-1} h_i<1> ⊗ S(h_i<2>) ⊗ h_i<3> h_{i+1}, with the outer parts present
/// only when the neighbouring legs exist.
template <class S>
LegProgram<S> transposition_program(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw InvalidInput("transposition index out of range");
  LegProgram<S> p(n, n);
  const int c = i - 1;
  const bool left = c >= 1, right = c + 1 < n;
  p.set_parts(c, 1 + (left ? 1 : 0) + (right ? 1 : 0));
  int part = 0;
  if (left) {
    p.copy(c - 1, c - 1);
    p.send(c, part++, c - 1);
  }
  p.send(c, part++, c, true);
  if (right) {
    p.send(c, part++, c + 1);
    p.copy(c + 1, c + 1);
  }
  for (int j = 0; j < n; ++j)
    if (j != c && j != c - 1 && j != c + 1) p.copy(j, j);
  p.validate();
  return p;
}

// ---- ₂K(H) -------------------------------------------------------------------
// Level q is H^{⊗ q(q-1)/2}; leg (u,v), u < v, sits in block v at position u.

inline int sk_degree(int q) { return q < 2 ? 0 : q * (q - 1) / 2; }
inline int sk_leg(int u, int v) { return v * (v - 1) / 2 + u; }

template <class S>
LegProgram<S> sk_face_program(int q, int k) {
  if (q < 1) throw InvalidInput("sk_face: level must be at least 1");
  if (k < 0 || k > q) throw InvalidInput("sk_face: index out of range");
  LegProgram<S> p(sk_degree(q), sk_degree(q - 1));
  if (k == 0) {
    for (int v = 1; v + 1 < q; ++v)
      for (int u = 0; u < v; ++u) p.copy(sk_leg(u + 1, v + 1), sk_leg(u, v));
  } else if (k == q) {
    for (int v = 1; v + 1 < q; ++v)
      for (int u = 0; u < v; ++u) p.copy(sk_leg(u, v), sk_leg(u, v));
  } else {
    // h_{k-1,k} is split into k-1 parts, one for each leg of block k-1
    p.set_parts(sk_leg(k - 1, k), std::max(1, k - 1));
    for (int v = 1; v + 1 < q; ++v)
      for (int u = 0; u < v; ++u) {
        const int t = sk_leg(u, v);
        if (v < k - 1) {
          p.copy(sk_leg(u, v), t);
        } else if (v == k - 1) {
          p.copy(sk_leg(u, k - 1), t);
          p.copy(sk_leg(u, k), t);
          p.send(sk_leg(k - 1, k), u, t, true);
        } else {
          p.copy(sk_leg(u <= k - 1 ? u : u + 1, v + 1), t);
        }
      }
  }
  p.validate();
  return p;
}

template <class S>
LegProgram<S> sk_degeneracy_program(int q, int k) {
  if (q < 0) throw InvalidInput("sk_degeneracy: negative level");
  if (k < 0 || k > q) throw InvalidInput("sk_degeneracy: index out of range");
  LegProgram<S> p(sk_degree(q), sk_degree(q + 1));
  for (int v = 1; v < q; ++v) {
    if (v >= k + 1) p.set_parts(sk_leg(k, v), 2);
  }
  for (int v = 1; v <= q; ++v)
    for (int u = 0; u < v; ++u) {
      const int t = sk_leg(u, v);
      if (v < k) {
        p.copy(sk_leg(u, v), t);
      } else if (v == k) {
        // unit
      } else if (v == k + 1) {
        if (u < k) p.copy(sk_leg(u, k), t);
      } else if (u < k) {
        p.copy(sk_leg(u, v - 1), t);
      } else if (u == k) {
        p.send(sk_leg(k, v - 1), 0, t);
      } else if (u == k + 1) {
        p.send(sk_leg(k, v - 1), 1, t);
      } else {
        p.copy(sk_leg(u - 1, v - 1), t);
      }
    }
  p.validate();
  return p;
}

template <class S>
LegProgram<S> sk_cyclic_program(int q) {
  if (q < 0) throw InvalidInput("sk_cyclic: negative level");
  LegProgram<S> p(sk_degree(q), sk_degree(q));
  if (q < 2) return p;
  for (int w = 1; w < q; ++w) p.set_parts(sk_leg(0, w), w + 1 < q ? 2 : 1);
  for (int x = 1; x < q; ++x)
    for (int w = x + 1; w < q; ++w) p.set_parts(sk_leg(x, w), w + 1 < q ? 3 : 2);
  // (0,1): h_{0,1}<1> ... h_{0,q-2}<1> h_{0,q-1} S(h_{1,2}<1> ... h_{1,q-1}<1>)
  for (int w = 1; w < q; ++w) p.send(sk_leg(0, w), 0, sk_leg(0, 1));
  for (int w = q - 1; w >= 2; --w) p.send(sk_leg(1, w), 0, sk_leg(0, 1), true);
  for (int v = 2; v < q; ++v) {
    // (0,v): h_{v-1,v}<2> ... h_{v-1,q-1}<2> S(h_{v,v+1}<1> ... h_{v,q-1}<1>)
    for (int w = v; w < q; ++w) p.send(sk_leg(v - 1, w), 1, sk_leg(0, v));
    for (int w = q - 1; w > v; --w) p.send(sk_leg(v, w), 0, sk_leg(0, v), true);
    // (1,v): h_{0,v-1}<2>;  (u,v): h_{u-1,v-1}<3>
    p.send(sk_leg(0, v - 1), 1, sk_leg(1, v));
    for (int u = 2; u < v; ++u) p.send(sk_leg(u - 1, v - 1), 2, sk_leg(u, v));
  }
  p.validate();
  return p;
}

// ---- linear families and their verification context --------------------------

template <class S>
struct LinearMap {
  int from = 0;
  int to = 0;
  std::function<TensorVector<S>(const TensorVector<S>&)> apply;
};

template <class S>
struct LinearFamily {
  std::string name;
  std::shared_ptr<const HopfAlgebra<S>> algebra;
  std::function<int(int q)> degree;
  std::function<LinearMap<S>(int q, int i)> face;
  std::function<LinearMap<S>(int q, int i)> degeneracy;
  std::function<LinearMap<S>(int q)> cyclic;              // optional
  std::function<LinearMap<S>(int q, int i)> transposition;  // optional
};

namespace detail {

template <class S>
LinearMap<S> program_map(std::shared_ptr<const HopfAlgebra<S>> H, int from, int to, LegProgram<S> prog,
                         std::shared_ptr<const std::vector<S>> delta = nullptr) {
  auto pp = std::make_shared<const LegProgram<S>>(std::move(prog));
  return {from, to, [H, pp, delta](const TensorVector<S>& x) { return run_program(*H, *pp, x, delta.get()); }};
}

}  // namespace detail

/// H^(δ,σ). Throws InvalidInput unless (δ,σ) is a modular pair in involution.
template <class S>
LinearFamily<S> cm_family(const HopfAlgebra<S>& algebra, const ModularPair<S>& mp) {
  const auto check = check_modular_pair(algebra, mp);
  if (!check.pass()) {
    const Failure& f = check.failures.front();
    throw InvalidInput("not a modular pair in involution over " + algebra.name + ": " + f.relation + " fails at " +
                       f.witness);
  }
  auto H = std::make_shared<const HopfAlgebra<S>>(algebra);
  auto delta = std::make_shared<const std::vector<S>>(mp.delta);
  const bool trivial = mp.delta == algebra.counit && mp.sigma == algebra.unit;
  LinearFamily<S> f;
  f.name = trivial ? algebra.name + "^(e,1)" : algebra.name + "^(d,s)";
  f.algebra = H;
  f.degree = [](int q) { return q; };
  f.face = [H, delta](int q, int i) { return detail::program_map(H, q, q - 1, cm_face_program<S>(q, i), delta); };
  f.degeneracy = [H](int q, int i) { return detail::program_map(H, q, q + 1, cm_degeneracy_program<S>(q, i)); };
  auto sigma = mp.sigma;
  f.cyclic = [H, delta, sigma](int q) { return detail::program_map(H, q, q, cm_cyclic_program<S>(q, sigma), delta); };
  if (trivial && algebra.cocommutative)
    f.transposition = [H](int q, int i) { return detail::program_map(H, q, q, transposition_program<S>(q, i)); };
  return f;
}

/// H^(ε,1) with the symmetric action; H must be cocommutative.
template <class S>
LinearFamily<S> symmetric_family(const HopfAlgebra<S>& algebra) {
  if (!algebra.cocommutative) throw InvalidInput("symmetric action needs a cocommutative Hopf algebra; " + algebra.name + " is not");
  return cm_family(algebra, ModularPair<S>::trivial(algebra));
}

template <class S>
LinearFamily<S> sk_family(const HopfAlgebra<S>& algebra) {
  if (!algebra.commutative) throw InvalidInput("2K(H) needs a commutative Hopf algebra; " + algebra.name + " is not");
  auto H = std::make_shared<const HopfAlgebra<S>>(algebra);
  LinearFamily<S> f;
  f.name = "2K(" + algebra.name + ")";
  f.algebra = H;
  f.degree = sk_degree;
  f.face = [H](int q, int k) { return detail::program_map(H, q, q - 1, sk_face_program<S>(q, k)); };
  f.degeneracy = [H](int q, int k) { return detail::program_map(H, q, q + 1, sk_degeneracy_program<S>(q, k)); };
  f.cyclic = [H](int q) { return detail::program_map(H, q, q, sk_cyclic_program<S>(q)); };
  return f;
}

// Direct evaluation, mirroring the named operations.
template <class S>
TensorVector<S> cm_face(const HopfAlgebra<S>& H, const ModularPair<S>& mp, int q, int i, const TensorVector<S>& x) {
  return run_program(H, cm_face_program<S>(q, i), x, &mp.delta);
}
template <class S>
TensorVector<S> cm_degeneracy(const HopfAlgebra<S>& H, int q, int i, const TensorVector<S>& x) {
  return run_program(H, cm_degeneracy_program<S>(q, i), x);
}
template <class S>
TensorVector<S> cm_cyclic(const HopfAlgebra<S>& H, const ModularPair<S>& mp, int q, const TensorVector<S>& x) {
  return run_program(H, cm_cyclic_program<S>(q, mp.sigma), x, &mp.delta);
}
template <class S>
TensorVector<S> symmetric_action(const HopfAlgebra<S>& H, int q, int i, const TensorVector<S>& x) {
  if (!H.cocommutative) throw InvalidInput("symmetric action needs a cocommutative Hopf algebra");
  return run_program(H, transposition_program<S>(q, i), x);
}
template <class S>
TensorVector<S> sk_face(const HopfAlgebra<S>& H, int q, int k, const TensorVector<S>& x) {
  return run_program(H, sk_face_program<S>(q, k), x);
}
template <class S>
TensorVector<S> sk_degeneracy(const HopfAlgebra<S>& H, int q, int k, const TensorVector<S>& x) {
  return run_program(H, sk_degeneracy_program<S>(q, k), x);
}
template <class S>
TensorVector<S> sk_cyclic(const HopfAlgebra<S>& H, int q, const TensorVector<S>& x) {
  return run_program(H, sk_cyclic_program<S>(q), x);
}

/// Random rational tensor of the given degree: 1..3 terms, small fractions.
template <class S>
TensorVector<S> random_tensor(int dim, int degree, Rng& rng) {
  std::uniform_int_distribution<int> terms(1, 3), label(0, dim - 1), num(-5, 5), den(1, 4);
  TensorVector<S> t(degree);
  const int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<int> tuple(static_cast<std::size_t>(degree));
    for (int& x : tuple) x = label(rng);
    int a = 0;
    while (a == 0) a = num(rng);
    t.add(std::move(tuple), ScalarTraits<S>::fraction(a, den(rng)));
  }
  return t;
}

/// Equality of linear maps: on every basis tensor when there are at most
/// basis_cap of them, and additionally on seeded random combinations under a
/// sampled strategy.
template <class S>
class LinearContext {
 public:
  using map_type = LinearMap<S>;

  explicit LinearContext(const LinearFamily<S>& family, std::size_t basis_cap = 4096) : family_(family), cap_(basis_cap) {}

  std::string subject() const { return family_.name; }
  std::string equality_mode(const Strategy& s) const {
    return s.is_sampled() ? "basis tensors + " + std::to_string(s.samples) + " sampled combinations" : "basis tensors";
  }
  bool has_cyclic() const { return static_cast<bool>(family_.cyclic); }
  bool has_transpositions() const { return static_cast<bool>(family_.transposition); }

  map_type face(int q, int i) const { return family_.face(q, i); }
  map_type degeneracy(int q, int i) const { return family_.degeneracy(q, i); }
  map_type cyclic(int q) const { return family_.cyclic(q); }
  map_type transposition(int q, int i) const {
    if (!family_.transposition) throw InvalidInput(family_.name + " has no symmetric structure");
    return family_.transposition(q, i);
  }
  map_type identity(int q) const {
    return {q, q, [](const TensorVector<S>& x) { return x; }};
  }
  map_type compose(const map_type& outer, const map_type& inner) const {
    return {inner.from, outer.to, [o = outer.apply, i = inner.apply](const TensorVector<S>& x) { return o(i(x)); }};
  }

  std::optional<Mismatch> compare(const map_type& lhs, const map_type& rhs, int q, const Strategy& s,
                                  std::uint64_t stream) const {
    const auto& labels = family_.algebra->labels;
    const int dim = family_.algebra->dim();
    const int deg = family_.degree(q);
    auto check = [&](const TensorVector<S>& x) -> std::optional<Mismatch> {
      const auto a = lhs.apply(x), b = rhs.apply(x);
      if (a == b) return std::nullopt;
      return Mismatch{x.str(labels), a.str(labels), b.str(labels)};
    };
    const Integer base = dim;
    const Integer count = pow(base, static_cast<unsigned>(deg));
    if (count <= Integer(cap_)) {
      std::vector<int> t(static_cast<std::size_t>(deg), 0);
      for (std::size_t n = 0; n < static_cast<std::size_t>(count); ++n) {
        if (auto m = check(TensorVector<S>::basis(t))) return m;
        for (int k = deg; k-- > 0;) {
          if (++t[k] < dim) break;
          t[k] = 0;
        }
      }
    } else if (!s.is_sampled()) {
      throw CapExceeded("basis tensors of level " + std::to_string(q) + " of " + family_.name + "; use a sampled strategy",
                        count.str());
    }
    if (s.is_sampled()) {
      Rng rng(derive_seed(s.seed, stream));
      for (int k = 0; k < s.samples; ++k)
        if (auto m = check(random_tensor<S>(dim, deg, rng))) return m;
    }
    return std::nullopt;
  }

 private:
  const LinearFamily<S>& family_;
  std::size_t cap_;
};

/// f(x + λy) = f(x) + λ f(y) for every structure map on levels 0..q_max.
template <class S>
VerificationReport verify_linearity(const LinearFamily<S>& K, int q_max, int samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "linearity";
  rep.subject = K.name;
  rep.strategy = Strategy::sampled(q_max, samples, seed);
  rep.equality = "sampled combinations";
  const auto& labels = K.algebra->labels;
  auto run = [&](const std::string& family, int q, std::vector<int> idx, const LinearMap<S>& f) {
    Rng rng(derive_seed(seed, fnv1a(family) ^ splitmix64(static_cast<std::uint64_t>(q * 64 + (idx.empty() ? 0 : idx[0])))));
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    ++rep.relations_checked;
    ++rep.families[family];
    for (int k = 0; k < samples; ++k) {
      const auto x = random_tensor<S>(K.algebra->dim(), K.degree(q), rng);
      const auto y = random_tensor<S>(K.algebra->dim(), K.degree(q), rng);
      const S lam = ScalarTraits<S>::fraction(num(rng), den(rng));
      const auto l = f.apply(x + lam * y), r = f.apply(x) + lam * f.apply(y);
      if (!(l == r)) {
        rep.failures.push_back({family, q, std::move(idx), x.str(labels) + " ; " + y.str(labels), l.str(labels), r.str(labels)});
        return;
      }
    }
  };
  for (int q = 0; q <= q_max; ++q) {
    for (int i = 0; i <= q; ++i) {
      if (q >= 1) run("face", q, {i}, K.face(q, i));
      run("degeneracy", q, {i}, K.degeneracy(q, i));
    }
    if (K.cyclic) run("cyclic", q, {}, K.cyclic(q));
    if (K.transposition)
      for (int i = 1; i <= q; ++i) run("transposition", q, {i}, K.transposition(q, i));
  }
  return rep;
}

// ---- linearization -----------------------------------------------------------

/// Basis tensor of ₂K(k[A])_q whose (u,v) leg is the label of a_{u,v}.
/// `x` holds the coordinates of a level-q element of K(A,2).
inline TensorVector<Rational> linearization_map(const FinAbGroup& A, int q, const std::vector<std::int64_t>& x) {
  const int r = static_cast<int>(A.rank());
  if (static_cast<int>(x.size()) != r * static_cast<int>(binomial(q, 2)))
    throw InvalidInput("linearization_map: element does not belong to level " + std::to_string(q));
  std::vector<int> legs(static_cast<std::size_t>(sk_degree(q)));
  for (int v = 1; v < q; ++v)
    for (int u = 0; u < v; ++u) {
      const auto rank = rank_tuple(SimplexTuple({u, v}, q), q, 2);
      std::vector<std::int64_t> a(x.begin() + rank * r, x.begin() + (rank + 1) * r);
      legs[static_cast<std::size_t>(sk_leg(u, v))] = static_cast<int>(element_index(A, a));
    }
  return TensorVector<Rational>::basis(std::move(legs));
}

/// Commuting squares linearize∘f = f∘linearize between K(A,2) and ₂K(k[A])
/// for every face, degeneracy and τ on levels 0..q_max, over all elements.
inline VerificationReport linearization_report(const FinAbGroup& A, int q_max, const Integer& cap = Integer(1) << 16) {
  VerificationReport rep;
  rep.suite = "linearization";
  rep.subject = "K(" + A.str() + ",2) vs 2K(k[" + A.str() + "])";
  rep.strategy = Strategy::exhaustive(q_max);
  rep.equality = "all group elements";
  const auto H = group_algebra<Rational>(A);
  const auto K = ka2_family(A);
  auto square = [&](const std::string& family, int q, int qt, std::vector<int> idx, const AbHom& group_map,
                    const LegProgram<Rational>& prog) {
    ++rep.relations_checked;
    ++rep.families[family];
    const FinAbGroup Kq = K.level(q);
    const std::size_t n = checked_order(Kq, cap, "linearization_report: level " + std::to_string(q));
    for (std::size_t e = 0; e < n; ++e) {
      const auto x = element_coords(Kq, e);
      const auto l = linearization_map(A, qt, group_map.apply(x));
      const auto r = run_program(H, prog, linearization_map(A, q, x));
      if (!(l == r)) {
        rep.failures.push_back({family, q, std::move(idx), AbElement(Kq, x).str(), l.str(H.labels), r.str(H.labels)});
        return;
      }
    }
  };
  for (int q = 0; q <= q_max; ++q) {
    for (int i = 0; i <= q; ++i) {
      if (q >= 1) square("face", q, q - 1, {i}, K.face(q, i), sk_face_program<Rational>(q, i));
      square("degeneracy", q, q + 1, {i}, K.degeneracy(q, i), sk_degeneracy_program<Rational>(q, i));
    }
    square("cyclic", q, q, {}, K.cyclic(q), sk_cyclic_program<Rational>(q));
  }
  return rep;
}

/// H^(ε,1) over k[G] against K(G,1) on basis tensors g_1 ⊗ ... ⊗ g_q: faces,
/// degeneracies, τ and the transpositions, levels 0..q_max.
inline VerificationReport kg1_linearization_report(const TableGroup& G, int q_max, const Integer& cap = Integer(1) << 16) {
  VerificationReport rep;
  rep.suite = "linearization";
  rep.subject = "K(" + G.name() + ",1) vs k[" + G.name() + "]^(e,1)";
  rep.strategy = Strategy::exhaustive(q_max);
  rep.equality = "all group elements";
  const auto H = group_algebra<Rational>(G);
  const auto mp = ModularPair<Rational>::trivial(H);
  auto lin = [](const GroupTuple& g) { return TensorVector<Rational>::basis(std::vector<int>(g.begin(), g.end())); };
  auto square = [&](const std::string& family, int q, std::vector<int> idx,
                    const std::function<GroupTuple(const GroupTuple&)>& group_map, const LegProgram<Rational>& prog,
                    bool with_delta) {
    ++rep.relations_checked;
    ++rep.families[family];
    const Integer base = G.order();
    const Integer order = pow(base, static_cast<unsigned>(q));
    if (order > cap) throw CapExceeded("kg1_linearization_report: level " + std::to_string(q), order.str());
    for (std::size_t e = 0; e < static_cast<std::size_t>(order); ++e) {
      const GroupTuple x = tuple_at(G, q, e);
      const auto l = lin(group_map(x));
      const auto r = run_program(H, prog, lin(x), with_delta ? &mp.delta : nullptr);
      if (!(l == r)) {
        rep.failures.push_back({family, q, std::move(idx), describe_tuple(x), l.str(H.labels), r.str(H.labels)});
        return;
      }
    }
  };
  for (int q = 0; q <= q_max; ++q) {
    for (int i = 0; i <= q; ++i) {
      if (q >= 1)
        square("face", q, {i}, [&](const GroupTuple& x) { return kg1_face(G, q, i, x); }, cm_face_program<Rational>(q, i), true);
      square("degeneracy", q, {i}, [&](const GroupTuple& x) { return kg1_degeneracy(G, q, i, x); },
             cm_degeneracy_program<Rational>(q, i), false);
    }
    square("cyclic", q, {}, [&](const GroupTuple& x) { return kg1_cyclic(G, q, x); }, cm_cyclic_program<Rational>(q, mp.sigma),
           true);
  }
  return rep;
}

}  // namespace emforge
