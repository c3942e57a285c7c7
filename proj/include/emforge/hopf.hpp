#pragma once

// Finite-dimensional Hopf algebras by structure constants, and tensors over them.

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "emforge/errors.hpp"
#include "emforge/fin_ab.hpp"
#include "emforge/report.hpp"
#include "emforge/scalar.hpp"
#include "emforge/table_group.hpp"

namespace emforge {

/// Sparse linear combination of basis labels; zero coefficients never stored.
template <class S>
using LinComb = std::map<int, S>;

template <class S>
void add_term(LinComb<S>& v, int label, const std::type_identity_t<S>& c) {
  if (ScalarTraits<S>::is_zero(c)) return;
  auto [it, fresh] = v.emplace(label, c);
  if (fresh) return;
  it->second += c;
  if (ScalarTraits<S>::is_zero(it->second)) v.erase(it);
}

template <class S>
class HopfAlgebra {
 public:
  struct Coproduct {
    int left;
    int right;
    S coeff;
  };

  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<LinComb<S>>> mult;  // mult[a][b] = a*b
  LinComb<S> unit;
  std::vector<std::vector<Coproduct>> comult;
  std::vector<S> counit;
  std::vector<LinComb<S>> antipode;
  bool commutative = false;
  bool cocommutative = false;

  int dim() const noexcept { return static_cast<int>(labels.size()); }

  int label_index(const std::string& l) const {
    for (int a = 0; a < dim(); ++a)
      if (labels[a] == l) return a;
    throw ParseError(l, "unknown basis label of " + name);
  }

  static LinComb<S> basis(int a) { return {{a, S(1)}}; }

  LinComb<S> product(const LinComb<S>& x, const LinComb<S>& y) const {
    LinComb<S> r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (const auto& [c, cc] : mult[a][b]) add_term(r, c, ca * cb * cc);
    return r;
  }
  LinComb<S> apply_antipode(const LinComb<S>& x) const {
    LinComb<S> r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : antipode[a]) add_term(r, b, ca * cb);
    return r;
  }
  S apply_counit(const LinComb<S>& x) const {
    S r(0);
    for (const auto& [a, ca] : x) r += ca * counit[a];
    return r;
  }

  /// Delta^{(k)}(a) with k legs, obtained by applying Delta to the last leg.
  const std::vector<std::pair<std::vector<int>, S>>& sweedler(int a, int k) const {
    if (k < 1) throw InvalidInput("sweedler: at least one leg");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto key = std::make_pair(a, k);
    if (auto it = cache_->sweedler.find(key); it != cache_->sweedler.end()) return it->second;
    std::map<std::vector<int>, S> acc;
    if (k == 1) {
      acc[{a}] = S(1);
    } else {
      std::map<std::vector<int>, S> prev;
      prev[{a}] = S(1);
      for (int legs = 1; legs < k; ++legs) {
        std::map<std::vector<int>, S> next;
        for (const auto& [t, c] : prev)
          for (const Coproduct& d : comult[t.back()]) {
            std::vector<int> u(t.begin(), t.end() - 1);
            u.push_back(d.left);
            u.push_back(d.right);
            auto [it, fresh] = next.emplace(std::move(u), c * d.coeff);
            if (!fresh) it->second += c * d.coeff;
          }
        prev = std::move(next);
      }
      acc = std::move(prev);
    }
    std::vector<std::pair<std::vector<int>, S>> out;
    for (auto& [t, c] : acc)
      if (!ScalarTraits<S>::is_zero(c)) out.emplace_back(t, c);
    return cache_->sweedler.emplace(key, std::move(out)).first->second;
  }

 /// Label tables when every product, antipode value and coproduct is a single
  /// basis element with coefficient 1 (group algebras); nullptr otherwise.
  struct Monomial {
    std::vector<int> mul;  // a*d + b -> label
    std::vector<int> antipode;
    int unit = 0;
    bool counit_one = true;
  };
  const Monomial* monomial() const {
    std::call_once(cache_.get()->monomial_once, [this] { cache_.get()->monomial = compute_monomial(); });
    return cache_.get()->monomial ? &*cache_.get()->monomial : nullptr;
  }

 private:
  std::optional<Monomial> compute_monomial() const {
    const int d = dim();
    auto single = [](const LinComb<S>& v) -> int {
      if (v.size() != 1 || v.begin()->second != S(1)) return -1;
      return v.begin()->first;
    };
    Monomial m;
    if ((m.unit = single(unit)) < 0) return std::nullopt;
    m.mul.resize(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if ((m.mul[static_cast<std::size_t>(a) * d + b] = single(mult[a][b])) < 0) return std::nullopt;
    for (int a = 0; a < d; ++a) {
      m.antipode.push_back(single(antipode[a]));
      if (m.antipode.back() < 0) return std::nullopt;
      if (comult[a].size() != 1 || comult[a][0].left != a || comult[a][0].right != a || comult[a][0].coeff != S(1))
        return std::nullopt;
      m.counit_one = m.counit_one && counit[a] == S(1);
    }
    return m;
  }

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, S>>> sweedler;
    std::once_flag monomial_once;
    std::optional<Monomial> monomial;
  };
  // copies start with an empty cache, so editing a copy's tables is safe
  struct CacheHandle {
    std::unique_ptr<Cache> ptr = std::make_unique<Cache>();
    CacheHandle() = default;
    CacheHandle(const CacheHandle&) : ptr(std::make_unique<Cache>()) {}
    CacheHandle& operator=(const CacheHandle&) {
      ptr = std::make_unique<Cache>();
      return *this;
    }
    CacheHandle(CacheHandle&&) noexcept = default;
    CacheHandle& operator=(CacheHandle&&) noexcept = default;
    Cache* get() const { return ptr.get(); }
    Cache* operator->() const { return ptr.get(); }
  };
  CacheHandle cache_;
};

/// Element of H^{⊗m}: map from m-tuples of basis labels to coefficients.
template <class S>
class TensorVector {
 public:
  using Tuple = std::vector<int>;

  TensorVector() = default;
  explicit TensorVector(int degree) : degree_(degree) {
    if (degree < 0) throw InvalidInput("TensorVector: negative degree");
  }

  static TensorVector basis(Tuple t, S c = S(1)) {
    TensorVector v(static_cast<int>(t.size()));
    v.add(std::move(t), c);
    return v;
  }
  static TensorVector scalar(S c) { return basis({}, std::move(c)); }

  int degree() const noexcept { return degree_; }
  const std::map<Tuple, S>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(Tuple t, const S& c) {
    if (static_cast<int>(t.size()) != degree_) throw InvalidInput("TensorVector: term of wrong degree");
    if (ScalarTraits<S>::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(std::move(t), c);
    if (fresh) return;
    it->second += c;
    if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
  }

  TensorVector& operator+=(const TensorVector& o) {
    if (o.degree_ != degree_) throw InvalidInput("TensorVector: adding tensors of different degree");
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator*(const S& k, const TensorVector& a) {
    TensorVector r(a.degree_);
    for (const auto& [t, c] : a.terms_) r.add(t, k * c);
    return r;
  }
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// "2 [g1|g0] - 1/2 [g0|g0]"; the empty tensor prints as "0".
  std::string str(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      std::string cs = ScalarTraits<S>::str(c);
      if (!first) {
        if (cs[0] == '-') {
          s += " - ";
          cs.erase(0, 1);
        } else {
          s += " + ";
        }
      }
      first = false;
      s += cs + " [";
      for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "|" : "") + labels.at(static_cast<std::size_t>(t[k]));
      s += "]";
    }
    return s;
  }

 private:
  int degree_ = 0;
  std::map<Tuple, S> terms_;
};

/// Iterated comultiplication of a degree-1 tensor into k legs.
template <class S>
TensorVector<S> iterated_comult(const HopfAlgebra<S>& H, const TensorVector<S>& h, int k) {
  if (h.degree() != 1) throw InvalidInput("iterated_comult: input must have degree 1");
  if (k < 1) throw InvalidInput("iterated_comult: at least one leg");
  TensorVector<S> r(k);
  for (const auto& [t, c] : h.terms())
    for (const auto& [u, d] : H.sweedler(t[0], k)) r.add(u, c * d);
  return r;
}

/// k[G] for a finite abelian group; labels are coordinate vectors, element_index order.
template <class S = Rational>
HopfAlgebra<S> group_algebra(const FinAbGroup& A) {
  const std::size_t n = checked_order(A, Integer(4096), "group_algebra");
  HopfAlgebra<S> H;
  H.name = "k[" + A.str() + "]";
  std::vector<std::vector<std::int64_t>> el;
  for (std::size_t a = 0; a < n; ++a) {
    el.push_back(element_coords(A, a));
    H.labels.push_back(AbElement(A, el.back()).str());
  }
  H.mult.assign(n, std::vector<LinComb<S>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::int64_t> s(A.rank());
      for (std::size_t k = 0; k < A.rank(); ++k) s[k] = el[a][k] + el[b][k];
      H.mult[a][b] = HopfAlgebra<S>::basis(static_cast<int>(element_index(A, s)));
    }
  H.unit = HopfAlgebra<S>::basis(0);
  for (std::size_t a = 0; a < n; ++a) {
    const int g = static_cast<int>(a);
    H.comult.push_back({{g, g, S(1)}});
    H.counit.push_back(S(1));
    std::vector<std::int64_t> m(A.rank());
    for (std::size_t k = 0; k < A.rank(); ++k) m[k] = -el[a][k];
    H.antipode.push_back(HopfAlgebra<S>::basis(static_cast<int>(element_index(A, m))));
  }
  H.commutative = H.cocommutative = true;
  return H;
}

/// k[G] for a table group; label "gk" is table element k.
template <class S = Rational>
HopfAlgebra<S> group_algebra(const TableGroup& G) {
  const auto n = static_cast<std::size_t>(G.order());
  HopfAlgebra<S> H;
  H.name = "k[" + G.name() + "]";
  for (std::size_t a = 0; a < n; ++a) H.labels.push_back("g" + std::to_string(a));
  H.mult.assign(n, std::vector<LinComb<S>>(n));
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) H.mult[a][b] = HopfAlgebra<S>::basis(G.mul(a, b));
  H.unit = HopfAlgebra<S>::basis(0);
  for (int a = 0; a < G.order(); ++a) {
    H.comult.push_back({{a, a, S(1)}});
    H.counit.push_back(S(1));
    H.antipode.push_back(HopfAlgebra<S>::basis(G.inv(a)));
  }
  H.commutative = G.is_abelian();
  H.cocommutative = true;
  return H;
}

/// k^G, functions on G, in the basis of point indicators "e_k".
template <class S = Rational>
HopfAlgebra<S> function_algebra(const TableGroup& G) {
  const auto n = static_cast<std::size_t>(G.order());
  HopfAlgebra<S> H;
  H.name = "k^" + G.name();
  for (std::size_t a = 0; a < n; ++a) H.labels.push_back("e" + std::to_string(a));
  H.mult.assign(n, std::vector<LinComb<S>>(n));
  for (int a = 0; a < G.order(); ++a) {
    H.mult[a][a] = HopfAlgebra<S>::basis(a);
    H.unit[a] = S(1);
  }
  H.comult.resize(n);
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) H.comult[G.mul(a, b)].push_back({a, b, S(1)});
  for (int a = 0; a < G.order(); ++a) {
    H.counit.push_back(a == 0 ? S(1) : S(0));
    H.antipode.push_back(HopfAlgebra<S>::basis(G.inv(a)));
  }
  H.commutative = true;
  H.cocommutative = G.is_abelian();
  return H;
}

namespace detail {

template <class S>
std::string lin_str(const HopfAlgebra<S>& H, const LinComb<S>& v) {
  TensorVector<S> t(1);
  for (const auto& [a, c] : v) t.add({a}, c);
  return t.str(H.labels);
}

template <class S>
TensorVector<S> as_tensor(const LinComb<S>& v) {
  TensorVector<S> t(1);
  for (const auto& [a, c] : v) t.add({a}, c);
  return t;
}

template <class S>
TensorVector<S> comult_of(const HopfAlgebra<S>& H, const LinComb<S>& v) {
  TensorVector<S> t(2);
  for (const auto& [a, c] : v)
    for (const auto& d : H.comult[a]) t.add({d.left, d.right}, c * d.coeff);
  return t;
}

// (x ⊗ y) · (z ⊗ w) in H ⊗ H
template <class S>
TensorVector<S> product2(const HopfAlgebra<S>& H, const TensorVector<S>& x, const TensorVector<S>& y) {
  TensorVector<S> r(2);
  for (const auto& [s, c] : x.terms())
    for (const auto& [t, d] : y.terms())
      for (const auto& [l, cl] : H.mult[s[0]][t[0]])
        for (const auto& [m, cm] : H.mult[s[1]][t[1]]) r.add({l, m}, c * d * cl * cm);
  return r;
}

}  // namespace detail

/// Every Hopf axiom as an exact identity over basis labels, plus the
/// commutative and cocommutative flags.
template <class S>
VerificationReport verify_hopf_axioms(const HopfAlgebra<S>& H) {
  VerificationReport rep;
  rep.suite = "hopf-axioms";
  rep.subject = H.name;
  rep.strategy = Strategy::exhaustive(0);
  rep.equality = "structure constants";
  const int d = H.dim();
  auto lbl = [&](int a) { return H.labels[static_cast<std::size_t>(a)]; };
  auto check = [&](const std::string& family, std::vector<int> idx, const std::string& witness, const std::string& lhs,
                   const std::string& rhs, bool ok) {
    ++rep.relations_checked;
    ++rep.families[family];
    if (!ok) rep.failures.push_back({family, 0, std::move(idx), witness, lhs, rhs});
  };
  if (static_cast<int>(H.mult.size()) != d || static_cast<int>(H.comult.size()) != d ||
      static_cast<int>(H.counit.size()) != d || static_cast<int>(H.antipode.size()) != d)
    throw InvalidInput("verify_hopf_axioms: structure tables do not match the basis size");
  for (const auto& row : H.mult)
    if (static_cast<int>(row.size()) != d) throw InvalidInput("verify_hopf_axioms: multiplication table is not square");
  using B = HopfAlgebra<S>;

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        const auto l = H.product(H.product(B::basis(a), B::basis(b)), B::basis(c));
        const auto r = H.product(B::basis(a), H.product(B::basis(b), B::basis(c)));
        check("associativity", {a, b, c}, lbl(a) + "," + lbl(b) + "," + lbl(c), detail::lin_str(H, l),
              detail::lin_str(H, r), l == r);
      }
  for (int a = 0; a < d; ++a) {
    const auto l = H.product(H.unit, B::basis(a)), r = H.product(B::basis(a), H.unit);
    check("unit", {a}, lbl(a), detail::lin_str(H, l), detail::lin_str(H, r), l == B::basis(a) && r == B::basis(a));
  }
  for (int a = 0; a < d; ++a) {
    // (Δ⊗1)Δ = (1⊗Δ)Δ
    TensorVector<S> l(3), r(3);
    for (const auto& x : H.comult[a])
      for (const auto& y : H.comult[x.left]) l.add({y.left, y.right, x.right}, x.coeff * y.coeff);
    for (const auto& x : H.comult[a])
      for (const auto& y : H.comult[x.right]) r.add({x.left, y.left, y.right}, x.coeff * y.coeff);
    check("coassociativity", {a}, lbl(a), l.str(H.labels), r.str(H.labels), l == r);

    LinComb<S> cl, cr;
    for (const auto& x : H.comult[a]) {
      add_term(cl, x.right, x.coeff * H.counit[x.left]);
      add_term(cr, x.left, x.coeff * H.counit[x.right]);
    }
    check("counit", {a}, lbl(a), detail::lin_str(H, cl), detail::lin_str(H, cr), cl == B::basis(a) && cr == B::basis(a));

    // S(h<1>) h<2> = ε(h) 1 = h<1> S(h<2>)
    LinComb<S> sl, sr, eps;
    for (const auto& x : H.comult[a]) {
      for (const auto& [c, cc] : H.product(H.antipode[x.left], B::basis(x.right))) add_term(sl, c, x.coeff * cc);
      for (const auto& [c, cc] : H.product(B::basis(x.left), H.antipode[x.right])) add_term(sr, c, x.coeff * cc);
    }
    for (const auto& [c, cc] : H.unit) add_term(eps, c, H.counit[a] * cc);
    check("antipode S(h<1>)h<2> = e(h)1", {a}, lbl(a), detail::lin_str(H, sl), detail::lin_str(H, eps), sl == eps);
    check("antipode h<1>S(h<2>) = e(h)1", {a}, lbl(a), detail::lin_str(H, sr), detail::lin_str(H, eps), sr == eps);
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const auto ab = H.product(B::basis(a), B::basis(b));
      const auto l = detail::comult_of(H, ab);
      const auto r = detail::product2(H, detail::comult_of(H, B::basis(a)), detail::comult_of(H, B::basis(b)));
      check("comultiplication is multiplicative", {a, b}, lbl(a) + "," + lbl(b), l.str(H.labels), r.str(H.labels), l == r);
      const S el = H.apply_counit(ab), er = H.counit[a] * H.counit[b];
      check("counit is multiplicative", {a, b}, lbl(a) + "," + lbl(b), ScalarTraits<S>::str(el), ScalarTraits<S>::str(er),
            el == er);
      if (H.commutative) {
        const auto ba = H.product(B::basis(b), B::basis(a));
        check("commutative flag", {a, b}, lbl(a) + "," + lbl(b), detail::lin_str(H, ab), detail::lin_str(H, ba), ab == ba);
      }
    }
  {
    const auto l = detail::comult_of(H, H.unit);
    TensorVector<S> r(2);
    for (const auto& [a, ca] : H.unit)
      for (const auto& [b, cb] : H.unit) r.add({a, b}, ca * cb);
    check("comultiplication of the unit", {}, "1", l.str(H.labels), r.str(H.labels), l == r);
    const S e = H.apply_counit(H.unit);
    check("counit of the unit", {}, "1", ScalarTraits<S>::str(e), "1", e == S(1));
  }
  if (H.cocommutative)
    for (int a = 0; a < d; ++a) {
      TensorVector<S> l(2), r(2);
      for (const auto& x : H.comult[a]) {
        l.add({x.left, x.right}, x.coeff);
        r.add({x.right, x.left}, x.coeff);
      }
      check("cocommutative flag", {a}, lbl(a), l.str(H.labels), r.str(H.labels), l == r);
    }
  return rep;
}

/// Character δ (values on basis labels) and group-like σ.
template <class S>
struct ModularPair {
  std::vector<S> delta;
  LinComb<S> sigma;

  static ModularPair trivial(const HopfAlgebra<S>& H) { return {H.counit, H.unit}; }

  S delta_of(const LinComb<S>& v) const {
    S r(0);
    for (const auto& [a, c] : v) r += c * delta[static_cast<std::size_t>(a)];
    return r;
  }
};

/// S~(h) = σ δ(h<2>) S(h<1>).
template <class S>
LinComb<S> twisted_antipode(const HopfAlgebra<S>& H, const ModularPair<S>& mp, const LinComb<S>& x) {
  LinComb<S> r;
  for (const auto& [a, ca] : x)
    for (const auto& d : H.comult[a]) {
      const S k = ca * d.coeff * mp.delta[static_cast<std::size_t>(d.right)];
      if (ScalarTraits<S>::is_zero(k)) continue;
      for (const auto& [b, cb] : H.product(mp.sigma, H.antipode[d.left])) add_term(r, b, k * cb);
    }
  return r;
}

/// Checks δ multiplicative with δ(1) = 1, σ group-like, δ(σ) = 1, S~² = id.
template <class S>
VerificationReport check_modular_pair(const HopfAlgebra<S>& H, const ModularPair<S>& mp) {
  VerificationReport rep;
  rep.suite = "modular-pair";
  rep.subject = H.name;
  rep.strategy = Strategy::exhaustive(0);
  rep.equality = "structure constants";
  auto check = [&](const std::string& family, std::vector<int> idx, const std::string& w, const std::string& l,
                   const std::string& r, bool ok) {
    ++rep.relations_checked;
    ++rep.families[family];
    if (!ok) rep.failures.push_back({family, 0, std::move(idx), w, l, r});
  };
  const int d = H.dim();
  if (static_cast<int>(mp.delta.size()) != d) throw InvalidInput("modular pair: δ must have one value per basis label");
  for (const auto& [a, c] : mp.sigma)
    if (a < 0 || a >= d) throw InvalidInput("modular pair: σ uses an unknown label");
  using B = HopfAlgebra<S>;
  auto sstr = [](const S& x) { return ScalarTraits<S>::str(x); };

  const S du = mp.delta_of(H.unit);
  check("delta(1) = 1", {}, "1", sstr(du), "1", du == S(1));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const S l = mp.delta_of(H.product(B::basis(a), B::basis(b))), r = mp.delta[a] * mp.delta[b];
      check("delta is multiplicative", {a, b}, H.labels[a] + "," + H.labels[b], sstr(l), sstr(r), l == r);
    }
  {
    const auto l = detail::comult_of(H, mp.sigma);
    TensorVector<S> r(2);
    for (const auto& [a, ca] : mp.sigma)
      for (const auto& [b, cb] : mp.sigma) r.add({a, b}, ca * cb);
    const std::string w = detail::lin_str(H, mp.sigma);
    check("sigma group-like", {}, w, l.str(H.labels), r.str(H.labels), l == r && !mp.sigma.empty());
    const S e = H.apply_counit(mp.sigma);
    check("counit(sigma) = 1", {}, w, sstr(e), "1", e == S(1));
    const S ds = mp.delta_of(mp.sigma);
    check("delta(sigma) = 1", {}, w, sstr(ds), "1", ds == S(1));
  }
  for (int a = 0; a < d; ++a) {
    const auto l = twisted_antipode(H, mp, twisted_antipode(H, mp, B::basis(a)));
    check("twisted antipode squares to id", {a}, H.labels[a], detail::lin_str(H, l), H.labels[a], l == B::basis(a));
  }
  return rep;
}

template <class S>
bool is_modular_pair_in_involution(const HopfAlgebra<S>& H, const ModularPair<S>& mp) {
  return check_modular_pair(H, mp).pass();
}

// ---- JSON file format ------------------------------------------------------
//
// {"name": "...", "basis": ["a", "b", ...],
//  "unit": {"a": "1"},
//  "mult": [{"left": "a", "right": "b", "result": {"c": "1/2", ...}}, ...],
//  "comult": {"a": [["a", "a", "1"], ...]},
//  "counit": {"a": "1"}, "antipode": {"a": {"a": "1"}},
//  "commutative": true, "cocommutative": true}
//
// Coefficients are integers or "p/q" strings; absent entries are zero.

namespace detail {

template <class S>
S json_scalar(const nlohmann::json& j) {
  if (j.is_number_integer()) return ScalarTraits<S>::parse(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return ScalarTraits<S>::parse(j.get<std::string>());
  throw ParseError(j.dump(), "coefficient must be an integer or a \"p/q\" string");
}

template <class S>
LinComb<S> json_lin(const HopfAlgebra<S>& H, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError(j.dump(), "expected an object of label: coefficient");
  LinComb<S> v;
  for (const auto& [k, c] : j.items()) emforge::add_term(v, H.label_index(k), json_scalar<S>(c));
  return v;
}

template <class S>
nlohmann::ordered_json lin_json(const HopfAlgebra<S>& H, const LinComb<S>& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [a, c] : v) j[H.labels[a]] = ScalarTraits<S>::str(c);
  return j;
}

}  // namespace detail

template <class S = Rational>
HopfAlgebra<S> hopf_from_json(const nlohmann::json& j) {
  try {
    HopfAlgebra<S> H;
    H.name = j.value("name", std::string("H"));
    for (const auto& l : j.at("basis")) H.labels.push_back(l.get<std::string>());
    const auto d = H.labels.size();
    if (d == 0) throw ParseError("basis", "empty basis");
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        if (H.labels[a] == H.labels[b]) throw ParseError(H.labels[a], "duplicate basis label");
    H.unit = detail::json_lin(H, j.at("unit"));
    H.mult.assign(d, std::vector<LinComb<S>>(d));
    for (const auto& e : j.at("mult"))
      H.mult[H.label_index(e.at("left"))][H.label_index(e.at("right"))] = detail::json_lin(H, e.at("result"));
    H.comult.assign(d, {});
    for (const auto& [k, terms] : j.at("comult").items())
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3) throw ParseError(t.dump(), "comult term must be [left, right, coeff]");
        H.comult[H.label_index(k)].push_back({H.label_index(t[0]), H.label_index(t[1]), detail::json_scalar<S>(t[2])});
      }
    H.counit.assign(d, S(0));
    for (const auto& [k, c] : j.at("counit").items()) H.counit[H.label_index(k)] = detail::json_scalar<S>(c);
    H.antipode.assign(d, {});
    for (const auto& [k, v] : j.at("antipode").items()) H.antipode[H.label_index(k)] = detail::json_lin(H, v);
    H.commutative = j.value("commutative", false);
    H.cocommutative = j.value("cocommutative", false);
    return H;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("hopf algebra json", e.what());
  }
}

template <class S = Rational>
HopfAlgebra<S> load_hopf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, e.what());
  }
  return hopf_from_json<S>(j);
}

template <class S>
nlohmann::ordered_json hopf_to_json(const HopfAlgebra<S>& H) {
  nlohmann::ordered_json j;
  j["name"] = H.name;
  j["basis"] = H.labels;
  j["unit"] = detail::lin_json(H, H.unit);
  auto mult = nlohmann::ordered_json::array();
  for (int a = 0; a < H.dim(); ++a)
    for (int b = 0; b < H.dim(); ++b)
      if (!H.mult[a][b].empty())
        mult.push_back({{"left", H.labels[a]}, {"right", H.labels[b]}, {"result", detail::lin_json(H, H.mult[a][b])}});
  j["mult"] = mult;
  nlohmann::ordered_json comult = nlohmann::ordered_json::object(), counit = nlohmann::ordered_json::object(),
                         antipode = nlohmann::ordered_json::object();
  for (int a = 0; a < H.dim(); ++a) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : H.comult[a]) terms.push_back({H.labels[t.left], H.labels[t.right], ScalarTraits<S>::str(t.coeff)});
    comult[H.labels[a]] = terms;
    counit[H.labels[a]] = ScalarTraits<S>::str(H.counit[a]);
    antipode[H.labels[a]] = detail::lin_json(H, H.antipode[a]);
  }
  j["comult"] = comult;
  j["counit"] = counit;
  j["antipode"] = antipode;
  j["commutative"] = H.commutative;
  j["cocommutative"] = H.cocommutative;
  return j;
}

/// "k[Z/2]", "k[S3]", "k^S3", "k^(Z/2 x Z/2)".
template <class S = Rational>
HopfAlgebra<S> parse_algebra(const std::string& spec) {
  auto trim = [](std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  const std::string t = trim(spec);
  if (t.size() > 3 && t.rfind("k[", 0) == 0 && t.back() == ']') {
    const std::string g = trim(t.substr(2, t.size() - 3));
    if (g == "S3" || g == "D4" || g == "Q8") return group_algebra<S>(TableGroup::builtin(g));
    return group_algebra<S>(group_from_spec(g));
  }
  if (t.size() > 2 && t.rfind("k^", 0) == 0) {
    std::string g = trim(t.substr(2));
    if (g.size() > 2 && g.front() == '(' && g.back() == ')') g = trim(g.substr(1, g.size() - 2));
    return function_algebra<S>(TableGroup::builtin(g));
  }
  throw ParseError(spec, "expected k[G] or k^G");
}

}  // namespace emforge
