#pragma once

// Finite abelian groups presented as direct sums of cyclic groups,
// homomorphisms between them as integer matrices, and the kernel / homology
// computations everything else is built on.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emforge/errors.hpp"
#include "emforge/matrix.hpp"
#include "emforge/smith.hpp"

namespace emforge {

/// Z/m_1 + ... + Z/m_k with every m_i >= 2; no summands is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() : moduli_(std::make_shared<const std::vector<std::int64_t>>()) {}
  explicit FinAbGroup(std::vector<std::int64_t> moduli) {
    for (std::int64_t m : moduli)
      if (m < 2) throw InvalidInput("FinAbGroup: modulus " + std::to_string(m) + " < 2");
    moduli_ = std::make_shared<const std::vector<std::int64_t>>(std::move(moduli));
  }

  /// A + A + ... + A (k copies); coordinate (copy c, summand j) sits at c * rank(A) + j.
  static FinAbGroup power(const FinAbGroup& a, std::size_t k) {
    std::vector<std::int64_t> m;
    m.reserve(a.rank() * k);
    for (std::size_t c = 0; c < k; ++c) m.insert(m.end(), a.moduli().begin(), a.moduli().end());
    return FinAbGroup(std::move(m));
  }

  const std::vector<std::int64_t>& moduli() const noexcept { return *moduli_; }
  std::size_t rank() const noexcept { return moduli_->size(); }
  std::int64_t modulus(std::size_t k) const { return (*moduli_)[k]; }
  bool is_trivial() const noexcept { return moduli_->empty(); }

  Integer order() const {
    Integer o = 1;
    for (std::int64_t m : *moduli_) o *= m;
    return o;
  }

  /// Single common modulus if every summand is Z/m (nullopt for the trivial group).
  std::optional<std::int64_t> uniform_modulus() const {
    if (moduli_->empty()) return std::nullopt;
    for (std::int64_t m : *moduli_)
      if (m != moduli_->front()) return std::nullopt;
    return moduli_->front();
  }

  /// Invariant factors m_1 | m_2 | ... .
  FinAbGroup canonical_form() const {
    std::vector<Integer> d(moduli_->begin(), moduli_->end());
    std::vector<std::int64_t> out;
    for (const Integer& f : cokernel_invariants(diagonal(d))) out.push_back(static_cast<std::int64_t>(f));
    return FinAbGroup(std::move(out));
  }

  bool isomorphic_to(const FinAbGroup& other) const { return canonical_form() == other.canonical_form(); }

  std::string str() const {
    if (moduli_->empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < moduli_->size(); ++k) {
      if (k) s += " x ";
      s += "Z/" + std::to_string((*moduli_)[k]);
    }
    return s;
  }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.moduli() == b.moduli(); }
  friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::int64_t>> moduli_;
};

inline FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<std::int64_t> m(a.moduli());
  m.insert(m.end(), b.moduli().begin(), b.moduli().end());
  return FinAbGroup(std::move(m));
}

/// Parses `term ("x" term)*` with term = "Z/<int>=2>" or "1".
inline FinAbGroup group_from_spec(const std::string& spec) {
  std::vector<std::string> terms;
  std::string cur;
  std::istringstream in(spec);
  std::string word;
  std::vector<std::string> words;
  while (in >> word) words.push_back(word);
  if (words.empty()) throw ParseError(spec, "empty group spec");
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k % 2 == 1) {
      if (words[k] != "x") throw ParseError(words[k], "expected 'x' between summands");
      continue;
    }
    terms.push_back(words[k]);
  }
  if (words.size() % 2 == 0) throw ParseError(words.back(), "dangling 'x'");
  std::vector<std::int64_t> moduli;
  for (const std::string& t : terms) {
    if (t == "1") continue;
    if (t.size() < 3 || t[0] != 'Z' || t[1] != '/') throw ParseError(t, "expected Z/<int> or 1");
    const std::string digits = t.substr(2);
    if (digits.size() > 12 || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError(t, "modulus is not a positive integer");
    const std::int64_t m = std::stoll(digits);
    if (m < 2) throw ParseError(t, "modulus must be at least 2");
    moduli.push_back(m);
  }
  return FinAbGroup(std::move(moduli));
}

/// Element of a FinAbGroup: one reduced residue per summand.
class AbElement {
 public:
  AbElement(FinAbGroup parent, std::vector<std::int64_t> coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (coords_.size() != parent_.rank()) throw InvalidInput("AbElement: coordinate count does not match rank");
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] = mod_floor(coords_[k], parent_.modulus(k));
  }
  static AbElement zero(const FinAbGroup& g) { return AbElement(g, std::vector<std::int64_t>(g.rank(), 0)); }

  const FinAbGroup& parent() const noexcept { return parent_; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
  }

  friend AbElement operator+(const AbElement& a, const AbElement& b) {
    if (a.parent_ != b.parent_) throw InvalidInput("AbElement: adding elements of different groups");
    std::vector<std::int64_t> c(a.coords_);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coords_[k];
    return AbElement(a.parent_, std::move(c));
  }
  friend bool operator==(const AbElement& a, const AbElement& b) { return a.parent_ == b.parent_ && a.coords_ == b.coords_; }

  /// Order of the element: lcm of m_k / gcd(x_k, m_k).
  std::int64_t order() const {
    std::int64_t o = 1;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      const std::int64_t m = parent_.modulus(k);
      o = std::lcm(o, m / std::gcd(coords_[k], m));
    }
    return o;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(coords_[k]);
    }
    return s + ")";
  }

 private:
  FinAbGroup parent_;
  std::vector<std::int64_t> coords_;
};

/// Position of a coordinate vector in the lexicographic enumeration (last coordinate fastest).
inline std::size_t element_index(const FinAbGroup& g, const std::vector<std::int64_t>& coords) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < g.rank(); ++k)
    idx = idx * static_cast<std::size_t>(g.modulus(k)) + static_cast<std::size_t>(mod_floor(coords[k], g.modulus(k)));
  return idx;
}

inline std::vector<std::int64_t> element_coords(const FinAbGroup& g, std::size_t idx) {
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t k = g.rank(); k-- > 0;) {
    const auto m = static_cast<std::size_t>(g.modulus(k));
    c[k] = static_cast<std::int64_t>(idx % m);
    idx /= m;
  }
  return c;
}

/// Throws CapExceeded unless |g| <= cap; returns |g|.
inline std::size_t checked_order(const FinAbGroup& g, const Integer& cap, const std::string& what) {
  const Integer o = g.order();
  if (o > cap) throw CapExceeded(what + ": order of " + g.str(), o.str());
  return static_cast<std::size_t>(o);
}

/// Every element, lexicographic by coordinates, zero first.
inline std::vector<AbElement> enumerate_elements(const FinAbGroup& g, const Integer& cap) {
  const std::size_t n = checked_order(g, cap, "enumerate_elements");
  std::vector<AbElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(g, element_coords(g, i));
  return out;
}

/// Histogram element order -> count, by enumeration.
inline std::map<std::int64_t, std::int64_t> element_order_histogram(const FinAbGroup& g, const Integer& cap) {
  std::map<std::int64_t, std::int64_t> h;
  for (const AbElement& e : enumerate_elements(g, cap)) ++h[e.order()];
  return h;
}

/// Homomorphism given by an integer matrix (target rank x source rank) acting on coordinates.
class AbHom {
 public:
  AbHom() = default;
  AbHom(FinAbGroup source, FinAbGroup target, Matrix<std::int64_t> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
      throw InvalidInput("AbHom: matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                         ", expected " + std::to_string(target_.rank()) + "x" + std::to_string(source_.rank()));
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      const std::int64_t tm = target_.modulus(r);
      for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        std::int64_t& x = matrix_(r, c);
        x = mod_floor(x, tm);
        // m_c * x must vanish mod the row modulus for the map to be well defined.
        if (x != 0 && static_cast<__int128>(x) * source_.modulus(c) % tm != 0)
          throw InvalidInput("AbHom: not well defined at row " + std::to_string(r) + ", column " + std::to_string(c));
      }
    }
  }

  static AbHom zero(const FinAbGroup& source, const FinAbGroup& target) {
    return AbHom(source, target, Matrix<std::int64_t>(target.rank(), source.rank()));
  }
  static AbHom identity(const FinAbGroup& g) { return AbHom(g, g, Matrix<std::int64_t>::identity(g.rank())); }

  const FinAbGroup& source() const noexcept { return source_; }
  const FinAbGroup& target() const noexcept { return target_; }
  const Matrix<std::int64_t>& matrix() const noexcept { return matrix_; }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
    std::vector<std::int64_t> y(target_.rank(), 0);
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      const std::int64_t tm = target_.modulus(r);
      __int128 acc = 0;
      for (std::size_t c = 0; c < matrix_.cols(); ++c) acc += static_cast<__int128>(matrix_(r, c)) * x[c];
      y[r] = static_cast<std::int64_t>(((acc % tm) + tm) % tm);
    }
    return y;
  }
  AbElement operator()(const AbElement& x) const {
    if (x.parent() != source_) throw InvalidInput("AbHom: element is not in the source group");
    return AbElement(target_, apply(x.coords()));
  }

  /// (*this) o f
  AbHom after(const AbHom& f) const {
    if (f.target_ != source_) throw InvalidInput("AbHom: composing maps with mismatched groups");
    Matrix<std::int64_t> p(target_.rank(), f.source_.rank());
    for (std::size_t r = 0; r < p.rows(); ++r) {
      const std::int64_t tm = target_.modulus(r);
      for (std::size_t k = 0; k < matrix_.cols(); ++k) {
        const std::int64_t a = matrix_(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < p.cols(); ++c) {
          const std::int64_t b = f.matrix_(k, c);
          if (b == 0) continue;
          p(r, c) = static_cast<std::int64_t>((p(r, c) + static_cast<__int128>(a) * b) % tm);
        }
      }
    }
    return AbHom(f.source_, target_, std::move(p));
  }
  friend AbHom operator*(const AbHom& g, const AbHom& f) { return g.after(f); }

  friend AbHom operator+(const AbHom& a, const AbHom& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_) throw InvalidInput("AbHom: adding maps with mismatched groups");
    Matrix<std::int64_t> s(a.matrix_);
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t c = 0; c < s.cols(); ++c) s(r, c) += b.matrix_(r, c);
    return AbHom(a.source_, a.target_, std::move(s));
  }
  AbHom scaled(std::int64_t k) const {
    Matrix<std::int64_t> s(matrix_);
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t c = 0; c < s.cols(); ++c) s(r, c) = mod_floor(s(r, c) * mod_floor(k, target_.modulus(r)), target_.modulus(r));
    return AbHom(source_, target_, std::move(s));
  }

  bool is_zero() const { return matrix_.is_zero(); }
  friend bool operator==(const AbHom& a, const AbHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

  /// First source generator on which the two maps differ.
  std::optional<std::size_t> first_difference(const AbHom& other) const {
    if (source_ != other.source_ || target_ != other.target_) throw InvalidInput("AbHom: comparing maps with mismatched groups");
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
      for (std::size_t r = 0; r < matrix_.rows(); ++r)
        if (matrix_(r, c) != other.matrix_(r, c)) return c;
    return std::nullopt;
  }

  std::vector<std::int64_t> column(std::size_t c) const {
    std::vector<std::int64_t> v(matrix_.rows());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = matrix_(r, c);
    return v;
  }

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  Matrix<std::int64_t> matrix_;
};

/// (f_1; ...; f_k) : S -> T_1 + ... + T_k.
inline AbHom stack(const std::vector<AbHom>& maps, const FinAbGroup& source) {
  std::vector<std::int64_t> tm;
  std::size_t rows = 0;
  for (const AbHom& f : maps) {
    if (f.source() != source) throw InvalidInput("stack: maps have different sources");
    tm.insert(tm.end(), f.target().moduli().begin(), f.target().moduli().end());
    rows += f.target().rank();
  }
  Matrix<std::int64_t> m(rows, source.rank());
  std::size_t off = 0;
  for (const AbHom& f : maps) {
    for (std::size_t r = 0; r < f.target().rank(); ++r)
      for (std::size_t c = 0; c < source.rank(); ++c) m(off + r, c) = f.matrix()(r, c);
    off += f.target().rank();
  }
  return AbHom(source, FinAbGroup(std::move(tm)), std::move(m));
}

/// A subgroup of an ambient group, presented as a direct sum of cyclic groups
/// together with its inclusion and a solver expressing ambient elements in
/// the subgroup's coordinates.
struct Subgroup {
  FinAbGroup group;
  AbHom inclusion;
  std::function<std::optional<std::vector<std::int64_t>>(const std::vector<std::int64_t>&)> coordinates;

  bool contains(const std::vector<std::int64_t>& y) const { return coordinates(y).has_value(); }
};

namespace detail {

inline Subgroup whole_group(const FinAbGroup& g) {
  return {g, AbHom::identity(g), [g](const std::vector<std::int64_t>& y) -> std::optional<std::vector<std::int64_t>> {
            std::vector<std::int64_t> c(y);
            for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod_floor(c[k], g.modulus(k));
            return c;
          }};
}

// Kernel of a map between free Z/m-modules, by diagonalizing over Z/m.
inline Subgroup kernel_uniform(const AbHom& f, std::int64_t m) {
  const FinAbGroup& src = f.source();
  const std::size_t r = src.rank();
  ModularDiagonalForm md = modular_diagonalize(f.matrix(), m);
  std::vector<std::int64_t> step(r), order(r);
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < r; ++t) {
    const std::int64_t d = t < md.diag.size() ? md.diag[t] : 0;
    const std::int64_t g = std::gcd(d, m);
    order[t] = g;
    step[t] = m / g;
    if (g > 1) {
      kept.push_back(t);
      orders.push_back(g);
    }
  }
  FinAbGroup k(orders);
  Matrix<std::int64_t> incl(r, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) incl(i, j) = mod_floor(md.V(i, kept[j]) * step[kept[j]], m);
  auto Vinv = std::make_shared<Matrix<std::int64_t>>(std::move(md.Vinv));
  auto solver = [Vinv, m, step, order, kept](const std::vector<std::int64_t>& y) -> std::optional<std::vector<std::int64_t>> {
    const std::size_t n = y.size();
    std::vector<std::int64_t> z(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      __int128 acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<__int128>((*Vinv)(i, j)) * mod_floor(y[j], m);
      z[i] = static_cast<std::int64_t>(acc % m);
    }
    std::vector<std::int64_t> out;
    std::size_t next = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (z[t] % step[t] != 0) return std::nullopt;
      if (next < kept.size() && kept[next] == t) {
        out.push_back((z[t] / step[t]) % order[t]);
        ++next;
      }
    }
    return out;
  };
  return {k, AbHom(k, src, std::move(incl)), solver};
}

// Kernel in general: the lattice {x : F x in diag(t) Z^s} modulo diag(m) Z^r.
inline Subgroup kernel_lattice(const AbHom& f) {
  const FinAbGroup& src = f.source();
  const FinAbGroup& tgt = f.target();
  const std::size_t r = src.rank(), s = tgt.rank();
  IntMatrix A(s, r + s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t c = 0; c < r; ++c) A(i, c) = f.matrix()(i, c);
    A(i, r + i) = tgt.modulus(i);
  }
  SmithForm sa = smith_normal_form(A, {false, false, true});
  const std::size_t nk = r + s - sa.rank;
  IntMatrix X1(r, nk + r);
  for (std::size_t j = 0; j < nk; ++j)
    for (std::size_t i = 0; i < r; ++i) X1(i, j) = sa.V(i, sa.rank + j);
  for (std::size_t i = 0; i < r; ++i) X1(i, nk + i) = src.modulus(i);

  SmithForm s1 = smith_normal_form(X1, {true, true, false});
  if (s1.rank != r) throw ConsistencyError("kernel lattice is not of full rank");
  std::vector<Integer> d1(r);
  for (std::size_t i = 0; i < r; ++i) d1[i] = s1.D(i, i);
  // C = diag(d1)^{-1} U1 diag(m): the sublattice diag(m) Z^r in the basis of the kernel lattice.
  IntMatrix C(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Integer v = s1.U(i, j) * src.modulus(j);
      if (v % d1[i] != 0) throw ConsistencyError("kernel lattice does not contain the relation lattice");
      C(i, j) = v / d1[i];
    }
  SmithForm s2 = smith_normal_form(C, {true, true, false});
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < r; ++i)
    if (s2.D(i, i) > 1) {
      kept.push_back(i);
      orders.push_back(static_cast<std::int64_t>(s2.D(i, i)));
    }
  // Generators: columns of B1 * U2^{-1}, B1 = U1^{-1} diag(d1).
  IntMatrix B1(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) B1(i, j) = s1.Uinv(i, j) * d1[j];
  IntMatrix G = B1 * s2.Uinv;
  FinAbGroup k(orders);
  Matrix<std::int64_t> incl(r, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < r; ++i)
      incl(i, j) = static_cast<std::int64_t>(mod_floor(G(i, kept[j]), Integer(src.modulus(i))));
  auto U1 = std::make_shared<IntMatrix>(std::move(s1.U));
  auto U2 = std::make_shared<IntMatrix>(std::move(s2.U));
  auto solver = [U1, U2, d1, kept, orders](const std::vector<std::int64_t>& y) -> std::optional<std::vector<std::int64_t>> {
    const std::size_t n = y.size();
    std::vector<Integer> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += (*U1)(i, j) * y[j];
      if (acc % d1[i] != 0) return std::nullopt;
      w[i] = acc / d1[i];
    }
    std::vector<std::int64_t> out;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      Integer acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += (*U2)(kept[j], i) * w[i];
      out.push_back(static_cast<std::int64_t>(mod_floor(acc, Integer(orders[j]))));
    }
    return out;
  };
  return {k, AbHom(k, src, std::move(incl)), solver};
}

}  // namespace detail

enum class KernelMethod { Auto, Lattice, Modular };

/// ker f as an abstract group with its inclusion into the source.
inline Subgroup hom_kernel(const AbHom& f, KernelMethod method = KernelMethod::Auto) {
  const FinAbGroup& src = f.source();
  if (src.is_trivial()) return detail::whole_group(src);
  if (f.target().is_trivial() || f.is_zero()) return detail::whole_group(src);
  const auto ms = src.uniform_modulus();
  const auto mt = f.target().uniform_modulus();
  const bool uniform = ms && mt && *ms == *mt;
  if (method == KernelMethod::Modular && !uniform) throw InvalidInput("hom_kernel: modular method needs a common modulus");
  if (method == KernelMethod::Modular || (method == KernelMethod::Auto && uniform)) return detail::kernel_uniform(f, *ms);
  return detail::kernel_lattice(f);
}

/// d_out o d_in != 0; carries the offending generator and its image.
class CompositionNotZero : public InvalidInput {
 public:
  CompositionNotZero(std::size_t generator, std::string image)
      : InvalidInput("composite of differentials is non-zero on generator " + std::to_string(generator) + ", image " + image),
        generator_(generator),
        image_(std::move(image)) {}
  std::size_t generator() const noexcept { return generator_; }
  const std::string& image() const noexcept { return image_; }

 private:
  std::size_t generator_;
  std::string image_;
};

/// Quotient Z^k / (diag(orders) + span(relations)), canonical form.
inline FinAbGroup quotient_group(const FinAbGroup& g, const std::vector<std::vector<std::int64_t>>& relations) {
  const std::size_t k = g.rank();
  IntMatrix R(k, k + relations.size());
  for (std::size_t i = 0; i < k; ++i) R(i, i) = g.modulus(i);
  for (std::size_t j = 0; j < relations.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) R(i, k + j) = relations[j][i];
  std::vector<std::int64_t> out;
  for (const Integer& d : cokernel_invariants(R)) out.push_back(static_cast<std::int64_t>(d));
  return FinAbGroup(std::move(out));
}

/// ker(d_out) / im(d_in) in invariant-factor form.
inline FinAbGroup homology_at(const AbHom& d_in, const AbHom& d_out, KernelMethod method = KernelMethod::Auto) {
  if (d_in.target() != d_out.source()) throw InvalidInput("homology_at: d_in does not land in the source of d_out");
  const AbHom comp = d_out.after(d_in);
  for (std::size_t c = 0; c < comp.matrix().cols(); ++c) {
    const auto col = comp.column(c);
    if (std::any_of(col.begin(), col.end(), [](std::int64_t x) { return x != 0; }))
      throw CompositionNotZero(c, AbElement(comp.target(), col).str());
  }
  const Subgroup k = hom_kernel(d_out, method);
  std::vector<std::vector<std::int64_t>> rel;
  rel.reserve(d_in.source().rank());
  for (std::size_t c = 0; c < d_in.source().rank(); ++c) {
    auto z = k.coordinates(d_in.column(c));
    if (!z) throw ConsistencyError("homology_at: image of d_in escapes ker d_out");
    rel.push_back(std::move(*z));
  }
  return quotient_group(k.group, rel);
}

/// Chain complex of finite abelian groups, differentials d_q : C_q -> C_{q-1}.
class AbChainComplex {
 public:
  AbChainComplex() = default;
  AbChainComplex(std::vector<FinAbGroup> levels, std::vector<AbHom> differentials)
      : levels_(std::move(levels)), differentials_(std::move(differentials)) {
    if (differentials_.size() != levels_.size()) throw InvalidInput("AbChainComplex: need one differential per level");
    for (std::size_t q = 0; q < levels_.size(); ++q) {
      const AbHom& d = differentials_[q];
      if (d.source() != levels_[q]) throw InvalidInput("AbChainComplex: d_" + std::to_string(q) + " has the wrong source");
      if (q == 0 ? !d.target().is_trivial() : d.target() != levels_[q - 1])
        throw InvalidInput("AbChainComplex: d_" + std::to_string(q) + " has the wrong target");
      if (q >= 1 && !differentials_[q - 1].after(d).is_zero())
        throw ConsistencyError("AbChainComplex: d_" + std::to_string(q - 1) + " o d_" + std::to_string(q) + " != 0");
    }
  }

  std::size_t size() const noexcept { return levels_.size(); }
  const FinAbGroup& level(std::size_t q) const { return levels_.at(q); }
  const AbHom& differential(std::size_t q) const { return differentials_.at(q); }

  /// H_q; the top level is treated as having a zero incoming differential.
  FinAbGroup homology(std::size_t q, KernelMethod method = KernelMethod::Auto) const {
    const AbHom d_in = q + 1 < levels_.size() ? differentials_[q + 1] : AbHom::zero(FinAbGroup(), levels_.at(q));
    return homology_at(d_in, differentials_.at(q), method);
  }

 private:
  std::vector<FinAbGroup> levels_;
  std::vector<AbHom> differentials_;
};

}  // namespace emforge
