#pragma once

// Moore complex, homotopy groups, and the element-enumerating oracle.

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "emforge/errors.hpp"
#include "emforge/fin_ab.hpp"
#include "emforge/simplicial.hpp"

namespace emforge {

/// Normalized levels N_q = ker d_0 ∩ ... ∩ ker d_{q-1} together with the chain complex they form.
struct MooreComplex {
  std::vector<Subgroup> normalized;  // N_q inside K_q
  AbChainComplex complex;            // levels N_q, differential d_q restricted
};

/// Levels 0..q_top. The restriction of d_q must land in N_{q-1}; if it does
/// not, ConsistencyError names the level.
inline MooreComplex moore_complex(const AbelianFamily& K, int q_top, KernelMethod method = KernelMethod::Auto) {
  if (q_top < 0) throw InvalidInput("moore_complex: negative top level");
  MooreComplex mc;
  std::vector<FinAbGroup> levels;
  std::vector<AbHom> diffs;
  for (int q = 0; q <= q_top; ++q) {
    const FinAbGroup Kq = K.level(q);
    if (q == 0) {
      mc.normalized.push_back(detail::whole_group(Kq));
    } else {
      std::vector<AbHom> faces;
      for (int i = 0; i < q; ++i) faces.push_back(K.face(q, i));
      mc.normalized.push_back(hom_kernel(stack(faces, Kq), method));
    }
    const Subgroup& N = mc.normalized.back();
    levels.push_back(N.group);
    if (q == 0) {
      diffs.push_back(AbHom::zero(N.group, FinAbGroup()));
      continue;
    }
    const AbHom d = K.face(q, q).after(N.inclusion);
    const Subgroup& below = mc.normalized[static_cast<std::size_t>(q - 1)];
    Matrix<std::int64_t> m(below.group.rank(), N.group.rank());
    for (std::size_t c = 0; c < N.group.rank(); ++c) {
      auto z = below.coordinates(d.column(c));
      if (!z)
        throw ConsistencyError("moore_complex: d_" + std::to_string(q) + " of a normalized element leaves N_" +
                               std::to_string(q - 1) + " in " + K.name);
      for (std::size_t r = 0; r < z->size(); ++r) m(r, c) = (*z)[r];
    }
    diffs.emplace_back(N.group, below.group, std::move(m));
  }
  mc.complex = AbChainComplex(std::move(levels), std::move(diffs));
  return mc;
}

/// pi_0 .. pi_{q_max} in canonical form; uses levels up to q_max + 1.
inline std::vector<FinAbGroup> homotopy_groups(const AbelianFamily& K, int q_max, KernelMethod method = KernelMethod::Auto) {
  if (q_max < 1) throw InvalidInput("homotopy_groups: q_max must be at least 1");
  const MooreComplex mc = moore_complex(K, q_max + 1, method);
  std::vector<FinAbGroup> pi;
  for (int q = 0; q <= q_max; ++q) pi.push_back(mc.complex.homology(static_cast<std::size_t>(q), method).canonical_form());
  return pi;
}

/// Isomorphism invariants available without structure theory: order and
/// the histogram of element orders.
struct GroupDescription {
  Integer order = 1;
  std::map<std::int64_t, std::int64_t> order_histogram{{1, 1}};

  static GroupDescription of(const FinAbGroup& g, const Integer& cap = Integer(1) << 20) {
    return {g.order(), element_order_histogram(g, cap)};
  }

  std::string str() const {
    std::string s = "order " + order.str() + ", element orders {";
    bool first = true;
    for (const auto& [k, v] : order_histogram) {
      s += (first ? "" : ", ") + std::to_string(k) + ":" + std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const GroupDescription& a, const GroupDescription& b) {
    return a.order == b.order && a.order_histogram == b.order_histogram;
  }
};

/// pi_q by enumerating every element of K_q for q <= q_max + 1: normalized
/// cycles Z_q, boundaries B_q = d_{q+1}(N_{q+1}), and the cosets of B_q in Z_q.
inline std::vector<GroupDescription> brute_force_homotopy(const IndexedFamily& K, int q_max, const Integer& cap) {
  if (q_max < 0) throw InvalidInput("brute_force_homotopy: negative q_max");
  for (int q = 0; q <= q_max + 1; ++q)
    if (K.level_order(q) > cap)
      throw CapExceeded("brute_force_homotopy: level " + std::to_string(q) + " of " + K.name, K.level_order(q).str());

  // normalized[q] = elements killed by d_0..d_{q-1}
  std::vector<std::vector<std::size_t>> normalized;
  for (int q = 0; q <= q_max + 1; ++q) {
    const auto n = static_cast<std::size_t>(K.level_order(q));
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (int i = 0; i < q && ok; ++i) ok = K.face(q, i, x) == 0;
      if (ok) keep.push_back(x);
    }
    normalized.push_back(std::move(keep));
  }

  std::vector<GroupDescription> out;
  for (int q = 0; q <= q_max; ++q) {
    std::vector<std::size_t> cycles;
    for (std::size_t x : normalized[q])
      if (q == 0 || K.face(q, q, x) == 0) cycles.push_back(x);
    std::unordered_set<std::size_t> boundaries;
    for (std::size_t y : normalized[q + 1]) boundaries.insert(K.face(q + 1, q + 1, y));
    const std::unordered_set<std::size_t> cycle_set(cycles.begin(), cycles.end());
    for (std::size_t b : boundaries)
      if (!cycle_set.count(b))
        throw ConsistencyError("brute_force_homotopy: a boundary at level " + std::to_string(q) + " is not a normalized cycle");
    if (cycles.size() % boundaries.size() != 0)
      throw ConsistencyError("brute_force_homotopy: boundary subgroup order does not divide the cycle group order");

    GroupDescription d;
    d.order = Integer(cycles.size() / boundaries.size());
    d.order_histogram.clear();
    std::map<std::int64_t, std::int64_t> per_element;
    for (std::size_t z : cycles) {
      std::int64_t k = 1;
      std::size_t p = z;
      while (!boundaries.count(p)) {
        p = K.multiply(q, p, z);
        ++k;
      }
      ++per_element[k];
    }
    for (const auto& [k, v] : per_element) d.order_histogram[k] = v / static_cast<std::int64_t>(boundaries.size());
    out.push_back(std::move(d));
  }
  return out;
}

/// Levels K_0..K_{q_top}, d_q = sum_i (-1)^i d_i.
inline AbChainComplex unnormalized_chain_complex(const AbelianFamily& K, int q_top) {
  if (q_top < 0) throw InvalidInput("unnormalized_chain_complex: negative top level");
  std::vector<FinAbGroup> levels;
  std::vector<AbHom> diffs;
  for (int q = 0; q <= q_top; ++q) {
    const FinAbGroup Kq = K.level(q);
    levels.push_back(Kq);
    if (q == 0) {
      diffs.push_back(AbHom::zero(Kq, FinAbGroup()));
      continue;
    }
    AbHom d = AbHom::zero(Kq, K.level(q - 1));
    for (int i = 0; i <= q; ++i) d = d + K.face(q, i).scaled(i % 2 == 0 ? 1 : -1);
    diffs.push_back(std::move(d));
  }
  return AbChainComplex(std::move(levels), std::move(diffs));
}

}  // namespace emforge
