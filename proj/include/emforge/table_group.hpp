#pragma once

// Finite groups given by a multiplication table, identity 0.

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "emforge/errors.hpp"
#include "emforge/fin_ab.hpp"

namespace emforge {

class TableGroup {
 public:
  /// Rows of the table: table[a][b] = a*b. Validated: identity 0, closure,
  /// associativity, inverses.
  TableGroup(std::string name, const std::vector<std::vector<int>>& table) : name_(std::move(name)) {
    order_ = static_cast<int>(table.size());
    if (order_ < 1) throw InvalidInput("TableGroup: empty table");
    mul_.resize(static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a) {
      if (static_cast<int>(table[a].size()) != order_) throw InvalidInput("TableGroup: row " + std::to_string(a) + " has wrong length");
      for (int b = 0; b < order_; ++b) {
        const int c = table[a][b];
        if (c < 0 || c >= order_) throw InvalidInput("TableGroup: entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        mul_[static_cast<std::size_t>(a) * order_ + b] = c;
      }
    }
    for (int a = 0; a < order_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw InvalidInput("TableGroup: element 0 is not the identity");
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InvalidInput("TableGroup: not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
    inv_.assign(static_cast<std::size_t>(order_), -1);
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) inv_[a] = b;
      if (inv_[a] < 0) throw InvalidInput("TableGroup: element " + std::to_string(a) + " has no inverse");
    }
  }

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }
  int identity() const noexcept { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::map<std::int64_t, std::int64_t> order_histogram() const {
    std::map<std::int64_t, std::int64_t> h;
    for (int a = 0; a < order_; ++a) ++h[element_order(a)];
    return h;
  }

  /// Z/n.
  static TableGroup cyclic(int n) {
    if (n < 1) throw InvalidInput("cyclic group of order < 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return TableGroup("Z/" + std::to_string(n), t);
  }

  /// Elements numbered as in enumerate_elements.
  static TableGroup from_abelian(const FinAbGroup& g) {
    const std::size_t n = checked_order(g, Integer(4096), "TableGroup::from_abelian");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
      const auto x = element_coords(g, a);
      for (std::size_t b = 0; b < n; ++b) {
        auto y = element_coords(g, b);
        for (std::size_t k = 0; k < y.size(); ++k) y[k] += x[k];
        t[a][b] = static_cast<int>(element_index(g, y));
      }
    }
    return TableGroup(g.str(), t);
  }

  /// Symmetric group on 3 letters; permutations in lexicographic order, (a*b)(x) = a(b(x)).
  static TableGroup symmetric3() { return from_permutations("S3", all_permutations(3)); }

  /// Dihedral group of the square, generated by a rotation and a reflection of the vertices.
  static TableGroup dihedral4() {
    return from_permutations("D4", closure({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4));
  }

  /// Quaternion group {+-1, +-i, +-j, +-k}.
  static TableGroup quaternion8() {
    // unit products: e=0,i=1,j=2,k=3; ij=k, jk=i, ki=j, i^2=j^2=k^2=-1
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    // element index = unit + 4 * (sign < 0)
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const int ua = a % 4, ub = b % 4;
        int s = sign[ua][ub] * (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1);
        t[a][b] = unit[ua][ub] + (s < 0 ? 4 : 0);
      }
    return TableGroup("Q8", t);
  }

  /// "S3", "D4", "Q8", or an abelian spec such as "Z/4" / "Z/2 x Z/2".
  static TableGroup builtin(const std::string& spec) {
    if (spec == "S3") return symmetric3();
    if (spec == "D4") return dihedral4();
    if (spec == "Q8") return quaternion8();
    return from_abelian(group_from_spec(spec));
  }

  /// First line: order m; then m lines of m integers (row a, column b holds a*b).
  static TableGroup parse(std::istream& in, std::string name = "table") {
    int m = 0;
    if (!(in >> m) || m < 1) throw ParseError("order", "multiplication table must start with a positive order");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (!(in >> t[a][b]))
          throw ParseError("row " + std::to_string(a), "multiplication table is truncated");
    return TableGroup(std::move(name), t);
  }

  static TableGroup load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open multiplication table '" + path + "'");
    return parse(in, path);
  }

 private:
  using Perm = std::vector<int>;

  static std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  static Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
  }

  static std::vector<Perm> closure(const std::vector<Perm>& gens, int n) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> seen{id};
    std::vector<Perm> out{id};
    for (std::size_t k = 0; k < out.size(); ++k)
      for (const Perm& g : gens) {
        Perm c = compose(out[k], g);
        if (seen.insert(c).second) out.push_back(c);
      }
    std::sort(out.begin() + 1, out.end());
    return out;
  }

  static TableGroup from_permutations(std::string name, const std::vector<Perm>& perms) {
    std::map<Perm, int> index;
    for (std::size_t k = 0; k < perms.size(); ++k) index[perms[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b) t[a][b] = index.at(compose(perms[a], perms[b]));
    return TableGroup(std::move(name), t);
  }

  std::string name_;
  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

}  // namespace emforge
