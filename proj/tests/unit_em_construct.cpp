#include <gtest/gtest.h>

#include "emforge/em_construct.hpp"
#include "emforge/moore.hpp"

using namespace emforge;

namespace {

std::vector<std::int64_t> row(const AbHom& f, std::size_t r) {
  std::vector<std::int64_t> v;
  for (std::size_t c = 0; c < f.matrix().cols(); ++c) v.push_back(f.matrix()(r, c));
  return v;
}

AbHom power_of(const AbHom& f, int k) {
  AbHom p = AbHom::identity(f.source());
  for (int j = 0; j < k; ++j) p = f.after(p);
  return p;
}

// A pair of non-commuting elements.
std::pair<int, int> noncommuting(const TableGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return {a, b};
  throw std::logic_error("abelian");
}

}  // namespace

TEST(KanFace, MergedRowAtLevelThree) {
  const FinAbGroup z5({5});
  const AbHom d2 = kan_face_matrix(z5, 2, 3, 2);
  // coordinates of level 3: (0,1), (0,2), (1,2)
  EXPECT_EQ(row(d2, 0), (std::vector<std::int64_t>{1, 1, 4}));
  const AbHom d0 = kan_face_matrix(z5, 2, 3, 0);
  EXPECT_EQ(row(d0, 0), (std::vector<std::int64_t>{0, 0, 1}));
}

TEST(KanDegeneracy, DisplayedRows) {
  const FinAbGroup z5({5});
  const AbHom s2 = kan_degeneracy_matrix(z5, 2, 2, 2);
  ASSERT_EQ(s2.matrix().rows(), 3u);
  EXPECT_EQ(row(s2, 0), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(row(s2, 1), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(row(s2, 2), (std::vector<std::int64_t>{0}));

  const AbHom s0 = kan_degeneracy_matrix(z5, 2, 1, 0);
  EXPECT_EQ(s0.matrix().rows(), 1u);
  EXPECT_EQ(s0.matrix().cols(), 0u);

  const AbHom t = kan_degeneracy_matrix(z5, 3, 3, 3);
  ASSERT_EQ(t.matrix().rows(), 4u);
  EXPECT_EQ(row(t, 0), (std::vector<std::int64_t>{1}));
  for (std::size_t r = 1; r < 4; ++r) EXPECT_EQ(row(t, r), (std::vector<std::int64_t>{0}));
}

TEST(KanLevels, LowLevelsTrivial) {
  const FinAbGroup z3({3});
  for (int n = 2; n <= 4; ++n) {
    EXPECT_TRUE(kan_level(z3, n, 0).is_trivial());
    EXPECT_TRUE(kan_level(z3, n, 1).is_trivial());
    EXPECT_TRUE(kan_face_matrix(z3, n, 1, 0).is_zero());
    EXPECT_TRUE(kan_degeneracy_matrix(z3, n, 0, 0).is_zero());
  }
  EXPECT_EQ(kan_level(FinAbGroup({2, 2}), 3, 5).rank(), 20u);
}

TEST(Ka2Cyclic, SmallLevels) {
  const FinAbGroup z7({7});
  EXPECT_EQ(ka2_cyclic_matrix(z7, 2), AbHom::identity(kan_level(z7, 2, 2)));
  const AbHom t3 = ka2_cyclic_matrix(z7, 3);
  EXPECT_EQ(t3.apply({1, 2, 4}), (std::vector<std::int64_t>{mod_floor(1 + 2 - 4, 7), 4, 1}));
  EXPECT_EQ(power_of(t3, 4), AbHom::identity(t3.source()));
  for (int q = 0; q <= 6; ++q) {
    const AbHom t = ka2_cyclic_matrix(z7, q);
    EXPECT_EQ(power_of(t, q + 1), AbHom::identity(t.source())) << "q=" << q;
  }
}

TEST(Kg1Table, FacesDegeneraciesCyclic) {
  const TableGroup s3 = TableGroup::symmetric3();
  const auto [r, s] = noncommuting(s3);
  EXPECT_EQ(kg1_face(s3, 2, 1, {r, s}), (GroupTuple{s3.mul(r, s)}));
  EXPECT_EQ(kg1_face(s3, 2, 1, {s, r}), (GroupTuple{s3.mul(s, r)}));
  EXPECT_NE(kg1_face(s3, 2, 1, {r, s}), kg1_face(s3, 2, 1, {s, r}));
  EXPECT_EQ(kg1_face(s3, 2, 0, {r, s}), (GroupTuple{s}));
  EXPECT_EQ(kg1_face(s3, 2, 2, {r, s}), (GroupTuple{r}));
  EXPECT_EQ(kg1_degeneracy(s3, 1, 0, {r}), (GroupTuple{0, r}));
  EXPECT_EQ(kg1_degeneracy(s3, 1, 1, {r}), (GroupTuple{r, 0}));
  EXPECT_EQ(kg1_face(s3, 3, 1, kg1_degeneracy(s3, 2, 1, {r, s})), (GroupTuple{r, s}));
  EXPECT_EQ(kg1_cyclic(s3, 2, {r, s}), (GroupTuple{s3.inv(s3.mul(r, s)), r}));
  EXPECT_EQ(kg1_cyclic(s3, 1, {r}), (GroupTuple{s3.inv(r)}));
  GroupTuple x{r, s};
  for (int k = 0; k < 3; ++k) x = kg1_cyclic(s3, 2, x);
  EXPECT_EQ(x, (GroupTuple{r, s}));
  EXPECT_THROW(kg1_face(s3, 2, 3, {r, s}), InvalidInput);
}

TEST(Kg1Table, TupleIndexMatchesAbelianEnumeration) {
  const FinAbGroup g({2, 3});
  const TableGroup t = TableGroup::from_abelian(g);
  const FinAbGroup g3 = FinAbGroup::power(g, 3);
  for (std::size_t idx = 0; idx < 216; ++idx) {
    const GroupTuple x = tuple_at(t, 3, idx);
    std::vector<std::int64_t> coords;
    for (int e : x)
      for (auto c : element_coords(g, static_cast<std::size_t>(e))) coords.push_back(c);
    EXPECT_EQ(element_index(g3, coords), idx);
    EXPECT_EQ(tuple_index(t, x), idx);
  }
}

TEST(Kg1Abelian, MatricesMatchGeneralFormulaAtNOne) {
  for (const FinAbGroup& g : {FinAbGroup({2}), FinAbGroup({2, 3}), FinAbGroup({4})})
    for (int q = 0; q <= 8; ++q) {
      for (int i = 0; i <= q; ++i) {
        if (q >= 1) EXPECT_EQ(kg1_face_matrix(g, q, i), kan_face_matrix(g, 1, q, i));
        EXPECT_EQ(kg1_degeneracy_matrix(g, q, i), kan_degeneracy_matrix(g, 1, q, i));
      }
    }
}

TEST(Kg1Abelian, MatricesMatchTableGroupPointwise) {
  const FinAbGroup g({2, 2});
  const AbelianFamily mat = kg1_abelian_family(g);
  const IndexedFamily via_matrix = indexed_from_abelian(mat);
  const IndexedFamily via_table = kg1_table_family(TableGroup::from_abelian(g));
  for (int q = 1; q <= 3; ++q) {
    const auto n = static_cast<std::size_t>(via_table.level_order(q));
    for (std::size_t x = 0; x < n; ++x) {
      for (int i = 0; i <= q; ++i) {
        EXPECT_EQ(via_matrix.face(q, i, x), via_table.face(q, i, x));
        EXPECT_EQ(via_matrix.degeneracy(q, i, x), via_table.degeneracy(q, i, x));
      }
      EXPECT_EQ(via_matrix.cyclic(q, x), via_table.cyclic(q, x));
    }
  }
}

TEST(Crosscheck, PassesForSmallGroups) {
  EXPECT_TRUE(crosscheck_specializations(FinAbGroup({2}), 6).pass());
  const auto rep = crosscheck_specializations(FinAbGroup({6}), 5);
  EXPECT_TRUE(rep.pass());
  EXPECT_GT(rep.relations_checked, 100u);
  EXPECT_TRUE(crosscheck_specializations(FinAbGroup({2, 3}), 4, 5).pass());
}

TEST(Crosscheck, DroppedSignIsCaughtAtFirstMergedFace) {
  const FaceBranchFn mutated = [](int i, const SimplexTuple& t, int q) -> FaceAction {
    FaceAction a = face_branch(i, t, q);
    if (auto* m = std::get_if<Merged>(&a)) m->terms[2].sign = +1;
    return a;
  };
  const auto rep = crosscheck_specializations(FinAbGroup({3}), 5, 2, mutated);
  ASSERT_FALSE(rep.pass());
  const Failure& f = rep.failures.front();
  EXPECT_EQ(f.relation, "general face = table face (n=2)");
  EXPECT_EQ(f.level, 3);
  EXPECT_EQ(f.indices, (std::vector<int>{2, 2}));
  EXPECT_EQ(f.witness, "b(0,1)");
  EXPECT_EQ(f.lhs, "a(0,1)+a(0,2)+a(1,2)");
  EXPECT_EQ(f.rhs, "a(0,1)+a(0,2)-a(1,2)");
}

TEST(Verify, SimplicialKa2AndKg1) {
  const AbelianFamily k = kan_family(FinAbGroup({2}), 2);
  const auto rep = verify_simplicial(MatrixContext(k), Strategy::exhaustive(4));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.families.size(), 6u);
  const AbelianFamily g = kg1_abelian_family(FinAbGroup({3}));
  EXPECT_TRUE(verify_simplicial(MatrixContext(g), Strategy::exhaustive(4)).pass());
  const IndexedFamily gi = indexed_from_abelian(g);
  EXPECT_TRUE(verify_simplicial(IndexedContext(gi), Strategy::exhaustive(4)).pass());
}

TEST(Verify, SwappedFaceIsCaught) {
  AbelianFamily k = kan_family(FinAbGroup({2}), 2);
  const auto good = k.face;
  k.face = [good](int q, int i) { return q == 3 && i == 2 ? good(3, 1) : good(q, i); };
  const auto rep = verify_simplicial(MatrixContext(k), Strategy::exhaustive(4));
  ASSERT_FALSE(rep.pass());
  bool found = false;
  for (const Failure& f : rep.failures) found |= f.relation == "d_j s_j = id" && f.level == 2 && f.indices == std::vector<int>{2};
  EXPECT_TRUE(found);
}

TEST(Verify, CyclicTableGroups) {
  for (const TableGroup& g : {TableGroup::symmetric3(), TableGroup::cyclic(4), TableGroup::quaternion8()}) {
    const IndexedFamily k = kg1_table_family(g);
    const auto rs = verify_simplicial(IndexedContext(k), Strategy::exhaustive(3));
    EXPECT_TRUE(rs.pass()) << g.name();
    const auto rc = verify_cyclic(IndexedContext(k), Strategy::exhaustive(3));
    EXPECT_TRUE(rc.pass()) << g.name();
    EXPECT_EQ(rc.families.size(), 5u);
  }
}

TEST(Verify, CyclicKa2) {
  for (const FinAbGroup& a : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({6})}) {
    const AbelianFamily k = ka2_family(a);
    EXPECT_TRUE(verify_cyclic(MatrixContext(k), Strategy::exhaustive(5)).pass()) << a.str();
  }
}

TEST(Verify, CyclicKa2CatchesWrongUpperRow) {
  AbelianFamily k = ka2_family(FinAbGroup({3}));
  k.cyclic = [](int q) {
    // the (0,v) rows without the inverse block
    const FinAbGroup a({3});
    AbHom t = ka2_cyclic_matrix(a, q);
    if (q < 3) return t;
    Matrix<std::int64_t> m = t.matrix();
    m(0, static_cast<std::size_t>(rank_tuple(SimplexTuple({1, 2}, q), q, 2))) = 0;
    return AbHom(t.source(), t.target(), m);
  };
  EXPECT_FALSE(verify_cyclic(MatrixContext(k), Strategy::exhaustive(4)).pass());
}

TEST(Verify, SampledIndexedStrategyIsDeterministic) {
  const IndexedFamily k = kg1_table_family(TableGroup::dihedral4());
  const auto a = verify_cyclic(IndexedContext(k), Strategy::sampled(4, 50, 11));
  const auto b = verify_cyclic(IndexedContext(k), Strategy::sampled(4, 50, 11));
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(Verify, ExhaustiveOverCapThrows) {
  const IndexedFamily k = kg1_table_family(TableGroup::quaternion8());
  EXPECT_THROW(verify_simplicial(IndexedContext(k, Integer(100)), Strategy::exhaustive(3)), CapExceeded);
}

TEST(Moore, Ka2Display) {
  for (const FinAbGroup& a : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}), FinAbGroup({2, 2})}) {
    const MooreComplex mc = moore_complex(kan_family(a, 2), 6);
    for (int q = 0; q <= 6; ++q) {
      const FinAbGroup n = mc.complex.level(static_cast<std::size_t>(q)).canonical_form();
      if (q == 2) EXPECT_EQ(n, a.canonical_form());
      else EXPECT_TRUE(n.is_trivial()) << a.str() << " q=" << q;
    }
  }
}

TEST(Moore, Kg1LevelOne) {
  const MooreComplex mc = moore_complex(kg1_abelian_family(FinAbGroup({3})), 3);
  EXPECT_EQ(mc.complex.level(1).canonical_form(), FinAbGroup({3}));
  EXPECT_EQ(mc.complex.level(0), FinAbGroup());
}

TEST(Homotopy, KnownGroups) {
  const auto p = homotopy_groups(kan_family(FinAbGroup({2}), 2), 4);
  ASSERT_EQ(p.size(), 5u);
  for (int q = 0; q <= 4; ++q) EXPECT_EQ(p[q], q == 2 ? FinAbGroup({2}) : FinAbGroup()) << q;
  const auto p3 = homotopy_groups(kan_family(FinAbGroup({2, 2}), 3), 5);
  for (int q = 0; q <= 5; ++q) EXPECT_EQ(p3[q], q == 3 ? FinAbGroup({2, 2}) : FinAbGroup()) << q;
  const auto p1 = homotopy_groups(kan_family(FinAbGroup({4}), 1), 3);
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(p1[q], q == 1 ? FinAbGroup({4}) : FinAbGroup()) << q;
}

TEST(Homotopy, LatticeAndModularAgree) {
  const AbelianFamily k = kan_family(FinAbGroup({4}), 2);
  EXPECT_EQ(homotopy_groups(k, 4, KernelMethod::Lattice), homotopy_groups(k, 4, KernelMethod::Modular));
  const AbelianFamily m = kan_family(FinAbGroup({2, 3}), 2);
  EXPECT_EQ(homotopy_groups(m, 4)[2], FinAbGroup({6}));
}

TEST(BruteForce, MatchesHomotopyGroups) {
  const AbelianFamily k = kan_family(FinAbGroup({2}), 2);
  const auto bf = brute_force_homotopy(indexed_from_abelian(k), 3, Integer(1) << 10);
  const auto pi = homotopy_groups(k, 3);
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(bf[q], GroupDescription::of(pi[q])) << q;
}

TEST(BruteForce, S3FundamentalGroup) {
  const TableGroup s3 = TableGroup::symmetric3();
  const auto bf = brute_force_homotopy(kg1_table_family(s3), 2, Integer(1) << 12);
  EXPECT_EQ(bf[1].order, 6);
  EXPECT_EQ(bf[1].order_histogram, s3.order_histogram());
  EXPECT_EQ(bf[0].order, 1);
  EXPECT_EQ(bf[2].order, 1);
}

TEST(BruteForce, TrivialGroupAndCap) {
  const auto bf = brute_force_homotopy(indexed_from_abelian(kan_family(FinAbGroup(), 2)), 3, Integer(10));
  for (const auto& d : bf) EXPECT_EQ(d.order, 1);
  EXPECT_THROW(brute_force_homotopy(kg1_table_family(TableGroup::symmetric3()), 3, Integer(100)), CapExceeded);
}

TEST(Unnormalized, DifferentialIsAlternatingSum) {
  const AbelianFamily k = kg1_abelian_family(FinAbGroup({2}));
  const AbChainComplex c = unnormalized_chain_complex(k, 4);
  const AbHom expect = k.face(2, 0) + k.face(2, 1) + k.face(2, 2);
  EXPECT_EQ(c.differential(2), expect);
  EXPECT_NO_THROW(unnormalized_chain_complex(kan_family(FinAbGroup({3}), 2), 5));
  const AbChainComplex c2 = unnormalized_chain_complex(kan_family(FinAbGroup({2}), 2), 4);
  const FinAbGroup h2 = c2.homology(2).canonical_form();
  bool has_z2 = false;
  for (auto m : h2.moduli()) has_z2 |= m % 2 == 0;
  EXPECT_TRUE(has_z2) << h2.str();
}
