#include <gtest/gtest.h>

#include "emforge/hopf_cyclic.hpp"

using namespace emforge;

namespace {

using TV = TensorVector<Rational>;
using HA = HopfAlgebra<Rational>;

int idx(const FinAbGroup& A, std::vector<std::int64_t> c) { return static_cast<int>(element_index(A, c)); }

bool has_family(const VerificationReport& r, const std::string& family) {
  for (const auto& f : r.failures)
    if (f.relation == family) return true;
  return false;
}

// Replace one structure map of a family by another program.
LinearFamily<Rational> with_face(LinearFamily<Rational> f, int q0, int i0, LegProgram<Rational> prog) {
  auto H = f.algebra;
  auto orig = f.face;
  auto pp = std::make_shared<LegProgram<Rational>>(std::move(prog));
  f.face = [=](int q, int i) {
    if (q != q0 || i != i0) return orig(q, i);
    return LinearMap<Rational>{q, q - 1, [H, pp](const TV& x) { return run_program(*H, *pp, x); }};
  };
  return f;
}

}  // namespace

TEST(HopfAlgebra, GroupAlgebraAxioms) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({6}), FinAbGroup({2, 2})}) {
    const auto r = verify_hopf_axioms(group_algebra(A));
    EXPECT_TRUE(r.pass()) << A.str() << ": " << (r.pass() ? "" : r.failures[0].relation);
  }
  for (const TableGroup& G : {TableGroup::symmetric3(), TableGroup::quaternion8()}) {
    EXPECT_TRUE(verify_hopf_axioms(group_algebra(G)).pass()) << G.name();
    EXPECT_TRUE(verify_hopf_axioms(function_algebra(G)).pass()) << G.name();
    EXPECT_FALSE(group_algebra(G).commutative);
    EXPECT_FALSE(function_algebra(G).cocommutative);
  }
}

TEST(HopfAlgebra, GroupAlgebraStructure) {
  const FinAbGroup z2({2});
  const HA H = group_algebra(z2);
  EXPECT_EQ(H.antipode[1], HA::basis(1));
  const FinAbGroup z6({6});
  const HA H6 = group_algebra(z6);
  for (int g = 0; g < 6; ++g) {
    ASSERT_EQ(H6.comult[g].size(), 1u);
    EXPECT_EQ(H6.comult[g][0].left, g);
    EXPECT_EQ(H6.comult[g][0].right, g);
    EXPECT_EQ(H6.antipode[g], HA::basis((6 - g) % 6));
  }
}

TEST(HopfAlgebra, CorruptedConstantIsReported) {
  HA H = group_algebra(FinAbGroup({3}));
  H.mult[1][1] = HA::basis(0);
  const auto r = verify_hopf_axioms(H);
  ASSERT_FALSE(r.pass());
  EXPECT_TRUE(has_family(r, "associativity"));
  // the first associativity witness involves the corrupted pair
  for (const auto& f : r.failures)
    if (f.relation == "associativity") {
      EXPECT_NE(f.witness.find("(1)"), std::string::npos);
      break;
    }

  HA C = group_algebra(FinAbGroup({2}));
  C.counit[1] = Rational(2);
  EXPECT_TRUE(has_family(verify_hopf_axioms(C), "counit"));

  HA F = function_algebra(TableGroup::symmetric3());
  F.cocommutative = true;
  EXPECT_TRUE(has_family(verify_hopf_axioms(F), "cocommutative flag"));
}

TEST(HopfAlgebra, IteratedComultiplication) {
  const FinAbGroup z2({2});
  const HA H = group_algebra(z2);
  EXPECT_EQ(iterated_comult(H, TV::basis({1}), 3), TV::basis({1, 1, 1}));
  const TV x = TV::basis({0}, Rational(3, 2)) + TV::basis({1}, Rational(-1));
  EXPECT_EQ(iterated_comult(H, x, 1), x);
  EXPECT_EQ(iterated_comult(H, TV::basis({0}) + TV::basis({1}), 2), TV::basis({0, 0}) + TV::basis({1, 1}));

  // coassociativity makes the choice of leg immaterial: compare with splitting the first leg
  const HA F = function_algebra(TableGroup::symmetric3());
  for (int a = 0; a < F.dim(); ++a)
    for (int k = 2; k <= 4; ++k) {
      TV first(1);
      first.add({a}, Rational(1));
      for (int legs = 1; legs < k; ++legs) {
        TV next(legs + 1);
        for (const auto& [t, c] : first.terms())
          for (const auto& d : F.comult[t[0]]) {
            std::vector<int> u{d.left, d.right};
            u.insert(u.end(), t.begin() + 1, t.end());
            next.add(u, c * d.coeff);
          }
        first = next;
      }
      EXPECT_EQ(iterated_comult(F, TV::basis({a}), k), first) << a << " " << k;
    }
}

TEST(ModularPair, TrivialPairInInvolution) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}), FinAbGroup({2, 2}), FinAbGroup({6})}) {
    const HA H = group_algebra(A);
    EXPECT_TRUE(is_modular_pair_in_involution(H, ModularPair<Rational>::trivial(H))) << A.str();
  }
  const HA S3 = group_algebra(TableGroup::symmetric3());
  EXPECT_TRUE(is_modular_pair_in_involution(S3, ModularPair<Rational>::trivial(S3)));
}

TEST(ModularPair, Rejections) {
  const HA H = group_algebra(FinAbGroup({2}));
  ModularPair<Rational> mp = ModularPair<Rational>::trivial(H);
  mp.sigma = {{0, Rational(1)}, {1, Rational(1)}};
  const auto r = check_modular_pair(H, mp);
  EXPECT_TRUE(has_family(r, "sigma group-like"));
  EXPECT_THROW(cm_family(H, mp), InvalidInput);

  // sign character with sigma = g: delta(sigma) = -1
  ModularPair<Rational> sign{{Rational(1), Rational(-1)}, HA::basis(1)};
  const auto s = check_modular_pair(H, sign);
  EXPECT_TRUE(has_family(s, "delta(sigma) = 1"));

  ModularPair<Rational> not_char{{Rational(1), Rational(2)}, H.unit};
  EXPECT_TRUE(has_family(check_modular_pair(H, not_char), "delta is multiplicative"));
}

TEST(ModularPair, NontrivialPairOnZ4) {
  // delta(g) = -1 on the generator, sigma = g^2
  const HA H = group_algebra(FinAbGroup({4}));
  ModularPair<Rational> mp{{Rational(1), Rational(-1), Rational(1), Rational(-1)}, HA::basis(2)};
  ASSERT_TRUE(is_modular_pair_in_involution(H, mp));
  const auto K = cm_family(H, mp);
  const LinearContext<Rational> ctx(K);
  EXPECT_TRUE(verify_simplicial(ctx, Strategy::sampled(4, 50, 3)).pass());
  EXPECT_TRUE(verify_cyclic(ctx, Strategy::sampled(4, 50, 3)).pass());
}

TEST(ConnesMoscovici, DisplayedValues) {
  const FinAbGroup z2({2});
  const HA H = group_algebra(z2);
  const auto mp = ModularPair<Rational>::trivial(H);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const TV x = TV::basis({a, b});
      EXPECT_EQ(cm_cyclic(H, mp, 2, x), TV::basis({(a + b) % 2, a}));
      EXPECT_EQ(cm_face(H, mp, 2, 1, x), TV::basis({(a + b) % 2}));
      EXPECT_EQ(cm_face(H, mp, 2, 0, x), TV::basis({b}));
      EXPECT_EQ(cm_face(H, mp, 2, 2, x), TV::basis({a}));
      EXPECT_EQ(cm_degeneracy(H, 2, 2, x), TV::basis({a, b, 0}));
      EXPECT_EQ(cm_degeneracy(H, 2, 0, x), TV::basis({0, a, b}));
      EXPECT_EQ(cm_degeneracy(H, 2, 1, x), TV::basis({a, 0, b}));
    }
  const TV h = TV::basis({0}, Rational(2)) + TV::basis({1}, Rational(-1, 3));
  EXPECT_EQ(cm_face(H, mp, 1, 0, h), TV::scalar(Rational(5, 3)));

  // non-abelian: tau(g1, g2) = ((g1 g2)^{-1}, g1)
  const TableGroup G = TableGroup::symmetric3();
  const HA HS = group_algebra(G);
  const auto ms = ModularPair<Rational>::trivial(HS);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(cm_cyclic(HS, ms, 2, TV::basis({a, b})), TV::basis({G.inv(G.mul(a, b)), a}));
}

TEST(ConnesMoscovici, SimplicialAndCyclic) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3})}) {
    const auto K = cm_family(group_algebra(A), ModularPair<Rational>::trivial(group_algebra(A)));
    const LinearContext<Rational> ctx(K);
    const auto s = verify_simplicial(ctx, Strategy::sampled(5, 200, 11));
    const auto c = verify_cyclic(ctx, Strategy::sampled(5, 200, 11));
    EXPECT_TRUE(s.pass()) << A.str() << " " << (s.pass() ? "" : s.failures[0].relation);
    EXPECT_TRUE(c.pass()) << A.str() << " " << (c.pass() ? "" : c.failures[0].relation);
  }
}

TEST(ConnesMoscovici, LiteralLastDegeneracyFails) {
  // sigma_n printed like sigma_0 (unit in front) breaks the simplicial identities
  auto K = cm_family(group_algebra(FinAbGroup({2})), ModularPair<Rational>::trivial(group_algebra(FinAbGroup({2}))));
  auto H = K.algebra;
  auto orig = K.degeneracy;
  K.degeneracy = [=](int q, int i) {
    if (i != q || q == 0) return orig(q, i);
    return orig(q, 0);
  };
  const LinearContext<Rational> ctx(K);
  const auto r = verify_simplicial(ctx, Strategy::exhaustive(3));
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(has_family(r, "d_{j+1} s_j = id"));
}

TEST(SymmetricAction, DisplayedValues) {
  const TableGroup G = TableGroup::symmetric3();
  const HA H = group_algebra(G);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      EXPECT_EQ(symmetric_action(H, 2, 1, TV::basis({a, b})), TV::basis({G.inv(a), G.mul(a, b)}));
      EXPECT_EQ(symmetric_action(H, 2, 2, TV::basis({a, b})), TV::basis({G.mul(a, b), G.inv(b)}));
    }
  for (int a = 0; a < 6; ++a) EXPECT_EQ(symmetric_action(H, 1, 1, TV::basis({a})), TV::basis({G.inv(a)}));
  // t_1 t_2 = tau at level 2
  const auto mp = ModularPair<Rational>::trivial(H);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const TV x = TV::basis({a, b});
      EXPECT_EQ(symmetric_action(H, 2, 1, symmetric_action(H, 2, 2, x)), cm_cyclic(H, mp, 2, x));
    }
  // involution on sampled tensors over k[Z/3]
  const HA H3 = group_algebra(FinAbGroup({3}));
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const TV x = random_tensor<Rational>(3, 2, rng);
    EXPECT_EQ(symmetric_action(H3, 2, 1, symmetric_action(H3, 2, 1, x)), x);
  }
  EXPECT_THROW(symmetric_action(function_algebra(G), 2, 1, TV::basis({0, 0})), InvalidInput);
  EXPECT_THROW(symmetric_family(function_algebra(G)), InvalidInput);
}

TEST(SymmetricAction, CoxeterAndCycle) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3})}) {
    const auto K = symmetric_family(group_algebra(A));
    const LinearContext<Rational> ctx(K);
    const auto r = verify_symmetric(ctx, Strategy::sampled(4, 200, 13));
    EXPECT_TRUE(r.pass()) << A.str() << " " << (r.pass() ? "" : r.failures[0].relation);
    EXPECT_EQ(r.families.at("t_1 t_2 ... t_q = tau"), 4u);
  }
  const auto K = symmetric_family(group_algebra(TableGroup::symmetric3()));
  EXPECT_TRUE(verify_symmetric(LinearContext<Rational>(K), Strategy::exhaustive(3)).pass());
}

TEST(SecondaryModule, DisplayedValues) {
  const FinAbGroup z3({3});
  const HA H = group_algebra(z3);
  // q=3, k=2: g01 ⊗ (g02 ⊗ g12) -> g01 g02 g12^{-1}; legs in block order (0,1),(0,2),(1,2)
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        EXPECT_EQ(sk_face(H, 3, 2, TV::basis({a, b, c})), TV::basis({((a + b - c) % 3 + 3) % 3}));
  const TV h = TV::basis({1}, Rational(4)) + TV::basis({2}, Rational(1, 2));
  EXPECT_EQ(sk_face(H, 2, 0, h), TV::scalar(Rational(9, 2)));
  EXPECT_EQ(sk_cyclic(H, 2, h), h);
  EXPECT_EQ(sk_cyclic(H, 1, TV::scalar(Rational(7))), TV::scalar(Rational(7)));
  // s_0 at q=2: 1 ⊗ (h<1> ⊗ h<2>)
  EXPECT_EQ(sk_degeneracy(H, 2, 0, TV::basis({2})), TV::basis({0, 2, 2}));
  EXPECT_EQ(sk_degeneracy(H, 2, 2, TV::basis({2})), TV::basis({2, 0, 0}));
  EXPECT_THROW(sk_face(H, 3, 4, TV::basis({0, 0, 0})), InvalidInput);
  EXPECT_THROW(sk_face(H, 3, 1, TV::basis({0, 0})), InvalidInput);
  EXPECT_THROW(sk_family(group_algebra(TableGroup::symmetric3())), InvalidInput);
}

TEST(SecondaryModule, CyclicAgreesWithKA2AtLevel3) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({2, 2})}) {
    const HA H = group_algebra(A);
    const AbHom tau = ka2_cyclic_matrix(A, 3);
    const FinAbGroup K3 = kan_level(A, 2, 3);
    for (std::size_t e = 0; e < static_cast<std::size_t>(K3.order()); ++e) {
      const auto x = element_coords(K3, e);
      EXPECT_EQ(sk_cyclic(H, 3, linearization_map(A, 3, x)), linearization_map(A, 3, tau.apply(x))) << A.str() << " " << e;
    }
  }
}

TEST(SecondaryModule, LinearizationMap) {
  const FinAbGroup z2({2});
  EXPECT_EQ(linearization_map(z2, 2, {1}), TV::basis({1}));
  // lex order (0,1),(0,2),(1,2) coincides with block order at q = 3; differs at q = 4
  EXPECT_EQ(linearization_map(z2, 4, {1, 0, 0, 0, 0, 0}), TV::basis({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(linearization_map(z2, 4, {0, 0, 1, 0, 0, 0}), TV::basis({0, 0, 0, 1, 0, 0}));  // a_{0,3}
  EXPECT_EQ(linearization_map(z2, 4, {0, 0, 0, 1, 0, 0}), TV::basis({0, 0, 1, 0, 0, 0}));  // a_{1,2}
  const FinAbGroup g({2, 3});
  EXPECT_EQ(linearization_map(g, 2, {1, 2}), TV::basis({idx(g, {1, 2})}));
  EXPECT_THROW(linearization_map(z2, 3, {1}), InvalidInput);
}

TEST(SecondaryModule, CommutingSquares) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3})}) {
    const auto r = linearization_report(A, 4);
    EXPECT_TRUE(r.pass()) << A.str() << " " << (r.pass() ? "" : r.failures[0].relation + " " + r.failures[0].witness);
    EXPECT_EQ(r.families.at("cyclic"), 5u);
  }
  EXPECT_TRUE(linearization_report(FinAbGroup({2, 2}), 3).pass());
  const auto s = kg1_linearization_report(TableGroup::symmetric3(), 4);
  EXPECT_TRUE(s.pass()) << (s.pass() ? "" : s.failures[0].relation + " " + s.failures[0].witness);
}

TEST(SecondaryModule, SimplicialAndCyclic) {
  for (const FinAbGroup& A : {FinAbGroup({2}), FinAbGroup({3})}) {
    const auto K = sk_family(group_algebra(A));
    const LinearContext<Rational> ctx(K);
    const auto s = verify_simplicial(ctx, Strategy::sampled(4, 200, 7));
    const auto c = verify_cyclic(ctx, Strategy::sampled(4, 200, 7));
    EXPECT_TRUE(s.pass()) << A.str() << " " << (s.pass() ? "" : s.failures[0].relation + " at " + s.failures[0].witness);
    EXPECT_TRUE(c.pass()) << A.str() << " " << (c.pass() ? "" : c.failures[0].relation + " at " + c.failures[0].witness);
  }
}

TEST(SecondaryModule, FunctionAlgebraOfZ3) {
  // cocommutative, but the point-indicator basis is not group-like
  const auto K = sk_family(function_algebra(TableGroup::cyclic(3)));
  const LinearContext<Rational> ctx(K, 0);
  // coproducts have three terms, so tensors grow quickly: keep the levels small
  const auto s = verify_simplicial(ctx, Strategy::sampled(3, 3, 1));
  const auto c = verify_cyclic(ctx, Strategy::sampled(2, 20, 1));
  EXPECT_TRUE(s.pass()) << (s.pass() ? "" : s.failures[0].relation + " at " + s.failures[0].witness);
  EXPECT_TRUE(c.pass()) << (c.pass() ? "" : c.failures[0].relation + " at " + c.failures[0].witness);
}

TEST(SecondaryModule, FunctionAlgebraOfS3NeedsCocommutativity) {
  // k^S3 is commutative but not cocommutative. The faces and degeneracies
  // still satisfy the simplicial identities, but one cyclic relation fails:
  // on points it asks x01 x12 x01^{-1} x02 = x02 x12 in S3.
  const auto K = sk_family(function_algebra(TableGroup::symmetric3()));
  const LinearContext<Rational> ctx(K, 0);
  EXPECT_TRUE(verify_simplicial(ctx, Strategy::sampled(2, 20, 1)).pass());
  const auto c = verify_cyclic(ctx, Strategy::sampled(2, 20, 1));
  ASSERT_EQ(c.failures.size(), 1u);
  EXPECT_EQ(c.failures[0].relation, "s_0 t = t^2 s_q");
  EXPECT_EQ(c.failures[0].level, 2);
}

TEST(SecondaryModule, PrimeFieldScalars) {
  const auto K = sk_family(group_algebra<FieldScalar>(FinAbGroup({3})));
  const LinearContext<FieldScalar> ctx(K);
  EXPECT_TRUE(verify_simplicial(ctx, Strategy::sampled(3, 40, 2)).pass());
  EXPECT_TRUE(verify_cyclic(ctx, Strategy::sampled(3, 40, 2)).pass());
}

TEST(SecondaryModule, MutationsAreCaught) {
  const HA H = group_algebra(FinAbGroup({3}));
  const auto K = sk_family(H);
  // drop the antipode in the middle face d_2 at level 3
  auto prog = sk_face_program<Rational>(3, 2);
  for (auto& leg : prog.target)
    for (auto& f : leg) f.antipode = false;
  const auto bad = with_face(K, 3, 2, prog);
  const auto r = verify_simplicial(LinearContext<Rational>(bad), Strategy::exhaustive(3));
  EXPECT_FALSE(r.pass());

  // a tau that is the identity at level 3
  auto T = K;
  auto orig = K.cyclic;
  T.cyclic = [orig](int q) {
    if (q != 3) return orig(q);
    return LinearMap<Rational>{3, 3, [](const TV& x) { return x; }};
  };
  EXPECT_FALSE(verify_cyclic(LinearContext<Rational>(T), Strategy::exhaustive(3)).pass());
}

TEST(LinearContext, ExhaustiveRefusesLargeLevels) {
  const auto K = sk_family(group_algebra(FinAbGroup({3})));
  const LinearContext<Rational> ctx(K);
  // level 5 has 3^10 basis tensors
  EXPECT_THROW(verify_simplicial(ctx, Strategy::exhaustive(4)), CapExceeded);
  EXPECT_EQ(ctx.equality_mode(Strategy::sampled(4, 200, 7)), "basis tensors + 200 sampled combinations");
}

TEST(LinearContext, SamplingIsDeterministic) {
  auto K = sk_family(group_algebra(FinAbGroup({2})));
  auto prog = sk_cyclic_program<Rational>(3);
  std::swap(prog.target[0], prog.target[1]);
  auto H = K.algebra;
  auto orig = K.cyclic;
  auto pp = std::make_shared<LegProgram<Rational>>(prog);
  K.cyclic = [=](int q) {
    if (q != 3) return orig(q);
    return LinearMap<Rational>{3, 3, [H, pp](const TV& x) { return run_program(*H, *pp, x); }};
  };
  const LinearContext<Rational> ctx(K, 0);
  const auto a = verify_cyclic(ctx, Strategy::sampled(3, 20, 99));
  const auto b = verify_cyclic(ctx, Strategy::sampled(3, 20, 99));
  ASSERT_FALSE(a.pass());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(Linearity, StructureMapsAreLinear) {
  const auto sk = sk_family(group_algebra(FinAbGroup({3})));
  EXPECT_TRUE(verify_linearity(sk, 4, 20, 1).pass());
  const auto cm = symmetric_family(group_algebra(FinAbGroup({2})));
  EXPECT_TRUE(verify_linearity(cm, 4, 20, 1).pass());
  const auto fa = sk_family(function_algebra(TableGroup::symmetric3()));
  EXPECT_TRUE(verify_linearity(fa, 2, 10, 1).pass());
}

TEST(HopfJson, RoundTripAndErrors) {
  const HA H = group_algebra(FinAbGroup({3}));
  const auto j = hopf_to_json(H);
  const HA back = hopf_from_json<Rational>(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.labels, H.labels);
  EXPECT_EQ(back.mult, H.mult);
  EXPECT_EQ(back.antipode, H.antipode);
  EXPECT_EQ(back.counit, H.counit);
  EXPECT_TRUE(verify_hopf_axioms(back).pass());
  const HA F = function_algebra(TableGroup::symmetric3());
  const HA fb = hopf_from_json<Rational>(nlohmann::json::parse(hopf_to_json(F).dump()));
  EXPECT_TRUE(verify_hopf_axioms(fb).pass());
  EXPECT_FALSE(fb.cocommutative);

  auto bad = nlohmann::json::parse(j.dump());
  bad["counit"]["(1)"] = "1/0";
  EXPECT_THROW(hopf_from_json<Rational>(bad), ParseError);
  auto unknown = nlohmann::json::parse(j.dump());
  unknown["unit"] = {{"nope", 1}};
  EXPECT_THROW(hopf_from_json<Rational>(unknown), ParseError);
  EXPECT_THROW(hopf_from_json<Rational>(nlohmann::json::object()), ParseError);

  EXPECT_EQ(parse_algebra("k[Z/2]").dim(), 2);
  EXPECT_EQ(parse_algebra("k[S3]").dim(), 6);
  EXPECT_EQ(parse_algebra("k^S3").name, "k^S3");
  EXPECT_THROW(parse_algebra("Z/2"), ParseError);
}

TEST(Scalars, ParseAndPrimeField) {
  EXPECT_EQ(ScalarTraits<Rational>::parse("-6/4"), Rational(-3, 2));
  EXPECT_THROW(ScalarTraits<Rational>::parse("x"), ParseError);
  EXPECT_THROW(ScalarTraits<Rational>::parse("1/0"), ParseError);
  using F7 = ModP<7>;
  EXPECT_EQ(F7(3) * F7(5), F7(1));
  EXPECT_EQ(F7(3).inverse(), F7(5));
  EXPECT_EQ(ScalarTraits<F7>::parse("1/2"), F7(4));
  EXPECT_EQ(F7(-1), F7(6));
  EXPECT_THROW(ScalarTraits<F7>::parse("1/7"), ParseError);
}
