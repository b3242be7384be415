#include <gtest/gtest.h>

#include "helpers.hpp"
#include "locreg/invariants.hpp"
#include "locreg/rng.hpp"

using namespace locreg;
using namespace testutil;

TEST(MakeRing, ValidationAndEdgeCases) {
    auto free2 = qring({"x", "y"}, {});
    EXPECT_EQ(free2.nvars(), 2);
    auto node = qring({"x", "y"}, {qp(2, {{{1, 1}, 1}})});
    EXPECT_EQ(node.relations.size(), 1u);
    EXPECT_THROW(qring({"x"}, {qp(1, {{{1}, 1}, {{0}, 1}})}), NonzeroConstantTerm);
    EXPECT_THROW(qring({"x", "x"}, {}), DuplicateVariable);
    // zero relations are dropped
    EXPECT_TRUE(qring({"x"}, {QPoly::zero(QQ, 1)}).relations.empty());
    // zero-variable ring: the field itself
    auto k = qring({}, {});
    EXPECT_EQ(k.nvars(), 0);
}

TEST(MakeMap, SquaringMapIsValid) {
    auto a = qring({"t"}, {});
    auto b = qring({"y"}, {});
    auto f = make_map(a, b, {qp(1, {{{2}, 1}})}, 6);
    EXPECT_EQ(f.verified_degree, 6);
    EXPECT_FALSE(f.tags.identity);
}

TEST(MakeMap, RejectsMapOutOfRelations) {
    // x^2 = 0 in the source but y^2 != 0 in the free target
    auto a = qring({"x"}, {qp(1, {{{2}, 1}})});
    auto b = qring({"y"}, {});
    try {
        make_map(a, b, {qvar(1, 0)}, 6);
        FAIL() << "expected NotWellDefined";
    } catch (const NotWellDefined& e) {
        EXPECT_EQ(e.degree, 6);
        EXPECT_EQ(e.relation_index, 0);
    }
}

TEST(MakeMap, RelationMapsToRelation) {
    auto a = qring({"x"}, {qp(1, {{{2}, 1}})});
    auto b = qring({"y"}, {qp(1, {{{2}, 1}})});
    EXPECT_NO_THROW(make_map(a, b, {qvar(1, 0)}, 6));
}

TEST(MakeMap, ErrorsOnBadImages) {
    auto a = qring({"x", "y"}, {});
    auto b = qring({"u"}, {});
    EXPECT_THROW(make_map(a, b, {qvar(1, 0)}, 6), ArityMismatch);
    EXPECT_THROW(make_map(a, b, {qvar(1, 0), qp(1, {{{0}, 1}})}, 6), NonlocalImage);
}

TEST(Quotient, BuildsPresentationAndProjection) {
    auto a = qring({"x", "y"}, {});
    auto q1 = quotient(a, make_ideal(a, {qvar(2, 0)}));
    EXPECT_EQ(edim(q1.ring), 1);
    EXPECT_TRUE(q1.projection.tags.surjection);
    auto q2 = quotient(a, maximal_ideal_square(a));
    EXPECT_EQ(edim(q2.ring), 2);
    auto a1 = qring({"x"}, {});
    auto q3 = quotient(a1, make_ideal(a1, {qvar(1, 0)}));
    EXPECT_EQ(edim(q3.ring), 0);
    // quotient by the zero ideal is the identity
    auto q4 = quotient(a, make_ideal(a, {}));
    EXPECT_TRUE(q4.projection.tags.identity);
    EXPECT_TRUE(q4.ring == a);
}

TEST(Quotient, IteratedQuotientEqualsQuotientBySum) {
    auto a = qring({"x", "y"}, {qp(2, {{{1, 1}, 1}})});
    auto i = make_ideal(a, {qvar(2, 0)});
    auto qi = quotient(a, i);
    auto j_over = make_ideal(qi.ring, {qp(2, {{{0, 2}, 1}})});
    auto qij = quotient(qi.ring, j_over);
    std::vector<QPoly> sum_gens = {qvar(2, 0), qp(2, {{{0, 2}, 1}})};
    auto qsum = quotient(a, make_ideal(a, sum_gens));
    EXPECT_TRUE(qij.ring == qsum.ring);
}

TEST(ExtendIdeal, Examples) {
    auto a = qring({"t"}, {});
    auto b = qring({"y"}, {});
    auto f = make_map(a, b, {qp(1, {{{2}, 1}})}, 6);
    auto ib = extend_ideal(f, make_ideal(a, {qvar(1, 0)}));
    ASSERT_EQ(ib.gens.size(), 1u);
    EXPECT_TRUE(ib.gens[0] == qp(1, {{{2}, 1}}));
    EXPECT_TRUE(extend_ideal(f, make_ideal(a, {})).gens.empty());
    // renaming
    auto a2 = qring({"x", "y"}, {});
    auto b2 = qring({"u", "v"}, {});
    auto g = make_map(a2, b2, {qvar(2, 0), qvar(2, 1)}, 6);
    auto ext = extend_ideal(g, make_ideal(a2, {qp(2, {{{1, 0}, 1}, {{0, 1}, 1}})}));
    ASSERT_EQ(ext.gens.size(), 1u);
    EXPECT_TRUE(ext.gens[0] == qp(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST(InducedMap, Examples) {
    auto a = qring({"t"}, {});
    auto b = qring({"y"}, {});
    auto f = make_map(a, b, {qp(1, {{{2}, 1}})}, 6);
    // quotient by (t): source becomes the residue field presentation
    auto fi = induced_map(f, make_ideal(a, {qvar(1, 0)}));
    EXPECT_EQ(edim(fi.source), 0);
    EXPECT_EQ(edim(fi.target), 1);
    // zero ideal: same presentation data
    auto f0 = induced_map(f, make_ideal(a, {}));
    EXPECT_TRUE(f0 == f);
    // identity map induces the identity on the quotient
    auto id = identity_map(a);
    auto idq = induced_map(id, make_ideal(a, {qvar(1, 0)}));
    EXPECT_TRUE(idq.tags.identity);
}

TEST(ClosedFiber, Examples) {
    auto a = qring({"t"}, {});
    auto b = qring({"y"}, {});
    auto f = make_map(a, b, {qp(1, {{{2}, 1}})}, 6);
    auto fib = closed_fiber(f);
    EXPECT_EQ(edim(fib), 1);
    EXPECT_EQ(krull_dim(fib), std::optional<int>(0));
    // adjunction fiber is a polynomial ring
    auto big = qring({"x", "y"}, {});
    auto g = make_map(qring({"x"}, {}), big, {qvar(2, 0)}, 6);
    auto fib2 = closed_fiber(g);
    EXPECT_EQ(edim(fib2), 1);
    EXPECT_EQ(is_regular(fib2), Tri::True);
    // fiber of the residue surjection is the residue field
    auto qm = quotient(a, maximal_ideal(a));
    EXPECT_EQ(edim(closed_fiber(qm.projection)), 0);
}

TEST(Compose, ExamplesAndAssociativity) {
    auto a = qring({"t"}, {});
    auto b = qring({"y"}, {});
    auto c = qring({"z"}, {});
    auto f = make_map(a, b, {qp(1, {{{2}, 1}})}, 6);
    auto g = make_map(b, c, {qvar(1, 0)}, 6);
    auto h = compose(f, g);
    EXPECT_TRUE(h.images[0] == qp(1, {{{2}, 1}}));
    EXPECT_TRUE(h.is_composite());
    // composing with the identity preserves images
    auto idb = identity_map(b);
    EXPECT_TRUE(compose(f, idb).images == f.images);
    // mismatch
    EXPECT_THROW(compose(g, g), CompositionMismatch);
    // associativity on a random validated triple
    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        auto r1 = qring({"x"}, {});
        auto r2 = qring({"u", "v"}, {});
        auto r3 = qring({"a"}, {});
        auto m1 = make_map(r1, r2, {qp(2, {{{1, 0}, 1}, {{0, 2}, rng.range(-2, 2)}})}, 6);
        auto m2 = make_map(r2, r3, {qp(1, {{{1}, 1}}), qp(1, {{{2}, rng.range(-2, 2)}})}, 6);
        auto m3 = make_map(r3, r3, {qp(1, {{{1}, 1}, {{2}, rng.range(-2, 2)}})}, 6);
        auto left = compose(compose(m1, m2), m3);
        auto right = compose(m1, compose(m2, m3));
        EXPECT_TRUE(left == right);
    }
}

TEST(Compose, QuotientTowerMatchesDirectQuotient) {
    // pi_{J/I} after pi_I equals pi_J
    auto a = qring({"x", "y"}, {});
    auto i = make_ideal(a, {qvar(2, 0)});
    auto qi = quotient(a, i);
    auto j_over = make_ideal(qi.ring, {qp(2, {{{0, 2}, 1}})});
    auto qj_over = quotient(qi.ring, j_over);
    auto tower = compose(qi.projection, qj_over.projection);
    auto direct = quotient(a, make_ideal(a, {qvar(2, 0), qp(2, {{{0, 2}, 1}})}));
    EXPECT_TRUE(tower.target == direct.ring);
    EXPECT_TRUE(tower.images == direct.projection.images);
}

TEST(ContainedInM2, Examples) {
    auto a = qring({"x", "y"}, {});
    EXPECT_TRUE(contained_in_m2(make_ideal(a, {qp(2, {{{2, 0}, 1}}), qp(2, {{{1, 1}, 1}})})));
    EXPECT_FALSE(contained_in_m2(make_ideal(a, {qvar(2, 0)})));
    // in QQ[x,y]/(x - y^2) the element x lies in m^2
    auto cusp = qring({"x", "y"}, {qp(2, {{{1, 0}, 1}, {{0, 2}, -1}})});
    EXPECT_TRUE(contained_in_m2(make_ideal(cusp, {qvar(2, 0)})));
}

TEST(WellDefinedness, LinearPartsOfRelationsMapIntoTargetSpan) {
    // degree-2 consequence of validation, exercised through linearized_map
    Rng rng(77);
    auto a = qring({"x", "y"}, {qp(2, {{{1, 0}, 1}, {{0, 2}, -1}})});
    auto q = quotient(a, make_ideal(a, {qp(2, {{{0, 1}, 1}})}));
    EXPECT_NO_THROW(linearized_map(q.projection));
    for (int trial = 0; trial < 5; ++trial) {
        auto b = qring({"u", "v"}, {});
        JetContext ctx(2, 6);
        std::vector<QPoly> images = {qp(2, {{{1, 0}, 1}, {{0, 1}, rng.range(-2, 2)}}),
                                     qp(2, {{{0, 1}, 1}})};
        std::vector<QPoly> rels;
        for (const auto& r : a.relations) rels.push_back(substitute_trunc(r, images, ctx));
        auto tgt = make_ring(QQ, {"u", "v"}, std::move(rels), 6);
        auto m = make_map(a, tgt, images, 6);
        EXPECT_NO_THROW(linearized_map(m));
    }
}

TEST(AdjoinVariables, TagsAndShape) {
    auto a = qring({"x"}, {qp(1, {{{2}, 1}})});
    auto adj = adjoin_variables(a, {"y", "z"});
    EXPECT_TRUE(adj.tags.variable_adjunction);
    EXPECT_EQ(adj.target.nvars(), 3);
    EXPECT_EQ(adj.target.relations.size(), 1u);
    EXPECT_EQ(edim(adj.target), edim(a) + 2);
}

TEST(MakeIsomorphism, RoundTripValidated) {
    auto node = qring({"x", "y"}, {qp(2, {{{1, 1}, 1}})});
    // x -> x + y + x^2, y -> y
    auto iso = make_isomorphism(
        node, {qp(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}}), qvar(2, 1)});
    EXPECT_TRUE(iso.fwd.tags.isomorphism);
    EXPECT_TRUE(iso.inv.tags.isomorphism);
    auto rt = compose(iso.fwd, iso.inv);
    EXPECT_TRUE(rt.images[0] == qvar(2, 0));
    EXPECT_TRUE(rt.images[1] == qvar(2, 1));
    // singular linear part is rejected
    EXPECT_THROW(make_isomorphism(node, {qvar(2, 0), qvar(2, 0)}), Error);
}

TEST(MakeDiagram, TriangleAndSquareValidation) {
    auto a = qring({"x", "y"}, {});
    auto i = make_ideal(a, {qvar(2, 0)});
    auto q = quotient(a, i);
    auto t = make_triangle(q.projection, identity_map(q.ring), Orientation::Clockwise);
    EXPECT_EQ(t.kind, DiagramShape<RationalField>::Kind::Triangle);
    EXPECT_THROW(make_triangle(q.projection, q.projection, Orientation::Clockwise),
                 CompositionMismatch);
    // the quotient square commutes
    auto b = qring({"u", "v"}, {});
    auto f = make_map(a, b, {qvar(2, 0), qvar(2, 1)}, 6);
    auto ib = extend_ideal(f, i);
    auto qb = quotient(b, ib);
    auto fi = make_map(q.ring, qb.ring, f.images, 6);
    EXPECT_NO_THROW(make_square(f, qb.projection, q.projection, fi, Orientation::Clockwise));
    // mismatched corners
    EXPECT_THROW(make_square(f, qb.projection, q.projection, q.projection,
                             Orientation::Clockwise),
                 CompositionMismatch);
    // a genuinely non-commuting square: swap the two coordinates on one path
    auto swap_map = make_map(b, b, {qvar(2, 1), qvar(2, 0)}, 6);
    EXPECT_THROW(make_square(f, swap_map, f, identity_map(b), Orientation::Clockwise),
                 NonCommutative);
}
