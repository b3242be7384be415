#include <gtest/gtest.h>

#include "helpers.hpp"
#include "locreg/invariants.hpp"
#include "locreg/generate.hpp"
#include "locreg/rng.hpp"
#include "oracle.hpp"

using namespace locreg;
using namespace testutil;

namespace {

QRing node2() { return qring({"x", "y"}, {qp(2, {{{1, 1}, 1}})}); }
QRing cusp2() { return qring({"x", "y"}, {qp(2, {{{1, 0}, 1}, {{0, 2}, -1}})}); }

QMap squaring_map() {
    auto a = qring({"t"}, {});
    auto b = qring({"y"}, {});
    return make_map(a, b, {qp(1, {{{2}, 1}})}, 6);
}

}  // namespace

TEST(LinSpace, Examples) {
    EXPECT_EQ(lin_space(node2()).dim(), 0);
    auto s = lin_space(cusp2());
    EXPECT_EQ(s.dim(), 1);
    EXPECT_EQ(s.pivot_columns(), (std::vector<int>{0}));
    EXPECT_EQ(lin_space(qring({"x", "y"}, {qvar(2, 0), qvar(2, 1)})).dim(), 2);
}

TEST(Edim, Examples) {
    EXPECT_EQ(edim(qring({"x", "y"}, {})), 2);
    EXPECT_EQ(edim(qring({"x", "y"}, {qp(2, {{{1, 0}, 1}, {{0, 2}, 1}})})), 1);
    EXPECT_EQ(edim(quotient(qring({"x", "y"}, {}), maximal_ideal_square(qring({"x", "y"}, {})))
                       .ring),
              2);
}

TEST(Delta, Examples) {
    auto a = qring({"x", "y"}, {});
    EXPECT_EQ(delta(make_ideal(a, {qvar(2, 0), qp(2, {{{0, 2}, 1}})})), 1);
    EXPECT_EQ(delta(maximal_ideal(a)), edim(a));
    EXPECT_EQ(delta(maximal_ideal_square(a)), 0);
}

TEST(DeltaPhi, Examples) {
    auto f = squaring_map();
    EXPECT_EQ(delta_phi(f, make_ideal(f.source, {qvar(1, 0)})), 0);
    auto a = qring({"x"}, {});
    auto b = qring({"u", "v"}, {});
    auto g = make_map(a, b, {qvar(2, 0)}, 6);
    EXPECT_EQ(delta_phi(g, make_ideal(a, {qvar(1, 0)})), 1);
    // identity: delta_phi = delta
    auto a2 = node2();
    auto id = identity_map(a2);
    auto i = make_ideal(a2, {qp(2, {{{1, 0}, 1}, {{0, 2}, 3}})});
    EXPECT_EQ(delta_phi(id, i), delta(i));
}

TEST(LinearizedMap, Examples) {
    auto lm = linearized_map(squaring_map());
    EXPECT_EQ(lm.nullity, 1);
    EXPECT_EQ(lm.rank, 0);
    ASSERT_EQ(lm.matrix.nrows, 1);
    EXPECT_TRUE(QQ.is_zero(lm.matrix.at(0, 0)));

    auto a = qring({"x", "y"}, {});
    auto b = qring({"u", "v"}, {});
    auto id2 = make_map(a, b, {qvar(2, 0), qvar(2, 1)}, 6);
    auto lm2 = linearized_map(id2);
    EXPECT_EQ(lm2.nullity, 0);
    EXPECT_TRUE(lm2.matrix == Matrix<RationalField>::identity(QQ, 2));

    auto collapse = make_map(a, b, {qvar(2, 0), qvar(2, 0)}, 6);
    auto lm3 = linearized_map(collapse);
    EXPECT_EQ(lm3.rank, 1);
    EXPECT_EQ(lm3.nullity, 1);
}

TEST(Rd, Examples) {
    EXPECT_EQ(rd(squaring_map()), 1);
    EXPECT_FALSE(is_basically_regular(squaring_map()));
    auto a = node2();
    EXPECT_EQ(rd(identity_map(a)), 0);
    // the surjection onto the residue field has defect edim(A)
    EXPECT_EQ(rd(quotient(a, maximal_ideal(a)).projection), edim(a));
    // quotient by m^2 is basically regular
    EXPECT_EQ(rd(quotient(a, maximal_ideal_square(a)).projection), 0);
    // a field source is vacuously basically regular
    auto k = qring({}, {});
    auto from_field = make_map(k, a, {}, 6);
    EXPECT_TRUE(is_basically_regular(from_field));
}

TEST(Mu, ExamplesAndOracle) {
    auto a = qring({"x", "y"}, {});
    auto m = mu(maximal_ideal(a), 6);
    EXPECT_EQ(m.value, 2);
    EXPECT_TRUE(m.stable);
    auto m2 = mu(make_ideal(a, {qp(2, {{{2, 0}, 1}}), qp(2, {{{1, 1}, 1}})}), 5);
    EXPECT_EQ(m2.value, 2);
    EXPECT_TRUE(m2.stable);
    EXPECT_EQ(mu(make_ideal(a, {}), 6).value, 0);
    EXPECT_TRUE(mu(make_ideal(a, {}), 6).stable);

    // randomized cross-check against the dense brute-force route
    Rng rng(97);
    PrimeFieldT f5(5);
    for (int trial = 0; trial < 15; ++trial) {
        int n = rng.range(1, 3);
        std::vector<std::string> vars(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = "v" + std::to_string(i);
        std::vector<Poly<PrimeFieldT>> rels, gens;
        int nrels = rng.range(0, 2), ngens = rng.range(1, 2);
        auto draw = [&](int min_deg) {
            Poly<PrimeFieldT> p(f5, n);
            int terms = rng.range(1, 2);
            for (int t = 0; t < terms; ++t) {
                Monomial mo(n);
                int deg = rng.range(min_deg, 3);
                for (int d = 0; d < deg; ++d)
                    mo.e[static_cast<std::size_t>(rng.range(0, n - 1))] += 1;
                p.add_term(mo, f5.from_int(rng.range(1, 4)));
            }
            if (p.is_zero()) p.add_term(Monomial::var(n, 0), f5.one());
            return p;
        };
        for (int k = 0; k < nrels; ++k) rels.push_back(draw(2));
        for (int k = 0; k < ngens; ++k) gens.push_back(draw(1));
        auto ring = make_ring(f5, vars, std::vector<Poly<PrimeFieldT>>(rels), 6);
        auto ideal = make_ideal(ring, std::vector<Poly<PrimeFieldT>>(gens));
        int got = mu(ideal, 5).value;
        int want = oracle::naive_mu_at(f5, ring.relations, ideal.gens, n, 5);
        EXPECT_EQ(got, want);
    }
}

TEST(Mu, OfMaximalIdealEqualsEdim) {
    Rng rng(101);
    PrimeFieldT f5(5);
    for (int trial = 0; trial < 20; ++trial) {
        GenParams<PrimeFieldT> params{f5};
        params.seed = rng.u64();
        auto inst = gen_instance(params, Shape::Ring);
        auto m = mu(maximal_ideal(*inst.ring), 6);
        EXPECT_EQ(m.value, edim(*inst.ring));
        EXPECT_TRUE(m.stable);
    }
}

TEST(KrullDim, DecidableClasses) {
    EXPECT_EQ(krull_dim(qring({"x", "y"}, {})), std::optional<int>(2));
    EXPECT_EQ(krull_dim(node2()), std::optional<int>(1));
    auto r3 = qring({"x", "y", "z"},
                    {qp(3, {{{1, 1, 0}, 1}}), qp(3, {{{1, 0, 1}, 1}})});
    EXPECT_EQ(krull_dim(r3), std::optional<int>(2));
    EXPECT_EQ(krull_dim(cusp2()), std::optional<int>(1));  // single relation
    // outside the decidable class
    auto hard = qring({"x", "y"}, {qp(2, {{{3, 0}, 1}, {{0, 3}, 1}}),
                                   qp(2, {{{2, 1}, 1}, {{1, 2}, 1}})});
    EXPECT_FALSE(krull_dim(hard).has_value());
    // override takes effect outside the decidable classes
    hard.dim_override = 1;
    EXPECT_EQ(krull_dim(hard), std::optional<int>(1));
    EXPECT_EQ(krull_dim(qring({}, {})), std::optional<int>(0));
}

TEST(CdimAndRegular, Examples) {
    EXPECT_EQ(cdim(qring({"x", "y"}, {})), std::optional<int>(0));
    EXPECT_EQ(cdim(node2()), std::optional<int>(1));
    EXPECT_EQ(is_regular(qring({"x", "y"}, {})), Tri::True);
    EXPECT_EQ(is_regular(qring({"x"}, {qp(1, {{{2}, 1}})})), Tri::False);
    EXPECT_EQ(is_regular(cusp2()), Tri::True);
    auto hard = qring({"x", "y"}, {qp(2, {{{3, 0}, 1}, {{0, 3}, 1}}),
                                   qp(2, {{{2, 1}, 1}, {{1, 2}, 1}})});
    EXPECT_EQ(is_regular(hard), Tri::Unknown);
}

TEST(Eps2, Examples) {
    // regular rings have eps2 = 0
    auto r = eps2(qring({"x", "y"}, {}), 6);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->value, 0);
    EXPECT_TRUE(r->stable);
    // already minimal: two relations
    auto r2 = eps2(qring({"x", "y"}, {qp(2, {{{2, 0}, 1}}), qp(2, {{{1, 1}, 1}})}), 6);
    ASSERT_TRUE(r2.has_value());
    EXPECT_EQ(r2->value, 2);
    EXPECT_TRUE(r2->stable);
    // eliminate x via x - y^2, leaving y^4
    auto r3 = eps2(qring({"x", "y"}, {qp(2, {{{1, 0}, 1}, {{0, 2}, -1}}), qp(2, {{{2, 0}, 1}})}),
                   6);
    ASSERT_TRUE(r3.has_value());
    EXPECT_EQ(r3->value, 1);
    EXPECT_TRUE(r3->stable);
    // eliminating everything: a regular presentation in disguise
    auto r4 = eps2(qring({"x", "y"}, {qp(2, {{{1, 0}, 1}, {{0, 2}, -1}})}), 6);
    ASSERT_TRUE(r4.has_value());
    EXPECT_EQ(r4->value, 0);
    // a redundant copy of a relation with a pivot also vanishes
    auto r5 = eps2(qring({"x", "y"},
                         {qvar(2, 0), qp(2, {{{1, 0}, 1}, {{0, 2}, 1}})}),
                   6);
    ASSERT_TRUE(r5.has_value());
    EXPECT_EQ(r5->value, 1);  // reduces to QQ[y]/(y^2)
}

TEST(FlatnessStatus, WitnessRules) {
    auto a = qring({"x"}, {});
    auto big = qring({"x", "y"}, {});
    auto adj = make_map(a, big, {qvar(2, 0)}, 6);
    EXPECT_EQ(flatness_status(adj).kind, FlatStatus::Kind::Flat);
    EXPECT_EQ(flatness_status(identity_map(a)).kind, FlatStatus::Kind::Flat);
    // quotient by m^2 of a one-dimensional ring is not flat
    auto q = quotient(a, maximal_ideal_square(a));
    EXPECT_EQ(flatness_status(q.projection).kind, FlatStatus::Kind::NotFlat);
    // the squaring map has no witness either way
    EXPECT_EQ(flatness_status(squaring_map()).kind, FlatStatus::Kind::Unknown);
    // compositions of witnessed-flat maps stay witnessed
    auto adj2 = adjoin_variables(big, {"z"});
    EXPECT_EQ(flatness_status(compose(adj, adj2)).kind, FlatStatus::Kind::Flat);
}

TEST(WeaklyRegular, Examples) {
    auto a = qring({"x"}, {});
    auto big = qring({"x", "y"}, {});
    auto adj = make_map(a, big, {qvar(2, 0)}, 6);
    EXPECT_EQ(is_weakly_regular(adj), Tri::True);
    auto q = quotient(a, maximal_ideal_square(a));
    EXPECT_EQ(is_weakly_regular(q.projection), Tri::False);
    // squaring map: fiber QQ[y]/(y^2) is not regular, so the verdict is false
    EXPECT_EQ(is_weakly_regular(squaring_map()), Tri::False);
}

TEST(WeakImpliesBasic, OnWitnessedFamily) {
    Rng rng(113);
    PrimeFieldT f5(5);
    for (int trial = 0; trial < 25; ++trial) {
        GenParams<PrimeFieldT> params{f5};
        params.seed = rng.u64();
        auto inst = gen_instance(params, Shape::FlatFamily);
        if (is_weakly_regular(*inst.map) == Tri::True) {
            EXPECT_EQ(rd(*inst.map), 0);
        }
    }
}

TEST(InvariantReport, RingAndMapConsistency) {
    auto rep = ring_report(node2());
    EXPECT_EQ(rep.edim, 2);
    ASSERT_TRUE(rep.dim.has_value());
    ASSERT_TRUE(rep.cdim.has_value());
    EXPECT_EQ(*rep.cdim, rep.edim - *rep.dim);
    ASSERT_TRUE(rep.mu_max.has_value());
    EXPECT_EQ(rep.mu_max->value, rep.edim);

    auto mrep = map_report(squaring_map());
    ASSERT_TRUE(mrep.rd.has_value());
    EXPECT_GE(*mrep.rd, 0);
    EXPECT_EQ(*mrep.basically_regular, false);
}
