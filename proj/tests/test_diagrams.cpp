#include <gtest/gtest.h>

#include "helpers.hpp"
#include "locreg/invariants.hpp"
#include "locreg/generate.hpp"
#include "locreg/rng.hpp"

using namespace locreg;
using namespace testutil;

namespace {

QMap squaring_map() {
    return make_map(qring({"t"}, {}), qring({"y"}, {}), {qp(1, {{{2}, 1}})}, 6);
}

}  // namespace

TEST(TriangleRd, Examples) {
    // surjective first leg: defect zero
    auto a = qring({"x", "y"}, {});
    auto i = make_ideal(a, {qvar(2, 0)});
    auto q = quotient(a, i);
    auto qm = quotient(q.ring, maximal_ideal(q.ring));
    auto t1 = make_triangle(q.projection, qm.projection, Orientation::Clockwise);
    EXPECT_EQ(triangle_rd(t1), 0);

    // squaring then renaming, clockwise: (1 + 0) - 1 = 0
    auto f = squaring_map();
    auto c = qring({"z"}, {});
    auto g = make_map(f.target, c, {qvar(1, 0)}, 6);
    auto t2 = make_triangle(f, g, Orientation::Clockwise);
    EXPECT_EQ(triangle_rd(t2), 0);

    // identity triangle
    auto idt = make_triangle(identity_map(a), identity_map(a), Orientation::Clockwise);
    EXPECT_EQ(triangle_rd(idt), 0);

    // orientation flips the sign
    auto b = qring({"u"}, {});
    auto collapse = make_map(a, b, {qvar(1, 0), qvar(1, 0)}, 6);
    auto qk = quotient(b, maximal_ideal(b));
    auto t3cw = make_triangle(collapse, qk.projection, Orientation::Clockwise);
    auto t3acw = make_triangle(collapse, qk.projection, Orientation::Anticlockwise);
    EXPECT_EQ(triangle_rd(t3cw), -triangle_rd(t3acw));

    EXPECT_THROW(triangle_rd(DiagramShape<RationalField>{
                     DiagramShape<RationalField>::Kind::Square, Orientation::Clockwise,
                     identity_map(a), identity_map(a), identity_map(a), identity_map(a)}),
                 ShapeMismatch);
}

TEST(SquareRd, QuotientSquareIsBasicallyRegular) {
    auto f = squaring_map();
    auto i = make_ideal(f.source, {qvar(1, 0)});
    auto ib = extend_ideal(f, i);
    auto qa = quotient(f.source, i);
    auto qb = quotient(f.target, ib);
    auto fi = make_map(qa.ring, qb.ring, f.images, 6);
    auto s = make_square(f, qb.projection, qa.projection, fi, Orientation::Clockwise);
    EXPECT_EQ(square_rd(s), 0);
}

TEST(SquareRd, IdentityEdgesAndDegenerateSquare) {
    auto a = qring({"x", "y"}, {qp(2, {{{1, 1}, 1}})});
    auto ids = make_square(identity_map(a), identity_map(a), identity_map(a), identity_map(a),
                           Orientation::Clockwise);
    EXPECT_EQ(square_rd(ids), 0);

    // degenerate square with an identity left edge equals the triangle
    auto q = quotient(a, maximal_ideal(a));
    auto qm2 = quotient(a, maximal_ideal_square(a));
    auto pi_rest = make_map(qm2.ring, q.ring, qm2.projection.images, 6);
    auto tri = make_triangle(qm2.projection, pi_rest, Orientation::Clockwise);
    auto degen = make_square(qm2.projection, pi_rest, identity_map(a), q.projection,
                             Orientation::Clockwise);
    EXPECT_EQ(square_rd(degen), triangle_rd(tri));
}

TEST(BaseChange, ZeroIdealKeepsDefects) {
    auto f = squaring_map();
    auto i0 = make_ideal(f.source, {});
    auto ib = extend_ideal(f, i0);
    auto qb = quotient(f.target, ib);
    auto qa = quotient(f.source, i0);
    auto fi = make_map(qa.ring, qb.ring, f.images, 6);
    auto s = make_square(f, qb.projection, qa.projection, fi, Orientation::Clockwise);
    auto s0 = base_change_square(s, i0);
    EXPECT_EQ(square_rd(s0), square_rd(s));
    EXPECT_TRUE(s0.phi.source == f.source);
}

TEST(BaseChange, ResidueFieldSquare) {
    Rng rng(131);
    PrimeFieldT f5(5);
    for (int trial = 0; trial < 20; ++trial) {
        GenParams<PrimeFieldT> params{f5};
        params.seed = rng.u64();
        auto inst = gen_instance(params, Shape::QuotientSquare);
        const auto& s = *inst.diagram;
        auto sm = base_change_square(s, maximal_ideal(s.phi.source));
        EXPECT_EQ(square_rd(sm), square_rd(s));
        // the top-left corner of K tensor S is the residue field
        EXPECT_EQ(edim(sm.phi.source), 0);
    }
}

TEST(BaseChange, TriangleChainMatchesInducedDefect) {
    Rng rng(137);
    PrimeFieldT f5(5);
    for (int trial = 0; trial < 20; ++trial) {
        GenParams<PrimeFieldT> params{f5};
        params.seed = rng.u64();
        auto inst = gen_instance(params, Shape::ComposablePair);
        auto t = make_triangle(*inst.map, *inst.second_map, Orientation::Clockwise);
        auto tm = base_change_triangle(t, maximal_ideal(inst.map->source));
        EXPECT_EQ(triangle_rd(t), triangle_rd(tm));
    }
}
