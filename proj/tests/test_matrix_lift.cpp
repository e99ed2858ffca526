#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncmi/matrix_lift.hpp"
#include "test_util.hpp"

using namespace ncmi;
using ncmi::testing::Draw;
using ncmi::testing::rel_gap;

namespace {

SpanParams draw_params(Draw& d) {
    return SpanParams{d.disc(0.2, 2.0), d.disc(0.2, 2.0), d.dual_disc(2.0),
                      d.dual_disc(2.0)};
}

}  // namespace

TEST_CASE("reference values through the lifted matrices") {
    const SpanParams p{2.0, 3.0, DualScalar(1.0), DualScalar(2.0)};
    CHECK(rel_gap(lift_span_moment(p, 2, DualScalar(1.0)).value, 31.0) < 1e-12);

    Draw d(51);
    for (int t = 0; t < 20; ++t) {
        const SpanParams q = draw_params(d);
        const DualScalar a1 = d.dual_disc(1.0);
        CHECK(rel_gap(lift_span_moment(q, 1, a1),
                      (q.alpha + q.beta) * q.b_mean * a1) < 1e-12);
    }

    // Even centered case: (alpha beta phi(b^2))^{k/2} phi(a^k).
    const SpanParams centered{1.0, 1.0, DualScalar(0.0), DualScalar(1.0)};
    CHECK(rel_gap(lift_span_moment(centered, 4, DualScalar(2.0)).value, 2.0) < 1e-12);
}

TEST_CASE("lift agrees with the closed form on random draws") {
    Draw d(52);
    for (int t = 0; t < 100; ++t) {
        const SpanParams p = draw_params(d);
        for (int k = 1; k <= 10; ++k) {
            const DualScalar a_k = d.dual_disc(1.0);
            CHECK(rel_gap(lift_span_moment(p, k, a_k), span_moment(p, k, a_k)) < 1e-9);
        }
    }
}

TEST_CASE("lower-right entry of the assembled product is structurally zero") {
    Draw d(53);
    for (int t = 0; t < 50; ++t) {
        const LiftedTriple triple = make_lifted_triple(draw_params(d));
        for (int k = 1; k <= 6; ++k) {
            const DualMatrix2 m =
                triple.b0 * matrix_power_seq(triple.transfer, k - 1) * triple.b1;
            CHECK(m.e[1][1] == DualScalar());
            CHECK(m.e[1][0] == DualScalar());
        }
    }
}

TEST_CASE("sequential powers agree with repeated squaring") {
    Draw d(54);
    for (int t = 0; t < 50; ++t) {
        const LiftedTriple triple = make_lifted_triple(draw_params(d));
        for (int k = 0; k <= 9; ++k) {
            const DualMatrix2 seq = matrix_power_seq(triple.transfer, k);
            const DualMatrix2 sqr = matrix_power_square(triple.transfer, k);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(rel_gap(sqr.e[i][j], seq.e[i][j]) < 1e-12);
        }
    }
}

TEST_CASE("argument validation") {
    const SpanParams p{1.0, 1.0, DualScalar(0.0), DualScalar(1.0)};
    CHECK_THROWS_AS(lift_span_moment(p, 0, DualScalar(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_power_seq(DualMatrix2{}, -1), std::invalid_argument);
}
