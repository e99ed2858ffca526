#include "ncmi/matrix_lift.hpp"

#include <stdexcept>

namespace ncmi {

DualMatrix2 DualMatrix2::identity() {
    DualMatrix2 m;
    m.e[0][0] = DualScalar::one();
    m.e[1][1] = DualScalar::one();
    return m;
}

DualMatrix2 operator*(const DualMatrix2& x, const DualMatrix2& y) {
    DualMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
    return r;
}

DualMatrix2 matrix_power_seq(const DualMatrix2& m, int k) {
    if (k < 0) throw std::invalid_argument("matrix_power_seq: negative exponent");
    DualMatrix2 r = DualMatrix2::identity();
    for (int i = 0; i < k; ++i) r = m * r;
    return r;
}

DualMatrix2 matrix_power_square(const DualMatrix2& m, int k) {
    if (k < 0) throw std::invalid_argument("matrix_power_square: negative exponent");
    DualMatrix2 r = DualMatrix2::identity();
    DualMatrix2 base = m;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

LiftedTriple make_lifted_triple(const SpanParams& params) {
    const DualScalar x = params.b_mean;
    const DualScalar b2 = params.b_second;
    LiftedTriple t;
    t.b0.e[0][0] = DualScalar(params.alpha);
    t.b0.e[0][1] = x;
    t.transfer.e[0][0] = params.alpha * x;
    t.transfer.e[0][1] = b2;
    t.transfer.e[1][0] = DualScalar(params.alpha * params.beta);
    t.transfer.e[1][1] = params.beta * x;
    t.b1.e[0][0] = x;
    t.b1.e[1][0] = DualScalar(params.beta);
    return t;
}

DualScalar lift_span_moment(const SpanParams& params, int k, DualScalar a_k) {
    if (k < 1) throw std::invalid_argument("lift_span_moment: k must be positive");
    const LiftedTriple t = make_lifted_triple(params);
    const DualMatrix2 m = t.b0 * matrix_power_seq(t.transfer, k - 1) * t.b1;
    if (!(m.e[1][1] == DualScalar()))
        throw std::logic_error("lift_span_moment: (2,2) entry must vanish");
    return a_k * m.trace();
}

}  // namespace ncmi
