#pragma once

#include <array>

#include "ncmi/closed_form.hpp"
#include "ncmi/dual.hpp"

namespace ncmi {

/// 2x2 matrix over the dual scalars.
struct DualMatrix2 {
    std::array<std::array<DualScalar, 2>, 2> e{};

    static DualMatrix2 identity();
    friend DualMatrix2 operator*(const DualMatrix2& x, const DualMatrix2& y);
    DualScalar trace() const { return e[0][0] + e[1][1]; }
};

/// Powers by sequential left-multiplication and by repeated squaring; the
/// second exists as an independent check of the first.
DualMatrix2 matrix_power_seq(const DualMatrix2& m, int k);
DualMatrix2 matrix_power_square(const DualMatrix2& m, int k);

/// The scalar-replaced boundary and transfer matrices of the span lift:
/// b0 = [[alpha, X], [0, 0]], transfer = [[alpha X, B2], [alpha beta, beta X]],
/// b1 = [[X, 0], [beta, 0]] with X, B2 the moment pairs of b.
struct LiftedTriple {
    DualMatrix2 b0;
    DualMatrix2 transfer;
    DualMatrix2 b1;
};

LiftedTriple make_lifted_triple(const SpanParams& params);

/// Span moment through the matrix route: a_k * Tr(b0 * transfer^{k-1} * b1).
/// The (2,2) entry of the product is structurally zero and is verified on
/// every call.
DualScalar lift_span_moment(const SpanParams& params, int k, DualScalar a_k);

}  // namespace ncmi
