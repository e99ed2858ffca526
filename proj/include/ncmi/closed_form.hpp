#pragma once

#include <cstdint>
#include <optional>

#include "ncmi/dual.hpp"
#include "ncmi/moments.hpp"

namespace ncmi {

/// Inputs of the linear-span law for alpha*ab + beta*ba: the two nonzero
/// coefficients and the first two moment pairs of b.
struct SpanParams {
    cplx alpha;
    cplx beta;
    DualScalar b_mean;    // (phi(b), phi'(b))
    DualScalar b_second;  // (phi(b^2), phi'(b^2))
};

struct GammaResult {
    DualScalar gamma;
    bool degenerate;  // |gamma| below the scale-relative threshold
};

/// Principal-branch square root of (alpha-beta)^2 X^2 + 4 alpha beta B2 in
/// dual arithmetic. Degenerate inputs are flagged so callers can switch to
/// the removable-singularity limit.
GammaResult gamma_of(const SpanParams& params);

/// Moment pair of (alpha*ab + beta*ba)^k given the k-th moment pair of a.
/// Takes the exact limit expression when the radicand degenerates.
DualScalar span_moment(const SpanParams& params, int k, DualScalar a_k);

/// Same evaluation with the root supplied by the caller; the result is
/// invariant under gamma -> -gamma.
DualScalar span_moment_with_gamma(const SpanParams& params, int k, DualScalar a_k,
                                  const DualScalar& gamma);

/// Infinitesimal span moment by the explicit expansion in gamma and
/// omega = (alpha-beta)^2 phi(b) phi'(b) + 2 alpha beta phi'(b^2), kept as
/// an independent route beside the dual arithmetic of span_moment.
/// Falls back to the limit path on a degenerate radicand.
cplx inf_span_moment_formula(const SpanParams& params, int k, DualScalar a_k);

/// Linear span specialized to ab + ba.
DualScalar anticommutator_moment(DualScalar b_mean, DualScalar b_second, int k,
                                 DualScalar a_k);

/// Linear span specialized to i(ab - ba).
DualScalar commutator_moment(DualScalar b_mean, DualScalar b_second, int k,
                             DualScalar a_k);

/// Two-atom law theta +/- zeta with weight on the + atom, composed with a
/// base law through its even moments: the k-th moment is
/// base(a^{2k}) * [w (theta+zeta)^k + (1-w)(theta-zeta)^k]. When zeta is
/// numerically degenerate the weight is unavailable and moments fall back
/// to the underlying linear recurrence.
class TwoAtomLaw {
public:
    TwoAtomLaw(cplx theta, cplx zeta, std::optional<cplx> weight, cplx first_coeff,
               AMomentData base);

    cplx theta() const { return theta_; }
    cplx zeta() const { return zeta_; }
    bool zeta_degenerate() const { return !weight_.has_value(); }
    cplx weight() const;

    /// Atom-mixture coefficient alpha_k (the moment without the base factor).
    cplx atom_coefficient(int k) const;
    /// k-th moment against the base law.
    cplx moment(int k) const;

private:
    cplx theta_;
    cplx zeta_;
    std::optional<cplx> weight_;
    cplx first_coeff_;
    AMomentData base_;
};

/// Law of b1*a*c1*a*b1 + b2*a*c2*a*b2 from the joint first and second
/// moments of the b/c data and the even moments of a.
TwoAtomLaw two_atom_law(cplx b11, cplx b22, cplx b12, cplx b1_mean, cplx b2_mean,
                        cplx c1_mean, cplx c2_mean, AMomentData base);

/// Centered even-power coefficient: C_m - C_{m/2}^2 for even m, C_m for odd.
std::int64_t d_m(int m);

/// Limit moment of alpha*T(A^m)*B + conj(alpha)*B*T(A^m) under the partial
/// trace: (|alpha|^2 D_m)^{k/2} for even k, zero for odd k.
double wigner_ls_limit_moment(cplx alpha, int m, int k);

/// The alternative scaling (|alpha| D_m)^{k/2}; kept only so reports can
/// show both readings when |alpha| != 1.
double wigner_ls_limit_moment_alt(cplx alpha, int m, int k);

/// Limit law of B^{2n} T(A) B^{2h} T(A) B^{2n} + B^{2m} T(A) B^{2s} T(A) B^{2m}
/// under the partial trace, as a two-atom law over Catalan data.
TwoAtomLaw wigner_general_poly_limit(int n, int m, int h, int s, AMomentData base);

/// Moment data of the limiting off-diagonal block operator T(A^m): even
/// moments D_m^{k/2}, odd moments zero.
AMomentData t_operator_limit_law(int m, int horizon);

}  // namespace ncmi
