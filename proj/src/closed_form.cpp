#include "ncmi/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "ncmi/catalan.hpp"

namespace ncmi {

namespace {

constexpr double kGammaEps = 1e-12;
constexpr double kZetaEps = 1e-9;

cplx cpow_int(cplx z, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

void require_span_params(const SpanParams& p) {
    if (p.alpha == cplx(0.0) || p.beta == cplx(0.0))
        throw std::invalid_argument("span law: alpha and beta must be nonzero");
}

}  // namespace

GammaResult gamma_of(const SpanParams& params) {
    require_span_params(params);
    const cplx d = params.alpha - params.beta;
    const cplx ab4 = 4.0 * params.alpha * params.beta;
    const DualScalar radicand =
        (d * d) * (params.b_mean * params.b_mean) + ab4 * params.b_second;

    const double scale = std::norm(d) * std::norm(params.b_mean.value) +
                         4.0 * std::abs(params.alpha) * std::abs(params.beta) *
                             std::abs(params.b_second.value) +
                         1.0;
    const cplx root = std::sqrt(radicand.value);
    if (std::abs(root) < kGammaEps * scale)
        return {DualScalar(root), true};
    return {DualScalar(root, radicand.eps / (2.0 * root)), false};
}

DualScalar span_moment_with_gamma(const SpanParams& params, int k, DualScalar a_k,
                                  const DualScalar& gamma) {
    if (k < 1) throw std::invalid_argument("span_moment: k must be positive");
    const DualScalar u = (params.alpha + params.beta) * params.b_mean;
    const DualScalar bracket = pow(u + gamma, k + 1) - pow(u - gamma, k + 1);
    const double scale = 1.0 / std::ldexp(1.0, k + 1);  // 2^-(k+1)
    return a_k * bracket * inverse(gamma) * scale;
}

DualScalar span_moment(const SpanParams& params, int k, DualScalar a_k) {
    if (k < 1) throw std::invalid_argument("span_moment: k must be positive");
    const GammaResult g = gamma_of(params);
    if (g.degenerate) {
        const DualScalar u = (params.alpha + params.beta) * params.b_mean;
        const double scale = static_cast<double>(k + 1) / std::ldexp(1.0, k);
        return a_k * pow(u, k) * scale;
    }
    return span_moment_with_gamma(params, k, a_k, g.gamma);
}

cplx inf_span_moment_formula(const SpanParams& params, int k, DualScalar a_k) {
    if (k < 1) throw std::invalid_argument("inf_span_moment_formula: k must be positive");
    const GammaResult g = gamma_of(params);
    if (g.degenerate) return span_moment(params, k, a_k).eps;

    const cplx x = params.b_mean.value;
    const cplx y = params.b_mean.eps;
    const cplx gamma = g.gamma.value;
    const cplx omega = (params.alpha - params.beta) * (params.alpha - params.beta) * x * y +
                       2.0 * params.alpha * params.beta * params.b_second.eps;
    const cplx s = params.alpha + params.beta;
    const double inv2 = 1.0 / std::ldexp(1.0, k + 1);

    const cplx plus = s * x + gamma;
    const cplx minus = s * x - gamma;
    const cplx common =
        s * (static_cast<double>(k + 1) * y - x * omega / (gamma * gamma));
    const cplx swing = static_cast<double>(k) * omega / gamma;

    const cplx drift = a_k.value * inv2 / gamma *
                       (cpow_int(plus, k) * (common + swing) -
                        cpow_int(minus, k) * (common - swing));
    const cplx carried = a_k.eps * inv2 / gamma *
                         (cpow_int(plus, k + 1) - cpow_int(minus, k + 1));
    return drift + carried;
}

DualScalar anticommutator_moment(DualScalar b_mean, DualScalar b_second, int k,
                                 DualScalar a_k) {
    return span_moment({1.0, 1.0, b_mean, b_second}, k, a_k);
}

DualScalar commutator_moment(DualScalar b_mean, DualScalar b_second, int k,
                             DualScalar a_k) {
    return span_moment({cplx(0.0, 1.0), cplx(0.0, -1.0), b_mean, b_second}, k, a_k);
}

TwoAtomLaw::TwoAtomLaw(cplx theta, cplx zeta, std::optional<cplx> weight,
                       cplx first_coeff, AMomentData base)
    : theta_(theta),
      zeta_(zeta),
      weight_(weight),
      first_coeff_(first_coeff),
      base_(std::move(base)) {}

cplx TwoAtomLaw::weight() const {
    if (!weight_)
        throw std::domain_error("TwoAtomLaw: weight undefined for degenerate zeta");
    return *weight_;
}

cplx TwoAtomLaw::atom_coefficient(int k) const {
    if (k < 0) throw std::invalid_argument("TwoAtomLaw: negative moment order");
    if (k == 0) return 1.0;
    if (weight_) {
        return *weight_ * cpow_int(theta_ + zeta_, k) +
               (1.0 - *weight_) * cpow_int(theta_ - zeta_, k);
    }
    // Linear recurrence with characteristic roots theta +/- zeta.
    const cplx sum = 2.0 * theta_;
    const cplx prod = theta_ * theta_ - zeta_ * zeta_;
    cplx prev = 1.0;
    cplx cur = first_coeff_;
    for (int i = 2; i <= k; ++i) {
        const cplx next = sum * cur - prod * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx TwoAtomLaw::moment(int k) const {
    const DualScalar base_moment = base_(NCWord::power(NCLetter::a(), 2 * k));
    return base_moment.value * atom_coefficient(k);
}

TwoAtomLaw two_atom_law(cplx b11, cplx b22, cplx b12, cplx b1_mean, cplx b2_mean,
                        cplx c1_mean, cplx c2_mean, AMomentData base) {
    const cplx theta = 0.5 * (b22 * c2_mean + b11 * c1_mean);
    const cplx zeta =
        0.5 * std::sqrt((b22 * c2_mean - b11 * c1_mean) * (b22 * c2_mean - b11 * c1_mean) +
                        4.0 * b12 * b12 * c2_mean * c1_mean);
    const cplx first = c1_mean * b1_mean * b1_mean + c2_mean * b2_mean * b2_mean;

    std::optional<cplx> weight;
    if (std::abs(zeta) > kZetaEps * (std::abs(theta) + 1.0))
        weight = (zeta - theta + first) / (2.0 * zeta);
    return TwoAtomLaw(theta, zeta, weight, first, std::move(base));
}

std::int64_t d_m(int m) {
    if (m < 1) throw std::invalid_argument("d_m: m must be positive");
    if (m % 2 == 1) return catalan(m);
    const std::int64_t half = catalan(m / 2);
    return catalan(m) - half * half;
}

double wigner_ls_limit_moment(cplx alpha, int m, int k) {
    if (alpha == cplx(0.0)) throw std::invalid_argument("wigner_ls_limit_moment: alpha is zero");
    if (m < 1 || k < 1) throw std::invalid_argument("wigner_ls_limit_moment: m, k must be positive");
    if (k % 2 == 1) return 0.0;
    return std::pow(std::norm(alpha) * static_cast<double>(d_m(m)), k / 2);
}

double wigner_ls_limit_moment_alt(cplx alpha, int m, int k) {
    if (alpha == cplx(0.0)) throw std::invalid_argument("wigner_ls_limit_moment_alt: alpha is zero");
    if (m < 1 || k < 1) throw std::invalid_argument("wigner_ls_limit_moment_alt: m, k must be positive");
    if (k % 2 == 1) return 0.0;
    return std::pow(std::abs(alpha) * static_cast<double>(d_m(m)), k / 2);
}

TwoAtomLaw wigner_general_poly_limit(int n, int m, int h, int s, AMomentData base) {
    if (n < 1 || m < 1 || h < 1 || s < 1)
        throw std::invalid_argument("wigner_general_poly_limit: exponents must be positive");
    return two_atom_law(static_cast<double>(catalan(2 * n)),
                        static_cast<double>(catalan(2 * m)),
                        static_cast<double>(catalan(n + m)),
                        static_cast<double>(catalan(n)),
                        static_cast<double>(catalan(m)),
                        static_cast<double>(catalan(h)),
                        static_cast<double>(catalan(s)), std::move(base));
}

AMomentData t_operator_limit_law(int m, int horizon) {
    if (m < 1) throw std::invalid_argument("t_operator_limit_law: m must be positive");
    const double variance = static_cast<double>(d_m(m));
    std::vector<DualScalar> ms;
    ms.reserve(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k)
        ms.emplace_back(k % 2 == 0 ? cplx(std::pow(variance, k / 2)) : cplx(0.0));
    return AMomentData::from_moments(std::move(ms));
}

}  // namespace ncmi
