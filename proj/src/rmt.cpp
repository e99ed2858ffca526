#include "ncmi/rmt.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "ncmi/closed_form.hpp"

namespace ncmi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derived_seed(std::uint64_t seed, int index) {
    return splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(index) + 1);
}

// Gaussian draws via Box-Muller on explicitly constructed uniforms, so the
// stream depends only on the engine and not on the standard library's
// distribution internals.
class EntrySampler {
public:
    explicit EntrySampler(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {  // in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    double rademacher() { return (eng_() & 1u) ? 1.0 : -1.0; }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

void WignerConfig::validate() const {
    if (n < 1 || n > kMaxMatrixSize)
        throw std::invalid_argument("WignerConfig: n must be in [1, " +
                                    std::to_string(kMaxMatrixSize) + "]");
    if (n0 < 1 || n0 > n)
        throw std::invalid_argument("WignerConfig: n0 must satisfy 1 <= n0 <= n");
    if (samples < 1) throw std::invalid_argument("WignerConfig: samples must be >= 1");
    if (entry_law == EntryLaw::rademacher && ensemble != Ensemble::real)
        throw std::invalid_argument(
            "WignerConfig: rademacher entries are defined for the real ensemble only");
}

MatrixC sample_wigner(const WignerConfig& config, int index) {
    config.validate();
    EntrySampler g(derived_seed(config.seed, index));
    const int n = config.n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const bool gaussian = config.entry_law == EntryLaw::gaussian;
    const bool complex_entries = config.ensemble == Ensemble::complex;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    MatrixC w(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = scale * (gaussian ? g.normal() : g.rademacher());
        for (int j = i + 1; j < n; ++j) {
            cplx e;
            if (complex_entries)
                e = cplx(g.normal(), g.normal()) * inv_sqrt2;
            else
                e = gaussian ? g.normal() : g.rademacher();
            w(i, j) = scale * e;
            w(j, i) = std::conj(scale * e);
        }
    }
    return w;
}

MatrixC projector(int n, int n0) {
    if (n0 < 1 || n0 > n) throw std::invalid_argument("projector: need 1 <= n0 <= n");
    MatrixC p(n, n);
    for (int i = 0; i < n0; ++i) p(i, i) = 1.0;
    return p;
}

MatrixC t_operator(const MatrixC& m, int n0) {
    if (m.rows() != m.cols()) throw std::invalid_argument("t_operator: matrix not square");
    if (n0 < 1 || n0 > m.rows())
        throw std::invalid_argument("t_operator: need 1 <= n0 <= n");
    MatrixC r = m;
    for (int i = 0; i < r.rows(); ++i) {
        const bool top = i < n0;
        const int begin = top ? 0 : n0;
        const int end = top ? n0 : r.rows();
        for (int j = begin; j < end; ++j) r(i, j) = 0.0;
    }
    return r;
}

cplx partial_trace(const MatrixC& m, int n0) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("partial_trace: matrix not square");
    if (n0 < 1 || n0 > m.rows())
        throw std::invalid_argument("partial_trace: need 1 <= n0 <= n");
    cplx t = 0.0;
    for (int i = 0; i < n0; ++i) t += m(i, i);
    return t / static_cast<double>(n0);
}

PolySpec::PolySpec(std::string name, std::vector<SpecTerm> terms, Prediction prediction)
    : name_(std::move(name)), prediction_(std::move(prediction)) {
    // Merge terms with identical factor lists so repeated words cost one pass.
    for (SpecTerm& t : terms) {
        if (t.factors.empty()) throw std::invalid_argument("PolySpec: empty term");
        bool merged = false;
        for (SpecTerm& kept : terms_) {
            if (kept.factors == t.factors) {
                kept.coeff += t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(std::move(t));
    }
    for (const SpecTerm& t : terms_)
        for (const SpecFactor& f : t.factors)
            if (const auto* tf = std::get_if<TFactor>(&f); tf && tf->q.empty())
                throw std::invalid_argument("PolySpec: T factor with empty polynomial");
}

bool PolySpec::uses_a() const {
    for (const SpecTerm& t : terms_)
        for (const SpecFactor& f : t.factors)
            if (std::holds_alternative<TFactor>(f)) return true;
    return false;
}

bool PolySpec::uses_b() const {
    for (const SpecTerm& t : terms_)
        for (const SpecFactor& f : t.factors)
            if (std::holds_alternative<BPowFactor>(f)) return true;
    return false;
}

namespace {

TFactor monomial_t(int m) {
    TFactor f;
    f.q.assign(static_cast<std::size_t>(m), cplx(0.0));
    f.q.back() = 1.0;
    return f;
}

}  // namespace

PolySpec PolySpec::t_power(int m) {
    if (m < 1) throw std::invalid_argument("PolySpec::t_power: m must be positive");
    const double variance = static_cast<double>(d_m(m));
    std::vector<SpecTerm> terms{{cplx(1.0), {monomial_t(m)}}};
    return PolySpec("t", std::move(terms), [variance](int k) -> cplx {
        return k % 2 == 0 ? std::pow(variance, k / 2) : 0.0;
    });
}

PolySpec PolySpec::span(cplx alpha, int m) {
    if (alpha == cplx(0.0)) throw std::invalid_argument("PolySpec::span: alpha is zero");
    if (m < 1) throw std::invalid_argument("PolySpec::span: m must be positive");
    std::vector<SpecTerm> terms{
        {alpha, {monomial_t(m), BPowFactor{1}}},
        {std::conj(alpha), {BPowFactor{1}, monomial_t(m)}},
    };
    return PolySpec("span", std::move(terms), [alpha, m](int k) -> cplx {
        return wigner_ls_limit_moment(alpha, m, k);
    });
}

PolySpec PolySpec::general_word(int n, int m, int h, int s) {
    if (n < 1 || m < 1 || h < 1 || s < 1)
        throw std::invalid_argument("PolySpec::general_word: exponents must be positive");
    const TFactor t = monomial_t(1);
    std::vector<SpecTerm> terms{
        {cplx(1.0),
         {BPowFactor{2 * n}, t, BPowFactor{2 * h}, t, BPowFactor{2 * n}}},
        {cplx(1.0),
         {BPowFactor{2 * m}, t, BPowFactor{2 * s}, t, BPowFactor{2 * m}}},
    };
    const TwoAtomLaw law =
        wigner_general_poly_limit(n, m, h, s, t_operator_limit_law(1, 128));
    return PolySpec("general", std::move(terms),
                    [law](int k) -> cplx { return law.moment(k); });
}

namespace {

// Panel pipeline: all buffers are n x width, reused across factor
// applications of one sample.
struct PanelWork {
    MatrixC cur, next, scratch;
    PanelWork(int n, int width) : cur(n, width), next(n, width), scratch(n, width) {}
};

void zero_rows(MatrixC& x, int begin, int end) {
    for (int i = begin; i < end; ++i) {
        cplx* r = x.row(i);
        std::fill(r, r + x.cols(), cplx(0.0));
    }
}

// next = Q(A) * cur by Horner on the coefficients of Q(z)/z, then one more
// multiplication by A.
void apply_q_of_a(const TFactor& f, const MatrixC& a, PanelWork& w, Exec exec) {
    const int deg = static_cast<int>(f.q.size());
    const int n = w.cur.rows();
    const int width = w.cur.cols();
    // next = q_{deg-1} * cur
    for (int i = 0; i < n; ++i) {
        const cplx* src = w.cur.row(i);
        cplx* dst = w.next.row(i);
        for (int j = 0; j < width; ++j) dst[j] = f.q.back() * src[j];
    }
    for (int d = deg - 2; d >= 0; --d) {
        matmul_into(w.scratch, a, w.next, exec);
        for (int i = 0; i < n; ++i) {
            const cplx* base = w.cur.row(i);
            const cplx* acc = w.scratch.row(i);
            cplx* dst = w.next.row(i);
            for (int j = 0; j < width; ++j) dst[j] = acc[j] + f.q[static_cast<std::size_t>(d)] * base[j];
        }
    }
    matmul_into(w.scratch, a, w.next, exec);
    std::swap(w.next, w.scratch);
}

// cur <- T(Q(A)) * cur. For a degree-one polynomial the known zero blocks
// reduce the work to two thin products; otherwise the two masked sides each
// pay the full polynomial evaluation.
void apply_t_factor(const TFactor& f, const MatrixC& a, int n0, PanelWork& w,
                    Exec exec) {
    const int n = a.rows();
    if (f.q.size() == 1) {
        // rows < n0 of q*A*cur need only columns >= n0 of A, and vice versa.
        matmul_rows_into(w.next, a, w.cur, 0, n0, n0, n, exec);
        matmul_rows_into(w.next, a, w.cur, n0, n, 0, n0, exec);
        const cplx q = f.q.front();
        for (int i = 0; i < n; ++i) {
            cplx* r = w.next.row(i);
            for (int j = 0; j < w.next.cols(); ++j) r[j] *= q;
        }
        std::swap(w.cur, w.next);
        return;
    }
    // General polynomial: evaluate Q(A) against each masked half.
    MatrixC top_masked = w.cur;   // (1-j) x : top rows zeroed
    zero_rows(top_masked, 0, n0);
    MatrixC bottom_masked = std::move(w.cur);  // j x : bottom rows zeroed
    zero_rows(bottom_masked, n0, n);

    MatrixC out(n, top_masked.cols());
    w.cur = std::move(top_masked);
    apply_q_of_a(f, a, w, exec);
    for (int i = 0; i < n0; ++i) {
        const cplx* src = w.next.row(i);
        std::copy(src, src + out.cols(), out.row(i));
    }
    w.cur = std::move(bottom_masked);
    apply_q_of_a(f, a, w, exec);
    for (int i = n0; i < n; ++i) {
        const cplx* src = w.next.row(i);
        std::copy(src, src + out.cols(), out.row(i));
    }
    w.cur = std::move(out);
}

void apply_factor(const SpecFactor& f, const MatrixC& a, const MatrixC& b, int n0,
                  PanelWork& w, Exec exec) {
    if (const auto* tf = std::get_if<TFactor>(&f)) {
        if (a.empty()) throw std::invalid_argument("PolySpec: T factor but no A matrix");
        apply_t_factor(*tf, a, n0, w, exec);
    } else if (const auto* bp = std::get_if<BPowFactor>(&f)) {
        if (b.empty()) throw std::invalid_argument("PolySpec: B factor but no B matrix");
        for (int p = 0; p < bp->power; ++p) {
            matmul_into(w.next, b, w.cur, exec);
            std::swap(w.cur, w.next);
        }
    } else {
        const auto& pj = std::get<ProjFactor>(f);
        if (pj.complement)
            zero_rows(w.cur, 0, n0);
        else
            zero_rows(w.cur, n0, w.cur.rows());
    }
}

int spec_dimension(const PolySpec& spec, const MatrixC& a, const MatrixC& b) {
    if (spec.uses_a() && a.empty())
        throw std::invalid_argument("psi evaluation: spec uses A but no A matrix supplied");
    if (spec.uses_b() && b.empty())
        throw std::invalid_argument("psi evaluation: spec uses B but no B matrix supplied");
    if (!a.empty() && !b.empty() && a.rows() != b.rows())
        throw std::invalid_argument("psi evaluation: A and B sizes differ");
    if (!a.empty()) return a.rows();
    if (!b.empty()) return b.rows();
    throw std::invalid_argument("psi evaluation: no generator matrix supplied");
}

}  // namespace

std::vector<cplx> psi_sample_moments(const PolySpec& spec, int kmax, const MatrixC& a,
                                     const MatrixC& b, int n0, Exec exec) {
    if (kmax < 1) throw std::invalid_argument("psi_sample_moments: kmax must be >= 1");
    const int n = spec_dimension(spec, a, b);
    if (n0 < 1 || n0 > n)
        throw std::invalid_argument("psi_sample_moments: need 1 <= n0 <= n");

    // Panel of the first n0 coordinate vectors.
    MatrixC panel(n, n0);
    for (int i = 0; i < n0; ++i) panel(i, i) = 1.0;

    PanelWork w(n, n0);
    MatrixC acc(n, n0);
    std::vector<cplx> psi;
    psi.reserve(static_cast<std::size_t>(kmax));
    for (int step = 0; step < kmax; ++step) {
        acc.set_zero();
        for (const SpecTerm& term : spec.terms()) {
            w.cur = panel;
            for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it)
                apply_factor(*it, a, b, n0, w, exec);
            for (int i = 0; i < n; ++i) {
                const cplx* src = w.cur.row(i);
                cplx* dst = acc.row(i);
                for (int j = 0; j < n0; ++j) dst[j] += term.coeff * src[j];
            }
        }
        panel = acc;
        cplx t = 0.0;
        for (int i = 0; i < n0; ++i) t += panel(i, i);
        psi.push_back(t / static_cast<double>(n0));
    }
    return psi;
}

cplx psi_reference_moment(const PolySpec& spec, int k, const MatrixC& a,
                          const MatrixC& b, int n0) {
    if (k < 1) throw std::invalid_argument("psi_reference_moment: k must be >= 1");
    const int n = spec_dimension(spec, a, b);

    auto factor_matrix = [&](const SpecFactor& f) -> MatrixC {
        if (const auto* tf = std::get_if<TFactor>(&f)) {
            MatrixC q(n, n);
            MatrixC power = MatrixC::identity(n);
            for (const cplx& c : tf->q) {
                power = matmul(power, a, Exec::serial);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) q(i, j) += c * power(i, j);
            }
            return t_operator(q, n0);
        }
        if (const auto* bp = std::get_if<BPowFactor>(&f)) {
            MatrixC r = MatrixC::identity(n);
            for (int p = 0; p < bp->power; ++p) r = matmul(r, b, Exec::serial);
            return r;
        }
        const auto& pj = std::get<ProjFactor>(f);
        MatrixC j = projector(n, n0);
        if (!pj.complement) return j;
        MatrixC r = MatrixC::identity(n);
        for (int i = 0; i < n; ++i) r(i, i) -= j(i, i);
        return r;
    };

    MatrixC p(n, n);
    for (const SpecTerm& term : spec.terms()) {
        MatrixC prod = MatrixC::identity(n);
        for (const SpecFactor& f : term.factors)
            prod = matmul(prod, factor_matrix(f), Exec::serial);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) += term.coeff * prod(i, j);
    }
    MatrixC pk = MatrixC::identity(n);
    for (int i = 0; i < k; ++i) pk = matmul(pk, p, Exec::serial);
    return partial_trace(pk, n0);
}

std::vector<MCEstimate> mc_moment_estimates(const PolySpec& spec, int kmax,
                                            const WignerConfig& config, Exec exec) {
    config.validate();
    if (kmax < 1) throw std::invalid_argument("mc_moment_estimates: kmax must be >= 1");
    const int m = config.samples;
    const bool need_a = spec.uses_a();
    const bool need_b = spec.uses_b();

    std::vector<std::vector<cplx>> values(static_cast<std::size_t>(m));
    const bool parallel = exec == Exec::openmp;
#ifdef NCMI_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int s = 0; s < m; ++s) {
        const MatrixC a = need_a ? sample_wigner(config, 2 * s) : MatrixC();
        const MatrixC b = need_b ? sample_wigner(config, 2 * s + 1) : MatrixC();
        values[static_cast<std::size_t>(s)] =
            psi_sample_moments(spec, kmax, a, b, config.n0, Exec::serial);
    }
#ifndef NCMI_HAVE_OPENMP
    (void)parallel;
#endif

    std::vector<MCEstimate> out;
    out.reserve(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        MCEstimate e;
        e.k = k;
        e.samples = m;
        cplx sum = 0.0;
        for (int s = 0; s < m; ++s) sum += values[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - 1)];
        e.mean = sum / static_cast<double>(m);
        double var = 0.0;
        for (int s = 0; s < m; ++s)
            var += std::norm(values[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - 1)] - e.mean);
        e.std_error = m > 1 ? std::sqrt(var / (m - 1)) / std::sqrt(static_cast<double>(m)) : 0.0;
        e.prediction = spec.prediction(k);
        e.abs_gap = std::abs(e.mean - e.prediction);
        out.push_back(e);
    }
    return out;
}

MCEstimate mc_moment_estimate(const PolySpec& spec, int k, const WignerConfig& config,
                              Exec exec) {
    return mc_moment_estimates(spec, k, config, exec).back();
}

TraceMoments wigner_trace_means(const WignerConfig& config, Exec exec) {
    config.validate();
    const int m = config.samples;
    const int n = config.n;
    std::vector<double> tr2(static_cast<std::size_t>(m));
    std::vector<double> tr4(static_cast<std::size_t>(m));
    const bool parallel = exec == Exec::openmp;
#ifdef NCMI_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int s = 0; s < m; ++s) {
        const MatrixC w = sample_wigner(config, s);
        // Tr(W^2) = sum |w_ij|^2; Tr(W^4) = squared Frobenius norm of W^2,
        // assembled from row-by-row inner products of the Hermitian W.
        double t2 = 0.0;
        double t4 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double* ri = reinterpret_cast<const double*>(w.row(i));
            for (int j = i; j < n; ++j) {
                const double* rj = reinterpret_cast<const double*>(w.row(j));
                double dr = 0.0, di = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double ar = ri[2 * k], ai = ri[2 * k + 1];
                    const double br = rj[2 * k], bi = rj[2 * k + 1];
                    dr += ar * br + ai * bi;
                    di += ai * br - ar * bi;
                }
                const double sq = dr * dr + di * di;
                t4 += (i == j) ? sq : 2.0 * sq;
                t2 += (i == j) ? std::norm(w(i, j)) : 2.0 * std::norm(w(i, j));
            }
        }
        tr2[static_cast<std::size_t>(s)] = t2 / n;
        tr4[static_cast<std::size_t>(s)] = t4 / n;
    }
#ifndef NCMI_HAVE_OPENMP
    (void)parallel;
#endif
    TraceMoments t;
    for (int s = 0; s < m; ++s) {
        t.second += tr2[static_cast<std::size_t>(s)];
        t.fourth += tr4[static_cast<std::size_t>(s)];
    }
    t.second /= m;
    t.fourth /= m;
    return t;
}

}  // namespace ncmi
