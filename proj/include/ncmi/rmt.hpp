#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ncmi/linalg.hpp"

namespace ncmi {

enum class Ensemble { real, complex };
enum class EntryLaw { gaussian, rademacher };

/// Matrix sizes above this would make a single sample unreasonably large.
inline constexpr int kMaxMatrixSize = 4096;

struct WignerConfig {
    Ensemble ensemble = Ensemble::complex;
    int n = 600;
    int n0 = 30;
    int samples = 400;
    EntryLaw entry_law = EntryLaw::gaussian;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Hermitian Wigner matrix with entries scaled by 1/sqrt(N); the entry
/// stream is a pure function of (config.seed, index).
MatrixC sample_wigner(const WignerConfig& config, int index);

/// Diagonal 0/1 projection onto the first n0 coordinates.
MatrixC projector(int n, int n0);

/// Off-diagonal block part j*M*(1-j) + (1-j)*M*j of a square matrix.
MatrixC t_operator(const MatrixC& m, int n0);

/// Normalized trace of the leading n0 x n0 corner.
cplx partial_trace(const MatrixC& m, int n0);

/// Factors of a matrix-polynomial program, applied right-to-left.
/// q[d] is the coefficient of A^{d+1}, so the polynomial under T always has
/// zero constant term.
struct TFactor {
    std::vector<cplx> q;
    friend bool operator==(const TFactor&, const TFactor&) = default;
};
struct BPowFactor {
    int power = 1;
    friend bool operator==(const BPowFactor&, const BPowFactor&) = default;
};
struct ProjFactor {
    bool complement = false;  // false: j, true: 1-j
    friend bool operator==(const ProjFactor&, const ProjFactor&) = default;
};
using SpecFactor = std::variant<TFactor, BPowFactor, ProjFactor>;

struct SpecTerm {
    cplx coeff;
    std::vector<SpecFactor> factors;  // product order, leftmost first
};

/// A polynomial in the generators {T(Q(A)), B, j, 1-j} together with its
/// closed-form limit prediction under the partial trace.
class PolySpec {
public:
    using Prediction = std::function<cplx(int)>;

    PolySpec(std::string name, std::vector<SpecTerm> terms, Prediction prediction);

    /// T(A^m).
    static PolySpec t_power(int m);
    /// alpha T(A^m) B + conj(alpha) B T(A^m).
    static PolySpec span(cplx alpha, int m);
    /// B^{2n} T(A) B^{2h} T(A) B^{2n} + B^{2m} T(A) B^{2s} T(A) B^{2m}.
    static PolySpec general_word(int n, int m, int h, int s);

    const std::string& name() const { return name_; }
    const std::vector<SpecTerm>& terms() const { return terms_; }
    cplx prediction(int k) const { return prediction_(k); }
    bool uses_a() const;
    bool uses_b() const;

private:
    std::string name_;
    std::vector<SpecTerm> terms_;
    Prediction prediction_;
};

struct MCEstimate {
    int k = 0;
    cplx mean;
    double std_error = 0.0;
    int samples = 0;
    cplx prediction;
    double abs_gap = 0.0;
};

/// Corner-trace moments psi(P^k) for k = 1..kmax of one sampled tuple,
/// evaluated by driving column panels through the program; P is never
/// formed as a full matrix. Unused generator matrices may be empty.
std::vector<cplx> psi_sample_moments(const PolySpec& spec, int kmax, const MatrixC& a,
                                     const MatrixC& b, int n0,
                                     Exec exec = Exec::serial);

/// Full-matrix evaluation of the same quantity; the slow reference the
/// panel path is tested against.
cplx psi_reference_moment(const PolySpec& spec, int k, const MatrixC& a,
                          const MatrixC& b, int n0);

/// Monte Carlo estimates for k = 1..kmax. Sampling is parallel across
/// sample indices; the reduction is sequential in index order, so the
/// result is bit-identical for either execution policy.
std::vector<MCEstimate> mc_moment_estimates(const PolySpec& spec, int kmax,
                                            const WignerConfig& config,
                                            Exec exec = Exec::openmp);

MCEstimate mc_moment_estimate(const PolySpec& spec, int k, const WignerConfig& config,
                              Exec exec = Exec::openmp);

/// Sample means of (1/N)Tr(W^2) and (1/N)Tr(W^4).
struct TraceMoments {
    double second = 0.0;
    double fourth = 0.0;
};
TraceMoments wigner_trace_means(const WignerConfig& config, Exec exec = Exec::openmp);

}  // namespace ncmi
