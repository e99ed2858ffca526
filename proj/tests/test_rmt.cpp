#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncmi/rmt.hpp"
#include "test_util.hpp"

using namespace ncmi;

namespace {

WignerConfig small_config(int n, int n0, int samples, std::uint64_t seed) {
    WignerConfig c;
    c.n = n;
    c.n0 = n0;
    c.samples = samples;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("configuration validation") {
    WignerConfig c = small_config(10, 4, 2, 1);
    CHECK_NOTHROW(c.validate());
    c.n0 = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.n0 = 11;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config(10, 4, 0, 1);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config(kMaxMatrixSize + 1, 4, 2, 1);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config(10, 4, 2, 1);
    c.entry_law = EntryLaw::rademacher;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.ensemble = Ensemble::real;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("wigner samples are exactly hermitian and reproducible") {
    const WignerConfig c = small_config(40, 5, 2, 99);
    const MatrixC w = sample_wigner(c, 3);
    CHECK(hermitian_defect(w) == 0.0);
    CHECK(w == sample_wigner(c, 3));
    CHECK(!(w == sample_wigner(c, 4)));

    WignerConfig real_c = c;
    real_c.ensemble = Ensemble::real;
    const MatrixC wr = sample_wigner(real_c, 0);
    for (int i = 0; i < wr.rows(); ++i)
        for (int j = 0; j < wr.cols(); ++j) CHECK(wr(i, j).imag() == 0.0);

    WignerConfig rad = real_c;
    rad.entry_law = EntryLaw::rademacher;
    const MatrixC wd = sample_wigner(rad, 0);
    const double unit = 1.0 / std::sqrt(40.0);
    for (int i = 0; i < wd.rows(); ++i)
        for (int j = 0; j < wd.cols(); ++j)
            CHECK(std::abs(std::abs(wd(i, j).real()) - unit) < 1e-15);
}

TEST_CASE("trace moments approach the semicircle values") {
    WignerConfig c = small_config(300, 10, 60, 2024);
    const TraceMoments t = wigner_trace_means(c);
    CHECK(std::abs(t.second - 1.0) < 0.05);
    CHECK(std::abs(t.fourth - 2.0) < 0.2);

    c.ensemble = Ensemble::real;
    c.entry_law = EntryLaw::rademacher;
    const TraceMoments tr = wigner_trace_means(c);
    CHECK(std::abs(tr.second - 1.0) < 0.05);
    CHECK(std::abs(tr.fourth - 2.0) < 0.2);
}

TEST_CASE("projector basics") {
    const MatrixC j = projector(4, 2);
    CHECK(j(0, 0) == cplx(1.0));
    CHECK(j(1, 1) == cplx(1.0));
    CHECK(j(2, 2) == cplx(0.0));
    CHECK(j(3, 3) == cplx(0.0));
    CHECK(matmul(j, j, Exec::serial) == j);
    CHECK(trace(j) == cplx(2.0));
    CHECK_THROWS_AS(projector(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(projector(4, 0), std::invalid_argument);
}

TEST_CASE("t_operator zeroes the diagonal blocks") {
    MatrixC ones(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones(i, j) = 1.0;
    const MatrixC t = t_operator(ones, 1);
    CHECK(t(0, 0) == cplx(0.0));
    CHECK(t(1, 1) == cplx(0.0));
    CHECK(t(0, 1) == cplx(1.0));
    CHECK(t(1, 0) == cplx(1.0));

    ncmi::testing::Draw d(71);
    MatrixC m(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = i; j < 10; ++j) {
            m(i, j) = d.disc(0.0, 1.0);
            m(j, i) = std::conj(m(i, j));
        }
    const MatrixC tm = t_operator(m, 3);
    CHECK(t_operator(tm, 3) == tm);
    CHECK(hermitian_defect(tm) == 0.0);
    // Matches j m (1-j) + (1-j) m j assembled from full products.
    const MatrixC j = projector(10, 3);
    MatrixC cj(10, 10);
    for (int i = 0; i < 10; ++i) cj(i, i) = 1.0 - j(i, i);
    const MatrixC assembled =
        matmul(matmul(j, m, Exec::serial), cj, Exec::serial) +
        matmul(matmul(cj, m, Exec::serial), j, Exec::serial);
    CHECK(assembled == tm);
}

TEST_CASE("partial trace normalization") {
    CHECK(partial_trace(MatrixC::identity(7), 3) == cplx(1.0));
    MatrixC diag(4, 4);
    diag(0, 0) = 1.0;
    diag(1, 1) = 2.0;
    diag(2, 2) = 3.0;
    diag(3, 3) = 4.0;
    CHECK(partial_trace(diag, 2) == cplx(1.5));
    MatrixC e11(4, 4);
    e11(0, 0) = 1.0;
    CHECK(partial_trace(e11, 2) == cplx(0.5));
    CHECK_THROWS_AS(partial_trace(e11, 0), std::invalid_argument);
}

TEST_CASE("spec builders validate and merge") {
    CHECK_THROWS_AS(PolySpec::t_power(0), std::invalid_argument);
    CHECK_THROWS_AS(PolySpec::span(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(PolySpec::general_word(0, 1, 1, 1), std::invalid_argument);
    const PolySpec sym = PolySpec::general_word(1, 1, 1, 1);
    CHECK(sym.terms().size() == 1);
    CHECK(sym.terms().front().coeff == cplx(2.0));
    const PolySpec asym = PolySpec::general_word(1, 2, 1, 1);
    CHECK(asym.terms().size() == 2);
    CHECK(sym.uses_a());
    CHECK(sym.uses_b());
    CHECK(PolySpec::t_power(2).uses_b() == false);
}

TEST_CASE("spec predictions come from the closed forms") {
    const PolySpec t1 = PolySpec::t_power(1);
    CHECK(t1.prediction(1) == cplx(0.0));
    CHECK(t1.prediction(2) == cplx(1.0));
    CHECK(t1.prediction(4) == cplx(1.0));
    const PolySpec t3 = PolySpec::t_power(3);
    CHECK(t3.prediction(2) == cplx(5.0));
    const PolySpec sp = PolySpec::span(cplx(0.0, 2.0), 1);
    CHECK(sp.prediction(2) == cplx(4.0));
    const PolySpec gw = PolySpec::general_word(1, 1, 1, 1);
    CHECK(std::abs(gw.prediction(1) - cplx(2.0)) < 1e-12);
    CHECK(std::abs(gw.prediction(2) - cplx(8.0)) < 1e-12);
}

TEST_CASE("panel evaluation matches the full-matrix reference") {
    const WignerConfig c = small_config(24, 6, 1, 5);
    const MatrixC a = sample_wigner(c, 0);
    const MatrixC b = sample_wigner(c, 1);

    const PolySpec specs[] = {
        PolySpec::t_power(1),
        PolySpec::t_power(2),
        PolySpec::span(cplx(1.0, 0.5), 1),
        PolySpec::span(cplx(0.3, -0.4), 2),
        PolySpec::general_word(1, 2, 1, 1),
        PolySpec("corner", {{cplx(1.0), {ProjFactor{false}, TFactor{{cplx(1.0)}}, ProjFactor{true}}}},
                 [](int) { return cplx(0.0); }),
    };
    for (const PolySpec& spec : specs) {
        const std::vector<cplx> panel = psi_sample_moments(spec, 3, a, b, c.n0);
        for (int k = 1; k <= 3; ++k) {
            const cplx ref = psi_reference_moment(spec, k, a, b, c.n0);
            CHECK(std::abs(panel[static_cast<std::size_t>(k - 1)] - ref) < 1e-10);
        }
    }
}

TEST_CASE("per-sample moments of hermitian words are essentially real") {
    const WignerConfig c = small_config(60, 8, 1, 17);
    const MatrixC a = sample_wigner(c, 0);
    const MatrixC b = sample_wigner(c, 1);
    for (const PolySpec& spec :
         {PolySpec::span(cplx(0.6, 0.8), 1), PolySpec::general_word(1, 1, 1, 1)}) {
        const std::vector<cplx> psi = psi_sample_moments(spec, 4, a, b, c.n0);
        for (const cplx& v : psi)
            CHECK(std::abs(v.imag()) <= 1e-10 * std::max(1.0, std::abs(v.real())));
    }
}

TEST_CASE("estimates are bit-identical across execution policies") {
    const WignerConfig c = small_config(40, 8, 12, 31);
    const PolySpec spec = PolySpec::span(1.0, 1);
    const auto serial = mc_moment_estimates(spec, 3, c, Exec::serial);
    const auto parallel = mc_moment_estimates(spec, 3, c, Exec::openmp);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].mean == parallel[i].mean);
        CHECK(serial[i].std_error == parallel[i].std_error);
        CHECK(serial[i].abs_gap == parallel[i].abs_gap);
    }
}

TEST_CASE("an estimate depends only on config, spec and k") {
    const WignerConfig c = small_config(40, 8, 10, 77);
    const PolySpec spec = PolySpec::t_power(1);
    const MCEstimate alone = mc_moment_estimate(spec, 2, c);
    const MCEstimate within = mc_moment_estimates(spec, 4, c)[1];
    CHECK(alone.mean == within.mean);
    CHECK(alone.std_error == within.std_error);
}

TEST_CASE("block operator estimates shrink toward the limit as n grows") {
    const PolySpec spec = PolySpec::t_power(1);
    double gap200 = 0.0, gap800 = 0.0, se200 = 0.0, se800 = 0.0;
    for (int n : {200, 800}) {
        WignerConfig c = small_config(n, 30, 150, 2718);
        const MCEstimate e = mc_moment_estimate(spec, 2, c);
        if (n == 200) {
            gap200 = e.abs_gap;
            se200 = e.std_error;
        } else {
            gap800 = e.abs_gap;
            se800 = e.std_error;
        }
    }
    CHECK(gap800 <= gap200 + 2.0 * (se200 + se800));
}

TEST_CASE("psi evaluation input validation") {
    const WignerConfig c = small_config(20, 4, 1, 1);
    const MatrixC a = sample_wigner(c, 0);
    CHECK_THROWS_AS(psi_sample_moments(PolySpec::span(1.0, 1), 2, a, MatrixC(), c.n0),
                    std::invalid_argument);
    CHECK_THROWS_AS(psi_sample_moments(PolySpec::t_power(1), 0, a, MatrixC(), c.n0),
                    std::invalid_argument);
    CHECK_THROWS_AS(psi_sample_moments(PolySpec::t_power(1), 2, a, MatrixC(), 0),
                    std::invalid_argument);
}
