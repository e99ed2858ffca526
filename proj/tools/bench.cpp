// Times the serial reference kernels against their OpenMP counterparts:
// the dense product, the panel pipeline inside one Monte Carlo sample, and
// a short end-to-end estimate run.

#include <chrono>
#include <cstdio>
#include <random>

#include "ncmi/linalg.hpp"
#include "ncmi/rmt.hpp"

using namespace ncmi;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds(t0));
    }
    return best;
}

void report(const char* name, double serial, double parallel, double flops) {
    std::printf("%-28s serial %8.3f ms (%7.2f GF/s)   openmp %8.3f ms (%7.2f GF/s)   speedup %.2fx\n",
                name, serial * 1e3, flops / serial * 1e-9, parallel * 1e3,
                flops / parallel * 1e-9, serial / parallel);
}

}  // namespace

int main() {
    WignerConfig config;
    config.n = 600;
    config.n0 = 30;
    config.samples = 8;
    config.seed = 1;

    const MatrixC a = sample_wigner(config, 0);
    const MatrixC b = sample_wigner(config, 1);

    {
        MatrixC out(config.n, config.n);
        const double flops = 8.0 * config.n * config.n * config.n;
        const double ts = time_best_of(3, [&] { matmul_into(out, a, b, Exec::serial); });
        const double tp = time_best_of(3, [&] { matmul_into(out, a, b, Exec::openmp); });
        report("dense product n=600", ts, tp, flops);
    }

    {
        const PolySpec spec = PolySpec::span(1.0, 1);
        const double flops = 2.0 * 8.0 * 2.0 * config.n * config.n * config.n0;
        const double ts = time_best_of(3, [&] {
            (void)psi_sample_moments(spec, 2, a, b, config.n0, Exec::serial);
        });
        const double tp = time_best_of(3, [&] {
            (void)psi_sample_moments(spec, 2, a, b, config.n0, Exec::openmp);
        });
        report("span panel sample k<=2", ts, tp, flops);
    }

    {
        const PolySpec spec = PolySpec::general_word(1, 1, 1, 1);
        const double flops = 8.0 * 6.0 * config.n * config.n * config.n0;
        const double ts = time_best_of(3, [&] {
            (void)psi_sample_moments(spec, 1, a, b, config.n0, Exec::serial);
        });
        const double tp = time_best_of(3, [&] {
            (void)psi_sample_moments(spec, 1, a, b, config.n0, Exec::openmp);
        });
        report("general panel sample k=1", ts, tp, flops);
    }

    {
        const PolySpec spec = PolySpec::span(1.0, 1);
        const double ts =
            time_best_of(1, [&] { (void)mc_moment_estimates(spec, 2, config, Exec::serial); });
        const double tp =
            time_best_of(1, [&] { (void)mc_moment_estimates(spec, 2, config, Exec::openmp); });
        std::printf("%-28s serial %8.3f ms                     openmp %8.3f ms                     speedup %.2fx\n",
                    "mc span m=8 samples", ts * 1e3, tp * 1e3, ts / tp);
    }
    return 0;
}
