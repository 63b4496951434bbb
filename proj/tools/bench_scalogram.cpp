// Compares the OpenMP scalogram against the serial reference on a
// synthetic two-wave signal and reports timings plus the max deviation
// (which must be exactly zero: both paths evaluate cells identically).
#include "gwave/cli.hpp"
#include "gwave/transform.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long samples = argc > 1 ? std::atol(argv[1]) : 2000;
    int max_scale = argc > 2 ? std::atoi(argv[2]) : 64;
    int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
    if (samples < 3 || max_scale < 1 || repeats < 1) {
        std::fprintf(stderr, "usage: %s [samples] [max_scale] [repeats]\n", argv[0]);
        return 2;
    }

    gwave::SyntheticSpec spec;
    spec.components = {{100000.0, 8.0, samples * 0.1}, {200000.0, 20.0, samples * 0.6}};
    spec.domain_lo = 0;
    spec.domain_hi = samples - 1;
    const gwave::DifferencedSeries diffs =
        gwave::second_differences(gwave::synth_series(spec));
    const gwave::MotherWavelet wavelet = gwave::mother_gompertz(2);
    const std::vector<double> scales = gwave::integer_scales(1, max_scale);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("grid: %d scales x %zu shifts, %d repeat(s)\n", max_scale,
                diffs.second.size(), repeats);

    // Warm-up, and the correctness check.
    const gwave::Scalogram reference = gwave::scalogram_serial(diffs, wavelet, scales);
    const gwave::Scalogram parallel = gwave::scalogram(diffs, wavelet, scales);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < reference.index_values.size(); ++i)
        max_dev = std::max(max_dev,
                           std::abs(reference.index_values[i] - parallel.index_values[i]));
    std::printf("max |serial - parallel| = %g\n", max_dev);

    double serial_best = 1e300, parallel_best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        gwave::scalogram_serial(diffs, wavelet, scales);
        serial_best = std::min(serial_best, seconds_since(t0));
        t0 = std::chrono::steady_clock::now();
        gwave::scalogram(diffs, wavelet, scales);
        parallel_best = std::min(parallel_best, seconds_since(t0));
    }
    std::printf("serial:   %8.3f ms\n", serial_best * 1e3);
    std::printf("parallel: %8.3f ms\n", parallel_best * 1e3);
    std::printf("speedup:  %8.2fx\n", serial_best / parallel_best);
    return max_dev == 0.0 ? 0 : 1;
}
