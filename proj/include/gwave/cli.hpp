#pragma once

#include "gwave/ingest.hpp"
#include "gwave/transform.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace gwave {

/// Sum of Gompertz components x_max * exp(-exp(-(t-b)/a)) sampled on an
/// integer domain [domain_lo, domain_hi].
struct SyntheticSpec {
    struct Component {
        double x_max;
        double a;
        double b;
    };
    std::vector<Component> components;
    long domain_lo = 0;
    long domain_hi = 0;
};

TimeSeries synth_series(const SyntheticSpec& spec);

struct AnalysisConfig {
    SeriesSource input;
    WaveletFamily wavelet_family = WaveletFamily::Gompertz;
    int wavelet_order = 2;
    int scale_min = 1;
    int scale_max = 64;
    int smooth_window = 7;
    double peak_threshold = 0.2;
    int min_separation = 10;
    std::string output_dir = ".";
};

/// Exit codes shared by all commands: 0 success (including "no waves
/// found"), 1 verification failure, 2 input/config error (raised as
/// exceptions and mapped by the CLI driver).
int run_synth(const SyntheticSpec& spec, const std::string& out_path, std::ostream& out);
int run_analyze(const AnalysisConfig& cfg, std::ostream& out);
int run_compare(const AnalysisConfig& cfg, std::ostream& out);
int run_verify(int max_order, std::ostream& out);

/// Heat-map raster of a scalogram (binary PPM; portable, no renderer).
void write_scalogram_ppm(const std::string& path, const Scalogram& s);

}  // namespace gwave
