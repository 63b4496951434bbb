#include "gwave/cli.hpp"

#include "gwave/quadrature.hpp"
#include "gwave/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace gwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

void validate(const AnalysisConfig& cfg) {
    if (cfg.scale_min < 1) throw std::invalid_argument("scale_min must be >= 1");
    if (cfg.scale_min > cfg.scale_max)
        throw std::invalid_argument("scale_min must not exceed scale_max");
    if (cfg.wavelet_order < 2) throw std::invalid_argument("wavelet order must be >= 2");
    if (cfg.wavelet_order > kMaxDerivativeOrder)
        throw std::invalid_argument("wavelet order must be <= " +
                                    std::to_string(kMaxDerivativeOrder));
    if (cfg.smooth_window < 1 || cfg.smooth_window % 2 == 0)
        throw std::invalid_argument("smooth window must be odd and >= 1");
    if (!(cfg.peak_threshold > 0.0) || !(cfg.peak_threshold < 1.0))
        throw std::invalid_argument("peak threshold must be in (0, 1)");
    if (cfg.wavelet_family == WaveletFamily::Logistic && cfg.wavelet_order != 2)
        throw std::invalid_argument("logistic wavelet is only available at order 2");
}

MotherWavelet config_wavelet(const AnalysisConfig& cfg) {
    return cfg.wavelet_family == WaveletFamily::Gompertz ? mother_gompertz(cfg.wavelet_order)
                                                         : mother_logistic2();
}

void write_detections_csv(const std::string& path, const std::vector<WaveDetection>& dets,
                          const TimeSeries& series) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "a,b,date,index,y_max,boundary_flag\n";
    for (const WaveDetection& d : dets) {
        const auto day = series.date_of_index(static_cast<long>(d.b));
        out << fmt("%.17g", d.a) << ',' << fmt("%.17g", d.b) << ','
            << (day ? format_date(*day) : "") << ',' << fmt("%.17g", d.index_value) << ','
            << fmt("%.17g", d.y_max_estimate) << ',' << (d.boundary_flag ? 1 : 0) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void print_detection(std::ostream& out, const WaveDetection& d, const TimeSeries& series) {
    const auto day = series.date_of_index(static_cast<long>(d.b));
    out << "  a=" << d.a << " b=" << d.b;
    if (day) out << " (" << format_date(*day) << ")";
    out << " Index=" << fmt("%.1f", d.index_value)
        << " y_max=" << fmt("%.0f", d.y_max_estimate);
    if (d.boundary_flag) out << " [boundary]";
    out << '\n';
}

struct Pipeline {
    TimeSeries raw;
    TimeSeries smoothed;
    DifferencedSeries diffs;
};

Pipeline run_pipeline(const AnalysisConfig& cfg, std::ostream& out) {
    std::vector<std::string> warnings;
    Pipeline p;
    p.raw = load_series(cfg.input, &warnings);
    for (const std::string& w : warnings) out << "warning: " << w << '\n';
    p.smoothed = prepare_pipeline_input(p.raw, cfg.smooth_window);
    p.diffs = second_differences(p.smoothed);
    return p;
}

}  // namespace

TimeSeries synth_series(const SyntheticSpec& spec) {
    if (spec.components.empty())
        throw std::invalid_argument("synthetic spec needs at least one component");
    if (spec.domain_hi - spec.domain_lo + 1 < 3)
        throw std::invalid_argument("synthetic domain must cover at least 3 samples");
    for (const auto& c : spec.components)
        if (!(c.x_max > 0.0) || !(c.a > 0.0))
            throw std::invalid_argument("synthetic components need x_max > 0 and a > 0");
    TimeSeries ts;
    ts.start_index = spec.domain_lo;
    ts.label = "synthetic";
    ts.values.reserve(spec.domain_hi - spec.domain_lo + 1);
    for (long n = spec.domain_lo; n <= spec.domain_hi; ++n) {
        double y = 0.0;
        for (const auto& c : spec.components)
            y += c.x_max * std::exp(-std::exp(-(static_cast<double>(n) - c.b) / c.a));
        ts.values.push_back(y);
    }
    return ts;
}

int run_synth(const SyntheticSpec& spec, const std::string& out_path, std::ostream& out) {
    const TimeSeries ts = synth_series(spec);
    write_plain_csv(out_path, ts);
    out << "wrote " << ts.size() << " samples to " << out_path << '\n';
    return 0;
}

int run_analyze(const AnalysisConfig& cfg, std::ostream& out) {
    validate(cfg);
    const Pipeline p = run_pipeline(cfg, out);
    const MotherWavelet w = config_wavelet(cfg);
    const Scalogram sc =
        scalogram(p.diffs, w, integer_scales(cfg.scale_min, cfg.scale_max));
    const std::vector<WaveDetection> dets =
        detect_peaks(sc, cfg.min_separation, cfg.peak_threshold);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);
    {
        std::ofstream csv(fs::path(cfg.output_dir) / "scalogram.csv");
        if (!csv) throw std::runtime_error("cannot write scalogram.csv");
        write_scalogram_csv(csv, sc);
    }
    write_scalogram_ppm((fs::path(cfg.output_dir) / "scalogram.ppm").string(), sc);
    write_detections_csv((fs::path(cfg.output_dir) / "detections.csv").string(), dets,
                         p.smoothed);

    out << "series '" << p.raw.label << "': " << p.raw.size() << " samples, "
        << p.smoothed.size() << " after smoothing (window " << cfg.smooth_window << ")\n";
    out << "scalogram: scales " << cfg.scale_min << ".." << cfg.scale_max << ", shifts "
        << p.diffs.first_shift() << ".." << p.diffs.last_shift() << '\n';
    if (dets.empty()) {
        out << "no waves found\n";
    } else {
        out << dets.size() << " wave(s) detected (threshold " << cfg.peak_threshold
            << ", min separation " << cfg.min_separation << "):\n";
        for (const WaveDetection& d : dets) print_detection(out, d, p.smoothed);
    }
    out << "outputs in " << cfg.output_dir << ": scalogram.csv, scalogram.ppm, detections.csv\n";
    return 0;
}

int run_compare(const AnalysisConfig& cfg, std::ostream& out) {
    validate(cfg);
    const Pipeline p = run_pipeline(cfg, out);
    const WaveletComparison cmp =
        compare_wavelets(p.diffs, integer_scales(cfg.scale_min, cfg.scale_max));
    out << "best Index per family (unit-norm wavelets, directly comparable):\n";
    out << "  gompertz:";
    print_detection(out, cmp.gompertz_peak, p.smoothed);
    out << "  logistic:";
    print_detection(out, cmp.logistic_peak, p.smoothed);
    const bool gompertz_wins = cmp.gompertz_peak.index_value > cmp.logistic_peak.index_value;
    out << "better fit: " << (gompertz_wins ? "gompertz" : "logistic") << " (Index "
        << fmt("%.1f", gompertz_wins ? cmp.gompertz_peak.index_value
                                     : cmp.logistic_peak.index_value)
        << " vs " << fmt("%.1f", gompertz_wins ? cmp.logistic_peak.index_value
                                               : cmp.gompertz_peak.index_value)
        << ")\n";
    return 0;
}

namespace {

struct VerifyRow {
    std::string name;
    double observed;
    double tolerance;
};

void add_row(std::vector<VerifyRow>& rows, std::string name, double observed, double tol) {
    rows.push_back({std::move(name), observed, tol});
}

}  // namespace

int run_verify(int max_order, std::ostream& out) {
    if (max_order < 2 || max_order > 8)
        throw std::invalid_argument("verify: max order must be in [2, 8]");
    std::vector<VerifyRow> rows;

    const GompertzIntegralFacts facts = gompertz_integral_facts();
    add_row(rows, "int x'' dt = 0 (abs)", std::abs(facts.mean), 1e-10);
    add_row(rows, "int |x''| dt = 2/e", std::abs(facts.abs_integral - 2.0 / std::exp(1.0)) /
                                            (2.0 / std::exp(1.0)), 1e-8);
    add_row(rows, "int (x'')^2 dt = 1/8", std::abs(facts.sq_integral - 0.125) / 0.125, 1e-8);

    const GompertzParams std_params = standard_gompertz();
    for (int n = 1; n <= 6; ++n) {
        const Rational b2n = bernoulli(2 * n);
        const Rational abs_b2n = b2n < 0 ? Rational(-b2n) : b2n;
        const double closed =
            to_double(abs_b2n * Rational((BigInt(1) << (2 * n)) - 1) / Rational(2 * n));
        const double quad = integrate(
            [&std_params, n](double t) {
                const double d = gompertz_derivative(std_params, n, t);
                return d * d;
            },
            -8.0, 60.0);
        add_row(rows, "int (x^(" + std::to_string(n) + "))^2 = |B_2n|(2^2n-1)/2n",
                std::abs(quad - closed) / closed, 1e-8);
    }

    for (int n = 2; n <= max_order; ++n) {
        const MotherWavelet w = mother_gompertz(n);
        const double mean = integrate([&w](double t) { return w(t); }, w.support_lo(),
                                      w.support_hi());
        const double norm_sq = integrate([&w](double t) { return w(t) * w(t); },
                                         w.support_lo(), w.support_hi());
        add_row(rows, "int psi_" + std::to_string(n) + " dt = 0 (abs)", std::abs(mean), 1e-8);
        add_row(rows, "||psi_" + std::to_string(n) + "|| = 1",
                std::abs(std::sqrt(norm_sq) - 1.0), 1e-8);
    }

    for (int n = 2; n <= max_order; ++n) {
        const AdmissibilityResult adm = admissibility_constant(n);
        std::string name = "C_psi_" + std::to_string(n) + " quadrature vs closed form";
        if (n == 2)
            name += " (= 56 zeta(3)/pi^2 = " + fmt("%.4f", 56.0 * zeta(3) / (kPi * kPi)) + ")";
        add_row(rows, name, adm.relative_gap, 1e-6);
    }

    bool all_pass = true;
    for (const VerifyRow& r : rows) {
        const bool pass = r.observed < r.tolerance;
        all_pass = all_pass && pass;
        out << (pass ? "[PASS] " : "[FAIL] ") << r.name << "  err=" << fmt("%.3e", r.observed)
            << " tol=" << fmt("%.0e", r.tolerance) << '\n';
    }
    out << (all_pass ? "verify: all identities hold\n" : "verify: FAILURES present\n");
    return all_pass ? 0 : 1;
}

void write_scalogram_ppm(const std::string& path, const Scalogram& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    const double lo = *std::min_element(s.index_values.begin(), s.index_values.end());
    const double hi = *std::max_element(s.index_values.begin(), s.index_values.end());
    const double span = hi > lo ? hi - lo : 1.0;
    out << "P6\n" << s.cols() << ' ' << s.rows() << "\n255\n";
    // Dark blue -> cyan -> yellow heat ramp; rows written so the largest
    // scale ends up at the top of the image.
    for (long i = s.rows() - 1; i >= 0; --i) {
        for (long j = 0; j < s.cols(); ++j) {
            const double v = (s.at(i, j) - lo) / span;
            unsigned char rgb[3];
            rgb[0] = static_cast<unsigned char>(255.0 * std::clamp(2.0 * v - 1.0, 0.0, 1.0));
            rgb[1] = static_cast<unsigned char>(255.0 * std::clamp(2.0 * v, 0.0, 1.0) *
                                                (0.2 + 0.8 * v));
            rgb[2] = static_cast<unsigned char>(255.0 * std::clamp(1.0 - 1.6 * (v - 0.5) *
                                                                              (v - 0.5),
                                                                   0.2, 1.0) *
                                                (1.0 - 0.7 * v));
            out.write(reinterpret_cast<const char*>(rgb), 3);
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gwave
