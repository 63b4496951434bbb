#include "gwave/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace gwave {

namespace {

constexpr double kTwoSqrtTwo = 2.8284271247461903;  // 2*sqrt(2)

double saturation_estimate(double a, double index_value) {
    return kTwoSqrtTwo * std::pow(a, 1.5) * index_value;
}

void fill_scalogram_row(const DifferencedSeries& d, const MotherWavelet& w, double a,
                        const std::vector<long>& shifts, double* row) {
    for (std::size_t j = 0; j < shifts.size(); ++j)
        row[j] = index_at(d, ChildWavelet(w, a, static_cast<double>(shifts[j])));
}

Scalogram make_scalogram_shell(const DifferencedSeries& d, const MotherWavelet& w,
                               const std::vector<double>& scales) {
    if (scales.empty()) throw std::domain_error("scalogram: empty scale grid");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0)) throw std::domain_error("scalogram: scales must be positive");
        if (i > 0 && scales[i] <= scales[i - 1])
            throw std::domain_error("scalogram: scales must be ascending");
    }
    Scalogram s{scales, {}, {}, w};
    for (long b = d.first_shift(); b <= d.last_shift(); ++b) s.shifts.push_back(b);
    s.index_values.resize(s.rows() * s.cols());
    return s;
}

}  // namespace

std::optional<std::chrono::sys_days> TimeSeries::date_of_index(long n) const {
    if (!start_date) return std::nullopt;
    return *start_date + std::chrono::days(n - start_index);
}

DifferencedSeries second_differences(const TimeSeries& ts) {
    const long n = ts.size();
    if (n < 3)
        throw std::domain_error("second_differences: need at least 3 samples, got " +
                                std::to_string(n));
    DifferencedSeries d;
    d.index_offset = ts.start_index + 1;
    d.first.resize(n - 1);
    d.second.resize(n - 2);
    for (long i = 0; i + 1 < n; ++i) d.first[i] = ts.values[i + 1] - ts.values[i];
    for (long i = 0; i + 2 < n; ++i)
        d.second[i] = ts.values[i + 2] - 2.0 * ts.values[i + 1] + ts.values[i];
    return d;
}

TimeSeries moving_average(const TimeSeries& ts, int window) {
    if (window < 1 || window % 2 == 0)
        throw std::domain_error("moving_average: window must be odd and >= 1");
    if (ts.size() < window)
        throw std::domain_error("moving_average: series shorter than window");
    const int half = (window - 1) / 2;
    TimeSeries out;
    out.label = ts.label;
    out.start_index = ts.start_index + half;
    if (ts.start_date) out.start_date = *ts.start_date + std::chrono::days(half);
    out.values.resize(ts.size() - window + 1);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double sum = 0.0;
        for (int k = 0; k < window; ++k) sum += ts.values[i + k];
        out.values[i] = sum / window;
    }
    return out;
}

double index_at(const DifferencedSeries& d, const ChildWavelet& w) {
    const long lo = std::max(d.first_shift(), static_cast<long>(std::ceil(w.support_lo())));
    const long hi = std::min(d.last_shift(), static_cast<long>(std::floor(w.support_hi())));
    double acc = 0.0;
    for (long n = lo; n <= hi; ++n)
        acc += d.second[n - d.index_offset] * w(static_cast<double>(n));
    return acc;
}

Scalogram scalogram(const DifferencedSeries& d, const MotherWavelet& w,
                    const std::vector<double>& scales) {
    Scalogram s = make_scalogram_shell(d, w, scales);
    const long rows = s.rows();
    const long cols = s.cols();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i)
        fill_scalogram_row(d, w, s.scales[i], s.shifts, s.index_values.data() + i * cols);
    return s;
}

Scalogram scalogram_serial(const DifferencedSeries& d, const MotherWavelet& w,
                           const std::vector<double>& scales) {
    Scalogram s = make_scalogram_shell(d, w, scales);
    const long cols = s.cols();
    for (long i = 0; i < s.rows(); ++i)
        fill_scalogram_row(d, w, s.scales[i], s.shifts, s.index_values.data() + i * cols);
    return s;
}

std::vector<double> integer_scales(int lo, int hi) {
    if (lo < 1 || hi < lo) throw std::domain_error("integer_scales: need 1 <= lo <= hi");
    std::vector<double> scales;
    scales.reserve(hi - lo + 1);
    for (int a = lo; a <= hi; ++a) scales.push_back(static_cast<double>(a));
    return scales;
}

std::vector<double> log_spaced_scales(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw std::domain_error("log_spaced_scales: need 0 < lo < hi and count >= 2");
    std::vector<double> scales(count);
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) scales[i] = lo * std::exp(i * step);
    scales.back() = hi;
    return scales;
}

namespace {

WaveDetection make_detection(const Scalogram& s, long i, long j) {
    WaveDetection det;
    det.a = s.scales[i];
    det.b = static_cast<double>(s.shifts[j]);
    det.index_value = s.at(i, j);
    det.y_max_estimate = saturation_estimate(det.a, det.index_value);
    const double lo_margin = det.b - static_cast<double>(s.shifts.front());
    const double hi_margin = static_cast<double>(s.shifts.back()) - det.b;
    det.boundary_flag = lo_margin < 2.0 * det.a || hi_margin < 2.0 * det.a;
    return det;
}

bool is_strict_local_max(const Scalogram& s, long i, long j) {
    const double v = s.at(i, j);
    for (long di = -1; di <= 1; ++di) {
        for (long dj = -1; dj <= 1; ++dj) {
            if (di == 0 && dj == 0) continue;
            const long ni = i + di;
            const long nj = j + dj;
            if (ni < 0 || ni >= s.rows() || nj < 0 || nj >= s.cols()) continue;
            if (s.at(ni, nj) >= v) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<WaveDetection> detect_peaks(const Scalogram& s, int min_separation,
                                        double threshold_fraction) {
    if (!(threshold_fraction > 0.0) || !(threshold_fraction < 1.0))
        throw std::domain_error("detect_peaks: threshold_fraction must be in (0, 1)");
    const double global_max = *std::max_element(s.index_values.begin(), s.index_values.end());
    std::vector<WaveDetection> candidates;
    if (global_max <= 0.0) return candidates;
    const double floor = threshold_fraction * global_max;
    for (long i = 0; i < s.rows(); ++i)
        for (long j = 0; j < s.cols(); ++j)
            if (s.at(i, j) >= floor && is_strict_local_max(s, i, j))
                candidates.push_back(make_detection(s, i, j));
    std::sort(candidates.begin(), candidates.end(),
              [](const WaveDetection& x, const WaveDetection& y) {
                  return x.index_value > y.index_value;
              });
    std::vector<WaveDetection> kept;
    for (const WaveDetection& c : candidates) {
        const bool clashes = std::any_of(kept.begin(), kept.end(), [&](const WaveDetection& k) {
            return std::abs(k.b - c.b) < static_cast<double>(min_separation);
        });
        if (!clashes) kept.push_back(c);
    }
    return kept;
}

WaveDetection best_cell(const Scalogram& s) {
    const auto it = std::max_element(s.index_values.begin(), s.index_values.end());
    const long flat = static_cast<long>(it - s.index_values.begin());
    return make_detection(s, flat / s.cols(), flat % s.cols());
}

WaveletComparison compare_wavelets(const DifferencedSeries& d,
                                   const std::vector<double>& scales) {
    WaveletComparison cmp;
    cmp.gompertz_peak = best_cell(scalogram(d, mother_gompertz(2), scales));
    cmp.logistic_peak = best_cell(scalogram(d, mother_logistic2(), scales));
    return cmp;
}

void write_scalogram_csv(std::ostream& os, const Scalogram& s) {
    char buf[40];
    os << "a\\b";
    for (long b : s.shifts) os << ',' << b;
    os << '\n';
    for (long i = 0; i < s.rows(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", s.scales[i]);
        os << buf;
        for (long j = 0; j < s.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", s.at(i, j));
            os << ',' << buf;
        }
        os << '\n';
    }
}

}  // namespace gwave
