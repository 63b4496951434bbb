#pragma once

#include "gwave/wavelets.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gwave {

/// Daily (or unit-step) cumulative series. Position i of values carries
/// sample index start_index + i; when start_date is set it also carries
/// the calendar date start_date + i days.
struct TimeSeries {
    long start_index = 0;
    std::vector<double> values;
    std::string label;
    std::optional<std::chrono::sys_days> start_date;

    long size() const { return static_cast<long>(values.size()); }
    long last_index() const { return start_index + size() - 1; }
    std::optional<std::chrono::sys_days> date_of_index(long n) const;
};

/// First and central second differences of a TimeSeries. Both arrays
/// start at sample index index_offset (= start_index + 1); second has
/// the original length minus 2.
struct DifferencedSeries {
    std::vector<double> first;   ///< y_n - y_(n-1)
    std::vector<double> second;  ///< y_(n+1) - 2 y_n + y_(n-1)
    long index_offset = 0;

    long first_shift() const { return index_offset; }
    long last_shift() const { return index_offset + static_cast<long>(second.size()) - 1; }
};

DifferencedSeries second_differences(const TimeSeries& ts);

/// Centered moving average; window must be odd and >= 1. Output is
/// shorter by window-1 samples and its start index (and date anchor)
/// advances by (window-1)/2.
TimeSeries moving_average(const TimeSeries& ts, int window);

/// Discrete CWT coefficient Index(a, b) = sum_n D2y_n * psi^(a,b)(n),
/// summed over the sample indices of d that fall inside the child
/// wavelet's effective support. No step weighting is applied.
double index_at(const DifferencedSeries& d, const ChildWavelet& w);

/// Grid of Index values: one row per scale, one column per integer
/// shift in the data range of the differenced series.
struct Scalogram {
    std::vector<double> scales;
    std::vector<long> shifts;
    std::vector<double> index_values;  ///< row-major, |scales| x |shifts|
    MotherWavelet wavelet;

    long rows() const { return static_cast<long>(scales.size()); }
    long cols() const { return static_cast<long>(shifts.size()); }
    double at(long i, long j) const { return index_values[i * cols() + j]; }
};

/// Scalogram over all integer shifts in the data range. Rows (scales)
/// are computed in parallel with OpenMP; each cell is evaluated exactly
/// as in scalogram_serial, so the two agree bit for bit.
Scalogram scalogram(const DifferencedSeries& d, const MotherWavelet& w,
                    const std::vector<double>& scales);

/// Single-threaded reference implementation.
Scalogram scalogram_serial(const DifferencedSeries& d, const MotherWavelet& w,
                           const std::vector<double>& scales);

/// Integer scale grid lo..hi inclusive.
std::vector<double> integer_scales(int lo, int hi);

/// Log-spaced scale grid: count scales from lo to hi inclusive.
std::vector<double> log_spaced_scales(double lo, double hi, int count);

/// A scalogram peak. y_max_estimate is 2*sqrt(2)*a^(3/2)*index_value,
/// the saturation level implied by an order-2 Gompertz wave matched at
/// (a, b). boundary_flag marks peaks within 2a of either data edge,
/// where a partially observed wave biases the Index downward.
struct WaveDetection {
    double a = 0.0;
    double b = 0.0;
    double index_value = 0.0;
    double y_max_estimate = 0.0;
    bool boundary_flag = false;
};

/// Strict local maxima of the scalogram over the 8-neighborhood, kept if
/// Index >= threshold_fraction * global max, then greedily deduplicated
/// so retained peaks are at least min_separation apart in shift.
std::vector<WaveDetection> detect_peaks(const Scalogram& s, int min_separation = 10,
                                        double threshold_fraction = 0.2);

/// Best (global maximum) cell of a scalogram as a detection.
WaveDetection best_cell(const Scalogram& s);

/// Best peak under the order-2 Gompertz wavelet and under the logistic
/// comparison wavelet; both have unit norm, so the Index values compare
/// directly.
struct WaveletComparison {
    WaveDetection gompertz_peak;
    WaveDetection logistic_peak;
};

WaveletComparison compare_wavelets(const DifferencedSeries& d, const std::vector<double>& scales);

/// CSV matrix export: header row of shifts, first column of scales.
void write_scalogram_csv(std::ostream& os, const Scalogram& s);

}  // namespace gwave
