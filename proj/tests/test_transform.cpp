#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwave/cli.hpp"
#include "gwave/transform.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace gwave;

namespace {

TimeSeries series_of(std::vector<double> values, long start_index = 0) {
    TimeSeries ts;
    ts.start_index = start_index;
    ts.values = std::move(values);
    return ts;
}

TimeSeries gompertz_wave(double x_max, double a, double b, long lo, long hi) {
    SyntheticSpec spec;
    spec.components = {{x_max, a, b}};
    spec.domain_lo = lo;
    spec.domain_hi = hi;
    return synth_series(spec);
}

TimeSeries two_wave_signal() {
    SyntheticSpec spec;
    spec.components = {{100000.0, 8.0, 25.0}, {200000.0, 20.0, 200.0}};
    spec.domain_lo = 0;
    spec.domain_hi = 350;
    return synth_series(spec);
}

constexpr double kTwoSqrtTwo = 2.8284271247461903;

}  // namespace

TEST_CASE("second differences of simple sequences") {
    const DifferencedSeries d = second_differences(series_of({0, 1, 4, 9}));
    CHECK(d.first == std::vector<double>{1, 3, 5});
    CHECK(d.second == std::vector<double>{2, 2});
    CHECK(d.index_offset == 1);
    CHECK(d.first_shift() == 1);
    CHECK(d.last_shift() == 2);

    const DifferencedSeries flat = second_differences(series_of({5, 5, 5, 5, 5}, 100));
    CHECK(flat.index_offset == 101);
    for (double v : flat.second) CHECK(v == 0.0);

    CHECK_THROWS_AS(second_differences(series_of({1, 2})), std::domain_error);
}

TEST_CASE("first differences reconstruct an integer-valued series exactly") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> step(0, 5000);
    std::vector<double> values{12034.0};
    for (int i = 0; i < 200; ++i) values.push_back(values.back() + step(rng));
    const DifferencedSeries d = second_differences(series_of(values));
    double acc = values[0];
    for (std::size_t i = 0; i < d.first.size(); ++i) {
        acc += d.first[i];
        CHECK(acc == values[i + 1]);
    }
}

TEST_CASE("second differences track the second derivative of a sampled wave") {
    // y(n) = 100000 exp(-exp(-(n-25)/8)); compare to the closed form.
    const TimeSeries ts = gompertz_wave(100000.0, 8.0, 25.0, 0, 80);
    const DifferencedSeries d = second_differences(ts);
    const GompertzParams p(100000.0, 1.0 / 8.0, 25.0);
    double max_second = 0.0;
    for (double t = 0.0; t <= 80.0; t += 0.25)
        max_second = std::max(max_second, std::abs(gompertz_derivative(p, 2, t)));
    for (long n = 5; n <= 60; ++n) {
        const double dd = d.second[n - d.index_offset];
        CHECK(std::abs(dd - gompertz_derivative(p, 2, double(n))) < 0.01 * max_second);
    }
}

TEST_CASE("moving average basics") {
    const TimeSeries ts = series_of({1, 2, 3, 4, 5});

    const TimeSeries same = moving_average(ts, 1);
    CHECK(same.values == ts.values);
    CHECK(same.start_index == ts.start_index);

    const TimeSeries smoothed = moving_average(ts, 3);
    CHECK(smoothed.values == std::vector<double>{2, 3, 4});
    CHECK(smoothed.start_index == 1);

    CHECK_THROWS_AS(moving_average(ts, 2), std::domain_error);
    CHECK_THROWS_AS(moving_average(ts, 0), std::domain_error);
    CHECK_THROWS_AS(moving_average(ts, -3), std::domain_error);
    CHECK_THROWS_AS(moving_average(ts, 7), std::domain_error);  // window > length
}

TEST_CASE("moving average suppresses alternating noise on a ramp") {
    const double eps = 1.0;
    std::vector<double> values;
    for (int i = 0; i < 100; ++i) values.push_back(2.5 * i + (i % 2 == 0 ? eps : -eps));
    const TimeSeries smoothed = moving_average(series_of(values), 7);
    for (std::size_t i = 0; i < smoothed.values.size(); ++i) {
        const double ramp = 2.5 * (double(i) + 3.0);
        CHECK(std::abs(smoothed.values[i] - ramp) < eps / 3.0);
    }
}

TEST_CASE("moving average advances the date anchor") {
    TimeSeries ts = series_of({1, 2, 3, 4, 5, 6, 7, 8});
    ts.start_date = std::chrono::sys_days{std::chrono::year{2020} / 3 / 12};
    const TimeSeries smoothed = moving_average(ts, 7);
    CHECK(smoothed.start_index == 3);
    CHECK(*smoothed.date_of_index(3) == std::chrono::sys_days{std::chrono::year{2020} / 3 / 15});
}

TEST_CASE("index_at: zero input, matched wave, disjoint support") {
    const MotherWavelet psi2 = mother_gompertz(2);
    const DifferencedSeries zeros = second_differences(series_of(std::vector<double>(300, 7.0)));
    CHECK(index_at(zeros, ChildWavelet(psi2, 8.0, 25.0)) == 0.0);

    const DifferencedSeries d = second_differences(two_wave_signal());
    const double matched = index_at(d, ChildWavelet(psi2, 8.0, 25.0));
    CHECK(matched == doctest::Approx(1551.0).epsilon(0.01));
    CHECK(std::abs(index_at(d, ChildWavelet(psi2, 8.0, 100.0))) < 0.01 * matched);

    // Support entirely left of the data: no terms at all.
    CHECK(index_at(d, ChildWavelet(psi2, 1.0, -100.0)) == 0.0);
}

TEST_CASE("scalogram validation and structure") {
    const DifferencedSeries d = second_differences(series_of({0, 1, 4, 9, 16, 25}));
    const MotherWavelet psi2 = mother_gompertz(2);
    CHECK_THROWS_AS(scalogram(d, psi2, {}), std::domain_error);
    CHECK_THROWS_AS(scalogram(d, psi2, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(scalogram(d, psi2, {2.0, 1.0}), std::domain_error);

    const Scalogram s = scalogram(d, psi2, integer_scales(1, 3));
    CHECK(s.rows() == 3);
    CHECK(s.shifts == std::vector<long>{1, 2, 3, 4});
    CHECK(s.index_values.size() == 12);
    for (double v : s.index_values) CHECK(std::isfinite(v));
}

TEST_CASE("parallel scalogram equals the serial reference bit for bit") {
    const DifferencedSeries d = second_differences(two_wave_signal());
    const std::vector<double> scales = integer_scales(1, 48);
    const Scalogram par = scalogram(d, mother_gompertz(2), scales);
    const Scalogram ser = scalogram_serial(d, mother_gompertz(2), scales);
    REQUIRE(par.index_values.size() == ser.index_values.size());
    for (std::size_t i = 0; i < par.index_values.size(); ++i)
        CHECK(par.index_values[i] == ser.index_values[i]);
}

TEST_CASE("all-zero input gives an all-zero scalogram and no detections") {
    const DifferencedSeries d = second_differences(series_of(std::vector<double>(200, 0.0)));
    const Scalogram s = scalogram(d, mother_gompertz(2), integer_scales(1, 16));
    for (double v : s.index_values) CHECK(v == 0.0);
    CHECK(detect_peaks(s).empty());
}

TEST_CASE("Index is linear in the input series") {
    const TimeSeries base = two_wave_signal();
    const std::vector<double> scales = integer_scales(2, 24);
    const Scalogram s0 = scalogram(second_differences(base), mother_gompertz(2), scales);

    TimeSeries doubled = base;
    for (double& v : doubled.values) v *= 4.0;  // exact in binary floating point
    const Scalogram s4 = scalogram(second_differences(doubled), mother_gompertz(2), scales);
    for (std::size_t i = 0; i < s0.index_values.size(); ++i)
        CHECK(s4.index_values[i] == 4.0 * s0.index_values[i]);

    TimeSeries scaled = base;
    for (double& v : scaled.values) v *= 3.7;
    const Scalogram s37 = scalogram(second_differences(scaled), mother_gompertz(2), scales);
    // Generic factors round, so allow slack scaled by the largest cell.
    double peak = 0.0;
    for (double v : s0.index_values) peak = std::max(peak, std::abs(v));
    for (std::size_t i = 0; i < s0.index_values.size(); ++i)
        CHECK(std::abs(s37.index_values[i] - 3.7 * s0.index_values[i]) < 1e-9 * peak);
}

TEST_CASE("integer translation shifts the scalogram along the shift axis") {
    const TimeSeries wave = gompertz_wave(50000.0, 6.0, 60.0, 0, 160);
    const long k = 10;
    TimeSeries shifted;
    shifted.start_index = 0;
    shifted.values.assign(k, wave.values.front());
    shifted.values.insert(shifted.values.end(), wave.values.begin(), wave.values.end());

    const std::vector<double> scales = integer_scales(2, 12);
    const Scalogram sa = scalogram(second_differences(wave), mother_gompertz(2), scales);
    const Scalogram sb = scalogram(second_differences(shifted), mother_gompertz(2), scales);

    for (long i = 0; i < sa.rows(); ++i) {
        const double a = sa.scales[i];
        for (long j = 0; j < sa.cols(); ++j) {
            const long b = sa.shifts[j];
            // Skip cells whose wavelet support leaves either data window.
            if (b - 8.0 * a < k + 1 || b + 60.0 * a > sa.shifts.back()) continue;
            const long jb = b + k - sb.shifts.front();
            CHECK(sb.at(i, jb) == sa.at(i, j));
        }
    }
}

TEST_CASE("log-spaced scale grids") {
    const std::vector<double> scales = log_spaced_scales(1.0, 64.0, 13);
    CHECK(scales.size() == 13);
    CHECK(scales.front() == 1.0);
    CHECK(scales.back() == 64.0);
    for (std::size_t i = 1; i < scales.size(); ++i)
        CHECK(scales[i] / scales[i - 1] == doctest::Approx(std::pow(2.0, 0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(log_spaced_scales(0.0, 8.0, 4), std::domain_error);
    CHECK_THROWS_AS(log_spaced_scales(8.0, 2.0, 4), std::domain_error);
    CHECK_THROWS_AS(log_spaced_scales(1.0, 8.0, 1), std::domain_error);

    // A log grid drives the scalogram like any other ascending grid.
    const DifferencedSeries d = second_differences(two_wave_signal());
    const Scalogram s = scalogram(d, mother_gompertz(2), scales);
    CHECK(s.rows() == 13);
    for (double v : s.index_values) CHECK(std::isfinite(v));
}

TEST_CASE("detect_peaks on the two-wave signal") {
    const Scalogram s =
        scalogram(second_differences(two_wave_signal()), mother_gompertz(2),
                  integer_scales(1, 64));
    const std::vector<WaveDetection> dets = detect_peaks(s, 10, 0.2);
    REQUIRE(dets.size() >= 2);
    // Sorted by Index, strongest first.
    CHECK(dets[0].index_value >= dets[1].index_value);
    CHECK(dets[0].a == doctest::Approx(8.0).epsilon(0.13));
    CHECK(dets[0].b == doctest::Approx(25.0).epsilon(0.05));
    CHECK(dets[1].a == doctest::Approx(20.0).epsilon(0.06));
    CHECK(dets[1].b == doctest::Approx(200.0).epsilon(0.006));
    for (const WaveDetection& det : dets)
        CHECK(det.y_max_estimate == kTwoSqrtTwo * std::pow(det.a, 1.5) * det.index_value);

    CHECK_THROWS_AS(detect_peaks(s, 10, 0.0), std::domain_error);
    CHECK_THROWS_AS(detect_peaks(s, 10, 1.0), std::domain_error);
}

TEST_CASE("single-wave saturation estimate lands within 2%") {
    const Scalogram s =
        scalogram(second_differences(gompertz_wave(50000.0, 10.0, 50.0, 0, 150)),
                  mother_gompertz(2), integer_scales(1, 64));
    const std::vector<WaveDetection> dets = detect_peaks(s, 10, 0.2);
    REQUIRE(dets.size() == 1);
    CHECK(dets[0].y_max_estimate == doctest::Approx(50000.0).epsilon(0.02));
    CHECK_FALSE(dets[0].boundary_flag);
}

TEST_CASE("detections near the data edge carry the boundary flag") {
    const Scalogram s =
        scalogram(second_differences(gompertz_wave(50000.0, 10.0, 135.0, 0, 150)),
                  mother_gompertz(2), integer_scales(1, 32));
    const std::vector<WaveDetection> dets = detect_peaks(s, 10, 0.2);
    REQUIRE(!dets.empty());
    CHECK(dets[0].boundary_flag);
}

TEST_CASE("matched filter: argmax within one grid step, Index under the ceiling") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> scale_draw(4, 32);
    std::uniform_real_distribution<double> amp(50000.0, 500000.0);
    for (int trial = 0; trial < 3; ++trial) {
        const int a_true = scale_draw(rng);
        std::uniform_int_distribution<int> shift_draw(
            static_cast<int>(3.5 * a_true), 400 - static_cast<int>(3.5 * a_true));
        const int b_true = shift_draw(rng);
        const double x_max = amp(rng);
        const Scalogram s =
            scalogram(second_differences(gompertz_wave(x_max, a_true, b_true, 0, 400)),
                      mother_gompertz(2), integer_scales(1, 64));
        const WaveDetection best = best_cell(s);
        CHECK(std::abs(best.a - a_true) <= 1.0);
        CHECK(std::abs(best.b - b_true) <= 1.0);
        const double ceiling = x_max / (kTwoSqrtTwo * std::pow(double(a_true), 1.5));
        CHECK(best.index_value <= 1.02 * ceiling);
    }
}

TEST_CASE("compare_wavelets prefers the matching family") {
    const WaveletComparison on_gompertz = compare_wavelets(
        second_differences(gompertz_wave(100000.0, 8.0, 25.0, 0, 350)), integer_scales(1, 64));
    CHECK(on_gompertz.gompertz_peak.index_value > on_gompertz.logistic_peak.index_value);

    TimeSeries logistic_wave;
    logistic_wave.start_index = 0;
    for (int n = 0; n <= 250; ++n)
        logistic_wave.values.push_back(80000.0 / (1.0 + std::exp(-(n - 100.0) / 9.0)));
    const WaveletComparison on_logistic =
        compare_wavelets(second_differences(logistic_wave), integer_scales(1, 64));
    CHECK(on_logistic.logistic_peak.index_value > on_logistic.gompertz_peak.index_value);
}

TEST_CASE("scalogram CSV round-trips through parsing") {
    const DifferencedSeries d = second_differences(series_of({0, 1, 4, 9, 16, 25, 36}));
    const Scalogram s = scalogram(d, mother_gompertz(2), integer_scales(1, 2));
    std::ostringstream os;
    write_scalogram_csv(os, s);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "a\\b,1,2,3,4,5");
    for (long i = 0; i < s.rows(); ++i) {
        std::string line;
        REQUIRE(std::getline(is, line));
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        CHECK(std::stod(cell) == s.scales[i]);
        for (long j = 0; j < s.cols(); ++j) {
            REQUIRE(std::getline(cells, cell, ','));
            CHECK(std::stod(cell) == s.at(i, j));
        }
    }
}
