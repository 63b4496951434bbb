#pragma once

#include "gwave/transform.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace gwave {

enum class SeriesFormat { Plain, Owid };

/// Where and how to read a series.
///
/// Plain: two columns `date,value` (header optional); the first column
/// may be an ISO-8601 date or a plain integer sample index.
/// Owid: header required; columns `date`, `location`, `total_cases`
/// addressed by name, all others ignored; location must be set.
struct SeriesSource {
    std::string path;
    SeriesFormat format = SeriesFormat::Plain;
    std::optional<std::string> location;
    std::optional<std::chrono::sys_days> from;
    std::optional<std::chrono::sys_days> to;
    /// Decreases of a cumulative series beyond this are reported as
    /// data-quality warnings (never errors).
    double monotonicity_tolerance = 0.0;
};

std::chrono::sys_days parse_date(const std::string& iso);
std::string format_date(std::chrono::sys_days day);

/// Load one value per calendar day (or per integer index), ordered,
/// gaps forward-filled with the previous cumulative value. Warnings
/// (e.g. decreasing cumulative values) are appended to *warnings when
/// given.
TimeSeries load_series(const SeriesSource& src, std::vector<std::string>* warnings = nullptr);

/// Smooth with a centered moving average (default window 7). The index
/// shift is carried by the returned series, so detected shifts map back
/// to calendar dates through TimeSeries::date_of_index.
TimeSeries prepare_pipeline_input(const TimeSeries& ts, int smooth_window);

/// Write in Plain format: ISO dates when the series is date-anchored,
/// integer indices otherwise. Reloading yields identical values.
void write_plain_csv(const std::string& path, const TimeSeries& ts);

}  // namespace gwave
