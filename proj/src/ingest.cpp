#include "gwave/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gwave {

namespace {

using std::chrono::sys_days;

/// Minimal CSV field splitter; handles double-quoted fields containing
/// commas, which OWID exports use for some location names.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

bool looks_like_date(const std::string& s) {
    return s.size() == 10 && s[4] == '-' && s[7] == '-';
}

bool parse_double(const std::string& s, double* out) {
    if (s.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return false;
    *out = v;
    return true;
}

bool parse_long(const std::string& s, long* out) {
    if (s.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) return false;
    *out = v;
    return true;
}

[[noreturn]] void bad_row(const std::string& path, long line_no, const std::string& why) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + why);
}

std::string path_stem(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

void check_monotonicity(const TimeSeries& ts, double tolerance,
                        std::vector<std::string>* warnings) {
    if (!warnings) return;
    std::string offenders;
    int count = 0;
    for (long i = 1; i < ts.size(); ++i) {
        if (ts.values[i] < ts.values[i - 1] - tolerance) {
            if (count < 10) {
                if (!offenders.empty()) offenders += ", ";
                const auto day = ts.date_of_index(ts.start_index + i);
                offenders += day ? format_date(*day) : std::to_string(ts.start_index + i);
            }
            ++count;
        }
    }
    if (count > 0)
        warnings->push_back("cumulative series '" + ts.label + "' decreases at " +
                            std::to_string(count) + " point(s): " + offenders +
                            (count > 10 ? ", ..." : ""));
}

/// Forward-fill a sparse date->value map into one value per day.
TimeSeries densify_dates(const std::map<sys_days, double>& by_date, const std::string& label) {
    TimeSeries ts;
    ts.label = label;
    ts.start_index = 0;
    ts.start_date = by_date.begin()->first;
    const long span =
        (by_date.rbegin()->first - by_date.begin()->first).count() + 1;
    ts.values.reserve(span);
    double last = by_date.begin()->second;
    for (long i = 0; i < span; ++i) {
        const auto it = by_date.find(*ts.start_date + std::chrono::days(i));
        if (it != by_date.end()) last = it->second;
        ts.values.push_back(last);
    }
    return ts;
}

TimeSeries load_plain(const SeriesSource& src) {
    std::ifstream in(src.path);
    if (!in) throw std::runtime_error("cannot open input file: " + src.path);

    std::map<sys_days, double> by_date;
    std::map<long, double> by_index;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv(line);
        if (fields.size() != 2) bad_row(src.path, line_no, "expected two columns");
        double value = 0.0;
        if (!parse_double(fields[1], &value)) {
            if (line_no == 1) continue;  // header row
            bad_row(src.path, line_no, "unparseable value '" + fields[1] + "'");
        }
        if (!std::isfinite(value)) bad_row(src.path, line_no, "non-finite value");
        long index = 0;
        if (looks_like_date(fields[0])) {
            sys_days day{};
            try {
                day = parse_date(fields[0]);
            } catch (const std::exception& e) {
                bad_row(src.path, line_no, e.what());
            }
            if (src.from && day < *src.from) continue;
            if (src.to && day > *src.to) continue;
            by_date[day] = value;
        } else if (parse_long(fields[0], &index)) {
            by_index[index] = value;
        } else {
            bad_row(src.path, line_no, "first column is neither a date nor an index: '" +
                                           fields[0] + "'");
        }
    }
    if (!by_date.empty() && !by_index.empty())
        throw std::runtime_error(src.path + ": mixes dated and index-keyed rows");
    const std::string label = path_stem(src.path);
    if (!by_date.empty()) return densify_dates(by_date, label);
    if (by_index.empty()) throw std::runtime_error(src.path + ": no data rows");
    if (src.from || src.to)
        throw std::invalid_argument("date range filter requires date-keyed input: " + src.path);
    TimeSeries ts;
    ts.label = label;
    ts.start_index = by_index.begin()->first;
    const long span = by_index.rbegin()->first - ts.start_index + 1;
    double last = by_index.begin()->second;
    for (long i = 0; i < span; ++i) {
        const auto it = by_index.find(ts.start_index + i);
        if (it != by_index.end()) last = it->second;
        ts.values.push_back(last);
    }
    return ts;
}

TimeSeries load_owid(const SeriesSource& src) {
    if (!src.location)
        throw std::invalid_argument("OWID format requires a location filter");
    std::ifstream in(src.path);
    if (!in) throw std::runtime_error("cannot open input file: " + src.path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(src.path + ": empty file");
    const auto header = split_csv(line);
    long date_col = -1, location_col = -1, cases_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "date") date_col = static_cast<long>(i);
        if (header[i] == "location") location_col = static_cast<long>(i);
        if (header[i] == "total_cases") cases_col = static_cast<long>(i);
    }
    if (date_col < 0 || location_col < 0 || cases_col < 0)
        throw std::runtime_error(src.path +
                                 ": OWID header must contain date, location, total_cases");

    std::map<sys_days, double> by_date;
    bool location_seen = false;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        const long needed = std::max({date_col, location_col, cases_col});
        if (static_cast<long>(fields.size()) <= needed)
            bad_row(src.path, line_no, "row has too few columns");
        if (fields[location_col] != *src.location) continue;
        location_seen = true;
        if (fields[cases_col].empty()) continue;  // missing day, forward-filled later
        double value = 0.0;
        if (!parse_double(fields[cases_col], &value))
            bad_row(src.path, line_no, "unparseable total_cases '" + fields[cases_col] + "'");
        if (!std::isfinite(value) || value < 0.0)
            bad_row(src.path, line_no, "total_cases must be finite and >= 0");
        sys_days day{};
        try {
            day = parse_date(fields[date_col]);
        } catch (const std::exception& e) {
            bad_row(src.path, line_no, e.what());
        }
        if (src.from && day < *src.from) continue;
        if (src.to && day > *src.to) continue;
        by_date[day] = value;
    }
    if (!location_seen)
        throw std::runtime_error(src.path + ": unknown location '" + *src.location + "'");
    if (by_date.empty())
        throw std::runtime_error(src.path + ": no rows left for '" + *src.location +
                                 "' after date filtering");
    return densify_dates(by_date, *src.location);
}

}  // namespace

std::chrono::sys_days parse_date(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(iso.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3)
        throw std::runtime_error("bad ISO date '" + iso + "'");
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                          std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) throw std::runtime_error("invalid calendar date '" + iso + "'");
    return std::chrono::sys_days{ymd};
}

std::string format_date(std::chrono::sys_days day) {
    const std::chrono::year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

TimeSeries load_series(const SeriesSource& src, std::vector<std::string>* warnings) {
    TimeSeries ts = src.format == SeriesFormat::Owid ? load_owid(src) : load_plain(src);
    check_monotonicity(ts, src.monotonicity_tolerance, warnings);
    return ts;
}

TimeSeries prepare_pipeline_input(const TimeSeries& ts, int smooth_window) {
    return moving_average(ts, smooth_window);
}

void write_plain_csv(const std::string& path, const TimeSeries& ts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "date,value\n";
    char buf[40];
    for (long i = 0; i < ts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", ts.values[i]);
        if (ts.start_date)
            out << format_date(*ts.start_date + std::chrono::days(i));
        else
            out << ts.start_index + i;
        out << ',' << buf << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gwave
