#include "gwave/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

gwave::SyntheticSpec::Component parse_component(const std::string& text) {
    gwave::SyntheticSpec::Component c{};
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &c.x_max, &c.a, &c.b, &tail) != 3)
        throw CLI::ValidationError("--component", "expected X_MAX,A,B, got '" + text + "'");
    return c;
}

std::pair<long, long> parse_range(const std::string& text, const char* flag) {
    long lo = 0, hi = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%ld..%ld%c", &lo, &hi, &tail) != 2)
        throw CLI::ValidationError(flag, "expected LO..HI, got '" + text + "'");
    return {lo, hi};
}

struct InputFlags {
    std::string input;
    std::string format = "plain";
    std::string location;
    std::string from, to;
    std::string scales = "1..64";
    int smooth = 7;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "input CSV path")->required();
        cmd->add_option("--format", format, "plain|owid")
            ->check(CLI::IsMember({"plain", "owid"}));
        cmd->add_option("--location", location, "location filter (owid format)");
        cmd->add_option("--from", from, "first date, ISO-8601");
        cmd->add_option("--to", to, "last date, ISO-8601");
        cmd->add_option("--scales", scales, "scale grid MIN..MAX (integers)");
        cmd->add_option("--smooth", smooth, "moving-average window (odd)");
    }

    gwave::AnalysisConfig to_config() const {
        gwave::AnalysisConfig cfg;
        cfg.input.path = input;
        cfg.input.format =
            format == "owid" ? gwave::SeriesFormat::Owid : gwave::SeriesFormat::Plain;
        if (!location.empty()) cfg.input.location = location;
        if (!from.empty()) cfg.input.from = gwave::parse_date(from);
        if (!to.empty()) cfg.input.to = gwave::parse_date(to);
        const auto [lo, hi] = parse_range(scales, "--scales");
        cfg.scale_min = static_cast<int>(lo);
        cfg.scale_max = static_cast<int>(hi);
        cfg.smooth_window = smooth;
        return cfg;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gompertz wavelet analysis of growth-curve time series"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "sample a sum of Gompertz components to CSV");
    std::vector<std::string> component_texts;
    std::string domain_text = "0..350";
    std::string synth_out = "synthetic.csv";
    synth->add_option("--component", component_texts, "component X_MAX,A,B (repeatable)")
        ->required();
    synth->add_option("--domain", domain_text, "integer domain LO..HI");
    synth->add_option("--out", synth_out, "output CSV path");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "scalogram + wave detection");
    InputFlags analyze_in;
    analyze_in.attach(analyze);
    std::string wavelet = "gompertz";
    int order = 2;
    double threshold = 0.2;
    int min_separation = 10;
    std::string out_dir = "gwave-out";
    analyze->add_option("--wavelet", wavelet, "gompertz|logistic")
        ->check(CLI::IsMember({"gompertz", "logistic"}));
    analyze->add_option("--order", order, "wavelet order (>= 2)");
    analyze->add_option("--threshold", threshold, "peak threshold fraction in (0,1)");
    analyze->add_option("--min-separation", min_separation, "minimum peak separation (samples)");
    analyze->add_option("--out", out_dir, "output directory");

    // compare
    auto* compare = app.add_subcommand("compare", "gompertz vs logistic wavelet fit");
    InputFlags compare_in;
    compare_in.attach(compare);

    // verify
    auto* verify = app.add_subcommand("verify", "check the closed-form identities");
    int max_order = 5;
    verify->add_option("--max-order", max_order, "largest wavelet order to check (2..8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // flag errors are config errors; --help is success
    }

    try {
        if (synth->parsed()) {
            gwave::SyntheticSpec spec;
            for (const std::string& t : component_texts)
                spec.components.push_back(parse_component(t));
            std::tie(spec.domain_lo, spec.domain_hi) = parse_range(domain_text, "--domain");
            return gwave::run_synth(spec, synth_out, std::cout);
        }
        if (analyze->parsed()) {
            gwave::AnalysisConfig cfg = analyze_in.to_config();
            cfg.wavelet_family = wavelet == "logistic" ? gwave::WaveletFamily::Logistic
                                                       : gwave::WaveletFamily::Gompertz;
            cfg.wavelet_order = order;
            cfg.peak_threshold = threshold;
            cfg.min_separation = min_separation;
            cfg.output_dir = out_dir;
            return gwave::run_analyze(cfg, std::cout);
        }
        if (compare->parsed()) return gwave::run_compare(compare_in.to_config(), std::cout);
        if (verify->parsed()) return gwave::run_verify(max_order, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
