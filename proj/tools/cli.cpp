#include "cli.hpp"

#include "seasonlen/seasonlen.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace seasonlen::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        fields.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

bool is_index(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct ResultDeleter {
    void operator()(sl_result* r) const { sl_result_destroy(r); }
};
struct ConfigDeleter {
    void operator()(sl_config* c) const { sl_config_destroy(c); }
};
struct SuiteDeleter {
    void operator()(sl_suite* s) const { sl_suite_destroy(s); }
};
using ResultPtr = std::unique_ptr<sl_result, ResultDeleter>;
using ConfigPtr = std::unique_ptr<sl_config, ConfigDeleter>;
using SuitePtr = std::unique_ptr<sl_suite, SuiteDeleter>;

// Failure from the library, reported as "<Code>: message".
struct ApiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(sl_status status) {
    if (status != SL_OK) {
        std::string message = sl_last_error();
        if (message.empty()) message = sl_status_name(status);
        throw ApiError(message);
    }
}

struct ConfigFlags {
    std::optional<int> interp_factor;
    std::optional<int> order;
    std::optional<double> cutoff;
    std::optional<double> trend_threshold;
    std::optional<double> epsilon;
    std::optional<double> quotient_threshold;
    std::optional<int> min_zeros;
    std::optional<double> min_season_acf;

    void attach(CLI::App& app) {
        app.add_option("--interp-factor", interp_factor, "Interpolation factor");
        app.add_option("--order", order, "Butterworth filter order");
        app.add_option("--cutoff", cutoff, "Filter cutoff, rad per interpolated sample");
        app.add_option("--trend-threshold", trend_threshold, "Quadratic trend threshold");
        app.add_option("--epsilon", epsilon, "Zero tolerance relative to the ACF range");
        app.add_option("--quotient-threshold", quotient_threshold, "Distance quotient threshold");
        app.add_option("--min-zeros", min_zeros, "Fewest ACF zeros for a season");
        app.add_option("--min-season-acf", min_season_acf, "Smallest detrended ACF at the season lag");
    }

    ConfigPtr build() const {
        sl_config* raw = nullptr;
        check(sl_config_create(&raw));
        ConfigPtr config(raw);
        if (interp_factor) check(sl_config_set_interp_factor(raw, *interp_factor));
        if (order) check(sl_config_set_filter_order(raw, *order));
        if (cutoff) check(sl_config_set_filter_cutoff(raw, *cutoff));
        if (trend_threshold) check(sl_config_set_trend_threshold(raw, *trend_threshold));
        if (epsilon) check(sl_config_set_zero_tolerance(raw, *epsilon));
        if (quotient_threshold) check(sl_config_set_quotient_threshold(raw, *quotient_threshold));
        if (min_zeros) check(sl_config_set_min_zero_count(raw, *min_zeros));
        if (min_season_acf) check(sl_config_set_min_season_acf(raw, *min_season_acf));
        return config;
    }
};

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

char parse_delimiter(const std::string& text) {
    if (text == "\\t" || text == "tab") return '\t';
    if (text.size() != 1) throw CliError("delimiter must be a single character");
    return text[0];
}

// detect ---------------------------------------------------------------------

int cmd_detect(const std::string& input, const std::string& column, const std::string& delimiter, double delta,
               const ConfigFlags& flags, std::ostream& out) {
    const auto values = read_series_csv(input, column, parse_delimiter(delimiter));
    const auto config = flags.build();
    sl_result* raw = nullptr;
    check(sl_detect(values.data(), values.size(), delta, config.get(), &raw));
    const ResultPtr result(raw);

    json doc;
    doc["season_length"] = number_or_null(sl_result_season_length(raw));
    doc["unscaled_length"] = number_or_null(sl_result_unscaled_length(raw));
    doc["trend_degree"] = sl_result_trend_degree(raw);
    doc["zeros"] = sl_result_zero_count(raw);
    doc["interval_size"] = sl_result_interval_size(raw);
    out << doc.dump() << '\n';
    return 0;
}

// eval -----------------------------------------------------------------------

struct ManifestEntry {
    std::string path;
    std::vector<double> references;
    std::string family;
    std::string label;
};

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open manifest '" + path + "'");
    const fs::path base = fs::path(path).parent_path();
    std::vector<ManifestEntry> entries;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (trim(line).empty()) continue;
        auto fail = [&](const std::string& what) -> CliError {
            return CliError("manifest line " + std::to_string(number) + ": " + what);
        };
        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::parse_error& e) {
            throw fail(e.what());
        }
        if (!doc.is_object()) throw fail("expected a JSON object");
        if (!doc.contains("path") || !doc["path"].is_string()) throw fail("missing string field 'path'");

        ManifestEntry entry;
        fs::path file = doc["path"].get<std::string>();
        entry.path = (file.is_relative() ? base / file : file).string();
        const json ref = doc.value("reference", json(nullptr));
        if (ref.is_number()) {
            entry.references.push_back(ref.get<double>());
        } else if (ref.is_array()) {
            for (const auto& r : ref) {
                if (!r.is_number()) throw fail("references must be numbers");
                entry.references.push_back(r.get<double>());
            }
        } else if (!ref.is_null()) {
            throw fail("reference must be a number, null or an array");
        }
        entry.family = doc.contains("family") && doc["family"].is_string() ? doc["family"].get<std::string>() : "-";
        entry.label = doc.contains("case") && doc["case"].is_string() ? doc["case"].get<std::string>()
                                                                       : doc["path"].get<std::string>();
        entries.push_back(std::move(entry));
    }
    return entries;
}

struct DetectorOutcome {
    std::optional<double> detected;
    std::string error;
};

struct CaseOutcome {
    DetectorOutcome autocorr;
    DetectorOutcome periodogram;
};

CaseOutcome evaluate_case(const ManifestEntry& entry, const sl_config* config) {
    CaseOutcome outcome;
    std::vector<double> values;
    try {
        values = read_series_csv(entry.path);
    } catch (const CliError& e) {
        outcome.autocorr.error = outcome.periodogram.error = e.what();
        return outcome;
    }
    sl_result* raw = nullptr;
    if (sl_detect(values.data(), values.size(), 1.0, config, &raw) == SL_OK) {
        const ResultPtr result(raw);
        if (sl_result_is_seasonal(raw)) outcome.autocorr.detected = sl_result_unscaled_length(raw);
    } else {
        outcome.autocorr.error = sl_last_error();
    }
    int found = 0;
    double period = 0.0;
    if (sl_baseline_periodogram(values.data(), values.size(), &found, &period) == SL_OK) {
        if (found) outcome.periodogram.detected = period;
    } else {
        outcome.periodogram.error = sl_last_error();
    }
    return outcome;
}

json reference_json(const std::vector<double>& refs) {
    if (refs.empty()) return nullptr;
    if (refs.size() == 1) return refs.front();
    return refs;
}

json record_json(const ManifestEntry& entry, const char* detector, const DetectorOutcome& outcome, double margin) {
    const auto verdict = check_detection(outcome.detected, entry.references, margin);
    json rec;
    rec["case"] = entry.label;
    rec["family"] = entry.family;
    rec["detector"] = detector;
    rec["detected"] = outcome.detected ? json(*outcome.detected) : json(nullptr);
    rec["reference"] = reference_json(entry.references);
    rec["relative_error"] = verdict.relative_error ? json(*verdict.relative_error) : json(nullptr);
    rec["passed"] = outcome.error.empty() && verdict.passed;
    if (!outcome.error.empty()) rec["error"] = outcome.error;
    return rec;
}

std::string percent(std::size_t passed, std::size_t total) {
    if (total == 0) return "-";
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(passed) / static_cast<double>(total) << '%';
    return s.str();
}

int cmd_eval(const std::string& manifest, double margin, int jobs, std::string records_path, const ConfigFlags& flags,
             std::ostream& out) {
    if (!(margin >= 0.0)) throw CliError("margin must be >= 0");
    const auto entries = read_manifest(manifest);
    const auto config = flags.build();

    std::vector<CaseOutcome> outcomes(entries.size());
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                        std::max<std::size_t>(entries.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) outcomes[i] = evaluate_case(entries[i], config.get());
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    if (records_path.empty()) records_path = (fs::path(manifest).parent_path() / "records.jsonl").string();
    std::ofstream records(records_path, std::ios::binary | std::ios::trunc);
    if (!records) throw CliError("cannot write records to '" + records_path + "'");

    struct Tally {
        std::size_t cases = 0, autocorr = 0, periodogram = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Tally> tallies;
    Tally total;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto a = record_json(entries[i], "autocorr", outcomes[i].autocorr, margin);
        const auto p = record_json(entries[i], "periodogram", outcomes[i].periodogram, margin);
        records << a.dump() << '\n' << p.dump() << '\n';

        if (!tallies.contains(entries[i].family)) order.push_back(entries[i].family);
        auto& t = tallies[entries[i].family];
        for (Tally* row : {&t, &total}) {
            row->cases += 1;
            row->autocorr += a["passed"].get<bool>() ? 1 : 0;
            row->periodogram += p["passed"].get<bool>() ? 1 : 0;
        }
    }

    auto row = [&](const std::string& name, const Tally& t) {
        out << std::left << std::setw(12) << name << std::right << std::setw(7) << t.cases << std::setw(10)
            << t.autocorr << std::setw(9) << percent(t.autocorr, t.cases) << std::setw(13) << t.periodogram
            << std::setw(9) << percent(t.periodogram, t.cases) << '\n';
    };
    out << std::left << std::setw(12) << "family" << std::right << std::setw(7) << "cases" << std::setw(10)
        << "autocorr" << std::setw(9) << "" << std::setw(13) << "periodogram" << std::setw(9) << "" << '\n';
    for (const auto& name : order) row(name, tallies[name]);
    row("Total", total);
    out << "margin " << format_number(margin) << ", records written to " << records_path << '\n';
    return 0;
}

// gen ------------------------------------------------------------------------

int cmd_gen(const std::string& family, std::uint64_t seed, const std::string& out_dir, std::ostream& out) {
    std::vector<std::string> families;
    for (std::size_t i = 0; i < sl_family_count(); ++i) {
        if (family == "all" || family == sl_family_name(i)) families.emplace_back(sl_family_name(i));
    }
    if (families.empty()) throw CliError("UnknownFamily: '" + family + "'");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw CliError("cannot create '" + out_dir + "': " + ec.message());

    const fs::path dir(out_dir);
    std::ofstream manifest(dir / "manifest.jsonl", std::ios::binary | std::ios::trunc);
    if (!manifest) throw CliError("cannot write manifest in '" + out_dir + "'");

    std::size_t written = 0;
    for (const auto& name : families) {
        sl_suite* raw = nullptr;
        check(sl_generate_family(name.c_str(), seed, &raw));
        const SuitePtr suite(raw);
        for (std::size_t i = 0; i < sl_suite_size(raw); ++i) {
            const std::string label = sl_suite_label(raw, i);
            const std::string file = label + ".csv";
            std::ofstream csv(dir / file, std::ios::binary | std::ios::trunc);
            if (!csv) throw CliError("cannot write '" + (dir / file).string() + "'");
            std::size_t n = 0;
            const double* values = sl_suite_values(raw, i, &n);
            csv << "value\n";
            for (std::size_t k = 0; k < n; ++k) csv << format_number(values[k]) << '\n';

            std::vector<double> refs;
            for (std::size_t r = 0; r < sl_suite_reference_count(raw, i); ++r) refs.push_back(sl_suite_reference(raw, i, r));
            json line;
            line["path"] = file;
            line["reference"] = reference_json(refs);
            line["family"] = sl_suite_family(raw, i);
            line["case"] = label;
            manifest << line.dump() << '\n';
            ++written;
        }
    }
    out << "wrote " << written << " cases and manifest.jsonl to " << out_dir << '\n';
    return 0;
}

}  // namespace

std::vector<double> read_series_csv(const std::string& path, const std::string& column, char delimiter) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open '" + path + "'");

    std::optional<std::size_t> index;
    if (column.empty()) index = 0;
    else if (is_index(column)) index = std::stoul(column);

    std::vector<double> values;
    std::string line;
    bool first_row = true;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (trim(line).empty()) continue;
        const auto fields = split(line, delimiter);
        if (first_row) {
            first_row = false;
            if (!index) {
                const auto it = std::find_if(fields.begin(), fields.end(),
                                             [&](std::string_view f) { return trim(f) == column; });
                if (it == fields.end()) throw CliError("line " + std::to_string(number) + ": no column named '" + column + "'");
                index = static_cast<std::size_t>(it - fields.begin());
                continue;
            }
            if (*index < fields.size() && !parse_number(fields[*index])) continue;
        }
        if (*index >= fields.size()) {
            throw CliError("line " + std::to_string(number) + ": no column " + std::to_string(*index));
        }
        const auto value = parse_number(fields[*index]);
        if (!value) {
            throw CliError("line " + std::to_string(number) + ": cannot parse '" + std::string(trim(fields[*index])) +
                           "' as a number");
        }
        values.push_back(*value);
    }
    return values;
}

PassCheck check_detection(std::optional<double> detected, const std::vector<double>& references, double margin) {
    PassCheck result;
    if (references.empty() || !detected) {
        result.passed = references.empty() && !detected;
        return result;
    }
    double best = std::numeric_limits<double>::infinity();
    for (double r : references) best = std::min(best, std::abs(*detected - r) / r);
    result.relative_error = best;
    result.passed = best <= margin;
    return result;
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Season length detection for uniformly sampled time series"};
    app.require_subcommand(1);

    ConfigFlags flags;
    std::string input, column, delimiter = ",";
    double delta = 1.0;
    auto* detect = app.add_subcommand("detect", "Estimate the season length of one series");
    detect->add_option("--input,input", input, "CSV file")->required();
    detect->add_option("--column", column, "Column index or header name");
    detect->add_option("--delimiter", delimiter, "Field delimiter");
    detect->add_option("--delta", delta, "Sampling interval");
    flags.attach(*detect);

    std::string manifest, records;
    double margin = 0.2;
    int jobs = 1;
    auto* eval = app.add_subcommand("eval", "Score both detectors on a benchmark manifest");
    eval->add_option("manifest", manifest, "JSON-lines manifest")->required();
    eval->add_option("--margin", margin, "Relative error margin");
    eval->add_option("--jobs", jobs, "Worker threads");
    eval->add_option("--out", records, "Per-case records (JSON lines)");
    flags.attach(*eval);

    std::string family, out_dir;
    std::uint64_t seed = 7;
    auto* gen = app.add_subcommand("gen", "Write a synthetic benchmark suite");
    gen->add_option("family", family, "Family name or 'all'")->required();
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--out", out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (detect->parsed()) return cmd_detect(input, column, delimiter, delta, flags, out);
        if (eval->parsed()) return cmd_eval(manifest, margin, jobs, records, flags, out);
        return cmd_gen(family, seed, out_dir, out);
    } catch (const CliError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ApiError& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace seasonlen::cli
