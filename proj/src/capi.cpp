#include "seasonlen/seasonlen.h"

#include "seasonlen/pipeline.hpp"
#include "seasonlen/synthgen.hpp"

#include <cmath>
#include <limits>
#include <string>

struct sl_config {
    seasonlen::DetectionConfig value;
};

struct sl_result {
    seasonlen::DetectionResult value;
};

struct sl_suite {
    std::vector<seasonlen::BenchmarkCase> cases;
};

namespace {

thread_local std::string last_error;

sl_status to_status(seasonlen::ErrorCode code) {
    // ErrorCode and sl_status share their ordering, offset by SL_OK.
    return static_cast<sl_status>(static_cast<int>(code) + 1);
}

template <typename F>
sl_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return SL_OK;
    } catch (const seasonlen::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return SL_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return SL_INTERNAL;
    }
}

sl_status null_argument(const char* what) {
    last_error = std::string("InvalidArgument: ") + what + " must not be null";
    return SL_INVALID_ARGUMENT;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

extern "C" {

const char* sl_status_name(sl_status status) {
    if (status == SL_OK) return "Ok";
    if (status == SL_INTERNAL) return "Internal";
    if (status < SL_OK || status > SL_INTERNAL) return "Unknown";
    return seasonlen::to_string(static_cast<seasonlen::ErrorCode>(static_cast<int>(status) - 1));
}

const char* sl_last_error(void) { return last_error.c_str(); }

sl_status sl_config_create(sl_config** out) {
    if (!out) return null_argument("out");
    return guarded([&] { *out = new sl_config{}; });
}

void sl_config_destroy(sl_config* config) { delete config; }

#define SL_SETTER(name, type, field)                                  \
    sl_status name(sl_config* config, type value) {                   \
        if (!config) return null_argument("config");                  \
        config->value.field = value;                                  \
        return SL_OK;                                                 \
    }

SL_SETTER(sl_config_set_interp_factor, int, interp_factor)
SL_SETTER(sl_config_set_filter_order, int, filter_order)
SL_SETTER(sl_config_set_filter_cutoff, double, filter_cutoff)
SL_SETTER(sl_config_set_trend_threshold, double, trend_log_threshold)
SL_SETTER(sl_config_set_zero_tolerance, double, zero_tolerance_rel)
SL_SETTER(sl_config_set_quotient_threshold, double, quotient_threshold)
SL_SETTER(sl_config_set_min_zero_count, int, min_zero_count)
SL_SETTER(sl_config_set_min_season_acf, double, min_season_acf)

#undef SL_SETTER

sl_status sl_detect(const double* values, size_t n, double delta, const sl_config* config, sl_result** out) {
    if (!out) return null_argument("out");
    if (!values && n > 0) return null_argument("values");
    return guarded([&] {
        const auto series = seasonlen::validate_series({values, n}, delta);
        const auto result = seasonlen::detect_season_length(series, config ? config->value : seasonlen::DetectionConfig{});
        *out = new sl_result{result};
    });
}

void sl_result_destroy(sl_result* result) { delete result; }

int sl_result_is_seasonal(const sl_result* result) { return result && result->value.seasonal() ? 1 : 0; }

double sl_result_season_length(const sl_result* result) {
    return result && result->value.season_length ? *result->value.season_length : kNaN;
}

double sl_result_unscaled_length(const sl_result* result) {
    return result && result->value.unscaled_length ? *result->value.unscaled_length : kNaN;
}

int sl_result_trend_degree(const sl_result* result) { return result ? result->value.trend_degree : 0; }

size_t sl_result_zero_count(const sl_result* result) { return result ? result->value.diagnostics.zero_count : 0; }

size_t sl_result_interval_size(const sl_result* result) {
    return result ? result->value.diagnostics.member_count : 0;
}

const char* sl_result_outcome(const sl_result* result) {
    return result ? seasonlen::to_string(result->value.outcome) : "";
}

sl_status sl_baseline_periodogram(const double* values, size_t n, int* found, double* period) {
    if (!found || !period) return null_argument("found/period");
    if (!values && n > 0) return null_argument("values");
    return guarded([&] {
        const auto p = seasonlen::baseline_periodogram(seasonlen::validate_series({values, n}));
        *found = p ? 1 : 0;
        *period = p ? *p : kNaN;
    });
}

sl_status sl_exact_season_oracle(const double* values, size_t n, size_t* period) {
    if (!period) return null_argument("period");
    if (!values && n > 0) return null_argument("values");
    return guarded([&] { *period = seasonlen::exact_season_oracle({values, n}).value_or(0); });
}

size_t sl_family_count(void) { return seasonlen::family_names().size(); }

const char* sl_family_name(size_t index) {
    const auto& names = seasonlen::family_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

sl_status sl_generate_family(const char* name, uint64_t seed, sl_suite** out) {
    if (!name) return null_argument("name");
    if (!out) return null_argument("out");
    return guarded([&] { *out = new sl_suite{seasonlen::gen_family(name, seed)}; });
}

void sl_suite_destroy(sl_suite* suite) { delete suite; }

size_t sl_suite_size(const sl_suite* suite) { return suite ? suite->cases.size() : 0; }

const char* sl_suite_family(const sl_suite* suite, size_t index) {
    return suite && index < suite->cases.size() ? suite->cases[index].family.c_str() : nullptr;
}

const char* sl_suite_label(const sl_suite* suite, size_t index) {
    return suite && index < suite->cases.size() ? suite->cases[index].label.c_str() : nullptr;
}

const double* sl_suite_values(const sl_suite* suite, size_t index, size_t* n) {
    if (!suite || index >= suite->cases.size()) {
        if (n) *n = 0;
        return nullptr;
    }
    const auto values = suite->cases[index].series.values();
    if (n) *n = values.size();
    return values.data();
}

size_t sl_suite_reference_count(const sl_suite* suite, size_t index) {
    return suite && index < suite->cases.size() ? suite->cases[index].references.size() : 0;
}

double sl_suite_reference(const sl_suite* suite, size_t index, size_t which) {
    if (!suite || index >= suite->cases.size()) return kNaN;
    const auto& refs = suite->cases[index].references;
    return which < refs.size() ? refs[which] : kNaN;
}

}  // extern "C"
