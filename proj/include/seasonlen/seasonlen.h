/* C interface to the season-length detector. Every function returning
 * sl_status leaves a human-readable message behind for sl_last_error(). */
#ifndef SEASONLEN_SEASONLEN_H
#define SEASONLEN_SEASONLEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SL_API __declspec(dllexport)
#else
#define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
    SL_OK = 0,
    SL_TOO_SHORT,
    SL_NON_FINITE,
    SL_NON_POSITIVE_DELTA,
    SL_INVALID_CONFIG,
    SL_DEGREE_UNSUPPORTED,
    SL_INSUFFICIENT_POINTS,
    SL_SINGULAR_SYSTEM,
    SL_LENGTH_MISMATCH,
    SL_CUTOFF_OUT_OF_RANGE,
    SL_SERIES_TOO_SHORT_FOR_FILTER,
    SL_ZERO_VARIANCE,
    SL_ALREADY_DETRENDED,
    SL_NOT_DETRENDED,
    SL_TOO_FEW_DISTANCES,
    SL_TOO_FEW_QUOTIENTS,
    SL_NO_INTERVAL,
    SL_INVALID_SPEC,
    SL_UNKNOWN_FAMILY,
    SL_INVALID_ARGUMENT,
    SL_INTERNAL
} sl_status;

typedef struct sl_config sl_config;
typedef struct sl_result sl_result;
typedef struct sl_suite sl_suite;

/* "TooShort", "NonFinite", ... */
SL_API const char* sl_status_name(sl_status status);
/* Message of the last failure on the calling thread; empty when none. */
SL_API const char* sl_last_error(void);

SL_API sl_status sl_config_create(sl_config** out);
SL_API void sl_config_destroy(sl_config* config);
SL_API sl_status sl_config_set_interp_factor(sl_config* config, int factor);
SL_API sl_status sl_config_set_filter_order(sl_config* config, int order);
SL_API sl_status sl_config_set_filter_cutoff(sl_config* config, double cutoff);
SL_API sl_status sl_config_set_trend_threshold(sl_config* config, double threshold);
SL_API sl_status sl_config_set_zero_tolerance(sl_config* config, double tolerance);
SL_API sl_status sl_config_set_quotient_threshold(sl_config* config, double threshold);
SL_API sl_status sl_config_set_min_zero_count(sl_config* config, int count);
SL_API sl_status sl_config_set_min_season_acf(sl_config* config, double value);

/* config may be NULL for defaults. */
SL_API sl_status sl_detect(const double* values, size_t n, double delta, const sl_config* config,
                           sl_result** out);
SL_API void sl_result_destroy(sl_result* result);
SL_API int sl_result_is_seasonal(const sl_result* result);
/* NaN when no season was found. */
SL_API double sl_result_season_length(const sl_result* result);
SL_API double sl_result_unscaled_length(const sl_result* result);
SL_API int sl_result_trend_degree(const sl_result* result);
SL_API size_t sl_result_zero_count(const sl_result* result);
SL_API size_t sl_result_interval_size(const sl_result* result);
SL_API const char* sl_result_outcome(const sl_result* result);

/* *found is 0 when the baseline reports no period. */
SL_API sl_status sl_baseline_periodogram(const double* values, size_t n, int* found, double* period);
/* *period is 0 when the sequence has no exact season. */
SL_API sl_status sl_exact_season_oracle(const double* values, size_t n, size_t* period);

SL_API size_t sl_family_count(void);
SL_API const char* sl_family_name(size_t index);
SL_API sl_status sl_generate_family(const char* name, uint64_t seed, sl_suite** out);
SL_API void sl_suite_destroy(sl_suite* suite);
SL_API size_t sl_suite_size(const sl_suite* suite);
SL_API const char* sl_suite_family(const sl_suite* suite, size_t index);
SL_API const char* sl_suite_label(const sl_suite* suite, size_t index);
SL_API const double* sl_suite_values(const sl_suite* suite, size_t index, size_t* n);
SL_API size_t sl_suite_reference_count(const sl_suite* suite, size_t index);
SL_API double sl_suite_reference(const sl_suite* suite, size_t index, size_t which);

#ifdef __cplusplus
}
#endif

#endif
