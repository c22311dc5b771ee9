#ifndef CODEWB_H
#define CODEWB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CWB_API __declspec(dllexport)
#else
#define CWB_API __attribute__((visibility("default")))
#endif

typedef enum cwb_status {
    CWB_OK = 0,
    CWB_E_INVALID = 1,     /* bad argument or parameter window */
    CWB_E_GUARD = 2,       /* size guard hit or instance infeasible */
    CWB_E_NO_SOLUTION = 3,
    CWB_E_DIV_ZERO = 4,
    CWB_E_FIELD = 5,       /* operands from different fields */
    CWB_E_INTERNAL = 6
} cwb_status;

typedef struct cwb_field cwb_field;
typedef struct cwb_result cwb_result;

CWB_API const char* cwb_version(void);
CWB_API const char* cwb_status_name(cwb_status s);
/* Message of the last failed call on this thread; empty after success. */
CWB_API const char* cwb_last_error(void);

/* F_{q^m}; elements are integers sum_i c_i p^i over the polynomial basis. */
CWB_API cwb_status cwb_field_new(uint64_t q, unsigned m, cwb_field** out);
CWB_API void cwb_field_free(cwb_field* f);
CWB_API uint64_t cwb_field_order(const cwb_field* f);
CWB_API uint64_t cwb_field_gamma(const cwb_field* f);
CWB_API cwb_status cwb_field_add(const cwb_field* f, uint64_t a, uint64_t b, uint64_t* out);
CWB_API cwb_status cwb_field_mul(const cwb_field* f, uint64_t a, uint64_t b, uint64_t* out);
CWB_API cwb_status cwb_field_inv(const cwb_field* f, uint64_t a, uint64_t* out);
CWB_API cwb_status cwb_field_pow(const cwb_field* f, uint64_t a, uint64_t k, uint64_t* out);
CWB_API cwb_status cwb_field_frob(const cwb_field* f, uint64_t a, long long j, uint64_t* out);

/* Runs a named operation with a JSON object of parameters. Operation names:
 * skew-eval lrs-gen support-check support-build dist-design netgap il-sim il-bounds
 * qlrs-dim qlrs-local aad-build aad-verify bounds-table.
 * On success *out holds a result owned by the caller. */
CWB_API cwb_status cwb_run(const char* op, const char* params_json, cwb_result** out);
CWB_API const char* cwb_result_json(const cwb_result* r);
/* Tabular rendering; never NULL. */
CWB_API const char* cwb_result_csv(const cwb_result* r);
CWB_API void cwb_result_free(cwb_result* r);

/* Names of the operations accepted by cwb_run, NULL-terminated. */
CWB_API const char* const* cwb_operations(void);

#ifdef __cplusplus
}
#endif

#endif
