#ifndef QSA_QSA_H
#define QSA_QSA_H

/* C interface to the qsa library. Every call returns a qsa_status; on
 * failure the message (and, for parse errors, the 1-based column) of the
 * calling thread's last error can be read back. Strings returned through
 * char** are owned by the caller and released with qsa_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define QSA_API __declspec(dllexport)
#else
#define QSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsa_status {
  QSA_OK = 0,
  QSA_ERR_SYNTAX = 1,
  QSA_ERR_UNKNOWN_SYMBOL = 2,
  QSA_ERR_DOMAIN = 3,
  QSA_ERR_INVALID_ARGUMENT = 4,
  QSA_ERR_NULL_POINTER = 5,
  QSA_ERR_INTERNAL = 6
} qsa_status;

typedef struct qsa_element qsa_element;
typedef struct qsa_aut qsa_aut;
typedef struct qsa_module qsa_module;
typedef struct qsa_report qsa_report;

QSA_API const char* qsa_version(void);
QSA_API const char* qsa_status_string(qsa_status s);
QSA_API const char* qsa_last_error(void);
/* 0 when the last error was not a parse error. */
QSA_API size_t qsa_last_error_column(void);
QSA_API void qsa_string_free(char* s);

/* Elements of A (algebra NULL or "A") or of a named factor algebra such as
 * "A_mod_X" or "A_mod_X_q(q^2)". */
QSA_API qsa_status qsa_element_parse(const char* text, const char* algebra, qsa_element** out);
QSA_API qsa_status qsa_element_add(const qsa_element* a, const qsa_element* b, qsa_element** out);
QSA_API qsa_status qsa_element_sub(const qsa_element* a, const qsa_element* b, qsa_element** out);
QSA_API qsa_status qsa_element_mul(const qsa_element* a, const qsa_element* b, qsa_element** out);
QSA_API qsa_status qsa_element_equal(const qsa_element* a, const qsa_element* b, int* out);
QSA_API qsa_status qsa_element_to_string(const qsa_element* x, char** out);
QSA_API qsa_status qsa_element_to_json(const qsa_element* x, char** out);
QSA_API void qsa_element_free(qsa_element* x);

/* Center of the algebra in degree <= deg, as a JSON array of strings. */
QSA_API qsa_status qsa_center(const char* algebra, long deg, char** out_json);
/* Names of the accepted factor algebras, one per line. */
QSA_API qsa_status qsa_algebra_names(char** out);

/* aut(lambda;mu;gamma;i) literals. */
QSA_API qsa_status qsa_aut_parse(const char* text, qsa_aut** out);
QSA_API qsa_status qsa_aut_compose(const qsa_aut* s, const qsa_aut* t, qsa_aut** out);
QSA_API qsa_status qsa_aut_inverse(const qsa_aut* s, qsa_aut** out);
/* x must be an element of A. */
QSA_API qsa_status qsa_aut_apply(const qsa_aut* s, const qsa_element* x, qsa_element** out);
QSA_API qsa_status qsa_aut_to_string(const qsa_aut* s, char** out);
QSA_API void qsa_aut_free(qsa_aut* s);

/* weight(kappa;lambda), case-a(kappa), case-b(lambda), case-c(lambda),
 * case-d(zeta;mu), case-e(zeta;mu). */
QSA_API qsa_status qsa_module_parse(const char* text, qsa_module** out);
QSA_API qsa_status qsa_module_name(const qsa_module* m, char** out);
/* Apply the element `word` of A to the basis vector `start` (NULL for the
 * generating vector) and print the result. */
QSA_API qsa_status qsa_module_act(const qsa_module* m, const char* word, const char* start, char** out);
QSA_API void qsa_module_free(qsa_module* m);

/* identities, spectrum, aut, gwa, modules or all. */
QSA_API qsa_status qsa_verify(const char* suite, qsa_report** out);
/* GWA laws and the structure map of E on random samples. */
QSA_API qsa_status qsa_gwa_check(int trials, unsigned long long seed, qsa_report** out);
QSA_API qsa_status qsa_report_passed(const qsa_report* r, int* out);
QSA_API qsa_status qsa_report_to_string(const qsa_report* r, char** out);
QSA_API qsa_status qsa_report_to_json(const qsa_report* r, char** out);
QSA_API void qsa_report_free(qsa_report* r);

/* Hasse diagram of the prime spectrum. */
QSA_API qsa_status qsa_spectrum_dot(char** out);
QSA_API qsa_status qsa_spectrum_json(char** out);

#ifdef __cplusplus
}
#endif

#endif
