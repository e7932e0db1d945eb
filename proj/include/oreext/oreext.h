/* C interface to the Ore extension engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an ore_status; on
 * failure ore_last_error() describes the problem (the message is per-thread
 * and valid until the next call on that thread). Strings returned through
 * char** out-parameters are released with ore_string_free.
 */
#ifndef OREEXT_H
#define OREEXT_H

#include <stddef.h>
#include <stdint.h>

#if defined(OREEXT_BUILDING_LIBRARY)
#define OREEXT_API __attribute__((visibility("default")))
#else
#define OREEXT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ore_algebra ore_algebra;
typedef struct ore_operator ore_operator;

typedef enum ore_status {
    ORE_OK = 0,
    ORE_ERR_INVALID_ARGUMENT = 1,
    ORE_ERR_PARSE = 2,
    ORE_ERR_IO = 3,
    ORE_ERR_ALGEBRA_MISMATCH = 4,
    ORE_ERR_NOT_DOMAIN = 5,
    ORE_ERR_DEGENERATE = 6,
    ORE_ERR_NOT_COMMUTING = 7,
    ORE_ERR_BOUND_EXHAUSTED = 8,
    ORE_ERR_BUDGET_EXHAUSTED = 9,
    ORE_ERR_INTERNAL = 10
} ore_status;

typedef enum ore_format {
    ORE_FORMAT_TEXT = 0,
    ORE_FORMAT_MACHINE = 1
} ore_format;

/* Passed as coeff_bound to choose the bound automatically. */
#define ORE_AUTO_BOUND (-1)

OREEXT_API const char* ore_last_error(void);
OREEXT_API const char* ore_status_name(ore_status status);
OREEXT_API void ore_string_free(char* s);

/* Algebras */
OREEXT_API ore_status ore_algebra_create(const char* sigma_y, const char* delta_y, ore_algebra** out);
OREEXT_API ore_status ore_algebra_from_config(const char* config_text, ore_algebra** out);
OREEXT_API ore_status ore_algebra_load(const char* path, ore_algebra** out);
OREEXT_API void ore_algebra_free(ore_algebra* algebra);
OREEXT_API size_t ore_algebra_sigma_degree(const ore_algebra* algebra);
OREEXT_API ore_status ore_algebra_describe(const ore_algebra* algebra, char** out);

/* Operators */
OREEXT_API ore_status ore_operator_parse(const ore_algebra* algebra, const char* expr, ore_operator** out);
OREEXT_API void ore_operator_free(ore_operator* op);
OREEXT_API ore_status ore_operator_to_string(const ore_operator* op, char** out);
OREEXT_API ore_status ore_mul(const ore_operator* p, const ore_operator* q, ore_operator** out);
OREEXT_API ore_status ore_commutator(const ore_operator* p, const ore_operator* q, ore_operator** out);
/* chi(p); *is_bottom is set to 1 for the zero operator (degree -inf). */
OREEXT_API ore_status ore_chi(const ore_operator* p, int64_t* degree, int* is_bottom);
OREEXT_API ore_status ore_leading_coeff(const ore_operator* p, char** out);
OREEXT_API ore_status ore_is_zero(const ore_operator* p, int* out);

/* Centralizer engine. max_doublings applies to ORE_AUTO_BOUND only. */
OREEXT_API ore_status ore_centralizer_report(const ore_operator* a, size_t max_degree, long coeff_bound,
                                             size_t max_doublings, ore_format format, char** out);
OREEXT_API ore_status ore_leading_space_dim(const ore_operator* a, size_t degree, size_t coeff_bound,
                                            size_t* out);
OREEXT_API ore_status ore_leading_coeff_degree_bound(const ore_operator* a, size_t degree, int64_t* out,
                                                     int* exists);
OREEXT_API ore_status ore_check_d_report(const ore_operator* a, size_t ell, size_t max_degree, long coeff_bound,
                                         size_t max_doublings, ore_format format, char** out, int* passed);
/* ell = 0 means: use the smallest ell for which condition D holds on the slice. */
OREEXT_API ore_status ore_basis_report(const ore_operator* a, size_t ell, size_t max_degree, long coeff_bound,
                                       size_t max_doublings, ore_format format, char** out);
OREEXT_API ore_status ore_check_commutative_report(const ore_operator* a, size_t max_degree, long coeff_bound,
                                                   size_t max_doublings, ore_format format, char** out,
                                                   int* commutative);

/* Annihilating polynomials. s_bound = t_bound = 0 selects the doubling search. */
OREEXT_API ore_status ore_annihilate_report(const ore_operator* p, const ore_operator* q, size_t s_bound,
                                            size_t t_bound, size_t max_doublings, ore_format format, char** out);

OREEXT_API ore_status ore_validate_axioms_report(const ore_algebra* algebra, size_t trials, size_t max_degree,
                                                 uint64_t seed, ore_format format, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* OREEXT_H */
