/* cr-atlas C API: exact classification of compact simply connected
 * homogeneous CR manifolds of hypersurface type.
 *
 * All functions return a cra_error code (CRA_OK on success) and hand results
 * back through out-parameters. Handles are opaque and must be released with
 * the matching *_free function; strings returned through char** are owned by
 * the caller and released with cra_string_free. Rich results are JSON text
 * (documented in the project README). All arithmetic is exact; rationals
 * appear in JSON as {"num": .., "den": ..} objects.
 */

#ifndef CRATLAS_H
#define CRATLAS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int cra_error;

enum {
    CRA_OK = 0,
    CRA_ERR_INVALID_RANK = 1,
    CRA_ERR_MISMATCHED_SYSTEM = 2,
    CRA_ERR_INVALID_PAINTING = 3,
    CRA_ERR_ZERO_ENTRY = 4,
    CRA_ERR_NON_PRIMITIVE = 5,
    CRA_ERR_NON_REGULAR = 6,
    CRA_ERR_UNPARSEABLE_ISOTROPY = 7,
    CRA_ERR_INVALID_MODULUS = 8,
    CRA_ERR_UNSUPPORTED_RANK = 9,
    CRA_ERR_INVALID_SPAN = 10,
    CRA_ERR_DEGENERATE_FORM = 11,
    CRA_ERR_UNSUPPORTED_INSTANCE = 12,
    CRA_ERR_BAD_ARGUMENT = 13,
    CRA_ERR_PARSE = 14,
    CRA_ERR_IO = 15,
    CRA_ERR_INTERNAL = 16
};

/* Static name of an error code ("NonRegular", ...). Never fails. */
const char* cra_error_name(cra_error code);

/* Library version string, e.g. "1.0.0". */
const char* cra_version(void);

/* Message of the most recent failing call on this thread (empty if none). */
const char* cra_last_error_message(void);

void cra_string_free(char* s);

/* ---- root systems and painted diagrams ---- */

typedef struct cra_root_system cra_root_system;
typedef struct cra_painting cra_painting;
typedef struct cra_standard cra_standard;
typedef struct cra_nonstandard cra_nonstandard;

/* "B3", "A2xA1" */
cra_error cra_root_system_parse(const char* name, cra_root_system** out);
void cra_root_system_free(cra_root_system* sys);
cra_error cra_root_system_to_json(const cra_root_system* sys, char** json_out);
cra_error cra_root_system_rank(const cra_root_system* sys, int* rank_out);
cra_error cra_root_system_num_positive_roots(const cra_root_system* sys, int* count_out);
/* Number of Dynkin diagram automorphisms (factor swaps included). */
cra_error cra_root_system_num_diagram_automorphisms(const cra_root_system* sys, long long* count_out);

/* "B3[1]", "C2[1]xA1[1]"; node ids are 1-based Bourbaki, local per factor. */
cra_error cra_painting_parse(const char* name, cra_painting** out);
void cra_painting_free(cra_painting* p);
cra_error cra_painting_to_json(const cra_painting* p, char** json_out);
cra_error cra_painting_name(const cra_painting* p, char** name_out);
/* {"semisimple": [...], "center_dim": k} for K. */
cra_error cra_painting_isotropy_json(const cra_painting* p, char** json_out);
cra_error cra_painting_complex_dimension(const cra_painting* p, int* dim_out);

/* ---- standard CR manifolds ---- */

cra_error cra_standard_make(const cra_painting* p, const long long* tuple, size_t tuple_len,
                            cra_standard** out);
void cra_standard_free(cra_standard* s);
/* Full classification report (Levi signature, L, K, maximal group, transfer). */
cra_error cra_standard_report_json(const cra_standard* s, char** json_out);
cra_error cra_standard_levi(const cra_standard* s, int* n_plus, int* n_minus);
/* verdict: 1 equivalent, 0 not; witness JSON only when equivalent. */
cra_error cra_standard_equivalent(const cra_standard* a, const cra_standard* b, int allow_conjugate,
                                  int* verdict, char** witness_json);

/* ---- non-standard CR manifolds ---- */

/* group/isotropy in the symbolic grammar ("Spin7", "SU3", "T1.SU2", ...);
 * t_re/t_im are rational literals like "1/2". */
cra_error cra_nonstandard_make(const char* group, const char* isotropy, const char* t_re,
                               const char* t_im, cra_nonstandard** out);
void cra_nonstandard_free(cra_nonstandard* m);
cra_error cra_nonstandard_report_json(const cra_nonstandard* m, char** json_out);
cra_error cra_nonstandard_row(const cra_nonstandard* m, int* row_out);
cra_error cra_nonstandard_equivalent(const cra_nonstandard* a, const cra_nonstandard* b, int* verdict);
/* Recognition without a modulus; JSON row description or error. */
cra_error cra_recognize_json(const char* group, const char* isotropy, char** json_out);

/* ---- manifold specs and equivalence across kinds ---- */

/* spec: "<diagram> p=(<ints>)" or "<G> / <L> t=(<re>,<im>)". */
cra_error cra_classify_spec(const char* spec, char** report_json_out);
cra_error cra_equivalent_specs(const char* spec_a, const char* spec_b, int allow_conjugate,
                               int* verdict, char** witness_json);
cra_error cra_maximal_group_spec(const char* spec, char** report_json_out);

/* ---- catalogs ---- */

/* threads <= 0 reads CR_ATLAS_THREADS (default 1). Output is byte-stable. */
cra_error cra_enumerate_catalog(int max_rank, long long tuple_bound, int threads, char** json_out);
cra_error cra_verify_catalog(const char* catalog_json, char** report_json_out);

/* Human-readable rendering of a classification report. */
cra_error cra_render_text_report(const char* report_json, char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* CRATLAS_H */
