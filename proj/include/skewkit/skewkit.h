#ifndef SKEWKIT_H
#define SKEWKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef SKEWKIT_BUILDING_LIBRARY
#    define SKK_API __declspec(dllexport)
#  else
#    define SKK_API __declspec(dllimport)
#  endif
#else
#  define SKK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skk_status {
    SKK_OK = 0,
    SKK_PROPERTY_FAILS = 1, /* computed fine, the checked property does not hold */
    SKK_INVALID_INPUT = 2,
    SKK_INTERNAL = 3
} skk_status;

typedef struct skk_diagram skk_diagram;

/* Message for the last non-OK status on this thread; valid until the next call. */
SKK_API const char* skk_last_error(void);
SKK_API const char* skk_version(void);

/* Every char** output is heap allocated and must be released with skk_string_free. */
SKK_API void skk_string_free(char* s);

/* {"lambda":[..],"mu":[..]} or {"cells":[[row,col],..]} */
SKK_API skk_status skk_diagram_from_json(const char* json, skk_diagram** out);
SKK_API void skk_diagram_free(skk_diagram* d);
SKK_API skk_status skk_diagram_to_json(const skk_diagram* d, char** out);
SKK_API skk_status skk_diagram_size(const skk_diagram* d, size_t* out);
SKK_API skk_status skk_render(const skk_diagram* d, char** out);

/* Schur expansion as [{"partition":[..],"coeff":n},..] */
SKK_API skk_status skk_expand(const skk_diagram* d, char** out);

/* OK when s_a = s_b, PROPERTY_FAILS otherwise. The report holds the shared
   fingerprint or the first differing coefficient. */
SKK_API skk_status skk_equal(const skk_diagram* a, const skk_diagram* b, char** report);

/* anchor: NULL or "empty" for W = ∅, a diagram JSON for W placed at the
   corners of E, or {"ne":[[r,c],..],"sw":[[r,c],..]} in E's coordinates.
   With verify != 0 the main identity is checked as well and PROPERTY_FAILS
   is returned if it does not hold. out may be NULL. */
SKK_API skk_status skk_compose(const skk_diagram* d, const skk_diagram* e, const char* anchor,
                               int verify, skk_diagram** out, char** report);

/* OK when Hypotheses I-V hold (V only where it applies). */
SKK_API skk_status skk_hypotheses(const skk_diagram* e, const char* anchor, char** report);

/* kind: "nw", "se" or "jt". OK when the determinant equals s_D. */
SKK_API skk_status skk_hamel_goulden(const skk_diagram* d, const char* kind, int show_matrix,
                                     char** report);

/* Integer matrix [[..],..] and 0-based subset [..]. OK when the identity holds. */
SKK_API skk_status skk_sylvester(const char* matrix_json, const char* subset_json, char** report);

/* Classes of connected diagrams with at most max_cells cells. PROPERTY_FAILS
   when a class size is not a power of two or an invariant disagrees. */
SKK_API skk_status skk_classes(int max_cells, int workers, char** report);

/* suite: "paper-examples". */
SKK_API skk_status skk_verify_suite(const char* suite, char** report);

SKK_API skk_status skk_factorizations(const skk_diagram* f, int max_cells, char** report);

#ifdef __cplusplus
}
#endif

#endif
