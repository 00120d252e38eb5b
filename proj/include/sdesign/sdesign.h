/* C interface to the sdesign library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returning sd_status leaves a message for sd_last_error() on
 * failure. Strings returned through char** are owned by the caller and must
 * be released with sd_string_free. Points are 1-based in all text. */
#ifndef SDESIGN_H
#define SDESIGN_H

#include <stddef.h>
#include <stdint.h>

#if defined(SDESIGN_BUILDING)
#define SD_API __attribute__((visibility("default")))
#else
#define SD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SD_OK = 0,
    SD_INVALID_ARGUMENT,
    SD_PARSE,
    SD_IO,
    SD_NOT_TRANSITIVE,
    SD_NOT_SYMMETRIC,
    SD_NOT_AUTOMORPHISM,
    SD_NOT_DIFFERENCE_SET,
    SD_OUT_OF_RANGE,
    SD_TIMEOUT,
    SD_INTERNAL
} sd_status;

typedef struct sd_group sd_group;
typedef struct sd_design sd_design;

/* Message for the last failure on this thread; empty if none. */
SD_API const char* sd_last_error(void);
SD_API const char* sd_status_name(sd_status status);
SD_API void sd_string_free(char* s);

/* ---- permutation groups (group file format: "degree N" + cycle lines) ---- */
SD_API sd_status sd_group_parse(const char* text, sd_group** out);
SD_API sd_status sd_group_read_file(const char* path, sd_group** out);
SD_API void sd_group_free(sd_group* g);
SD_API size_t sd_group_degree(const sd_group* g);
SD_API sd_status sd_group_to_text(const sd_group* g, char** out);
SD_API sd_status sd_group_order(const sd_group* g, char** decimal);
/* one orbit per line, points comma-separated */
SD_API sd_status sd_group_orbits(const sd_group* g, char** out);
SD_API sd_status sd_group_is_transitive(const sd_group* g, int* out);
/* Requires transitivity. On imprimitive groups fills the system generated by
 * the smallest block through point 1; classes_text has one class per line. */
SD_API sd_status sd_group_block_system(const sd_group* g, int* primitive, size_t* num_classes, size_t* class_size,
                                       char** classes_text);
SD_API sd_status sd_group_minimal_block(const sd_group* g, uint32_t a, uint32_t b, char** block);
/* ascending, space-separated; requires transitivity */
SD_API sd_status sd_group_subdegrees(const sd_group* g, uint32_t point, char** out);

/* ---- designs (design file format: "v N" + one comma-separated block per line) ---- */
SD_API sd_status sd_design_parse(const char* text, sd_design** out);
SD_API sd_status sd_design_read_file(const char* path, sd_design** out);
SD_API void sd_design_free(sd_design* d);
SD_API size_t sd_design_points(const sd_design* d);
SD_API size_t sd_design_blocks(const sd_design* d);
SD_API sd_status sd_design_to_text(const sd_design* d, char** out);
SD_API sd_status sd_design_complement(const sd_design* d, sd_design** out);
/* base block as comma-separated labels, e.g. "1,2,4" */
SD_API sd_status sd_orbit_design(const sd_group* g, const char* base_block, sd_design** out);

typedef enum {
    SD_VIOLATION_NONE = 0,
    SD_VIOLATION_BLOCK_COUNT,
    SD_VIOLATION_BLOCK_SIZE,
    SD_VIOLATION_POINT_PAIR,
    SD_VIOLATION_BLOCK_PAIR
} sd_violation;

typedef struct {
    sd_violation violation;
    uint64_t v, k, lambda; /* when violation == SD_VIOLATION_NONE */
    int nontrivial;
    uint64_t a, b; /* witnesses, 0-based */
    uint64_t observed, expected;
} sd_verification;

/* Fills `out`; `description` (optional) receives a readable summary. */
SD_API sd_status sd_design_verify(const sd_design* d, sd_verification* out, char** description);
/* SD_NOT_AUTOMORPHISM if a generator does not preserve the design */
SD_API sd_status sd_flag_transitive(const sd_group* g, const sd_design* d, int* out);

/* ---- constructions ---- */
/* newline-separated */
SD_API sd_status sd_catalog_names(char** out);
/* `group` may be NULL; *group is set to NULL when the instance carries none.
 * `info` (optional) receives "key: value" lines describing the instance. */
SD_API sd_status sd_catalog_construct(const char* name, sd_design** design, sd_group** group, char** info);
/* points vs hyperplanes of PG(n-1, q) */
SD_API sd_status sd_projective_space(unsigned n, uint64_t q, sd_design** design, char** info);
/* ambient: "cyclic:N", "ea:P:A", "product:M1,M2,..." or "q8xz2"; base: comma-separated elements.
 * `group` (optional) receives the regular representation. */
SD_API sd_status sd_diffset_develop(const char* ambient, const char* base, sd_design** design, sd_group** group);
/* *found is 0 when no such set exists; `base` then stays NULL. */
SD_API sd_status sd_diffset_find(const char* ambient, unsigned k, uint64_t lambda, int* found, char** base);

/* ---- elimination ---- */
/* decimal strings; `lambda` may be NULL. `pairs` gets "(k,l) (k,l)" or "EMPTY". */
SD_API sd_status sd_admissible(const char* v, const char* k_bound, const char* lambda, uint64_t seed, char** pairs,
                               char** details);

typedef void (*sd_line_callback)(const char* line, void* context);
/* `which`: "all", a table id or a row id. Emits a human line and a "#R" line per
 * row, in row order. *all_pass is 1 when every row matched its expectation. */
SD_API sd_status sd_run_catalog(const char* which, unsigned jobs, uint64_t seed, sd_line_callback on_line,
                                void* context, int* all_pass);
SD_API sd_status sd_families(const char* lambda, char** out);
/* kind: order-psl, ..., large-subgroup; numbers as decimal strings, NULL when unused */
SD_API sd_status sd_check_bound(const char* kind, unsigned n, const char* q, unsigned t, const char* x_order,
                                const char* out_order, const char* h_order, int* holds);
SD_API sd_status sd_check_division_identity(unsigned n, unsigned t, int* holds);

/* ---- acceptance suite ---- */
/* criterion 0 runs all of them; one line per criterion plus indented details. */
SD_API sd_status sd_selftest(int criterion, uint64_t seed, unsigned jobs, sd_line_callback on_line, void* context,
                             int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SDESIGN_H */
