#ifndef STSD_STSD_H
#define STSD_STSD_H

/* C interface to the stsd library.
 *
 * Handles are opaque and owned by the caller (free with the matching
 * *_free). Strings returned through char** are heap allocated; release them
 * with stsd_string_free. On failure a function returns a nonzero status and
 * stsd_last_error() describes it (per thread, valid until the next call).
 *
 * Functions ending in _json return a JSON object as text. */

#include <stddef.h>
#include <stdint.h>

#if defined(STSD_BUILDING_LIBRARY)
#define STSD_API __attribute__((visibility("default")))
#else
#define STSD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stsd_status {
  STSD_OK = 0,
  STSD_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-range value */
  STSD_ERR_PRECONDITION = 2,     /* input violates an operation's precondition */
  STSD_ERR_PARSE = 3,
  STSD_ERR_IO = 4,
  STSD_ERR_NOT_FOUND = 5,        /* a search finished without a result */
  STSD_ERR_GENERATOR = 6,        /* random generation hit its step cap */
  STSD_ERR_INTERNAL = 7
} stsd_status;

typedef struct stsd_system stsd_system;
typedef struct stsd_colouring stsd_colouring;

typedef struct stsd_budget {
  uint64_t node_limit;
  double time_limit_seconds;
  uint64_t class_cap; /* 0: no cap */
} stsd_budget;

STSD_API const char* stsd_version(void);
STSD_API const char* stsd_last_error(void);
STSD_API const char* stsd_status_name(stsd_status status);
STSD_API void stsd_string_free(char* text);
/* Library defaults, overridden by STSD_BUDGET_NODES / STSD_BUDGET_SECONDS. */
STSD_API void stsd_budget_default(stsd_budget* budget);

/* Triple systems. */
STSD_API stsd_status stsd_system_create(uint32_t v, const uint32_t* points, size_t triple_count, stsd_system** out);
STSD_API stsd_status stsd_system_parse(const char* text, stsd_system** out);
STSD_API stsd_status stsd_system_load(const char* path, stsd_system** out);
STSD_API stsd_status stsd_system_save(const stsd_system* system, const char* path);
STSD_API stsd_status stsd_system_to_text(const stsd_system* system, char** out);
STSD_API void stsd_system_free(stsd_system* system);
STSD_API uint32_t stsd_system_order(const stsd_system* system);
STSD_API size_t stsd_system_size(const stsd_system* system);
STSD_API stsd_status stsd_system_triple(const stsd_system* system, size_t index, uint32_t out[3]);
/* *ok is 1 for a Steiner triple system. */
STSD_API stsd_status stsd_system_verify_json(const stsd_system* system, int* ok, char** json);

/* Colourings (partitions of the triples into partial parallel classes). */
STSD_API stsd_status stsd_colouring_parse(const char* text, stsd_colouring** out);
STSD_API stsd_status stsd_colouring_load(const char* path, stsd_colouring** out);
STSD_API stsd_status stsd_colouring_save(const stsd_colouring* colouring, uint32_t v, const char* path);
STSD_API stsd_status stsd_colouring_to_text(const stsd_colouring* colouring, uint32_t v, char** out);
STSD_API void stsd_colouring_free(stsd_colouring* colouring);
STSD_API size_t stsd_colouring_class_count(const stsd_colouring* colouring);
STSD_API stsd_status stsd_colouring_verify_json(const stsd_system* system, const stsd_colouring* colouring, int* ok,
                                                char** json);

/* Constructions. square: 0 half-sum, 1 random conjugate of it (uses seed). */
STSD_API stsd_status stsd_construct_wilson_schreiber(uint32_t n, stsd_system** out);
STSD_API stsd_status stsd_construct_bose(uint32_t n, int square, uint64_t seed, stsd_system** out);
STSD_API stsd_status stsd_fixture_sts33(stsd_system** system, stsd_colouring** colouring);
STSD_API stsd_status stsd_is_cyclic(const stsd_system* system, int* out);

/* Number theory. */
STSD_API stsd_status stsd_numtheory_profile_json(uint64_t n, char** json);
STSD_API stsd_status stsd_numtheory_scan_json(uint64_t limit, char** json);
/* Tab-separated rows "n phi f psi psi_star" for every n <= limit coprime to 6. */
STSD_API stsd_status stsd_numtheory_table_tsv(uint64_t limit, char** text);
STSD_API stsd_status stsd_numtheory_growth_json(uint64_t limit, uint64_t step, char** json);

/* 1-factorisation of G(n) with its property check; text is the FACTOR listing. */
STSD_API stsd_status stsd_factorise(uint32_t n, int* ok, char** text, char** json);

/* Analysis. Searches report "status": "complete" or "inconclusive". */
STSD_API stsd_status stsd_parallel_classes_json(const stsd_system* system, const stsd_budget* budget,
                                                int max_disjoint, char** json);
/* weights: v entries in {0,1,2}, or NULL to try the built-in weightings. */
STSD_API stsd_status stsd_bound_mod3_json(const stsd_system* system, const uint8_t* weights, size_t count,
                                          char** json);
/* The system must be in Wilson-Schreiber point layout. */
STSD_API stsd_status stsd_bound_ws_json(const stsd_system* system, char** json);
/* witness may be NULL. If colouring_out is non-NULL it receives the best colouring found. */
STSD_API stsd_status stsd_chromatic_exact_json(const stsd_system* system, const stsd_budget* budget,
                                               const stsd_colouring* witness, char** json,
                                               stsd_colouring** colouring_out);
/* STSD_ERR_NOT_FOUND when no colouring with at most target classes was found. */
STSD_API stsd_status stsd_chromatic_heuristic(const stsd_system* system, size_t target, uint64_t seed,
                                              size_t restarts, uint64_t iterations, stsd_colouring** out);
STSD_API stsd_status stsd_theorem1_json(uint32_t v, char** json);

/* Random systems. */
STSD_API stsd_status stsd_generate(uint32_t v, uint64_t seed, stsd_system** out);
STSD_API stsd_status stsd_survey_json(uint32_t v, size_t count, uint64_t seed, size_t restarts, unsigned threads,
                                      char** json);

#ifdef __cplusplus
}
#endif

#endif
