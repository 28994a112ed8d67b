#ifndef BEAUVILLE_BEAUVILLE_H
#define BEAUVILLE_BEAUVILLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BV_API __declspec(dllexport)
#else
#define BV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure bv_last_error() holds a message
   for the calling thread until its next call. */
typedef enum bv_status {
  BV_OK = 0,
  BV_ERR_INPUT = 1,     /* malformed spec, element, certificate or argument */
  BV_ERR_CAP = 2,       /* an enumeration cap was hit */
  BV_ERR_NUMERIC = 3,   /* character table failed its guards */
  BV_ERR_INTERNAL = 4
} bv_status;

/* Report verdicts. Values match the CLI exit codes. */
typedef enum bv_verdict {
  BV_VERDICT_PASS = 0,
  BV_VERDICT_NONEXISTENT = 1,
  BV_VERDICT_INCONCLUSIVE = 2,
  BV_VERDICT_FAIL = 4
} bv_verdict;

typedef enum bv_level { BV_LEVEL_GROUP = 0, BV_LEVEL_QUOTIENT = 1 } bv_level;

typedef enum bv_search_mode {
  BV_SEARCH_EXHAUSTIVE = 0,
  BV_SEARCH_TORUS = 1,
  BV_SEARCH_RANDOM = 2
} bv_search_mode;

typedef struct bv_search_options {
  bv_search_mode mode;
  uint64_t seed;
  uint64_t budget; /* candidate pairs */
  unsigned threads;
} bv_search_options;

typedef struct bv_group bv_group;
typedef struct bv_report bv_report;

BV_API const char *bv_version(void);
BV_API const char *bv_last_error(void);
BV_API void bv_search_options_init(bv_search_options *opts);

/* spec: "A5", "S6", "SL(2,7)", "PSL(2,7)", "SU(3,3)" or "@path". */
BV_API bv_status bv_group_create(const char *spec, bv_level level, size_t cap, bv_group **out);
BV_API void bv_group_destroy(bv_group *g);
BV_API uint64_t bv_group_order(const bv_group *g);
BV_API size_t bv_group_class_count(const bv_group *g);

BV_API bv_status bv_search(const bv_group *g, const bv_search_options *opts, bv_report **out);
BV_API bv_status bv_verify(const char *certificate, size_t cap, bv_report **out);
BV_API bv_status bv_tori(const char *type, unsigned r, uint64_t q_lo, uint64_t q_hi, bv_report **out);
BV_API bv_status bv_singer(unsigned r, uint64_t q, int check_intersection, size_t cap, bv_report **out);
BV_API bv_status bv_charbound(const bv_group *g, uint64_t seed, bv_report **out);
BV_API bv_status bv_ree(unsigned f_lo, unsigned f_hi, bv_report **out);
BV_API bv_status bv_count(const bv_group *g, const size_t *classes, size_t n, size_t lattice_cap, uint64_t seed,
                          bv_report **out);
BV_API bv_status bv_resultant(uint64_t a, uint64_t b, bv_report **out);
BV_API bv_status bv_zeta(const bv_group *g, double t, size_t lattice_cap, uint64_t seed, bv_report **out);

BV_API bv_verdict bv_report_verdict(const bv_report *r);
/* Both strings live as long as the report. */
BV_API const char *bv_report_text(const bv_report *r);
BV_API const char *bv_report_structured(const bv_report *r);
BV_API void bv_report_destroy(bv_report *r);

#ifdef __cplusplus
}
#endif

#endif
