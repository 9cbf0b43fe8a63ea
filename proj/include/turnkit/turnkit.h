#ifndef TURNKIT_H
#define TURNKIT_H

/* C interface to turnkit. Every operation returns a tk_status and, on
 * success, a report handle owned by the caller. On failure the message of the
 * calling thread is available from tk_last_error() until its next call. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TK_API __declspec(dllexport)
#elif defined(__GNUC__)
#define TK_API __attribute__((visibility("default")))
#else
#define TK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TK_OK = 0,
  TK_INTERNAL = 1,
  TK_INVALID_INPUT = 2,
  /* A numerical procedure could not certify its answer at the given resolution. */
  TK_NUMERIC_FAILURE = 4
} tk_status;

typedef enum { TK_OUTCOME_DECIDED = 0, TK_OUTCOME_UNDECIDED = 1 } tk_outcome;

typedef enum { TK_FORMAT_TEXT = 0, TK_FORMAT_RECORD = 1 } tk_format;

typedef enum { TK_RING_Z = 0, TK_RING_Z2 = 1, TK_RING_Z4 = 2 } tk_ring;

/* Bits of tk_coords.set naming the supplied coordinates. */
enum {
  TK_COORD_A = 1u << 0,
  TK_COORD_B = 1u << 1,
  TK_COORD_K1 = 1u << 2,
  TK_COORD_K2 = 1u << 3,
  TK_COORD_EULER = 1u << 4,
  TK_COORD_XI = 1u << 5
};

typedef struct {
  int k;
  unsigned set;
  long a, b, k1, k2, euler, xi;
} tk_coords;

typedef struct tk_report tk_report;
typedef struct tk_complex tk_complex;

TK_API const char* tk_version(void);
TK_API const char* tk_last_error(void);

/* Bundles over spheres. */
TK_API tk_status tk_sphere(const tk_coords* coords, tk_report** out);
TK_API tk_status tk_s4_table(long range, tk_report** out);
TK_API tk_status tk_groupoid(int k, tk_report** out);
/* coords->set == 0 selects the bundle tau. */
TK_API tk_status tk_gauge(const tk_coords* coords, tk_report** out);
TK_API tk_status tk_samelson(int k, tk_report** out);
TK_API tk_status tk_relations(int k, long bound, int random_pairs, uint64_t seed, tk_report** out);

/* Complexes in the turnkit-complex record format. */
TK_API tk_status tk_complex_load(const char* path, tk_complex** out);
TK_API tk_status tk_complex_parse(const char* text, tk_complex** out);
TK_API void tk_complex_free(tk_complex* c);
/* Number of cells in `degree`, 0 when out of range. */
TK_API size_t tk_complex_cells(const tk_complex* c, int degree);

/* Cochains are dense arrays of `length` entries; candidate lists are
 * `count` cochains laid out back to back. A negative degree means all. */
TK_API tk_status tk_cw_cohomology(const tk_complex* c, tk_ring ring, int degree, int with_generators,
                                  tk_report** out);
TK_API tk_status tk_cw_sq2(const tk_complex* c, int degree, tk_report** out);
TK_API tk_status tk_cw_tc(const tk_complex* c, int k, const long* euler, size_t length, const long* candidates,
                          size_t count, int stably_trivial, tk_report** out);
TK_API tk_status tk_cw_modify_euler(const tk_complex* c, int k, const long* euler, size_t length,
                                    const size_t* cells, const long* js, size_t mods, tk_report** out);
TK_API tk_status tk_cw_thomas(const tk_complex* c, int k, const long* euler, size_t length, const long* candidates,
                              size_t count, tk_report** out);

/* Quaternionic numerics. */
TK_API tk_status tk_quat_extract(int k1, int k2, int resolution, uint64_t seed, tk_report** out);
TK_API tk_status tk_quat_commute(int k1, int k2, int samples, uint64_t seed, tk_report** out);
TK_API tk_status tk_quat_kirchhoff(int resolution, tk_report** out);

/* Reports. The rendered string lives as long as the report. */
TK_API const char* tk_report_render(tk_report* r, tk_format format);
TK_API tk_outcome tk_report_outcome(const tk_report* r);
TK_API tk_status tk_report_parse(const char* record, tk_report** out);
/* 1 when both reports carry the same content. */
TK_API int tk_report_equal(const tk_report* x, const tk_report* y);
TK_API void tk_report_free(tk_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TURNKIT_H */
