/* C interface to the tropical-cyclic morphism library.
 *
 * Conventions:
 *   - every function returns a tropcat_status; outputs go through pointers
 *   - objects come back as opaque handles owned by the caller; release them
 *     with the matching *_free function
 *   - strings returned through char** are heap copies; release them with
 *     tropcat_string_free
 *   - on any failure tropcat_last_error() describes the problem for the
 *     calling thread
 */
#ifndef TROPCAT_H
#define TROPCAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tropcat_status {
  TROPCAT_OK = 0,
  TROPCAT_ERR_PARSE = 1,       /* malformed JSON or schema violation */
  TROPCAT_ERR_INVALID = 2,     /* data violates a structural invariant */
  TROPCAT_ERR_MISMATCH = 3,    /* shapes or levels do not line up */
  TROPCAT_ERR_UNSUPPORTED = 4, /* operation undefined for this input */
  TROPCAT_ERR_BOUND = 5,       /* size or overflow guard tripped */
  TROPCAT_ERR_VERIFY = 6,      /* a verification suite reported failures */
  TROPCAT_ERR_NULL = 7         /* required pointer argument was NULL */
} tropcat_status;

typedef struct tropcat_morphism tropcat_morphism;
typedef struct tropcat_setmap tropcat_setmap;

/* Last error message for the calling thread; valid until the next failing
 * call on the same thread.  Never NULL. */
const char* tropcat_last_error(void);

void tropcat_string_free(char* s);
void tropcat_morphism_free(tropcat_morphism* m);
void tropcat_setmap_free(tropcat_setmap* s);

/* --- morphisms ---------------------------------------------------------- */

/* Parse {"src","dst","deg","eqmod","vals"}; eqmod defaults to 1; values are
 * normalized into canonical form. */
tropcat_status tropcat_morphism_parse(const char* json, tropcat_morphism** out);
tropcat_status tropcat_morphism_make(int src, int dst, int deg,
                                     const int64_t* vals, int n_vals, int eqmod,
                                     tropcat_morphism** out);
tropcat_status tropcat_morphism_to_json(const tropcat_morphism* m, char** out);
tropcat_status tropcat_morphism_shape(const tropcat_morphism* m, int* src,
                                      int* dst, int* deg, int* eqmod);
/* Copies the src canonical values; cap must be at least src. */
tropcat_status tropcat_morphism_vals(const tropcat_morphism* m, int64_t* out,
                                     int cap);
tropcat_status tropcat_morphism_eq(const tropcat_morphism* a,
                                   const tropcat_morphism* b, int* equal);

tropcat_status tropcat_identity(int period, int eqmod, tropcat_morphism** out);
tropcat_status tropcat_eval(const tropcat_morphism* m, int64_t x, int64_t* out);
/* Composite g after f. */
tropcat_status tropcat_compose(const tropcat_morphism* g,
                               const tropcat_morphism* f,
                               tropcat_morphism** out);

/* Degree-k period-multiplying morphism onto the given target period. */
tropcat_status tropcat_psi(int period, int k, tropcat_morphism** out);
tropcat_status tropcat_subdivide(const tropcat_morphism* m, int k,
                                 tropcat_morphism** out);
/* Splits a degree-k morphism as power part composed with a degree-1 carrier. */
tropcat_status tropcat_factor(const tropcat_morphism* m,
                              tropcat_morphism** power_part,
                              tropcat_morphism** carrier);

tropcat_status tropcat_face(int period, int index, int eqmod,
                            tropcat_morphism** out);
tropcat_status tropcat_degeneracy(int period, int index, int eqmod,
                                  tropcat_morphism** out);
/* Rotation to the given power (1 is the basic step, negatives allowed). */
tropcat_status tropcat_rotation(int period, int power, int eqmod,
                                tropcat_morphism** out);
/* Strictly increasing residues in [0, period) select a degree-1 embedding. */
tropcat_status tropcat_submodule(int period, const int* residues, int count,
                                 tropcat_morphism** out);

/* Order-theoretic transpose of a degree-1 morphism, and its starred
 * adjoint-side variant. */
tropcat_status tropcat_transpose(const tropcat_morphism* m,
                                 tropcat_morphism** out);
tropcat_status tropcat_star_transpose(const tropcat_morphism* m,
                                      tropcat_morphism** out);

/* --- finite set maps and lifts ------------------------------------------ */

/* Parse {"src","dst","table"} with table values in [0, dst). */
tropcat_status tropcat_setmap_parse(const char* json, tropcat_setmap** out);
tropcat_status tropcat_setmap_to_json(const tropcat_setmap* s, char** out);
tropcat_status tropcat_setmap_shape(const tropcat_setmap* s, int* src, int* dst);

/* Residue projection of a level-1 morphism. */
tropcat_status tropcat_project(const tropcat_morphism* m, tropcat_setmap** out);
/* Minimal monotone lift; its degree is the cyclic descent number. */
tropcat_status tropcat_lift(const tropcat_setmap* s, tropcat_morphism** out);
tropcat_status tropcat_cdesc(const tropcat_setmap* s, int* out);

/* --- counting, circle, signed chains ------------------------------------ */

/* Number of equivariant maps between free cyclic sets: (a*m)^n, guarded
 * against overflow. */
tropcat_status tropcat_hom_count(int src_orbits, int dst_orbits, int group_order,
                                 uint64_t* out);

/* JSON description of the abstract circle at the given period: points,
 * segments with endpoints, and the complement involution.  indent < 0 gives
 * compact output. */
tropcat_status tropcat_circle_json(int period, int indent, char** out);

/* Multivalued sum of two signed chain elements of the same rank; returns a
 * JSON array of {"mag","sign"}. */
tropcat_status tropcat_hyper_add(int rank, int mag1, int sign1, int mag2,
                                 int sign2, char** out);

/* --- verification -------------------------------------------------------- */

/* Runs a verification suite ("category", "presentation", "epicyclic",
 * "duality", "descent", "hypergroup", "counts", or "all").  max_period and
 * max_deg <= 0 select the default bounds.  Writes a JSON report either way;
 * returns TROPCAT_ERR_VERIFY when any check fails. */
tropcat_status tropcat_verify(const char* suite, int max_period, int max_deg,
                              int indent, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TROPCAT_H */
