/* C interface to the topolab engine.
 *
 * Every function returns a tl_status. On failure the message for the calling
 * thread is available from tl_last_error() until the next failing call.
 * Handles are opaque and owned by the caller: release them with the
 * matching *_free function. Strings returned through char** are released
 * with tl_string_free.
 *
 * Point sets over a finite space are bitmasks: bit x set iff point x is a
 * member (at most 16 points).
 */
#ifndef TOPOLAB_H
#define TOPOLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TOPOLAB_API __declspec(dllexport)
#else
#define TOPOLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_NOT_A_TOPOLOGY = 1,
  TL_GROUND_SET_MISMATCH = 2,
  TL_NOT_PI_COMPATIBLE = 3,
  TL_NOT_OPEN = 4,
  TL_EMPTY_INPUT = 5,
  TL_TOO_LARGE = 6,
  TL_N_OUT_OF_RANGE = 7,
  TL_UNKNOWN_THEOREM = 8,
  TL_UNKNOWN_PREDICATE = 9,
  TL_UNSUPPORTED_PAIR = 10,
  TL_SIZE_MISMATCH = 11,
  TL_EMPTY_BASE = 12,
  TL_PRECONDITION_FAILED = 13,
  TL_INVALID_GROUP = 14,
  TL_PARSE_ERROR = 15,
  TL_INVALID_ARGUMENT = 16,
  TL_NULL_ARGUMENT = 98,
  TL_INTERNAL = 99
} tl_status;

typedef uint32_t tl_points;

typedef struct tl_space tl_space;
typedef struct tl_group tl_group;
typedef struct tl_iset tl_iset;
typedef struct tl_line tl_line;

TOPOLAB_API const char* tl_last_error(void);
TOPOLAB_API const char* tl_status_name(tl_status status);
TOPOLAB_API const char* tl_version(void);
TOPOLAB_API void tl_string_free(char* s);

/* ---- finite spaces ---- */

TOPOLAB_API tl_status tl_space_from_json(const char* json, tl_space** out);
TOPOLAB_API tl_status tl_space_discrete(int n, tl_space** out);
TOPOLAB_API tl_status tl_space_trivial(int n, tl_space** out);
TOPOLAB_API tl_status tl_space_clone(const tl_space* s, tl_space** out);
TOPOLAB_API void tl_space_free(tl_space* s);
TOPOLAB_API tl_status tl_space_size(const tl_space* s, int* out);
TOPOLAB_API tl_status tl_space_equal(const tl_space* a, const tl_space* b, int* out);
/* {"n":..,"min_nbhds":[..]} */
TOPOLAB_API tl_status tl_space_to_json(const tl_space* s, char** out);
/* separation, density, isolated points, connectedness, Baire-space flag,
 * largest nowhere dense set and the sorted open family */
TOPOLAB_API tl_status tl_space_analyze_json(const tl_space* s, char** out);
/* "0,2" -> bitmask, checked against the space's size */
TOPOLAB_API tl_status tl_space_parse_points(const tl_space* s, const char* text, tl_points* out);

TOPOLAB_API tl_status tl_space_interior(const tl_space* s, tl_points a, tl_points* out);
TOPOLAB_API tl_status tl_space_closure(const tl_space* s, tl_points a, tl_points* out);

typedef enum tl_set_test {
  TL_TEST_OPEN = 0,
  TL_TEST_CLOSED = 1,
  TL_TEST_DENSE = 2,
  TL_TEST_NOWHERE_DENSE = 3,
  TL_TEST_MEAGER = 4,
  TL_TEST_BAIRE_PROPERTY = 5,
  TL_TEST_SEMI_OPEN = 6
} tl_set_test;

TOPOLAB_API tl_status tl_space_test(const tl_space* s, tl_set_test test, tl_points a, int* out);
TOPOLAB_API tl_status tl_space_density(const tl_space* s, int* out);
TOPOLAB_API tl_status tl_space_is_connected(const tl_space* s, int* out);
TOPOLAB_API tl_status tl_space_is_baire(const tl_space* s, int* out);
/* JSON array of point lists */
TOPOLAB_API tl_status tl_space_baire_family_json(const tl_space* s, char** out);
TOPOLAB_API tl_status tl_space_product(const tl_space* const* factors, size_t count, tl_space** out);

/* ---- pairs of topologies on one ground set ---- */

TOPOLAB_API tl_status tl_pair_pi_network(const tl_space* tau, const tl_space* sigma, int* out);
TOPOLAB_API tl_status tl_pair_pi_compatible(const tl_space* tau, const tl_space* sigma, int* out);
TOPOLAB_API tl_status tl_pair_admissible(const tl_space* base, const tl_space* ext, int* out);
TOPOLAB_API tl_status tl_pair_decompose(const tl_space* tau, const tl_space* sigma, tl_points open_set,
                                        tl_points* open_part, tl_points* nowhere_dense_part);
TOPOLAB_API tl_status tl_pair_meet(const tl_space* tau, const tl_space* sigma, tl_space** out);
TOPOLAB_API tl_status tl_pair_gdelta_pi_network(const tl_space* tau, const tl_space* sigma, int* out);

/* ---- ideals; an ideal is given by its generator ---- */

TOPOLAB_API tl_status tl_local_function(const tl_space* s, tl_points ideal, tl_points a, tl_points* out);
TOPOLAB_API tl_status tl_star_closure(const tl_space* s, tl_points ideal, tl_points a, tl_points* out);
TOPOLAB_API tl_status tl_star_topology(const tl_space* s, tl_points ideal, tl_space** out);
TOPOLAB_API tl_status tl_nwd_ideal(const tl_space* s, tl_points* out);
TOPOLAB_API tl_status tl_alpha_topology(const tl_space* s, tl_space** out);
/* witness is set only when *admissible == 0 */
TOPOLAB_API tl_status tl_star_admissible(const tl_space* s, tl_points ideal, int* admissible, tl_points* witness);

/* ---- enumeration and verification ---- */

TOPOLAB_API tl_status tl_enumerate_count(int n, size_t* out);
/* JSON array of spaces in enumeration order */
TOPOLAB_API tl_status tl_enumerate_json(int n, char** out);
/* JSON array of {"id","domain","claim"} */
TOPOLAB_API tl_status tl_theorems_json(char** out);
/* report: {"theorem","n","instances","counterexamples",...,"elapsed_ms"} */
TOPOLAB_API tl_status tl_verify(const char* theorem, int n, int jobs, int allow_large, char** report_json,
                                int* verified);
TOPOLAB_API tl_status tl_search(const char* predicate, int n, int allow_large, char** result_json, int* found);
TOPOLAB_API tl_status tl_predicates_json(char** out);

/* ---- the real line ---- */

TOPOLAB_API tl_status tl_iset_parse(const char* text, tl_iset** out);
TOPOLAB_API void tl_iset_free(tl_iset* s);
TOPOLAB_API tl_status tl_iset_to_string(const tl_iset* s, char** out);
TOPOLAB_API tl_status tl_iset_equal(const tl_iset* a, const tl_iset* b, int* out);

TOPOLAB_API tl_status tl_line_parse(const char* text, tl_line** out);
TOPOLAB_API void tl_line_free(tl_line* t);

TOPOLAB_API tl_status tl_rl_interior(const tl_line* t, const tl_iset* s, tl_iset** out);
TOPOLAB_API tl_status tl_rl_closure(const tl_line* t, const tl_iset* s, tl_iset** out);
TOPOLAB_API tl_status tl_rl_semi_open(const tl_line* t, const tl_iset* s, int* out);

typedef enum tl_order { TL_ORDER_EQUAL = 0, TL_ORDER_FINER = 1, TL_ORDER_COARSER = 2, TL_ORDER_INCOMPARABLE = 3 } tl_order;

/* relation of tau(a) to tau(b) */
TOPOLAB_API tl_status tl_rl_hattori_compare(const tl_iset* a, const tl_iset* b, tl_order* out);
TOPOLAB_API tl_status tl_rl_pi_compatible(const tl_line* t1, const tl_line* t2, int* out);
TOPOLAB_API tl_status tl_rl_admissible(const tl_line* base, const tl_line* ext, int* out);
/* *out is NULL when a is the whole line */
TOPOLAB_API tl_status tl_rl_clopen_witness(const tl_iset* a, tl_iset** out);

/* ---- finite groups ---- */

TOPOLAB_API tl_status tl_group_from_json(const char* json, tl_group** out);
TOPOLAB_API tl_status tl_group_cyclic(int n, tl_group** out);
TOPOLAB_API void tl_group_free(tl_group* g);
TOPOLAB_API tl_status tl_group_order(const tl_group* g, int* out);
/* {"left_translations_continuous",...,"verdict"} */
TOPOLAB_API tl_status tl_group_classify_json(const tl_group* g, const tl_space* t, char** out);
TOPOLAB_API tl_status tl_group_setwise_product(const tl_group* g, tl_points u, tl_points v, tl_points* out);
TOPOLAB_API tl_status tl_group_setwise_inverse(const tl_group* g, tl_points u, tl_points* out);
/* diagnostic may be NULL; otherwise receives a string (empty when it holds) */
TOPOLAB_API tl_status tl_group_almost_topological(const tl_group* g, const tl_space* t, const tl_space* gamma,
                                                  const tl_points* base_at_e, size_t base_count, int* holds,
                                                  char** diagnostic);
TOPOLAB_API tl_status tl_group_hattori(const tl_group* g, const tl_space* t, const tl_space* gamma,
                                       const tl_points* base_at_e, size_t base_count, tl_points a, int force,
                                       tl_space** out, int* valid, char** diagnostic);

#ifdef __cplusplus
}
#endif

#endif /* TOPOLAB_H */
