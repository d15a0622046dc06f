/* Copyright 2026 The rescal Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the rescal engine.
 *
 * The engine implements the simply-typed eta-long resource calculus
 * (parsing, typing, normalization with exact natural coefficients) and its
 * causal game semantics (arenas, augmentations, symmetry-weighted
 * strategies), together with the bijection between normal terms and
 * augmentations and the categorical interpretation that is invariant under
 * reduction.
 *
 * Conventions:
 *   - Handles are opaque; release them with the matching _free function.
 *   - Functions return RESCAL_OK on success.  On error they return a
 *     status code and, when an `error` out-parameter is given, a malloc'd
 *     message to be released with rescal_string_free.
 *   - All returned strings are malloc'd and owned by the caller.
 *   - Term input uses the surface syntax, optionally with a context:
 *     "x:o, f:o -> o |- f [x]".  Augmentations and strategies travel as
 *     JSON documents (see the project README for the schemas).
 */

#ifndef RESCAL_RESCAL_H_
#define RESCAL_RESCAL_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rescal_term rescal_term;
typedef struct rescal_strategy rescal_strategy;

typedef enum rescal_status {
  RESCAL_OK = 0,
  RESCAL_ERR_PARSE = 1,    /* malformed surface syntax */
  RESCAL_ERR_TYPE = 2,     /* term does not typecheck */
  RESCAL_ERR_INVALID = 3,  /* bad JSON, invalid augmentation, bad argument */
  RESCAL_ERR_CHECK = 4,    /* a requested check found a mismatch */
  RESCAL_ERR_INTERNAL = 5  /* engine invariant violation */
} rescal_status;

const char* rescal_version(void);
void rescal_string_free(char* s);

/* --- Terms ------------------------------------------------------------- */

/* Parses "ctx |- term" or a bare term; the term is typechecked. */
rescal_status rescal_term_parse(const char* input, rescal_term** out,
                                char** error);
void rescal_term_free(rescal_term* t);

/* Canonical printing: "ctx |- term" (the context may be empty). */
rescal_status rescal_term_print(const rescal_term* t, char** out);
/* The term's simple type, e.g. "(o -> o) -> o". */
rescal_status rescal_term_type(const rescal_term* t, char** out);

/* Normal form as a printed sum ("0" for the empty sum); fuel 0 selects the
 * default step budget. */
rescal_status rescal_term_normalize(const rescal_term* t, uint64_t fuel,
                                    char** out, char** error);

/* Encoding of a normal term as an augmentation (JSON). */
rescal_status rescal_term_encode(const rescal_term* t, char** aug_json,
                                 char** error);
/* Inverse: decodes an augmentation JSON at "ctx |- type" back to a term. */
rescal_status rescal_decode(const char* aug_json, const char* judgment,
                            char** term_out, char** error);

/* Interpretation of a (not necessarily normal) term as a strategy. */
rescal_status rescal_term_interpret(const rescal_term* t,
                                    rescal_strategy** out, char** error);

/* --- Strategies --------------------------------------------------------- */

rescal_status rescal_strategy_parse(const char* json, rescal_strategy** out,
                                    char** error);
void rescal_strategy_free(rescal_strategy* s);
rescal_status rescal_strategy_to_json(const rescal_strategy* s, char** out);

/* Composition g . f (f's right interface must match g's left). */
rescal_status rescal_compose(const rescal_strategy* g, const rescal_strategy* f,
                             rescal_strategy** out, char** error);

/* --- Checks and export --------------------------------------------------- */

/* Runs the categorical law suite over the arena of `type` at the given
 * window.  Returns RESCAL_OK when all laws hold, RESCAL_ERR_CHECK when some
 * fail; `report` gets one line per law either way. */
rescal_status rescal_check_laws(const char* type, int window, char** report,
                                char** error);

/* Interprets `count` random typed terms (seeded) and verifies each equals
 * the encoded normal form, with exact coefficients.  RESCAL_ERR_CHECK on
 * any mismatch; `report` is a JSON summary. */
rescal_status rescal_soundness(int count, uint64_t seed, char** report,
                               char** error);

/* DOT rendering of the arena of a type, or of a term's encoding
 * ("arena" / "term"). */
rescal_status rescal_export_dot(const char* what, const char* input,
                                char** dot, char** error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RESCAL_RESCAL_H_ */
