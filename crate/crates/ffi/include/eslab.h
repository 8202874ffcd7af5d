/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef ESLAB_H
#define ESLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a library call.
typedef enum EslabStatus {
  ESLAB_STATUS_OK = 0,
  // A required pointer argument was null.
  ESLAB_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  ESLAB_STATUS_INVALID_UTF8 = 2,
  // Malformed text input.
  ESLAB_STATUS_SYNTAX_ERROR = 3,
  // Well-formed input describing an invalid structure or labelling.
  ESLAB_STATUS_INVALID_INPUT = 4,
  // A size or search limit was reached.
  ESLAB_STATUS_LIMIT_EXCEEDED = 5,
  // The structure is outside the scope of the requested algorithm.
  ESLAB_STATUS_UNSUPPORTED = 6,
  // A bound that should hold failed; indicates a bug or a counterexample.
  ESLAB_STATUS_THEORY_VIOLATION = 7,
  // A Rust panic was caught at the boundary.
  ESLAB_STATUS_PANIC = 8,
} EslabStatus;

// Opaque labelling handle.
typedef struct EslabLabelling EslabLabelling;

// Opaque event structure handle.
typedef struct EslabStructure EslabStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses the text format into a new structure.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum EslabStatus eslab_structure_parse(const char *text, struct EslabStructure **out);

// Builds one of the named fixtures.
//
// # Safety
// `name` must be a nul-terminated string and `out` a valid pointer.
enum EslabStatus eslab_structure_fixture(const char *name, struct EslabStructure **out);

// Generates a structure; `kind` is `random`, `forest` or `simple`.
//
// # Safety
// `kind` must be a nul-terminated string and `out` a valid pointer.
enum EslabStatus eslab_structure_generate(const char *kind,
                                          size_t events,
                                          uint64_t seed,
                                          struct EslabStructure **out);

// Releases a structure. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void eslab_structure_free(struct EslabStructure *s);

// Number of events, or 0 for null.
//
// # Safety
// `s` must be null or a live structure.
size_t eslab_structure_event_count(const struct EslabStructure *s);

// Clique number of the orthogonality graph, or 0 for null.
//
// # Safety
// `s` must be null or a live structure.
size_t eslab_structure_degree(const struct EslabStructure *s);

// Largest antichain size, or 0 for null.
//
// # Safety
// `s` must be null or a live structure.
size_t eslab_structure_width(const struct EslabStructure *s);

// Canonical text form; free the result with [`eslab_string_free`].
//
// # Safety
// `s` must be a live structure and `out` a valid pointer.
enum EslabStatus eslab_structure_serialize(const struct EslabStructure *s, char **out);

// Labels with the named strategy: `exact`, `dilworth`, `stratified`,
// `forest`, `simple` or `greedy`.
//
// # Safety
// `s` must be a live structure, `strategy` a nul-terminated string and
// `out` a valid pointer.
enum EslabStatus eslab_label(const struct EslabStructure *s,
                             const char *strategy,
                             struct EslabLabelling **out);

// Reads a labelling file for `s`.
//
// # Safety
// `s` must be a live structure, `text` a nul-terminated string and `out` a
// valid pointer.
enum EslabStatus eslab_labelling_parse(const struct EslabStructure *s,
                                       const char *text,
                                       struct EslabLabelling **out);

// Releases a labelling. Null is ignored.
//
// # Safety
// `l` must come from this library and not be used afterwards.
void eslab_labelling_free(struct EslabLabelling *l);

// Alphabet size, or 0 for null.
//
// # Safety
// `l` must be null or a live labelling.
size_t eslab_labelling_alphabet_size(const struct EslabLabelling *l);

// Letter of the event named `event`.
//
// # Safety
// `l` must be a live labelling, `event` a nul-terminated string and
// `letter` a valid pointer.
enum EslabStatus eslab_labelling_letter(const struct EslabLabelling *l,
                                        const char *event,
                                        size_t *letter);

// Counts orthogonal pairs sharing a letter; zero means the labelling is nice.
//
// # Safety
// `s` and `l` must be live handles and `clashes` a valid pointer.
enum EslabStatus eslab_labelling_verify(const struct EslabStructure *s,
                                        const struct EslabLabelling *l,
                                        size_t *clashes);

// Labelling file text; free the result with [`eslab_string_free`].
//
// # Safety
// `l` must be a live labelling and `out` a valid pointer.
enum EslabStatus eslab_labelling_serialize(const struct EslabLabelling *l, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void eslab_string_free(char *s);

// Message of the last failure on this thread, or null. Valid until the
// next failing call on the same thread.
const char *eslab_last_error_message(void);

// Error kind name of the last failure on this thread (for example
// `NotAForest`), or null. The string is static.
const char *eslab_last_error_kind(void);

// Clears the last error on this thread.
void eslab_clear_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ESLAB_H */
