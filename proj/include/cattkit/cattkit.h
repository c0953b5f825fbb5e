#ifndef CATTKIT_H
#define CATTKIT_H

/* C interface to the cattkit kernel. Strings returned through `char**`
 * out-parameters are owned by the caller and must be released with
 * cattkit_string_free. The last error message is kept per thread. */

#include <stddef.h>

#if defined(CATTKIT_BUILDING_LIBRARY)
#define CATTKIT_API __attribute__((visibility("default")))
#else
#define CATTKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum cattkit_status {
  CATTKIT_OK = 0,
  CATTKIT_CHECK_FAILED = 1,
  CATTKIT_PARSE_FAILED = 2,
  CATTKIT_INTERNAL_ERROR = 3,
  CATTKIT_INVALID_ARGUMENT = 4
} cattkit_status;

typedef enum cattkit_format { CATTKIT_FORMAT_TEXT = 0, CATTKIT_FORMAT_JSON = 1 } cattkit_format;

typedef enum cattkit_theory { CATTKIT_THEORY_CATT = 0, CATTKIT_THEORY_GSETT = 1 } cattkit_theory;

typedef enum cattkit_tree_format {
  CATTKIT_TREE_BRACKETS = 0, /* br[br[],br[]] */
  CATTKIT_TREE_ZIGZAG = 1,   /* (0,1,0,1,0) */
  CATTKIT_TREE_PSCTX = 2,    /* (x0 : *, x1 : *, x2 : x0 -> x1, ...) */
  CATTKIT_TREE_GLOBSET = 3   /* globular-set JSON */
} cattkit_tree_format;

typedef struct cattkit_document cattkit_document;
typedef struct cattkit_tree cattkit_tree;

CATTKIT_API const char* cattkit_version(void);
/* Message of the last failing call on this thread, or "" if none. */
CATTKIT_API const char* cattkit_last_error(void);
CATTKIT_API void cattkit_string_free(char* s);

/* Source documents. The text is copied; parse failures return
 * CATTKIT_PARSE_FAILED and leave *out NULL. */
CATTKIT_API cattkit_status cattkit_document_parse(const char* text, size_t length, const char* origin,
                                                  cattkit_document** out);
CATTKIT_API void cattkit_document_free(cattkit_document* doc);
CATTKIT_API size_t cattkit_document_decl_count(const cattkit_document* doc);

/* Commands. *output receives the command's report (also on check failures);
 * diagnostics are available through cattkit_last_error. */
CATTKIT_API cattkit_status cattkit_document_check(const cattkit_document* doc, cattkit_theory theory,
                                                  cattkit_format format, char** output);
CATTKIT_API cattkit_status cattkit_document_translate(const cattkit_document* doc, cattkit_format format,
                                                      char** output);
CATTKIT_API cattkit_status cattkit_document_roundtrip(const cattkit_document* doc, cattkit_format format,
                                                      char** output);
/* Round trip of a computad given as JSON (see docs/formats.md). */
CATTKIT_API cattkit_status cattkit_computad_roundtrip(const char* json, cattkit_format format, char** output);
CATTKIT_API cattkit_status cattkit_enumerate(size_t positions, int exact, cattkit_format format, char** output);
/* Converts between tree encodings; `to` may be NULL for all four. */
CATTKIT_API cattkit_status cattkit_tree_convert(const char* spec, const char* to, cattkit_format format,
                                                char** output);

/* Batanin trees. Any of the four encodings is accepted by cattkit_tree_parse. */
CATTKIT_API cattkit_status cattkit_tree_parse(const char* spec, cattkit_tree** out);
CATTKIT_API void cattkit_tree_free(cattkit_tree* tree);
CATTKIT_API size_t cattkit_tree_position_count(const cattkit_tree* tree);
CATTKIT_API int cattkit_tree_dim(const cattkit_tree* tree);
CATTKIT_API cattkit_status cattkit_tree_render(const cattkit_tree* tree, cattkit_tree_format format, char** output);

#ifdef __cplusplus
}
#endif

#endif /* CATTKIT_H */
