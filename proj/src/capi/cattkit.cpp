#include "cattkit/cattkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "cattkit/driver.hpp"
#include "cattkit/surface.hpp"

struct cattkit_document {
  std::string text;
  std::string origin;
  std::size_t decls = 0;
};

struct cattkit_tree {
  cattkit::BataninTree tree;
};

namespace {

using cattkit::driver::Format;
using cattkit::driver::Outcome;

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format format_of(cattkit_format f) { return f == CATTKIT_FORMAT_JSON ? Format::Json : Format::Text; }

cattkit_status fail(cattkit_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

cattkit_status finish(const Outcome& o, char** output) {
  last_error = o.err;
  if (output != nullptr) *output = copy_string(o.out);
  return static_cast<cattkit_status>(o.status);
}

// Runs `body`, converting stray exceptions into status codes.
template <typename F>
cattkit_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const cattkit::Error& e) {
    return fail(static_cast<cattkit_status>(cattkit::driver::status_of(e.kind())), e.describe());
  } catch (const std::exception& e) {
    return fail(CATTKIT_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(CATTKIT_INTERNAL_ERROR, "unknown exception");
  }
}

}  // namespace

extern "C" {

const char* cattkit_version(void) { return "0.1.0"; }

const char* cattkit_last_error(void) { return last_error.c_str(); }

void cattkit_string_free(char* s) { std::free(s); }

cattkit_status cattkit_document_parse(const char* text, size_t length, const char* origin, cattkit_document** out) {
  if (out == nullptr || (text == nullptr && length > 0)) return fail(CATTKIT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    auto doc = std::make_unique<cattkit_document>();
    doc->text.assign(text == nullptr ? "" : text, length);
    doc->origin = origin == nullptr ? "<input>" : origin;
    try {
      doc->decls = cattkit::surface::parse(doc->text).decls.size();
    } catch (const cattkit::Error& e) {
      const auto span = cattkit::surface::locate(doc->text, e.position().value_or(0));
      return fail(CATTKIT_PARSE_FAILED, doc->origin + ":" + std::to_string(span.line) + ":" +
                                            std::to_string(span.column) + ": error: " + e.describe());
    }
    *out = doc.release();
    return CATTKIT_OK;
  });
}

void cattkit_document_free(cattkit_document* doc) { delete doc; }

size_t cattkit_document_decl_count(const cattkit_document* doc) { return doc == nullptr ? 0 : doc->decls; }

cattkit_status cattkit_document_check(const cattkit_document* doc, cattkit_theory theory, cattkit_format format,
                                      char** output) {
  if (doc == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null document");
  return guard([&] {
    const auto th = theory == CATTKIT_THEORY_GSETT ? cattkit::Theory::GSeTT : cattkit::Theory::CaTT;
    return finish(cattkit::driver::check(doc->text, format_of(format), th, doc->origin), output);
  });
}

cattkit_status cattkit_document_translate(const cattkit_document* doc, cattkit_format format, char** output) {
  if (doc == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null document");
  return guard([&] { return finish(cattkit::driver::translate(doc->text, format_of(format), doc->origin), output); });
}

cattkit_status cattkit_document_roundtrip(const cattkit_document* doc, cattkit_format format, char** output) {
  if (doc == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null document");
  return guard([&] { return finish(cattkit::driver::roundtrip(doc->text, format_of(format), doc->origin), output); });
}

cattkit_status cattkit_computad_roundtrip(const char* json, cattkit_format format, char** output) {
  if (json == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null computad");
  return guard([&] { return finish(cattkit::driver::roundtrip(json, format_of(format), "<computad>"), output); });
}

cattkit_status cattkit_enumerate(size_t positions, int exact, cattkit_format format, char** output) {
  return guard([&] { return finish(cattkit::driver::enumerate(positions, exact != 0, format_of(format)), output); });
}

cattkit_status cattkit_tree_convert(const char* spec, const char* to, cattkit_format format, char** output) {
  if (spec == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null tree");
  return guard([&] {
    std::optional<std::string> target;
    if (to != nullptr) target = to;
    return finish(cattkit::driver::tree(spec, target, format_of(format)), output);
  });
}

cattkit_status cattkit_tree_parse(const char* spec, cattkit_tree** out) {
  if (spec == nullptr || out == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = new cattkit_tree{cattkit::driver::read_tree(spec)};
    return CATTKIT_OK;
  });
}

void cattkit_tree_free(cattkit_tree* tree) { delete tree; }

size_t cattkit_tree_position_count(const cattkit_tree* tree) {
  return tree == nullptr ? 0 : cattkit::position_count(tree->tree);
}

int cattkit_tree_dim(const cattkit_tree* tree) { return tree == nullptr ? -1 : cattkit::dim_tree(tree->tree); }

cattkit_status cattkit_tree_render(const cattkit_tree* tree, cattkit_tree_format format, char** output) {
  if (tree == nullptr || output == nullptr) return fail(CATTKIT_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    static const char* const names[] = {"tree", "zigzag", "psctx", "globset"};
    if (format < CATTKIT_TREE_BRACKETS || format > CATTKIT_TREE_GLOBSET)
      return fail(CATTKIT_INVALID_ARGUMENT, "unknown tree format");
    *output = copy_string(cattkit::driver::write_tree(tree->tree, names[format]));
    return CATTKIT_OK;
  });
}

}  // extern "C"
