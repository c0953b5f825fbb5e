#pragma once

// Named surface syntax. Source files are sequences of declarations:
//
//   ctx NAME = (x : TY, ...)
//   coh NAME (x : TY, ...) : TY
//   check TM in NAME : TY
//
// Types are `*`, `TM -> TM` or `[TY] TM -> TM`; terms are variable names,
// `coh NAME [x => TM, ...]`, or parenthesised. Comments run from `--` or `#`
// to the end of the line. The elaborator resolves names to de Bruijn levels.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cattkit/syntax.hpp"

namespace cattkit::surface {

struct Span {
  std::size_t begin = 0;  // byte offsets, end exclusive
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Term;
struct Type;

struct Arg {
  std::string name;
  std::shared_ptr<const Term> value;
};

struct Term {
  enum class Kind { Name, Coh };
  Kind kind = Kind::Name;
  std::string name;  // variable, or the coherence being instantiated
  std::vector<Arg> args;
  Span span;
};

struct Type {
  bool star = true;
  std::shared_ptr<const Type> base;  // explicit `[TY]`, may be null
  std::shared_ptr<const Term> src;
  std::shared_ptr<const Term> tgt;
  Span span;
};

struct Entry {
  std::string name;
  Type type;
  Span span;
};

struct Decl {
  enum class Kind { Ctx, Coh, Check };
  Kind kind = Kind::Ctx;
  std::string name;  // the declared name; for `check`, the context used
  std::vector<Entry> entries;
  Type type;  // Coh, Check
  Term term;  // Check
  Span span;
};

struct SourceFile {
  std::vector<Decl> decls;
};

/// Equality that ignores spans.
bool same(const Term& a, const Term& b);
bool same(const Type& a, const Type& b);
bool same(const SourceFile& a, const SourceFile& b);

/// Throws Error(ParseError) positioned at the offending token; `at()` of the
/// error is the byte offset.
SourceFile parse(std::string_view text);
/// Parses a bare context literal `(x : TY, ...)`.
std::vector<Entry> parse_context(std::string_view text);

std::string print(const Term& t);
std::string print(const Type& t);
std::string print(const std::vector<Entry>& ctx);
std::string print(const Decl& d);
std::string print(const SourceFile& f);

/// Line and column of a byte offset.
Span locate(std::string_view text, std::size_t offset);

// --- elaboration ------------------------------------------------------------

struct NamedCtx {
  Ctx ctx;
  std::vector<std::string> names;
};

struct CohDecl {
  NamedCtx psctx;
  Ty type;
};

/// Declarations seen so far. Kernel terms are built without checking; the
/// caller runs the checker on each result.
class Environment {
 public:
  /// `ctx` declarations; types are elaborated against the prefix.
  NamedCtx elaborate_ctx(const std::vector<Entry>& entries) const;
  Ty elaborate_type(const NamedCtx& scope, const Type& t) const;
  Tm elaborate_term(const NamedCtx& scope, const Term& t) const;

  void add_ctx(const std::string& name, NamedCtx ctx, const Span& span);
  void add_coh(const std::string& name, CohDecl coh, const Span& span);
  const NamedCtx& ctx(const std::string& name, const Span& span) const;
  const CohDecl& coh(const std::string& name, const Span& span) const;

 private:
  void claim(const std::string& name, const Span& span);
  std::map<std::string, NamedCtx> contexts_;
  std::map<std::string, CohDecl> cohs_;
};

/// Renders a kernel type with the variable names of `scope`.
std::string render(const NamedCtx& scope, const Ty& ty);
std::string render(const NamedCtx& scope, const Tm& tm);
std::string render(const NamedCtx& ctx);

}  // namespace cattkit::surface
