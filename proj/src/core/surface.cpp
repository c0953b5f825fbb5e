#include "cattkit/surface.hpp"

#include <cctype>
#include <set>

#include "cattkit/catt.hpp"

namespace cattkit::surface {

namespace {

enum class Tok { Ident, Ctx, Coh, Check, In, LParen, RParen, LBracket, RBracket, Comma, Colon, Equals, Star, Arrow, MapsTo, End };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "a name";
    case Tok::Ctx: return "`ctx`";
    case Tok::Coh: return "`coh`";
    case Tok::Check: return "`check`";
    case Tok::In: return "`in`";
    case Tok::LParen: return "`(`";
    case Tok::RParen: return "`)`";
    case Tok::LBracket: return "`[`";
    case Tok::RBracket: return "`]`";
    case Tok::Comma: return "`,`";
    case Tok::Colon: return "`:`";
    case Tok::Equals: return "`=`";
    case Tok::Star: return "`*`";
    case Tok::Arrow: return "`->`";
    case Tok::MapsTo: return "`=>`";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

bool ident_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c == '.' || c >= 0x80; }

[[noreturn]] void fail(const Span& span, const std::string& message) {
  throw Error(ErrorKind::ParseError, message).at(span.begin);
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto span = [&](std::size_t b, std::size_t e) { return Span{b, e, line, b - line_start + 1}; };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#' || text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    auto sym = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(text.substr(i, len)), span(i, i + len)});
      i += len;
    };
    if (text.substr(i, 2) == "->") { sym(Tok::Arrow, 2); continue; }
    if (text.substr(i, 2) == "=>") { sym(Tok::MapsTo, 2); continue; }
    switch (c) {
      case '(': sym(Tok::LParen, 1); continue;
      case ')': sym(Tok::RParen, 1); continue;
      case '[': sym(Tok::LBracket, 1); continue;
      case ']': sym(Tok::RBracket, 1); continue;
      case ',': sym(Tok::Comma, 1); continue;
      case ':': sym(Tok::Colon, 1); continue;
      case '=': sym(Tok::Equals, 1); continue;
      case '*': sym(Tok::Star, 1); continue;
      default: break;
    }
    if (ident_byte(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_byte(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "ctx") kind = Tok::Ctx;
      else if (word == "coh") kind = Tok::Coh;
      else if (word == "check") kind = Tok::Check;
      else if (word == "in") kind = Tok::In;
      out.push_back({kind, std::move(word), span(i, j)});
      i = j;
      continue;
    }
    fail(span(i, i + 1), "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  out.push_back({Tok::End, "", span(text.size(), text.size())});
  return out;
}

Span join(const Span& a, const Span& b) { return {a.begin, b.end, a.line, a.column}; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceFile file() {
    SourceFile f;
    while (peek().kind != Tok::End) f.decls.push_back(decl());
    return f;
  }

  std::vector<Entry> context_only() {
    auto entries = context();
    expect(Tok::End);
    return entries;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  const Token& expect(Tok kind) {
    if (peek().kind != kind) {
      const Token& t = peek();
      fail(t.span, "expected " + std::string(describe(kind)) + ", found " +
                       (t.kind == Tok::End ? std::string("end of input") : "`" + t.text + "`"));
    }
    return next();
  }
  Span last_span() const { return toks_[pos_ == 0 ? 0 : pos_ - 1].span; }

  Decl decl() {
    Decl d;
    const Token& head = peek();
    switch (head.kind) {
      case Tok::Ctx:
        next();
        d.kind = Decl::Kind::Ctx;
        d.name = expect(Tok::Ident).text;
        expect(Tok::Equals);
        d.entries = context();
        break;
      case Tok::Coh:
        next();
        d.kind = Decl::Kind::Coh;
        d.name = expect(Tok::Ident).text;
        d.entries = context();
        expect(Tok::Colon);
        d.type = type();
        break;
      case Tok::Check:
        next();
        d.kind = Decl::Kind::Check;
        d.term = term();
        expect(Tok::In);
        d.name = expect(Tok::Ident).text;
        expect(Tok::Colon);
        d.type = type();
        break;
      default:
        fail(head.span, "expected a declaration (`ctx`, `coh` or `check`), found " +
                            (head.kind == Tok::End ? std::string("end of input") : "`" + head.text + "`"));
    }
    d.span = join(head.span, last_span());
    return d;
  }

  std::vector<Entry> context() {
    std::vector<Entry> out;
    expect(Tok::LParen);
    if (accept(Tok::RParen)) return out;
    do {
      Entry e;
      const Token& name = expect(Tok::Ident);
      e.name = name.text;
      expect(Tok::Colon);
      e.type = type();
      e.span = join(name.span, last_span());
      out.push_back(std::move(e));
    } while (accept(Tok::Comma));
    expect(Tok::RParen);
    return out;
  }

  Type type() {
    const Span start = peek().span;
    if (accept(Tok::Star)) {
      Type t;
      t.span = start;
      return t;
    }
    if (peek().kind == Tok::LParen) {
      // Either a parenthesised type or an arrow whose source is parenthesised.
      const std::size_t saved = pos_;
      try {
        next();
        Type inner = type();
        expect(Tok::RParen);
        no_trailing_arrow();
        inner.span = join(start, last_span());
        return inner;
      } catch (const Error&) {
        pos_ = saved;
      }
    }
    Type t;
    t.star = false;
    if (accept(Tok::LBracket)) {
      t.base = std::make_shared<const Type>(type());
      expect(Tok::RBracket);
    }
    t.src = std::make_shared<const Term>(term());
    expect(Tok::Arrow);
    t.tgt = std::make_shared<const Term>(term());
    no_trailing_arrow();
    t.span = join(start, last_span());
    return t;
  }

  void no_trailing_arrow() {
    if (peek().kind == Tok::Arrow) fail(peek().span, "`->` builds a type, not a term; arrows do not nest");
  }

  Term term() {
    const Token& head = peek();
    Term t;
    if (accept(Tok::LParen)) {
      t = term();
      expect(Tok::RParen);
      t.span = join(head.span, last_span());
      return t;
    }
    if (accept(Tok::Coh)) {
      t.kind = Term::Kind::Coh;
      t.name = expect(Tok::Ident).text;
      expect(Tok::LBracket);
      if (!accept(Tok::RBracket)) {
        do {
          Arg a;
          a.name = expect(Tok::Ident).text;
          expect(Tok::MapsTo);
          a.value = std::make_shared<const Term>(term());
          t.args.push_back(std::move(a));
        } while (accept(Tok::Comma));
        expect(Tok::RBracket);
      }
      t.span = join(head.span, last_span());
      return t;
    }
    if (head.kind != Tok::Ident)
      fail(head.span, "expected a term, found " +
                          (head.kind == Tok::End ? std::string("end of input") : "`" + head.text + "`"));
    t.name = next().text;
    t.span = head.span;
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

bool same(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (a.args[i].name != b.args[i].name || !same(*a.args[i].value, *b.args[i].value)) return false;
  return true;
}

bool same(const Type& a, const Type& b) {
  if (a.star != b.star) return false;
  if (a.star) return true;
  if (static_cast<bool>(a.base) != static_cast<bool>(b.base)) return false;
  if (a.base && !same(*a.base, *b.base)) return false;
  return same(*a.src, *b.src) && same(*a.tgt, *b.tgt);
}

namespace {

bool same_entries(const std::vector<Entry>& a, const std::vector<Entry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || !same(a[i].type, b[i].type)) return false;
  return true;
}

}  // namespace

bool same(const SourceFile& a, const SourceFile& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const Decl& x = a.decls[i];
    const Decl& y = b.decls[i];
    if (x.kind != y.kind || x.name != y.name || !same_entries(x.entries, y.entries)) return false;
    if (x.kind != Decl::Kind::Ctx && !same(x.type, y.type)) return false;
    if (x.kind == Decl::Kind::Check && !same(x.term, y.term)) return false;
  }
  return true;
}

SourceFile parse(std::string_view text) { return Parser(lex(text)).file(); }

std::vector<Entry> parse_context(std::string_view text) { return Parser(lex(text)).context_only(); }

std::string print(const Term& t) {
  if (t.kind == Term::Kind::Name) return t.name;
  std::string out = "coh " + t.name + " [";
  for (std::size_t i = 0; i < t.args.size(); ++i)
    out += (i ? ", " : "") + t.args[i].name + " => " + print(*t.args[i].value);
  return out + "]";
}

std::string print(const Type& t) {
  if (t.star) return "*";
  std::string out = t.base ? "[" + print(*t.base) + "] " : "";
  return out + print(*t.src) + " -> " + print(*t.tgt);
}

std::string print(const std::vector<Entry>& ctx) {
  std::string out = "(";
  for (std::size_t i = 0; i < ctx.size(); ++i) out += (i ? ", " : "") + ctx[i].name + " : " + print(ctx[i].type);
  return out + ")";
}

std::string print(const Decl& d) {
  switch (d.kind) {
    case Decl::Kind::Ctx: return "ctx " + d.name + " = " + print(d.entries);
    case Decl::Kind::Coh: return "coh " + d.name + " " + print(d.entries) + " : " + print(d.type);
    case Decl::Kind::Check: return "check " + print(d.term) + " in " + d.name + " : " + print(d.type);
  }
  return {};
}

std::string print(const SourceFile& f) {
  std::string out;
  for (const Decl& d : f.decls) out += print(d) + "\n";
  return out;
}

Span locate(std::string_view text, std::size_t offset) {
  Span s{offset, offset, 1, 1};
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++s.line;
      line_start = i + 1;
    }
  }
  s.column = offset - line_start + 1;
  return s;
}

// --- elaboration ------------------------------------------------------------

namespace {

[[noreturn]] void name_error(ErrorKind kind, const Span& span, const std::string& message) {
  throw Error(kind, message).at(span.begin);
}

Ty type_of(const NamedCtx& scope, const Tm& tm) {
  if (tm.is_var()) return scope.ctx[tm.index()];
  return catt::infer_coh(scope.ctx, tm);
}

}  // namespace

NamedCtx Environment::elaborate_ctx(const std::vector<Entry>& entries) const {
  NamedCtx scope;
  for (const Entry& e : entries) {
    for (const std::string& n : scope.names)
      if (n == e.name) name_error(ErrorKind::DuplicateName, e.span, "variable `" + e.name + "` is declared twice");
    Ty ty = elaborate_type(scope, e.type);
    scope.ctx = scope.ctx.extended(std::move(ty));
    scope.names.push_back(e.name);
  }
  return scope;
}

Ty Environment::elaborate_type(const NamedCtx& scope, const Type& t) const {
  if (t.star) return Ty::obj();
  Tm src = elaborate_term(scope, *t.src);
  Tm tgt = elaborate_term(scope, *t.tgt);
  Ty base = t.base ? elaborate_type(scope, *t.base) : type_of(scope, src);
  return Ty::arr(std::move(base), std::move(src), std::move(tgt));
}

Tm Environment::elaborate_term(const NamedCtx& scope, const Term& t) const {
  if (t.kind == Term::Kind::Name) {
    for (std::size_t i = scope.names.size(); i-- > 0;)
      if (scope.names[i] == t.name) return Tm::var(i);
    name_error(ErrorKind::UnknownName, t.span, "unknown variable `" + t.name + "`");
  }
  const CohDecl& decl = coh(t.name, t.span);
  std::vector<std::optional<Tm>> slots(decl.psctx.names.size());
  for (const Arg& a : t.args) {
    std::size_t k = 0;
    while (k < decl.psctx.names.size() && decl.psctx.names[k] != a.name) ++k;
    if (k == decl.psctx.names.size())
      name_error(ErrorKind::UnknownName, t.span, "coherence `" + t.name + "` has no variable `" + a.name + "`");
    if (slots[k])
      name_error(ErrorKind::DuplicateName, t.span, "variable `" + a.name + "` is assigned twice");
    slots[k] = elaborate_term(scope, *a.value);
  }
  Sub sub;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k])
      name_error(ErrorKind::UnknownName, t.span,
                 "coherence `" + t.name + "` needs a value for `" + decl.psctx.names[k] + "`");
    sub.terms.push_back(*slots[k]);
  }
  return Tm::coh(decl.psctx.ctx, decl.type, std::move(sub));
}

void Environment::claim(const std::string& name, const Span& span) {
  if (contexts_.count(name) || cohs_.count(name))
    name_error(ErrorKind::DuplicateName, span, "`" + name + "` is already declared");
}

void Environment::add_ctx(const std::string& name, NamedCtx ctx, const Span& span) {
  claim(name, span);
  contexts_.emplace(name, std::move(ctx));
}

void Environment::add_coh(const std::string& name, CohDecl coh, const Span& span) {
  claim(name, span);
  cohs_.emplace(name, std::move(coh));
}

const NamedCtx& Environment::ctx(const std::string& name, const Span& span) const {
  auto it = contexts_.find(name);
  if (it == contexts_.end()) name_error(ErrorKind::UnknownName, span, "unknown context `" + name + "`");
  return it->second;
}

const CohDecl& Environment::coh(const std::string& name, const Span& span) const {
  auto it = cohs_.find(name);
  if (it == cohs_.end()) name_error(ErrorKind::UnknownName, span, "unknown coherence `" + name + "`");
  return it->second;
}

std::string render(const NamedCtx& scope, const Tm& tm) {
  if (tm.is_var()) return tm.index() < scope.names.size() ? scope.names[tm.index()] : "#" + std::to_string(tm.index());
  NamedCtx inner;
  inner.ctx = tm.psctx();
  for (std::size_t i = 0; i < tm.psctx().size(); ++i) inner.names.push_back("x" + std::to_string(i));
  std::string out = "coh{" + render(inner) + " : " + render(inner, tm.coh_type()) + "} [";
  for (std::size_t i = 0; i < tm.sub().size(); ++i)
    out += (i ? ", " : "") + inner.names[i] + " => " + render(scope, tm.sub()[i]);
  return out + "]";
}

std::string render(const NamedCtx& scope, const Ty& ty) {
  if (ty.is_obj()) return "*";
  return render(scope, ty.src()) + " -> " + render(scope, ty.tgt());
}

std::string render(const NamedCtx& ctx) {
  std::string out = "(";
  for (std::size_t i = 0; i < ctx.ctx.size(); ++i) {
    out += (i ? ", " : "") + ctx.names[i] + " : " + render(ctx, ctx.ctx[i]);
  }
  return out + ")";
}

}  // namespace cattkit::surface
