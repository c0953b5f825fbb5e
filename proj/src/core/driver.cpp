#include "cattkit/driver.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "cattkit/catt.hpp"
#include "cattkit/serialize.hpp"
#include "cattkit/surface.hpp"
#include "cattkit/translation.hpp"

namespace cattkit::driver {

Status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::DuplicateName:
    case ErrorKind::InvalidTree:
      return ParseFailure;
    case ErrorKind::InternalInvariant:
      return InternalFailure;
    default:
      return CheckFailure;
  }
}

std::size_t max_positions() {
  const char* raw = std::getenv("CATTKIT_MAX_POSITIONS");
  if (raw == nullptr || *raw == '\0') return 9;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0') return 9;
  return value;
}

namespace {

using surface::NamedCtx;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string name_set(const IndexSet& set, const std::vector<std::string>* names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set) {
    out += first ? "" : ",";
    out += names && i < names->size() ? (*names)[i] : "#" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

struct Diagnostic {
  Error error;
  surface::Span span;
  std::vector<std::string> names;  // for index sets in side-condition errors
};

std::string render(const Diagnostic& d, std::string_view origin) {
  std::ostringstream out;
  out << origin << ":" << d.span.line << ":" << d.span.column << ": error: ";
  bool head = true;
  for (const Error* e = &d.error; e != nullptr; e = e->cause()) {
    if (!head) out << "\n  caused by ";
    out << to_string(e->kind()) << ": " << e->what();
    if (!e->expected().empty() || !e->actual().empty())
      out << " (expected " << name_set(e->expected(), &d.names) << ", found " << name_set(e->actual(), &d.names)
          << ")";
    head = false;
  }
  out << "\n";
  return out.str();
}

Json to_json(const Diagnostic& d) {
  Json causes = Json::array();
  for (const Error* e = d.error.cause(); e != nullptr; e = e->cause())
    causes.push_back({{"kind", std::string(to_string(e->kind()))}, {"message", e->what()}});
  Json j = {{"severity", "error"},
            {"kind", std::string(to_string(d.error.kind()))},
            {"message", d.error.what()},
            {"line", d.span.line},
            {"column", d.span.column},
            {"causes", causes}};
  if (!d.error.expected().empty() || !d.error.actual().empty()) {
    j["expected"] = name_set(d.error.expected(), &d.names);
    j["found"] = name_set(d.error.actual(), &d.names);
  }
  return j;
}

std::string_view status_name(int status) {
  switch (status) {
    case Ok: return "ok";
    case CheckFailure: return "check-failure";
    case ParseFailure: return "parse-failure";
    default: return "internal-failure";
  }
}

struct CheckedDecl {
  const surface::Decl* decl = nullptr;
  NamedCtx scope;
  std::optional<CheckedCtx> ctx;  // Ctx declarations
  std::string summary;
  Json detail;
};

struct Session {
  surface::SourceFile file;
  std::vector<CheckedDecl> decls;
  std::optional<Diagnostic> failure;
  int status = Ok;
};

CheckedCtx check_ctx_in(Theory theory, const Ctx& ctx) {
  return theory == Theory::CaTT ? catt::check_ctx(ctx) : gsett::check_ctx(ctx);
}

CheckedDecl check_decl(const surface::Decl& d, surface::Environment& env, Theory theory,
                       std::vector<std::string>& names) {
  CheckedDecl out;
  out.decl = &d;
  switch (d.kind) {
    case surface::Decl::Kind::Ctx: {
      out.scope = env.elaborate_ctx(d.entries);
      names = out.scope.names;
      out.ctx = check_ctx_in(theory, out.scope.ctx);
      env.add_ctx(d.name, out.scope, d.span);
      out.summary = "ctx " + d.name + ": ok (" + std::to_string(out.scope.ctx.size()) + " variables, dimension " +
                    std::to_string(out.ctx->dim()) + ")";
      out.detail = {{"variables", out.scope.ctx.size()}, {"dim", out.ctx->dim()}};
      break;
    }
    case surface::Decl::Kind::Coh: {
      out.scope = env.elaborate_ctx(d.entries);
      names = out.scope.names;
      if (theory == Theory::GSeTT)
        throw Error(ErrorKind::CohNotAllowedInGSeTT, "coherence declarations need CaTT");
      const Ty ty = env.elaborate_type(out.scope, d.type);
      const CheckedCtx checked = catt::check_ctx(out.scope.ctx);
      catt::infer(checked, Tm::coh(out.scope.ctx, ty, identity_sub(out.scope.ctx.size())));
      env.add_coh(d.name, {out.scope, ty}, d.span);
      const PsCtx ps = check_ps(out.scope.ctx);
      const std::string tree = to_string(tree_of_psctx(ps));
      out.summary = "coh " + d.name + ": ok : " + surface::render(out.scope, ty) + " over " + tree;
      out.detail = {{"type", surface::render(out.scope, ty)},
                    {"tree", tree},
                    {"derivation", ps.derivation().to_string()}};
      break;
    }
    case surface::Decl::Kind::Check: {
      const surface::Span at = d.term.span;
      out.scope = env.ctx(d.name, at);
      names = out.scope.names;
      const Tm tm = env.elaborate_term(out.scope, d.term);
      const Ty ty = env.elaborate_type(out.scope, d.type);
      const CheckedCtx checked = check_ctx_in(theory, out.scope.ctx);
      if (theory == Theory::CaTT) catt::check_tm(checked, tm, ty);
      else gsett::check_tm(checked, tm, ty);
      out.summary = "check " + surface::print(d.term) + " in " + d.name + ": ok";
      out.detail = {{"term", surface::render(out.scope, tm)}, {"type", surface::render(out.scope, ty)}};
      break;
    }
  }
  return out;
}

Session run(std::string_view source, Theory theory) {
  Session s;
  try {
    s.file = surface::parse(source);
  } catch (const Error& e) {
    s.status = status_of(e.kind());
    s.failure = Diagnostic{e, surface::locate(source, e.position().value_or(0)), {}};
    return s;
  }
  surface::Environment env;
  for (const surface::Decl& d : s.file.decls) {
    std::vector<std::string> names;
    try {
      s.decls.push_back(check_decl(d, env, theory, names));
    } catch (const Error& e) {
      s.status = status_of(e.kind());
      const bool located = s.status == ParseFailure && e.position();
      s.failure = Diagnostic{e, located ? surface::locate(source, *e.position()) : d.span, names};
      return s;
    } catch (const std::exception& e) {
      s.status = InternalFailure;
      s.failure = Diagnostic{Error(ErrorKind::InternalInvariant, e.what()), d.span, {}};
      return s;
    }
  }
  return s;
}

std::string_view kind_name(surface::Decl::Kind k) {
  switch (k) {
    case surface::Decl::Kind::Ctx: return "ctx";
    case surface::Decl::Kind::Coh: return "coh";
    case surface::Decl::Kind::Check: return "check";
  }
  return "?";
}

// Fills in the failure part of an outcome; returns true if there was one.
bool report_failure(const Session& s, Format format, std::string_view origin, Outcome& o) {
  if (!s.failure) return false;
  o.status = s.status;
  o.err = render(*s.failure, origin);
  if (format == Format::Json)
    o.out = dump({{"status", std::string(status_name(s.status))}, {"diagnostics", Json::array({to_json(*s.failure)})}});
  return true;
}

GenNames names_of(const Translation& t, const std::vector<std::string>& vars) {
  GenNames names(static_cast<std::size_t>(t.computad.dim() + 1));
  for (int n = 0; n <= t.computad.dim(); ++n) names[n].resize(t.computad.count(n));
  for (std::size_t i = 0; i < t.vars.size(); ++i)
    names[t.vars[i].dim][t.vars[i].index] = i < vars.size() ? vars[i] : "x" + std::to_string(i);
  return names;
}

std::string render_cell(const Cell& c, const GenNames& names);

std::string render_sphere(const Sphere& s, const GenNames& names) {
  if (s.is_unit()) return "()";
  return render_cell(s.src(), names) + " -> " + render_cell(s.tgt(), names);
}

std::string render_cell(const Cell& c, const GenNames& names) {
  if (c.is_gen()) {
    const GenRef g = c.generator();
    if (static_cast<std::size_t>(g.dim) < names.size() && g.index < names[g.dim].size())
      return names[g.dim][g.index];
    return "v" + std::to_string(g.dim) + "." + std::to_string(g.index);
  }
  std::string out = "coh(" + to_string(c.tree()) + "; " + render_sphere(c.sphere(), {}) + "; ";
  const auto& images = c.map().images;
  bool first = true;
  for (std::size_t n = 0; n < images.size(); ++n)
    for (std::size_t i = 0; i < images[n].size(); ++i) {
      out += (first ? "" : ", ") + ("v" + std::to_string(n) + "." + std::to_string(i)) + "=" +
             render_cell(images[n][i], names);
      first = false;
    }
  return out + ")";
}

std::string render_computad(const Computad& c, const GenNames& names) {
  std::string out;
  for (int n = 0; n <= c.dim(); ++n) {
    out += "  dim " + std::to_string(n) + ":";
    for (std::size_t i = 0; i < c.count(n); ++i) {
      out += " " + render_cell(Cell::gen({n, i}), names);
      if (n > 0) out += " : " + render_sphere(c.attach({n, i}), names);
      if (n > 0 && i + 1 < c.count(n)) out += ";";
    }
    out += "\n";
  }
  return out;
}

NamedCtx default_names(const Ctx& ctx) {
  NamedCtx named{ctx, {}};
  for (std::size_t i = 0; i < ctx.size(); ++i) named.names.push_back("x" + std::to_string(i));
  return named;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    Outcome o;
    o.status = status_of(e.kind());
    o.err = "error: " + e.describe() + "\n";
    return o;
  } catch (const std::exception& e) {
    return {InternalFailure, "", std::string("error: InternalInvariant: ") + e.what() + "\n"};
  }
}

}  // namespace

Outcome check(std::string_view source, Format format, Theory theory, std::string_view origin) {
  return guarded([&] {
    Outcome o;
    const Session s = run(source, theory);
    Json decls = Json::array();
    for (const CheckedDecl& d : s.decls) {
      o.out += format == Format::Text ? d.summary + "\n" : "";
      Json j = {{"kind", std::string(kind_name(d.decl->kind))}, {"name", d.decl->name}, {"status", "ok"}};
      j.update(d.detail);
      decls.push_back(std::move(j));
    }
    Json diagnostics = Json::array();
    if (s.failure) {
      o.status = s.status;
      o.err = render(*s.failure, origin);
      diagnostics.push_back(to_json(*s.failure));
    } else if (format == Format::Text) {
      o.out += "ok: " + std::to_string(s.decls.size()) + " declarations\n";
    }
    if (format == Format::Json)
      o.out = dump({{"status", std::string(status_name(o.status))},
                    {"theory", theory == Theory::CaTT ? "catt" : "gsett"},
                    {"declarations", decls},
                    {"diagnostics", diagnostics}});
    return o;
  });
}

Outcome translate(std::string_view source, Format format, std::string_view origin) {
  return guarded([&] {
    Outcome o;
    const Session s = run(source, Theory::CaTT);
    if (report_failure(s, format, origin, o)) return o;
    Json contexts = Json::array();
    for (const CheckedDecl& d : s.decls) {
      if (d.decl->kind != surface::Decl::Kind::Ctx) continue;
      const Translation t = r_ctx(*d.ctx);
      const GenNames names = names_of(t, d.scope.names);
      if (format == Format::Json)
        contexts.push_back({{"name", d.decl->name}, {"computad", to_json(t.computad, names)}});
      else
        o.out += "ctx " + d.decl->name + "\n" + render_computad(t.computad, names);
    }
    if (format == Format::Json) o.out = dump({{"status", "ok"}, {"contexts", contexts}});
    return o;
  });
}

BataninTree read_tree(std::string_view spec) {
  std::size_t start = 0;
  while (start < spec.size() && std::isspace(static_cast<unsigned char>(spec[start]))) ++start;
  const std::string_view body = spec.substr(start);
  if (body.rfind("br", 0) == 0) return parse_tree(body);
  if (!body.empty() && body[0] == '{')
    return tree_of_zig(zig(GlobCardinal::from(globset_from_json(parse_json(body)))));
  if (body.find(':') != std::string_view::npos) {
    const NamedCtx named = surface::Environment().elaborate_ctx(surface::parse_context(body));
    return tree_of_psctx(check_ps(named.ctx));
  }
  if (!body.empty() && body[0] == '(') return tree_of_zig(parse_zigzag(body));
  throw Error(ErrorKind::ParseError, "expected a tree, a zigzag, a pasting context or globular-set JSON");
}

std::string write_tree(const BataninTree& b, std::string_view to) {
  if (to == "tree") return to_string(b);
  if (to == "zigzag") return to_string(zig_of_tree(b));
  if (to == "psctx") return surface::render(default_names(psctx_of_tree(b).ctx()));
  if (to == "globset") return to_json(pos(b).cardinal.set()).dump();
  throw Error(ErrorKind::ParseError, "unknown tree format `" + std::string(to) + "` (tree, zigzag, psctx, globset)");
}

Outcome tree(std::string_view spec, std::optional<std::string> to, Format format) {
  return guarded([&] {
    const BataninTree b = read_tree(spec);
    Outcome o;
    const std::vector<std::string> keys = to ? std::vector<std::string>{*to}
                                             : std::vector<std::string>{"tree", "zigzag", "psctx", "globset"};
    Json all = Json::object();
    for (const std::string& key : keys) {
      const std::string value = write_tree(b, key);
      if (format == Format::Json) all[key] = key == "globset" ? parse_json(value) : Json(value);
      else o.out += (to ? "" : key + ": ") + value + "\n";
    }
    if (format == Format::Json) o.out = dump(all);
    return o;
  });
}

Outcome roundtrip(std::string_view source, Format format, std::string_view origin) {
  return guarded([&] {
    Outcome o;
    Json results = Json::array();
    auto one = [&](const std::string& name, const Computad& c) {
      const ContextOfComputad back = ctx_of_computad(c);
      const auto iso = iso_computads(c, back.translation.computad);
      if (!iso) throw Error(ErrorKind::InternalInvariant, "no isomorphism between " + name + " and its round trip");
      const std::string ctx_text = surface::render(default_names(back.ctx.ctx()));
      if (format == Format::Json)
        results.push_back({{"name", name}, {"generators", c.total()}, {"iso", true}, {"context", ctx_text}});
      else
        o.out += name + ": " + std::to_string(c.total()) + " generators, isomorphic after round trip\n  " +
                 ctx_text + "\n";
    };

    std::size_t start = 0;
    while (start < source.size() && std::isspace(static_cast<unsigned char>(source[start]))) ++start;
    if (start < source.size() && source[start] == '{') {
      const Computad c = computad_from_json(parse_json(source.substr(start)));
      check_computad(c);
      one("computad", c);
    } else {
      const Session s = run(source, Theory::CaTT);
      if (report_failure(s, format, origin, o)) return o;
      for (const CheckedDecl& d : s.decls)
        if (d.decl->kind == surface::Decl::Kind::Ctx) one(d.decl->name, r_ctx(*d.ctx).computad);
    }
    if (format == Format::Json) o.out = dump({{"status", "ok"}, {"results", results}});
    return o;
  });
}

Outcome enumerate(std::size_t positions, bool exact, Format format) {
  return guarded([&] {
    const std::size_t cap = max_positions();
    if (positions > cap)
      throw Error(ErrorKind::ParseError, "--positions " + std::to_string(positions) +
                                             " exceeds CATTKIT_MAX_POSITIONS=" + std::to_string(cap));
    Outcome o;
    const auto trees = enumerate_trees(positions, exact);
    Json list = Json::array();
    for (const BataninTree& b : trees) {
      const std::string psctx = surface::render(default_names(psctx_of_tree(b).ctx()));
      const std::string zz = to_string(zig_of_tree(b));
      if (format == Format::Json)
        list.push_back({{"tree", to_string(b)}, {"zigzag", zz}, {"psctx", psctx}, {"positions", position_count(b)}});
      else
        o.out += to_string(b) + "  " + zz + "  " + psctx + "\n";
    }
    if (format == Format::Json)
      o.out = dump({{"positions", positions}, {"exact", exact}, {"count", trees.size()}, {"trees", list}});
    else
      o.out += "count " + std::to_string(trees.size()) + "\n";
    return o;
  });
}

}  // namespace cattkit::driver
