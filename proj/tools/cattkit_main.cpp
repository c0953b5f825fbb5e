// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cattkit/cattkit.h"

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool json_output = false;

const char* status_name(cattkit_status status) {
  switch (status) {
    case CATTKIT_OK: return "ok";
    case CATTKIT_CHECK_FAILED: return "check-failure";
    case CATTKIT_PARSE_FAILED: return "parse-failure";
    default: return "internal-failure";
  }
}

int emit(cattkit_status status, char* output) {
  const char* err = cattkit_last_error();
  const bool empty = output == nullptr || *output == '\0';
  if (output != nullptr) {
    std::fputs(output, stdout);
    cattkit_string_free(output);
  }
  if (empty && json_output && status != CATTKIT_OK) {
    // Failures without a report still give JSON consumers something to read.
    std::string message = err != nullptr ? err : "";
    while (!message.empty() && message.back() == '\n') message.pop_back();
    const nlohmann::json j = {{"error", message}, {"status", status_name(status)}};
    std::fputs((j.dump(2) + "\n").c_str(), stdout);
  }
  if (err != nullptr && *err != '\0') {
    std::fputs(err, stderr);
    const std::size_t n = std::char_traits<char>::length(err);
    if (err[n - 1] != '\n') std::fputc('\n', stderr);
  }
  return static_cast<int>(status);
}

// Runs a document command on FILE.
template <typename F>
int with_document(const std::string& path, F&& command) {
  std::string text;
  if (!read_input(path, text)) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    return CATTKIT_PARSE_FAILED;
  }
  cattkit_document* doc = nullptr;
  const cattkit_status parsed = cattkit_document_parse(text.data(), text.size(), path.c_str(), &doc);
  if (parsed != CATTKIT_OK) return emit(parsed, nullptr);
  char* output = nullptr;
  const cattkit_status status = command(doc, &output);
  cattkit_document_free(doc);
  return emit(status, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CaTT type checker and computad toolkit"};
  app.set_version_flag("--version", std::string(cattkit_version()));
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto fmt = [&] { return format == "json" ? CATTKIT_FORMAT_JSON : CATTKIT_FORMAT_TEXT; };

  std::string file;
  std::string theory = "catt";
  auto* check = app.add_subcommand("check", "Type-check every declaration of a source file");
  check->add_option("file", file, "Source file, or - for stdin")->required();
  check->add_option("--theory", theory, "Checker to use")->check(CLI::IsMember({"catt", "gsett"}));
  add_format(check);

  auto* translate = app.add_subcommand("translate", "Print the computad of every context");
  translate->add_option("file", file, "Source file, or - for stdin")->required();
  add_format(translate);

  std::string spec;
  std::string to;
  auto* tree = app.add_subcommand("tree", "Convert between tree, zigzag, pasting-context and globular-set forms");
  tree->add_option("spec", spec, "br[...], (0,1,0), (x : *, ...) or globular-set JSON")->required();
  tree->add_option("--to", to, "Target encoding")->check(CLI::IsMember({"tree", "zigzag", "psctx", "globset"}));
  add_format(tree);

  auto* roundtrip = app.add_subcommand("roundtrip", "Translate, rebuild a context, translate again, compare");
  roundtrip->add_option("file", file, "Source file or computad JSON, or - for stdin")->required();
  add_format(roundtrip);

  std::size_t positions = 0;
  bool exact = false;
  auto* enumerate = app.add_subcommand("enumerate", "List Batanin trees and their pasting contexts");
  enumerate->add_option("--positions", positions, "Maximal number of positions")->required();
  enumerate->add_flag("--exact", exact, "Only trees with exactly that many positions");
  add_format(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : CATTKIT_PARSE_FAILED;
  }

  json_output = format == "json";
  if (check->parsed()) {
    const auto th = theory == "gsett" ? CATTKIT_THEORY_GSETT : CATTKIT_THEORY_CATT;
    return with_document(file, [&](cattkit_document* d, char** out) { return cattkit_document_check(d, th, fmt(), out); });
  }
  if (translate->parsed())
    return with_document(file, [&](cattkit_document* d, char** out) { return cattkit_document_translate(d, fmt(), out); });
  if (roundtrip->parsed()) {
    std::string text;
    if (!read_input(file, text)) {
      std::fprintf(stderr, "error: cannot read %s\n", file.c_str());
      return CATTKIT_PARSE_FAILED;
    }
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      char* output = nullptr;
      const cattkit_status status = cattkit_computad_roundtrip(text.c_str(), fmt(), &output);
      return emit(status, output);
    }
    return with_document(file, [&](cattkit_document* d, char** out) { return cattkit_document_roundtrip(d, fmt(), out); });
  }
  if (tree->parsed()) {
    char* output = nullptr;
    const cattkit_status status = cattkit_tree_convert(spec.c_str(), to.empty() ? nullptr : to.c_str(), fmt(), &output);
    return emit(status, output);
  }
  char* output = nullptr;
  const cattkit_status status = cattkit_enumerate(positions, exact ? 1 : 0, fmt(), &output);
  return emit(status, output);
}
