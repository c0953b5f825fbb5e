#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cattkit/driver.hpp"
#include "cattkit/serialize.hpp"

using namespace cattkit;
using namespace cattkit::driver;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(CATTKIT_TEST_DATA) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("exit classes") {
  CHECK(status_of(ErrorKind::ParseError) == ParseFailure);
  CHECK(status_of(ErrorKind::UnknownName) == ParseFailure);
  CHECK(status_of(ErrorKind::SideConditionFailedTarget) == CheckFailure);
  CHECK(status_of(ErrorKind::NotAPastingContext) == CheckFailure);
  CHECK(status_of(ErrorKind::InternalInvariant) == InternalFailure);
}

TEST_CASE("check") {
  const Outcome ok = check(slurp("composition.catt"), Format::Text);
  CHECK(ok.status == Ok);
  CHECK(ok.out.find("ok: 8 declarations") != std::string::npos);

  const Outcome bad = check(slurp("bad_composition.catt"), Format::Text, Theory::CaTT, "bad.catt");
  CHECK(bad.status == CheckFailure);
  CHECK(bad.err.find("bad.catt:2:1: error: SideConditionFailedTarget") != std::string::npos);
  CHECK(bad.err.find("(expected {z}, found {y})") != std::string::npos);

  CHECK(check(slurp("parse_error.catt"), Format::Text).status == ParseFailure);
  CHECK(check(slurp("unknown_name.catt"), Format::Text).status == ParseFailure);
  CHECK(check(slurp("composition.catt"), Format::Text, Theory::GSeTT).status == CheckFailure);
  CHECK(check(slurp("globular.catt"), Format::Text, Theory::GSeTT).status == Ok);
}

TEST_CASE("json reports") {
  const Outcome bad = check(slurp("bad_composition.catt"), Format::Json);
  const Json j = Json::parse(bad.out);
  CHECK(j.at("status") == "check-failure");
  REQUIRE(j.at("diagnostics").size() == 1);
  CHECK(j.at("diagnostics")[0].at("kind") == "SideConditionFailedTarget");
  const Outcome ok = check(slurp("composition.catt"), Format::Json);
  CHECK(Json::parse(ok.out).at("declarations").size() == 8);
  // keys come out sorted
  CHECK(ok.out.find("\"declarations\"") < ok.out.find("\"status\""));
}

TEST_CASE("translate") {
  const Outcome t = translate(slurp("globular.catt"), Format::Json);
  CHECK(t.status == Ok);
  const Json j = Json::parse(t.out);
  CHECK(j.dump().find("\"dims\"") != std::string::npos);
  CHECK(translate(slurp("composition.catt"), Format::Text).status == Ok);
}

TEST_CASE("tree conversions") {
  const BataninTree b = parse_tree("br[br[br[]],br[]]");
  CHECK(write_tree(b, "tree") == "br[br[br[]],br[]]");
  CHECK(write_tree(b, "zigzag") == "(0,1,2,1,0,1,0)");
  for (const char* to : {"tree", "zigzag", "psctx", "globset"}) CHECK(read_tree(write_tree(b, to)) == b);
  const Outcome z = tree("br[br[br[]],br[]]", std::string("zigzag"), Format::Text);
  CHECK(z.status == Ok);
  CHECK(z.out == "(0,1,2,1,0,1,0)\n");
  CHECK(tree("br[br[", std::nullopt, Format::Text).status == ParseFailure);
  CHECK(tree("(0,2,0)", std::nullopt, Format::Text).status != Ok);
  CHECK(tree("br[]", std::string("nonsense"), Format::Text).status == ParseFailure);
  CHECK(tree("(x : *, y : *)", std::nullopt, Format::Text).status == CheckFailure);
}

TEST_CASE("roundtrip") {
  const Outcome src = roundtrip(slurp("composition.catt"), Format::Text);
  CHECK(src.status == Ok);
  const Outcome comp = roundtrip(slurp("computad.json"), Format::Text);
  CHECK(comp.status == Ok);
  CHECK(comp.out.find("isomorphic after round trip") != std::string::npos);
  CHECK(roundtrip("{\"dims\": 3}", Format::Text).status == ParseFailure);
  // a 1-generator attached to generators that do not exist
  CHECK(roundtrip(R"({"dims":[{"gens":["x"],"attach":[{"dim":-1}]},)"
                  R"({"gens":["f"],"attach":[{"dim":0,"src":{"gen":[0,0]},"tgt":{"gen":[0,4]}}]}]})",
                  Format::Text)
            .status == CheckFailure);
}

TEST_CASE("enumerate") {
  const Outcome e = enumerate(7, true, Format::Text);
  CHECK(e.status == Ok);
  CHECK(e.out.find("count 5") != std::string::npos);
  const Json j = Json::parse(enumerate(5, false, Format::Json).out);
  CHECK(j.at("count") == 1 + 1 + 2);
  CHECK(enumerate(11, false, Format::Text).status == ParseFailure);
}

TEST_CASE("position cap") {
  ::setenv("CATTKIT_MAX_POSITIONS", "11", 1);
  CHECK(max_positions() == 11);
  CHECK(enumerate(11, true, Format::Text).status == Ok);
  ::setenv("CATTKIT_MAX_POSITIONS", "junk", 1);
  CHECK(max_positions() == 9);
  ::unsetenv("CATTKIT_MAX_POSITIONS");
  CHECK(max_positions() == 9);
}

TEST_CASE("outputs are deterministic") {
  for (Format f : {Format::Text, Format::Json}) {
    CHECK(check(slurp("composition.catt"), f).out == check(slurp("composition.catt"), f).out);
    CHECK(translate(slurp("composition.catt"), f).out == translate(slurp("composition.catt"), f).out);
    CHECK(roundtrip(slurp("computad.json"), f).out == roundtrip(slurp("computad.json"), f).out);
    CHECK(enumerate(9, false, f).out == enumerate(9, false, f).out);
  }
}
