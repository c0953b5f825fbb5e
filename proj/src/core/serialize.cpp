#include "cattkit/serialize.hpp"

namespace cattkit {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::ParseError, "malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t as_index(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    malformed("expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& as_array(const Json& j) {
  if (!j.is_array()) malformed("expected an array");
  return j;
}

}  // namespace

Json to_json(const GlobSet& x) {
  Json dims = Json::array();
  for (int n = 0; n <= x.dim(); ++n) {
    Json src = Json::array();
    Json tgt = Json::array();
    if (n > 0) {
      for (std::size_t i = 0; i < x.count(n); ++i) {
        src.push_back(x.src({n, i}).index);
        tgt.push_back(x.tgt({n, i}).index);
      }
    }
    dims.push_back({{"cells", x.count(n)}, {"src", src}, {"tgt", tgt}});
  }
  return {{"dims", dims}};
}

GlobSet globset_from_json(const Json& j) {
  GlobSet x;
  const Json& dims = as_array(field(j, "dims"));
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const std::size_t count = as_index(field(dims[n], "cells"));
    const Json& src = as_array(field(dims[n], "src"));
    const Json& tgt = as_array(field(dims[n], "tgt"));
    if (n == 0) {
      if (!src.empty() || !tgt.empty()) malformed("0-cells have no source or target");
      for (std::size_t i = 0; i < count; ++i) x.add_point();
      continue;
    }
    if (src.size() != count || tgt.size() != count) malformed("src/tgt lists must have one entry per cell");
    for (std::size_t i = 0; i < count; ++i) x.add_cell(static_cast<int>(n), as_index(src[i]), as_index(tgt[i]));
  }
  return x;
}

Json to_json(const Cell& cell) {
  if (cell.is_gen()) return {{"gen", {cell.generator().dim, cell.generator().index}}};
  Json map = Json::array();
  for (const auto& level : cell.map().images) {
    Json row = Json::array();
    for (const Cell& c : level) row.push_back(to_json(c));
    map.push_back(std::move(row));
  }
  return {{"coh", {{"tree", to_string(cell.tree())}, {"sphere", to_json(cell.sphere())}, {"map", map}}}};
}

Json to_json(const Sphere& s) {
  if (s.is_unit()) return {{"dim", -1}};
  return {{"dim", s.dim()}, {"src", to_json(s.src())}, {"tgt", to_json(s.tgt())}};
}

Json to_json(const Computad& c, const GenNames& names) {
  Json dims = Json::array();
  for (int n = 0; n <= c.dim(); ++n) {
    Json gens = Json::array();
    Json attach = Json::array();
    for (std::size_t i = 0; i < c.count(n); ++i) {
      const bool named = static_cast<std::size_t>(n) < names.size() && i < names[n].size();
      gens.push_back(named ? names[n][i] : "v" + std::to_string(n) + "." + std::to_string(i));
      attach.push_back(to_json(c.attach({n, i})));
    }
    dims.push_back({{"attach", attach}, {"gens", gens}});
  }
  return {{"dims", dims}};
}

Cell cell_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) malformed("a cell is an object with a single tag");
  if (j.contains("gen")) {
    const Json& g = as_array(j.at("gen"));
    if (g.size() != 2) malformed("\"gen\" takes [dim, index]");
    return Cell::gen({static_cast<int>(as_index(g[0])), as_index(g[1])});
  }
  const Json& body = field(j, "coh");
  const Json& tree = field(body, "tree");
  if (!tree.is_string()) malformed("\"tree\" must be a string");
  CompMorphism map;
  for (const Json& row : as_array(field(body, "map"))) {
    map.images.emplace_back();
    for (const Json& c : as_array(row)) map.images.back().push_back(cell_from_json(c));
  }
  return Cell::coh(parse_tree(tree.get<std::string>()), sphere_from_json(field(body, "sphere")), std::move(map));
}

Sphere sphere_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer()) malformed("\"dim\" must be an integer");
  const int n = dim.get<int>();
  if (n < 0) {
    if (n != -1 || j.size() != 1) malformed("the unit sphere is {\"dim\": -1}");
    return Sphere::unit();
  }
  Cell src = cell_from_json(field(j, "src"));
  Cell tgt = cell_from_json(field(j, "tgt"));
  if (src.dim() != n || tgt.dim() != n) malformed("sphere cells must have the sphere's dimension");
  return Sphere::make(std::move(src), std::move(tgt));
}

Computad computad_from_json(const Json& j, GenNames* names) {
  Computad c;
  const Json& dims = as_array(field(j, "dims"));
  if (names) names->assign(dims.size(), {});
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const Json& gens = as_array(field(dims[n], "gens"));
    const Json& attach = as_array(field(dims[n], "attach"));
    if (gens.size() != attach.size()) malformed("\"gens\" and \"attach\" must have the same length");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_string()) malformed("generator names must be strings");
      if (names) (*names)[n].push_back(gens[i].get<std::string>());
      Sphere s = sphere_from_json(attach[i]);
      if (s.dim() != static_cast<int>(n) - 1)
        malformed("attaching sphere of a " + std::to_string(n) + "-generator must have dimension " +
                  std::to_string(static_cast<int>(n) - 1));
      c.add_generator(std::move(s));
    }
  }
  if (c.dim() + 1 != static_cast<int>(dims.size())) malformed("trailing empty dimensions");
  return c;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace cattkit
