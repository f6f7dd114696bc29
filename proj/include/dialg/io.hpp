#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/fi.hpp"
#include "dialg/hom.hpp"
#include "dialg/poly.hpp"
#include "dialg/product.hpp"
#include "dialg/report.hpp"

namespace dialg::io {

using Json = nlohmann::ordered_json;

namespace detail {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field '") + key + "': " + e.what());
  }
}

inline std::vector<Block> get_blocks(const Json& j, const char* key = "blocks") {
  return get<std::vector<Block>>(j, key);
}

}  // namespace detail

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// {"n":5,"family":"partition","blocks":[[-5,3,5],...]}
inline Json to_json(const Diagram& d, Family f) {
  return Json{{"n", d.size()}, {"family", to_string(f)}, {"blocks", d.blocks()}};
}

inline std::pair<Diagram, Family> diagram_from_json(const Json& j) {
  Family f = parse_family(detail::get<std::string>(j, "family"));
  Diagram d = canonicalize(detail::get<int>(j, "n"), detail::get_blocks(j));
  if (!in_family(d, f)) throw InvalidInput("diagram violates the " + std::string(to_string(f)) + " constraint");
  return {std::move(d), f};
}

// {"n":2,"family":"brauer","terms":[{"coeff":"1*d^1","blocks":[...]}]}
inline Json to_json(const LinComb& a) {
  Json terms = Json::array();
  for (const auto& [d, c] : a.terms()) terms.push_back(Json{{"coeff", to_string(c)}, {"blocks", d.blocks()}});
  return Json{{"n", a.size()}, {"family", to_string(a.family())}, {"terms", std::move(terms)}};
}

// Accepts a LinComb or a single diagram (coefficient 1).
inline LinComb lincomb_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) {
    auto [d, f] = diagram_from_json(j);
    return LinComb(d, f);
  }
  const int n = detail::get<int>(j, "n");
  Family f = parse_family(detail::get<std::string>(j, "family"));
  LinComb out(n, f);
  for (const auto& t : j.at("terms")) {
    Diagram d = canonicalize(n, detail::get_blocks(t));
    if (!in_family(d, f)) throw InvalidInput("term violates the family constraint");
    out.add(d, parse_poly(detail::get<std::string>(t, "coeff")));
  }
  return out;
}

// Brauer-type: {"m":1,"n":3,"family":"brauer","pairs":[[-1,1]],"blob":[-2,-3]}
// Partition:   {"m":1,"n":3,"family":"partition","blocks":[...],"marked":[0]}
inline void put_blob_fields(Json& j, const BlobDiagram& x) {
  if (x.family() == Family::Partition) {
    j["blocks"] = x.blocks();
    j["marked"] = x.marked();
  } else {
    j["pairs"] = x.pairs();
    j["blob"] = x.blob();
  }
}

inline Json to_json(const BlobDiagram& x) {
  Json j{{"m", x.target()}, {"n", x.source()}, {"family", to_string(x.family())}};
  put_blob_fields(j, x);
  return j;
}

inline BlobDiagram blob_fields_from_json(const Json& j, Family f, int m, int n) {
  if (f == Family::Partition) {
    return BlobDiagram::from_blocks(f, m, n, detail::get_blocks(j),
                                    detail::get<std::vector<std::size_t>>(j, "marked"));
  }
  return BlobDiagram::from_pairs(f, m, n, detail::get<std::vector<std::array<int, 2>>>(j, "pairs"),
                                 detail::get<std::vector<int>>(j, "blob"));
}

inline BlobDiagram blob_from_json(const Json& j) {
  Family f = parse_family(detail::get<std::string>(j, "family"));
  return blob_fields_from_json(j, f, detail::get<int>(j, "m"), detail::get<int>(j, "n"));
}

// {"m":..,"n":..,"family":..,"terms":[{"coeff":"1", <blob fields>}]}
inline Json to_json(const HomElement& h) {
  Json terms = Json::array();
  for (const auto& [x, c] : h.terms()) {
    Json t{{"coeff", to_string(c)}};
    put_blob_fields(t, x);
    terms.push_back(std::move(t));
  }
  return Json{{"m", h.target()}, {"n", h.source()}, {"family", to_string(h.family())}, {"terms", std::move(terms)}};
}

// Accepts a HomElement or a single blob diagram (coefficient 1).
inline HomElement hom_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) return HomElement(blob_from_json(j));
  Family f = parse_family(detail::get<std::string>(j, "family"));
  const int m = detail::get<int>(j, "m");
  const int n = detail::get<int>(j, "n");
  HomElement out(f, m, n);
  for (const auto& t : j.at("terms")) {
    out.add(blob_fields_from_json(t, f, m, n), parse_poly(detail::get<std::string>(t, "coeff")));
  }
  return out;
}

// {"m":3,"n":5,"map":[2,4,5]}
inline Json to_json(const FIMorphism& a) {
  return Json{{"m", a.source()}, {"n", a.target()}, {"map", a.map()}};
}

inline FIMorphism fi_from_json(const Json& j) {
  auto map = detail::get<std::vector<int>>(j, "map");
  if (j.contains("m") && detail::get<int>(j, "m") != static_cast<int>(map.size())) {
    throw InvalidInput("FI map length differs from m");
  }
  return FIMorphism(detail::get<int>(j, "n"), std::move(map));
}

inline Json to_json(const Report& r) {
  Json j{{"check", r.check}};
  if (r.family) j["family"] = to_string(*r.family);
  if (r.m) j["m"] = *r.m;
  j[r.degree_key] = r.n;
  for (const auto& [k, v] : r.parameters) j[k] = v;
  j["total"] = r.total;
  j["failures"] = r.failures;
  for (const auto& [k, v] : r.extras) j[k] = v;
  return j;
}

}  // namespace dialg::io
