#include "matroid/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "matroid/constructions.hpp"
#include "matroid/gf.hpp"

namespace matroid {

namespace {

using nlohmann::json;

constexpr int kMaxDepth = 4;

Matroid build_from_json(const json& j, int depth) {
  if (depth > kMaxDepth) throw std::runtime_error("spec nesting exceeds depth 4");
  if (!j.is_object()) throw std::runtime_error("spec must be a JSON object");
  std::string type = j.at("type").get<std::string>();

  if (type == "linear") {
    int p = j.at("field").get<int>();
    auto grid = j.at("matrix").get<std::vector<std::vector<int>>>();
    return Matroid::from_matrix(FieldMatrix::from_literal(p, grid));
  }
  if (type == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::runtime_error("edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Matroid::from_graph(edges);
  }
  if (type == "circuits") {
    int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxElements) throw std::runtime_error("n out of range");
    std::vector<Word> circuits;
    for (const auto& c : j.at("circuits")) {
      Word w = 0;
      for (const auto& e : c) {
        int v = e.get<int>();
        if (v < 0 || v >= n) throw std::runtime_error("circuit element out of range");
        w |= static_cast<Word>(1u << v);
      }
      circuits.push_back(w);
    }
    return Matroid::from_circuits(n, circuits);
  }
  if (type == "name") {
    std::string name = j.at("name").get<std::string>();
    auto m = by_name(name);
    if (!m) throw std::runtime_error("unknown catalog name: " + name);
    return *m;
  }
  if (type == "dual_of") {
    return dual(build_from_json(j.at("of"), depth + 1));
  }
  if (type == "two_sum") {
    TwoSumSpec spec{build_from_json(j.at("left"), depth + 1),
                    j.at("left_basepoint").get<int>(),
                    build_from_json(j.at("right"), depth + 1),
                    j.at("right_basepoint").get<int>()};
    return two_sum(spec);
  }
  throw std::runtime_error("unknown spec type: " + type);
}

}  // namespace

Matroid parse_spec(const std::string& json_text) {
  json j = json::parse(json_text);
  return build_from_json(j, 1);
}

Matroid load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

Matroid resolve_matroid_arg(const std::string& arg) {
  if (auto m = by_name(arg)) return *m;
  return load_spec_file(arg);
}

std::string serialize_spec(const Matroid& m) {
  json j;
  j["type"] = "circuits";
  j["n"] = m.n();
  json cs = json::array();
  for (Word c : circuits(m).members) {
    json one = json::array();
    for (int e = 0; e < m.n(); ++e) {
      if (c >> e & 1) one.push_back(e);
    }
    cs.push_back(one);
  }
  j["circuits"] = cs;
  return j.dump(2);
}

}  // namespace matroid
