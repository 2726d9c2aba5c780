#include <doctest.h>

#include "matroid/constructions.hpp"
#include "matroid/iso.hpp"
#include "matroid/spec_io.hpp"

using namespace matroid;

TEST_CASE("parse linear, graphic, circuits, name") {
  Matroid lin = parse_spec(R"({"type":"linear","field":2,
    "matrix":[[1,0,1],[0,1,1]]})");
  CHECK(lin == Matroid::uniform(2, 3));

  Matroid gr = parse_spec(R"({"type":"graphic","edges":[[0,1],[1,2],[2,0]]})");
  CHECK(gr == Matroid::uniform(2, 3));

  Matroid circ = parse_spec(R"({"type":"circuits","n":4,"circuits":[[0,1,2,3]]})");
  CHECK(circ == Matroid::uniform(3, 4));

  Matroid named = parse_spec(R"({"type":"name","name":"q9"})");
  CHECK(named == catalog_entry("Q9")->m);
}

TEST_CASE("parse dual_of and two_sum with nesting") {
  Matroid d = parse_spec(R"({"type":"dual_of","of":{"type":"name","name":"F7"}})");
  CHECK(d == catalog_entry("F7STAR")->m);

  Matroid h12 = parse_spec(R"({"type":"two_sum",
    "left":{"type":"name","name":"O7"},"left_basepoint":4,
    "right":{"type":"name","name":"O7"},"right_basepoint":4})");
  CHECK(h12 == catalog_entry("H12")->m);
}

TEST_CASE("depth limit and malformed specs") {
  // five nested duals exceed the depth-4 cap
  std::string deep = R"({"type":"dual_of","of":)";
  std::string spec = deep + deep + deep + deep +
                     R"({"type":"name","name":"U25"}}}}})";
  CHECK_THROWS(parse_spec(spec));
  // four levels is fine
  std::string ok = deep + deep + deep + R"({"type":"name","name":"U25"}}}})";
  CHECK(parse_spec(ok) == dual(catalog_entry("U25")->m));

  CHECK_THROWS(parse_spec(R"({"type":"mystery"})"));
  CHECK_THROWS(parse_spec(R"({"type":"name","name":"NOPE"})"));
  CHECK_THROWS(parse_spec("[1,2,3]"));
  CHECK_THROWS(parse_spec("not json"));
  CHECK_THROWS(parse_spec(R"({"type":"circuits","n":99,"circuits":[]})"));
  CHECK_THROWS(parse_spec(R"({"type":"graphic","edges":[[0]]})"));
}

TEST_CASE("round trip through circuits serialization") {
  for (const auto& e : catalog()) {
    Matroid back = parse_spec(serialize_spec(e.m));
    CHECK(back == e.m);
  }
}

TEST_CASE("resolve_matroid_arg prefers catalog names") {
  CHECK(resolve_matroid_arg("mk5") == catalog_entry("MK5")->m);
  CHECK_THROWS(resolve_matroid_arg("/no/such/file.json"));
}
