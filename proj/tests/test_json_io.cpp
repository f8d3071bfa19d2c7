#include <doctest.h>

#include <fstream>

#include "gcard/json_io.hpp"

using namespace gcard;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(GCARD_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("rationals serialize as num/den strings") {
  CHECK(json(Rational(1)).dump() == "\"1/1\"");
  CHECK(json(Rational(BigInt(3), BigInt(6))).dump() == "\"1/2\"");
  CHECK(rational_from_json(json("137/60")) == Rational(BigInt(137), BigInt(60)));
  CHECK(rational_from_json(json(4)) == Rational(4));
  CHECK_THROWS_AS(rational_from_json(json("half")), FormatError);
}

TEST_CASE("permutations and cycle types") {
  const Permutation sigma({1, 2, 0});
  CHECK(json(sigma).dump() == "[1,2,0]");
  CHECK(permutation_from_json(json::parse("[1,2,0]")) == sigma);
  CHECK_THROWS_AS(permutation_from_json(json::parse("[1,1]")), FormatError);
  CHECK_THROWS_AS(permutation_from_json(json::parse("[-1]")), FormatError);
  CHECK(json(CycleType({0, 1, 1, 0, 0})).dump() == "[0,1,1,0,0]");
  CHECK(cycle_type_from_json(json::parse("[1,1,0]")) == CycleType({1, 1, 0}));
  CHECK_THROWS_AS(cycle_type_from_json(json::parse("[1,1]")), FormatError);
}

TEST_CASE("skeletons round-trip, with huge orders as strings") {
  const GroupoidSkeleton p3 = perm_groupoid_skeleton(3);
  const json j = p3;
  CHECK(j.dump() ==
        R"j({"components":[{"aut_order":6,"label":"(1,1,1)"},{"aut_order":2,"label":"(2,1)"},{"aut_order":3,"label":"(3)"}]})j");
  const GroupoidSkeleton back = skeleton_from_json(j);
  CHECK(skeletons_equivalent(back, p3, EquivalenceMode::strict));

  const GroupoidSkeleton big({{factorial(30), std::nullopt}});
  const json jb = big;
  CHECK(jb["components"][0]["aut_order"].is_string());
  CHECK(skeleton_from_json(jb).components()[0].aut_order == factorial(30));
  CHECK(json(GroupoidSkeleton()).dump() == R"({"components":[]})");
  CHECK_THROWS_AS(skeleton_from_json(json::parse(R"({"components":[{"aut_order":0}]})")), FormatError);
  CHECK_THROWS_AS(skeleton_from_json(json::parse(R"({"parts":[]})")), FormatError);
}

TEST_CASE("reports have stable keys") {
  const json r = verify_cll(3, PVector({0, 1, 0}), MomentMethod::brute);
  CHECK(r["lhs"] == "1/2");
  CHECK(r["rhs"] == "1/2");
  CHECK(r["equal"] == true);
  CHECK(r["method"] == "brute");
  CHECK(!r.contains("estimate"));

  const json c = verify_categorified(4, PVector({0, 2, 0, 0}));
  for (const char* key : {"n", "p", "lhs_skeleton", "rhs_skeleton", "equivalent", "lhs_card", "rhs_card", "bridge_check"})
    CHECK(c.contains(key));
  CHECK(c["lhs_card"] == "1/4");
  CHECK(c["equivalent"] == true);

  const json mc = monte_carlo_moment(10, PVector::unit(10, 1), 100, 5);
  CHECK(mc.contains("estimate"));
  CHECK(mc.contains("standard_error"));
  CHECK(mc["seed"] == 5);
  CHECK(!mc.contains("equal"));
}

TEST_CASE("groups from JSON") {
  CHECK(group_from_json(load("cayley_z3.json")).order() == 3);
  CHECK(group_from_json(json("S4")).order() == 24);
  CHECK(group_from_json(json("Z12")).order() == 12);
  CHECK_THROWS_AS(group_from_json(json("GL2")), FormatError);
  CHECK_THROWS_AS(group_from_json(load("not_a_group.json")), GroupAxiomError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order":2,"table":[[0,1]]})")), FormatError);
  const FiniteGroup s3 = make_symmetric(3);
  CHECK(cayley_group_from_json(cayley_group_to_json(s3)).cayley_table() == s3.cayley_table());
}

TEST_CASE("functors from JSON") {
  const auto sign = functor_from_json(load("sign_functor.json"));
  CHECK(validate_functor(sign).valid);
  const auto report = verify_general_theorem(sign);
  CHECK(report.equal);
  CHECK(report.expected_size == Rational(2));

  const auto rotation = functor_from_json(load("z3_rotation_functor.json"));
  CHECK(verify_general_theorem(rotation).elements_cardinality == Rational(3));

  const auto bad = functor_from_json(load("bad_functor.json"));
  const auto v = validate_functor(bad);
  CHECK(!v.valid);
  CHECK(v.failure.find("(h2,h1,g)") != std::string::npos);

  CHECK_THROWS_AS(functor_from_json(load("missing_transport.json")), FormatError);
  CHECK_THROWS_AS(functor_from_json(json::parse(R"({"group":"Z2","fibers":{"0":1},"transports":{}})")), FormatError);
  CHECK_THROWS_AS(
      functor_from_json(json::parse(
          R"({"group":"Z2","fibers":{"0":1,"1":1},"transports":{"0":{"0":[0],"1":[0]},"1":{"0":[0],"1":[1]}}})")),
      FormatError);
}

TEST_CASE("CSV rows") {
  CHECK(moment_csv_header().rfind("n,p,method", 0) == 0);
  const auto row = to_csv_row(verify_cll(3, PVector({0, 1, 0}), MomentMethod::cycle_type));
  CHECK(row == "3,\"0,1,0\",cycle_type,1/2,1/2,true,,,,,");
  const auto crow = to_csv_row(verify_categorified(3, PVector({0, 1, 0})));
  CHECK(crow.rfind("3,\"0,1,0\",true,1/2,1/2,true,3,1,", 0) == 0);
}
