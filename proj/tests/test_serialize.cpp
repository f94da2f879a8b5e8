#include "doctest.h"

#include "coxeter/inverse.hpp"
#include "coxeter/serialize.hpp"

using namespace coxeter;

TEST_CASE("region records") {
  const CoxeterSpec spec(3, 2, 2);
  const LabeledRegion entry{RegionSig(spec, {0, 2, 1}), Label{1, 1, 4}};
  const auto json = region_record(entry);
  CHECK(json.dump() ==
        R"({"t":{"1,2":0,"1,3":2,"2,3":1},"label":[1,1,4],"chamber":[1,2,3],"bounded":true})");
  CHECK(csv_header(spec) == "t_1_2,t_1_3,t_2_3,label,chamber,bounded");
  CHECK(csv_row(entry) == "0,2,1,1 1 4,1 2 3,true");
  CHECK(csv_row({RegionSig::base(spec), Label::ones(3)}) == "0,0,0,1 1 1,1 2 3,true");
}

TEST_CASE("center and inverse records") {
  const auto inv = invert_label(Label{6, 1, 2}, 2);
  CHECK(to_json(inv).dump() == R"({"pi":[2,3,1],"a":[1,2,4],"z":[1,2,2,3,3],"I":[2,0,0]})");
  const auto z = center_vector(Label{6, 1, 2}, 2);
  CHECK(to_json(z).dump() == R"({"m":2,"z":[1,2,2,3,3],"levels":[[2],[2,3],[2,3],[1,2,3],[1,2,3]]})");
  CHECK(recognizer_report(Label{4, 5, 1}, 2).dump() ==
        R"({"catalan":true,"prime":false,"parking":false,"z":[1,1,2,3,3]})");
}

TEST_CASE("census records") {
  const auto json = to_json(census(CoxeterSpec(3, 2, 0)));
  CHECK(json["regions"] == 31);
  CHECK(json["distinct_labels"] == 30);
  CHECK(json["bijective"] == false);
  CHECK(json["formula_regions"].is_null());
  REQUIRE(json["collisions"].size() == 1);
  CHECK(json["collisions"][0]["label"] == Json::array({2, 1, 3}));
  CHECK(to_json(census(CoxeterSpec(3, 2, 1)))["formula_regions"] == 49);
}
