#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcc/json_io.hpp"
#include "tcc/pipeline.hpp"

using namespace tcc;
using nlohmann::json;

TEST_CASE("configuration JSON round trip") {
    auto cfg = orb_coloring(make_named_group("agl1:5"), 3);
    auto j = config_to_json(cfg, {{"note", "x"}});
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 3);
    CHECK(j["colors"].size() == 125);
    auto back = config_from_json(j);
    CHECK(back == cfg);
    // canonical renumbering survives arbitrary but consistent labels
    auto j2 = j;
    for (auto& c : j2["colors"]) c = 10 + 3 * c.get<int>();
    CHECK(config_from_json(j2) == cfg);
}

TEST_CASE("configuration JSON rejects malformed input") {
    CHECK_THROWS(config_from_json(json::parse("{}")));
    CHECK_THROWS(config_from_json(json::parse(R"({"n":2,"m":2,"colors":[0,1,1]})")));
    CHECK_THROWS(config_from_json(json::parse(R"({"n":2,"m":2})")));
}

TEST_CASE("partition JSON round trip") {
    auto j = json::parse(R"({"carrier":"fstar:7","classes":[[1],[2,4],[3,5,6]]})");
    auto [carrier, classes] = partition_from_json(j);
    CHECK(carrier.to_string() == "fstar:7");
    CHECK(classes.size() == 3);
    CHECK(partition_to_json(carrier, classes) == j);
    CHECK_THROWS(partition_from_json(json::parse(R"({"carrier":"fstar:8","classes":[]})")));
}

TEST_CASE("report JSON schema") {
    auto rep = theorem_checks(5, "thm51");
    auto j = report_to_json(rep);
    CHECK(j["suite"] == "thm51");
    CHECK(j["p"] == 5);
    CHECK(j["complete"] == true);
    REQUIRE(j["results"].size() == 2);
    for (const auto& r : j["results"]) {
        CHECK(r.contains("classes"));
        CHECK(r.contains("ast"));
        CHECK(r.contains("aut_order"));
        CHECK(r.contains("aut_matches"));
        CHECK(r.contains("schurian"));
    }
    CHECK(j["results"][0]["aut_matches"] == "agl1:5");
    CHECK(j["results"][1]["schurian"] == true);
}
