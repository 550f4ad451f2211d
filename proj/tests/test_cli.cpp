#include "quadrica/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace quadrica;

namespace {

json run_ok(const std::string& verb, const json& payload) {
    auto r = run_command(verb, payload);
    INFO(r.output.dump());
    REQUIRE(r.exit_code == 0);
    return r.output;
}

}  // namespace

TEST_CASE("qform:analyze on the S4 sphere form") {
    json out = run_ok("qform:analyze",
                      json{{"form", {{"poly", "x1^2+x2^2+x3^2+x4^2+x5^2-x0^2"},
                                     {"vars", {"x0", "x1", "x2", "x3", "x4", "x5"}}}}});
    CHECK(out["rank"] == 6);
    CHECK(out["disc"] == "-1");
    CHECK(out["signature"] == json::array({5, 1}));
    CHECK(out["witt_index"] == 1);
    CHECK(out["kernel"] == "x1^2 + x2^2 + x3^2 + x4^2");
}

TEST_CASE("qform:witt verifies its own block decomposition") {
    json out = run_ok("qform:witt", json{{"form", {{"matrix", {{0, 1}, {1, 0}}}}}});
    CHECK(out["witt_index"] == 1);
    CHECK(out["block_verified"] == true);
    CHECK(out["kernel_diagonal"].empty());
}

TEST_CASE("qform:isotropic produces verified witnesses") {
    json out = run_ok("qform:isotropic",
                      json{{"form", {{"poly", "x^2+y^2-z^2"}, {"vars", {"x", "y", "z"}}}}});
    CHECK(out["isotropic"] == true);
    CHECK(out["witness_value"] == "0");

    auto r = run_command("qform:isotropic", json{{"form", {{"matrix", {{1, 0}, {0, 2}}}}}});
    CHECK(r.exit_code == 0);
    CHECK(r.output["isotropic"] == false);
}

TEST_CASE("qform:equivalent") {
    json out = run_ok("qform:equivalent",
                      json{{"form1", {{"matrix", {{0, "1/2"}, {"1/2", 0}}}}},
                           {"form2", {{"matrix", {{7, 0}, {0, -7}}}}}});
    CHECK(out["equivalent"] == true);
}

TEST_CASE("qform:og dispatch") {
    CHECK(run_ok("qform:og", json{{"op", "dimension"}, {"m", 1}, {"n", 3}})["dimension"] == 3);
    CHECK(run_ok("qform:og", json{{"op", "family_count"}, {"r", 6}, {"s", 6}})["count"] == 3);
    json cls = run_ok("qform:og",
                      json{{"op", "component_class"},
                           {"form", {{"matrix", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0},
                                                 {0, 0, 0, -1}}}}}});
    CHECK(cls["reducible"] == true);
    json pair = run_ok("qform:og", json{{"op", "conic_pair"}, {"a", {1, 1, -1, 1, -1}}});
    CHECK(pair["conic_isotropic"] == true);
    CHECK(pair["conic_prime_isotropic"] == true);
    json g = run_ok("qform:og",
                    json{{"op", "g_of_q3"},
                         {"form", {{"poly", "x0^2+2*x1^2+3*x2^2+5*x3^2+7*x4^2"},
                                   {"vars", {"x0", "x1", "x2", "x3", "x4"}}}}});
    CHECK(g["isotropic"] == true);
    CHECK(g["form"]["matrix"][0][0] == 210);
}

TEST_CASE("map:construct then map:verify round trip") {
    json built = run_ok("map:construct",
                        json{{"family", "veronese_q4"}, {"a", "a"}, {"b", "b"}});
    CHECK(built["verified"] == true);
    json verified = run_ok("map:verify",
                           json{{"form", built["target"]}, {"map", built["coords"]}});
    CHECK(verified["verified"] == true);
}

TEST_CASE("map:classify matches the documented example") {
    json out = run_ok("map:classify",
                      json{{"map", {"u^2", "v^2", "w^2", "u*v", "v*w"}}});
    CHECK(out["label"] == "projected-veronese");
    CHECK(out["span_dim"] == 5);
    CHECK(out["center_rank"] == 2);
    CHECK(out.contains("seed"));
}

TEST_CASE("curve verbs") {
    json form{{"poly", "x0*x1+x2*x3+x4^2"}, {"vars", {"x0", "x1", "x2", "x3", "x4"}}};
    SECTION("conic3 and reduce") {
        json conic = run_ok("curve:conic3",
                            json{{"form", form},
                                 {"points",
                                  {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, -1, 1, 1, 0}}}});
        CHECK(conic["degree"] == 2);
    }
    SECTION("sympower") {
        json out = run_ok("curve:sympower",
                          json{{"poly", "x1^2+x2^2+t^2-1"},
                               {"points", {{1, 0, 0}, {"3/5", 0, "4/5"}}}});
        CHECK(out["residual"] != "0");
        CHECK(out["anchors"][0] == json::array({"1", "0"}));
    }
}

TEST_CASE("veronese:check and sphere:stereo") {
    json sig = run_ok("veronese:check", json{{"check", "sigma"}});
    CHECK(sig["reports"][0]["status"] == "pass");

    json link = run_ok("veronese:check", json{{"check", "linkage"}});
    for (const auto& r : link["reports"]) CHECK(r["status"] == "pass");

    json cp = run_ok("veronese:check",
                     json{{"check", "conic_product"}, {"a", "a"}, {"b", "b"}, {"c", "c"}});
    for (const auto& r : cp["reports"]) CHECK(r["status"] == "pass");

    json dl = run_ok("veronese:check", json{{"check", "double_line"}, {"a", -1}, {"b", -1}});
    CHECK((dl["locus"] == "u^2 + v^2 - w^2" || dl["locus"] == "-u^2 - v^2 + w^2"));

    json st = run_ok("sphere:stereo", json{{"n", 3}});
    CHECK(st["identities"]["inverse_on_sphere"] == true);
    CHECK(st["identities"]["round_trip"] == true);
    CHECK(st["inverse"].size() == 4);

    json stratum = run_ok("veronese:check",
                          json{{"check", "stratum"}, {"point", {1, 1, 1, 1, 1, 1}}});
    CHECK(stratum["rank"] == 1);

    json qc = run_ok("veronese:check", json{{"check", "quadric_from_conic"},
                                            {"a", "a"}, {"b", "b"}, {"c", "c"}});
    CHECK(qc["reports"][0]["status"] == "pass");

    json tc = run_ok("veronese:check", json{{"check", "tangent_conic"},
                                            {"a", -1}, {"b", -1}, {"p", {3, 4, 5}}});
    CHECK(tc["rank"] == 1);
}

TEST_CASE("error taxonomy and exit codes") {
    SECTION("unknown verb") {
        CHECK(run_command("nope", json::object()).exit_code == 2);
    }
    SECTION("unknown payload field") {
        auto r = run_command("qform:analyze",
                             json{{"form", {{"matrix", {{1}}}}}, {"extra", 1}});
        CHECK(r.exit_code == 2);
        CHECK(r.output["error"].get<std::string>().find("extra") != std::string::npos);
    }
    SECTION("missing field") {
        CHECK(run_command("qform:witt", json::object()).exit_code == 2);
    }
    SECTION("wrong payload types are validation errors") {
        CHECK(run_command("qform:og", json{{"op", "dimension"}, {"m", "one"}, {"n", 3}})
                  .exit_code == 2);
        CHECK(run_command("sphere:stereo", json{{"n", "three"}}).exit_code == 2);
    }
    SECTION("degenerate form analyze reports the radical") {
        json out = run_ok("qform:analyze", json{{"form", {{"matrix", {{1, 0}, {0, 0}}}}}});
        CHECK(out["rank"] == 1);
        CHECK(out["radical_dim"] == 1);
        CHECK(out["disc"] == "0");
        CHECK_FALSE(out.contains("witt_index"));
    }
    SECTION("parse error carries its position") {
        auto r = run_command("map:verify",
                             json{{"form", {{"matrix", {{1}}}}}, {"map", {"u^2 +"}}});
        CHECK(r.exit_code == 2);
        CHECK(r.output["error"].get<std::string>().find("position") != std::string::npos);
    }
    SECTION("mathematical failures exit 3 with a stable code") {
        auto r = run_command("qform:witt",
                             json{{"form", {{"matrix", {{1, 0}, {0, 0}}}}}});
        CHECK(r.exit_code == 3);
        CHECK(r.output["code"] == "degenerate_form");

        auto cap = run_command(
            "qform:isotropic",
            json{{"form", {{"matrix", {{1, 0, 0}, {0, 2, 0}, {0, 0, -6}}}}}, {"height_cap", 1}});
        CHECK(cap.exit_code == 3);
        CHECK(cap.output["code"] == "cap_exceeded");
    }
    SECTION("deterministic output: classify twice gives identical json") {
        json payload{{"map", {"u^2+3*g*w^2", "u*v", "v*w", "u*w", "w^2", "v^2-g*w^2"}}};
        auto a = run_command("map:classify", payload);
        auto b = run_command("map:classify", payload);
        CHECK(a.output == b.output);
        auto c = run_command("map:classify", payload, 12345);
        CHECK(c.output["seed"] == 12345);
    }
}
