#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "vvmod/identities.hpp"

using namespace vvmod;

namespace {

// Small config so the whole suite stays fast; every check is still the real
// computation, just at lower truncation order.
CheckConfig fast_config() {
    CheckConfig cfg;
    cfg.order = 24;
    cfg.radius = 200;
    cfg.seed = 7;
    return cfg;
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("registry names are unique and anchors are catalogued") {
    const auto& reg = check_registry();
    CHECK(reg.size() == 7);
    std::set<std::string> names;
    std::set<std::string> anchors(known_anchors().begin(), known_anchors().end());
    CHECK(anchors.size() == known_anchors().size()); // catalogue itself is duplicate-free
    CheckConfig cfg = fast_config();
    for (const auto& [name, fn] : reg) {
        CHECK(names.insert(name).second);
        CheckReport r = fn(cfg);
        CHECK(r.name == name);
        INFO("check ", name, " carries anchor ", r.anchor);
        CHECK(anchors.count(r.anchor) == 1);
    }
}

TEST_CASE("glob matching handles wildcards") {
    CHECK(glob_match("*", "anything"));
    CHECK(glob_match("*", ""));
    CHECK(glob_match("e2vec_*", "e2vec_modular"));
    CHECK_FALSE(glob_match("e2vec_*", "lr_e2_relation"));
    CHECK(glob_match("*_relation", "lr_e2_relation"));
    CHECK(glob_match("*e2*", "lr_e2_relation"));
    CHECK(glob_match("frame_maass_table", "frame_maass_table"));
    CHECK_FALSE(glob_match("frame_maass_table", "frame_maass_tables"));
    CHECK_FALSE(glob_match("", "x"));
    CHECK(glob_match("a*b*c", "a_x_b_y_c"));
    CHECK_FALSE(glob_match("a*b*c", "a_x_c_y_b"));
}

TEST_CASE("run_all filters by name glob and keeps registry order") {
    CheckConfig cfg = fast_config();
    std::vector<CheckReport> sel = run_all(cfg, "e2vec_*");
    REQUIRE(sel.size() == 3);
    CHECK(sel[0].name == "e2vec_holomorphic");
    CHECK(sel[1].name == "e2vec_modular");
    CHECK(sel[2].name == "e2vec_two_constructions");
    CHECK(run_all(cfg, "no_such_check").empty());
}

TEST_CASE("all registered checks pass at the fast configuration") {
    CheckConfig cfg = fast_config();
    for (const CheckReport& r : run_all(cfg)) {
        INFO(r.name, ": residual ", r.residual, " vs tolerance ", r.tolerance,
             " notes: ", r.notes);
        CHECK(r.passed);
        CHECK(r.residual <= r.tolerance);
    }
}

TEST_CASE("exact checks report a literal zero residual") {
    CheckConfig cfg = fast_config();
    CheckReport hol = check_e2vec_holomorphic(cfg);
    CHECK(hol.residual == 0.0);
    CHECK(hol.tolerance == 0.0);
    CHECK(hol.passed);

    CheckReport lr = check_lr_e2_relation(cfg);
    CHECK(lr.residual == 0.0);
    CHECK(lr.passed);
    // the proportionality constant is recorded and has magnitude exactly 2
    REQUIRE(lr.parameters.count("c") == 1);
    CHECK(lr.parameters.at("c") == "-2+0i");

    CheckReport bk = check_bk_case_IIIb_form(cfg);
    CHECK(bk.residual == 0.0);
    CHECK(bk.passed);
    REQUIRE(bk.parameters.count("lowerings_to_zero") == 1);
    CHECK(bk.parameters.at("lowerings_to_zero") == "3");
    REQUIRE(bk.parameters.count("constant") == 1);
    // 3/pi printed at %.12g precision
    CHECK(bk.parameters.at("constant") == "0.954929658551+0i");
}

TEST_CASE("tolerance overrides flow into the reports") {
    CheckConfig cfg = fast_config();
    cfg.tolerance_override["e2vec_modular"] = 0.5;
    CheckReport relaxed = check_e2vec_modular(cfg);
    CHECK(relaxed.tolerance == 0.5);
    CHECK(relaxed.passed);

    // an impossible tolerance flips the verdict but leaves the residual honest
    cfg.tolerance_override["e2vec_modular"] = -1.0;
    CheckReport strict = check_e2vec_modular(cfg);
    CHECK(strict.tolerance == -1.0);
    CHECK_FALSE(strict.passed);
    CHECK(strict.residual == relaxed.residual);
}

TEST_CASE("report serialization carries every field in a stable shape") {
    CheckConfig cfg = fast_config();
    CheckReport r = check_e2vec_holomorphic(cfg);
    std::string s = report_to_json(r);
    nlohmann::json j = nlohmann::json::parse(s);
    CHECK(j.at("name") == "e2vec_holomorphic");
    CHECK(j.at("anchor") == "E2vec_LR_basis");
    CHECK(j.at("parameters").at("order") == "24");
    CHECK(j.at("residual").get<double>() == 0.0);
    CHECK(j.at("tolerance").get<double>() == 0.0);
    CHECK(j.at("passed").get<bool>());
    CHECK(j.at("notes").is_string());
    // insertion order is part of the format
    CHECK(s.rfind("{\"name\":", 0) == 0);
}

TEST_CASE("randomized roundtrip check is seed-deterministic") {
    CheckConfig a = fast_config();
    CheckConfig b = fast_config();
    CheckReport ra = check_decomposition_roundtrip(a);
    CheckReport rb = check_decomposition_roundtrip(b);
    CHECK(ra.residual == rb.residual);
    b.seed = 1234;
    CheckReport rc = check_decomposition_roundtrip(b);
    CHECK(rc.passed);
    CHECK(rc.residual != ra.residual);
}

} // TEST_SUITE
