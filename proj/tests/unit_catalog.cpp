#include <doctest.h>

#include "rpx/catalog.hpp"
#include "rpx/verify.hpp"

using namespace rpx;

TEST_CASE("default catalog: 25 entries, 21 with mirror vectors")
{
    Catalog cat = Catalog::load_default();
    CHECK(cat.names().size() == 25);
    int with_mirror = 0, skeletons = 0, mirror_11 = 0;
    for (const auto& n : cat.names()) {
        const auto& e = cat.entry(n);
        if (e.mirror) {
            ++with_mirror;
            if (*e.mirror == std::pair<int, int>{1, 1})
                ++mirror_11;
        } else {
            ++skeletons;
        }
        CHECK(e.expected.has_value());
    }
    CHECK(with_mirror == 21);
    CHECK(skeletons == 4);
    CHECK(mirror_11 == 9);
}

TEST_CASE("catalog reproduces the classification table row data")
{
    // Independent record of the table: (name, G2, r, face).
    struct Row {
        const char* name;
        const char* g2;
        int r;
        const char* face;
    };
    const Row rows[] = {
        {"K1_1_2", "D2", 4, "4_s"},  {"K2_1_2", "C3", 3, "4_s"},  {"K3_1_2", "D3", 6, "4_s"},
        {"K4_1_2", "D2", 4, "6_s"},  {"K5_1_2", "D2", 4, "6_s"},  {"K6_1_2", "D4", 8, "6_s"},
        {"K7_1_2", "D3", 6, "6_s"},  {"K8_1_2", "D2", 4, "6_s"},  {"K1_1_1", "D3", 6, "inf_3"},
        {"K2_1_1", "D2", 4, "inf_3"}, {"K3_1_1", "D4", 8, "inf_3"}, {"K4_1_1", "D3", 6, "inf_4"},
        {"K5_1_1", "D2", 4, "inf_4"}, {"K6_1_1", "C3", 3, "inf_4"}, {"K7_1_1", "C4", 4, "inf_3"},
        {"K8_1_1", "D2", 4, "inf_3"}, {"K9_1_1", "C3", 3, "inf_3"}, {"K_0_1", "D2", 4, "inf_2"},
        {"K_0_2", "D2", 4, "inf_2"},  {"K_2_1", "D2", 4, "6_c"},   {"K_2_2", "D2", 4, "3_c"},
    };
    Catalog cat = Catalog::load_default();
    for (const auto& row : rows) {
        const auto& e = cat.entry(row.name);
        REQUIRE(e.expected.has_value());
        CHECK(to_string(e.expected->g2) == row.g2);
        CHECK(e.expected->r == row.r);
        CHECK(to_string(e.expected->face) == row.face);
    }
}

TEST_CASE("resolve: the explicit (1,1) entries carry the printed generators")
{
    Catalog cat = Catalog::load_default();
    auto gs = cat.resolve("K5_1_1");
    CHECK(gs.r0.translation == vec3(1, 0, 1));
    Mat3 d;
    d << -1, 0, 0, 0, 1, 0, 0, 0, -1;
    CHECK(gs.r0.linear == d);
    CHECK(gs.g2_names.count("R2") == 1);
    CHECK(gs.g2_names.count("R2hat") == 1);

    auto k9 = cat.resolve("K9_1_1");
    CHECK(k9.r0.translation == vec3(1, 1, -1));  // the twin lies in L_aaa
}

TEST_CASE("resolve: derivation chains and memoization")
{
    Catalog cat = Catalog::load_default();
    auto k01 = cat.resolve("K_0_1");
    CHECK(mirror_vector(k01) == std::pair<int, int>{0, 1});
    CHECK(k01.r0.linear == Mat3(-Mat3::Identity()));
    auto k21 = cat.resolve("K_2_1");
    CHECK(mirror_vector(k21) == std::pair<int, int>{2, 1});
    auto k22 = cat.resolve("K_2_2");
    CHECK(mirror_vector(k22) == std::pair<int, int>{2, 2});
    // Memoized resolve returns the identical generator set.
    CHECK(cat.resolve("K_2_2") == k22);
}

TEST_CASE("schema errors name the entry")
{
    Json doc = Catalog::default_document();
    doc["entries"]["K5_1_1"]["source"].erase("g2");
    try {
        Catalog::from_json(doc);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::schema);
        CHECK(std::string(e.what()).find("K5_1_1") != std::string::npos);
    }
}

TEST_CASE("derivation cycles are rejected")
{
    Json doc = Catalog::default_document();
    // Point K5_1_1 and K_0_1 at each other.
    doc["entries"]["K5_1_1"]["source"] =
        Json{{"kind", "derived"}, {"base", "K_0_1"}, {"op", "lambda0"},
             {"element", Json{{"name", "R2hat"}}}};
    Catalog cat = Catalog::from_json(doc);
    try {
        cat.resolve("K_0_1");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::schema);
        CHECK(std::string(e.what()).find("cycle") != std::string::npos);
    }
}

TEST_CASE("unresolved derivation base is a schema error")
{
    Json doc = Catalog::default_document();
    doc["entries"]["K_0_1"]["source"]["base"] = "K_nowhere";
    CHECK_THROWS_AS(Catalog::from_json(doc), Error);
}

TEST_CASE("unknown entry errors")
{
    Catalog cat = Catalog::load_default();
    CHECK_THROWS_AS(cat.entry("nosuch"), Error);
    CHECK_THROWS_AS(cat.resolve("nosuch"), Error);
}

TEST_CASE("apply round trip: fragment loads back to the same region")
{
    Catalog cat = Catalog::load_default();
    auto base = cat.resolve("K5_1_1");
    auto derived = lambda0(base, base.g2_names.at("R2hat"));
    Json fragment = generator_set_to_entry_json("derived_entry", derived);
    Catalog loaded = Catalog::from_json(fragment);
    auto round = loaded.resolve("derived_entry");
    auto a = build_complex(derived, ibox(-2, 2));
    auto b = build_complex(round, ibox(-2, 2));
    std::string witness;
    CHECK(regions_equal(a, b, &witness));
}

TEST_CASE("catalog JSON dumps are deterministic")
{
    Catalog cat = Catalog::load_default();
    std::string a = cat.to_json().dump(2);
    std::string b = Catalog::load_default().to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("isometry JSON round trip uses decimal-free rational strings")
{
    Isometry pr = make_isometry(Mat3(-Mat3::Identity()), vec3(Rat(1), Rat(0), Rat(1)));
    Json j = isometry_to_json(pr);
    CHECK(j["translation"][0] == "1");
    CHECK(isometry_from_json(j) == pr);
    Json bad = j;
    bad["linear"][0][0] = 2;
    CHECK_THROWS_AS(isometry_from_json(bad), Error);
}

TEST_CASE("catalog construction routes follow the intended plan")
{
    Catalog cat = Catalog::load_default();
    std::map<std::string, std::string> kinds;
    for (const auto& n : cat.names())
        kinds[n] = cat.entry(n).source.at("kind").get<std::string>();
    // The five explicitly printed generator sets.
    for (auto n : {"K5_1_1", "K6_1_1", "K7_1_1", "K8_1_1", "K9_1_1"})
        CHECK(kinds[n] == "explicit");
    // Eight reconstructed (1,2) rows.
    for (auto n : {"K1_1_2", "K2_1_2", "K3_1_2", "K4_1_2", "K5_1_2", "K6_1_2", "K7_1_2",
                   "K8_1_2"})
        CHECK(kinds[n] == "reconstructed");
    // Derivation routes.
    auto derived_from = [&](const char* n) {
        return cat.entry(n).source.at("base").get<std::string>();
    };
    CHECK(derived_from("K1_1_1") == "K3_1_2");
    CHECK(derived_from("K2_1_1") == "K5_1_2");
    CHECK(derived_from("K3_1_1") == "K6_1_2");
    CHECK(derived_from("K4_1_1") == "K7_1_2");
    CHECK(derived_from("K_0_1") == "K5_1_1");
    CHECK(derived_from("K_0_2") == "K1_1_2");
    CHECK(derived_from("K_2_1") == "K_0_1");
    CHECK(derived_from("K_2_2") == "K_0_2");
    CHECK(kinds["skel2_434"] == "skeleton2");
    for (auto n : {"skel2_apeir_33", "skel2_apeir_34", "skel2_apeir_43"})
        CHECK(kinds[n] == "apeir");
}
