#include <doctest.h>

#include "fixtures.hpp"

#include "rpx/verify.hpp"

using namespace rpx;
using namespace rpx::fixtures;

TEST_CASE("semiregular tessellation skeleton: counts and r=4")
{
    auto s = semiregular_tessellation_skeleton(ibox(0, 2));
    std::size_t in_box = 0;
    for (const auto& v : s.vertices)
        if (s.box.contains(v))
            ++in_box;
    CHECK(in_box == 14);  // parity-oracle count over [0,2]^3
    auto s3 = semiregular_tessellation_skeleton(ibox(-3, 3));
    CHECK(!s3.interior_edges().empty());
    for (const auto& e : s3.interior_edges())
        CHECK(faces_per_edge(s3, e) == 4);
    // Every face is a triangle shared by exactly two tiles: with one
    // octahedron and one tetrahedron face list each triangle arrived twice
    // and deduplicated, so each interior edge sees 4 distinct triangles.
    for (const auto& [k, f] : s3.faces)
        CHECK(f.cls == FaceClass{FaceKind::convex_polygon, 3});
}

TEST_CASE("triangular oracle: printed base faces appear on x+y-z=0")
{
    PlaneEq plane{vec3i(1, 1, -1), Rat(0)};
    IBox box = ibox(-3, 3);

    // 2-zigzag: the (0,1) base face.
    FaceGeometry zz;
    zz.cls = FaceClass{FaceKind::zigzag, 2};
    zz.ring = {vec3(-1, 1, 0), vec3(0, 0, 0), vec3(1, 0, 1)};
    zz.period = vec3(2, -1, 1);
    auto two_zz = triangular_oracle(plane, TriangularPathKind::two_zigzag, box);
    bool found = false;
    for (const auto& f : two_zz)
        found |= canonical_key(f) == canonical_key(zz);
    CHECK(found);

    // Petrie polygon: the (0,2) base face.
    FaceGeometry pt;
    pt.cls = FaceClass{FaceKind::zigzag, 2};
    pt.ring = {vec3(0, 1, 1), vec3(0, 0, 0), vec3(1, 0, 1)};
    pt.period = vec3(1, -1, 0);
    auto petrie = triangular_oracle(plane, TriangularPathKind::petrie, box);
    found = false;
    for (const auto& f : petrie)
        found |= canonical_key(f) == canonical_key(pt);
    CHECK(found);
    // The two kinds are genuinely different path families.
    for (const auto& f : petrie)
        CHECK(canonical_key(f) != canonical_key(zz));

    // 2-hole: the (2,1) base hexagon.
    FaceGeometry hex;
    hex.cls = FaceClass{FaceKind::convex_polygon, 6};
    hex.ring = {vec3(0, 0, 0), vec3(1, 0, 1),  vec3(1, 1, 2),
                vec3(0, 2, 2), vec3(-1, 2, 1), vec3(-1, 1, 0)};
    auto holes = triangular_oracle(plane, TriangularPathKind::two_hole, box);
    found = false;
    for (const auto& f : holes)
        found |= canonical_key(f) == canonical_key(hex);
    CHECK(found);
}

TEST_CASE("triangular oracle rejects non-face planes")
{
    CHECK_THROWS_AS(
        triangular_oracle(PlaneEq{vec3i(1, 0, 0), Rat(0)}, TriangularPathKind::petrie,
                          ibox(-2, 2)),
        Error);
    CHECK_THROWS_AS(
        triangular_oracle(PlaneEq{vec3i(1, 1, -1), Rat(1)}, TriangularPathKind::petrie,
                          ibox(-2, 2)),
        Error);
}

TEST_CASE("check_subcomplex: direction and box mismatches")
{
    // K6(1,1) helices sit inside the full.... use K7 < K3-style pair at unit
    // scale via explicit fixtures: K9(1,1) inside K1(1,1) is exercised in
    // the acceptance suite; here check the antisymmetry on a small pair.
    auto cr6 = build_complex(k6_11(), ibox(-2, 2));
    auto cr6b = build_complex(k6_11(), ibox(-2, 2));
    CHECK(check_subcomplex(cr6, cr6b));
    auto other_box = build_complex(k6_11(), ibox(-1, 1));
    CHECK_THROWS_AS(check_subcomplex(cr6, other_box), Error);
}

TEST_CASE("verify_entry: report structure, timing, JSON rendering")
{
    Catalog cat = Catalog::load_default();
    Report rep = verify_entry(cat, "K5_1_1", ibox(-3, 3));
    CHECK(rep.ok());
    CHECK(rep.elapsed_ms > 0);
    bool has_skip = false;
    for (const auto& c : rep.checks)
        has_skip |= c.status == CheckStatus::skipped;
    CHECK(has_skip);  // the compound-of-12 claim is recorded as unverified
    Json j = report_to_json(rep);
    CHECK(j["ok"] == true);
    CHECK(j["entry"] == "K5_1_1");
    std::string text = report_to_text(rep);
    CHECK(text.find("[skip]") != std::string::npos);
    CHECK(text.find("K5_1_1") != std::string::npos);
}

TEST_CASE("zigzag complexes distinguish the two cuboctahedral figures")
{
    Catalog cat = Catalog::load_default();
    auto cr01 = build_complex(cat.resolve("K_0_1"), ibox(-3, 3));
    auto vf01 = vertex_figure(cr01, vec3(0, 0, 0));
    CHECK(match_vertex_figure(vf01, "ns-cuboctahedron"));
    CHECK(!match_vertex_figure(vf01, "cuboctahedron"));
    auto cr02 = build_complex(cat.resolve("K_0_2"), ibox(-3, 3));
    auto vf02 = vertex_figure(cr02, vec3(0, 0, 0));
    CHECK(match_vertex_figure(vf02, "cuboctahedron"));
    CHECK(!match_vertex_figure(vf02, "ns-cuboctahedron"));
}

TEST_CASE("verify_entry: degenerate box reports an error")
{
    Catalog cat = Catalog::load_default();
    Report rep = verify_entry(cat, "K5_1_1", ibox(0, 0));
    CHECK(!rep.ok());
    CHECK(!rep.error.empty());
}

TEST_CASE("verify_entry: a wrong expectation fails with a witness")
{
    Json doc = Catalog::default_document();
    doc["entries"]["K5_1_1"]["expected"]["r"] = 5;
    Catalog cat = Catalog::from_json(doc);
    Report rep = verify_entry(cat, "K5_1_1", ibox(-3, 3));
    CHECK(!rep.ok());
    bool saw = false;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::fail && !c.detail.empty())
            saw = true;
    CHECK(saw);
}
