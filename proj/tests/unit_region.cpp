#include <doctest.h>

#include "fixtures.hpp"

#include "rpx/lattices.hpp"
#include "rpx/region.hpp"

using namespace rpx;
using namespace rpx::fixtures;

namespace {

bool same_points(const std::vector<Vec3>& a, const std::vector<Vec3>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

}  // namespace

TEST_CASE("build K5(1,1): vertex set is the face-centered lattice")
{
    auto cr = build_complex(k5_11(), ibox(-2, 2));
    // 63 of the 125 integer points in [-2,2]^3 have even coordinate sum.
    std::vector<Vec3> in_box;
    for (const auto& v : cr.vertices)
        if (cr.box.contains(v))
            in_box.push_back(v);
    CHECK(in_box.size() == 63);
    auto expect = enumerate(VertexSetLabel{VertexSetKind::FCC, Rat(1)}, cr.box);
    CHECK(same_points(in_box, expect));
}

TEST_CASE("build: box missing the base vertex")
{
    IBox far{vec3i(5, 5, 5), vec3i(7, 7, 7)};
    CHECK_THROWS_AS(build_complex(k5_11(), far), Error);
    BuildOptions opts;
    opts.require_base = false;
    auto cr = build_complex(k5_11(), far, opts);
    CHECK(cr.vertices.empty());
}

TEST_CASE("faces per interior edge")
{
    auto cr5 = build_complex(k5_11(), ibox(-3, 3));
    for (const auto& e : cr5.interior_edges())
        CHECK(faces_per_edge(cr5, e) == 4);
    auto cr9 = build_complex(k9_11(), ibox(-3, 3));
    CHECK(!cr9.interior_edges().empty());
    for (const auto& e : cr9.interior_edges())
        CHECK(faces_per_edge(cr9, e) == 3);
    // Boundary edges are rejected.
    for (const auto& e : cr5.edges)
        if (!cr5.is_interior(e)) {
            CHECK_THROWS_AS(faces_per_edge(cr5, e), Error);
            break;
        }
}

TEST_CASE("vertex figures of the explicit complexes")
{
    // K7(1,1): simple octahedron edge graph on (+-a,0,0),(0,+-a,0),(0,0,+-a).
    auto cr7 = build_complex(k7_11(), ibox(-3, 3));
    auto vf7 = vertex_figure(cr7, vec3(0, 0, 0));
    CHECK(vf7.neighbors.size() == 6);
    for (const auto& n : vf7.neighbors) {
        Rat d2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
        CHECK(d2 == Rat(1));
    }
    CHECK(match_vertex_figure(vf7, "octahedron"));
    CHECK(!match_vertex_figure(vf7, "cube"));

    // K6(1,1): simple tetrahedron on (a,-a,a),(-a,a,a),(a,a,-a),(-a,-a,-a).
    auto cr6 = build_complex(k6_11(), ibox(-3, 3));
    auto vf6 = vertex_figure(cr6, vec3(0, 0, 0));
    REQUIRE(vf6.neighbors.size() == 4);
    std::set<std::string> got;
    for (const auto& n : vf6.neighbors)
        got.insert(vec_to_string(n));
    std::set<std::string> expect{"(1,-1,1)", "(-1,1,1)", "(1,1,-1)", "(-1,-1,-1)"};
    CHECK(got == expect);
    CHECK(match_vertex_figure(vf6, "tetrahedron"));

    // K9(1,1): simple cube edge graph.
    auto cr9 = build_complex(k9_11(), ibox(-3, 3));
    CHECK(match_vertex_figure(vertex_figure(cr9, vec3(0, 0, 0)), "cube"));

    // Boundary vertex rejected.
    CHECK_THROWS_AS(vertex_figure(cr7, vec3(3, 0, 0)), Error);
}

TEST_CASE("K5(1,1) vertex figure: the non-standard cuboctahedron")
{
    auto cr = build_complex(k5_11(), ibox(-3, 3));
    auto vf = vertex_figure(cr, vec3(0, 0, 0));
    REQUIRE(vf.neighbors.size() == 12);
    CHECK(match_vertex_figure(vf, "ns-cuboctahedron"));
    CHECK(!match_vertex_figure(vf, "cuboctahedron"));
    // The four neighbors adjacent to (1,1,0) in the vertex figure.
    auto idx = [&](const Vec3& p) {
        for (std::size_t i = 0; i < vf.neighbors.size(); ++i)
            if (vf.neighbors[i] == p)
                return static_cast<int>(i);
        return -1;
    };
    int u = idx(vec3(1, 1, 0));
    REQUIRE(u >= 0);
    std::set<std::string> adj;
    for (const auto& [e, m] : vf.edge_mult) {
        CHECK(m == 1);
        if (e.first == u)
            adj.insert(vec_to_string(vf.neighbors[e.second]));
        if (e.second == u)
            adj.insert(vec_to_string(vf.neighbors[e.first]));
    }
    std::set<std::string> expect{"(-1,0,1)", "(0,-1,1)", "(-1,0,-1)", "(0,-1,-1)"};
    CHECK(adj == expect);
}

TEST_CASE("all interior vertex figures are congruent to the model")
{
    auto cr = build_complex(k6_11(), ibox(-3, 3));
    int checked = 0;
    for (const auto& v : cr.interior_vertices()) {
        CHECK(match_vertex_figure(vertex_figure(cr, v), "tetrahedron"));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("node cap aborts oversized builds with a resource error")
{
    BuildOptions opts;
    opts.node_cap = 50;
    try {
        build_complex(k5_11(), ibox(-3, 3), opts);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::resource_limit);
    }
}

TEST_CASE("empty vertex figure matches nothing")
{
    VertexFigure vf;
    vf.center = vec3(0, 0, 0);
    CHECK(!match_vertex_figure(vf, "tetrahedron"));
    CHECK(!match_vertex_figure(vf, "cuboctahedron"));
    CHECK_THROWS_AS(match_vertex_figure(vf, "icosahedron"), Error);
}

TEST_CASE("face mirrors are absent from the helical complexes")
{
    auto cr = build_complex(k5_11(), ibox(-2, 2));
    CHECK(!detect_face_mirror(k5_11(), cr));
}
