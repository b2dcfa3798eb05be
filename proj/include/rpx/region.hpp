#pragma once

#include "rpx/face.hpp"
#include "rpx/generator_set.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rpx {

struct VecLess {
    bool operator()(const Vec3& a, const Vec3& b) const { return lex_less(a, b); }
};

using Edge = std::pair<Vec3, Vec3>;  // lex-normalized: first < second

inline Edge make_edge(const Vec3& a, const Vec3& b)
{
    return lex_less(a, b) ? Edge{a, b} : Edge{b, a};
}

struct EdgeLess {
    bool operator()(const Edge& a, const Edge& b) const
    {
        if (lex_less(a.first, b.first))
            return true;
        if (lex_less(b.first, a.first))
            return false;
        return lex_less(a.second, b.second);
    }
};

struct BuildOptions {
    Int margin = 2;   // interior margin, in scale units
    Int collar = 3;   // working box inflation beyond the report box
    std::size_t node_cap = 4'000'000;
    bool require_base = true;
    bool audit = true;  // saturation sweep over interior flags
};

// Bounded realization of a complex: everything discovered inside the working
// box, with "interior" queries restricted to the report box shrunk by the
// margin so boundary truncation cannot leak into verified claims.
struct ComplexRegion {
    IBox box;
    IBox working_box;
    Int margin = 2;
    std::optional<GeneratorSet> gs;
    std::optional<FaceGeometry> base_face;

    std::set<Vec3, VecLess> vertices;
    std::set<Edge, EdgeLess> edges;
    std::map<std::string, FaceGeometry> faces;  // canonical key -> geometry
    std::map<Edge, std::set<std::string>, EdgeLess> edge_faces;
    std::map<Vec3, std::set<Vec3, VecLess>, VecLess> adjacency;
    std::size_t flags_visited = 0;

    IBox interior_box() const { return box.shrunk(margin); }
    bool is_interior(const Vec3& p) const { return interior_box().contains(p); }
    bool is_interior(const Edge& e) const { return is_interior(e.first) && is_interior(e.second); }

    std::vector<Vec3> interior_vertices() const;
    std::vector<Edge> interior_edges() const;
    // Keys of faces incident to at least one interior edge.
    std::set<std::string> interior_face_keys() const;

    void insert_face(const FaceGeometry& f, const Edge& at_edge);
    void insert_edge(const Vec3& a, const Vec3& b);
};

ComplexRegion build_complex(const GeneratorSet& gs, const IBox& box, const BuildOptions& = {});

// Number of faces containing an interior edge.
int faces_per_edge(const ComplexRegion& cr, const Edge& e);

struct VertexFigure {
    Vec3 center;
    std::vector<Vec3> neighbors;
    // Edge multiset on neighbor indices (i<j), multiplicity = number of
    // faces passing through both edges at the center.
    std::map<std::pair<int, int>, int> edge_mult;
};

VertexFigure vertex_figure(const ComplexRegion& cr, const Vec3& v);

// Congruence match (single global isometry + scaling) against a named
// reference model; multiplicities must match exactly.
bool match_vertex_figure(const VertexFigure& vf, const std::string& label);

// Neighbor count of the named reference model.
int vertex_figure_degree(const std::string& label);

// True when the base face is planar and the reflection through its plane
// maps the region's interior into the region.
bool detect_face_mirror(const GeneratorSet& gs, const ComplexRegion& cr);

// Reflection through an exact plane, when it is a signed-permutation
// isometry (otherwise nullopt: such a reflection cannot preserve any complex
// in scope).
std::optional<Isometry> plane_reflection(const PlaneEq& plane);

}  // namespace rpx
