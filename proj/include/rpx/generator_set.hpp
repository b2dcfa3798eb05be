#pragma once

#include "rpx/face.hpp"
#include "rpx/point_groups.hpp"

#include <map>
#include <string>
#include <vector>

namespace rpx {

// Distinguished generators of a regular complex: the base-vertex mover R0,
// the edge flipper R1, and the pointwise edge stabilizer G2, all relative to
// a base vertex (default o) and the base edge {o, R0(o)}.
struct GeneratorSet {
    Isometry r0;
    Isometry r1;
    EdgeStabilizerSpec g2;
    Vec3 base_vertex;
    std::map<std::string, Isometry> g2_names;  // per-entry naming of G2 elements

    Vec3 twin() const { return apply(r0, base_vertex); }
    std::vector<Isometry> generators() const;  // r0, r1, g2 generators
};

GeneratorSet make_generator_set(const Isometry& r0, const Isometry& r1,
                                const std::vector<Isometry>& g2_gens, const Vec3& base_vertex,
                                std::map<std::string, Isometry> g2_names = {});

bool operator==(const GeneratorSet& a, const GeneratorSet& b);

// (dim fix R0, dim fix R1); both generators must be involutions.
std::pair<int, int> mirror_vector(const GeneratorSet& gs);

// Linear parts of all distinguished generators, closed up: the special group
// of the generated symmetry group.
FinitePointGroup special_group(const GeneratorSet& gs);

// Closure of the linear parts of <R1, G2>: the vertex-figure group at the
// base vertex.
FinitePointGroup vertex_figure_group(const GeneratorSet& gs);

// Orbit of the base vertex under <R0, R1>, classified. The cycle starts at
// the base vertex and steps toward the twin; infinite faces are returned as
// one period window starting at the lexicographically smaller neighbor of
// the base vertex.
FaceGeometry trace_base_face(const GeneratorSet& gs, int max_steps = 64);

}  // namespace rpx
