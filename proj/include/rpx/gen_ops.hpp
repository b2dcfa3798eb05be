#pragma once

#include "rpx/generator_set.hpp"
#include "rpx/lattices.hpp"
#include "rpx/region.hpp"

#include <string>
#include <vector>

namespace rpx {

// (R0, R1, G2) -> (R0*R, R1, G2) for an element R of G2 making R0*R an
// involution. Preserves the vertex- and edge-set of the built complex.
GeneratorSet lambda0(const GeneratorSet& gs, const Isometry& r);

// (R0, R1, G2) -> (R0, R1*R, G2), same preconditions on R1*R.
GeneratorSet lambda1(const GeneratorSet& gs, const Isometry& r);

// (R0, R1, S) -> (R0, T3*R1, S) for cyclic G2 = <S>, where T3 is the
// reflection through the (planar) base face plane. Swaps mirror vectors
// (0,1) <-> (0,2) and rebuilds the same 2-skeleton.
GeneratorSet petrie_lambda(const GeneratorSet& gs, const Isometry& t3);

// Free abelian apeirotope over a finite rational polyhedron Q, given by the
// distinguished generators T1..T3 of Q's symmetry group and the point
// reflection T0 in half the initial vertex.
struct ApeirData {
    std::string q;  // "tetra33", "octa34", "cube43"
    Isometry t0, t1, t2, t3;
    Vec3 base_vertex;
    Vec3 initial_vertex;  // w, the twin of the apeirotope's base edge
};

ApeirData apeir(const std::string& q_id);

// 2-skeleton generator set (R0=T0, R1=T1, G2=<T2,T3>).
GeneratorSet apeir_skeleton(const ApeirData& data);

// The same 2-skeleton presented by the index-2 flag-transitive subgroup
// (T0, T1*T3, <T2*T3>), which has a cyclic edge stabilizer. This is the
// presentation the Petrie-type operation acts on.
GeneratorSet apeir_skeleton_cyclic(const ApeirData& data);

// The reflection through the plane of this presentation's base face.
Isometry apeir_t3(const ApeirData& data);

// Explicit 2-skeleton of the cubical tessellation.
GeneratorSet skeleton2_cubical();

struct ReconstructionConstraints {
    std::pair<int, int> mirror_vector{1, 2};
    Vec3 twin;
    EdgeStabilizerSpec::Kind g2_kind = EdgeStabilizerSpec::Kind::dihedral;
    int g2_order = 4;
    FaceClass face;
    VertexSetLabel vertex_set;
    std::string vertex_figure;
    PointGroupLabel special_group;
    int r = 4;
    Vec3 base_vertex = vec3(0, 0, 0);
    // Optional explicit base-face data (cycle for finite faces, window plus
    // period for infinite ones); pins the representative among conjugate
    // generator sets of the same complex.
    std::vector<Vec3> base_face_ring;
    std::optional<Vec3> base_face_period;
};

struct ReconstructionResult {
    GeneratorSet gs;
    int candidates_tested = 0;
    int hits = 0;             // generator sets passing every constraint
    int region_classes = 1;   // distinct built regions among the hits
    // Region classes up to a signed-permutation change of coordinates.
    // Enantiomorphic realizations (possible only with cyclic G2) merge here;
    // anything above 1 is a hard ambiguity.
    int congruence_classes = 1;
};

// Exhaustive search over signed-permutation generator candidates compatible
// with the twin vertex; every hit must build a region satisfying the full
// constraint battery, and all hits must build the same region.
ReconstructionResult reconstruct_generators(const ReconstructionConstraints& c,
                                            const IBox& check_box = ibox(-3, 3));

}  // namespace rpx
