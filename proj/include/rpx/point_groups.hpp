#pragma once

#include "rpx/geometry.hpp"

#include <string>
#include <vector>

namespace rpx {

struct FinitePointGroup {
    std::vector<Mat3> elements;  // closed, deterministic order
    std::vector<Mat3> generators;

    bool contains(const Mat3& m) const;
    std::size_t order() const { return elements.size(); }
};

// Multiplicative closure of a set of signed permutation matrices. Always a
// subgroup of the full octahedral group, so the order divides 48.
FinitePointGroup closure(const std::vector<Mat3>& gens);

struct PointGroupLabel {
    enum class Kind {
        oct_full,   // [3,4]
        oct_rot,    // [3,4]+
        tet_full,   // [3,3]
        tet_pyr,    // [3,3]*
        tet_rot,    // [3,3]+
        prism_4,    // [4,2]
        cyclic,     // C_p
        dihedral,   // D_p (order 2p, p plane reflections about a common line)
        other,
    };
    Kind kind = Kind::other;
    int p = 0;
    int order = 0;
    bool all_proper = false;
    bool has_inversion = false;
};

bool operator==(const PointGroupLabel& a, const PointGroupLabel& b);
std::string to_string(const PointGroupLabel& l);
PointGroupLabel point_group_label_from_string(const std::string& s);

// Identification by invariants (order, properness, central inversion,
// reflection count, rotation structure); exact within subgroups of [3,4].
PointGroupLabel identify(const FinitePointGroup& g);

struct EdgeStabilizerSpec {
    enum class Kind { cyclic, dihedral };
    Kind kind = Kind::cyclic;
    int r = 1;  // group order (= rotation order of S for cyclic groups)
    std::vector<Isometry> generators;
    std::vector<Isometry> elements;  // full closure
    bool below_minimum = false;      // r < 2

    const Isometry* find(const Isometry& iso) const;
    // The unique half-turn about the edge line, when one exists.
    std::optional<Isometry> half_turn() const;
    std::vector<Isometry> plane_reflections() const;
};

// Classifies the pointwise stabilizer of the segment (e0, e1) generated by
// `gens`. Every generator must fix both endpoints; the closure must have
// order at most 8.
EdgeStabilizerSpec classify_edge_stabilizer(const std::vector<Isometry>& gens, const Vec3& e0,
                                            const Vec3& e1);

}  // namespace rpx
