#pragma once

#include "rpx/geometry.hpp"

#include <string>
#include <vector>

namespace rpx {

// Vertex-set point classes at scale a: the cubic lattice aZ^3, the
// face-centered lattice L_aa0 (even coordinate sum), the body-centered
// lattice L_aaa (all coordinates congruent mod 2), and the two derived point
// sets V_a and W_a.
enum class VertexSetKind { Z3, FCC, BCC, Va, Wa };

struct VertexSetLabel {
    VertexSetKind kind = VertexSetKind::Z3;
    Rat a = Rat(1);
};

bool operator==(const VertexSetLabel& x, const VertexSetLabel& y);
std::string to_string(const VertexSetLabel& l);
VertexSetLabel vertex_set_from_string(const std::string& s, Rat a = Rat(1));

bool contains(const VertexSetLabel& label, const Vec3& p);

// All member points inside the closed integer box.
std::vector<Vec3> enumerate(const VertexSetLabel& label, const IBox& box);

}  // namespace rpx
