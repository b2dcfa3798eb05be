#pragma once

#include "rpx/region.hpp"

#include <vector>

namespace rpx {

// Direct construction of the 2-skeleton of the semiregular tessellation by
// regular tetrahedra and octahedra: octahedra centered at the odd cubic
// lattice points, tetrahedra on the even corners of each unit cube.
ComplexRegion semiregular_tessellation_skeleton(const IBox& box, Int margin = 2);

enum class TriangularPathKind { petrie, two_zigzag, two_hole };

// Face planes of the semiregular tessellation meeting the box: normals are
// the main diagonals, offsets even.
std::vector<PlaneEq> tessellation_face_planes(const IBox& box);

bool is_tessellation_face_plane(const PlaneEq& plane);

// Traces all paths of the requested kind in the triangular tessellation
// induced on the plane, clipped to the box. Hexagonal 2-holes come back as
// finite faces, the two zigzag kinds as infinite faces with periods.
std::vector<FaceGeometry> triangular_oracle(const PlaneEq& plane, TriangularPathKind kind,
                                            const IBox& box);

}  // namespace rpx
