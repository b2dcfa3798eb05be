#pragma once

#include "rpx/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rpx {

// Face types that occur in regular complexes: finite planar (convex) or skew
// p-gons, planar zigzags, and helices over k-gons (k = 3 or 4).
enum class FaceKind { convex_polygon, skew_polygon, zigzag, helix };

struct FaceClass {
    FaceKind kind = FaceKind::convex_polygon;
    int p = 0;  // gon count for finite faces, k for helices, 2 for zigzags
};

bool operator==(const FaceClass& a, const FaceClass& b);
std::string to_string(const FaceClass& c);
FaceClass face_class_from_string(const std::string& s);  // "3_c","4_s","inf_2","inf_3",...

// Exact plane n.x = c with primitive integer normal, first nonzero entry
// positive.
struct PlaneEq {
    Vec3I normal;
    Rat offset;
};
bool operator==(const PlaneEq& a, const PlaneEq& b);
bool operator<(const PlaneEq& a, const PlaneEq& b);

struct FaceGeometry {
    FaceClass cls;
    // Finite: the p vertices in cycle order. Infinite: a window of p+1
    // consecutive vertices (p vertices per period), last = first + period.
    std::vector<Vec3> ring;
    std::optional<Vec3> period;   // infinite faces only
    std::optional<Vec3I> axis;    // helix/zigzag translation axis direction

    bool is_infinite() const { return period.has_value(); }
    int per_period() const { return static_cast<int>(ring.size()) - (is_infinite() ? 1 : 0); }
};

FaceGeometry transform(const FaceGeometry& f, const Isometry& iso);

// Canonical string key: equal faces (as subsets of E^3 with their edge
// structure) get equal keys regardless of the representative window/cycle.
std::string canonical_key(const FaceGeometry& f);

std::optional<PlaneEq> plane_of(const FaceGeometry& f);
bool coplanar(const std::vector<Vec3>& pts);

// Consecutive runs of face vertices meeting the box. For finite faces one
// run of p+1 points (closed cycle, last = first); for infinite faces the
// maximal run whose edges touch the box.
std::vector<Vec3> face_vertices_in_box(const FaceGeometry& f, const IBox& box);

bool face_has_edge(const FaceGeometry& f, const Vec3& a, const Vec3& b);

std::string face_to_string(const FaceGeometry& f);

}  // namespace rpx
