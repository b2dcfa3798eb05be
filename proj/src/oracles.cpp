#include "rpx/oracles.hpp"

#include "rpx/lattices.hpp"

#include <algorithm>
#include <numeric>

namespace rpx {

ComplexRegion semiregular_tessellation_skeleton(const IBox& box, Int margin)
{
    if (!box.valid())
        throw Error(ErrorCode::degenerate_box, "invalid box " + to_string(box));
    ComplexRegion cr;
    cr.box = box;
    cr.margin = margin;
    cr.working_box = box.inflated(3);
    const IBox& wb = cr.working_box;

    VertexSetLabel fcc{VertexSetKind::FCC, Rat(1)};
    for (const auto& v : enumerate(fcc, wb))
        cr.vertices.insert(v);

    auto add_triangle = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
        if (!wb.contains(a) || !wb.contains(b) || !wb.contains(c))
            return;
        FaceGeometry f;
        f.cls = FaceClass{FaceKind::convex_polygon, 3};
        f.ring = {a, b, c};
        cr.insert_edge(a, b);
        cr.insert_edge(b, c);
        cr.insert_edge(a, c);
        cr.insert_face(f, make_edge(a, b));
        cr.insert_face(f, make_edge(b, c));
        cr.insert_face(f, make_edge(a, c));
    };

    // Octahedron faces: centers at odd-coordinate-sum integer points, one
    // triangle per octant.
    for (Int x = wb.lo[0] - 1; x <= wb.hi[0] + 1; ++x)
        for (Int y = wb.lo[1] - 1; y <= wb.hi[1] + 1; ++y)
            for (Int z = wb.lo[2] - 1; z <= wb.hi[2] + 1; ++z) {
                if (((x + y + z) % 2 + 2) % 2 != 1)
                    continue;
                Vec3 u = vec3(x, y, z);
                for (Int sx : {-1, 1})
                    for (Int sy : {-1, 1})
                        for (Int sz : {-1, 1})
                            add_triangle(u + vec3(sx, 0, 0), u + vec3(0, sy, 0),
                                         u + vec3(0, 0, sz));
            }
    // Tetrahedron faces: the four even-coordinate-sum corners of each unit
    // cube span one tetrahedron; its triangles coincide with octahedron
    // faces as point sets and deduplicate by canonical key.
    for (Int x = wb.lo[0] - 1; x <= wb.hi[0]; ++x)
        for (Int y = wb.lo[1] - 1; y <= wb.hi[1]; ++y)
            for (Int z = wb.lo[2] - 1; z <= wb.hi[2]; ++z) {
                std::vector<Vec3> even;
                for (Int dx : {0, 1})
                    for (Int dy : {0, 1})
                        for (Int dz : {0, 1})
                            if ((((x + dx) + (y + dy) + (z + dz)) % 2 + 2) % 2 == 0)
                                even.push_back(vec3(x + dx, y + dy, z + dz));
                if (even.size() != 4)
                    continue;
                for (int skip = 0; skip < 4; ++skip) {
                    std::vector<Vec3> tri;
                    for (int i = 0; i < 4; ++i)
                        if (i != skip)
                            tri.push_back(even[i]);
                    add_triangle(tri[0], tri[1], tri[2]);
                }
            }
    return cr;
}

bool is_tessellation_face_plane(const PlaneEq& plane)
{
    Vec3I n = plane.normal;
    if (std::abs(n[0]) != 1 || std::abs(n[1]) != 1 || std::abs(n[2]) != 1)
        return false;
    if (plane.offset.denominator() != 1)
        return false;
    return ((plane.offset.numerator() % 2) + 2) % 2 == 0;
}

std::vector<PlaneEq> tessellation_face_planes(const IBox& box)
{
    std::vector<PlaneEq> out;
    Int reach = 0;
    for (int i = 0; i < 3; ++i)
        reach += std::max(std::abs(box.lo[i]), std::abs(box.hi[i]));
    std::vector<Vec3I> normals{vec3i(1, 1, 1), vec3i(1, 1, -1), vec3i(1, -1, 1),
                               vec3i(-1, 1, 1)};
    for (auto n : normals) {
        n = primitive(n);
        for (Int c = -reach; c <= reach; ++c) {
            if (((c % 2) + 2) % 2 != 0)
                continue;
            out.push_back(PlaneEq{n, Rat(c)});
        }
    }
    return out;
}

namespace {

struct PlaneFrame {
    Vec3I normal;
    Rat offset;
    std::vector<Vec3I> dirs;  // the 6 lattice directions, in cyclic order
};

PlaneFrame make_frame(const PlaneEq& plane)
{
    if (!is_tessellation_face_plane(plane))
        throw Error(ErrorCode::unsupported,
                    "plane is not a face plane of the semiregular tessellation");
    PlaneFrame fr;
    fr.normal = plane.normal;
    // Orient the normal toward (1,1,1).
    if (fr.normal[0] + fr.normal[1] + fr.normal[2] < 0)
        fr.normal = -fr.normal;
    fr.offset = plane.offset * (fr.normal == plane.normal ? Rat(1) : Rat(-1));

    // The six face-diagonal directions orthogonal to the normal.
    std::vector<Vec3I> dirs;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (Int si : {-1, 1})
                for (Int sj : {-1, 1}) {
                    Vec3I d = vec3i(0, 0, 0);
                    d[i] = si;
                    d[j] = sj;
                    if (d.dot(fr.normal) == 0)
                        dirs.push_back(d);
                }
    if (dirs.size() != 6)
        throw Error(ErrorCode::unsupported, "unexpected in-plane direction count");

    // Exact angular order around the oriented normal.
    Vec3I u0 = dirs[0];
    Vec3I v0 = vec3i(fr.normal[1] * u0[2] - fr.normal[2] * u0[1],
                     fr.normal[2] * u0[0] - fr.normal[0] * u0[2],
                     fr.normal[0] * u0[1] - fr.normal[1] * u0[0]);
    auto half = [&](const Vec3I& d) {
        Int y = d.dot(v0);
        Int x = d.dot(u0);
        return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
    };
    auto angle_less = [&](const Vec3I& a, const Vec3I& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        // Same half-plane: compare by cross sign.
        Int cross = a.dot(u0) * b.dot(v0) - b.dot(u0) * a.dot(v0);
        return cross > 0;
    };
    std::sort(dirs.begin(), dirs.end(), angle_less);
    fr.dirs = dirs;
    return fr;
}

int dir_index(const PlaneFrame& fr, const Vec3I& d)
{
    for (int i = 0; i < 6; ++i)
        if (fr.dirs[i] == d)
            return i;
    throw Error(ErrorCode::unsupported, "direction not in plane frame");
}

Vec3I rot_steps(const PlaneFrame& fr, const Vec3I& d, int k)
{
    return fr.dirs[((dir_index(fr, d) + k) % 6 + 6) % 6];
}

std::vector<Vec3> plane_vertices(const PlaneFrame& fr, const IBox& box)
{
    std::vector<Vec3> out;
    VertexSetLabel fcc{VertexSetKind::FCC, Rat(1)};
    for (const auto& p : enumerate(fcc, box))
        if (Rat(fr.normal[0]) * p[0] + Rat(fr.normal[1]) * p[1] + Rat(fr.normal[2]) * p[2] ==
            fr.offset)
            out.push_back(p);
    return out;
}

}  // namespace

std::vector<FaceGeometry> triangular_oracle(const PlaneEq& plane, TriangularPathKind kind,
                                            const IBox& box)
{
    PlaneFrame fr = make_frame(plane);
    IBox wb = box.inflated(2);
    auto verts = plane_vertices(fr, wb);
    std::map<std::string, FaceGeometry> out;

    if (kind == TriangularPathKind::two_hole) {
        // Hexagons around each plane vertex: the 2-holes of the triangular
        // tessellation.
        for (const auto& c : verts) {
            FaceGeometry f;
            f.cls = FaceClass{FaceKind::convex_polygon, 6};
            bool inside = true;
            for (int i = 0; i < 6; ++i) {
                Vec3 p = c + to_rat(fr.dirs[i]);
                if (!wb.contains(p))
                    inside = false;
                f.ring.push_back(p);
            }
            if (!inside)
                continue;
            out.emplace(canonical_key(f), f);
        }
    } else {
        // Zigzag paths with alternating turns: +-2 steps for the Petrie
        // polygons, +-1 steps for the 2-zigzags.
        int turn = kind == TriangularPathKind::petrie ? 2 : 1;
        for (const auto& v0 : verts)
            for (int i = 0; i < 6; ++i)
                for (int phase : {+1, -1}) {
                    // Walk: arrive at v0 by d_in, leave by rot(d_in, s) with
                    // s alternating phase*turn.
                    Vec3I d_in = fr.dirs[i];
                    Vec3I d_out = rot_steps(fr, d_in, phase * turn);
                    Vec3 prev = v0 - to_rat(d_in);
                    Vec3 next = v0 + to_rat(d_out);
                    // Two vertices per period: the window [v_-1, v_0, v_1]
                    // has period v_1 - v_-1. Start at the smaller neighbor,
                    // mirroring the base-face trace convention.
                    FaceGeometry f;
                    f.cls = FaceClass{FaceKind::zigzag, 2};
                    if (lex_less(prev, next)) {
                        f.ring = {prev, v0, next};
                        f.period = next - prev;
                    } else {
                        f.ring = {next, v0, prev};
                        f.period = prev - next;
                    }
                    Vec3 t = *f.period;
                    Int lcm = 1;
                    for (int k2 = 0; k2 < 3; ++k2)
                        lcm = std::lcm(lcm, t[k2].denominator());
                    f.axis = primitive(vec3i((t[0] * lcm).numerator(), (t[1] * lcm).numerator(),
                                             (t[2] * lcm).numerator()));
                    out.emplace(canonical_key(f), f);
                }
    }
    return [&] {
        std::vector<FaceGeometry> v;
        v.reserve(out.size());
        for (auto& [k, f] : out)
            v.push_back(std::move(f));
        return v;
    }();
}

}  // namespace rpx
