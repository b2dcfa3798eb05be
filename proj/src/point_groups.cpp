#include "rpx/point_groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rpx {

namespace {

std::array<Int, 9> mat_key(const Mat3& m)
{
    std::array<Int, 9> k{};
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            k[n++] = m(i, j);
    return k;
}

}  // namespace

bool FinitePointGroup::contains(const Mat3& m) const
{
    return std::find(elements.begin(), elements.end(), m) != elements.end();
}

FinitePointGroup closure(const std::vector<Mat3>& gens)
{
    for (const auto& g : gens)
        require_signed_permutation(g);
    std::set<std::array<Int, 9>> seen;
    std::vector<Mat3> elems;
    std::vector<Mat3> frontier;
    auto push = [&](const Mat3& m) {
        if (seen.insert(mat_key(m)).second) {
            elems.push_back(m);
            frontier.push_back(m);
        }
    };
    push(Mat3::Identity());
    while (!frontier.empty()) {
        Mat3 m = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            push(Mat3(m * g));
            push(Mat3(g * m));
        }
    }
    std::sort(elems.begin(), elems.end(),
              [](const Mat3& a, const Mat3& b) { return mat_key(a) < mat_key(b); });
    return FinitePointGroup{std::move(elems), gens};
}

bool operator==(const PointGroupLabel& a, const PointGroupLabel& b)
{
    if (a.kind != b.kind)
        return false;
    if (a.kind == PointGroupLabel::Kind::cyclic || a.kind == PointGroupLabel::Kind::dihedral)
        return a.p == b.p;
    if (a.kind == PointGroupLabel::Kind::other)
        return a.order == b.order && a.all_proper == b.all_proper &&
               a.has_inversion == b.has_inversion;
    return true;
}

std::string to_string(const PointGroupLabel& l)
{
    using K = PointGroupLabel::Kind;
    switch (l.kind) {
        case K::oct_full: return "[3,4]";
        case K::oct_rot: return "[3,4]+";
        case K::tet_full: return "[3,3]";
        case K::tet_pyr: return "[3,3]*";
        case K::tet_rot: return "[3,3]+";
        case K::prism_4: return "[4,2]";
        case K::cyclic: return "C" + std::to_string(l.p);
        case K::dihedral: return "D" + std::to_string(l.p);
        case K::other: {
            std::ostringstream os;
            os << "other(order=" << l.order << "," << (l.all_proper ? "proper" : "improper")
               << "," << (l.has_inversion ? "inv" : "no-inv") << ")";
            return os.str();
        }
    }
    return "?";
}

PointGroupLabel point_group_label_from_string(const std::string& s)
{
    using K = PointGroupLabel::Kind;
    PointGroupLabel l;
    if (s == "[3,4]") {
        l.kind = K::oct_full;
        l.order = 48;
    } else if (s == "[3,4]+") {
        l.kind = K::oct_rot;
        l.order = 24;
        l.all_proper = true;
    } else if (s == "[3,3]") {
        l.kind = K::tet_full;
        l.order = 24;
    } else if (s == "[3,3]*") {
        l.kind = K::tet_pyr;
        l.order = 24;
        l.has_inversion = true;
    } else if (s == "[3,3]+") {
        l.kind = K::tet_rot;
        l.order = 12;
        l.all_proper = true;
    } else if (s == "[4,2]") {
        l.kind = K::prism_4;
        l.order = 16;
        l.has_inversion = true;
    } else if (s.size() == 2 && (s[0] == 'C' || s[0] == 'D') && s[1] >= '1' && s[1] <= '4') {
        l.kind = s[0] == 'C' ? K::cyclic : K::dihedral;
        l.p = s[1] - '0';
        l.order = (s[0] == 'C' ? 1 : 2) * l.p;
    } else {
        throw Error(ErrorCode::unknown_label, "unknown point group label '" + s + "'");
    }
    return l;
}

PointGroupLabel identify(const FinitePointGroup& g)
{
    PointGroupLabel l;
    l.order = static_cast<int>(g.order());
    l.all_proper = true;
    l.has_inversion = false;
    int reflections = 0;  // improper involutions with a plane of fixed points
    int max_rot_order = 1;
    std::vector<Vec3I> rot_axes;
    for (const auto& m : g.elements) {
        auto rd = rotation_data(m);
        if (!rd.proper) {
            l.all_proper = false;
            if (m == Mat3(-Mat3::Identity()))
                l.has_inversion = true;
            if (rd.order == 2 && m != Mat3(-Mat3::Identity()))
                ++reflections;
        } else if (rd.order > 1) {
            max_rot_order = std::max(max_rot_order, rd.order);
            rot_axes.push_back(*rd.axis);
        }
    }
    bool single_axis = true;
    for (std::size_t i = 1; i < rot_axes.size(); ++i)
        if (rot_axes[i] != rot_axes[0])
            single_axis = false;

    using K = PointGroupLabel::Kind;
    switch (l.order) {
        case 48:
            l.kind = K::oct_full;
            return l;
        case 24:
            if (l.all_proper)
                l.kind = K::oct_rot;
            else if (l.has_inversion)
                l.kind = K::tet_pyr;
            else
                l.kind = K::tet_full;
            return l;
        case 12:
            if (l.all_proper) {
                l.kind = K::tet_rot;
                return l;
            }
            break;
        case 16:
            if (l.has_inversion) {
                l.kind = K::prism_4;
                return l;
            }
            break;
        default:
            break;
    }
    // Small cyclic / dihedral groups about a single line.
    if (l.all_proper && single_axis && l.order == max_rot_order && l.order <= 4) {
        l.kind = K::cyclic;
        l.p = l.order;
        return l;
    }
    if (!l.all_proper && !l.has_inversion && l.order % 2 == 0 && l.order <= 8 &&
        reflections == l.order / 2 && single_axis && max_rot_order == l.order / 2) {
        l.kind = K::dihedral;
        l.p = l.order / 2;
        return l;
    }
    l.kind = K::other;
    return l;
}

const Isometry* EdgeStabilizerSpec::find(const Isometry& iso) const
{
    for (const auto& e : elements)
        if (e == iso)
            return &e;
    return nullptr;
}

std::optional<Isometry> EdgeStabilizerSpec::half_turn() const
{
    std::optional<Isometry> out;
    for (const auto& e : elements) {
        auto rd = rotation_data(e.linear);
        if (rd.proper && rd.order == 2 && e.translation == vec3(0, 0, 0) &&
            !(e.linear == Mat3::Identity())) {
            if (out)
                return std::nullopt;  // not unique
            out = e;
        }
    }
    return out;
}

std::vector<Isometry> EdgeStabilizerSpec::plane_reflections() const
{
    std::vector<Isometry> out;
    for (const auto& e : elements) {
        auto rd = rotation_data(e.linear);
        if (!rd.proper && rd.order == 2 && fixed_space_dimension(e) == 2)
            out.push_back(e);
    }
    return out;
}

EdgeStabilizerSpec classify_edge_stabilizer(const std::vector<Isometry>& gens, const Vec3& e0,
                                            const Vec3& e1)
{
    for (const auto& g : gens) {
        if (apply(g, e0) != e0 || apply(g, e1) != e1)
            throw Error(ErrorCode::invalid_generator,
                        "edge stabilizer generator moves an endpoint of the base edge: " +
                            to_string(g));
    }
    // Closure by BFS over isometries; all elements fix the edge pointwise.
    std::set<IsometryKey> seen;
    std::vector<Isometry> elems;
    std::vector<Isometry> frontier;
    auto push = [&](const Isometry& iso) {
        if (seen.insert(isometry_key(iso)).second) {
            if (seen.size() > 8)
                throw Error(ErrorCode::unsupported,
                            "edge stabilizer closure exceeds order 8");
            elems.push_back(iso);
            frontier.push_back(iso);
        }
    };
    push(Isometry::identity());
    while (!frontier.empty()) {
        Isometry m = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens)
            push(compose(m, g));
    }
    std::sort(elems.begin(), elems.end(), [](const Isometry& a, const Isometry& b) {
        return isometry_key(a) < isometry_key(b);
    });

    EdgeStabilizerSpec spec;
    spec.generators = gens;
    spec.elements = elems;
    spec.r = static_cast<int>(elems.size());
    bool any_improper = false;
    for (const auto& e : elems)
        if (e.linear.determinant() < 0)
            any_improper = true;
    spec.kind = any_improper ? EdgeStabilizerSpec::Kind::dihedral : EdgeStabilizerSpec::Kind::cyclic;
    spec.below_minimum = spec.r < 2;
    return spec;
}

}  // namespace rpx
