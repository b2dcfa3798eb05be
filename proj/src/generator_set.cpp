#include "rpx/generator_set.hpp"

#include <algorithm>
#include <numeric>

namespace rpx {

std::vector<Isometry> GeneratorSet::generators() const
{
    std::vector<Isometry> out{r0, r1};
    out.insert(out.end(), g2.generators.begin(), g2.generators.end());
    return out;
}

GeneratorSet make_generator_set(const Isometry& r0, const Isometry& r1,
                                const std::vector<Isometry>& g2_gens, const Vec3& base_vertex,
                                std::map<std::string, Isometry> g2_names)
{
    if (!is_involution(r0))
        throw Error(ErrorCode::invalid_generator, "R0 is not an involution: " + to_string(r0));
    if (!is_involution(r1))
        throw Error(ErrorCode::invalid_generator, "R1 is not an involution: " + to_string(r1));
    if (apply(r1, base_vertex) != base_vertex)
        throw Error(ErrorCode::invalid_generator,
                    "R1 does not fix the base vertex " + vec_to_string(base_vertex));
    Vec3 twin = apply(r0, base_vertex);
    if (twin == base_vertex)
        throw Error(ErrorCode::invalid_generator, "twin vertex coincides with the base vertex");
    GeneratorSet gs;
    gs.r0 = r0;
    gs.r1 = r1;
    gs.g2 = classify_edge_stabilizer(g2_gens, base_vertex, twin);
    gs.base_vertex = base_vertex;
    for (auto& [name, iso] : g2_names) {
        if (!gs.g2.find(iso))
            throw Error(ErrorCode::invalid_element,
                        "named element '" + name + "' is not in the G2 closure");
    }
    gs.g2_names = std::move(g2_names);
    return gs;
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b)
{
    if (!(a.r0 == b.r0) || !(a.r1 == b.r1) || a.base_vertex != b.base_vertex)
        return false;
    if (a.g2.elements.size() != b.g2.elements.size())
        return false;
    for (std::size_t i = 0; i < a.g2.elements.size(); ++i)
        if (!(a.g2.elements[i] == b.g2.elements[i]))
            return false;
    return true;
}

std::pair<int, int> mirror_vector(const GeneratorSet& gs)
{
    auto d0 = fixed_space_dimension(gs.r0);
    auto d1 = fixed_space_dimension(gs.r1);
    if (!d0 || !d1)
        throw Error(ErrorCode::invalid_generator, "R0/R1 must be reflections (nonempty mirror)");
    return {*d0, *d1};
}

FinitePointGroup special_group(const GeneratorSet& gs)
{
    std::vector<Mat3> lin{gs.r0.linear, gs.r1.linear};
    for (const auto& g : gs.g2.generators)
        lin.push_back(g.linear);
    return closure(lin);
}

FinitePointGroup vertex_figure_group(const GeneratorSet& gs)
{
    std::vector<Mat3> lin{gs.r1.linear};
    for (const auto& g : gs.g2.generators)
        lin.push_back(g.linear);
    return closure(lin);
}

FaceGeometry trace_base_face(const GeneratorSet& gs, int max_steps)
{
    // Forward one-step shift along the base face: base vertex -> twin.
    Isometry shift = compose(gs.r1, gs.r0);
    int k = matrix_order(shift.linear);
    Isometry pk = shift;
    for (int i = 1; i < k; ++i)
        pk = compose(pk, shift);
    // pk is now shift^k, a pure translation or the identity.
    if (2 * k > max_steps)
        throw Error(ErrorCode::trace_overflow,
                    "base face does not close within max_steps=" + std::to_string(max_steps));

    FaceGeometry f;
    const Vec3 o = gs.base_vertex;
    if (is_identity(pk)) {
        // Finite p-gon with p = k.
        f.ring.push_back(o);
        Vec3 v = o;
        for (int i = 1; i < k; ++i) {
            v = apply(shift, v);
            f.ring.push_back(v);
        }
        if (apply(shift, v) != o)
            throw Error(ErrorCode::degenerate_face, "base face orbit does not close into a cycle");
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (f.ring[i] == f.ring[j])
                    throw Error(ErrorCode::degenerate_face, "degenerate base face (repeated vertex)");
        f.cls.p = k;
        f.cls.kind = coplanar(f.ring) ? FaceKind::convex_polygon : FaceKind::skew_polygon;
    } else {
        if (k == 1)
            throw Error(ErrorCode::degenerate_face,
                        "R0*R1 is a translation: the base face would be a linear apeirogon");
        Vec3 twin = gs.twin();
        Vec3 prev = apply(gs.r1, twin);  // neighbor of o on the other side
        if (prev == twin)
            throw Error(ErrorCode::degenerate_face, "degenerate base face (collapsed neighbors)");
        bool forward = lex_less(prev, twin);
        // Window of k+1 consecutive vertices starting at the lex-min neighbor.
        Isometry step = forward ? shift : inverse(shift);
        Vec3 start = forward ? prev : twin;
        f.ring.push_back(start);
        Vec3 v = start;
        for (int i = 0; i < k; ++i) {
            v = apply(step, v);
            f.ring.push_back(v);
        }
        f.period = f.ring.back() - f.ring.front();
        if (k == 2) {
            f.cls = FaceClass{FaceKind::zigzag, 2};
            std::vector<Vec3> pts = f.ring;
            pts.push_back(f.ring[1] + *f.period);
            if (!coplanar(pts))
                throw Error(ErrorCode::degenerate_face, "non-planar zigzag trace");
        } else if (k == 3 || k == 4) {
            auto rd = rotation_data(shift.linear);
            if (!rd.proper)
                throw Error(ErrorCode::unsupported,
                            "improper face twist of order " + std::to_string(k));
            f.cls = FaceClass{FaceKind::helix, k};
            f.axis = rd.axis;
        } else {
            throw Error(ErrorCode::unsupported,
                        "unsupported infinite face with twist order " + std::to_string(k));
        }
        if (!f.axis) {
            Vec3 t = *f.period;
            Int lcm = 1;
            for (int i = 0; i < 3; ++i)
                lcm = std::lcm(lcm, t[i].denominator());
            f.axis = primitive(vec3i((t[0] * lcm).numerator(), (t[1] * lcm).numerator(),
                                     (t[2] * lcm).numerator()));
        }
    }
    // Equal consecutive edge lengths (squared, exact).
    auto d2 = [](const Vec3& a, const Vec3& b) {
        Vec3 d = a - b;
        return d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    };
    std::size_t n = f.ring.size();
    Rat len = d2(f.ring[0], f.ring[1 % n]);
    for (std::size_t i = 1; i < (f.is_infinite() ? n - 1 : n); ++i)
        if (d2(f.ring[i], f.ring[(i + 1) % n]) != len)
            throw Error(ErrorCode::degenerate_face, "unequal edge lengths along base face");
    return f;
}

}  // namespace rpx
