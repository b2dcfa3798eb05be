#include "rpx/lattices.hpp"

namespace rpx {

bool operator==(const VertexSetLabel& x, const VertexSetLabel& y)
{
    return x.kind == y.kind && x.a == y.a;
}

std::string to_string(const VertexSetLabel& l)
{
    switch (l.kind) {
        case VertexSetKind::Z3: return "aZ3";
        case VertexSetKind::FCC: return "L_aa0";
        case VertexSetKind::BCC: return "L_aaa";
        case VertexSetKind::Va: return "V_a";
        case VertexSetKind::Wa: return "W_a";
    }
    return "?";
}

VertexSetLabel vertex_set_from_string(const std::string& s, Rat a)
{
    VertexSetLabel l;
    l.a = a;
    if (s == "aZ3")
        l.kind = VertexSetKind::Z3;
    else if (s == "L_aa0")
        l.kind = VertexSetKind::FCC;
    else if (s == "L_aaa")
        l.kind = VertexSetKind::BCC;
    else if (s == "V_a")
        l.kind = VertexSetKind::Va;
    else if (s == "W_a")
        l.kind = VertexSetKind::Wa;
    else
        throw Error(ErrorCode::unknown_label, "unknown vertex-set label '" + s + "'");
    return l;
}

namespace {

// p/a as integers, or nullopt when not an integer point of the a-grid.
std::optional<Vec3I> grid_coords(const Vec3& p, const Rat& a)
{
    Vec3I w;
    for (int i = 0; i < 3; ++i) {
        Rat q = p[i] / a;
        if (q.denominator() != 1)
            return std::nullopt;
        w[i] = q.numerator();
    }
    return w;
}

bool fcc_member(const Vec3I& w) { return (w[0] + w[1] + w[2]) % 2 == 0; }

bool bcc_member(const Vec3I& w)
{
    auto par = [](Int x) { return ((x % 2) + 2) % 2; };
    return par(w[0]) == par(w[1]) && par(w[1]) == par(w[2]);
}

// 2*L_aa0 at scale a, i.e. L_aa0 at scale 2a.
bool fcc2_member(const Vec3& p, const Rat& a)
{
    auto w = grid_coords(p, a * 2);
    return w && fcc_member(*w);
}

}  // namespace

bool contains(const VertexSetLabel& label, const Vec3& p)
{
    switch (label.kind) {
        case VertexSetKind::Z3:
            return grid_coords(p, label.a).has_value();
        case VertexSetKind::FCC: {
            auto w = grid_coords(p, label.a);
            return w && fcc_member(*w);
        }
        case VertexSetKind::BCC: {
            auto w = grid_coords(p, label.a);
            return w && bcc_member(*w);
        }
        case VertexSetKind::Va: {
            auto w = grid_coords(p, label.a);
            if (!w)
                return false;
            // aZ^3 minus ((0,0,a) + L_aaa).
            Vec3I shifted = *w - vec3i(0, 0, 1);
            return !bcc_member(shifted);
        }
        case VertexSetKind::Wa: {
            if (fcc2_member(p, label.a))
                return true;
            Vec3 q = p - vec3(label.a, -label.a, label.a);
            return fcc2_member(q, label.a);
        }
    }
    return false;
}

std::vector<Vec3> enumerate(const VertexSetLabel& label, const IBox& box)
{
    if (!box.valid())
        throw Error(ErrorCode::degenerate_box, "invalid box " + to_string(box));
    std::vector<Vec3> out;
    // All member points lie on the a-grid, so scanning integer multiples of a
    // inside the box is exhaustive.
    Rat a = label.a;
    auto lo_idx = [&](Int b) { return rat_floor(Rat(b) / a) - 1; };
    auto hi_idx = [&](Int b) { return rat_floor(Rat(b) / a) + 1; };
    for (Int x = lo_idx(box.lo[0]); x <= hi_idx(box.hi[0]); ++x)
        for (Int y = lo_idx(box.lo[1]); y <= hi_idx(box.hi[1]); ++y)
            for (Int z = lo_idx(box.lo[2]); z <= hi_idx(box.hi[2]); ++z) {
                Vec3 p = vec3(a * x, a * y, a * z);
                if (box.contains(p) && contains(label, p))
                    out.push_back(p);
            }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace rpx
