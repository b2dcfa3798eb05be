#include "rpx/face.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rpx {

bool operator==(const FaceClass& a, const FaceClass& b) { return a.kind == b.kind && a.p == b.p; }

std::string to_string(const FaceClass& c)
{
    switch (c.kind) {
        case FaceKind::convex_polygon: return std::to_string(c.p) + "_c";
        case FaceKind::skew_polygon: return std::to_string(c.p) + "_s";
        case FaceKind::zigzag: return "inf_2";
        case FaceKind::helix: return "inf_" + std::to_string(c.p);
    }
    return "?";
}

FaceClass face_class_from_string(const std::string& s)
{
    FaceClass c;
    if (s.rfind("inf_", 0) == 0) {
        int k = std::stoi(s.substr(4));
        if (k == 2)
            return FaceClass{FaceKind::zigzag, 2};
        if (k == 3 || k == 4)
            return FaceClass{FaceKind::helix, k};
        throw Error(ErrorCode::unknown_label, "bad face class '" + s + "'");
    }
    auto us = s.find('_');
    if (us == std::string::npos || us + 2 != s.size())
        throw Error(ErrorCode::unknown_label, "bad face class '" + s + "'");
    c.p = std::stoi(s.substr(0, us));
    char t = s[us + 1];
    if (t == 'c')
        c.kind = FaceKind::convex_polygon;
    else if (t == 's')
        c.kind = FaceKind::skew_polygon;
    else
        throw Error(ErrorCode::unknown_label, "bad face class '" + s + "'");
    return c;
}

bool operator==(const PlaneEq& a, const PlaneEq& b)
{
    return a.normal == b.normal && a.offset == b.offset;
}

bool operator<(const PlaneEq& a, const PlaneEq& b)
{
    for (int i = 0; i < 3; ++i) {
        if (a.normal[i] != b.normal[i])
            return a.normal[i] < b.normal[i];
    }
    return a.offset < b.offset;
}

FaceGeometry transform(const FaceGeometry& f, const Isometry& iso)
{
    FaceGeometry out;
    out.cls = f.cls;
    out.ring.reserve(f.ring.size());
    for (const auto& v : f.ring)
        out.ring.push_back(apply(iso, v));
    if (f.period) {
        Isometry lin = make_linear(iso.linear);
        out.period = apply(lin, *f.period);
    }
    if (f.axis) {
        Vec3 a = apply(make_linear(iso.linear), to_rat(*f.axis));
        out.axis = primitive(vec3i(a[0].numerator(), a[1].numerator(), a[2].numerator()));
    }
    return out;
}

namespace {

void append_vec(std::ostringstream& os, const Vec3& v)
{
    os << '|' << rat_to_string(v[0]) << ',' << rat_to_string(v[1]) << ',' << rat_to_string(v[2]);
}

bool seq_lex_less(const std::vector<Vec3>& a, const std::vector<Vec3>& b)
{
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (lex_less(a[i], b[i]))
            return true;
        if (lex_less(b[i], a[i]))
            return false;
    }
    return a.size() < b.size();
}

std::string finite_key(const FaceGeometry& f)
{
    const auto& r = f.ring;
    std::size_t p = r.size();
    std::vector<Vec3> best;
    for (int rev = 0; rev < 2; ++rev)
        for (std::size_t s = 0; s < p; ++s) {
            std::vector<Vec3> cand(p);
            for (std::size_t i = 0; i < p; ++i)
                cand[i] = rev ? r[(s + p - i) % p] : r[(s + i) % p];
            if (best.empty() || seq_lex_less(cand, best))
                best = std::move(cand);
        }
    std::ostringstream os;
    os << "P" << p;
    for (const auto& v : best)
        append_vec(os, v);
    return os.str();
}

Vec3 lex_positive(const Vec3& t)
{
    for (int i = 0; i < 3; ++i) {
        if (t[i] > Rat(0))
            return t;
        if (t[i] < Rat(0))
            return -t;
    }
    return t;
}

std::string infinite_key(const FaceGeometry& f)
{
    const Vec3 t = lex_positive(*f.period);
    const Rat tt = t[0] * t[0] + t[1] * t[1] + t[2] * t[2];
    auto reduce = [&](const Vec3& v) {
        Rat coef = (v[0] * t[0] + v[1] * t[1] + v[2] * t[2]) / tt;
        Int n = rat_floor(coef);
        return Vec3(v - t * Rat(n));
    };
    int k = f.per_period();
    // Path steps repeat with period k: step(i) = ring[i+1] - ring[i].
    std::vector<Vec3> step(k);
    for (int i = 0; i < k; ++i)
        step[i] = f.ring[i + 1] - f.ring[i];

    // Start at the lexicographically least representative modulo t.
    int jmin = 0;
    Vec3 vmin = reduce(f.ring[0]);
    for (int j = 1; j < k; ++j) {
        Vec3 rj = reduce(f.ring[j]);
        if (lex_less(rj, vmin)) {
            vmin = rj;
            jmin = j;
        }
    }
    // Two walk directions from vmin; choose the lexicographically smaller
    // neighbor.
    auto step_at = [&](int j) { return step[((j % k) + k) % k]; };
    Vec3 fwd = vmin + step_at(jmin);
    Vec3 bwd = vmin - step_at(jmin - 1);
    bool go_fwd = lex_less(fwd, bwd);
    std::vector<Vec3> walk;
    walk.push_back(vmin);
    Vec3 cur = vmin;
    for (int s = 0; s < k; ++s) {
        int j = go_fwd ? jmin + s : jmin - 1 - s;
        cur = go_fwd ? Vec3(cur + step_at(j)) : Vec3(cur - step_at(j));
        walk.push_back(cur);
    }
    std::ostringstream os;
    os << (f.cls.kind == FaceKind::zigzag ? "Z" : "H") << k;
    append_vec(os, t);
    for (const auto& v : walk)
        append_vec(os, v);
    return os.str();
}

}  // namespace

std::string canonical_key(const FaceGeometry& f)
{
    return f.is_infinite() ? infinite_key(f) : finite_key(f);
}

bool coplanar(const std::vector<Vec3>& pts)
{
    if (pts.size() <= 3)
        return true;
    // Find two independent difference vectors, then test all others.
    const Vec3& p0 = pts[0];
    auto cross = [](const Vec3& a, const Vec3& b) {
        return vec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]);
    };
    Vec3 n = vec3(0, 0, 0);
    Vec3 u = vec3(0, 0, 0);
    bool have_u = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec3 d = pts[i] - p0;
        if (d == vec3(0, 0, 0))
            continue;
        if (!have_u) {
            u = d;
            have_u = true;
            continue;
        }
        Vec3 c = cross(u, d);
        if (c != vec3(0, 0, 0)) {
            n = c;
            break;
        }
    }
    if (n == vec3(0, 0, 0))
        return true;  // collinear
    for (const auto& p : pts) {
        Vec3 d = p - p0;
        if (n[0] * d[0] + n[1] * d[1] + n[2] * d[2] != Rat(0))
            return false;
    }
    return true;
}

std::optional<PlaneEq> plane_of(const FaceGeometry& f)
{
    std::vector<Vec3> pts = f.ring;
    if (f.is_infinite())
        pts.push_back(f.ring[0] + *f.period);
    if (!coplanar(pts))
        return std::nullopt;
    const Vec3& p0 = pts[0];
    Vec3 n = vec3(0, 0, 0);
    Vec3 u = vec3(0, 0, 0);
    bool have_u = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec3 d = pts[i] - p0;
        if (d == vec3(0, 0, 0))
            continue;
        if (!have_u) {
            u = d;
            have_u = true;
            continue;
        }
        Vec3 c = vec3(u[1] * d[2] - u[2] * d[1], u[2] * d[0] - u[0] * d[2],
                      u[0] * d[1] - u[1] * d[0]);
        if (c != vec3(0, 0, 0)) {
            n = c;
            break;
        }
    }
    if (n == vec3(0, 0, 0))
        return std::nullopt;  // degenerate (collinear)
    // Clear denominators, make primitive integer, orient lexicographically.
    Int lcm = 1;
    for (int i = 0; i < 3; ++i)
        lcm = std::lcm(lcm, n[i].denominator());
    Vec3I ni = vec3i((n[0] * lcm).numerator(), (n[1] * lcm).numerator(), (n[2] * lcm).numerator());
    ni = primitive(ni);
    PlaneEq eq;
    eq.normal = ni;
    eq.offset = Rat(ni[0]) * p0[0] + Rat(ni[1]) * p0[1] + Rat(ni[2]) * p0[2];
    return eq;
}

std::vector<Vec3> face_vertices_in_box(const FaceGeometry& f, const IBox& box)
{
    std::vector<Vec3> out;
    if (!f.is_infinite()) {
        out = f.ring;
        out.push_back(f.ring[0]);
        return out;
    }
    // Find the integer shift range n for which window + n*period can touch
    // the box, walk it in order.
    const Vec3& t = *f.period;
    Rat lo_b(-1), hi_b(1);
    bool bounded = false;
    for (int i = 0; i < 3; ++i) {
        if (t[i] == Rat(0))
            continue;
        Rat wmin = f.ring[0][i], wmax = f.ring[0][i];
        for (const auto& v : f.ring) {
            wmin = std::min(wmin, v[i]);
            wmax = std::max(wmax, v[i]);
        }
        Rat a = (Rat(box.lo[i]) - wmax) / t[i];
        Rat b = (Rat(box.hi[i]) - wmin) / t[i];
        if (a > b)
            std::swap(a, b);
        if (!bounded) {
            lo_b = a;
            hi_b = b;
            bounded = true;
        } else {
            lo_b = std::max(lo_b, a);
            hi_b = std::min(hi_b, b);
        }
    }
    if (!bounded)
        throw Error(ErrorCode::degenerate_face, "zero period on infinite face");
    int k = f.per_period();
    for (Int n = rat_floor(lo_b); n <= rat_floor(hi_b) + 1; ++n)
        for (int i = 0; i < k; ++i)
            out.push_back(f.ring[i] + t * Rat(n));
    // Last point closing the final period window.
    if (!out.empty())
        out.push_back(out[out.size() - k] + t);
    return out;
}

bool face_has_edge(const FaceGeometry& f, const Vec3& a, const Vec3& b)
{
    int k = f.is_infinite() ? f.per_period() : static_cast<int>(f.ring.size());
    for (int i = 0; i < k; ++i) {
        Vec3 u = f.ring[i];
        Vec3 v = f.is_infinite() ? f.ring[i + 1] : f.ring[(i + 1) % f.ring.size()];
        if (!f.is_infinite()) {
            if ((u == a && v == b) || (u == b && v == a))
                return true;
            continue;
        }
        // Solve a = u + n*t, b = v + n*t (or swapped) for integer n.
        const Vec3& t = *f.period;
        auto shift_match = [&](const Vec3& p, const Vec3& q) -> bool {
            std::optional<Rat> n;
            for (int c = 0; c < 3; ++c) {
                Rat dl = p[c] - u[c], dr = q[c] - v[c];
                if (t[c] == Rat(0)) {
                    if (dl != Rat(0) || dr != Rat(0))
                        return false;
                    continue;
                }
                Rat nl = dl / t[c], nr = dr / t[c];
                if (nl != nr)
                    return false;
                if (n && *n != nl)
                    return false;
                n = nl;
            }
            return n && n->denominator() == 1;
        };
        if (shift_match(a, b) || shift_match(b, a))
            return true;
    }
    return false;
}

std::string face_to_string(const FaceGeometry& f)
{
    std::ostringstream os;
    os << to_string(f.cls) << " [";
    for (std::size_t i = 0; i < f.ring.size(); ++i)
        os << (i ? " " : "") << vec_to_string(f.ring[i]);
    os << "]";
    if (f.period)
        os << " + Z*" << vec_to_string(*f.period);
    return os.str();
}

}  // namespace rpx
