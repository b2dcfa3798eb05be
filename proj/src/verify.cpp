#include "rpx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace rpx {

bool Report::ok() const
{
    if (!error.empty())
        return false;
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail)
            return false;
    return true;
}

int Report::failed() const
{
    int n = 0;
    for (const auto& c : checks)
        n += c.status == CheckStatus::fail;
    return n;
}

namespace {

std::string edge_str(const Edge& e)
{
    return vec_to_string(e.first) + "-" + vec_to_string(e.second);
}

void add(Report& rep, const std::string& name, bool pass, const std::string& witness = "")
{
    rep.checks.push_back(
        {name, pass ? CheckStatus::pass : CheckStatus::fail, pass ? "" : witness});
}

void add_skip(Report& rep, const std::string& name, const std::string& reason)
{
    rep.checks.push_back({name, CheckStatus::skipped, reason});
}

// ---- core column checks -------------------------------------------------

void check_mirror_vector(Report& rep, const CatalogEntry& e, const GeneratorSet& gs)
{
    if (!e.mirror) {
        add_skip(rep, "mirror_vector", "2-skeleton entry: no mirror vector");
        return;
    }
    auto mv = mirror_vector(gs);
    std::ostringstream os;
    os << "got (" << mv.first << "," << mv.second << "), expected (" << e.mirror->first << ","
       << e.mirror->second << ")";
    add(rep, "mirror_vector", mv == *e.mirror, os.str());
}

void check_g2(Report& rep, const ExpectedProperties& exp, const GeneratorSet& gs)
{
    std::vector<Mat3> lin;
    for (const auto& g : gs.g2.generators)
        lin.push_back(g.linear);
    auto label = identify(closure(lin));
    add(rep, "g2_class", label == exp.g2,
        "got " + to_string(label) + ", expected " + to_string(exp.g2));
}

void check_r(Report& rep, const ExpectedProperties& exp, const GeneratorSet& gs,
             const ComplexRegion& cr)
{
    int algebraic = gs.g2.r / exp.flag_stabilizer;
    add(rep, "r_algebraic", algebraic == exp.r,
        "|G2|/|flag stabilizer| = " + std::to_string(algebraic) + ", expected " +
            std::to_string(exp.r));
    auto edges = cr.interior_edges();
    if (edges.empty()) {
        add(rep, "r_geometric", false, "no interior edges at this box size");
        return;
    }
    for (const auto& e : edges) {
        int n = faces_per_edge(cr, e);
        if (n != exp.r) {
            add(rep, "r_geometric", false,
                "edge " + edge_str(e) + " lies in " + std::to_string(n) + " faces, expected " +
                    std::to_string(exp.r));
            return;
        }
    }
    add(rep, "r_geometric", true);
}

void check_face_class(Report& rep, const ExpectedProperties& exp, const ComplexRegion& cr)
{
    const FaceGeometry& f = *cr.base_face;
    add(rep, "face_class", f.cls == exp.face,
        "got " + to_string(f.cls) + ", expected " + to_string(exp.face));
}

void check_vertex_set(Report& rep, const ExpectedProperties& exp, const ComplexRegion& cr)
{
    if (!exp.vertex_set) {
        add_skip(rep, "vertex_set", "no single lattice label; verified by an extra check");
        return;
    }
    auto got = cr.interior_vertices();
    auto want = enumerate(*exp.vertex_set, cr.interior_box());
    std::string witness;
    bool ok = got.size() == want.size();
    if (ok)
        for (std::size_t i = 0; i < got.size(); ++i)
            if (got[i] != want[i]) {
                ok = false;
                break;
            }
    if (!ok) {
        for (const auto& v : got)
            if (!contains(*exp.vertex_set, v)) {
                witness = "region vertex " + vec_to_string(v) + " is not in " +
                          to_string(*exp.vertex_set);
                break;
            }
        if (witness.empty()) {
            std::set<std::string> gs;
            for (const auto& v : got)
                gs.insert(vec_to_string(v));
            for (const auto& v : want)
                if (!gs.count(vec_to_string(v))) {
                    witness = "lattice point " + vec_to_string(v) + " missing from the region";
                    break;
                }
        }
    }
    add(rep, "vertex_set", ok, witness);
}

void check_vertex_figures(Report& rep, const ExpectedProperties& exp, const ComplexRegion& cr)
{
    auto verts = cr.interior_vertices();
    if (verts.empty()) {
        add(rep, "vertex_figure", false, "no interior vertices");
        return;
    }
    for (const auto& v : verts) {
        if (!match_vertex_figure(vertex_figure(cr, v), exp.vertex_figure)) {
            add(rep, "vertex_figure", false,
                "figure at " + vec_to_string(v) + " is not a " + exp.vertex_figure);
            return;
        }
    }
    add(rep, "vertex_figure", true);
}

void check_special_group(Report& rep, const ExpectedProperties& exp, const GeneratorSet& gs)
{
    auto label = identify(special_group(gs));
    add(rep, "special_group", label == exp.special_group,
        "got " + to_string(label) + ", expected " + to_string(exp.special_group));
}

void check_vf_group(Report& rep, const ExpectedProperties& exp, const GeneratorSet& gs)
{
    if (!exp.vf_group)
        return;
    auto label = identify(vertex_figure_group(gs));
    add(rep, "vertex_figure_group", label == *exp.vf_group,
        "got " + to_string(label) + ", expected " + to_string(*exp.vf_group));
}

void check_face_mirror(Report& rep, const ExpectedProperties& exp, const GeneratorSet& gs,
                       const ComplexRegion& cr)
{
    bool expect_mirror = exp.flag_stabilizer == 2;
    bool got = detect_face_mirror(gs, cr);
    add(rep, "face_mirror", got == expect_mirror,
        std::string("detect_face_mirror = ") + (got ? "true" : "false") + ", expected " +
            (expect_mirror ? "true" : "false"));
    if (expect_mirror) {
        // The reflection through the base face plane stabilizes the base
        // flag: the flag stabilizer has order 2.
        auto plane = plane_of(*cr.base_face);
        bool ok = false;
        if (plane) {
            auto t3 = plane_reflection(*plane);
            if (t3) {
                bool fixes_vertex = apply(*t3, gs.base_vertex) == gs.base_vertex;
                Vec3 tw = gs.twin();
                bool fixes_edge = apply(*t3, tw) == tw;
                FaceGeometry img = transform(*cr.base_face, *t3);
                bool fixes_face = canonical_key(img) == canonical_key(*cr.base_face);
                // T3 also lies in G2 (it fixes the base edge pointwise),
                // which is what makes |G2| = 2r for these entries.
                ok = got && fixes_vertex && fixes_edge && fixes_face &&
                     gs.g2.find(*t3) != nullptr;
            }
        }
        add(rep, "flag_stabilizer_order_2", ok,
            "reflection through the base face plane does not stabilize the base flag");
    }
}

// ---- extra claims --------------------------------------------------------

ComplexRegion build_entry(Catalog& cat, const std::string& name, const IBox& box, Int margin)
{
    BuildOptions opts;
    opts.margin = margin;
    return build_complex(cat.resolve(name), box, opts);
}

void extra_base_face(Report& rep, const Json& spec, const ComplexRegion& cr)
{
    const FaceGeometry& f = *cr.base_face;
    std::vector<Vec3> ring;
    for (const auto& v : spec.at("ring"))
        ring.push_back(vec_from_json(v));
    bool ok = ring.size() == f.ring.size();
    for (std::size_t i = 0; ok && i < ring.size(); ++i)
        ok = ring[i] == f.ring[i];
    if (spec.contains("period")) {
        Vec3 period = vec_from_json(spec.at("period"));
        ok = ok && f.period && *f.period == period;
    } else {
        ok = ok && !f.period;
    }
    add(rep, "base_face_golden", ok, "traced " + face_to_string(f));
}

void extra_coplanar_pairs(Report& rep, const ComplexRegion& cr)
{
    // The faces around each interior edge split into pairs of co-planar
    // members: exactly two distinct planes, two faces each.
    for (const auto& e : cr.interior_edges()) {
        auto it = cr.edge_faces.find(e);
        std::map<std::string, int> planes;
        for (const auto& key : it->second) {
            auto pl = plane_of(cr.faces.at(key));
            if (!pl) {
                add(rep, "coplanar_face_pairs", false,
                    "non-planar face at edge " + edge_str(e));
                return;
            }
            std::ostringstream os;
            os << vec_to_string(to_rat(pl->normal)) << "=" << rat_to_string(pl->offset);
            planes[os.str()]++;
        }
        if (planes.size() != 2) {
            add(rep, "coplanar_face_pairs", false,
                "edge " + edge_str(e) + " has " + std::to_string(planes.size()) +
                    " face planes, expected 2");
            return;
        }
        for (const auto& [p, n] : planes)
            if (n != 2) {
                add(rep, "coplanar_face_pairs", false,
                    "edge " + edge_str(e) + " has " + std::to_string(n) +
                        " faces in plane " + p);
                return;
            }
    }
    add(rep, "coplanar_face_pairs", true);
}

void extra_oracle(Report& rep, const Json& spec, const ComplexRegion& cr)
{
    std::string kind_s = spec.at("kind").get<std::string>();
    TriangularPathKind kind;
    if (kind_s == "petrie")
        kind = TriangularPathKind::petrie;
    else if (kind_s == "two_zigzag")
        kind = TriangularPathKind::two_zigzag;
    else if (kind_s == "two_hole")
        kind = TriangularPathKind::two_hole;
    else {
        add(rep, "oracle", false, "unknown oracle kind '" + kind_s + "'");
        return;
    }
    std::string check_name = "oracle_" + kind_s;

    // Forward inclusion: every interior face lies in the oracle output for
    // its own affine hull.
    std::map<std::string, std::set<std::string>> oracle_keys;  // plane id -> keys
    auto plane_id = [](const PlaneEq& p) {
        std::ostringstream os;
        os << p.normal[0] << ',' << p.normal[1] << ',' << p.normal[2] << '='
           << rat_to_string(p.offset);
        return os.str();
    };
    auto oracle_for = [&](const PlaneEq& p) -> const std::set<std::string>& {
        auto id = plane_id(p);
        auto it = oracle_keys.find(id);
        if (it == oracle_keys.end()) {
            std::set<std::string> keys;
            for (const auto& f : triangular_oracle(p, kind, cr.working_box))
                keys.insert(canonical_key(f));
            it = oracle_keys.emplace(id, std::move(keys)).first;
        }
        return it->second;
    };
    for (const auto& key : cr.interior_face_keys()) {
        const auto& f = cr.faces.at(key);
        auto pl = plane_of(f);
        if (!pl || !is_tessellation_face_plane(*pl)) {
            add(rep, check_name, false,
                "face is not on a tessellation face plane: " + face_to_string(f));
            return;
        }
        if (!oracle_for(*pl).count(key)) {
            add(rep, check_name, false, "face missing from oracle output: " + face_to_string(f));
            return;
        }
    }
    // Reverse inclusion: every oracle path with an interior edge is a face.
    IBox inner = cr.interior_box();
    for (const auto& plane : tessellation_face_planes(inner)) {
        for (const auto& f : triangular_oracle(plane, kind, cr.working_box)) {
            auto pts = face_vertices_in_box(f, inner);
            bool touches = false;
            for (std::size_t i = 0; i + 1 < pts.size() && !touches; ++i)
                touches = inner.contains(pts[i]) && inner.contains(pts[i + 1]);
            if (!touches)
                continue;
            if (!cr.faces.count(canonical_key(f))) {
                add(rep, check_name, false,
                    "oracle path is not a face of the complex: " + face_to_string(f));
                return;
            }
        }
    }
    add(rep, check_name, true);
}

void extra_semiregular(Report& rep, const ComplexRegion& cr)
{
    auto s = semiregular_tessellation_skeleton(cr.box, cr.margin);
    std::string witness;
    bool ok = regions_equal(cr, s, &witness);
    add(rep, "equals_semiregular_tessellation_skeleton", ok, witness);
}

void extra_subcomplex(Report& rep, Catalog& cat, const Json& spec, const ComplexRegion& cr)
{
    std::string outer_name = spec.at("outer").get<std::string>();
    auto outer = build_entry(cat, outer_name, cr.box, cr.margin);
    std::string witness;
    bool ok = check_subcomplex(cr, outer, &witness);
    add(rep, "subcomplex_of_" + outer_name, ok, witness);
    if (spec.contains("face_ratio")) {
        Rat want = rat_from_string(spec.at("face_ratio").get<std::string>());
        auto inner_faces = cr.interior_face_keys();
        auto outer_faces = outer.interior_face_keys();
        // Ratio within 10% to absorb boundary clipping.
        bool ratio_ok = !outer_faces.empty();
        if (ratio_ok) {
            Rat ratio(static_cast<Int>(inner_faces.size()),
                      static_cast<Int>(outer_faces.size()));
            ratio_ok = ratio >= want * Rat(9, 10) && ratio <= want * Rat(11, 10);
        }
        std::ostringstream os;
        os << "face count ratio " << inner_faces.size() << "/" << outer_faces.size()
           << " outside " << rat_to_string(want) << " +-10%";
        add(rep, "face_ratio_vs_" + outer_name, ratio_ok, os.str());
    }
}

void extra_edge_graph(Report& rep, Catalog& cat, const Json& spec, const ComplexRegion& cr)
{
    std::string other_name = spec.at("other").get<std::string>();
    auto other = build_entry(cat, other_name, cr.box, cr.margin);
    auto va = cr.interior_vertices();
    auto vb = other.interior_vertices();
    bool ok = va.size() == vb.size();
    for (std::size_t i = 0; ok && i < va.size(); ++i)
        ok = va[i] == vb[i];
    auto ea = cr.interior_edges();
    auto eb = other.interior_edges();
    ok = ok && ea.size() == eb.size();
    for (std::size_t i = 0; ok && i < ea.size(); ++i)
        ok = ea[i].first == eb[i].first && ea[i].second == eb[i].second;
    add(rep, "edge_graph_equals_" + other_name, ok,
        "interior vertex/edge sets differ from " + other_name);
}

void extra_degree(Report& rep, const Json& spec, const ComplexRegion& cr)
{
    int want = spec.at("value").get<int>();
    for (const auto& v : cr.interior_vertices()) {
        int deg = static_cast<int>(cr.adjacency.at(v).size());
        if (deg != want) {
            add(rep, "degree", false,
                "vertex " + vec_to_string(v) + " has degree " + std::to_string(deg) +
                    ", expected " + std::to_string(want));
            return;
        }
    }
    add(rep, "degree", true);
}

void extra_helix_axes(Report& rep, const Json& spec, const ComplexRegion& cr)
{
    int want = spec.at("count").get<int>();
    std::set<std::string> dirs;
    for (const auto& key : cr.interior_face_keys()) {
        const auto& f = cr.faces.at(key);
        if (!f.axis) {
            add(rep, "helix_axis_directions", false, "face without an axis");
            return;
        }
        dirs.insert(vec_to_string(to_rat(*f.axis)));
    }
    add(rep, "helix_axis_directions", static_cast<int>(dirs.size()) == want,
        "found " + std::to_string(dirs.size()) + " axis directions, expected " +
            std::to_string(want));
}

void extra_axes_two_per_coordinate(Report& rep, const ComplexRegion& cr)
{
    // Around each interior edge the helical faces' axes hit each coordinate
    // direction exactly twice.
    for (const auto& e : cr.interior_edges()) {
        std::map<std::string, int> count;
        for (const auto& key : cr.edge_faces.at(e))
            count[vec_to_string(to_rat(*cr.faces.at(key).axis))]++;
        if (count.size() != 3) {
            add(rep, "axes_two_per_coordinate", false,
                "edge " + edge_str(e) + " meets " + std::to_string(count.size()) +
                    " axis directions");
            return;
        }
        for (const auto& [d, n] : count)
            if (n != 2) {
                add(rep, "axes_two_per_coordinate", false,
                    "edge " + edge_str(e) + ": direction " + d + " occurs " +
                        std::to_string(n) + " times");
                return;
            }
    }
    add(rep, "axes_two_per_coordinate", true);
}

// The helical faces ride main diagonals of the cubic tessellation; three,
// but no four, consecutive edges determine cubes sharing a common edge.
void extra_cube_triples(Report& rep, const ComplexRegion& cr)
{
    using Seg = std::pair<Vec3, Vec3>;
    auto cube_edges = [](const Vec3& a, const Vec3& b) {
        // The edge (a,b) is a main diagonal of the unit cube spanned by the
        // componentwise min/max of its endpoints.
        Vec3 lo = vec3(std::min(a[0], b[0]), std::min(a[1], b[1]), std::min(a[2], b[2]));
        std::vector<Seg> edges;
        for (int axis = 0; axis < 3; ++axis)
            for (Int d1 : {0, 1})
                for (Int d2 : {0, 1}) {
                    Vec3 p = lo;
                    p[(axis + 1) % 3] += Rat(d1);
                    p[(axis + 2) % 3] += Rat(d2);
                    Vec3 q = p;
                    q[axis] += Rat(1);
                    edges.push_back(make_edge(p, q));
                }
        return edges;
    };
    auto intersect = [](std::vector<Seg> a, const std::vector<Seg>& b) {
        std::vector<Seg> out;
        for (const auto& e : a)
            for (const auto& f : b)
                if (e.first == f.first && e.second == f.second)
                    out.push_back(e);
        return out;
    };
    int windows = 0;
    for (const auto& key : cr.interior_face_keys()) {
        const auto& f = cr.faces.at(key);
        auto pts = face_vertices_in_box(f, cr.interior_box().inflated(1));
        for (std::size_t i = 0; i + 4 < pts.size(); ++i) {
            auto ce = cube_edges(pts[i], pts[i + 1]);
            auto cf = cube_edges(pts[i + 1], pts[i + 2]);
            auto cg = cube_edges(pts[i + 2], pts[i + 3]);
            auto ch = cube_edges(pts[i + 3], pts[i + 4]);
            auto efg = intersect(intersect(ce, cf), cg);
            if (efg.size() != 1) {
                add(rep, "cube_triples", false,
                    "three consecutive cubes share " + std::to_string(efg.size()) +
                        " edges, expected 1");
                return;
            }
            // The shared edge avoids the face's vertices.
            for (const auto& p : pts)
                if (p == efg[0].first || p == efg[0].second) {
                    add(rep, "cube_triples", false, "shared cube edge touches the face");
                    return;
                }
            // No four consecutive cubes share an edge; the two triple-shared
            // edges are adjacent edges of a square face of the middle cube.
            auto efgh = intersect(efg, ch);
            if (!efgh.empty()) {
                add(rep, "cube_triples", false, "four consecutive cubes share an edge");
                return;
            }
            auto fgh = intersect(intersect(cf, cg), ch);
            if (fgh.size() != 1) {
                add(rep, "cube_triples", false, "next cube triple does not share one edge");
                return;
            }
            const Seg& e1 = efg[0];
            const Seg& e2 = fgh[0];
            bool adjacent = e1.first == e2.first || e1.first == e2.second ||
                            e1.second == e2.first || e1.second == e2.second;
            std::vector<Vec3> four{e1.first, e1.second, e2.first, e2.second};
            bool in_cf_square = coplanar(four);
            if (!adjacent || !in_cf_square) {
                add(rep, "cube_triples", false,
                    "triple-shared edges are not adjacent edges of a square of the middle cube");
                return;
            }
            ++windows;
        }
    }
    add(rep, "cube_triples", windows > 0,
        "no four-edge windows inside the box to check");
}

void extra_vertex_set_union(Report& rep, const Json& spec, const ComplexRegion& cr)
{
    struct Part {
        VertexSetLabel label;
        Vec3 shift;
    };
    std::vector<Part> parts;
    for (const auto& jp : spec.at("parts")) {
        Part p;
        p.label = vertex_set_from_string(jp.at("label").get<std::string>(),
                                         rat_from_string(jp.at("a").get<std::string>()));
        p.shift = jp.contains("shift") ? vec_from_json(jp.at("shift")) : vec3(0, 0, 0);
        parts.push_back(p);
    }
    auto member = [&](const Vec3& v) {
        for (const auto& p : parts)
            if (contains(p.label, v - p.shift))
                return true;
        return false;
    };
    // Both inclusions over the interior box.
    auto got = cr.interior_vertices();
    std::set<std::string> got_set;
    for (const auto& v : got) {
        if (!member(v)) {
            add(rep, "vertex_set_union", false,
                "region vertex " + vec_to_string(v) + " is outside the coset union");
            return;
        }
        got_set.insert(vec_to_string(v));
    }
    IBox inner = cr.interior_box();
    for (Int x = inner.lo[0]; x <= inner.hi[0]; ++x)
        for (Int y = inner.lo[1]; y <= inner.hi[1]; ++y)
            for (Int z = inner.lo[2]; z <= inner.hi[2]; ++z) {
                Vec3 p = vec3(x, y, z);
                if (member(p) && !got_set.count(vec_to_string(p))) {
                    add(rep, "vertex_set_union", false,
                        "coset-union point " + vec_to_string(p) + " missing from the region");
                    return;
                }
            }
    add(rep, "vertex_set_union", true);
}

void extra_lambda0_image(Report& rep, Catalog& cat, const Json& spec, const GeneratorSet& gs,
                         const ComplexRegion& cr)
{
    auto el = cat.resolve_element(gs, spec.at("element"), "lambda0");
    auto image = lambda0(gs, el);
    BuildOptions opts;
    opts.margin = cr.margin;
    auto img_region = build_complex(image, cr.box, opts);
    auto other = build_entry(cat, spec.at("other").get<std::string>(), cr.box, cr.margin);
    std::string witness;
    bool ok = regions_equal(img_region, other, &witness);
    add(rep, "lambda0_image_equals_" + spec.at("other").get<std::string>(), ok, witness);
}

}  // namespace

bool regions_equal(const ComplexRegion& a, const ComplexRegion& b, std::string* witness)
{
    if (!(a.box == b.box)) {
        if (witness)
            *witness = "mismatched boxes";
        return false;
    }
    auto va = a.interior_vertices();
    auto vb = b.interior_vertices();
    if (va.size() != vb.size() || !std::equal(va.begin(), va.end(), vb.begin())) {
        if (witness)
            *witness = "interior vertex sets differ";
        return false;
    }
    auto ea = a.interior_edges();
    auto eb = b.interior_edges();
    if (ea.size() != eb.size() || !std::equal(ea.begin(), ea.end(), eb.begin())) {
        if (witness)
            *witness = "interior edge sets differ";
        return false;
    }
    auto fa = a.interior_face_keys();
    auto fb = b.interior_face_keys();
    if (fa != fb) {
        if (witness)
            *witness = "interior face sets differ";
        return false;
    }
    return true;
}

bool check_subcomplex(const ComplexRegion& inner, const ComplexRegion& outer,
                      std::string* witness)
{
    if (!(inner.box == outer.box))
        throw Error(ErrorCode::mismatched_boxes,
                    "subcomplex check requires equal boxes: " + to_string(inner.box) + " vs " +
                        to_string(outer.box));
    for (const auto& v : inner.interior_vertices())
        if (!outer.vertices.count(v)) {
            if (witness)
                *witness = "vertex " + vec_to_string(v) + " not in the outer complex";
            return false;
        }
    for (const auto& e : inner.interior_edges())
        if (!outer.edges.count(e)) {
            if (witness)
                *witness = "edge " + edge_str(e) + " not in the outer complex";
            return false;
        }
    for (const auto& key : inner.interior_face_keys())
        if (!outer.faces.count(key)) {
            if (witness)
                *witness = "face " + face_to_string(inner.faces.at(key)) +
                           " not in the outer complex";
            return false;
        }
    return true;
}

Report verify_entry(Catalog& cat, const std::string& name, const IBox& box,
                    const VerifyOptions& opts)
{
    Report rep;
    rep.entry = name;
    rep.box = box;
    rep.margin = opts.margin;
    auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return rep;
    };
    if (!box.valid() || !box.shrunk(opts.margin).valid()) {
        rep.error = "degenerate box " + to_string(box) + " (interior is empty at margin " +
                    std::to_string(opts.margin) + ")";
        return finish();
    }
    const CatalogEntry& e = cat.entry(name);
    if (!e.expected) {
        rep.error = "entry has no expected properties to verify";
        return finish();
    }
    if (e.margin)
        rep.margin = *e.margin;
    GeneratorSet gs;
    ComplexRegion cr;
    try {
        gs = cat.resolve(name);
        BuildOptions bopts;
        bopts.margin = rep.margin;
        cr = build_complex(gs, box, bopts);
    } catch (const Error& ex) {
        rep.error = ex.what();
        return finish();
    }
    const ExpectedProperties& exp = *e.expected;

    check_mirror_vector(rep, e, gs);
    check_g2(rep, exp, gs);
    check_r(rep, exp, gs, cr);
    check_face_class(rep, exp, cr);
    check_vertex_set(rep, exp, cr);
    check_vertex_figures(rep, exp, cr);
    check_special_group(rep, exp, gs);
    check_vf_group(rep, exp, gs);
    check_face_mirror(rep, exp, gs, cr);

    for (const auto& spec : e.extra) {
        if (opts.fail_fast && !rep.ok())
            break;
        std::string check = spec.at("check").get<std::string>();
        try {
            if (check == "base_face")
                extra_base_face(rep, spec, cr);
            else if (check == "coplanar_pairs")
                extra_coplanar_pairs(rep, cr);
            else if (check == "oracle")
                extra_oracle(rep, spec, cr);
            else if (check == "equals_semiregular_s")
                extra_semiregular(rep, cr);
            else if (check == "subcomplex_of")
                extra_subcomplex(rep, cat, spec, cr);
            else if (check == "edge_graph_equals")
                extra_edge_graph(rep, cat, spec, cr);
            else if (check == "degree")
                extra_degree(rep, spec, cr);
            else if (check == "helix_axis_directions")
                extra_helix_axes(rep, spec, cr);
            else if (check == "axes_two_per_coordinate")
                extra_axes_two_per_coordinate(rep, cr);
            else if (check == "cube_triples")
                extra_cube_triples(rep, cr);
            else if (check == "lambda0_image_equals")
                extra_lambda0_image(rep, cat, spec, gs, cr);
            else if (check == "vertex_set_union")
                extra_vertex_set_union(rep, spec, cr);
            else if (check == "unverified")
                add_skip(rep, spec.at("name").get<std::string>(),
                         spec.at("reason").get<std::string>());
            else
                add(rep, check, false, "unknown extra check");
        } catch (const Error& ex) {
            add(rep, check, false, std::string("error: ") + ex.what());
        }
    }
    return finish();
}

std::string report_to_text(const Report& r)
{
    std::ostringstream os;
    os << r.entry << "  box " << to_string(r.box) << "  margin " << r.margin << "  ("
       << static_cast<int>(r.elapsed_ms) << " ms)\n";
    if (!r.error.empty()) {
        os << "  ERROR " << r.error << "\n";
        return os.str();
    }
    for (const auto& c : r.checks) {
        const char* tag = c.status == CheckStatus::pass
                              ? "pass"
                              : (c.status == CheckStatus::fail ? "FAIL" : "skip");
        os << "  [" << tag << "] " << c.name;
        if (!c.detail.empty())
            os << "  -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

Json report_to_json(const Report& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc{{"name", c.name},
                {"status", c.status == CheckStatus::pass
                               ? "pass"
                               : (c.status == CheckStatus::fail ? "fail" : "skipped")}};
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    Json j{{"entry", r.entry},
           {"box", to_string(r.box)},
           {"margin", r.margin},
           {"elapsed_ms", r.elapsed_ms},
           {"checks", checks},
           {"ok", r.ok()}};
    if (!r.error.empty())
        j["error"] = r.error;
    return j;
}

}  // namespace rpx
