#include "rpx/gen_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rpx {

namespace {

const Isometry* require_g2_element(const GeneratorSet& gs, const Isometry& r)
{
    const Isometry* found = gs.g2.find(r);
    if (!found)
        throw Error(ErrorCode::invalid_element,
                    "element is not in the G2 closure: " + to_string(r));
    return found;
}

}  // namespace

GeneratorSet lambda0(const GeneratorSet& gs, const Isometry& r)
{
    require_g2_element(gs, r);
    Isometry new_r0 = compose(gs.r0, r);
    if (!is_involution(new_r0))
        throw Error(ErrorCode::precondition_violation,
                    "R0*R is not an involution: " + to_string(new_r0));
    std::vector<Isometry> g2_gens = gs.g2.generators;
    return make_generator_set(new_r0, gs.r1, g2_gens, gs.base_vertex, gs.g2_names);
}

GeneratorSet lambda1(const GeneratorSet& gs, const Isometry& r)
{
    require_g2_element(gs, r);
    Isometry new_r1 = compose(gs.r1, r);
    if (!is_involution(new_r1))
        throw Error(ErrorCode::precondition_violation,
                    "R1*R is not an involution: " + to_string(new_r1));
    std::vector<Isometry> g2_gens = gs.g2.generators;
    return make_generator_set(gs.r0, new_r1, g2_gens, gs.base_vertex, gs.g2_names);
}

GeneratorSet petrie_lambda(const GeneratorSet& gs, const Isometry& t3)
{
    if (gs.g2.kind != EdgeStabilizerSpec::Kind::cyclic)
        throw Error(ErrorCode::precondition_violation,
                    "the Petrie-type operation requires a cyclic G2");
    if (!is_involution(t3) || fixed_space_dimension(t3) != 2)
        throw Error(ErrorCode::precondition_violation, "T3 must be a plane reflection");
    FaceGeometry base = trace_base_face(gs);
    auto plane = plane_of(base);
    if (!plane)
        throw Error(ErrorCode::precondition_violation,
                    "the Petrie-type operation requires a planar base face");
    {
        FaceGeometry img = transform(base, t3);
        if (canonical_key(img) != canonical_key(base))
            throw Error(ErrorCode::precondition_violation,
                        "T3 is not the reflection through the base face plane");
    }
    if (!(compose(t3, gs.r0) == compose(gs.r0, t3)) ||
        !(compose(t3, gs.r1) == compose(gs.r1, t3)))
        throw Error(ErrorCode::precondition_violation, "T3 must commute with R0 and R1");
    for (const auto& s : gs.g2.generators) {
        if (!(compose(compose(t3, s), t3) == inverse(s)))
            throw Error(ErrorCode::precondition_violation, "T3 must conjugate S to its inverse");
    }
    Isometry new_r1 = compose(t3, gs.r1);
    if (!is_involution(new_r1))
        throw Error(ErrorCode::precondition_violation, "T3*R1 is not an involution");
    std::vector<Isometry> g2_gens = gs.g2.generators;
    return make_generator_set(gs.r0, new_r1, g2_gens, gs.base_vertex, gs.g2_names);
}

namespace {

Mat3 mat_rows(std::initializer_list<Int> v)
{
    Mat3 m;
    auto it = v.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = *it++;
    return m;
}

// Linear map written as images of (x,y,z); rows follow the row-vector
// convention w = v*M.
Isometry linear_map(std::initializer_list<Int> rows) { return make_linear(mat_rows(rows)); }

Isometry point_reflection(const Vec3& center)
{
    return make_isometry(Mat3(-Mat3::Identity()), center * Rat(2));
}

}  // namespace

ApeirData apeir(const std::string& q_id)
{
    ApeirData d;
    d.q = q_id;
    d.base_vertex = vec3(0, 0, 0);
    if (q_id == "tetra33") {
        // Tetrahedron on alternating cube vertices, initial vertex (1,1,1).
        d.initial_vertex = vec3(1, 1, 1);
        d.t1 = linear_map({1, 0, 0, 0, 0, -1, 0, -1, 0});  // (x,-z,-y)
        d.t2 = linear_map({0, 1, 0, 1, 0, 0, 0, 0, 1});    // (y,x,z)
        d.t3 = linear_map({1, 0, 0, 0, 0, 1, 0, 1, 0});    // (x,z,y)
    } else if (q_id == "octa34") {
        d.initial_vertex = vec3(1, 0, 0);
        d.t1 = linear_map({0, 1, 0, 1, 0, 0, 0, 0, 1});    // (y,x,z)
        d.t2 = linear_map({1, 0, 0, 0, 0, 1, 0, 1, 0});    // (x,z,y)
        d.t3 = linear_map({1, 0, 0, 0, 1, 0, 0, 0, -1});   // (x,y,-z)
    } else if (q_id == "cube43") {
        d.initial_vertex = vec3(1, 1, 1);
        d.t1 = linear_map({1, 0, 0, 0, 1, 0, 0, 0, -1});   // (x,y,-z)
        d.t2 = linear_map({1, 0, 0, 0, 0, 1, 0, 1, 0});    // (x,z,y)
        d.t3 = linear_map({0, 1, 0, 1, 0, 0, 0, 0, 1});    // (y,x,z)
    } else {
        throw Error(ErrorCode::unknown_entry, "unknown apeir vertex-figure '" + q_id + "'");
    }
    d.t0 = point_reflection(d.initial_vertex * Rat(1, 2));
    return d;
}

GeneratorSet apeir_skeleton(const ApeirData& d)
{
    return make_generator_set(d.t0, d.t1, {d.t2, d.t3}, d.base_vertex);
}

GeneratorSet apeir_skeleton_cyclic(const ApeirData& d)
{
    return make_generator_set(d.t0, compose(d.t1, d.t3), {compose(d.t2, d.t3)}, d.base_vertex);
}

Isometry apeir_t3(const ApeirData& d) { return d.t3; }

GeneratorSet skeleton2_cubical()
{
    Isometry r0 = make_isometry(mat_rows({-1, 0, 0, 0, 1, 0, 0, 0, 1}), vec3(1, 0, 0));
    Isometry r1 = linear_map({0, 1, 0, 1, 0, 0, 0, 0, 1});  // (y,x,z)
    Isometry t2 = linear_map({1, 0, 0, 0, 0, 1, 0, 1, 0});  // (x,z,y)
    Isometry t3 = linear_map({1, 0, 0, 0, 1, 0, 0, 0, -1}); // (x,y,-z)
    return make_generator_set(r0, r1, {t2, t3}, vec3(0, 0, 0));
}

namespace {

// Distinct subgroups of the twin stabilizer of the requested kind and order,
// as generator lists (deduplicated by element set).
std::vector<std::vector<Isometry>> g2_candidates(const Vec3& twin,
                                                 EdgeStabilizerSpec::Kind kind, int order)
{
    std::vector<Mat3> stab;
    for (const auto& m : all_signed_permutations()) {
        Isometry iso = make_linear(m);
        if (apply(iso, twin) == twin)
            stab.push_back(m);
    }
    std::set<std::vector<IsometryKey>> seen;
    std::vector<std::vector<Isometry>> out;
    auto try_group = [&](const std::vector<Isometry>& gens) {
        EdgeStabilizerSpec spec;
        try {
            spec = classify_edge_stabilizer(gens, vec3(0, 0, 0), twin);
        } catch (const Error&) {
            return;
        }
        if (spec.kind != kind || spec.r != order)
            return;
        std::vector<IsometryKey> keyset;
        for (const auto& e : spec.elements)
            keyset.push_back(isometry_key(e));
        if (seen.insert(keyset).second)
            out.push_back(gens);
    };
    if (kind == EdgeStabilizerSpec::Kind::cyclic) {
        for (const auto& m : stab)
            try_group({make_linear(m)});
    } else {
        for (std::size_t i = 0; i < stab.size(); ++i)
            for (std::size_t j = i + 1; j < stab.size(); ++j) {
                auto a = make_linear(stab[i]), b = make_linear(stab[j]);
                auto da = rotation_data(stab[i]), db = rotation_data(stab[j]);
                if (da.proper || db.proper || da.order != 2 || db.order != 2)
                    continue;  // dihedral G2 is generated by two plane reflections
                try_group({a, b});
            }
    }
    return out;
}

std::string region_digest(const ComplexRegion& cr)
{
    std::ostringstream os;
    for (const auto& v : cr.interior_vertices())
        os << vec_to_string(v) << ';';
    os << '#';
    for (const auto& e : cr.interior_edges())
        os << vec_to_string(e.first) << '-' << vec_to_string(e.second) << ';';
    os << '#';
    for (const auto& k : cr.interior_face_keys())
        os << k << ';';
    return os.str();
}

// Minimal digest over all signed-permutation images of the interior data;
// two regions share it exactly when one is carried to the other by a
// coordinate change fixing the origin.
std::string region_orbit_digest(const ComplexRegion& cr)
{
    auto interior_v = cr.interior_vertices();
    auto interior_e = cr.interior_edges();
    auto interior_f = cr.interior_face_keys();
    std::string best;
    for (const auto& m : all_signed_permutations()) {
        Isometry iso = make_linear(m);
        std::set<std::string> vs, es, fs;
        for (const auto& v : interior_v)
            vs.insert(vec_to_string(apply(iso, v)));
        for (const auto& e : interior_e) {
            Vec3 a = apply(iso, e.first), b = apply(iso, e.second);
            if (!lex_less(a, b))
                std::swap(a, b);
            es.insert(vec_to_string(a) + '-' + vec_to_string(b));
        }
        for (const auto& k : interior_f)
            fs.insert(canonical_key(transform(cr.faces.at(k), iso)));
        std::ostringstream os;
        for (const auto& s : vs)
            os << s << ';';
        os << '#';
        for (const auto& s : es)
            os << s << ';';
        os << '#';
        for (const auto& s : fs)
            os << s << ';';
        std::string d = os.str();
        if (best.empty() || d < best)
            best = d;
    }
    return best;
}

}  // namespace

ReconstructionResult reconstruct_generators(const ReconstructionConstraints& c,
                                            const IBox& check_box)
{
    const Vec3 o = c.base_vertex;
    const Vec3 twin = c.twin;
    if (c.g2_kind == EdgeStabilizerSpec::Kind::dihedral && c.r % 2 != 0)
        throw Error(ErrorCode::reconstruction_failure,
                    "inconsistent constraints: dihedral G2 has even order, got r=" +
                        std::to_string(c.r));
    if (c.g2_order != c.r)
        throw Error(ErrorCode::reconstruction_failure,
                    "inconsistent constraints: |G2| must equal r for simply flag-transitive "
                    "complexes");

    auto g2s = g2_candidates(twin, c.g2_kind, c.g2_order);

    // R0 candidates: involutions mapping o to the twin with the requested
    // mirror dimension. The translation part is forced to equal the twin.
    std::vector<Isometry> r0s;
    for (const auto& m : all_signed_permutations()) {
        Isometry iso = make_isometry(m, twin);
        if (!is_involution(iso))
            continue;
        if (fixed_space_dimension(iso) != c.mirror_vector.first)
            continue;
        r0s.push_back(iso);
    }
    // R1 candidates: linear involutions fixing o but not the twin.
    std::vector<Isometry> r1s;
    for (const auto& m : all_signed_permutations()) {
        Isometry iso = make_linear(m);
        if (!is_involution(iso))
            continue;
        if (fixed_space_dimension(iso) != c.mirror_vector.second)
            continue;
        if (apply(iso, twin) == twin)
            continue;
        r1s.push_back(iso);
    }

    int expected_vf_order = vertex_figure_degree(c.vertex_figure) * c.r;
    ReconstructionResult result;
    std::vector<GeneratorSet> hits;
    std::map<std::string, std::vector<std::size_t>> classes;
    std::map<std::string, ComplexRegion> class_regions;
    BuildOptions opts;

    for (const auto& g2 : g2s)
        for (const auto& r0 : r0s)
            for (const auto& r1 : r1s) {
                ++result.candidates_tested;
                GeneratorSet gs;
                try {
                    gs = make_generator_set(r0, r1, g2, o);
                } catch (const Error&) {
                    continue;
                }
                if (static_cast<int>(vertex_figure_group(gs).order()) != expected_vf_order)
                    continue;
                if (!(identify(special_group(gs)) == c.special_group))
                    continue;
                FaceGeometry face;
                try {
                    face = trace_base_face(gs);
                } catch (const Error&) {
                    continue;
                }
                if (!(face.cls == c.face))
                    continue;
                bool in_set = true;
                for (const auto& v : face.ring)
                    if (!contains(c.vertex_set, v))
                        in_set = false;
                if (!in_set)
                    continue;
                if (!c.base_face_ring.empty()) {
                    FaceGeometry expect;
                    expect.cls = c.face;
                    expect.ring = c.base_face_ring;
                    expect.period = c.base_face_period;
                    if (canonical_key(face) != canonical_key(expect))
                        continue;
                }

                // Full geometric check on the verification box.
                ComplexRegion cr;
                try {
                    cr = build_complex(gs, check_box, opts);
                } catch (const Error&) {
                    continue;
                }
                auto interior = cr.interior_vertices();
                auto expected_pts = enumerate(c.vertex_set, cr.interior_box());
                if (interior.size() != expected_pts.size() ||
                    !std::equal(interior.begin(), interior.end(), expected_pts.begin()))
                    continue;
                bool ok = true;
                for (const auto& e : cr.interior_edges())
                    if (faces_per_edge(cr, e) != c.r) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                if (!match_vertex_figure(vertex_figure(cr, o), c.vertex_figure))
                    continue;

                hits.push_back(gs);
                std::string digest = region_digest(cr);
                if (!classes.count(digest))
                    class_regions.emplace(digest, cr);
                classes[digest].push_back(hits.size() - 1);
            }

    result.hits = static_cast<int>(hits.size());
    result.region_classes = static_cast<int>(classes.size());
    if (hits.empty())
        throw Error(ErrorCode::reconstruction_failure,
                    "no generator set satisfies the constraints (tested " +
                        std::to_string(result.candidates_tested) + " candidates)");

    // Distinct regions that are images of one another under a coordinate
    // change are realizations of the same complex; with a cyclic G2 the two
    // enantiomorphs both satisfy every row constraint.
    std::string chosen_digest;
    if (classes.size() == 1) {
        chosen_digest = classes.begin()->first;
    } else {
        std::map<std::string, std::vector<std::string>> orbits;
        for (const auto& [digest, idx] : classes)
            orbits[region_orbit_digest(class_regions.at(digest))].push_back(digest);
        result.congruence_classes = static_cast<int>(orbits.size());
        if (orbits.size() > 1) {
            std::ostringstream os;
            os << "constraints admit " << orbits.size() << " non-congruent complexes:";
            for (const auto& [od, digests] : orbits) {
                const auto& idx = classes.at(digests.front());
                os << "\n  e.g. R0=" << to_string(hits[idx.front()].r0)
                   << " R1=" << to_string(hits[idx.front()].r1);
            }
            throw Error(ErrorCode::reconstruction_ambiguous, os.str());
        }
        chosen_digest = orbits.begin()->second.front();
        for (const auto& d : orbits.begin()->second)
            if (d < chosen_digest)
                chosen_digest = d;
    }
    // Deterministic representative within the chosen region class.
    auto key_of = [](const GeneratorSet& gs) {
        std::ostringstream os;
        os << to_string(gs.r0) << '|' << to_string(gs.r1);
        for (const auto& e : gs.g2.elements)
            os << '|' << to_string(e);
        return os.str();
    };
    const auto& chosen = classes.at(chosen_digest);
    std::size_t best = chosen.front();
    for (std::size_t i : chosen)
        if (key_of(hits[i]) < key_of(hits[best]))
            best = i;
    result.gs = hits[best];
    return result;
}

}  // namespace rpx
