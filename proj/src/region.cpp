#include "rpx/region.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace rpx {

std::vector<Vec3> ComplexRegion::interior_vertices() const
{
    std::vector<Vec3> out;
    for (const auto& v : vertices)
        if (is_interior(v))
            out.push_back(v);
    return out;
}

std::vector<Edge> ComplexRegion::interior_edges() const
{
    std::vector<Edge> out;
    for (const auto& e : edges)
        if (is_interior(e))
            out.push_back(e);
    return out;
}

std::set<std::string> ComplexRegion::interior_face_keys() const
{
    std::set<std::string> out;
    for (const auto& e : interior_edges()) {
        auto it = edge_faces.find(e);
        if (it != edge_faces.end())
            out.insert(it->second.begin(), it->second.end());
    }
    return out;
}

void ComplexRegion::insert_edge(const Vec3& a, const Vec3& b)
{
    edges.insert(make_edge(a, b));
    adjacency[a].insert(b);
    adjacency[b].insert(a);
}

void ComplexRegion::insert_face(const FaceGeometry& f, const Edge& at_edge)
{
    std::string key = canonical_key(f);
    faces.emplace(key, f);
    edge_faces[at_edge].insert(std::move(key));
}

ComplexRegion build_complex(const GeneratorSet& gs, const IBox& box, const BuildOptions& opts)
{
    if (!box.valid())
        throw Error(ErrorCode::degenerate_box, "invalid box " + to_string(box));
    ComplexRegion cr;
    cr.box = box;
    cr.margin = opts.margin;
    cr.working_box = box.inflated(opts.collar);
    cr.gs = gs;
    cr.base_face = trace_base_face(gs);

    if (!box.contains(gs.base_vertex)) {
        if (opts.require_base)
            throw Error(ErrorCode::degenerate_box,
                        "box " + to_string(box) + " does not contain the base vertex");
        return cr;
    }

    // Flag-orbit BFS. Nodes are group elements g; the flag of g is the base
    // flag moved by g. Neighbors are s*g (apply s first), which keeps the
    // expansion geometrically local to the node's flag.
    std::vector<Isometry> gens;
    {
        std::set<IsometryKey> gk;
        auto add = [&](const Isometry& s) {
            if (gk.insert(isometry_key(s)).second)
                gens.push_back(s);
        };
        add(gs.r0);
        add(gs.r1);
        for (const auto& s : gs.g2.generators) {
            add(s);
            add(inverse(s));
        }
    }
    const Vec3 o = gs.base_vertex;
    const Vec3 w = gs.twin();
    const IBox& wb = cr.working_box;

    std::set<IsometryKey> visited;
    std::deque<Isometry> queue;
    std::vector<Isometry> audit_nodes;
    auto touches = [&](const Isometry& g) {
        return wb.contains(apply(g, o)) || wb.contains(apply(g, w));
    };
    auto push = [&](const Isometry& g) {
        if (!touches(g))
            return;
        if (visited.insert(isometry_key(g)).second)
            queue.push_back(g);
    };
    push(Isometry::identity());
    while (!queue.empty()) {
        if (visited.size() > opts.node_cap)
            throw Error(ErrorCode::resource_limit,
                        "flag BFS exceeded node cap (" + std::to_string(opts.node_cap) +
                            " nodes); partial region had " + std::to_string(cr.vertices.size()) +
                            " vertices");
        Isometry g = queue.front();
        queue.pop_front();
        ++cr.flags_visited;

        Vec3 p = apply(g, o);
        Vec3 q = apply(g, w);
        bool pin = wb.contains(p), qin = wb.contains(q);
        if (pin)
            cr.vertices.insert(p);
        if (qin)
            cr.vertices.insert(q);
        if (pin && qin) {
            cr.insert_edge(p, q);
            cr.insert_face(transform(*cr.base_face, g), make_edge(p, q));
        }
        if (opts.audit && cr.interior_box().contains(p))
            audit_nodes.push_back(g);
        for (const auto& s : gens)
            push(compose(s, g));
    }
    // Saturation sweep: every neighbor of a flag rooted in the interior
    // must itself have been visited, so nothing reachable was pruned away.
    for (const auto& g : audit_nodes)
        for (const auto& s : gens) {
            Isometry h = compose(s, g);
            if (touches(h) && !visited.count(isometry_key(h)))
                throw Error(ErrorCode::resource_limit,
                            "interior flag has an unvisited neighbor; enlarge the working box");
        }
    return cr;
}

int faces_per_edge(const ComplexRegion& cr, const Edge& e)
{
    if (!cr.is_interior(e))
        throw Error(ErrorCode::boundary_artifact,
                    "faces_per_edge requires an interior edge; got " + vec_to_string(e.first) +
                        "-" + vec_to_string(e.second));
    auto it = cr.edge_faces.find(e);
    return it == cr.edge_faces.end() ? 0 : static_cast<int>(it->second.size());
}

VertexFigure vertex_figure(const ComplexRegion& cr, const Vec3& v)
{
    if (!cr.is_interior(v))
        throw Error(ErrorCode::boundary_artifact,
                    "vertex_figure requires an interior vertex; got " + vec_to_string(v));
    auto adj = cr.adjacency.find(v);
    if (adj == cr.adjacency.end())
        throw Error(ErrorCode::unknown_entry, "not a vertex of the region: " + vec_to_string(v));
    VertexFigure vf;
    vf.center = v;
    vf.neighbors.assign(adj->second.begin(), adj->second.end());
    int n = static_cast<int>(vf.neighbors.size());
    for (int i = 0; i < n; ++i) {
        auto fi = cr.edge_faces.find(make_edge(v, vf.neighbors[i]));
        if (fi == cr.edge_faces.end())
            continue;
        for (int j = i + 1; j < n; ++j) {
            auto fj = cr.edge_faces.find(make_edge(v, vf.neighbors[j]));
            if (fj == cr.edge_faces.end())
                continue;
            int mult = 0;
            for (const auto& k : fi->second)
                if (fj->second.count(k))
                    ++mult;
            if (mult > 0)
                vf.edge_mult[{i, j}] = mult;
        }
    }
    return vf;
}

namespace {

struct RefModel {
    std::vector<Vec3I> verts;
    std::vector<std::pair<int, int>> edges;
    int mult = 1;
};

RefModel reference_model(const std::string& label)
{
    std::string base = label;
    int mult = 1;
    const std::string dbl = "double ";
    if (base.rfind(dbl, 0) == 0) {
        mult = 2;
        base = base.substr(dbl.size());
    }
    RefModel m;
    m.mult = mult;
    auto add_all_pairs_with_dot = [&](Int d) {
        for (std::size_t i = 0; i < m.verts.size(); ++i)
            for (std::size_t j = i + 1; j < m.verts.size(); ++j)
                if (m.verts[i].dot(m.verts[j]) == d)
                    m.edges.emplace_back(i, j);
    };
    if (base == "tetrahedron") {
        m.verts = {vec3i(1, -1, 1), vec3i(-1, 1, 1), vec3i(1, 1, -1), vec3i(-1, -1, -1)};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                m.edges.emplace_back(i, j);
    } else if (base == "cube") {
        for (Int x : {-1, 1})
            for (Int y : {-1, 1})
                for (Int z : {-1, 1})
                    m.verts.push_back(vec3i(x, y, z));
        add_all_pairs_with_dot(1);
    } else if (base == "octahedron") {
        m.verts = {vec3i(1, 0, 0), vec3i(-1, 0, 0), vec3i(0, 1, 0),
                   vec3i(0, -1, 0), vec3i(0, 0, 1), vec3i(0, 0, -1)};
        add_all_pairs_with_dot(0);
    } else if (base == "square") {
        m.verts = {vec3i(1, 0, 0), vec3i(0, 1, 0), vec3i(-1, 0, 0), vec3i(0, -1, 0)};
        m.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    } else if (base == "cuboctahedron" || base == "ns-cuboctahedron") {
        for (int axis = 0; axis < 3; ++axis)
            for (Int s1 : {-1, 1})
                for (Int s2 : {-1, 1}) {
                    Vec3I v = vec3i(0, 0, 0);
                    v[(axis + 1) % 3] = s1;
                    v[(axis + 2) % 3] = s2;
                    m.verts.push_back(v);
                }
        // Standard embedding joins vertices at dot +1; the non-standard
        // (skew-square) embedding joins the same graph at dot -1.
        add_all_pairs_with_dot(base == "cuboctahedron" ? 1 : -1);
    } else {
        throw Error(ErrorCode::unknown_label, "unknown vertex-figure label '" + label + "'");
    }
    return m;
}

}  // namespace

int vertex_figure_degree(const std::string& label)
{
    return static_cast<int>(reference_model(label).verts.size());
}

bool match_vertex_figure(const VertexFigure& vf, const std::string& label)
{
    RefModel model = reference_model(label);
    const int n = static_cast<int>(model.verts.size());
    if (static_cast<int>(vf.neighbors.size()) != n)
        return false;
    // Multiplicity profile must be uniform and equal to the model's.
    std::size_t expect_edges = model.edges.size();
    if (vf.edge_mult.size() != expect_edges)
        return false;
    for (const auto& [e, m] : vf.edge_mult)
        if (m != model.mult)
            return false;

    // Positions relative to the center.
    std::vector<Vec3> act(n);
    for (int i = 0; i < n; ++i)
        act[i] = vf.neighbors[i] - vf.center;

    // Uniform squared scale.
    auto dot3 = [](const Vec3& a, const Vec3& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    Rat ref_n2 = Rat(model.verts[0].dot(model.verts[0]));
    Rat act_n2 = dot3(act[0], act[0]);
    Rat s2 = act_n2 / ref_n2;
    for (int i = 0; i < n; ++i)
        if (dot3(act[i], act[i]) != s2 * Rat(model.verts[i].dot(model.verts[i])))
            return false;

    // Gram-preserving bijection search with backtracking. Congruence of
    // point configurations is exactly Gram-matrix equality, which also
    // covers planar models where no basis triple exists.
    std::set<std::pair<int, int>> model_edge_set;
    for (const auto& [a, b] : model.edges)
        model_edge_set.emplace(std::min(a, b), std::max(a, b));
    std::vector<int> assign(n, -1);
    std::vector<bool> used(n, false);
    auto ok_pairwise = [&](int i, int cand) {
        for (int j = 0; j < i; ++j) {
            if (Rat(model.verts[i].dot(model.verts[j])) * s2 != dot3(act[cand], act[assign[j]]))
                return false;
            bool ref_edge = model_edge_set.count({std::min(i, j), std::max(i, j)}) > 0;
            auto key = std::make_pair(std::min(cand, assign[j]), std::max(cand, assign[j]));
            bool act_edge = vf.edge_mult.count(key) > 0;
            if (ref_edge != act_edge)
                return false;
        }
        return true;
    };
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n)
            return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand])
                continue;
            if (dot3(act[cand], act[cand]) != s2 * Rat(model.verts[i].dot(model.verts[i])))
                continue;
            if (!ok_pairwise(i, cand))
                continue;
            used[cand] = true;
            assign[i] = cand;
            if (rec(i + 1))
                return true;
            used[cand] = false;
            assign[i] = -1;
        }
        return false;
    };
    return rec(0);
}

std::optional<Isometry> plane_reflection(const PlaneEq& plane)
{
    const Vec3I& n = plane.normal;
    Rat nn = Rat(n.dot(n));
    Mat3 lin;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat entry = Rat(i == j ? 1 : 0) - Rat(2 * n[i] * n[j]) / nn;
            if (entry.denominator() != 1)
                return std::nullopt;
            lin(i, j) = entry.numerator();
        }
    if (!is_signed_permutation(lin))
        return std::nullopt;
    Vec3 t = to_rat(n) * (Rat(2) * plane.offset / nn);
    return make_isometry(lin, t);
}

bool detect_face_mirror(const GeneratorSet& gs, const ComplexRegion& cr)
{
    FaceGeometry base = cr.base_face ? *cr.base_face : trace_base_face(gs);
    auto plane = plane_of(base);
    if (!plane)
        return false;  // face mirrors require planar faces
    auto t3 = plane_reflection(*plane);
    if (!t3)
        return false;  // reflection is not even compatible with the lattice

    const IBox inner = cr.interior_box();
    // Vertices.
    for (const auto& v : cr.vertices) {
        if (!inner.contains(v))
            continue;
        Vec3 img = apply(*t3, v);
        if (inner.contains(img) && !cr.vertices.count(img))
            return false;
    }
    // Edges and the faces through them.
    for (const auto& e : cr.edges) {
        if (!cr.is_interior(e))
            continue;
        Vec3 a = apply(*t3, e.first), b = apply(*t3, e.second);
        Edge img = make_edge(a, b);
        if (!inner.contains(img.first) || !inner.contains(img.second))
            continue;
        if (!cr.edges.count(img))
            return false;
        auto src = cr.edge_faces.find(e);
        if (src == cr.edge_faces.end())
            continue;
        for (const auto& key : src->second) {
            FaceGeometry fimg = transform(cr.faces.at(key), *t3);
            if (!cr.faces.count(canonical_key(fimg)))
                return false;
        }
    }
    return true;
}

}  // namespace rpx
