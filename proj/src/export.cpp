#include "rpx/export.hpp"

#include <fstream>
#include <map>

namespace rpx {

namespace {

struct VertexIndex {
    std::map<Vec3, int, VecLess> index;
    std::vector<Vec3> list;

    int at(const Vec3& v) const
    {
        auto it = index.find(v);
        return it == index.end() ? -1 : it->second;
    }
};

VertexIndex index_vertices(const ComplexRegion& cr)
{
    VertexIndex vi;
    for (const auto& v : cr.vertices)
        if (cr.box.contains(v)) {
            vi.index.emplace(v, static_cast<int>(vi.list.size()));
            vi.list.push_back(v);
        }
    return vi;
}

}  // namespace

void write_off(const ComplexRegion& cr, const std::string& path, const Rat& scale)
{
    VertexIndex vi = index_vertices(cr);
    // Finite faces whose vertices all lie in the report box.
    std::vector<std::vector<int>> polys;
    for (const auto& [key, f] : cr.faces) {
        if (f.is_infinite())
            continue;
        std::vector<int> poly;
        bool ok = true;
        for (const auto& v : f.ring) {
            int i = vi.at(v);
            if (i < 0) {
                ok = false;
                break;
            }
            poly.push_back(i);
        }
        if (ok)
            polys.push_back(std::move(poly));
    }
    std::size_t n_edges = 0;
    for (const auto& e : cr.edges)
        if (cr.box.contains(e.first) && cr.box.contains(e.second))
            ++n_edges;

    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::unsupported, "cannot write OFF file '" + path + "'");
    out << "OFF\n" << vi.list.size() << " " << polys.size() << " " << n_edges << "\n";
    for (const auto& v : vi.list)
        out << rat_to_decimal_string(v[0] * scale) << " " << rat_to_decimal_string(v[1] * scale)
            << " " << rat_to_decimal_string(v[2] * scale) << "\n";
    for (const auto& p : polys) {
        out << p.size();
        for (int i : p)
            out << " " << i;
        out << "\n";
    }
}

Json region_sidecar(const ComplexRegion& cr, const std::string& entry_name, const Rat& scale)
{
    VertexIndex vi = index_vertices(cr);
    Json verts = Json::array();
    for (const auto& v : vi.list)
        verts.push_back(vec_to_json(v * scale));
    Json edges = Json::array();
    for (const auto& e : cr.edges) {
        int a = vi.at(e.first), b = vi.at(e.second);
        if (a >= 0 && b >= 0)
            edges.push_back(Json::array({a, b}));
    }
    Json finite = Json::array();
    Json infinite = Json::array();
    for (const auto& [key, f] : cr.faces) {
        if (!f.is_infinite()) {
            Json poly = Json::array();
            bool ok = true;
            for (const auto& v : f.ring) {
                int i = vi.at(v);
                ok = ok && i >= 0;
                poly.push_back(i);
            }
            if (ok)
                finite.push_back(Json{{"class", to_string(f.cls)}, {"vertices", poly}});
            continue;
        }
        Json seg = Json::array();
        for (const auto& v : f.ring)
            seg.push_back(vec_to_json(v * scale));
        Json jf{{"class", to_string(f.cls)},
                {"segment", seg},
                {"period", vec_to_json(*f.period * scale)}};
        if (f.axis)
            jf["axis"] = Json::array({(*f.axis)[0], (*f.axis)[1], (*f.axis)[2]});
        infinite.push_back(jf);
    }
    return Json{{"entry", entry_name},
                {"box", to_string(cr.box)},
                {"margin", cr.margin},
                {"scale", rat_to_string(scale)},
                {"vertices", verts},
                {"edges", edges},
                {"finite_faces", finite},
                {"infinite_faces", infinite}};
}

}  // namespace rpx
