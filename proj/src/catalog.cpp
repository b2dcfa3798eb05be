#include "rpx/catalog.hpp"

#include <fstream>
#include <sstream>

namespace rpx {

Json vec_to_json(const Vec3& v)
{
    return Json::array({rat_to_string(v[0]), rat_to_string(v[1]), rat_to_string(v[2])});
}

Vec3 vec_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 3)
        throw Error(ErrorCode::schema, "vector must be an array of three rational strings");
    auto comp = [&](int i) {
        const Json& c = j[i];
        if (c.is_number_integer())
            return Rat(c.get<Int>());
        return rat_from_string(c.get<std::string>());
    };
    return vec3(comp(0), comp(1), comp(2));
}

Json isometry_to_json(const Isometry& iso)
{
    Json lin = Json::array();
    for (int i = 0; i < 3; ++i)
        lin.push_back(Json::array({iso.linear(i, 0), iso.linear(i, 1), iso.linear(i, 2)}));
    return Json{{"linear", lin}, {"translation", vec_to_json(iso.translation)}};
}

Isometry isometry_from_json(const Json& j)
{
    if (!j.contains("linear"))
        throw Error(ErrorCode::schema, "isometry needs a 'linear' matrix");
    Mat3 m;
    const Json& lin = j.at("linear");
    if (!lin.is_array() || lin.size() != 3)
        throw Error(ErrorCode::schema, "'linear' must be a 3x3 integer matrix");
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            m(i, k) = lin[i][k].get<Int>();
    Vec3 t = j.contains("translation") ? vec_from_json(j.at("translation")) : vec3(0, 0, 0);
    return make_isometry(m, t);
}

ExpectedProperties expected_from_json(const Json& j)
{
    ExpectedProperties e;
    e.g2 = point_group_label_from_string(j.at("g2").get<std::string>());
    e.r = j.at("r").get<int>();
    e.face = face_class_from_string(j.at("face").get<std::string>());
    e.vertex_figure = j.at("vertex_figure").get<std::string>();
    if (j.contains("vertex_set"))
        e.vertex_set = vertex_set_from_string(j.at("vertex_set").get<std::string>());
    e.special_group = point_group_label_from_string(j.at("special_group").get<std::string>());
    if (j.contains("vf_group"))
        e.vf_group = point_group_label_from_string(j.at("vf_group").get<std::string>());
    e.flag_stabilizer = j.value("flag_stabilizer", 1);
    return e;
}

Json expected_to_json(const ExpectedProperties& e)
{
    Json j{{"g2", to_string(e.g2)},
           {"r", e.r},
           {"face", to_string(e.face)},
           {"vertex_figure", e.vertex_figure},
           {"special_group", to_string(e.special_group)},
           {"flag_stabilizer", e.flag_stabilizer}};
    if (e.vertex_set)
        j["vertex_set"] = to_string(*e.vertex_set);
    if (e.vf_group)
        j["vf_group"] = to_string(*e.vf_group);
    return j;
}

Json generator_set_to_entry_json(const std::string& name, const GeneratorSet& gs)
{
    Json g2gens = Json::object();
    int unnamed = 0;
    for (const auto& g : gs.g2.generators) {
        std::string gname;
        for (const auto& [n, iso] : gs.g2_names)
            if (iso == g)
                gname = n;
        if (gname.empty())
            gname = "G" + std::to_string(unnamed++);
        g2gens[gname] = isometry_to_json(g);
    }
    Json names = Json::object();
    for (const auto& [n, iso] : gs.g2_names)
        names[n] = isometry_to_json(iso);
    Json src{{"kind", "explicit"},
             {"r0", isometry_to_json(gs.r0)},
             {"r1", isometry_to_json(gs.r1)},
             {"g2", Json{{"generators", g2gens}}},
             {"base_vertex", vec_to_json(gs.base_vertex)}};
    Json entry{{"source", src}};
    entry["mirror"] = Json::array({mirror_vector(gs).first, mirror_vector(gs).second});
    if (!names.empty())
        entry["g2_names"] = names;
    return Json{{"schema", "rpx-catalog/1"}, {"entries", Json{{name, entry}}}};
}

ReconstructionConstraints constraints_from_json(const Json& jc)
{
    ReconstructionConstraints c;
    c.mirror_vector = {jc.at("mirror")[0].get<int>(), jc.at("mirror")[1].get<int>()};
    c.twin = vec_from_json(jc.at("twin"));
    auto g2label = point_group_label_from_string(jc.at("g2").get<std::string>());
    c.g2_kind = g2label.kind == PointGroupLabel::Kind::cyclic ? EdgeStabilizerSpec::Kind::cyclic
                                                              : EdgeStabilizerSpec::Kind::dihedral;
    c.g2_order = g2label.order;
    c.face = face_class_from_string(jc.at("face").get<std::string>());
    c.vertex_set = vertex_set_from_string(jc.at("vertex_set").get<std::string>());
    c.vertex_figure = jc.at("vertex_figure").get<std::string>();
    c.special_group = point_group_label_from_string(jc.at("special_group").get<std::string>());
    c.r = jc.at("r").get<int>();
    if (jc.contains("base_face")) {
        for (const auto& v : jc.at("base_face").at("ring"))
            c.base_face_ring.push_back(vec_from_json(v));
        if (jc.at("base_face").contains("period"))
            c.base_face_period = vec_from_json(jc.at("base_face").at("period"));
    }
    return c;
}

const CatalogEntry& Catalog::entry(const std::string& name) const
{
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw Error(ErrorCode::unknown_entry, "unknown catalog entry '" + name + "'");
    return it->second;
}

Catalog Catalog::from_json(const Json& doc)
{
    Catalog cat;
    if (!doc.contains("entries") || !doc.at("entries").is_object())
        throw Error(ErrorCode::schema, "catalog document needs an 'entries' object");
    // Deterministic order: the optional 'order' array first, then remaining
    // entries alphabetically.
    std::vector<std::string> order;
    if (doc.contains("order"))
        for (const auto& n : doc.at("order"))
            order.push_back(n.get<std::string>());
    for (auto it = doc.at("entries").begin(); it != doc.at("entries").end(); ++it)
        if (std::find(order.begin(), order.end(), it.key()) == order.end())
            order.push_back(it.key());

    for (const auto& name : order) {
        if (!doc.at("entries").contains(name))
            throw Error(ErrorCode::schema, "'order' references missing entry '" + name + "'");
        const Json& je = doc.at("entries").at(name);
        CatalogEntry e;
        e.name = name;
        try {
            if (!je.contains("source") || !je.at("source").contains("kind"))
                throw Error(ErrorCode::schema, "entry needs source.kind");
            e.source = je.at("source");
            if (je.contains("mirror") && !je.at("mirror").is_string())
                e.mirror = {je.at("mirror")[0].get<int>(), je.at("mirror")[1].get<int>()};
            if (je.contains("expected"))
                e.expected = expected_from_json(je.at("expected"));
            if (je.contains("extra"))
                for (const auto& x : je.at("extra"))
                    e.extra.push_back(x);
            if (je.contains("margin"))
                e.margin = je.at("margin").get<Int>();
            if (je.contains("g2_names"))
                for (auto it2 = je.at("g2_names").begin(); it2 != je.at("g2_names").end(); ++it2)
                    e.g2_names[it2.key()] = isometry_from_json(it2.value());
            const std::string kind = e.source.at("kind").get<std::string>();
            if (kind == "explicit") {
                if (!e.source.contains("r0") || !e.source.contains("r1") ||
                    !e.source.contains("g2"))
                    throw Error(ErrorCode::schema, "explicit source needs r0, r1 and g2");
            } else if (kind == "derived") {
                if (!e.source.contains("base") || !e.source.contains("op"))
                    throw Error(ErrorCode::schema, "derived source needs base and op");
            } else if (kind == "reconstructed") {
                if (!e.source.contains("constraints"))
                    throw Error(ErrorCode::schema, "reconstructed source needs constraints");
            } else if (kind == "apeir") {
                if (!e.source.contains("q"))
                    throw Error(ErrorCode::schema, "apeir source needs q");
            } else if (kind == "skeleton2") {
                if (!e.source.contains("apeirotope"))
                    throw Error(ErrorCode::schema, "skeleton2 source needs apeirotope");
            } else {
                throw Error(ErrorCode::schema, "unknown source kind '" + kind + "'");
            }
        } catch (const Json::exception& ex) {
            throw Error(ErrorCode::schema,
                        "entry '" + name + "': malformed JSON: " + std::string(ex.what()));
        } catch (const Error& ex) {
            throw Error(ex.code(), "entry '" + name + "': " + std::string(ex.what()));
        }
        cat.order_.push_back(name);
        cat.entries_.emplace(name, std::move(e));
    }
    // Every derivation base must exist (cycles surface during resolve()).
    for (const auto& name : cat.order_) {
        const auto& e = cat.entries_.at(name);
        if (e.source.at("kind") == "derived") {
            std::string base = e.source.at("base").get<std::string>();
            if (!cat.has(base))
                throw Error(ErrorCode::schema,
                            "entry '" + name + "': unresolved base '" + base + "'");
        }
    }
    return cat;
}

Catalog Catalog::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::schema, "cannot open catalog file '" + path + "'");
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception& ex) {
        throw Error(ErrorCode::schema, "catalog parse error: " + std::string(ex.what()));
    }
    return from_json(doc);
}

Catalog Catalog::load_default() { return from_json(default_document()); }

Json Catalog::to_json() const
{
    Json entries = Json::object();
    for (const auto& [name, e] : entries_) {
        Json je{{"source", e.source}};
        if (e.mirror)
            je["mirror"] = Json::array({e.mirror->first, e.mirror->second});
        else
            je["mirror"] = "skeleton";
        if (e.expected)
            je["expected"] = expected_to_json(*e.expected);
        if (!e.extra.empty())
            je["extra"] = e.extra;
        if (e.margin)
            je["margin"] = *e.margin;
        if (!e.g2_names.empty()) {
            Json names = Json::object();
            for (const auto& [n, iso] : e.g2_names)
                names[n] = isometry_to_json(iso);
            je["g2_names"] = names;
        }
        entries[name] = je;
    }
    return Json{{"schema", "rpx-catalog/1"}, {"order", order_}, {"entries", entries}};
}

std::optional<ApeirData> Catalog::apeir_data(const std::string& name) const
{
    const auto& e = entry(name);
    if (e.source.at("kind") != "apeir")
        return std::nullopt;
    return apeir(e.source.at("q").get<std::string>());
}

Isometry Catalog::resolve_element(const GeneratorSet& base, const Json& spec,
                                  const std::string& op) const
{
    if (spec.contains("name")) {
        std::string n = spec.at("name").get<std::string>();
        auto it = base.g2_names.find(n);
        if (it == base.g2_names.end())
            throw Error(ErrorCode::invalid_element, "no G2 element named '" + n + "'");
        return it->second;
    }
    std::string sel = spec.value("select", "");
    if (sel == "halfturn") {
        auto h = base.g2.half_turn();
        if (!h)
            throw Error(ErrorCode::invalid_element, "G2 has no unique half-turn");
        return *h;
    }
    if (sel == "r0_partner" || sel == "r1_partner") {
        int dim = spec.at("dim").get<int>();
        const Isometry& anchor = sel == "r0_partner" ? base.r0 : base.r1;
        std::vector<Isometry> hits;
        for (const auto& refl : base.g2.plane_reflections()) {
            Isometry prod = compose(anchor, refl);
            if (is_involution(prod) && fixed_space_dimension(prod) == dim)
                hits.push_back(refl);
        }
        if (hits.size() == 1)
            return hits.front();
        if (hits.empty())
            throw Error(ErrorCode::invalid_element,
                        "no G2 reflection satisfies the " + sel + " condition for " + op);
        // Several candidates: they must induce the same derived region.
        std::string digest;
        for (const auto& r : hits) {
            GeneratorSet child = op == "lambda0" ? lambda0(base, r) : lambda1(base, r);
            auto cr = build_complex(child, ibox(-2, 2));
            std::ostringstream os;
            for (const auto& k : cr.interior_face_keys())
                os << k << ';';
            if (digest.empty())
                digest = os.str();
            else if (digest != os.str())
                throw Error(ErrorCode::reconstruction_ambiguous,
                            "derivation element is ambiguous for " + op);
        }
        return hits.front();
    }
    throw Error(ErrorCode::schema, "bad element spec: " + spec.dump());
}

GeneratorSet Catalog::resolve(const std::string& name)
{
    std::lock_guard<std::recursive_mutex> lock(*mu_);
    return resolve_locked(name);
}

GeneratorSet Catalog::resolve_locked(const std::string& name)
{
    auto memo = memo_.find(name);
    if (memo != memo_.end())
        return memo->second;
    if (resolving_.count(name))
        throw Error(ErrorCode::schema, "derivation cycle through entry '" + name + "'");
    resolving_.insert(name);
    const CatalogEntry& e = entry(name);
    GeneratorSet gs;
    try {
        const std::string kind = e.source.at("kind").get<std::string>();
        if (kind == "explicit") {
            Isometry r0 = isometry_from_json(e.source.at("r0"));
            Isometry r1 = isometry_from_json(e.source.at("r1"));
            std::vector<Isometry> g2;
            std::map<std::string, Isometry> names;
            for (auto it = e.source.at("g2").at("generators").begin();
                 it != e.source.at("g2").at("generators").end(); ++it) {
                Isometry g = isometry_from_json(it.value());
                g2.push_back(g);
                names.emplace(it.key(), g);
            }
            Vec3 base = e.source.contains("base_vertex")
                            ? vec_from_json(e.source.at("base_vertex"))
                            : vec3(0, 0, 0);
            gs = make_generator_set(r0, r1, g2, base, names);
        } else if (kind == "derived") {
            GeneratorSet base = resolve_locked(e.source.at("base").get<std::string>());
            std::string op = e.source.at("op").get<std::string>();
            Isometry el = resolve_element(base, e.source.at("element"), op);
            if (op == "lambda0")
                gs = lambda0(base, el);
            else if (op == "lambda1")
                gs = lambda1(base, el);
            else
                throw Error(ErrorCode::schema, "unknown derivation op '" + op + "'");
        } else if (kind == "reconstructed") {
            gs = reconstruct_generators(constraints_from_json(e.source.at("constraints"))).gs;
        } else if (kind == "apeir") {
            gs = apeir_skeleton(apeir(e.source.at("q").get<std::string>()));
        } else if (kind == "skeleton2") {
            std::string which = e.source.at("apeirotope").get<std::string>();
            if (which != "cubical_434")
                throw Error(ErrorCode::schema, "unknown apeirotope '" + which + "'");
            gs = skeleton2_cubical();
        } else {
            throw Error(ErrorCode::schema, "unknown source kind '" + kind + "'");
        }
        // Per-entry element names extend or override the inherited ones.
        for (const auto& [n, iso] : e.g2_names) {
            if (!gs.g2.find(iso))
                throw Error(ErrorCode::invalid_element,
                            "g2_names['" + n + "'] is not in the resolved G2");
            gs.g2_names[n] = iso;
        }
    } catch (const Error& ex) {
        resolving_.erase(name);
        if (std::string(ex.what()).rfind("entry '", 0) == 0)
            throw;
        throw Error(ex.code(), "entry '" + name + "': " + std::string(ex.what()));
    }
    resolving_.erase(name);
    memo_.emplace(name, gs);
    return gs;
}

}  // namespace rpx
