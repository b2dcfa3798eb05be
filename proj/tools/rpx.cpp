// Command-line front end: list, build, verify, apply, vertex-figure and
// special-group queries over the catalog of regular polygonal complexes.

#include "rpx/export.hpp"
#include "rpx/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

using namespace rpx;

namespace {

IBox parse_box(const std::string& s)
{
    auto parse_range = [](const std::string& part, Int& lo, Int& hi) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--box", "expected lo:hi, got '" + part + "'");
        lo = std::stoll(part.substr(0, colon));
        hi = std::stoll(part.substr(colon + 1));
    };
    IBox box = ibox(-3, 3);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) {
        Int lo, hi;
        parse_range(parts[0], lo, hi);
        box = ibox(lo, hi);
    } else if (parts.size() == 3) {
        for (int i = 0; i < 3; ++i) {
            Int lo, hi;
            parse_range(parts[i], lo, hi);
            box.lo[i] = lo;
            box.hi[i] = hi;
        }
    } else {
        throw CLI::ValidationError("--box", "expected a:b or a:b,c:d,e:f");
    }
    if (!box.valid())
        throw CLI::ValidationError("--box", "min must not exceed max per axis");
    return box;
}

struct GlobalOpts {
    std::string catalog_path;
    std::string box_spec = "-3:3";
    std::string scale = "1";
    std::string format = "text";
    std::string outdir;
    int jobs = 0;
};

Catalog load_catalog(const GlobalOpts& g)
{
    return g.catalog_path.empty() ? Catalog::load_default() : Catalog::load(g.catalog_path);
}

int cmd_list(const GlobalOpts& g, const std::string& mirror_filter, bool skeletons_only)
{
    Catalog cat = load_catalog(g);
    Json rows = Json::array();
    for (const auto& name : cat.names()) {
        const auto& e = cat.entry(name);
        if (skeletons_only && e.mirror)
            continue;
        if (!mirror_filter.empty()) {
            if (!e.mirror)
                continue;
            std::string mv = std::to_string(e.mirror->first) + "," +
                             std::to_string(e.mirror->second);
            if (mv != mirror_filter)
                continue;
        }
        Json row{{"name", name}};
        row["mirror"] = e.mirror ? Json::array({e.mirror->first, e.mirror->second})
                                 : Json("skeleton");
        if (e.expected)
            row["expected"] = expected_to_json(*e.expected);
        rows.push_back(row);
    }
    if (g.format == "json") {
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    std::printf("%-16s %-9s %-4s %-3s %-6s %-20s %-6s %s\n", "name", "mirror", "G2", "r",
                "face", "vertex figure", "vset", "special");
    for (const auto& row : rows) {
        std::string mv = row["mirror"].is_string()
                             ? "skel"
                             : "(" + std::to_string(int(row["mirror"][0])) + "," +
                                   std::to_string(int(row["mirror"][1])) + ")";
        const Json& x = row["expected"];
        std::printf("%-16s %-9s %-4s %-3d %-6s %-20s %-6s %s\n",
                    row["name"].get<std::string>().c_str(), mv.c_str(),
                    x["g2"].get<std::string>().c_str(), x["r"].get<int>(),
                    x["face"].get<std::string>().c_str(),
                    x["vertex_figure"].get<std::string>().c_str(),
                    x.value("vertex_set", std::string("-")).c_str(),
                    x["special_group"].get<std::string>().c_str());
    }
    std::printf("%zu entries\n", rows.size());
    return 0;
}

int cmd_build(const GlobalOpts& g, const std::string& name, bool require_base)
{
    Catalog cat = load_catalog(g);
    GeneratorSet gs = cat.resolve(name);
    BuildOptions opts;
    opts.require_base = require_base;
    ComplexRegion cr = build_complex(gs, parse_box(g.box_spec), opts);
    Rat scale = rat_from_string(g.scale);
    std::filesystem::path dir = g.outdir.empty() ? "." : g.outdir;
    std::filesystem::create_directories(dir);
    auto off_path = (dir / (name + ".off")).string();
    auto side_path = (dir / (name + ".json")).string();
    write_off(cr, off_path, scale);
    std::ofstream side(side_path);
    side << region_sidecar(cr, name, scale).dump(2) << "\n";
    std::size_t finite = 0, inf = 0;
    for (const auto& [k, f] : cr.faces)
        (f.is_infinite() ? inf : finite)++;
    std::cout << name << ": " << cr.vertices.size() << " vertices, " << cr.edges.size()
              << " edges, " << finite << " finite faces, " << inf
              << " infinite faces\n  wrote " << off_path << " and " << side_path << "\n";
    return 0;
}

int cmd_verify(const GlobalOpts& g, std::vector<std::string> names, bool all, bool fail_fast)
{
    Catalog cat = load_catalog(g);
    if (all)
        names.assign(cat.names().begin(), cat.names().end());
    if (names.empty())
        throw Error(ErrorCode::unknown_entry, "verify needs entry names or --all");
    for (const auto& n : names)
        cat.entry(n);  // fail early on unknown names
    IBox box = parse_box(g.box_spec);
    VerifyOptions vopts;
    vopts.fail_fast = fail_fast;

    // Resolve up front: reconstruction results are shared via the memo and
    // the per-entry verification then fans out across threads.
    for (const auto& n : names)
        cat.resolve(n);

    std::vector<Report> reports(names.size());
    unsigned jobs = g.jobs > 0 ? static_cast<unsigned>(g.jobs)
                               : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= names.size() || stop.load())
                return;
            reports[i] = verify_entry(cat, names[i], box, vopts);
            if (fail_fast && !reports[i].ok())
                stop.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, names.size()); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    int failures = 0;
    Json out = Json::array();
    for (const auto& rep : reports) {
        if (rep.entry.empty())
            continue;  // skipped after fail-fast
        if (!rep.ok())
            ++failures;
        if (g.format == "json")
            out.push_back(report_to_json(rep));
        else
            std::cout << report_to_text(rep);
    }
    if (g.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << (failures == 0 ? "all entries pass" : std::to_string(failures) + " entries fail")
                  << "\n";
    if (!g.outdir.empty()) {
        std::filesystem::create_directories(g.outdir);
        std::ofstream f(std::filesystem::path(g.outdir) / "verify_report.json");
        Json doc = Json::array();
        for (const auto& rep : reports)
            if (!rep.entry.empty())
                doc.push_back(report_to_json(rep));
        f << doc.dump(2) << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_apply(const GlobalOpts& g, const std::string& name, const std::string& op,
              const std::string& element)
{
    Catalog cat = load_catalog(g);
    GeneratorSet base = cat.resolve(name);
    Isometry el = cat.resolve_element(base, Json{{"name", element}}, op);
    GeneratorSet out;
    if (op == "lambda0")
        out = lambda0(base, el);
    else if (op == "lambda1")
        out = lambda1(base, el);
    else if (op == "petrie")
        out = petrie_lambda(base, el);
    else
        throw Error(ErrorCode::unknown_entry, "unknown operation '" + op + "'");
    std::string out_name = name + "_" + op + "_" + element;
    Json doc = generator_set_to_entry_json(out_name, out);
    if (!g.outdir.empty()) {
        std::filesystem::create_directories(g.outdir);
        auto path = std::filesystem::path(g.outdir) / (out_name + ".json");
        std::ofstream f(path);
        f << doc.dump(2) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_vertex_figure(const GlobalOpts& g, const std::string& name, const std::string& at)
{
    Catalog cat = load_catalog(g);
    GeneratorSet gs = cat.resolve(name);
    ComplexRegion cr = build_complex(gs, parse_box(g.box_spec));
    Vec3 v = gs.base_vertex;
    if (!at.empty()) {
        std::string s = at;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream is(s);
        std::string a, b, c;
        is >> a >> b >> c;
        v = vec3(rat_from_string(a), rat_from_string(b), rat_from_string(c));
    }
    VertexFigure vf = vertex_figure(cr, v);
    Json nb = Json::array();
    for (const auto& n : vf.neighbors)
        nb.push_back(vec_to_json(n));
    Json edges = Json::array();
    for (const auto& [e, m] : vf.edge_mult)
        edges.push_back(Json::array({e.first, e.second, m}));
    std::string matched = "unrecognized";
    for (auto label : {"tetrahedron", "cube", "octahedron", "square", "cuboctahedron",
                       "ns-cuboctahedron", "double tetrahedron", "double cube",
                       "double octahedron", "double square"})
        if (match_vertex_figure(vf, label)) {
            matched = label;
            break;
        }
    Json out{{"entry", name},   {"center", vec_to_json(vf.center)},
             {"neighbors", nb}, {"edges", edges},
             {"match", matched}};
    if (g.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << name << " at " << vec_to_string(vf.center) << ": degree "
                  << vf.neighbors.size() << ", matches " << matched << "\n";
    return 0;
}

int cmd_special_group(const GlobalOpts& g, const std::string& name)
{
    Catalog cat = load_catalog(g);
    GeneratorSet gs = cat.resolve(name);
    auto grp = special_group(gs);
    auto label = identify(grp);
    auto vf = identify(vertex_figure_group(gs));
    if (g.format == "json")
        std::cout << Json{{"entry", name},
                          {"order", grp.order()},
                          {"label", to_string(label)},
                          {"vertex_figure_group", to_string(vf)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << name << ": special group " << to_string(label) << " (order " << grp.order()
                  << "), vertex-figure group " << to_string(vf) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"regular polygonal complex engine"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--catalog", g.catalog_path, "catalog JSON path (default: embedded)");
    app.add_option("--box", g.box_spec, "box a:b or a:b,c:d,e:f (default -3:3)");
    app.add_option("--scale", g.scale, "output scale (rational)");
    app.add_option("--format", g.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", g.jobs, "parallel verification jobs");
    app.add_option("-o,--out", g.outdir, "output directory");

    auto* list = app.add_subcommand("list", "list catalog entries");
    std::string mirror_filter;
    bool skeletons_only = false;
    list->add_option("--mirror", mirror_filter, "filter by mirror vector, e.g. 1,1");
    list->add_flag("--skeletons", skeletons_only, "only the 2-skeleton entries");

    auto* build = app.add_subcommand("build", "build a bounded region and export OFF + JSON");
    std::string build_name;
    bool require_base = true;
    build->add_option("name", build_name)->required();
    build->add_flag("--require-base,!--no-require-base", require_base,
                    "require the box to contain the base vertex (default on)");

    auto* verify = app.add_subcommand("verify", "verify entries against expected properties");
    std::vector<std::string> verify_names;
    bool verify_all = false, fail_fast = false;
    verify->add_option("names", verify_names);
    verify->add_flag("--all", verify_all);
    verify->add_flag("--fail-fast", fail_fast);

    auto* apply_cmd = app.add_subcommand("apply", "apply lambda0/lambda1/petrie to an entry");
    std::string apply_name, apply_op, apply_element;
    apply_cmd->add_option("name", apply_name)->required();
    apply_cmd->add_option("op", apply_op)->required();
    apply_cmd->add_option("element", apply_element)->required();

    auto* vf_cmd = app.add_subcommand("vertex-figure", "vertex figure at a vertex");
    std::string vf_name, vf_at;
    vf_cmd->add_option("name", vf_name)->required();
    vf_cmd->add_option("--at", vf_at, "vertex coordinates x,y,z (default: base vertex)");

    auto* sg_cmd = app.add_subcommand("special-group", "special group of an entry");
    std::string sg_name;
    sg_cmd->add_option("name", sg_name)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*list)
            return cmd_list(g, mirror_filter, skeletons_only);
        if (*build)
            return cmd_build(g, build_name, require_base);
        if (*verify)
            return cmd_verify(g, verify_names, verify_all, fail_fast);
        if (*apply_cmd)
            return cmd_apply(g, apply_name, apply_op, apply_element);
        if (*vf_cmd)
            return cmd_vertex_figure(g, vf_name, vf_at);
        if (*sg_cmd)
            return cmd_special_group(g, sg_name);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
