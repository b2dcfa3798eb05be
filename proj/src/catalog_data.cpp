#include "rpx/catalog.hpp"

namespace rpx {

namespace {

Json iso_json(std::initializer_list<Int> rows, std::initializer_list<const char*> t = {})
{
    Json lin = Json::array();
    auto it = rows.begin();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j)
            row.push_back(*it++);
        lin.push_back(row);
    }
    Json tr = Json::array({"0", "0", "0"});
    if (t.size() == 3) {
        auto ti = t.begin();
        tr = Json::array({*ti, *(ti + 1), *(ti + 2)});
    }
    return Json{{"linear", lin}, {"translation", tr}};
}

Json ring_json(std::initializer_list<std::initializer_list<const char*>> pts)
{
    Json out = Json::array();
    for (const auto& p : pts) {
        auto it = p.begin();
        out.push_back(Json::array({*it, *(it + 1), *(it + 2)}));
    }
    return out;
}

Json expected_json(const char* g2, int r, const char* face, const char* vf, const char* vset,
                   const char* special, const char* vf_group = nullptr, int flag_stab = 1)
{
    Json j{{"g2", g2},         {"r", r},
           {"face", face},     {"vertex_figure", vf},
           {"vertex_set", vset}, {"special_group", special},
           {"flag_stabilizer", flag_stab}};
    if (vf_group)
        j["vf_group"] = vf_group;
    return j;
}

Json recon_source(const char* twin_x, const char* twin_y, const char* twin_z, const char* g2,
                  const char* face, const char* vset, const char* vf, int r,
                  Json base_face = Json())
{
    Json c{{"mirror", Json::array({1, 2})},
           {"twin", Json::array({twin_x, twin_y, twin_z})},
           {"g2", g2},
           {"face", face},
           {"vertex_set", vset},
           {"vertex_figure", vf},
           {"special_group", "[3,4]"},
           {"r", r}};
    if (!base_face.is_null())
        c["base_face"] = base_face;
    return Json{{"kind", "reconstructed"}, {"constraints", c}};
}

Json derived_source(const char* base, const char* op, Json element)
{
    return Json{{"kind", "derived"}, {"base", base}, {"op", op}, {"element", element}};
}

}  // namespace

Json Catalog::default_document()
{
    Json e = Json::object();

    // -- mirror vector (1,2): reconstructed from their classification rows --
    e["K1_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "0", "1", "D2", "4_s", "L_aa0", "cuboctahedron", 4,
                                Json{{"ring", ring_json({{"0", "0", "0"},
                                                         {"1", "0", "1"},
                                                         {"1", "1", "0"},
                                                         {"0", "1", "1"}})}})},
        {"expected", expected_json("D2", 4, "4_s", "cuboctahedron", "L_aa0", "[3,4]")}};
    e["K2_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "1", "-1", "C3", "4_s", "L_aaa", "cube", 3)},
        {"expected", expected_json("C3", 3, "4_s", "cube", "L_aaa", "[3,4]")}};
    e["K3_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "1", "-1", "D3", "4_s", "L_aaa", "double cube", 6)},
        {"expected", expected_json("D3", 6, "4_s", "double cube", "L_aaa", "[3,4]")}};
    e["K4_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "0", "0", "D2", "6_s", "aZ3", "octahedron", 4)},
        {"expected", expected_json("D2", 4, "6_s", "octahedron", "aZ3", "[3,4]")},
        {"extra", Json::array({Json{{"check", "lambda0_image_equals"},
                                    {"element", Json{{"select", "r0_partner"}, {"dim", 0}}},
                                    {"other", "skel2_apeir_34"}}})}};
    e["K5_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "0", "0", "D2", "6_s", "V_a", "double square", 4)},
        {"expected", expected_json("D2", 4, "6_s", "double square", "V_a", "[3,4]")}};
    e["K6_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("0", "0", "1", "D4", "6_s", "aZ3", "double octahedron", 8)},
        {"expected", expected_json("D4", 8, "6_s", "double octahedron", "aZ3", "[3,4]")}};
    e["K7_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "1", "-1", "D3", "6_s", "W_a", "double tetrahedron", 6)},
        {"expected", expected_json("D3", 6, "6_s", "double tetrahedron", "W_a", "[3,4]")}};
    e["K8_1_2"] = {
        {"mirror", Json::array({1, 2})},
        {"source", recon_source("1", "1", "0", "D2", "6_s", "L_aa0", "cuboctahedron", 4)},
        {"expected", expected_json("D2", 4, "6_s", "cuboctahedron", "L_aa0", "[3,4]")}};

    // -- mirror vector (1,1): four derived, five explicit --
    e["K1_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         derived_source("K3_1_2", "lambda1", Json{{"select", "r1_partner"}, {"dim", 1}})},
        {"expected", expected_json("D3", 6, "inf_3", "double cube", "L_aaa", "[3,4]", "[3,4]")},
        {"extra", Json::array({Json{{"check", "cube_triples"}}})}};
    e["K2_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         derived_source("K5_1_2", "lambda1", Json{{"select", "r1_partner"}, {"dim", 1}})},
        {"expected", expected_json("D2", 4, "inf_3", "double square", "V_a", "[3,4]", "[4,2]")},
        {"extra", Json::array({Json{{"check", "subcomplex_of"}, {"outer", "K3_1_1"}}})}};
    e["K3_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         derived_source("K6_1_2", "lambda1", Json{{"select", "r1_partner"}, {"dim", 1}})},
        {"expected",
         expected_json("D4", 8, "inf_3", "double octahedron", "aZ3", "[3,4]", "[3,4]")}};
    e["K4_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         derived_source("K7_1_2", "lambda1", Json{{"select", "r1_partner"}, {"dim", 1}})},
        {"expected",
         expected_json("D3", 6, "inf_4", "double tetrahedron", "W_a", "[3,4]", "[3,3]")},
        {"extra", Json::array({Json{{"check", "degree"}, {"value", 4}},
                               Json{{"check", "axes_two_per_coordinate"}},
                               Json{{"check", "edge_graph_equals"}, {"other", "K6_1_1"}}})}};
    e["K5_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         Json{{"kind", "explicit"},
              {"r0", iso_json({-1, 0, 0, 0, 1, 0, 0, 0, -1}, {"1", "0", "1"})},
              {"r1", iso_json({-1, 0, 0, 0, 0, 1, 0, 1, 0})},
              {"g2", Json{{"generators",
                           Json{{"R2", iso_json({0, 0, 1, 0, 1, 0, 1, 0, 0})},
                                {"R2hat", iso_json({1, 0, 0, 0, -1, 0, 0, 0, 1})}}}}},
              {"base_vertex", Json::array({"0", "0", "0"})}}},
        {"expected",
         expected_json("D2", 4, "inf_4", "ns-cuboctahedron", "L_aa0", "[3,4]", "[3,4]")},
        {"extra",
         Json::array({Json{{"check", "helix_axis_directions"}, {"count", 3}},
                      Json{{"check", "unverified"},
                           {"name", "compound_of_12_apeirohedra"},
                           {"reason", "identifying connected apeirohedral subcomplexes needs an "
                                      "unbounded structure; only the 3-way axis partition is "
                                      "checked at desk scale"}}})}};
    e["K6_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         Json{{"kind", "explicit"},
              {"r0", iso_json({-1, 0, 0, 0, 0, 1, 0, 1, 0}, {"1", "1", "-1"})},
              {"r1", iso_json({-1, 0, 0, 0, 1, 0, 0, 0, -1})},
              {"g2",
               Json{{"generators", Json{{"S", iso_json({0, 0, -1, 1, 0, 0, 0, -1, 0})}}}}},
              {"base_vertex", Json::array({"0", "0", "0"})}}},
        {"expected", expected_json("C3", 3, "inf_4", "tetrahedron", "W_a", "[3,4]+", "[3,3]+")},
        {"extra", Json::array({Json{{"check", "subcomplex_of"},
                                    {"outer", "K4_1_1"},
                                    {"face_ratio", "1/2"}},
                               Json{{"check", "degree"}, {"value", 4}}})}};
    e["K7_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         Json{{"kind", "explicit"},
              {"r0", iso_json({0, -1, 0, -1, 0, 0, 0, 0, -1}, {"0", "0", "1"})},
              {"r1", iso_json({0, 0, -1, 0, -1, 0, -1, 0, 0})},
              {"g2", Json{{"generators", Json{{"S", iso_json({0, 1, 0, -1, 0, 0, 0, 0, 1})}}}}},
              {"base_vertex", Json::array({"0", "0", "0"})}}},
        {"expected", expected_json("C4", 4, "inf_3", "octahedron", "aZ3", "[3,4]+", "[3,4]+")},
        {"extra", Json::array({Json{{"check", "subcomplex_of"}, {"outer", "K3_1_1"}},
                               Json{{"check", "edge_graph_equals"}, {"other", "K3_1_1"}}})}};
    e["K8_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         Json{{"kind", "explicit"},
              {"r0", iso_json({0, -1, 0, -1, 0, 0, 0, 0, -1}, {"1", "1", "0"})},
              {"r1", iso_json({0, 0, -1, 0, -1, 0, -1, 0, 0})},
              {"g2", Json{{"generators",
                           Json{{"R2", iso_json({1, 0, 0, 0, 1, 0, 0, 0, -1})},
                                {"R2hat", iso_json({0, 1, 0, 1, 0, 0, 0, 0, 1})}}}}},
              {"base_vertex", Json::array({"0", "0", "0"})}}},
        {"expected",
         expected_json("D2", 4, "inf_3", "ns-cuboctahedron", "L_aa0", "[3,4]", "[3,4]")}};
    e["K9_1_1"] = {
        {"mirror", Json::array({1, 1})},
        {"source",
         Json{{"kind", "explicit"},
              {"r0", iso_json({0, -1, 0, -1, 0, 0, 0, 0, -1}, {"1", "1", "-1"})},
              {"r1", iso_json({0, 0, -1, 0, -1, 0, -1, 0, 0})},
              {"g2", Json{{"generators", Json{{"S", iso_json({0, 1, 0, 0, 0, -1, -1, 0, 0})}}}}},
              {"base_vertex", Json::array({"0", "0", "0"})}}},
        {"expected", expected_json("C3", 3, "inf_3", "cube", "L_aaa", "[3,4]+", "[3,4]+")},
        {"extra", Json::array({Json{{"check", "subcomplex_of"}, {"outer", "K1_1_1"}},
                               Json{{"check", "edge_graph_equals"}, {"other", "K1_1_1"}}})}};

    // -- mirror vectors (0,k) and (2,k) --
    Json halfturn_101 = iso_json({0, 0, 1, 0, -1, 0, 1, 0, 0});  // half-turn about (1,0,1)
    e["K_0_1"] = {
        {"mirror", Json::array({0, 1})},
        {"source", derived_source("K5_1_1", "lambda0", Json{{"name", "R2hat"}})},
        {"g2_names", Json{{"R2", halfturn_101},
                          {"R2hat", iso_json({1, 0, 0, 0, -1, 0, 0, 0, 1})}}},
        {"expected",
         expected_json("D2", 4, "inf_2", "ns-cuboctahedron", "L_aa0", "[3,4]", "[3,4]")},
        {"extra",
         Json::array({Json{{"check", "base_face"},
                           {"ring", ring_json({{"-1", "1", "0"}, {"0", "0", "0"},
                                               {"1", "0", "1"}})},
                           {"period", Json::array({"2", "-1", "1"})}},
                      Json{{"check", "oracle"}, {"kind", "two_zigzag"}},
                      Json{{"check", "coplanar_pairs"}}})}};
    e["K_0_2"] = {
        {"mirror", Json::array({0, 2})},
        {"source",
         derived_source("K1_1_2", "lambda0", Json{{"select", "r0_partner"}, {"dim", 0}})},
        {"g2_names", Json{{"R2", halfturn_101},
                          {"R2hat", iso_json({1, 0, 0, 0, -1, 0, 0, 0, 1})}}},
        {"expected", expected_json("D2", 4, "inf_2", "cuboctahedron", "L_aa0", "[3,4]")},
        {"extra",
         Json::array({Json{{"check", "base_face"},
                           {"ring", ring_json({{"0", "1", "1"}, {"0", "0", "0"},
                                               {"1", "0", "1"}})},
                           {"period", Json::array({"1", "-1", "0"})}},
                      Json{{"check", "oracle"}, {"kind", "petrie"}},
                      Json{{"check", "coplanar_pairs"}},
                      Json{{"check", "edge_graph_equals"}, {"other", "K1_1_2"}}})}};
    e["K_2_1"] = {
        {"mirror", Json::array({2, 1})},
        {"source", derived_source("K_0_1", "lambda0", Json{{"name", "R2"}})},
        {"expected",
         expected_json("D2", 4, "6_c", "ns-cuboctahedron", "L_aa0", "[3,4]", "[3,4]")},
        {"extra",
         Json::array({Json{{"check", "base_face"},
                           {"ring", ring_json({{"0", "0", "0"},
                                               {"1", "0", "1"},
                                               {"1", "1", "2"},
                                               {"0", "2", "2"},
                                               {"-1", "2", "1"},
                                               {"-1", "1", "0"}})}},
                      Json{{"check", "oracle"}, {"kind", "two_hole"}},
                      Json{{"check", "coplanar_pairs"}}})}};
    e["K_2_2"] = {
        {"mirror", Json::array({2, 2})},
        {"source", derived_source("K_0_2", "lambda0", Json{{"name", "R2"}})},
        {"expected", expected_json("D2", 4, "3_c", "cuboctahedron", "L_aa0", "[3,4]")},
        {"extra",
         Json::array({Json{{"check", "base_face"},
                           {"ring", ring_json({{"0", "0", "0"}, {"1", "0", "1"},
                                               {"0", "1", "1"}})}},
                      Json{{"check", "equals_semiregular_s"}},
                      Json{{"check", "coplanar_pairs"}}})}};

    // -- the four 2-skeletons of regular 4-apeirotopes --
    e["skel2_434"] = {
        {"mirror", "skeleton"},
        {"source", Json{{"kind", "skeleton2"}, {"apeirotope", "cubical_434"}}},
        {"expected",
         expected_json("D4", 4, "4_c", "octahedron", "aZ3", "[3,4]", nullptr, 2)}};
    // The apeir construction over the tetrahedron on (1,1,1),(1,-1,-1),
    // (-1,1,-1),(-1,-1,1) generates the diamond-type point set
    // 2L_aa0 u ((1,1,1)+2L_aa0), which has no single lattice label.
    Json diamond_parts = Json::array(
        {Json{{"label", "L_aa0"}, {"a", "2"}, {"shift", Json::array({"0", "0", "0"})}},
         Json{{"label", "L_aa0"}, {"a", "2"}, {"shift", Json::array({"1", "1", "1"})}}});
    Json skel33_expected{{"g2", "D3"},
                         {"r", 3},
                         {"face", "inf_2"},
                         {"vertex_figure", "tetrahedron"},
                         {"special_group", "[3,4]"},
                         {"flag_stabilizer", 2}};
    e["skel2_apeir_33"] = {
        {"mirror", "skeleton"},
        {"source", Json{{"kind", "apeir"}, {"q", "tetra33"}}},
        {"expected", skel33_expected},
        {"extra", Json::array({Json{{"check", "vertex_set_union"}, {"parts", diamond_parts}}})}};
    e["skel2_apeir_34"] = {
        {"mirror", "skeleton"},
        {"source", Json{{"kind", "apeir"}, {"q", "octa34"}}},
        {"expected",
         expected_json("D4", 4, "inf_2", "octahedron", "aZ3", "[3,4]", nullptr, 2)}};
    e["skel2_apeir_43"] = {
        {"mirror", "skeleton"},
        {"source", Json{{"kind", "apeir"}, {"q", "cube43"}}},
        {"expected", expected_json("D3", 3, "inf_2", "cube", "L_aaa", "[3,4]", nullptr, 2)}};

    Json order = Json::array({"K1_1_2", "K2_1_2", "K3_1_2", "K4_1_2", "K5_1_2", "K6_1_2",
                              "K7_1_2", "K8_1_2", "K1_1_1", "K2_1_1", "K3_1_1", "K4_1_1",
                              "K5_1_1", "K6_1_1", "K7_1_1", "K8_1_1", "K9_1_1", "K_0_1",
                              "K_0_2", "K_2_1", "K_2_2", "skel2_434", "skel2_apeir_33",
                              "skel2_apeir_34", "skel2_apeir_43"});
    return Json{{"schema", "rpx-catalog/1"}, {"order", order}, {"entries", e}};
}

}  // namespace rpx
