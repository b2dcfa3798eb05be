#pragma once

#include "rpx/gen_ops.hpp"
#include "rpx/lattices.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rpx {

using Json = nlohmann::json;

Json isometry_to_json(const Isometry& iso);
Isometry isometry_from_json(const Json& j);
Json vec_to_json(const Vec3& v);
Vec3 vec_from_json(const Json& j);

struct ExpectedProperties {
    PointGroupLabel g2;            // kind + order (label form, e.g. D2, C3)
    int r = 0;                     // faces per edge
    FaceClass face;
    std::string vertex_figure;
    std::optional<VertexSetLabel> vertex_set;
    PointGroupLabel special_group;
    std::optional<PointGroupLabel> vf_group;
    int flag_stabilizer = 1;       // 2 for the apeirotope 2-skeletons
};

struct CatalogEntry {
    std::string name;
    std::optional<std::pair<int, int>> mirror;  // nullopt: 2-skeleton entry
    Json source;
    std::optional<ExpectedProperties> expected;
    std::vector<Json> extra;                    // named extra claims
    std::map<std::string, Isometry> g2_names;   // overrides/additions
    std::optional<Int> margin;                  // per-entry interior margin override
};

class Catalog {
  public:
    static Catalog load_default();
    static Catalog load(const std::string& path);
    static Catalog from_json(const Json& doc);
    static Json default_document();

    const std::vector<std::string>& names() const { return order_; }
    bool has(const std::string& name) const { return entries_.count(name) > 0; }
    const CatalogEntry& entry(const std::string& name) const;

    // Resolves an entry to its generator set (recursively applying
    // operations / reconstruction); memoized and safe to call concurrently.
    GeneratorSet resolve(const std::string& name);

    // Apeir construction data for entries sourced from it.
    std::optional<ApeirData> apeir_data(const std::string& name) const;

    Json to_json() const;

    // Resolves a derivation element spec against a base generator set.
    Isometry resolve_element(const GeneratorSet& base, const Json& element_spec,
                             const std::string& op) const;

  private:
    std::vector<std::string> order_;
    std::map<std::string, CatalogEntry> entries_;
    std::map<std::string, GeneratorSet> memo_;
    std::set<std::string> resolving_;
    std::unique_ptr<std::recursive_mutex> mu_ = std::make_unique<std::recursive_mutex>();

    GeneratorSet resolve_locked(const std::string& name);
};

ExpectedProperties expected_from_json(const Json& j);
ReconstructionConstraints constraints_from_json(const Json& j);
Json expected_to_json(const ExpectedProperties& e);

// Serializes a generator set as a loadable explicit catalog entry.
Json generator_set_to_entry_json(const std::string& name, const GeneratorSet& gs);

}  // namespace rpx
