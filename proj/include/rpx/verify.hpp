#pragma once

#include "rpx/catalog.hpp"
#include "rpx/oracles.hpp"

#include <string>
#include <vector>

namespace rpx {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // witness on failure, reason on skip
};

struct Report {
    std::string entry;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;
    IBox box;
    Int margin = 2;
    std::string error;  // nonempty when resolution/build failed outright

    bool ok() const;
    int failed() const;
};

struct VerifyOptions {
    Int margin = 2;
    bool fail_fast = false;
};

Report verify_entry(Catalog& cat, const std::string& name, const IBox& box,
                    const VerifyOptions& opts = {});

// True when the inner region's interior vertices, edges and faces are all
// contained in the outer region's. Boxes must agree.
bool check_subcomplex(const ComplexRegion& inner, const ComplexRegion& outer,
                      std::string* witness = nullptr);

bool regions_equal(const ComplexRegion& a, const ComplexRegion& b, std::string* witness = nullptr);

std::string report_to_text(const Report& r);
Json report_to_json(const Report& r);

}  // namespace rpx
