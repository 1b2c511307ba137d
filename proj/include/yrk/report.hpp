#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace yrk {

/// One verified identity: which check, which identity string it pins down,
/// where it was sampled, and how far off it was.
struct CheckResult {
    std::string id;
    std::string anchor;      // the identity being verified, in formula form
    std::string samples;     // human-readable sample points
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::string input_hash;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    std::vector<CheckResult> checks;

    void add(std::string id, std::string anchor, std::string samples, double residual, double tol) {
        checks.push_back({std::move(id), std::move(anchor), std::move(samples), residual, tol,
                          residual <= tol});
    }
    void add_flag(std::string id, std::string anchor, std::string samples, bool ok) {
        checks.push_back({std::move(id), std::move(anchor), std::move(samples), ok ? 0.0 : 1.0,
                          0.5, ok});
    }
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double max_residual() const {
        double r = 0;
        for (auto& c : checks) r = std::max(r, c.residual);
        return r;
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (auto c : other.checks) {
            if (!prefix.empty()) c.id = prefix + "." + c.id;
            checks.push_back(std::move(c));
        }
    }
    std::string to_json_text(int indent = 2) const;
};

/// Content hash used to stamp reports (stable across runs for equal inputs).
std::string content_hash(const std::string& data);

} // namespace yrk
