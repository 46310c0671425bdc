#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace grig {

inline constexpr const char* kDRowNotice =
    "generator d uses d(0w)=0w, d(1w)=1b(w); the row d(1w)=0b(w) would not be injective "
    "and is not used";

struct VerifyOptions {
    /// 0 keeps the default sweep depths; larger values deepen the sweeps.
    int depth = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> section;
};

struct SectionResult {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
};

struct VerifyReport {
    std::vector<SectionResult> sections;
    bool pass = true;

    /// {"notice": ..., "pass": ..., "sections": {name: {"pass": ..., ...}}}
    nlohmann::json to_json() const;
};

/// Section names in execution order.
const std::vector<std::string>& verify_section_names();

/// Runs the invariant suite. Throws PreconditionFailed on an unknown section.
VerifyReport run_verify(const VerifyOptions& options);

} // namespace grig
