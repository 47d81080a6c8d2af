#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stereorig/coverage.hpp"
#include "stereorig/exposure.hpp"
#include "stereorig/selector.hpp"
#include "stereorig/stereo.hpp"

// Run configuration: one JSON document holding the design envelope, stereo
// constraints, motion profile, and saturation policy. Every physical
// quantity carries its unit suffix in the key name.

namespace stereorig {

struct RunConfig {
    DesignConstraints design;
    StereoConstraints stereo;
    MotionProfile motion;
    SaturationPolicy saturation;
    std::optional<double> as_built_baseline_mm;
    std::optional<double> chosen_offset_mm;
};

struct LoadedConfig {
    RunConfig config;
    std::string config_hash;  // FNV-1a of the file bytes, for the report footer
};

RunConfig parse_run_config(const nlohmann::json& doc, const std::string& source_name);
LoadedConfig load_run_config(const std::filesystem::path& path);
void validate_run_config(const RunConfig& config);

/// 64-bit FNV-1a, lower-case hex. Stable across platforms and runs.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace stereorig
