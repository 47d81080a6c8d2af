#include "stereorig/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stereorig {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& message) {
    throw ParseError(source + ": " + message);
}

const json& section(const json& doc, const char* key, const std::string& source) {
    if (!doc.contains(key)) fail(source, std::string("missing section '") + key + "'");
    if (!doc.at(key).is_object()) fail(source, std::string("section '") + key + "' must be an object");
    return doc.at(key);
}

double number_at(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key)) throw ParseError(ctx + "." + key + " is missing");
    const json& v = obj.at(key);
    if (!v.is_number()) throw ParseError(ctx + "." + key + " must be a number");
    return v.get<double>();
}

int int_at(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key)) throw ParseError(ctx + "." + key + " is missing");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(ctx + "." + key + " must be an integer");
    return v.get<int>();
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj.at(key).is_number()) throw ParseError(ctx + "." + key + " must be a number");
    return obj.at(key).get<double>();
}

}  // namespace

RunConfig parse_run_config(const json& doc, const std::string& source_name) {
    if (!doc.is_object()) fail(source_name, "config root must be an object");
    RunConfig config;

    const json& target = section(doc, "target", source_name);
    config.design.target.target_size_mm = number_at(target, "target_size_mm", "target");
    config.design.target.min_pixels_px = int_at(target, "min_pixels_px", "target");

    const json& design = section(doc, "design", source_name);
    config.design.required_fov_h_mm = number_at(design, "required_fov_h_mm", "design");
    config.design.required_fov_v_mm = number_at(design, "required_fov_v_mm", "design");
    if (!design.contains("object_range_mm") || !design.at("object_range_mm").is_array() ||
        design.at("object_range_mm").size() != 2) {
        fail(source_name, "design.object_range_mm must be a [near, far] pair");
    }
    config.design.object_near_mm = design.at("object_range_mm").at(0).get<double>();
    config.design.object_far_mm = design.at("object_range_mm").at(1).get<double>();
    config.design.ideal_working_mm = number_at(design, "ideal_working_mm", "design");
    config.design.min_dynamic_range_db = number_at(design, "min_dynamic_range_db", "design");
    config.design.max_sensor_offset_mm = number_at(design, "max_sensor_offset_mm", "design");
    config.design.nozzle_clearance_mm = number_at(design, "nozzle_clearance_mm", "design");
    if (design.contains("f_stop_policy")) {
        if (!design.at("f_stop_policy").is_array()) {
            fail(source_name, "design.f_stop_policy must be an array of stops");
        }
        config.design.f_stop_policy.clear();
        for (const json& stop : design.at("f_stop_policy")) {
            if (!stop.is_number()) fail(source_name, "design.f_stop_policy entries must be numbers");
            config.design.f_stop_policy.push_back(stop.get<double>());
        }
    }
    config.chosen_offset_mm = optional_number(design, "chosen_offset_mm", "design");

    const json& stereo = section(doc, "stereo", source_name);
    config.stereo.max_depth_error_mm = number_at(stereo, "max_depth_error_mm", "stereo");
    config.stereo.matching_error_px = number_at(stereo, "matching_error_px", "stereo");
    config.stereo.max_disparity_px = number_at(stereo, "max_disparity_px", "stereo");
    config.stereo.required_fov_h_mm = number_at(stereo, "required_fov_h_mm", "stereo");
    config.stereo.z_near_mm = number_at(stereo, "z_near_mm", "stereo");
    config.stereo.z_work_mm = number_at(stereo, "z_work_mm", "stereo");
    config.stereo.z_far_mm = number_at(stereo, "z_far_mm", "stereo");
    config.as_built_baseline_mm = optional_number(stereo, "as_built_baseline_mm", "stereo");

    const json& motion = section(doc, "motion", source_name);
    config.motion.velocity_mm_s = number_at(motion, "velocity_mm_s", "motion");
    config.motion.frame_rate_hz = number_at(motion, "frame_rate_hz", "motion");
    config.motion.processing_time_ms = number_at(motion, "processing_time_ms", "motion");
    config.motion.required_views = int_at(motion, "required_views", "motion");

    if (doc.contains("saturation")) {
        const json& saturation = section(doc, "saturation", source_name);
        if (saturation.contains("channel_threshold")) {
            config.saturation.channel_threshold =
                int_at(saturation, "channel_threshold", "saturation");
        }
        if (saturation.contains("mode")) {
            const std::string mode = saturation.at("mode").get<std::string>();
            if (mode == "all_channels") {
                config.saturation.mode = SaturationPolicy::Mode::all_channels;
            } else if (mode == "blue_biased") {
                config.saturation.mode = SaturationPolicy::Mode::blue_biased;
            } else {
                fail(source_name, "saturation.mode must be 'all_channels' or 'blue_biased'");
            }
        }
    }

    validate_run_config(config);
    return config;
}

LoadedConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.filename().string() + ": " + e.what());
    }
    LoadedConfig loaded;
    loaded.config = parse_run_config(doc, path.filename().string());
    loaded.config_hash = fnv1a_hex(text);
    return loaded;
}

void validate_run_config(const RunConfig& config) {
    auto require = [](bool ok, const char* message) {
        if (!ok) throw ValidationError(message);
    };

    require(config.design.target.target_size_mm > 0.0, "target.target_size_mm must be positive");
    require(config.design.target.min_pixels_px > 0, "target.min_pixels_px must be positive");
    require(config.design.required_fov_h_mm > 0.0, "design.required_fov_h_mm must be positive");
    require(config.design.required_fov_v_mm > 0.0, "design.required_fov_v_mm must be positive");
    require(config.design.object_near_mm > 0.0 &&
                config.design.object_near_mm <= config.design.object_far_mm,
            "design.object_range_mm must be a non-empty positive interval");
    require(config.design.ideal_working_mm >= config.design.object_near_mm &&
                config.design.ideal_working_mm <= config.design.object_far_mm,
            "design.ideal_working_mm must lie inside the object range");
    require(config.design.min_dynamic_range_db >= 0.0,
            "design.min_dynamic_range_db must be non-negative");
    require(config.design.max_sensor_offset_mm >= 0.0,
            "design.max_sensor_offset_mm must be non-negative");
    require(config.design.nozzle_clearance_mm >= 0.0,
            "design.nozzle_clearance_mm must be non-negative");
    require(!config.design.f_stop_policy.empty(), "design.f_stop_policy must not be empty");
    for (double stop : config.design.f_stop_policy) {
        require(stop > 0.0, "design.f_stop_policy stops must be positive");
    }
    if (config.chosen_offset_mm) {
        require(*config.chosen_offset_mm >= 0.0, "design.chosen_offset_mm must be non-negative");
    }

    require(config.stereo.max_depth_error_mm > 0.0, "stereo.max_depth_error_mm must be positive");
    require(config.stereo.matching_error_px >= 0.0,
            "stereo.matching_error_px must be non-negative");
    require(config.stereo.max_disparity_px > 0.0, "stereo.max_disparity_px must be positive");
    require(config.stereo.required_fov_h_mm > 0.0, "stereo.required_fov_h_mm must be positive");
    require(config.stereo.z_near_mm > 0.0 && config.stereo.z_near_mm <= config.stereo.z_work_mm &&
                config.stereo.z_work_mm <= config.stereo.z_far_mm,
            "stereo distances must satisfy 0 < z_near <= z_work <= z_far");
    if (config.as_built_baseline_mm) {
        require(*config.as_built_baseline_mm > 0.0, "stereo.as_built_baseline_mm must be positive");
    }

    require(config.motion.velocity_mm_s > 0.0, "motion.velocity_mm_s must be positive");
    require(config.motion.frame_rate_hz > 0.0, "motion.frame_rate_hz must be positive");
    require(config.motion.processing_time_ms > 0.0, "motion.processing_time_ms must be positive");
    require(config.motion.required_views >= 1, "motion.required_views must be at least 1");

    require(config.saturation.channel_threshold >= 1 && config.saturation.channel_threshold <= 255,
            "saturation.channel_threshold must lie in [1, 255]");
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace stereorig
