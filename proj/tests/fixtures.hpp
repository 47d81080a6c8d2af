#pragma once

#include <string>
#include <vector>

#include "stereorig/coverage.hpp"
#include "stereorig/selector.hpp"
#include "stereorig/stereo.hpp"

// Shared fixtures: the published candidate catalog and the application
// constraint set the suites evaluate against.

namespace fixtures {

inline stereorig::CameraSpec camera(const std::string& name, double w, double h, int rw,
                                    int rh, double dr) {
    stereorig::CameraSpec c;
    c.name = name;
    c.sensor_width_mm = w;
    c.sensor_height_mm = h;
    c.res_width_px = rw;
    c.res_height_px = rh;
    c.dynamic_range_db = dr;
    return c;
}

inline stereorig::CameraSpec camera1() { return camera("acA1440-220uc", 5.0, 3.7, 1440, 1080, 71); }
inline stereorig::CameraSpec camera2() { return camera("acA1920-40uc", 11.3, 7.1, 1920, 1200, 73); }
inline stereorig::CameraSpec camera3() { return camera("acA2040-55uc", 7.07, 5.3, 2048, 1536, 71); }
inline stereorig::CameraSpec camera4() { return camera("acA2440-35uc", 8.45, 7.07, 2448, 2048, 71); }
inline stereorig::CameraSpec camera5() { return camera("acA3080-57uc", 7.4, 5.0, 3088, 2064, 67); }

inline std::vector<stereorig::CameraSpec> catalog_cameras() {
    return {camera1(), camera2(), camera3(), camera4(), camera5()};
}

inline stereorig::LensSpec lens4() {
    stereorig::LensSpec l;
    l.name = "LM4HC";
    l.focal_length_mm = 4.0;
    l.min_f_stop = 1.8;
    return l;
}

inline stereorig::LensSpec lens6() {
    stereorig::LensSpec l;
    l.name = "LM6HC";
    l.focal_length_mm = 6.0;
    l.min_f_stop = 1.8;
    l.distortion_pct = -0.2;
    return l;
}

inline std::vector<stereorig::LensSpec> catalog_lenses() { return {lens4(), lens6()}; }

inline stereorig::TargetSpec target() { return {30.0, 62}; }

inline stereorig::DesignConstraints design_constraints() {
    stereorig::DesignConstraints c;
    c.target = target();
    c.required_fov_h_mm = 500.0;
    c.required_fov_v_mm = 420.0;
    c.object_near_mm = 383.0;
    c.object_far_mm = 683.0;
    c.ideal_working_mm = 508.0;
    c.min_dynamic_range_db = 65.0;
    c.max_sensor_offset_mm = 400.0;
    c.nozzle_clearance_mm = 233.0;
    c.f_stop_policy = {1.8, 2.8};
    return c;
}

inline stereorig::StereoConstraints stereo_constraints() {
    stereorig::StereoConstraints c;
    c.max_depth_error_mm = 3.0;
    c.matching_error_px = 1.0;
    c.max_disparity_px = 500.0;
    c.required_fov_h_mm = 500.0;
    c.z_near_mm = 383.0;
    c.z_work_mm = 508.0;
    c.z_far_mm = 683.0;
    return c;
}

inline stereorig::MotionProfile motion_profile() {
    stereorig::MotionProfile p;
    p.velocity_mm_s = 1400.0;
    p.frame_rate_hz = 10.0;
    p.processing_time_ms = 100.0;
    p.required_views = 3;
    return p;
}

inline std::string data_dir() { return STEREORIG_DATA_DIR; }

}  // namespace fixtures
