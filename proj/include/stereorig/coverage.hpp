#pragma once

#include "stereorig/errors.hpp"

// Motion-coverage arithmetic: how often a moving rig images a fixed target
// and how much processing time each frame leaves.

namespace stereorig {

struct MotionProfile {
    double velocity_mm_s = 0.0;
    double frame_rate_hz = 0.0;
    double processing_time_ms = 0.0;
    int required_views = 3;
};

/// km/h to mm/s with the exact factor 1000000/3600.
double kmh_to_mm_per_s(double kmh);

/// Number of frames that see a target while the rig traverses fov_v_mm,
/// floored for a worst-case guarantee. Callers normally pass the
/// near-distance vertical field of view, where coverage is tightest.
int frames_per_target(const MotionProfile& profile, double fov_v_mm);

/// Per-image processing budget so that required_views frames of the target
/// are processed before it leaves the view: (fov_v / views) / velocity, ms.
double max_processing_time_ms(const MotionProfile& profile, double fov_v_mm);

/// Vertical field of view needed to capture required_views frames at the
/// profile's speed and processing time: v * t * views.
double required_fov_v(const MotionProfile& profile);

}  // namespace stereorig
