#include "stereorig/coverage.hpp"

#include <cmath>
#include <string>

namespace stereorig {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

void require_profile(const MotionProfile& profile) {
    require_positive(profile.velocity_mm_s, "velocity");
    require_positive(profile.frame_rate_hz, "frame rate");
    require_positive(profile.processing_time_ms, "processing time");
    if (profile.required_views < 1) {
        throw DomainError("required views must be at least 1");
    }
}

}  // namespace

double kmh_to_mm_per_s(double kmh) {
    if (kmh < 0.0) {
        throw DomainError("speed must be non-negative");
    }
    return kmh * 1000000.0 / 3600.0;
}

int frames_per_target(const MotionProfile& profile, double fov_v_mm) {
    require_profile(profile);
    require_positive(fov_v_mm, "vertical field of view");
    const double advance_per_frame = profile.velocity_mm_s / profile.frame_rate_hz;
    return static_cast<int>(std::floor(fov_v_mm / advance_per_frame));
}

double max_processing_time_ms(const MotionProfile& profile, double fov_v_mm) {
    require_profile(profile);
    require_positive(fov_v_mm, "vertical field of view");
    return (fov_v_mm / static_cast<double>(profile.required_views)) /
           profile.velocity_mm_s * 1000.0;
}

double required_fov_v(const MotionProfile& profile) {
    require_profile(profile);
    return profile.velocity_mm_s * (profile.processing_time_ms / 1000.0) *
           static_cast<double>(profile.required_views);
}

}  // namespace stereorig
