#include "stereorig/optics.hpp"

#include <cmath>
#include <limits>

namespace stereorig {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double value, const char* what) {
    if (!(value > 0.0)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

void require_target(const TargetSpec& target) {
    require_positive(target.target_size_mm, "target size");
    if (target.min_pixels_px <= 0) {
        throw DomainError("minimum pixels on target must be positive");
    }
}

}  // namespace

double fov_from_resolution(int res_px, const TargetSpec& target) {
    if (res_px <= 0) {
        throw DomainError("resolution must be positive");
    }
    require_target(target);
    return static_cast<double>(res_px) * target.target_size_mm /
           static_cast<double>(target.min_pixels_px);
}

int required_resolution(double fov_mm, const TargetSpec& target) {
    require_positive(fov_mm, "field of view");
    require_target(target);
    return static_cast<int>(
        std::ceil(fov_mm * static_cast<double>(target.min_pixels_px) / target.target_size_mm));
}

double working_distance(double fov_h_mm, const LensSpec& lens, const CameraSpec& camera) {
    require_positive(fov_h_mm, "field of view");
    require_positive(lens.focal_length_mm, "focal length");
    require_positive(camera.sensor_width_mm, "sensor width");
    return fov_h_mm * lens.focal_length_mm / camera.sensor_width_mm;
}

double fov_at_distance(double z_mm, const LensSpec& lens, double sensor_dim_mm) {
    require_positive(z_mm, "distance");
    require_positive(lens.focal_length_mm, "focal length");
    require_positive(sensor_dim_mm, "sensor dimension");
    return z_mm * sensor_dim_mm / lens.focal_length_mm;
}

int pixels_on_target(const CameraSpec& camera, const TargetSpec& target, double fov_mm) {
    require_positive(fov_mm, "field of view");
    require_target(target);
    if (camera.res_width_px <= 0) {
        throw DomainError("camera resolution must be positive");
    }
    return static_cast<int>(std::floor(
        static_cast<double>(camera.res_width_px) * target.target_size_mm / fov_mm));
}

double circle_of_confusion(const CameraSpec& camera) {
    const double diagonal = camera.sensor_diagonal_mm();
    require_positive(diagonal, "sensor diagonal");
    return diagonal / 1730.0;
}

double hyperfocal(const LensSpec& lens, double f_stop, double coc_mm) {
    require_positive(lens.focal_length_mm, "focal length");
    require_positive(f_stop, "f-stop");
    require_positive(coc_mm, "circle of confusion");
    return lens.focal_length_mm * lens.focal_length_mm / (f_stop * coc_mm);
}

FocusEnvelope dof_limits(double hyperfocal_mm, double working_mm, const LensSpec& lens) {
    require_positive(hyperfocal_mm, "hyperfocal distance");
    require_positive(working_mm, "working distance");
    require_positive(lens.focal_length_mm, "focal length");

    const double f = lens.focal_length_mm;
    const double near_den = hyperfocal_mm + working_mm - f;
    if (!(near_den > 0.0)) {
        throw DomainError("near-limit denominator H + d - f must be positive");
    }

    FocusEnvelope env;
    env.hyperfocal_mm = hyperfocal_mm;
    env.working_mm = working_mm;
    env.near_mm = hyperfocal_mm * working_mm / near_den;

    const double far_den = hyperfocal_mm - working_mm + f;
    if (far_den > 0.0) {
        env.far_mm = hyperfocal_mm * working_mm / far_den;
    } else {
        // Focused at or beyond the hyperfocal distance: sharpness extends to
        // infinity. Valid optics, so reported rather than thrown.
        env.far_mm = std::numeric_limits<double>::infinity();
    }
    env.dof_mm = env.far_mm - env.near_mm;
    return env;
}

FocusEnvelope focus_envelope(const CameraSpec& camera, const LensSpec& lens,
                             double f_stop, double working_mm) {
    const double coc = circle_of_confusion(camera);
    FocusEnvelope env = dof_limits(hyperfocal(lens, f_stop, coc), working_mm, lens);
    env.coc_mm = coc;
    return env;
}

double angular_fov(double sensor_dim_mm, const LensSpec& lens) {
    require_positive(sensor_dim_mm, "sensor dimension");
    require_positive(lens.focal_length_mm, "focal length");
    return 2.0 * std::atan(sensor_dim_mm / (2.0 * lens.focal_length_mm)) * 180.0 / kPi;
}

double half_fov_extent(double fov_deg, double distance_mm) {
    if (fov_deg < 0.0 || fov_deg >= 180.0) {
        throw DomainError("field-of-view angle must lie in [0, 180)");
    }
    if (distance_mm < 0.0) {
        throw DomainError("distance must be non-negative");
    }
    return std::tan(fov_deg / 2.0 * kPi / 180.0) * distance_mm;
}

}  // namespace stereorig
