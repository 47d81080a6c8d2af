#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "stereorig/errors.hpp"

// Pinhole-model optics. All lengths are millimetres, angles degrees,
// stored as plain doubles; unit suffixes in the names carry the convention.

namespace stereorig {

struct CameraSpec {
    std::string name;
    double sensor_width_mm = 0.0;
    double sensor_height_mm = 0.0;
    int res_width_px = 0;
    int res_height_px = 0;
    std::optional<double> dynamic_range_db;
    std::optional<std::string> interface;

    double sensor_diagonal_mm() const {
        return std::hypot(sensor_width_mm, sensor_height_mm);
    }
    double pixel_pitch_mm() const {
        return sensor_width_mm / static_cast<double>(res_width_px);
    }
};

struct LensSpec {
    std::string name;
    double focal_length_mm = 0.0;
    double min_f_stop = 0.0;
    std::optional<double> distortion_pct;
    std::optional<std::string> format;
};

/// The object of interest and how many pixels the detector needs on it.
struct TargetSpec {
    double target_size_mm = 0.0;
    int min_pixels_px = 0;
};

/// Focus bracket around a working distance. far_mm is +infinity when the
/// working distance reaches the hyperfocal regime.
struct FocusEnvelope {
    double hyperfocal_mm = 0.0;
    double near_mm = 0.0;
    double working_mm = 0.0;
    double far_mm = 0.0;
    double dof_mm = 0.0;
    double coc_mm = 0.0;  // filled by callers that know the aperture chain

    bool far_unbounded() const { return std::isinf(far_mm); }
};

/// Scene extent covered by res_px pixels when the target must span at least
/// min_pixels_px of them: fov = res * size / np.
double fov_from_resolution(int res_px, const TargetSpec& target);

/// Inverse of fov_from_resolution, rounded up so the requirement is met.
int required_resolution(double fov_mm, const TargetSpec& target);

/// Distance at which the sensor images exactly fov_h_mm: d = fov * f / s.
double working_distance(double fov_h_mm, const LensSpec& lens, const CameraSpec& camera);

/// Scene extent imaged by one sensor dimension at distance z: fov = z * s / f.
double fov_at_distance(double z_mm, const LensSpec& lens, double sensor_dim_mm);

/// Pixels across the target when the frame spans fov_mm, rounded down.
int pixels_on_target(const CameraSpec& camera, const TargetSpec& target, double fov_mm);

/// Zeiss rule: sensor diagonal / 1730.
double circle_of_confusion(const CameraSpec& camera);

/// H = f^2 / (f_stop * coc).
double hyperfocal(const LensSpec& lens, double f_stop, double coc_mm);

/// Near/far focus limits around working_mm for a given hyperfocal distance:
/// N = H d / (H + d - f), F = H d / (H - d + f). A non-positive far
/// denominator means the far limit extends to infinity, which is reported,
/// not thrown.
FocusEnvelope dof_limits(double hyperfocal_mm, double working_mm, const LensSpec& lens);

/// Full chain coc -> hyperfocal -> dof_limits for one camera/lens/f-stop.
FocusEnvelope focus_envelope(const CameraSpec& camera, const LensSpec& lens,
                             double f_stop, double working_mm);

/// Full angle subtended by one sensor dimension: 2 atan(s / 2f), degrees.
double angular_fov(double sensor_dim_mm, const LensSpec& lens);

/// Half-extent of a field of view at a distance: tan(fov_deg / 2) * dist.
double half_fov_extent(double fov_deg, double distance_mm);

}  // namespace stereorig
