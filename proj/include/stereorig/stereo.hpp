#pragma once

#include <optional>

#include "stereorig/optics.hpp"

// Stereo-pair geometry: depth error of matching and the baseline interval
// carved out by the depth-error, overlap, and disparity constraints.

namespace stereorig {

struct StereoConstraints {
    double max_depth_error_mm = 0.0;   // cap on the matching depth error
    double matching_error_px = 1.0;    // disparity uncertainty of the matcher
    double max_disparity_px = 0.0;     // search-window cap of the matcher
    double required_fov_h_mm = 0.0;    // width both cameras must jointly cover
    double z_near_mm = 0.0;
    double z_work_mm = 0.0;
    double z_far_mm = 0.0;
};

struct StereoLayout {
    double focal_px = 0.0;
    double baseline_lower_mm = 0.0;
    double baseline_upper_overlap_mm = 0.0;
    double baseline_upper_disparity_mm = 0.0;
    double baseline_chosen_mm = 0.0;
    double overlap_fraction = 0.0;
    double depth_error_work_mm = 0.0;
    double depth_error_far_mm = 0.0;
};

/// Lens focal length in pixel units: f / pixel pitch.
double focal_length_pixels(const LensSpec& lens, const CameraSpec& camera);

/// Depth error of stereo matching: z^2 * eps_disparity / (b * f_px).
/// Quadratic in z, inverse in the baseline.
double depth_error(double z_mm, double baseline_mm, double focal_px,
                   double matching_error_px);

/// Smallest baseline keeping the depth error within bounds at eval_z_mm.
/// Defaults to the far distance, where the quadratic error is worst.
double baseline_min_for_depth_error(const StereoConstraints& c, double focal_px,
                                    std::optional<double> eval_z_mm = {});

/// Largest baseline preserving the required overlap fraction w of one
/// camera's field of view at the evaluation distance: fov * (1 - w).
double baseline_max_overlap(double fov_h_at_z_mm, double overlap_fraction);

/// Largest baseline keeping disparity within the matcher's search window:
/// z * dv_max / f_px. Disparity peaks for the nearest object, so callers
/// normally evaluate at z_near.
double baseline_max_disparity(double z_eval_mm, double max_disparity_px, double focal_px);

/// Intersects the three bounds into [lower, min(uppers)] and picks the
/// midpoint rounded to the nearest millimetre. A caller-supplied as-built
/// baseline overrides the midpoint after being validated against the
/// interval. Throws InfeasibleError when the interval is empty, naming the
/// binding constraints.
StereoLayout solve_baseline(const StereoConstraints& c, const LensSpec& lens,
                            const CameraSpec& camera,
                            std::optional<double> as_built_mm = {});

}  // namespace stereorig
