#include "stereorig/stereo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stereorig {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

void require_ordered_range(const StereoConstraints& c) {
    if (!(c.z_near_mm > 0.0 && c.z_near_mm <= c.z_work_mm && c.z_work_mm <= c.z_far_mm)) {
        throw ValidationError("object distances must satisfy 0 < z_near <= z_work <= z_far");
    }
}

}  // namespace

double focal_length_pixels(const LensSpec& lens, const CameraSpec& camera) {
    require_positive(lens.focal_length_mm, "focal length");
    require_positive(camera.sensor_width_mm, "sensor width");
    if (camera.res_width_px <= 0) {
        throw DomainError("camera resolution must be positive");
    }
    return lens.focal_length_mm * static_cast<double>(camera.res_width_px) /
           camera.sensor_width_mm;
}

double depth_error(double z_mm, double baseline_mm, double focal_px,
                   double matching_error_px) {
    require_positive(z_mm, "distance");
    require_positive(baseline_mm, "baseline");
    require_positive(focal_px, "focal length in pixels");
    if (matching_error_px < 0.0) {
        throw DomainError("matching error must be non-negative");
    }
    return z_mm * z_mm * matching_error_px / (baseline_mm * focal_px);
}

double baseline_min_for_depth_error(const StereoConstraints& c, double focal_px,
                                    std::optional<double> eval_z_mm) {
    require_positive(c.max_depth_error_mm, "depth-error bound");
    require_positive(focal_px, "focal length in pixels");
    const double z = eval_z_mm.value_or(c.z_far_mm);
    require_positive(z, "evaluation distance");
    if (c.matching_error_px < 0.0) {
        throw DomainError("matching error must be non-negative");
    }
    return z * z * c.matching_error_px / (focal_px * c.max_depth_error_mm);
}

double baseline_max_overlap(double fov_h_at_z_mm, double overlap_fraction) {
    require_positive(fov_h_at_z_mm, "field of view");
    if (!(overlap_fraction > 0.0)) {
        throw DomainError("overlap fraction must be positive");
    }
    if (overlap_fraction >= 1.0) {
        throw InfeasibleError(
            "required coverage meets or exceeds a single camera's field of view "
            "(overlap fraction >= 1); no lateral offset remains for a baseline");
    }
    return fov_h_at_z_mm * (1.0 - overlap_fraction);
}

double baseline_max_disparity(double z_eval_mm, double max_disparity_px, double focal_px) {
    require_positive(z_eval_mm, "evaluation distance");
    require_positive(focal_px, "focal length in pixels");
    if (max_disparity_px < 0.0) {
        throw DomainError("maximum disparity must be non-negative");
    }
    return z_eval_mm * max_disparity_px / focal_px;
}

StereoLayout solve_baseline(const StereoConstraints& c, const LensSpec& lens,
                            const CameraSpec& camera,
                            std::optional<double> as_built_mm) {
    require_ordered_range(c);
    require_positive(c.required_fov_h_mm, "required field of view");

    StereoLayout layout;
    layout.focal_px = focal_length_pixels(lens, camera);
    layout.baseline_lower_mm = baseline_min_for_depth_error(c, layout.focal_px);

    const double fov_work = fov_at_distance(c.z_work_mm, lens, camera.sensor_width_mm);
    layout.overlap_fraction = c.required_fov_h_mm / fov_work;
    layout.baseline_upper_overlap_mm = baseline_max_overlap(fov_work, layout.overlap_fraction);
    layout.baseline_upper_disparity_mm =
        baseline_max_disparity(c.z_near_mm, c.max_disparity_px, layout.focal_px);

    const double upper =
        std::min(layout.baseline_upper_overlap_mm, layout.baseline_upper_disparity_mm);
    if (upper < layout.baseline_lower_mm) {
        std::ostringstream msg;
        msg << "baseline interval is empty: depth-error lower bound "
            << layout.baseline_lower_mm << " mm exceeds upper bound " << upper << " mm ("
            << (layout.baseline_upper_disparity_mm <= layout.baseline_upper_overlap_mm
                    ? "disparity limit binding"
                    : "overlap requirement binding")
            << ")";
        throw InfeasibleError(msg.str());
    }

    layout.baseline_chosen_mm = std::round((layout.baseline_lower_mm + upper) / 2.0);
    if (as_built_mm) {
        if (*as_built_mm < layout.baseline_lower_mm || *as_built_mm > upper) {
            std::ostringstream msg;
            msg << "as-built baseline " << *as_built_mm << " mm falls outside the feasible interval ["
                << layout.baseline_lower_mm << ", " << upper << "] mm";
            throw ValidationError(msg.str());
        }
        layout.baseline_chosen_mm = *as_built_mm;
    }

    layout.depth_error_work_mm = depth_error(c.z_work_mm, layout.baseline_chosen_mm,
                                             layout.focal_px, c.matching_error_px);
    layout.depth_error_far_mm = depth_error(c.z_far_mm, layout.baseline_chosen_mm,
                                            layout.focal_px, c.matching_error_px);
    return layout;
}

}  // namespace stereorig
