#include "stereorig/selector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace stereorig {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void check_constraints(const DesignConstraints& c) {
    if (!(c.object_near_mm > 0.0 && c.object_near_mm <= c.object_far_mm)) {
        throw ValidationError("object distance range must be non-empty and positive");
    }
    if (c.ideal_working_mm < c.object_near_mm || c.ideal_working_mm > c.object_far_mm) {
        throw ValidationError("ideal working distance must lie inside the object range");
    }
    if (c.f_stop_policy.empty()) {
        throw ValidationError("f-stop policy must list at least one stop");
    }
}

int pixels_at(const CameraSpec& camera, const TargetSpec& target, const LensSpec& lens,
              double z_mm) {
    if (std::isinf(z_mm)) {
        return 0;  // infinitely far: the target vanishes
    }
    return pixels_on_target(camera, target,
                            fov_at_distance(z_mm, lens, camera.sensor_width_mm));
}

// Ranking key for the distortion preference. Catalog distortion figures win
// over the focal-length proxy, but only when every ranked lens carries one;
// mixing the two scales would make the comparison non-transitive.
double distortion_rank(const LensSpec& lens, bool use_catalog_distortion) {
    if (use_catalog_distortion) {
        return std::abs(*lens.distortion_pct);
    }
    return -lens.focal_length_mm;  // longer focal length ranks first
}

}  // namespace

RigEvaluation evaluate_candidate(const CameraSpec& camera, const LensSpec& lens,
                                 const DesignConstraints& constraints) {
    check_constraints(constraints);

    RigEvaluation eval;
    eval.camera = camera;
    eval.lens = lens;
    eval.fov_h_mm = fov_from_resolution(camera.res_width_px, constraints.target);
    eval.fov_v_mm = fov_from_resolution(camera.res_height_px, constraints.target);
    eval.working_mm = working_distance(eval.fov_h_mm, lens, camera);

    const double z_min = constraints.object_near_mm;
    const double z_max = constraints.object_far_mm;

    // First policy stop whose envelope brackets the object range wins; when
    // none does, the reasons below refer to the last stop tried.
    for (double stop : constraints.f_stop_policy) {
        eval.f_stop_used = stop;
        eval.envelope = focus_envelope(camera, lens, stop, eval.working_mm);
        if (eval.envelope.near_mm <= z_min && eval.envelope.far_mm >= z_max) {
            break;
        }
    }

    eval.pixels_near = pixels_at(camera, constraints.target, lens, eval.envelope.near_mm);
    eval.pixels_work = pixels_at(camera, constraints.target, lens, eval.working_mm);
    eval.pixels_far = pixels_at(camera, constraints.target, lens, eval.envelope.far_mm);

    auto reject = [&eval](std::string code, std::string detail) {
        eval.rejection_reasons.push_back({std::move(code), std::move(detail)});
    };

    if (eval.fov_h_mm < constraints.required_fov_h_mm) {
        reject("fov_h", "horizontal FoV " + fmt(eval.fov_h_mm) + " mm covers less than the required " +
                            fmt(constraints.required_fov_h_mm) + " mm");
    }
    if (eval.fov_v_mm < constraints.required_fov_v_mm) {
        reject("fov_v", "vertical FoV " + fmt(eval.fov_v_mm) + " mm covers less than the required " +
                            fmt(constraints.required_fov_v_mm) + " mm");
    }
    if (eval.working_mm < z_min || eval.working_mm > z_max) {
        reject("working_distance", "working distance " + fmt(eval.working_mm) +
                                       " mm falls outside the object range [" + fmt(z_min) +
                                       ", " + fmt(z_max) + "] mm");
    }
    if (eval.envelope.near_mm > z_min) {
        reject("near_limit", "focus near limit " + fmt(eval.envelope.near_mm) +
                                 " mm lies beyond the closest object at " + fmt(z_min) + " mm");
    }
    if (eval.envelope.far_mm < z_max) {
        reject("far_limit", "focus far limit " + fmt(eval.envelope.far_mm) +
                                " mm falls short of the farthest object at " + fmt(z_max) + " mm");
    }
    if (constraints.min_dynamic_range_db > 0.0 && camera.dynamic_range_db &&
        *camera.dynamic_range_db < constraints.min_dynamic_range_db) {
        reject("dynamic_range", "dynamic range " + fmt(*camera.dynamic_range_db) +
                                    " dB is below the required " +
                                    fmt(constraints.min_dynamic_range_db) + " dB");
    }
    return eval;
}

SelectionResult select_rig(std::span<const CameraSpec> cameras,
                           std::span<const LensSpec> lenses,
                           const DesignConstraints& constraints) {
    if (cameras.empty() || lenses.empty()) {
        throw ValidationError("camera and lens catalogs must be non-empty");
    }

    SelectionResult result;
    result.evaluations.reserve(cameras.size() * lenses.size());
    for (const CameraSpec& camera : cameras) {
        for (const LensSpec& lens : lenses) {
            result.evaluations.push_back(evaluate_candidate(camera, lens, constraints));
        }
    }

    auto by_name = [](const RigEvaluation& a, const RigEvaluation& b) {
        return std::tie(a.camera.name, a.lens.name) < std::tie(b.camera.name, b.lens.name);
    };
    std::sort(result.evaluations.begin(), result.evaluations.end(), by_name);

    std::copy_if(result.evaluations.begin(), result.evaluations.end(),
                 std::back_inserter(result.ranked),
                 [](const RigEvaluation& e) { return e.feasible(); });

    const bool use_catalog_distortion =
        !result.ranked.empty() &&
        std::all_of(result.ranked.begin(), result.ranked.end(),
                    [](const RigEvaluation& e) { return e.lens.distortion_pct.has_value(); });

    std::sort(result.ranked.begin(), result.ranked.end(),
              [&](const RigEvaluation& a, const RigEvaluation& b) {
                  const auto key = [&](const RigEvaluation& e) {
                      return std::make_tuple(
                          distortion_rank(e.lens, use_catalog_distortion),
                          std::abs(e.working_mm - constraints.ideal_working_mm),
                          static_cast<long long>(e.camera.res_width_px) * e.camera.res_height_px,
                          std::cref(e.camera.name), std::cref(e.lens.name));
                  };
                  return key(a) < key(b);
              });
    return result;
}

PlacementGeometry placement_geometry(const RigEvaluation& rig,
                                     const DesignConstraints& constraints,
                                     std::optional<double> chosen_offset_mm) {
    if (!rig.feasible()) {
        throw ValidationError("placement geometry requires a feasible rig");
    }

    PlacementGeometry geo;
    const double fov_v_deg = angular_fov(rig.camera.sensor_height_mm, rig.lens);
    geo.vertical_fov_at_nozzle_mm =
        half_fov_extent(fov_v_deg, constraints.nozzle_clearance_mm);
    geo.min_horizontal_offset_mm = std::floor(geo.vertical_fov_at_nozzle_mm);
    geo.max_horizontal_offset_mm = constraints.max_sensor_offset_mm;
    if (geo.min_horizontal_offset_mm > geo.max_horizontal_offset_mm) {
        throw InfeasibleError("vertical field of view at the nozzle exceeds the maximum "
                              "allowed sensor offset; the nozzle cannot be kept out of view");
    }

    geo.chosen_offset_mm = chosen_offset_mm.value_or(geo.min_horizontal_offset_mm);
    if (geo.chosen_offset_mm < geo.min_horizontal_offset_mm ||
        geo.chosen_offset_mm > geo.max_horizontal_offset_mm) {
        std::ostringstream msg;
        msg << "chosen offset " << geo.chosen_offset_mm << " mm falls outside ["
            << geo.min_horizontal_offset_mm << ", " << geo.max_horizontal_offset_mm << "] mm";
        throw ValidationError(msg.str());
    }
    return geo;
}

}  // namespace stereorig
