#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stereorig/optics.hpp"

// Candidate enumeration and feasibility filtering over a camera/lens catalog,
// plus the mounting geometry of the surviving rig.

namespace stereorig {

struct DesignConstraints {
    TargetSpec target;
    double required_fov_h_mm = 0.0;
    double required_fov_v_mm = 0.0;
    double object_near_mm = 0.0;   // closest object distance the rig must focus
    double object_far_mm = 0.0;    // farthest object distance the rig must focus
    double ideal_working_mm = 0.0;
    double min_dynamic_range_db = 0.0;
    double max_sensor_offset_mm = 0.0;  // horizontal camera-to-nozzle cap
    double nozzle_clearance_mm = 0.0;   // nozzle tip to principal point
    std::vector<double> f_stop_policy{1.8, 2.8};
};

struct RejectionReason {
    std::string code;    // stable tag: fov_h, fov_v, working_distance, near_limit,
                         // far_limit, dynamic_range
    std::string detail;  // human-readable explanation with the offending numbers
};

struct RigEvaluation {
    CameraSpec camera;
    LensSpec lens;
    double f_stop_used = 0.0;
    double fov_h_mm = 0.0;
    double fov_v_mm = 0.0;
    double working_mm = 0.0;
    FocusEnvelope envelope;
    int pixels_near = 0;
    int pixels_work = 0;
    int pixels_far = 0;
    std::vector<RejectionReason> rejection_reasons;

    bool feasible() const { return rejection_reasons.empty(); }
};

struct SelectionResult {
    std::vector<RigEvaluation> evaluations;  // all candidates, (camera, lens) name order
    std::vector<RigEvaluation> ranked;       // feasible candidates, best first
};

struct PlacementGeometry {
    double vertical_fov_at_nozzle_mm = 0.0;
    double min_horizontal_offset_mm = 0.0;
    double max_horizontal_offset_mm = 0.0;
    double chosen_offset_mm = 0.0;
};

/// Evaluates one camera/lens pair against the constraints. Tries the f-stops
/// in policy order and keeps the first whose focus envelope brackets the
/// object range; when none does, the last stop tried is reported together
/// with the failed checks. Infeasibility is data, not an exception.
RigEvaluation evaluate_candidate(const CameraSpec& camera, const LensSpec& lens,
                                 const DesignConstraints& constraints);

/// Evaluates every camera x lens pair and ranks the feasible ones:
/// lower lens distortion first (longer focal length as the proxy when the
/// catalog carries no distortion figures), then working distance closest to
/// the ideal, then fewer total pixels, with names as the final tie-break.
/// The ordering is total, so the result is independent of catalog order.
SelectionResult select_rig(std::span<const CameraSpec> cameras,
                           std::span<const LensSpec> lenses,
                           const DesignConstraints& constraints);

/// Mounting interval for a feasible rig. The minimum lateral offset keeps the
/// nozzle outside the vertical field of view: tan(fov_v_deg / 2) * clearance,
/// truncated to whole millimetres; the maximum is the structural cap.
PlacementGeometry placement_geometry(const RigEvaluation& rig,
                                     const DesignConstraints& constraints,
                                     std::optional<double> chosen_offset_mm = {});

}  // namespace stereorig
