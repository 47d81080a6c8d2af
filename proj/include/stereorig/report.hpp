#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stereorig/catalog.hpp"
#include "stereorig/config.hpp"
#include "stereorig/exposure.hpp"
#include "stereorig/selector.hpp"
#include "stereorig/stereo.hpp"

// End-to-end design run and report rendering. Reports come in two shapes:
// human-readable tables and a structured JSON document whose rendering is
// idempotent (parse + re-render reproduces the bytes).

namespace stereorig {

struct FovMatrixRow {
    std::string plane;  // "near", "work", "far"
    double distance_mm = 0.0;
    double fov_h_mm = 0.0;
    double fov_v_mm = 0.0;
    int pixels_on_target = 0;
};

struct CoverageRow {
    double velocity_kmh = 0.0;
    double velocity_mm_s = 0.0;
    int frames = 0;
};

struct Provenance {
    std::string tool;
    std::string version;
    std::string config_hash;
};

struct DesignReport {
    bool feasible = false;
    SelectionResult selection;
    std::optional<StereoLayout> stereo;
    std::optional<PlacementGeometry> placement;
    std::vector<FovMatrixRow> fov_matrix;   // selected rig at near/work/far
    std::vector<CoverageRow> coverage;      // velocity sweep at the near plane
    double coverage_fov_v_mm = 0.0;
    double processing_budget_ms = 0.0;      // at the working-distance FoV(V)
    Provenance provenance;
};

/// Default velocity sweep for coverage tables, km/h.
const std::vector<double>& default_velocity_sweep_kmh();

/// Field-of-view matrix for one evaluated rig at its near/work/far planes.
/// FoV(H) scales with distance through the pinhole ratio; FoV(V) follows the
/// resolution aspect so the pixels-on-target count is direction-independent.
std::vector<FovMatrixRow> fov_matrix_for(const RigEvaluation& rig, const TargetSpec& target);

/// Full design pipeline: selection, stereo layout and placement for the top
/// rig, field-of-view matrix, and a coverage sweep. Infeasible selection is
/// reported in the result, not thrown.
DesignReport run_design(const CatalogFile& catalog, const RunConfig& config,
                        const std::string& config_hash);

nlohmann::json design_report_to_json(const DesignReport& report);
std::string render_design_text(const DesignReport& report);

nlohmann::json envelope_to_json(const RigEvaluation& rig, const TargetSpec& target,
                                const Provenance& provenance);
std::string render_envelope_text(const RigEvaluation& rig, const TargetSpec& target,
                                 const Provenance& provenance);

nlohmann::json layout_to_json(const StereoLayout& layout, const Provenance& provenance);
std::string render_layout_text(const StereoLayout& layout, const Provenance& provenance);

nlohmann::json coverage_to_json(const std::vector<CoverageRow>& rows, double fov_v_mm,
                                double budget_ms, const Provenance& provenance);
std::string render_coverage_text(const std::vector<CoverageRow>& rows, double fov_v_mm,
                                 double budget_ms, const Provenance& provenance);

nlohmann::json audit_to_json(const DatasetReport& report,
                             const std::vector<std::string>& warnings,
                             const Provenance& provenance);
std::string render_audit_text(const DatasetReport& report,
                              const std::vector<std::string>& warnings,
                              const Provenance& provenance);

Provenance make_provenance(const std::string& config_hash);

}  // namespace stereorig
