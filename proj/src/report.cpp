#include "stereorig/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

#include "stereorig/coverage.hpp"
#include "stereorig/version.hpp"

namespace stereorig {

namespace {

using nlohmann::json;

std::string fixed(double value, int precision) {
    if (std::isinf(value)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

json number_or_null(double value) {
    // JSON has no infinity; an unbounded limit renders as null
    if (std::isinf(value) || std::isnan(value)) return nullptr;
    return value;
}

json envelope_json(const FocusEnvelope& env) {
    return json{{"coc_mm", env.coc_mm},
                {"hyperfocal_mm", env.hyperfocal_mm},
                {"near_mm", env.near_mm},
                {"working_mm", env.working_mm},
                {"far_mm", number_or_null(env.far_mm)},
                {"far_unbounded", env.far_unbounded()},
                {"dof_mm", number_or_null(env.dof_mm)}};
}

json candidate_json(const RigEvaluation& e) {
    json reasons = json::array();
    for (const RejectionReason& r : e.rejection_reasons) {
        reasons.push_back({{"code", r.code}, {"detail", r.detail}});
    }
    return json{{"camera", e.camera.name},
                {"lens", e.lens.name},
                {"f_stop_used", e.f_stop_used},
                {"fov_h_mm", e.fov_h_mm},
                {"fov_v_mm", e.fov_v_mm},
                {"working_mm", e.working_mm},
                {"envelope", envelope_json(e.envelope)},
                {"pixels_on_target", {{"near", e.pixels_near}, {"work", e.pixels_work}, {"far", e.pixels_far}}},
                {"feasible", e.feasible()},
                {"rejection_reasons", reasons}};
}

json provenance_json(const Provenance& p) {
    return json{{"tool", p.tool}, {"version", p.version}, {"config_hash", p.config_hash}};
}

std::string provenance_footer(const Provenance& p) {
    return "-- " + p.tool + " " + p.version + ", config " + p.config_hash + "\n";
}

json stereo_json(const StereoLayout& s) {
    return json{{"focal_px", s.focal_px},
                {"baseline_lower_mm", s.baseline_lower_mm},
                {"baseline_upper_overlap_mm", s.baseline_upper_overlap_mm},
                {"baseline_upper_disparity_mm", s.baseline_upper_disparity_mm},
                {"baseline_chosen_mm", s.baseline_chosen_mm},
                {"overlap_fraction", s.overlap_fraction},
                {"depth_error_work_mm", s.depth_error_work_mm},
                {"depth_error_far_mm", s.depth_error_far_mm}};
}

json placement_json(const PlacementGeometry& p) {
    return json{{"vertical_fov_at_nozzle_mm", p.vertical_fov_at_nozzle_mm},
                {"min_horizontal_offset_mm", p.min_horizontal_offset_mm},
                {"max_horizontal_offset_mm", p.max_horizontal_offset_mm},
                {"chosen_offset_mm", p.chosen_offset_mm}};
}

json fov_matrix_json(const std::vector<FovMatrixRow>& rows) {
    json arr = json::array();
    for (const FovMatrixRow& row : rows) {
        arr.push_back({{"plane", row.plane},
                       {"distance_mm", number_or_null(row.distance_mm)},
                       {"fov_h_mm", number_or_null(row.fov_h_mm)},
                       {"fov_v_mm", number_or_null(row.fov_v_mm)},
                       {"pixels_on_target", row.pixels_on_target}});
    }
    return arr;
}

void render_candidates(std::ostream& out, const SelectionResult& selection) {
    out << pad("camera", 16) << pad("lens", 8) << pad("f/", 5) << pad("FoV(H)", 9)
        << pad("d", 9) << pad("N", 9) << pad("F", 9) << pad("np(d)", 7) << "verdict\n";
    for (const RigEvaluation& e : selection.evaluations) {
        std::string verdict = "feasible";
        if (!e.feasible()) {
            verdict = "rejected:";
            for (const RejectionReason& r : e.rejection_reasons) verdict += " " + r.code;
        }
        out << pad(e.camera.name, 16) << pad(e.lens.name, 8) << pad(fixed(e.f_stop_used, 1), 5)
            << pad(fixed(e.fov_h_mm, 1), 9) << pad(fixed(e.working_mm, 1), 9)
            << pad(fixed(e.envelope.near_mm, 1), 9) << pad(fixed(e.envelope.far_mm, 1), 9)
            << pad(std::to_string(e.pixels_work), 7) << verdict << "\n";
    }
}

void render_fov_matrix(std::ostream& out, const std::vector<FovMatrixRow>& rows) {
    out << pad("plane", 7) << pad("z (mm)", 9) << pad("FoV(H)", 9) << pad("FoV(V)", 9)
        << "np\n";
    for (const FovMatrixRow& row : rows) {
        out << pad(row.plane, 7) << pad(fixed(row.distance_mm, 1), 9)
            << pad(fixed(row.fov_h_mm, 1), 9) << pad(fixed(row.fov_v_mm, 1), 9)
            << row.pixels_on_target << "\n";
    }
}

void render_stereo(std::ostream& out, const StereoLayout& s) {
    out << "focal length          " << fixed(s.focal_px, 1) << " px\n"
        << "baseline lower bound  " << fixed(s.baseline_lower_mm, 1) << " mm (depth error)\n"
        << "baseline upper bounds " << fixed(s.baseline_upper_overlap_mm, 1) << " mm (overlap), "
        << fixed(s.baseline_upper_disparity_mm, 1) << " mm (disparity)\n"
        << "baseline chosen       " << fixed(s.baseline_chosen_mm, 0) << " mm\n"
        << "overlap fraction      " << fixed(s.overlap_fraction, 3) << "\n"
        << "depth error           " << fixed(s.depth_error_work_mm, 2) << " mm at work, "
        << fixed(s.depth_error_far_mm, 2) << " mm at far\n";
}

void render_coverage_rows(std::ostream& out, const std::vector<CoverageRow>& rows) {
    out << pad("km/h", 6) << pad("mm/s", 9) << "frames\n";
    for (const CoverageRow& row : rows) {
        out << pad(fixed(row.velocity_kmh, 1), 6) << pad(fixed(row.velocity_mm_s, 1), 9)
            << row.frames << "\n";
    }
}

}  // namespace

const std::vector<double>& default_velocity_sweep_kmh() {
    static const std::vector<double> sweep{1.0, 1.5, 2.5, 3.5, 5.0};
    return sweep;
}

std::vector<FovMatrixRow> fov_matrix_for(const RigEvaluation& rig, const TargetSpec& target) {
    const double aspect = static_cast<double>(rig.camera.res_height_px) /
                          static_cast<double>(rig.camera.res_width_px);
    std::vector<FovMatrixRow> rows;
    const std::pair<const char*, double> planes[] = {{"near", rig.envelope.near_mm},
                                                     {"work", rig.working_mm},
                                                     {"far", rig.envelope.far_mm}};
    for (const auto& [plane, z] : planes) {
        FovMatrixRow row;
        row.plane = plane;
        row.distance_mm = z;
        if (std::isinf(z)) {
            row.fov_h_mm = row.fov_v_mm = std::numeric_limits<double>::infinity();
            row.pixels_on_target = 0;
        } else {
            row.fov_h_mm = fov_at_distance(z, rig.lens, rig.camera.sensor_width_mm);
            row.fov_v_mm = row.fov_h_mm * aspect;
            row.pixels_on_target = pixels_on_target(rig.camera, target, row.fov_h_mm);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Provenance make_provenance(const std::string& config_hash) {
    return Provenance{kToolName, kToolVersion, config_hash};
}

DesignReport run_design(const CatalogFile& catalog, const RunConfig& config,
                        const std::string& config_hash) {
    validate_run_config(config);

    DesignReport report;
    report.provenance = make_provenance(config_hash);
    report.selection = select_rig(catalog.cameras, catalog.lenses, config.design);
    report.feasible = !report.selection.ranked.empty();
    if (!report.feasible) {
        return report;
    }

    const RigEvaluation& top = report.selection.ranked.front();
    report.stereo =
        solve_baseline(config.stereo, top.lens, top.camera, config.as_built_baseline_mm);
    report.placement = placement_geometry(top, config.design, config.chosen_offset_mm);
    report.fov_matrix = fov_matrix_for(top, config.design.target);

    report.coverage_fov_v_mm = report.fov_matrix.front().fov_v_mm;  // near plane
    for (double kmh : default_velocity_sweep_kmh()) {
        MotionProfile profile = config.motion;
        profile.velocity_mm_s = kmh_to_mm_per_s(kmh);
        report.coverage.push_back(
            {kmh, profile.velocity_mm_s, frames_per_target(profile, report.coverage_fov_v_mm)});
    }
    report.processing_budget_ms =
        max_processing_time_ms(config.motion, report.fov_matrix[1].fov_v_mm);
    return report;
}

json design_report_to_json(const DesignReport& report) {
    json candidates = json::array();
    for (const RigEvaluation& e : report.selection.evaluations) {
        candidates.push_back(candidate_json(e));
    }
    json ranking = json::array();
    for (const RigEvaluation& e : report.selection.ranked) {
        ranking.push_back({{"camera", e.camera.name}, {"lens", e.lens.name}});
    }

    json doc{{"feasible", report.feasible},
             {"candidates", candidates},
             {"ranking", ranking},
             {"provenance", provenance_json(report.provenance)}};
    if (report.feasible) {
        doc["selected"] = ranking.front();
        doc["stereo"] = stereo_json(*report.stereo);
        doc["placement"] = placement_json(*report.placement);
        doc["fov_matrix"] = fov_matrix_json(report.fov_matrix);
        json coverage_rows = json::array();
        for (const CoverageRow& row : report.coverage) {
            coverage_rows.push_back({{"velocity_kmh", row.velocity_kmh},
                                     {"velocity_mm_s", row.velocity_mm_s},
                                     {"frames", row.frames}});
        }
        doc["coverage"] = {{"fov_v_mm", report.coverage_fov_v_mm},
                           {"plane", "near"},
                           {"rows", coverage_rows},
                           {"processing_budget_ms", report.processing_budget_ms}};
    }
    return doc;
}

std::string render_design_text(const DesignReport& report) {
    std::ostringstream out;
    out << "Candidate evaluation\n====================\n";
    render_candidates(out, report.selection);

    if (!report.feasible) {
        out << "\nNo feasible rig: every candidate failed at least one constraint.\n";
        out << provenance_footer(report.provenance);
        return out.str();
    }

    const RigEvaluation& top = report.selection.ranked.front();
    out << "\nSelected rig: " << top.camera.name << " + " << top.lens.name << " at f/"
        << fixed(top.f_stop_used, 1) << "\n";
    out << "\nField of view by plane\n----------------------\n";
    render_fov_matrix(out, report.fov_matrix);
    out << "\nStereo baseline\n---------------\n";
    render_stereo(out, *report.stereo);
    out << "\nPlacement\n---------\n"
        << "vertical half-FoV at nozzle " << fixed(report.placement->vertical_fov_at_nozzle_mm, 1)
        << " mm\n"
        << "offset interval             [" << fixed(report.placement->min_horizontal_offset_mm, 0)
        << ", " << fixed(report.placement->max_horizontal_offset_mm, 0) << "] mm\n"
        << "chosen offset               " << fixed(report.placement->chosen_offset_mm, 0)
        << " mm\n";
    out << "\nCoverage at the near plane (FoV(V) " << fixed(report.coverage_fov_v_mm, 1)
        << " mm)\n--------------------------\n";
    render_coverage_rows(out, report.coverage);
    out << "processing budget " << fixed(report.processing_budget_ms, 1)
        << " ms per image at the working plane\n";
    out << provenance_footer(report.provenance);
    return out.str();
}

json envelope_to_json(const RigEvaluation& rig, const TargetSpec& target,
                      const Provenance& provenance) {
    return json{{"candidate", candidate_json(rig)},
                {"fov_matrix", fov_matrix_json(fov_matrix_for(rig, target))},
                {"provenance", provenance_json(provenance)}};
}

std::string render_envelope_text(const RigEvaluation& rig, const TargetSpec& target,
                                 const Provenance& provenance) {
    std::ostringstream out;
    out << rig.camera.name << " + " << rig.lens.name << " at f/" << fixed(rig.f_stop_used, 1)
        << "\n"
        << "CoC        " << fixed(rig.envelope.coc_mm, 6) << " mm\n"
        << "hyperfocal " << fixed(rig.envelope.hyperfocal_mm, 1) << " mm\n"
        << "near       " << fixed(rig.envelope.near_mm, 1) << " mm\n"
        << "working    " << fixed(rig.working_mm, 1) << " mm\n"
        << "far        " << fixed(rig.envelope.far_mm, 1) << " mm\n"
        << "DoF        " << fixed(rig.envelope.dof_mm, 1) << " mm\n\n";
    render_fov_matrix(out, fov_matrix_for(rig, target));
    out << provenance_footer(provenance);
    return out.str();
}

json layout_to_json(const StereoLayout& layout, const Provenance& provenance) {
    return json{{"stereo", stereo_json(layout)}, {"provenance", provenance_json(provenance)}};
}

std::string render_layout_text(const StereoLayout& layout, const Provenance& provenance) {
    std::ostringstream out;
    render_stereo(out, layout);
    out << provenance_footer(provenance);
    return out.str();
}

json coverage_to_json(const std::vector<CoverageRow>& rows, double fov_v_mm, double budget_ms,
                      const Provenance& provenance) {
    json coverage_rows = json::array();
    for (const CoverageRow& row : rows) {
        coverage_rows.push_back({{"velocity_kmh", row.velocity_kmh},
                                 {"velocity_mm_s", row.velocity_mm_s},
                                 {"frames", row.frames}});
    }
    return json{{"fov_v_mm", fov_v_mm},
                {"rows", coverage_rows},
                {"processing_budget_ms", budget_ms},
                {"provenance", provenance_json(provenance)}};
}

std::string render_coverage_text(const std::vector<CoverageRow>& rows, double fov_v_mm,
                                 double budget_ms, const Provenance& provenance) {
    std::ostringstream out;
    out << "Coverage for FoV(V) " << fixed(fov_v_mm, 1) << " mm\n";
    render_coverage_rows(out, rows);
    out << "processing budget " << fixed(budget_ms, 1) << " ms per image\n";
    out << provenance_footer(provenance);
    return out.str();
}

json audit_to_json(const DatasetReport& report, const std::vector<std::string>& warnings,
                   const Provenance& provenance) {
    json audits = json::array();
    for (const ImageAudit& audit : report.audits) {
        audits.push_back({{"image_id", audit.image_id},
                          {"saturation_rate", audit.saturation_rate},
                          {"category", glare_category_name(audit.category)}});
    }
    return json{{"total_images", report.total_images},
                {"counts",
                 {{"C1", report.category_counts[0]},
                  {"C2", report.category_counts[1]},
                  {"C3", report.category_counts[2]}}},
                {"percent",
                 {{"C1", report.category_percent[0]},
                  {"C2", report.category_percent[1]},
                  {"C3", report.category_percent[2]}}},
                {"consecutive_glare_percent", report.consecutive_glare_percent},
                {"images", audits},
                {"warnings", warnings},
                {"provenance", provenance_json(provenance)}};
}

std::string render_audit_text(const DatasetReport& report,
                              const std::vector<std::string>& warnings,
                              const Provenance& provenance) {
    std::ostringstream out;
    out << "images " << report.total_images << "\n"
        << pad("", 4) << pad("count", 8) << "percent\n";
    for (int i = 0; i < 3; ++i) {
        out << pad(glare_category_name(static_cast<GlareCategory>(i)), 4)
            << pad(std::to_string(report.category_counts[i]), 8)
            << fixed(report.category_percent[i], 1) << "\n";
    }
    out << "consecutive glare " << fixed(report.consecutive_glare_percent, 1) << "%\n";
    for (const std::string& warning : warnings) {
        out << "warning: " << warning << "\n";
    }
    out << provenance_footer(provenance);
    return out.str();
}

}  // namespace stereorig
