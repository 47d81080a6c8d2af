#include "stereorig/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "stereorig/report.hpp"
#include "stereorig/version.hpp"

namespace stereorig {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

struct GlobalOptions {
    std::string format = "table";
    std::string config_path;
    std::string out_path;
};

void write_output(const GlobalOptions& global, const std::string& text, std::ostream& out) {
    if (global.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(global.out_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write " + global.out_path);
    }
    file << text;
}

std::string render(const GlobalOptions& global, const nlohmann::json& doc,
                   const std::string& text) {
    return global.format == "structured" ? doc.dump(2) + "\n" : text;
}

LoadedConfig require_config(const GlobalOptions& global) {
    if (global.config_path.empty()) {
        throw ValidationError("this command needs --config");
    }
    return load_run_config(global.config_path);
}

int exit_code_for(const Error& error) {
    switch (error.code()) {
        case ErrorCode::infeasible_error:
            return kExitInfeasible;
        case ErrorCode::internal_error:
            return kExitInternalError;
        default:
            return kExitInputError;
    }
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stereo camera rig design toolkit: selects a camera/lens pair, "
                 "derives the stereo baseline and mounting geometry from pinhole "
                 "optics, and audits image datasets for saturation",
                 kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
    app.add_option("--config", global.config_path, "Run configuration (JSON)");
    app.add_option("--out", global.out_path, "Write the report to a file instead of stdout");

    std::string catalog_path;
    std::string camera_name;
    std::string lens_name;
    std::optional<double> f_stop_override;
    std::optional<double> fov_v_override;
    std::string plane = "near";
    std::vector<double> velocities = default_velocity_sweep_kmh();
    std::string audit_dir;
    std::string audit_manifest;
    std::optional<int> threshold_override;
    std::optional<std::string> mode_override;
    int jobs = 1;

    CLI::App* design = app.add_subcommand(
        "design", "Evaluate a catalog against the configured constraints end to end");
    design->add_option("--catalog", catalog_path, "Device catalog")->required();

    CLI::App* envelope = app.add_subcommand(
        "envelope", "Focus envelope and field-of-view matrix for one camera and lens");
    envelope->add_option("--catalog", catalog_path, "Device catalog")->required();
    envelope->add_option("--camera", camera_name, "Camera name from the catalog")->required();
    envelope->add_option("--lens", lens_name, "Lens name from the catalog")->required();
    envelope->add_option("--f-stop", f_stop_override, "Evaluate at this f-stop only");

    CLI::App* baseline = app.add_subcommand(
        "baseline", "Stereo baseline bounds and selection for one camera and lens");
    baseline->add_option("--catalog", catalog_path, "Device catalog")->required();
    baseline->add_option("--camera", camera_name, "Camera name from the catalog")->required();
    baseline->add_option("--lens", lens_name, "Lens name from the catalog")->required();

    CLI::App* coverage = app.add_subcommand(
        "coverage", "Frames per target across a velocity sweep and the processing budget");
    coverage->add_option("--fov-v", fov_v_override,
                         "Vertical field of view in mm (otherwise derived from the rig)");
    coverage->add_option("--catalog", catalog_path, "Device catalog");
    coverage->add_option("--camera", camera_name, "Camera name from the catalog");
    coverage->add_option("--lens", lens_name, "Lens name from the catalog");
    coverage->add_option("--plane", plane, "Evaluation plane when deriving FoV(V)")
        ->check(CLI::IsMember({"near", "work", "far"}))
        ->capture_default_str();
    coverage->add_option("--velocities", velocities, "Velocity sweep in km/h")
        ->delimiter(',');

    CLI::App* audit = app.add_subcommand(
        "audit", "Saturation audit of an image directory or capture-order manifest");
    audit->add_option("--dir", audit_dir, "Directory of images (lexicographic order)");
    audit->add_option("--manifest", audit_manifest, "Manifest listing images in capture order");
    audit->add_option("--threshold", threshold_override, "Saturation threshold, 1-255");
    audit->add_option("--mode", mode_override, "Saturation policy")
        ->check(CLI::IsMember({"all_channels", "blue_biased"}));
    audit->add_option("--jobs", jobs, "Worker threads for rating images")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // CLI11's vector overload consumes arguments from the back
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (design->parsed()) {
            const CatalogFile catalog = parse_catalog(catalog_path);
            const LoadedConfig loaded = require_config(global);
            const DesignReport report =
                run_design(catalog, loaded.config, loaded.config_hash);
            write_output(global,
                         render(global, design_report_to_json(report),
                                render_design_text(report)),
                         out);
            return report.feasible ? kExitOk : kExitInfeasible;
        }

        if (envelope->parsed()) {
            const CatalogFile catalog = parse_catalog(catalog_path);
            const LoadedConfig loaded = require_config(global);
            RunConfig config = loaded.config;
            if (f_stop_override) {
                config.design.f_stop_policy = {*f_stop_override};
            }
            const RigEvaluation rig = evaluate_candidate(
                find_camera(catalog, camera_name), find_lens(catalog, lens_name), config.design);
            const Provenance provenance = make_provenance(loaded.config_hash);
            write_output(global,
                         render(global, envelope_to_json(rig, config.design.target, provenance),
                                render_envelope_text(rig, config.design.target, provenance)),
                         out);
            return kExitOk;
        }

        if (baseline->parsed()) {
            const CatalogFile catalog = parse_catalog(catalog_path);
            const LoadedConfig loaded = require_config(global);
            const StereoLayout layout =
                solve_baseline(loaded.config.stereo, find_lens(catalog, lens_name),
                               find_camera(catalog, camera_name),
                               loaded.config.as_built_baseline_mm);
            const Provenance provenance = make_provenance(loaded.config_hash);
            write_output(global,
                         render(global, layout_to_json(layout, provenance),
                                render_layout_text(layout, provenance)),
                         out);
            return kExitOk;
        }

        if (coverage->parsed()) {
            const LoadedConfig loaded = require_config(global);
            double fov_v = 0.0;
            if (fov_v_override) {
                fov_v = *fov_v_override;
            } else {
                if (catalog_path.empty() || camera_name.empty() || lens_name.empty()) {
                    throw ValidationError(
                        "coverage needs either --fov-v or --catalog with --camera and --lens");
                }
                const CatalogFile catalog = parse_catalog(catalog_path);
                const RigEvaluation rig =
                    evaluate_candidate(find_camera(catalog, camera_name),
                                       find_lens(catalog, lens_name), loaded.config.design);
                const auto matrix = fov_matrix_for(rig, loaded.config.design.target);
                for (const FovMatrixRow& row : matrix) {
                    if (row.plane == plane) fov_v = row.fov_v_mm;
                }
            }

            std::vector<CoverageRow> rows;
            for (double kmh : velocities) {
                MotionProfile profile = loaded.config.motion;
                profile.velocity_mm_s = kmh_to_mm_per_s(kmh);
                rows.push_back({kmh, profile.velocity_mm_s, frames_per_target(profile, fov_v)});
            }
            const double budget = max_processing_time_ms(loaded.config.motion, fov_v);
            const Provenance provenance = make_provenance(loaded.config_hash);
            write_output(global,
                         render(global, coverage_to_json(rows, fov_v, budget, provenance),
                                render_coverage_text(rows, fov_v, budget, provenance)),
                         out);
            return kExitOk;
        }

        if (audit->parsed()) {
            if (audit_dir.empty() == audit_manifest.empty()) {
                throw ValidationError("audit needs exactly one of --dir or --manifest");
            }
            SaturationPolicy policy;
            std::string config_hash = "none";
            if (!global.config_path.empty()) {
                const LoadedConfig loaded = load_run_config(global.config_path);
                policy = loaded.config.saturation;
                config_hash = loaded.config_hash;
            }
            if (threshold_override) policy.channel_threshold = *threshold_override;
            if (mode_override) {
                policy.mode = (*mode_override == "blue_biased")
                                  ? SaturationPolicy::Mode::blue_biased
                                  : SaturationPolicy::Mode::all_channels;
            }

            const auto paths = audit_manifest.empty() ? paths_from_directory(audit_dir)
                                                      : paths_from_manifest(audit_manifest);
            std::vector<std::string> warnings;
            const DatasetReport report = audit_files(paths, policy, jobs, &warnings);
            const Provenance provenance = make_provenance(config_hash);
            write_output(global,
                         render(global, audit_to_json(report, warnings, provenance),
                                render_audit_text(report, warnings, provenance)),
                         out);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error[internal_error]: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitInternalError;  // unreachable: require_subcommand(1)
}

}  // namespace stereorig
