#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "stereorig/image_io.hpp"

// Exposure QA for captured datasets: per-image saturation rate, glare
// categories, and the share of images whose whole 3-frame neighbourhood is
// glared.

namespace stereorig {

enum class GlareCategory { C1, C2, C3 };

const char* glare_category_name(GlareCategory category);

struct SaturationPolicy {
    enum class Mode {
        all_channels,  // a pixel is saturated when every channel clears the threshold
        blue_biased,   // the blue channel alone decides
    };

    int channel_threshold = 250;  // real sensors rarely pin a glared channel at 255
    Mode mode = Mode::all_channels;
};

struct ImageAudit {
    std::string image_id;
    double saturation_rate = 0.0;  // percent of pixels, [0, 100]
    GlareCategory category = GlareCategory::C1;
};

struct DatasetReport {
    int total_images = 0;
    std::array<int, 3> category_counts{};       // indexed by GlareCategory
    std::array<double, 3> category_percent{};   // sums to 100
    double consecutive_glare_percent = 0.0;
    std::vector<ImageAudit> audits;             // capture order
};

/// Percent of pixels the policy counts as saturated.
double saturation_rate(const Rgb8Image& image, const SaturationPolicy& policy);

/// C1 for sr < 25, C2 for 25 <= sr < 50, C3 for sr >= 50. The partition is
/// left-closed on the glare side so every rate lands in exactly one class.
GlareCategory classify(double sr);

/// Aggregates per-image audits taken in capture order. An image contributes
/// to the consecutive-glare statistic when it and both neighbours (windows
/// truncate at the sequence ends) are C2 or C3.
DatasetReport summarize_audits(std::vector<ImageAudit> audits);

/// Rates, classifies, and aggregates an in-memory sequence in capture order.
DatasetReport audit_images(const std::vector<std::pair<std::string, Rgb8Image>>& images,
                           const SaturationPolicy& policy);

/// File-based audit over paths in capture order. jobs > 1 rates images
/// concurrently; the aggregation is an order-defined reduction, so the report
/// is identical for any worker count. Lossy inputs add a warning per file.
DatasetReport audit_files(const std::vector<std::filesystem::path>& paths,
                          const SaturationPolicy& policy, int jobs,
                          std::vector<std::string>* warnings = nullptr);

/// Capture-ordered paths from a manifest (one path per line, relative paths
/// resolved against the manifest's directory).
std::vector<std::filesystem::path> paths_from_manifest(const std::filesystem::path& manifest);

/// Image files in a directory in lexicographic filename order. Directory
/// enumeration order is never used; it is not deterministic.
std::vector<std::filesystem::path> paths_from_directory(const std::filesystem::path& dir);

}  // namespace stereorig
