#include "stereorig/exposure.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>

namespace stereorig {

namespace {

void check_policy(const SaturationPolicy& policy) {
    if (policy.channel_threshold < 1 || policy.channel_threshold > 255) {
        throw ValidationError("saturation threshold must lie in [1, 255]");
    }
}

bool is_glared(GlareCategory c) { return c != GlareCategory::C1; }

}  // namespace

const char* glare_category_name(GlareCategory category) {
    switch (category) {
        case GlareCategory::C1: return "C1";
        case GlareCategory::C2: return "C2";
        case GlareCategory::C3: return "C3";
    }
    return "?";
}

double saturation_rate(const Rgb8Image& image, const SaturationPolicy& policy) {
    check_policy(policy);
    if (image.width <= 0 || image.height <= 0 || image.data.empty()) {
        throw DomainError("saturation rate of an empty image is undefined");
    }
    if (image.data.size() != image.pixel_count() * 3) {
        throw FormatError("image buffer size does not match its dimensions");
    }

    const auto threshold = static_cast<std::uint8_t>(policy.channel_threshold);
    std::size_t saturated = 0;
    const std::uint8_t* p = image.data.data();
    const std::uint8_t* end = p + image.data.size();
    if (policy.mode == SaturationPolicy::Mode::all_channels) {
        for (; p != end; p += 3) {
            saturated += (p[0] >= threshold && p[1] >= threshold && p[2] >= threshold);
        }
    } else {
        for (; p != end; p += 3) {
            saturated += (p[2] >= threshold);
        }
    }
    return 100.0 * static_cast<double>(saturated) / static_cast<double>(image.pixel_count());
}

GlareCategory classify(double sr) {
    if (!(sr >= 0.0 && sr <= 100.0)) {
        throw DomainError("saturation rate must lie in [0, 100]");
    }
    if (sr < 25.0) return GlareCategory::C1;
    if (sr < 50.0) return GlareCategory::C2;
    return GlareCategory::C3;
}

DatasetReport summarize_audits(std::vector<ImageAudit> audits) {
    if (audits.empty()) {
        throw DomainError("cannot audit an empty dataset");
    }

    DatasetReport report;
    report.total_images = static_cast<int>(audits.size());
    for (const ImageAudit& a : audits) {
        report.category_counts[static_cast<int>(a.category)] += 1;
    }
    for (int i = 0; i < 3; ++i) {
        report.category_percent[i] =
            100.0 * report.category_counts[i] / static_cast<double>(report.total_images);
    }

    const int n = report.total_images;
    int consecutive = 0;
    for (int i = 0; i < n; ++i) {
        if (!is_glared(audits[i].category)) continue;
        const int lo = std::max(0, i - 1);
        const int hi = std::min(n - 1, i + 1);
        bool window_glared = true;
        for (int j = lo; j <= hi; ++j) {
            window_glared = window_glared && is_glared(audits[j].category);
        }
        consecutive += window_glared;
    }
    report.consecutive_glare_percent = 100.0 * consecutive / static_cast<double>(n);
    report.audits = std::move(audits);
    return report;
}

DatasetReport audit_images(const std::vector<std::pair<std::string, Rgb8Image>>& images,
                           const SaturationPolicy& policy) {
    std::vector<ImageAudit> audits;
    audits.reserve(images.size());
    for (const auto& [id, image] : images) {
        const double sr = saturation_rate(image, policy);
        audits.push_back({id, sr, classify(sr)});
    }
    return summarize_audits(std::move(audits));
}

DatasetReport audit_files(const std::vector<std::filesystem::path>& paths,
                          const SaturationPolicy& policy, int jobs,
                          std::vector<std::string>* warnings) {
    check_policy(policy);
    if (paths.empty()) {
        throw DomainError("cannot audit an empty dataset");
    }
    if (jobs < 1) {
        throw ValidationError("worker count must be at least 1");
    }

    struct Slot {
        ImageAudit audit;
        bool lossless = true;
        std::string format;
    };

    const std::size_t n = paths.size();
    std::vector<Slot> slots(n);
    auto rate_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const LoadedImage loaded = load_rgb8(paths[i]);
            const double sr = saturation_rate(loaded.image, policy);
            slots[i] = {{paths[i].filename().string(), sr, classify(sr)},
                        loaded.lossless,
                        loaded.format};
        }
    };

    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    if (workers <= 1) {
        rate_range(0, n);
    } else {
        std::vector<std::future<void>> tasks;
        tasks.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = n * w / workers;
            const std::size_t end = n * (w + 1) / workers;
            tasks.push_back(std::async(std::launch::async, rate_range, begin, end));
        }
        for (auto& task : tasks) {
            task.get();  // rethrows load/format errors from any worker
        }
    }

    std::vector<ImageAudit> audits;
    audits.reserve(n);
    for (Slot& slot : slots) {
        if (!slot.lossless && warnings) {
            warnings->push_back(slot.audit.image_id + ": lossy " + slot.format +
                                " input; compression may bias saturation counts");
        }
        audits.push_back(std::move(slot.audit));
    }
    return summarize_audits(std::move(audits));
}

std::vector<std::filesystem::path> paths_from_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) {
        throw IoError("cannot open manifest " + manifest.string());
    }
    const std::filesystem::path base = manifest.parent_path();
    std::vector<std::filesystem::path> paths;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::filesystem::path p(line);
        paths.push_back(p.is_absolute() ? p : base / p);
    }
    if (paths.empty()) {
        throw ParseError("manifest " + manifest.string() + " lists no images");
    }
    return paths;
}

std::vector<std::filesystem::path> paths_from_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw IoError(dir.string() + " is not a directory");
    }
    static const std::set<std::string> extensions{".png", ".jpg", ".jpeg", ".ppm"};
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (extensions.count(ext)) {
            paths.push_back(entry.path());
        }
    }
    // lexicographic filename order, never the directory enumeration order
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        return a.filename().string() < b.filename().string();
    });
    if (paths.empty()) {
        throw IoError("no image files found in " + dir.string());
    }
    return paths;
}

}  // namespace stereorig
