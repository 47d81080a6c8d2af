#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stereorig/optics.hpp"

// Device catalog ingestion. The format is comma-delimited text with two
// sections, each introduced by a bracketed tag and a mandatory header row:
//
//   [cameras]
//   name,sensor_width_mm,sensor_height_mm,res_width_px,res_height_px,dynamic_range_db
//   acA1920-40uc,11.3,7.1,1920,1200,73
//
//   [lenses]
//   name,focal_length_mm,min_f_stop,distortion_pct
//   LM6HC,6,1.8,-0.2
//
// Unknown columns are carried through serialization unchanged but play no
// role in the computations.

namespace stereorig {

struct ExtraColumns {
    std::vector<std::string> names;                // header cells beyond the known set
    std::vector<std::vector<std::string>> cells;   // one entry per row, aligned to names
};

struct CatalogFile {
    std::vector<CameraSpec> cameras;
    std::vector<LensSpec> lenses;
    ExtraColumns camera_extras;
    ExtraColumns lens_extras;
};

CatalogFile parse_catalog(const std::filesystem::path& path);
CatalogFile parse_catalog_text(std::string_view text, const std::string& source_name);

/// Inverse of parse_catalog_text: parse(serialize(c)) reproduces c, and
/// serialize(parse(text)) reproduces canonical input byte for byte.
std::string serialize_catalog(const CatalogFile& catalog);

const CameraSpec& find_camera(const CatalogFile& catalog, const std::string& name);
const LensSpec& find_lens(const CatalogFile& catalog, const std::string& name);

}  // namespace stereorig
