#include "stereorig/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>

namespace stereorig {

namespace {

constexpr const char* kCameraColumns[] = {"name",         "sensor_width_mm",
                                          "sensor_height_mm", "res_width_px",
                                          "res_height_px", "dynamic_range_db"};
constexpr const char* kCameraOptional = "interface";
constexpr const char* kLensColumns[] = {"name", "focal_length_mm", "min_f_stop",
                                        "distortion_pct"};
constexpr const char* kLensOptional = "format";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

/// Shortest decimal text that parses back to the same double; keeps catalog
/// round-trips byte-identical for values authored by hand.
std::string format_minimal(double value) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

struct Location {
    const std::string& source;
    int line;

    std::string str() const { return source + ":" + std::to_string(line); }
};

[[noreturn]] void fail(const Location& loc, const std::string& message) {
    throw ParseError(loc.str() + ": " + message);
}

double parse_real(const std::string& cell, const Location& loc, const std::string& column) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        fail(loc, "column '" + column + "': '" + cell + "' is not a number");
    }
}

double parse_positive_real(const std::string& cell, const Location& loc,
                           const std::string& column) {
    const double v = parse_real(cell, loc, column);
    if (!(v > 0.0)) {
        fail(loc, "column '" + column + "': value must be positive, got '" + cell + "'");
    }
    return v;
}

int parse_positive_int(const std::string& cell, const Location& loc,
                       const std::string& column) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(cell, &used);
        if (used != cell.size() || v <= 0) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        fail(loc, "column '" + column + "': '" + cell + "' is not a positive integer");
    }
}

// column-name -> cell index map for one section header
struct Header {
    std::map<std::string, std::size_t> index;
    std::vector<std::string> extra_names;
    std::vector<std::size_t> extra_indices;
    std::size_t column_count = 0;
};

Header parse_header(const std::string& line, const Location& loc,
                    std::span<const char* const> required, const char* optional_col) {
    Header header;
    const std::vector<std::string> cells = split_csv(line);
    header.column_count = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string name = trim(cells[i]);
        if (name.empty()) fail(loc, "empty column name in header");
        if (!header.index.emplace(name, i).second) {
            fail(loc, "duplicate column '" + name + "'");
        }
    }
    for (const char* col : required) {
        if (!header.index.count(col)) {
            fail(loc, std::string("missing required column '") + col + "'");
        }
    }
    std::set<std::string> known(required.begin(), required.end());
    known.insert(optional_col);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string name = trim(cells[i]);
        if (!known.count(name)) {
            header.extra_names.push_back(name);
            header.extra_indices.push_back(i);
        }
    }
    return header;
}

const std::string& cell_at(const std::vector<std::string>& cells, const Header& header,
                           const std::string& column) {
    return cells[header.index.at(column)];
}

std::optional<std::string> optional_cell(const std::vector<std::string>& cells,
                                         const Header& header, const char* column) {
    auto it = header.index.find(column);
    if (it == header.index.end()) return std::nullopt;
    const std::string value = trim(cells[it->second]);
    if (value.empty()) return std::nullopt;
    return value;
}

}  // namespace

CatalogFile parse_catalog_text(std::string_view text, const std::string& source_name) {
    CatalogFile catalog;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    enum class Section { none, cameras, lenses };
    Section section = Section::none;
    std::optional<Header> camera_header;
    std::optional<Header> lens_header;
    std::set<std::string> camera_names;
    std::set<std::string> lens_names;

    while (std::getline(in, line)) {
        ++line_no;
        const Location loc{source_name, line_no};
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        if (stripped == "[cameras]") {
            section = Section::cameras;
            continue;
        }
        if (stripped == "[lenses]") {
            section = Section::lenses;
            continue;
        }
        if (stripped.front() == '[') {
            fail(loc, "unknown section '" + stripped + "'");
        }
        if (section == Section::none) {
            fail(loc, "expected a [cameras] or [lenses] section before data rows");
        }

        if (section == Section::cameras) {
            if (!camera_header) {
                camera_header = parse_header(line, loc, kCameraColumns, kCameraOptional);
                catalog.camera_extras.names = camera_header->extra_names;
                continue;
            }
            const std::vector<std::string> cells = split_csv(line);
            if (cells.size() != camera_header->column_count) {
                fail(loc, "expected " + std::to_string(camera_header->column_count) +
                              " cells, got " + std::to_string(cells.size()));
            }
            CameraSpec camera;
            camera.name = trim(cell_at(cells, *camera_header, "name"));
            if (camera.name.empty()) fail(loc, "column 'name': empty camera name");
            if (!camera_names.insert(camera.name).second) {
                fail(loc, "duplicate camera name '" + camera.name + "'");
            }
            camera.sensor_width_mm =
                parse_positive_real(cell_at(cells, *camera_header, "sensor_width_mm"), loc,
                                    "sensor_width_mm");
            camera.sensor_height_mm =
                parse_positive_real(cell_at(cells, *camera_header, "sensor_height_mm"), loc,
                                    "sensor_height_mm");
            camera.res_width_px = parse_positive_int(
                cell_at(cells, *camera_header, "res_width_px"), loc, "res_width_px");
            camera.res_height_px = parse_positive_int(
                cell_at(cells, *camera_header, "res_height_px"), loc, "res_height_px");
            if (auto dr = optional_cell(cells, *camera_header, "dynamic_range_db")) {
                camera.dynamic_range_db = parse_positive_real(*dr, loc, "dynamic_range_db");
            }
            camera.interface = optional_cell(cells, *camera_header, kCameraOptional);
            catalog.cameras.push_back(std::move(camera));

            std::vector<std::string> extras;
            for (std::size_t idx : camera_header->extra_indices) extras.push_back(cells[idx]);
            catalog.camera_extras.cells.push_back(std::move(extras));
        } else {
            if (!lens_header) {
                lens_header = parse_header(line, loc, kLensColumns, kLensOptional);
                catalog.lens_extras.names = lens_header->extra_names;
                continue;
            }
            const std::vector<std::string> cells = split_csv(line);
            if (cells.size() != lens_header->column_count) {
                fail(loc, "expected " + std::to_string(lens_header->column_count) +
                              " cells, got " + std::to_string(cells.size()));
            }
            LensSpec lens;
            lens.name = trim(cell_at(cells, *lens_header, "name"));
            if (lens.name.empty()) fail(loc, "column 'name': empty lens name");
            if (!lens_names.insert(lens.name).second) {
                fail(loc, "duplicate lens name '" + lens.name + "'");
            }
            lens.focal_length_mm = parse_positive_real(
                cell_at(cells, *lens_header, "focal_length_mm"), loc, "focal_length_mm");
            lens.min_f_stop = parse_positive_real(cell_at(cells, *lens_header, "min_f_stop"),
                                                  loc, "min_f_stop");
            if (auto distortion = optional_cell(cells, *lens_header, "distortion_pct")) {
                // the one signed numeric column: barrel distortion is negative
                lens.distortion_pct = parse_real(*distortion, loc, "distortion_pct");
            }
            lens.format = optional_cell(cells, *lens_header, kLensOptional);
            catalog.lenses.push_back(std::move(lens));

            std::vector<std::string> extras;
            for (std::size_t idx : lens_header->extra_indices) extras.push_back(cells[idx]);
            catalog.lens_extras.cells.push_back(std::move(extras));
        }
    }

    if (catalog.cameras.empty()) {
        throw ParseError(source_name + ": catalog contains no cameras");
    }
    if (catalog.lenses.empty()) {
        throw ParseError(source_name + ": catalog contains no lenses");
    }
    return catalog;
}

CatalogFile parse_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open catalog " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog_text(buffer.str(), path.filename().string());
}

std::string serialize_catalog(const CatalogFile& catalog) {
    std::ostringstream out;
    auto emit_header = [&out](std::span<const char* const> columns,
                              const std::vector<std::string>& extras) {
        bool first = true;
        for (const char* col : columns) {
            out << (first ? "" : ",") << col;
            first = false;
        }
        for (const std::string& extra : extras) out << "," << extra;
        out << "\n";
    };
    auto emit_extras = [&out](const ExtraColumns& extras, std::size_t row) {
        if (row < extras.cells.size()) {
            for (const std::string& cell : extras.cells[row]) out << "," << cell;
        }
    };

    out << "[cameras]\n";
    const bool camera_interface =
        std::any_of(catalog.cameras.begin(), catalog.cameras.end(),
                    [](const CameraSpec& c) { return c.interface.has_value(); });
    std::vector<const char*> camera_cols(std::begin(kCameraColumns), std::end(kCameraColumns));
    if (camera_interface) camera_cols.push_back(kCameraOptional);
    emit_header(camera_cols, catalog.camera_extras.names);
    for (std::size_t i = 0; i < catalog.cameras.size(); ++i) {
        const CameraSpec& c = catalog.cameras[i];
        out << c.name << "," << format_minimal(c.sensor_width_mm) << ","
            << format_minimal(c.sensor_height_mm) << "," << c.res_width_px << ","
            << c.res_height_px << ","
            << (c.dynamic_range_db ? format_minimal(*c.dynamic_range_db) : "");
        if (camera_interface) out << "," << c.interface.value_or("");
        emit_extras(catalog.camera_extras, i);
        out << "\n";
    }

    out << "\n[lenses]\n";
    const bool lens_format = std::any_of(catalog.lenses.begin(), catalog.lenses.end(),
                                         [](const LensSpec& l) { return l.format.has_value(); });
    std::vector<const char*> lens_cols(std::begin(kLensColumns), std::end(kLensColumns));
    if (lens_format) lens_cols.push_back(kLensOptional);
    emit_header(lens_cols, catalog.lens_extras.names);
    for (std::size_t i = 0; i < catalog.lenses.size(); ++i) {
        const LensSpec& l = catalog.lenses[i];
        out << l.name << "," << format_minimal(l.focal_length_mm) << ","
            << format_minimal(l.min_f_stop) << ","
            << (l.distortion_pct ? format_minimal(*l.distortion_pct) : "");
        if (lens_format) out << "," << l.format.value_or("");
        emit_extras(catalog.lens_extras, i);
        out << "\n";
    }
    return out.str();
}

const CameraSpec& find_camera(const CatalogFile& catalog, const std::string& name) {
    const auto it = std::find_if(catalog.cameras.begin(), catalog.cameras.end(),
                                 [&](const CameraSpec& c) { return c.name == name; });
    if (it == catalog.cameras.end()) {
        throw ValidationError("camera '" + name + "' not found in the catalog");
    }
    return *it;
}

const LensSpec& find_lens(const CatalogFile& catalog, const std::string& name) {
    const auto it = std::find_if(catalog.lenses.begin(), catalog.lenses.end(),
                                 [&](const LensSpec& l) { return l.name == name; });
    if (it == catalog.lenses.end()) {
        throw ValidationError("lens '" + name + "' not found in the catalog");
    }
    return *it;
}

}  // namespace stereorig
