#include "stereorig/image_io.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace stereorig {

namespace {

void check_dims(int width, int height, const std::string& where) {
    if (width <= 0 || height <= 0) {
        throw FormatError(where + ": image dimensions must be positive");
    }
    // 1 GB of RGB data is far beyond any sane audit input
    if (static_cast<long long>(width) * height > (1LL << 30) / 3) {
        throw FormatError(where + ": image dimensions unreasonably large");
    }
}

std::vector<std::uint8_t> read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

// --- PPM (P6, 8-bit) ---------------------------------------------------

class PpmScanner {
public:
    explicit PpmScanner(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    // next whitespace-delimited token; '#' starts a comment to end of line
    std::string token() {
        while (pos_ < bytes_.size()) {
            const char c = static_cast<char>(bytes_[pos_]);
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
        std::string tok;
        while (pos_ < bytes_.size() &&
               !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            tok += static_cast<char>(bytes_[pos_++]);
        }
        return tok;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

int parse_ppm_int(PpmScanner& scan, const std::string& where, const char* what) {
    const std::string tok = scan.token();
    try {
        std::size_t used = 0;
        const int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw FormatError(where + ": malformed PPM " + what + " '" + tok + "'");
    }
}

Rgb8Image load_ppm(const std::vector<std::uint8_t>& bytes, const std::string& where) {
    PpmScanner scan(bytes);
    const std::string magic = scan.token();
    if (magic != "P6") {
        throw FormatError(where + ": only binary (P6) PPM is supported");
    }
    Rgb8Image img;
    img.width = parse_ppm_int(scan, where, "width");
    img.height = parse_ppm_int(scan, where, "height");
    const int maxval = parse_ppm_int(scan, where, "max value");
    check_dims(img.width, img.height, where);
    if (maxval != 255) {
        throw FormatError(where + ": only 8-bit images are supported (maxval 255, got " +
                          std::to_string(maxval) + ")");
    }
    scan.advance(1);  // single whitespace byte after the header
    const std::size_t need = img.pixel_count() * 3;
    if (bytes.size() - scan.pos() < need) {
        throw FormatError(where + ": truncated PPM pixel data");
    }
    img.data.assign(bytes.begin() + static_cast<std::ptrdiff_t>(scan.pos()),
                    bytes.begin() + static_cast<std::ptrdiff_t>(scan.pos() + need));
    return img;
}

// --- PNG ----------------------------------------------------------------

struct PngReadState {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReadState() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct MemoryReader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos;
};

void png_memory_read(png_structp png, png_bytep out, png_size_t count) {
    auto* reader = static_cast<MemoryReader*>(png_get_io_ptr(png));
    if (reader->pos + count > reader->size) {
        png_error(png, "read past end of buffer");
    }
    std::memcpy(out, reader->data + reader->pos, count);
    reader->pos += count;
}

Rgb8Image load_png(const std::vector<std::uint8_t>& bytes, const std::string& where) {
    PngReadState state;
    state.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!state.png) throw FormatError(where + ": libpng initialisation failed");
    state.info = png_create_info_struct(state.png);
    if (!state.info) throw FormatError(where + ": libpng initialisation failed");

    if (setjmp(png_jmpbuf(state.png))) {
        throw FormatError(where + ": malformed PNG data");
    }

    MemoryReader reader{bytes.data(), bytes.size(), 0};
    png_set_read_fn(state.png, &reader, png_memory_read);
    png_read_info(state.png, state.info);

    const png_uint_32 width = png_get_image_width(state.png, state.info);
    const png_uint_32 height = png_get_image_height(state.png, state.info);
    const int bit_depth = png_get_bit_depth(state.png, state.info);
    const int color_type = png_get_color_type(state.png, state.info);
    if (bit_depth == 16) {
        throw FormatError(where + ": only 8-bit images are supported (got 16-bit PNG)");
    }

    // normalise everything to 8-bit RGB
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(state.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(state.png);
    if (png_get_valid(state.png, state.info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(state.png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(state.png);
    png_set_strip_alpha(state.png);
    png_read_update_info(state.png, state.info);

    if (png_get_rowbytes(state.png, state.info) != width * 3) {
        throw FormatError(where + ": unsupported PNG layout");
    }

    Rgb8Image img;
    img.width = static_cast<int>(width);
    img.height = static_cast<int>(height);
    check_dims(img.width, img.height, where);
    img.data.resize(img.pixel_count() * 3);
    std::vector<png_bytep> rows(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = img.data.data() + static_cast<std::size_t>(y) * width * 3;
    }
    png_read_image(state.png, rows.data());
    png_read_end(state.png, nullptr);
    return img;
}

// --- JPEG ---------------------------------------------------------------

// libjpeg reports errors through a callback inside C frames; the usual
// setjmp/longjmp escape keeps C++ exceptions out of those frames.
struct JpegErrorMgr {
    jpeg_error_mgr pub;
    jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    longjmp(err->jump, 1);
}

Rgb8Image load_jpeg(const std::vector<std::uint8_t>& bytes, const std::string& where) {
    jpeg_decompress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;

    Rgb8Image img;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw FormatError(where + ": malformed JPEG data: " + err.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    if (cinfo.data_precision != 8) {
        jpeg_destroy_decompress(&cinfo);
        throw FormatError(where + ": only 8-bit images are supported");
    }

    img.width = static_cast<int>(cinfo.output_width);
    img.height = static_cast<int>(cinfo.output_height);
    check_dims(img.width, img.height, where);
    img.data.resize(img.pixel_count() * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = img.data.data() +
                       static_cast<std::size_t>(cinfo.output_scanline) * img.width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

}  // namespace

Rgb8Image Rgb8Image::filled(int width, int height, std::uint8_t r, std::uint8_t g,
                            std::uint8_t b) {
    Rgb8Image img;
    img.width = width;
    img.height = height;
    img.data.resize(img.pixel_count() * 3);
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        img.data[i * 3] = r;
        img.data[i * 3 + 1] = g;
        img.data[i * 3 + 2] = b;
    }
    return img;
}

LoadedImage load_rgb8(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_all(path);
    const std::string where = path.string();
    if (bytes.size() < 8) {
        throw FormatError(where + ": file too short to be an image");
    }

    LoadedImage loaded;
    static const std::uint8_t png_magic[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (std::memcmp(bytes.data(), png_magic, 8) == 0) {
        loaded.image = load_png(bytes, where);
        loaded.format = "png";
        loaded.lossless = true;
    } else if (bytes[0] == 0xff && bytes[1] == 0xd8) {
        loaded.image = load_jpeg(bytes, where);
        loaded.format = "jpeg";
        loaded.lossless = false;
    } else if (bytes[0] == 'P' && (bytes[1] == '6' || bytes[1] == '3')) {
        loaded.image = load_ppm(bytes, where);
        loaded.format = "ppm";
        loaded.lossless = true;
    } else {
        throw FormatError(where + ": unrecognised image format (PNG, JPEG, or P6 PPM expected)");
    }
    return loaded;
}

void save_ppm(const std::filesystem::path& path, const Rgb8Image& image) {
    check_dims(image.width, image.height, path.string());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << "P6\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    if (!out) {
        throw IoError("short write to " + path.string());
    }
}

void save_png(const std::filesystem::path& path, const Rgb8Image& image) {
    check_dims(image.width, image.height, path.string());
    std::FILE* fp = std::fopen(path.string().c_str(), "wb");
    if (!fp) {
        throw IoError("cannot write " + path.string());
    }
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        std::fclose(fp);
        throw FormatError("libpng initialisation failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw IoError("PNG write failed for " + path.string());
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
                 static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < image.height; ++y) {
        png_write_row(png, const_cast<png_bytep>(image.pixel(0, y)));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace stereorig
