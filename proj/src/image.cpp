#include "vecmatch/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

namespace vecmatch {

std::string_view to_string(PnmErrorKind kind) noexcept {
    switch (kind) {
    case PnmErrorKind::MalformedHeader: return "malformed header";
    case PnmErrorKind::TruncatedPayload: return "truncated payload";
    case PnmErrorKind::MaxvalTooLarge: return "maxval too large";
    case PnmErrorKind::UnsupportedMagic: return "unsupported magic";
    }
    return "unknown";
}

PnmError::PnmError(PnmErrorKind kind, const std::string& detail)
    : Error("pnm: " + std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and comments, then reads one unsigned decimal token.
    std::size_t read_number(const char* what) {
        skip_separators();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw PnmError(PnmErrorKind::MalformedHeader, std::string("expected ") + what);
        }
        std::size_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
            if (value > (std::size_t{1} << 32)) {
                throw PnmError(PnmErrorKind::MalformedHeader, std::string(what) + " out of range");
            }
            ++pos_;
        }
        return value;
    }

    // The single whitespace byte between maxval and the raster.
    void consume_raster_separator() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw PnmError(PnmErrorKind::MalformedHeader, "missing whitespace after maxval");
        }
        ++pos_;
    }

    std::size_t position() const noexcept { return pos_; }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 2;  // past the magic
};

void append_header(std::vector<std::uint8_t>& out, const char* magic, std::size_t width,
                   std::size_t height) {
    const std::string header = std::string(magic) + "\n" + std::to_string(width) + " " +
                               std::to_string(height) + "\n255\n";
    out.insert(out.end(), header.begin(), header.end());
}

}  // namespace

AnyImage decode_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw PnmError(PnmErrorKind::UnsupportedMagic, "not a PNM stream");
    }
    const char kind = static_cast<char>(bytes[1]);
    if (kind != '5' && kind != '6') {
        throw PnmError(PnmErrorKind::UnsupportedMagic,
                       std::string("P") + kind + " (only binary P5/P6 are supported)");
    }

    HeaderReader reader(bytes);
    const std::size_t width = reader.read_number("width");
    const std::size_t height = reader.read_number("height");
    const std::size_t maxval = reader.read_number("maxval");
    if (width == 0 || height == 0) {
        throw PnmError(PnmErrorKind::MalformedHeader, "zero dimension");
    }
    if (maxval == 0) {
        throw PnmError(PnmErrorKind::MalformedHeader, "maxval must be positive");
    }
    if (maxval > 255) {
        throw PnmError(PnmErrorKind::MaxvalTooLarge, std::to_string(maxval));
    }
    reader.consume_raster_separator();

    const std::size_t channels = kind == '5' ? 1 : 3;
    const std::size_t needed = width * height * channels;
    const std::size_t start = reader.position();
    if (bytes.size() - start < needed) {
        throw PnmError(PnmErrorKind::TruncatedPayload,
                       "need " + std::to_string(needed) + " bytes, have " +
                           std::to_string(bytes.size() - start));
    }
    const auto raster = bytes.subspan(start, needed);

    if (kind == '5') {
        return GrayImage(height, width, std::vector<std::uint8_t>(raster.begin(), raster.end()));
    }
    std::vector<Rgb> pixels(width * height);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        pixels[i] = Rgb{raster[3 * i], raster[3 * i + 1], raster[3 * i + 2]};
    }
    return ColorImage(height, width, std::move(pixels));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& image) {
    std::vector<std::uint8_t> out;
    append_header(out, "P5", image.width(), image.height());
    out.insert(out.end(), image.pixels().begin(), image.pixels().end());
    return out;
}

std::vector<std::uint8_t> encode_ppm(const ColorImage& image) {
    std::vector<std::uint8_t> out;
    append_header(out, "P6", image.width(), image.height());
    out.reserve(out.size() + 3 * image.pixels().size());
    for (const Rgb& p : image.pixels()) {
        out.push_back(p.r);
        out.push_back(p.g);
        out.push_back(p.b);
    }
    return out;
}

GrayImage to_gray(const ColorImage& image, ColorMode mode) {
    GrayImage out(image.height(), image.width());
    auto dst = out.pixels();
    const auto src = image.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const unsigned r = src[i].r;
        const unsigned g = src[i].g;
        const unsigned b = src[i].b;
        unsigned v = 0;
        if (mode == ColorMode::Luma) {
            // Fixed-point BT.601 weights in thousandths, rounded half up.
            v = (299 * r + 587 * g + 114 * b + 500) / 1000;
        } else {
            // (r+g+b)/3 never lands on .5, so +1 before dividing rounds to nearest.
            v = (r + g + b + 1) / 3;
        }
        dst[i] = static_cast<std::uint8_t>(v > 255 ? 255 : v);
    }
    return out;
}

GrayImage as_gray(const AnyImage& image, ColorMode mode) {
    if (const auto* gray = std::get_if<GrayImage>(&image)) {
        return *gray;
    }
    return to_gray(std::get<ColorImage>(image), mode);
}

GrayImage crop(const GrayImage& image, const Rect& rect) {
    if (rect.height == 0 || rect.width == 0) {
        throw InvalidArgument("crop: rect must have positive height and width");
    }
    if (rect.top > image.height() || rect.height > image.height() - rect.top ||
        rect.left > image.width() || rect.width > image.width() - rect.left) {
        throw InvalidArgument("crop: rect exceeds image bounds");
    }
    std::vector<std::uint8_t> pixels;
    pixels.reserve(rect.height * rect.width);
    for (std::size_t r = 0; r < rect.height; ++r) {
        const auto src = image.row(rect.top + r).subspan(rect.left, rect.width);
        pixels.insert(pixels.end(), src.begin(), src.end());
    }
    return GrayImage(rect.height, rect.width, std::move(pixels));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error("write failed: " + path);
    }
}

GrayImage load_gray(const std::string& path, ColorMode mode) {
    return as_gray(decode_pnm(read_file(path)), mode);
}

void save_pgm(const std::string& path, const GrayImage& image) {
    write_file(path, encode_pgm(image));
}

}  // namespace vecmatch
