#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vecmatch/error.hpp"

namespace vecmatch {

/// 8-bit single-channel image, row-major, top row first.
class GrayImage {
public:
    GrayImage(std::size_t height, std::size_t width, std::uint8_t fill = 0)
        : height_(height), width_(width), pixels_(height * width, fill) {
        if (height == 0 || width == 0) {
            throw InvalidArgument("GrayImage: dimensions must be positive");
        }
    }

    GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels)
        : height_(height), width_(width), pixels_(std::move(pixels)) {
        if (height == 0 || width == 0) {
            throw InvalidArgument("GrayImage: dimensions must be positive");
        }
        if (pixels_.size() != height * width) {
            throw InvalidArgument("GrayImage: pixel count does not match dimensions");
        }
    }

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept {
        return pixels_[r * width_ + c];
    }
    std::uint8_t& operator()(std::size_t r, std::size_t c) noexcept {
        return pixels_[r * width_ + c];
    }

    std::span<const std::uint8_t> row(std::size_t r) const noexcept {
        return {pixels_.data() + r * width_, width_};
    }
    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<std::uint8_t> pixels_;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

class ColorImage {
public:
    ColorImage(std::size_t height, std::size_t width, std::vector<Rgb> pixels)
        : height_(height), width_(width), pixels_(std::move(pixels)) {
        if (height == 0 || width == 0) {
            throw InvalidArgument("ColorImage: dimensions must be positive");
        }
        if (pixels_.size() != height * width) {
            throw InvalidArgument("ColorImage: pixel count does not match dimensions");
        }
    }

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    const Rgb& operator()(std::size_t r, std::size_t c) const noexcept {
        return pixels_[r * width_ + c];
    }
    std::span<const Rgb> pixels() const noexcept { return pixels_; }

    friend bool operator==(const ColorImage&, const ColorImage&) = default;

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<Rgb> pixels_;
};

/// Axis-aligned region, 0-based (top, left).
struct Rect {
    std::size_t top = 0;
    std::size_t left = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    friend bool operator==(const Rect&, const Rect&) = default;
};

using AnyImage = std::variant<GrayImage, ColorImage>;

enum class PnmErrorKind {
    MalformedHeader,
    TruncatedPayload,
    MaxvalTooLarge,
    UnsupportedMagic,
};

std::string_view to_string(PnmErrorKind kind) noexcept;

class PnmError : public Error {
public:
    PnmError(PnmErrorKind kind, const std::string& detail);
    PnmErrorKind kind() const noexcept { return kind_; }

private:
    PnmErrorKind kind_;
};

/// Decodes binary PGM (P5) or PPM (P6) with maxval <= 255.
/// Header tokens may be separated by any whitespace and '#' comments; exactly
/// one whitespace byte separates maxval from the raster.
AnyImage decode_pnm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_pgm(const GrayImage& image);
std::vector<std::uint8_t> encode_ppm(const ColorImage& image);

enum class ColorMode { Luma, ChannelSum };

/// luma: round(0.299 R + 0.587 G + 0.114 B); channel-sum: round((R+G+B)/3).
GrayImage to_gray(const ColorImage& image, ColorMode mode = ColorMode::Luma);

/// Gray images pass through; color images go through to_gray.
GrayImage as_gray(const AnyImage& image, ColorMode mode = ColorMode::Luma);

GrayImage crop(const GrayImage& image, const Rect& rect);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

GrayImage load_gray(const std::string& path, ColorMode mode = ColorMode::Luma);
void save_pgm(const std::string& path, const GrayImage& image);

}  // namespace vecmatch
