#include "vecmatch/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace vecmatch {

namespace {

// splitmix64 finalizer; used as a stateless hash so results never depend on
// library distribution implementations.
std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit(std::uint64_t h) noexcept { return static_cast<double>(h >> 11) * 0x1.0p-53; }

double lattice(std::uint64_t seed, std::uint64_t octave, std::uint64_t gy, std::uint64_t gx) {
    return unit(mix(mix(mix(seed ^ (octave << 56)) ^ gy) ^ (gx * 0x632be59bd9b4e019ULL)));
}

double smooth(double t) noexcept { return t * t * (3.0 - 2.0 * t); }

}  // namespace

GrayImage synthetic_texture(std::size_t height, std::size_t width, std::uint64_t seed) {
    struct Octave {
        double cell;
        double amplitude;
    };
    constexpr std::array<Octave, 5> octaves{{{64, 1.0}, {32, 0.6}, {16, 0.4}, {8, 0.25}, {4, 0.15}}};
    constexpr double grain = 0.08;

    std::vector<double> field(height * width, 0.0);
    for (std::size_t o = 0; o < octaves.size(); ++o) {
        const double cell = octaves[o].cell;
        for (std::size_t y = 0; y < height; ++y) {
            const double fy = static_cast<double>(y) / cell;
            const auto gy = static_cast<std::uint64_t>(fy);
            const double ty = smooth(fy - static_cast<double>(gy));
            for (std::size_t x = 0; x < width; ++x) {
                const double fx = static_cast<double>(x) / cell;
                const auto gx = static_cast<std::uint64_t>(fx);
                const double tx = smooth(fx - static_cast<double>(gx));
                const double top = std::lerp(lattice(seed, o, gy, gx), lattice(seed, o, gy, gx + 1), tx);
                const double bottom =
                    std::lerp(lattice(seed, o, gy + 1, gx), lattice(seed, o, gy + 1, gx + 1), tx);
                field[y * width + x] += octaves[o].amplitude * std::lerp(top, bottom, ty);
            }
        }
    }
    for (std::size_t i = 0; i < field.size(); ++i) {
        field[i] += grain * (unit(mix(seed ^ mix(i + 0x5151))) - 0.5);
    }

    const auto [lo, hi] = std::minmax_element(field.begin(), field.end());
    const double low = *lo;
    const double span = std::max(*hi - low, 1e-12);
    GrayImage out(height, width);
    auto px = out.pixels();
    for (std::size_t i = 0; i < field.size(); ++i) {
        px[i] = static_cast<std::uint8_t>(std::lround(255.0 * (field[i] - low) / span));
    }
    return out;
}

GrayImage random_gray(std::size_t height, std::size_t width, std::uint64_t seed,
                      std::uint8_t max_value) {
    GrayImage out(height, width);
    std::uint64_t state = seed;
    for (auto& p : out.pixels()) {
        state = mix(state);
        p = static_cast<std::uint8_t>(state % (std::uint64_t{max_value} + 1));
    }
    return out;
}

}  // namespace vecmatch
