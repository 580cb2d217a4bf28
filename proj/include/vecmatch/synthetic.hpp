#pragma once

#include <cstddef>
#include <cstdint>

#include "vecmatch/image.hpp"

namespace vecmatch {

/// Multi-octave value-noise texture with fine grain, stretched to 0-255.
/// Deterministic for a given (height, width, seed) on every platform.
GrayImage synthetic_texture(std::size_t height, std::size_t width, std::uint64_t seed);

/// Independent uniform pixels in [0, max_value].
GrayImage random_gray(std::size_t height, std::size_t width, std::uint64_t seed,
                      std::uint8_t max_value = 255);

}  // namespace vecmatch
