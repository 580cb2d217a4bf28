#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vecmatch/image.hpp"
#include "vecmatch/projection.hpp"
#include "vecmatch/score_map.hpp"

namespace vecmatch {

/// The seven search algorithms. Names round-trip through to_string/parse_algorithm:
/// ncc, sad, nccp, sadp, vec-ssd, vec-sad, vec-euclid.
enum class Algorithm { Ncc, Sad, NccPyramid, SadPyramid, VecSsd, VecSad, VecEuclid };

/// NCC maximizes correlation; every other algorithm minimizes a distance.
enum class Direction { Minimize, Maximize };

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
const std::vector<Algorithm>& all_algorithms();

Direction direction_of(Algorithm algorithm) noexcept;
bool is_pyramid(Algorithm algorithm) noexcept;
/// True when the reported score is an exact integer (SAD/SSD families).
bool has_integer_score(Algorithm algorithm) noexcept;

struct MatchResult {
    std::size_t row = 0;
    std::size_t col = 0;
    double score = 0.0;
    Algorithm algorithm = Algorithm::VecSsd;
    Direction direction = Direction::Minimize;
    std::int64_t elapsed_ns = 0;
};

struct MatchOutput {
    MatchResult result;
    ScoreMap map;
};

/// Column-sum projection matcher: every window is reduced to its column-sum
/// vector and compared to the template's with `metric`.
MatchOutput match_projected(const GrayImage& s, const GrayImage& t, VectorMetric metric);

/// Exhaustive 2-D sum of absolute differences.
MatchOutput match_full_sad(const GrayImage& s, const GrayImage& t);

/// Exhaustive normalized cross correlation. Zero-variance windows are NaN in
/// the map and never win. Throws DegenerateTemplate for a constant template and
/// NoCandidate when every window is constant.
MatchOutput match_full_ncc(const GrayImage& s, const GrayImage& t);

/// Row-major real-valued image used for pyramid levels.
struct RealImage {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> pixels;

    double operator()(std::size_t r, std::size_t c) const noexcept { return pixels[r * width + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return pixels[r * width + c]; }
};

/// levels[0] is the source image; levels[k] is the 2x2 mean reduction of
/// levels[k-1], with odd trailing rows/cols dropped.
struct ImagePyramid {
    std::vector<RealImage> levels;
};

ImagePyramid build_pyramid(const GrayImage& image, std::size_t levels);

/// max(1, floor(log2(min(m, n) / 8)) + 1): the coarsest template keeps >= 8 px per side.
std::size_t auto_pyramid_levels(std::size_t template_height, std::size_t template_width) noexcept;

enum class PyramidBase { Sad, Ncc };

struct PyramidOptions {
    std::optional<std::size_t> levels;  // nullopt: auto_pyramid_levels
    std::size_t radius = 2;             // Chebyshev radius around the doubled coarse hit
};

/// Coarse-to-fine search: full search at the coarsest level, then a
/// (2r+1)^2 neighborhood around the doubled previous best at each finer level.
/// One level is exactly the base full-search matcher.
MatchResult match_pyramid(const GrayImage& s, const GrayImage& t, PyramidBase base,
                          const PyramidOptions& options = {});

/// Dispatches to the matcher named by `algorithm`.
MatchResult match(const GrayImage& s, const GrayImage& t, Algorithm algorithm,
                  const PyramidOptions& options = {});

/// Full score map of a non-pyramid algorithm; throws InvalidArgument for nccp/sadp.
ScoreMap score_map_only(const GrayImage& s, const GrayImage& t, Algorithm algorithm);

}  // namespace vecmatch
