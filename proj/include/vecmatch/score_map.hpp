#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace vecmatch {

/// Dense grid of scores over every valid top-left offset: (p-m+1) x (q-n+1).
/// NaN marks a degenerate cell (NCC window with zero variance).
struct ScoreMap {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> scores;

    ScoreMap() = default;
    ScoreMap(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), scores(r * c, fill) {}

    double operator()(std::size_t r, std::size_t c) const noexcept { return scores[r * cols + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return scores[r * cols + c]; }

    bool is_degenerate(std::size_t r, std::size_t c) const noexcept {
        return std::isnan((*this)(r, c));
    }

    static constexpr double degenerate() noexcept {
        return std::numeric_limits<double>::quiet_NaN();
    }
};

}  // namespace vecmatch
