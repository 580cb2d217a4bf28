#pragma once

#include <algorithm>
#include <cmath>

#include "vecmatch/score_map.hpp"

namespace vecmatch::testing {

/// |a - b| <= tol * max(1, |a|, |b|); NaN only matches NaN.
inline bool close(double a, double b, double tol) {
    if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool same_shape(const ScoreMap& a, const ScoreMap& b) {
    return a.rows == b.rows && a.cols == b.cols && a.scores.size() == b.scores.size();
}

inline bool bit_equal(const ScoreMap& a, const ScoreMap& b) {
    return same_shape(a, b) && std::equal(a.scores.begin(), a.scores.end(), b.scores.begin());
}

inline bool close_maps(const ScoreMap& a, const ScoreMap& b, double tol) {
    if (!same_shape(a, b)) return false;
    for (std::size_t k = 0; k < a.scores.size(); ++k) {
        if (!close(a.scores[k], b.scores[k], tol)) return false;
    }
    return true;
}

}  // namespace vecmatch::testing
