#pragma once

// Brute-force reference implementations. Every sum is recomputed from raw
// pixels at every offset; nothing here calls into the fast matchers.

#include "vecmatch/image.hpp"
#include "vecmatch/projection.hpp"
#include "vecmatch/score_map.hpp"

namespace vecmatch::oracle {

ScoreMap naive_projected_map(const GrayImage& s, const GrayImage& t, VectorMetric metric);
ScoreMap naive_sad_map(const GrayImage& s, const GrayImage& t);
/// 2-D sum of squared differences (no fast-path counterpart; used for bounds).
ScoreMap naive_ssd_map(const GrayImage& s, const GrayImage& t);
/// Mean-centered correlation evaluated literally; NaN where the window is constant.
/// Throws DegenerateTemplate for a constant template.
ScoreMap naive_ncc_map(const GrayImage& s, const GrayImage& t);

}  // namespace vecmatch::oracle
