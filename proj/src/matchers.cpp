#include "vecmatch/matchers.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "kernels.hpp"

namespace vecmatch {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames{{
    {Algorithm::Ncc, "ncc"},
    {Algorithm::Sad, "sad"},
    {Algorithm::NccPyramid, "nccp"},
    {Algorithm::SadPyramid, "sadp"},
    {Algorithm::VecSsd, "vec-ssd"},
    {Algorithm::VecSad, "vec-sad"},
    {Algorithm::VecEuclid, "vec-euclid"},
}};

Algorithm algorithm_for(VectorMetric metric) noexcept {
    switch (metric) {
    case VectorMetric::Ssd: return Algorithm::VecSsd;
    case VectorMetric::Sad: return Algorithm::VecSad;
    case VectorMetric::Euclidean: return Algorithm::VecEuclid;
    }
    return Algorithm::VecSsd;
}

MatchResult make_result(const detail::Best& best, Algorithm algorithm) {
    MatchResult result;
    result.row = best.row;
    result.col = best.col;
    result.score = best.score;
    result.algorithm = algorithm;
    result.direction = direction_of(algorithm);
    return result;
}

template <VectorMetric Metric>
void fill_projected(const ColumnSumTable& table, const ColumnVector& nt, ScoreMap& map) {
    const std::size_t n = nt.size();
    std::vector<std::uint32_t> window(table.image_width());
    for (std::size_t i = 0; i < map.rows; ++i) {
        table.window_row(i, window);
        double* out = map.scores.data() + i * map.cols;
        for (std::size_t j = 0; j < map.cols; ++j) {
            const std::uint32_t* nw = window.data() + j;
            // |d| fits 32 bits and |d|^2 fits 64, so the unsigned form is
            // exact and vectorizes (32x32->64 multiplies).
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint32_t d = nw[c] > nt[c] ? nw[c] - nt[c] : nt[c] - nw[c];
                if constexpr (Metric == VectorMetric::Sad) {
                    acc += d;
                } else {
                    acc += std::uint64_t{d} * d;
                }
            }
            if constexpr (Metric == VectorMetric::Euclidean) {
                out[j] = std::sqrt(static_cast<double>(acc));
            } else {
                out[j] = static_cast<double>(acc);
            }
        }
    }
}

ScoreMap projected_map(const GrayImage& s, const GrayImage& t, VectorMetric metric) {
    detail::require_fits(s, t, "match_projected");
    const ColumnSumTable table(s, t.height());
    const ColumnVector nt = project_template(t);
    ScoreMap map(s.height() - t.height() + 1, s.width() - t.width() + 1);
    switch (metric) {
    case VectorMetric::Ssd: fill_projected<VectorMetric::Ssd>(table, nt, map); break;
    case VectorMetric::Sad: fill_projected<VectorMetric::Sad>(table, nt, map); break;
    case VectorMetric::Euclidean: fill_projected<VectorMetric::Euclidean>(table, nt, map); break;
    }
    return map;
}

ScoreMap sad_map(const GrayImage& s, const GrayImage& t) {
    detail::require_fits(s, t, "match_full_sad");
    const detail::SadScorer scorer(s, t);
    ScoreMap map(s.height() - t.height() + 1, s.width() - t.width() + 1);
    std::vector<std::uint64_t> row(map.cols);
    for (std::size_t i = 0; i < map.rows; ++i) {
        scorer.score_row(i, row);
        for (std::size_t j = 0; j < map.cols; ++j) {
            map(i, j) = static_cast<double>(row[j]);
        }
    }
    return map;
}

ScoreMap ncc_map(const GrayImage& s, const GrayImage& t) {
    detail::require_fits(s, t, "match_full_ncc");
    const detail::NccScorer scorer(s, t);
    ScoreMap map(s.height() - t.height() + 1, s.width() - t.width() + 1);
    std::vector<std::uint64_t> scratch;
    for (std::size_t i = 0; i < map.rows; ++i) {
        scorer.score_row(i, std::span(map.scores).subspan(i * map.cols, map.cols), scratch);
    }
    return map;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
    for (const auto& [a, name] : kNames) {
        if (a == algorithm) return name;
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (const auto& [a, n] : kNames) {
        if (n == name) return a;
    }
    return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = [] {
        std::vector<Algorithm> v;
        for (const auto& entry : kNames) v.push_back(entry.first);
        return v;
    }();
    return all;
}

Direction direction_of(Algorithm algorithm) noexcept {
    return algorithm == Algorithm::Ncc || algorithm == Algorithm::NccPyramid ? Direction::Maximize
                                                                             : Direction::Minimize;
}

bool is_pyramid(Algorithm algorithm) noexcept {
    return algorithm == Algorithm::NccPyramid || algorithm == Algorithm::SadPyramid;
}

bool has_integer_score(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::Sad:
    case Algorithm::SadPyramid:
    case Algorithm::VecSsd:
    case Algorithm::VecSad: return true;
    default: return false;
    }
}

namespace detail {

NccScorer::NccScorer(const GrayImage& s, const GrayImage& t) : s_(s), t_(t) {
    const std::size_t w = s.width() + 1;
    sum_.assign((s.height() + 1) * w, 0);
    sum_sq_.assign((s.height() + 1) * w, 0);
    for (std::size_t r = 0; r < s.height(); ++r) {
        const auto src = s.row(r);
        std::uint64_t run = 0;
        std::uint64_t run_sq = 0;
        for (std::size_t c = 0; c < s.width(); ++c) {
            run += src[c];
            run_sq += std::uint64_t{src[c]} * src[c];
            sum_[(r + 1) * w + c + 1] = sum_[r * w + c + 1] + run;
            sum_sq_[(r + 1) * w + c + 1] = sum_sq_[r * w + c + 1] + run_sq;
        }
    }

    std::uint64_t t_sq = 0;
    for (const std::uint8_t v : t.pixels()) {
        t_sum_ += v;
        t_sq += std::uint64_t{v} * v;
    }
    const auto count = static_cast<wide_int>(t.size());
    const wide_int var = count * t_sq - static_cast<wide_int>(t_sum_) * t_sum_;
    if (var == 0) {
        throw DegenerateTemplate("ncc: degenerate template (constant intensity, zero variance)");
    }
    t_var_ = static_cast<double>(var);
}

void NccScorer::score_row(std::size_t row, std::span<double> out,
                          std::vector<std::uint64_t>& scratch) const {
    scratch.assign(out.size(), 0);
    for (std::size_t y = 0; y < t_.height(); ++y) {
        const std::uint8_t* a = s_.row(row + y).data();
        const std::uint8_t* b = t_.row(y).data();
        for (std::size_t j = 0; j < out.size(); ++j) {
            scratch[j] += row_dot(a + j, b, t_.width());
        }
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = correlation(row, j, scratch[j]);
    }
}

double NccScorer::correlation(std::size_t row, std::size_t col, std::uint64_t cross) const noexcept {
    const auto count = static_cast<wide_int>(t_.size());
    const auto s_sum = static_cast<wide_int>(window_sum(sum_, row, col));
    const auto s_sq = static_cast<wide_int>(window_sum(sum_sq_, row, col));
    const wide_int s_var = count * s_sq - s_sum * s_sum;
    if (s_var == 0) {
        return ScoreMap::degenerate();
    }
    const wide_int num = count * static_cast<wide_int>(cross) - s_sum * static_cast<wide_int>(t_sum_);
    const double lambda =
        static_cast<double>(num) / std::sqrt(static_cast<double>(s_var) * t_var_);
    return std::clamp(lambda, -1.0, 1.0);
}

}  // namespace detail

MatchOutput match_projected(const GrayImage& s, const GrayImage& t, VectorMetric metric) {
    const detail::Stopwatch clock;
    MatchOutput out;
    out.map = projected_map(s, t, metric);
    const Algorithm algorithm = algorithm_for(metric);
    out.result = make_result(detail::best_of(out.map, Direction::Minimize), algorithm);
    out.result.elapsed_ns = clock.elapsed_ns();
    return out;
}

MatchOutput match_full_sad(const GrayImage& s, const GrayImage& t) {
    const detail::Stopwatch clock;
    MatchOutput out;
    out.map = sad_map(s, t);
    out.result = make_result(detail::best_of(out.map, Direction::Minimize), Algorithm::Sad);
    out.result.elapsed_ns = clock.elapsed_ns();
    return out;
}

MatchOutput match_full_ncc(const GrayImage& s, const GrayImage& t) {
    const detail::Stopwatch clock;
    MatchOutput out;
    out.map = ncc_map(s, t);
    const detail::Best best = detail::best_of(out.map, Direction::Maximize);
    if (!best.found) {
        throw NoCandidate("ncc: every candidate window has zero variance");
    }
    out.result = make_result(best, Algorithm::Ncc);
    out.result.elapsed_ns = clock.elapsed_ns();
    return out;
}

MatchResult match(const GrayImage& s, const GrayImage& t, Algorithm algorithm,
                  const PyramidOptions& options) {
    switch (algorithm) {
    case Algorithm::Ncc: return match_full_ncc(s, t).result;
    case Algorithm::Sad: return match_full_sad(s, t).result;
    case Algorithm::NccPyramid: return match_pyramid(s, t, PyramidBase::Ncc, options);
    case Algorithm::SadPyramid: return match_pyramid(s, t, PyramidBase::Sad, options);
    case Algorithm::VecSsd: return match_projected(s, t, VectorMetric::Ssd).result;
    case Algorithm::VecSad: return match_projected(s, t, VectorMetric::Sad).result;
    case Algorithm::VecEuclid: return match_projected(s, t, VectorMetric::Euclidean).result;
    }
    throw InvalidArgument("match: unknown algorithm");
}

ScoreMap score_map_only(const GrayImage& s, const GrayImage& t, Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::Ncc: return ncc_map(s, t);
    case Algorithm::Sad: return sad_map(s, t);
    case Algorithm::VecSsd: return projected_map(s, t, VectorMetric::Ssd);
    case Algorithm::VecSad: return projected_map(s, t, VectorMetric::Sad);
    case Algorithm::VecEuclid: return projected_map(s, t, VectorMetric::Euclidean);
    case Algorithm::NccPyramid:
    case Algorithm::SadPyramid: break;
    }
    throw InvalidArgument("score map: pyramid algorithm " + std::string(to_string(algorithm)) +
                          " has no dense score map");
}

}  // namespace vecmatch
