#include <algorithm>
#include <bit>
#include <cmath>

#include "kernels.hpp"
#include "vecmatch/matchers.hpp"

namespace vecmatch {

namespace detail {

double real_sad(const RealImage& s, const RealImage& t, std::size_t row, std::size_t col) noexcept {
    double total = 0.0;
    for (std::size_t y = 0; y < t.height; ++y) {
        const double* a = s.pixels.data() + (row + y) * s.width + col;
        const double* b = t.pixels.data() + y * t.width;
        double acc = 0.0;
        for (std::size_t x = 0; x < t.width; ++x) {
            acc += std::abs(a[x] - b[x]);
        }
        total += acc;
    }
    return total;
}

RealNccScorer::RealNccScorer(const RealImage& t) : t_(t), centered_(t.pixels) {
    double mean = 0.0;
    for (const double v : t.pixels) mean += v;
    mean /= static_cast<double>(t.pixels.size());
    for (double& v : centered_) {
        v -= mean;
        t_norm_sq_ += v * v;
    }
    tolerance_ = 1e-12 * static_cast<double>(t.pixels.size()) * std::max(1.0, mean * mean);
}

double RealNccScorer::score(const RealImage& s, std::size_t row, std::size_t col) const noexcept {
    double sum = 0.0;
    double sum_sq = 0.0;
    double cross = 0.0;
    for (std::size_t y = 0; y < t_.height; ++y) {
        const double* a = s.pixels.data() + (row + y) * s.width + col;
        const double* b = centered_.data() + y * t_.width;
        for (std::size_t x = 0; x < t_.width; ++x) {
            sum += a[x];
            sum_sq += a[x] * a[x];
            cross += a[x] * b[x];
        }
    }
    const double count = static_cast<double>(centered_.size());
    const double var = sum_sq - sum * sum / count;
    // Relative cutoff: a constant window leaves only rounding residue in var.
    if (var <= 1e-12 * std::max(1.0, sum_sq)) {
        return ScoreMap::degenerate();
    }
    // The template is centered, so the window mean drops out of the cross term.
    return std::clamp(cross / std::sqrt(var * t_norm_sq_), -1.0, 1.0);
}

}  // namespace detail

namespace {

RealImage to_real(const GrayImage& image) {
    RealImage out{image.height(), image.width(), {}};
    out.pixels.assign(image.pixels().begin(), image.pixels().end());
    return out;
}

RealImage halve(const RealImage& in) {
    RealImage out{in.height / 2, in.width / 2, {}};
    out.pixels.resize(out.height * out.width);
    for (std::size_t y = 0; y < out.height; ++y) {
        for (std::size_t x = 0; x < out.width; ++x) {
            out(y, x) = 0.25 * (in(2 * y, 2 * x) + in(2 * y, 2 * x + 1) + in(2 * y + 1, 2 * x) +
                                in(2 * y + 1, 2 * x + 1));
        }
    }
    return out;
}

// Neighborhood of the doubled coarse hit, clipped to [0, max].
std::pair<std::size_t, std::size_t> around(std::size_t coarse, std::size_t max,
                                           std::size_t radius) {
    const std::size_t center = std::min(2 * coarse, max);
    const std::size_t lo = center > radius ? center - radius : 0;
    const std::size_t hi = std::min(center + radius, max);
    return {lo, hi};
}

class PyramidSearch {
public:
    PyramidSearch(const GrayImage& s, const GrayImage& t, PyramidBase base, std::size_t levels)
        : s_(s), t_(t), base_(base), sp_(build_pyramid(s, levels)), tp_(build_pyramid(t, levels)) {
        if (base_ == PyramidBase::Ncc) {
            // Checks the full-resolution template; throws DegenerateTemplate.
            fine_ncc_.emplace(s_, t_);
        }
    }

    detail::Best run(std::size_t radius) {
        std::size_t top = sp_.levels.size() - 1;
        if (base_ == PyramidBase::Ncc) {
            // Averaging can flatten a textured template (e.g. a checkerboard);
            // start from the coarsest level where correlation is defined.
            while (top > 0 && !detail::RealNccScorer(tp_.levels[top]).template_ok()) --top;
        }

        detail::Best best = search_level(top, full_range(top));
        if (!best.found) {
            throw NoCandidate("pyramid: no valid candidate at the coarsest level");
        }
        for (std::size_t k = top; k-- > 0;) {
            const auto limits = full_range(k);
            const auto [r0, r1] = around(best.row, limits.row_hi, radius);
            const auto [c0, c1] = around(best.col, limits.col_hi, radius);
            detail::Best next = search_level(k, {r0, r1, c0, c1});
            if (!next.found) {
                // Whole neighborhood degenerate: widen to the full level.
                next = search_level(k, limits);
            }
            if (!next.found) {
                throw NoCandidate("pyramid: no valid candidate at level " + std::to_string(k));
            }
            best = next;
        }
        return best;
    }

private:
    detail::OffsetRange full_range(std::size_t level) const {
        const RealImage& s = sp_.levels[level];
        const RealImage& t = tp_.levels[level];
        return {0, s.height - t.height, 0, s.width - t.width};
    }

    detail::Best search_level(std::size_t level, const detail::OffsetRange& range) {
        detail::Best best;
        const Direction dir = base_ == PyramidBase::Ncc ? Direction::Maximize : Direction::Minimize;
        if (level == 0) {
            // Full resolution: reuse the exact integer kernels so scores match
            // the full-search matchers bit-for-bit.
            const detail::SadScorer sad(s_, t_);
            for (std::size_t r = range.row_lo; r <= range.row_hi; ++r) {
                for (std::size_t c = range.col_lo; c <= range.col_hi; ++c) {
                    const double v = base_ == PyramidBase::Sad ? static_cast<double>(sad.score(r, c))
                                                               : fine_ncc_->score(r, c);
                    best.offer(r, c, v, dir);
                }
            }
            return best;
        }
        const RealImage& s = sp_.levels[level];
        const RealImage& t = tp_.levels[level];
        std::optional<detail::RealNccScorer> ncc;
        if (base_ == PyramidBase::Ncc) ncc.emplace(t);
        for (std::size_t r = range.row_lo; r <= range.row_hi; ++r) {
            for (std::size_t c = range.col_lo; c <= range.col_hi; ++c) {
                const double v = ncc ? ncc->score(s, r, c) : detail::real_sad(s, t, r, c);
                best.offer(r, c, v, dir);
            }
        }
        return best;
    }

    const GrayImage& s_;
    const GrayImage& t_;
    PyramidBase base_;
    ImagePyramid sp_;
    ImagePyramid tp_;
    std::optional<detail::NccScorer> fine_ncc_;
};

}  // namespace

ImagePyramid build_pyramid(const GrayImage& image, std::size_t levels) {
    if (levels == 0) {
        throw InvalidArgument("pyramid: level count must be at least 1");
    }
    const std::size_t shrink = std::size_t{1} << std::min<std::size_t>(levels - 1, 63);
    if (levels > 64 || image.height() / shrink == 0 || image.width() / shrink == 0) {
        throw InvalidArgument("pyramid: " + std::to_string(levels) + " levels too many for " +
                              std::to_string(image.height()) + "x" + std::to_string(image.width()));
    }
    ImagePyramid pyramid;
    pyramid.levels.reserve(levels);
    pyramid.levels.push_back(to_real(image));
    for (std::size_t k = 1; k < levels; ++k) {
        pyramid.levels.push_back(halve(pyramid.levels.back()));
    }
    return pyramid;
}

std::size_t auto_pyramid_levels(std::size_t template_height, std::size_t template_width) noexcept {
    const std::size_t side = std::min(template_height, template_width);
    // floor(log2(side / 8)) + 1 == bit_width(side / 8) whenever side >= 8.
    return std::max<std::size_t>(1, std::bit_width(side / 8));
}

MatchResult match_pyramid(const GrayImage& s, const GrayImage& t, PyramidBase base,
                          const PyramidOptions& options) {
    const std::size_t levels = options.levels.value_or(auto_pyramid_levels(t.height(), t.width()));
    const Algorithm algorithm = base == PyramidBase::Sad ? Algorithm::SadPyramid
                                                         : Algorithm::NccPyramid;
    if (levels == 1) {
        MatchResult result = base == PyramidBase::Sad ? match_full_sad(s, t).result
                                                      : match_full_ncc(s, t).result;
        result.algorithm = algorithm;
        return result;
    }

    const detail::Stopwatch clock;
    detail::require_fits(s, t, "match_pyramid");
    PyramidSearch search(s, t, base, levels);
    const detail::Best best = search.run(options.radius);

    MatchResult result;
    result.row = best.row;
    result.col = best.col;
    result.score = best.score;
    result.algorithm = algorithm;
    result.direction = direction_of(algorithm);
    result.elapsed_ns = clock.elapsed_ns();
    return result;
}

}  // namespace vecmatch
