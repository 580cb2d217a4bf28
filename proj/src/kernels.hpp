#pragma once

// Scoring kernels shared by the full-search and pyramid matchers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

#include "vecmatch/image.hpp"
#include "vecmatch/matchers.hpp"

namespace vecmatch::detail {

// Exact products of window sums (up to ~2^70 for large windows).
__extension__ typedef __int128 wide_int;

inline void require_fits(const GrayImage& s, const GrayImage& t, const char* who) {
    if (t.height() > s.height() || t.width() > s.width()) {
        throw InvalidArgument(std::string(who) + ": template " + std::to_string(t.height()) + "x" +
                              std::to_string(t.width()) + " larger than reference " +
                              std::to_string(s.height()) + "x" + std::to_string(s.width()));
    }
}

/// Inclusive offset rectangle [row_lo, row_hi] x [col_lo, col_hi].
struct OffsetRange {
    std::size_t row_lo = 0;
    std::size_t row_hi = 0;
    std::size_t col_lo = 0;
    std::size_t col_hi = 0;
};

struct Best {
    std::size_t row = 0;
    std::size_t col = 0;
    double score = 0.0;
    bool found = false;

    // Strict comparison keeps the first occurrence in scan order.
    void offer(std::size_t r, std::size_t c, double value, Direction dir) noexcept {
        if (std::isnan(value)) return;
        const bool better = !found || (dir == Direction::Minimize ? value < score : value > score);
        if (better) {
            row = r;
            col = c;
            score = value;
            found = true;
        }
    }
};

inline Best best_of(const ScoreMap& map, Direction dir) {
    Best best;
    for (std::size_t r = 0; r < map.rows; ++r) {
        for (std::size_t c = 0; c < map.cols; ++c) {
            best.offer(r, c, map(r, c), dir);
        }
    }
    return best;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ns() const {
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        return ns > 0 ? ns : 1;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Sum of |a[x] - b[x]| over one row; exact for n < 2^24.
inline std::uint32_t row_sad(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) noexcept {
    std::size_t x = 0;
    std::uint32_t total = 0;
#if defined(__SSE2__)
    __m128i acc = _mm_setzero_si128();
    for (; x + 16 <= n; x += 16) {
        const __m128i va = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + x));
        const __m128i vb = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + x));
        acc = _mm_add_epi64(acc, _mm_sad_epu8(va, vb));
    }
    total = static_cast<std::uint32_t>(_mm_cvtsi128_si32(acc) +
                                       _mm_cvtsi128_si32(_mm_unpackhi_epi64(acc, acc)));
#endif
    for (; x < n; ++x) {
        const int d = int{a[x]} - int{b[x]};
        total += static_cast<std::uint32_t>(d < 0 ? -d : d);
    }
    return total;
}

/// Sum of a[x] * b[x] over one row; exact for n < 66051.
inline std::uint32_t row_dot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) noexcept {
    std::uint32_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
        total += std::uint32_t{a[x]} * std::uint32_t{b[x]};
    }
    return total;
}

/// Exact 2-D SAD of 8-bit images.
class SadScorer {
public:
    SadScorer(const GrayImage& s, const GrayImage& t) : s_(s), t_(t) {}

    std::uint64_t score(std::size_t row, std::size_t col) const noexcept {
        std::uint64_t total = 0;
        for (std::size_t y = 0; y < t_.height(); ++y) {
            total += row_sad(s_.row(row + y).data() + col, t_.row(y).data(), t_.width());
        }
        return total;
    }

    /// Scores of offsets (row, 0..out.size()-1). Template-row-major so each
    /// reference row is swept once while it is hot in cache.
    void score_row(std::size_t row, std::span<std::uint64_t> out) const noexcept {
        std::fill(out.begin(), out.end(), 0);
        for (std::size_t y = 0; y < t_.height(); ++y) {
            const std::uint8_t* a = s_.row(row + y).data();
            const std::uint8_t* b = t_.row(y).data();
            for (std::size_t j = 0; j < out.size(); ++j) {
                out[j] += row_sad(a + j, b, t_.width());
            }
        }
    }

private:
    const GrayImage& s_;
    const GrayImage& t_;
};

/// NCC on 8-bit images. Window sums come from integral tables; the cross term
/// is a direct dot product. All sums are exact integers; only the final ratio
/// is floating point, so any two evaluations of one offset agree bit-for-bit.
class NccScorer {
public:
    NccScorer(const GrayImage& s, const GrayImage& t);

    /// NaN when the window has zero variance.
    double score(std::size_t row, std::size_t col) const noexcept {
        std::uint64_t cross = 0;
        for (std::size_t y = 0; y < t_.height(); ++y) {
            cross += row_dot(s_.row(row + y).data() + col, t_.row(y).data(), t_.width());
        }
        return correlation(row, col, cross);
    }

    /// Correlations of offsets (row, 0..out.size()-1).
    void score_row(std::size_t row, std::span<double> out, std::vector<std::uint64_t>& scratch) const;

private:
    double correlation(std::size_t row, std::size_t col, std::uint64_t cross) const noexcept;

    std::uint64_t window_sum(const std::vector<std::uint64_t>& table, std::size_t row,
                             std::size_t col) const noexcept {
        const std::size_t w = s_.width() + 1;
        const std::size_t r1 = row + t_.height();
        const std::size_t c1 = col + t_.width();
        return table[r1 * w + c1] - table[row * w + c1] - table[r1 * w + col] + table[row * w + col];
    }

    const GrayImage& s_;
    const GrayImage& t_;
    std::vector<std::uint64_t> sum_;
    std::vector<std::uint64_t> sum_sq_;
    std::uint64_t t_sum_ = 0;
    double t_var_ = 0.0;  // N * sum(T^2) - sum(T)^2, exact in 128 bits then rounded
};

/// Real-valued SAD and NCC used on coarse pyramid levels.
double real_sad(const RealImage& s, const RealImage& t, std::size_t row, std::size_t col) noexcept;

class RealNccScorer {
public:
    explicit RealNccScorer(const RealImage& t);
    /// False when every template pixel equals the mean (correlation undefined).
    bool template_ok() const noexcept { return t_norm_sq_ > tolerance_; }
    double score(const RealImage& s, std::size_t row, std::size_t col) const noexcept;

private:
    const RealImage& t_;
    std::vector<double> centered_;
    double t_norm_sq_ = 0.0;
    double tolerance_ = 0.0;
};

}  // namespace vecmatch::detail
