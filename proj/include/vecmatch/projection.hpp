#pragma once

// Column-sum projection: an m x n image becomes the n-vector of its column
// sums, and candidate windows are compared through those vectors.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vecmatch/image.hpp"

namespace vecmatch {

/// Per-column intensity sums of an m-row block; each entry <= m * 255.
using ColumnVector = std::vector<std::uint32_t>;

enum class VectorMetric { Ssd, Sad, Euclidean };

std::string_view to_string(VectorMetric metric) noexcept;

/// Column sums of the whole template.
ColumnVector project_template(const GrayImage& t);

/// Vertical prefix sums of a reference image, (p+1) x q, with
/// prefix(r, c) = sum of rows [0, r) of column c. Bound to one window height m
/// so any m-row column sum is a single subtraction.
class ColumnSumTable {
public:
    ColumnSumTable(const GrayImage& s, std::size_t window_height);

    std::size_t image_height() const noexcept { return rows_; }
    std::size_t image_width() const noexcept { return cols_; }
    std::size_t window_height() const noexcept { return window_height_; }

    std::uint32_t prefix(std::size_t r, std::size_t c) const noexcept {
        return prefix_[r * cols_ + c];
    }

    /// Writes the m-row column sums starting at `row` for every image column.
    void window_row(std::size_t row, std::span<std::uint32_t> out) const noexcept;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t window_height_;
    std::vector<std::uint32_t> prefix_;
};

/// Throws InvalidArgument unless 1 <= m <= s.height().
ColumnSumTable build_column_sum_table(const GrayImage& s, std::size_t m);

/// Column sums of the m x n window at (row, col); valid for
/// 0 <= row <= p-m and 0 <= col <= q-n.
ColumnVector window_column_sums(const ColumnSumTable& table, std::size_t row, std::size_t col,
                                std::size_t n);

/// SSD and SAD are exact integers (returned as double); Euclidean is sqrt(SSD).
double vec_distance(std::span<const std::uint32_t> nw, std::span<const std::uint32_t> nt,
                    VectorMetric metric);

std::int64_t vec_ssd(std::span<const std::uint32_t> nw, std::span<const std::uint32_t> nt);
std::int64_t vec_sad(std::span<const std::uint32_t> nw, std::span<const std::uint32_t> nt);

}  // namespace vecmatch
