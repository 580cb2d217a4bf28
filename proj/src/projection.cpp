#include "vecmatch/projection.hpp"

#include <cmath>
#include <string>

namespace vecmatch {

std::string_view to_string(VectorMetric metric) noexcept {
    switch (metric) {
    case VectorMetric::Ssd: return "ssd";
    case VectorMetric::Sad: return "sad";
    case VectorMetric::Euclidean: return "euclidean";
    }
    return "unknown";
}

ColumnVector project_template(const GrayImage& t) {
    ColumnVector sums(t.width(), 0);
    for (std::size_t r = 0; r < t.height(); ++r) {
        const auto row = t.row(r);
        for (std::size_t c = 0; c < sums.size(); ++c) {
            sums[c] += row[c];
        }
    }
    return sums;
}

ColumnSumTable::ColumnSumTable(const GrayImage& s, std::size_t window_height)
    : rows_(s.height()), cols_(s.width()), window_height_(window_height) {
    if (window_height == 0 || window_height > s.height()) {
        throw InvalidArgument("column sum table: window height " + std::to_string(window_height) +
                              " outside [1, " + std::to_string(s.height()) + "]");
    }
    prefix_.assign((rows_ + 1) * cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto src = s.row(r);
        const std::uint32_t* above = prefix_.data() + r * cols_;
        std::uint32_t* below = prefix_.data() + (r + 1) * cols_;
        for (std::size_t c = 0; c < cols_; ++c) {
            below[c] = above[c] + src[c];
        }
    }
}

void ColumnSumTable::window_row(std::size_t row, std::span<std::uint32_t> out) const noexcept {
    const std::uint32_t* top = prefix_.data() + row * cols_;
    const std::uint32_t* bottom = prefix_.data() + (row + window_height_) * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
        out[c] = bottom[c] - top[c];
    }
}

ColumnSumTable build_column_sum_table(const GrayImage& s, std::size_t m) {
    return ColumnSumTable(s, m);
}

ColumnVector window_column_sums(const ColumnSumTable& table, std::size_t row, std::size_t col,
                                std::size_t n) {
    const std::size_t m = table.window_height();
    if (n == 0 || n > table.image_width()) {
        throw InvalidArgument("window_column_sums: width out of range");
    }
    if (row > table.image_height() - m || col > table.image_width() - n) {
        throw InvalidArgument("window_column_sums: offset (" + std::to_string(row) + ", " +
                              std::to_string(col) + ") outside valid range");
    }
    ColumnVector out(n);
    for (std::size_t c = 0; c < n; ++c) {
        out[c] = table.prefix(row + m, col + c) - table.prefix(row, col + c);
    }
    return out;
}

namespace {

void require_same_length(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    if (a.size() != b.size()) {
        throw InvalidArgument("vector distance: length mismatch (" + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()) + ")");
    }
}

}  // namespace

std::int64_t vec_ssd(std::span<const std::uint32_t> nw, std::span<const std::uint32_t> nt) {
    require_same_length(nw, nt);
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < nw.size(); ++c) {
        const std::int64_t d = std::int64_t{nw[c]} - std::int64_t{nt[c]};
        acc += d * d;
    }
    return acc;
}

std::int64_t vec_sad(std::span<const std::uint32_t> nw, std::span<const std::uint32_t> nt) {
    require_same_length(nw, nt);
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < nw.size(); ++c) {
        const std::int64_t d = std::int64_t{nw[c]} - std::int64_t{nt[c]};
        acc += d < 0 ? -d : d;
    }
    return acc;
}

double vec_distance(std::span<const std::uint32_t> nw, std::span<const std::uint32_t> nt,
                    VectorMetric metric) {
    switch (metric) {
    case VectorMetric::Ssd: return static_cast<double>(vec_ssd(nw, nt));
    case VectorMetric::Sad: return static_cast<double>(vec_sad(nw, nt));
    case VectorMetric::Euclidean: return std::sqrt(static_cast<double>(vec_ssd(nw, nt)));
    }
    throw InvalidArgument("vector distance: unknown metric");
}

}  // namespace vecmatch
