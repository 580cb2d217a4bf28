#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vecmatch/image.hpp"
#include "vecmatch/matchers.hpp"

namespace vecmatch::bench {

struct TemplateSize {
    std::size_t height = 0;
    std::size_t width = 0;
    friend bool operator==(const TemplateSize&, const TemplateSize&) = default;
};

struct Position {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

/// Where templates are cropped from the reference.
///  Centered: ((p-m)/2, (q-n)/2).
///  Edge:     (0, 0), the case where coarse-to-fine search has the least room.
///  Explicit: `BenchPlan::positions`, one per size or a single one for all.
enum class Placement { Centered, Edge, Explicit };

/// 25, 50, 100, 150, 200 square.
std::vector<TemplateSize> default_sizes();

struct BenchPlan {
    std::string reference_path;
    std::string reference_id;  // empty: use reference_path
    std::vector<TemplateSize> sizes = default_sizes();
    Placement placement = Placement::Centered;
    std::vector<Position> positions;
    std::vector<Algorithm> algorithms;
    std::size_t repetitions = 3;
    ColorMode color_mode = ColorMode::Luma;
    PyramidOptions pyramid;
};

struct BenchRecord {
    std::string reference_id;
    std::string algorithm;
    std::size_t template_height = 0;
    std::size_t template_width = 0;
    std::size_t true_row = 0;
    std::size_t true_col = 0;
    std::size_t found_row = 0;
    std::size_t found_col = 0;
    bool correct = false;
    double score = 0.0;
    std::int64_t elapsed_ns = 0;  // median over repetitions, > 0
    std::size_t repetitions = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Comma-separated algorithm names; throws InvalidArgument on an unknown name.
std::vector<Algorithm> parse_algorithms(std::string_view list);
/// Comma-separated sizes, each "N" (square) or "HxW".
std::vector<TemplateSize> parse_sizes(std::string_view list);

/// Sizes larger than the reference are clipped to it.
std::vector<TemplateSize> clip_sizes(const std::vector<TemplateSize>& sizes,
                                     const GrayImage& reference);
/// Crop origin for size index `index` under the plan's placement.
Position crop_position(const BenchPlan& plan, std::size_t index, const TemplateSize& size,
                       const GrayImage& reference);

/// Decodes plan.reference_path and runs the plan.
std::vector<BenchRecord> run_plan(const BenchPlan& plan);
/// Runs the plan against an already decoded reference. Records come out in
/// plan order: sizes outer, algorithms inner.
std::vector<BenchRecord> run_plan(const BenchPlan& plan, const GrayImage& reference);

inline constexpr std::string_view kCsvHeader =
    "reference_id,algorithm,template_h,template_w,true_row,true_col,found_row,found_col,correct,"
    "score,elapsed_ns,repetitions";

/// Header line plus one line per record; fields quoted per RFC 4180 when needed.
std::string emit_csv(const std::vector<BenchRecord>& records);

}  // namespace vecmatch::bench
