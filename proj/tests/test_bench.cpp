#include <doctest.h>

#include <filesystem>

#include "csv_reader.hpp"
#include "vecmatch/bench.hpp"
#include "vecmatch/synthetic.hpp"

using namespace vecmatch;
using namespace vecmatch::bench;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("vecmatch_test_" + name)).string();
}

std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

BenchRecord sample_record(std::uint64_t seed) {
    const GrayImage noise = random_gray(1, 16, seed);
    const auto px = noise.pixels();
    BenchRecord r;
    const std::string ids[] = {"lifting-body.pgm", "greens, color", "say \"hi\"", "multi\nline", ""};
    r.reference_id = ids[seed % 5];
    r.algorithm = std::string(to_string(all_algorithms()[seed % 7]));
    r.template_height = px[0] + 1u;
    r.template_width = px[1] + 1u;
    r.true_row = px[2];
    r.true_col = px[3];
    r.found_row = px[seed % 2 ? 2 : 4];
    r.found_col = px[3];
    r.correct = r.found_row == r.true_row;
    r.score = seed % 3 == 0 ? static_cast<double>(px[5]) * 1e9 : (px[6] - 128.0) / (px[7] + 1.0) / 3.0;
    r.elapsed_ns = 1 + px[8] * 1000003LL;
    r.repetitions = 1 + px[9] % 5;
    return r;
}

}  // namespace

TEST_CASE("parse helpers") {
    CHECK(parse_algorithms("ncc,sad, vec-ssd") ==
          std::vector<Algorithm>{Algorithm::Ncc, Algorithm::Sad, Algorithm::VecSsd});
    CHECK_THROWS_AS(parse_algorithms("sad,fft-sad"), InvalidArgument);
    CHECK(parse_sizes("25,150x200") == std::vector<TemplateSize>{{25, 25}, {150, 200}});
    CHECK_THROWS_AS(parse_sizes("0"), InvalidArgument);
    CHECK_THROWS_AS(parse_sizes("12a"), InvalidArgument);
    CHECK(default_sizes().size() == 5);
}

TEST_CASE("sizes clip to the reference and crops are centered by default") {
    const GrayImage ref(300, 500);
    const auto sizes = clip_sizes(default_sizes(), ref);
    CHECK(sizes.back() == TemplateSize{200, 200});
    const GrayImage small(40, 60);
    CHECK(clip_sizes({{50, 50}}, small).front() == TemplateSize{40, 50});

    BenchPlan plan;
    CHECK(crop_position(plan, 0, {100, 100}, ref) == Position{100, 200});
    plan.placement = Placement::Edge;
    CHECK(crop_position(plan, 3, {100, 100}, ref) == Position{0, 0});
    plan.placement = Placement::Explicit;
    plan.positions = {{5, 6}};
    CHECK(crop_position(plan, 4, {10, 10}, ref) == Position{5, 6});
    plan.positions = {{5, 6}, {7, 8}};
    CHECK(crop_position(plan, 1, {10, 10}, ref) == Position{7, 8});
    CHECK_THROWS_AS(crop_position(plan, 2, {10, 10}, ref), InvalidArgument);
}

TEST_CASE("run_plan on a 512x512 reference: one correct record per algorithm and size") {
    const GrayImage ref = synthetic_texture(512, 512, 1);
    BenchPlan plan;
    plan.reference_id = "synthetic-512";
    plan.sizes = {{25, 25}, {50, 50}, {100, 100}};
    plan.algorithms = {Algorithm::Ncc, Algorithm::Sad, Algorithm::VecSsd};
    plan.repetitions = 1;
    const auto records = run_plan(plan, ref);
    REQUIRE(records.size() == 9);
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& r = records[k];
        CHECK(r.correct);
        CHECK(r.elapsed_ns > 0);
        CHECK(r.reference_id == "synthetic-512");
        CHECK(r.template_height == plan.sizes[k / 3].height);
        CHECK(r.algorithm == to_string(plan.algorithms[k % 3]));
    }
}

TEST_CASE("degenerate 1x1 template") {
    const GrayImage ref = synthetic_texture(32, 32, 3);
    BenchPlan plan;
    plan.sizes = {{1, 1}};
    plan.algorithms = {Algorithm::VecSsd};
    plan.repetitions = 1;
    const auto records = run_plan(plan, ref);
    REQUIRE(records.size() == 1);
    // Uniqueness is not guaranteed for one pixel; the first equal pixel in scan order wins.
    CHECK(records[0].score == 0.0);
    CHECK(ref(records[0].found_row, records[0].found_col) == ref(records[0].true_row, records[0].true_col));
}

TEST_CASE("run_plan reads the reference from disk") {
    const std::string path = temp_path("bench_ref.pgm");
    save_pgm(path, synthetic_texture(96, 80, 4));
    BenchPlan plan;
    plan.reference_path = path;
    plan.sizes = {{25, 25}, {40, 30}};
    plan.placement = Placement::Edge;
    plan.algorithms = all_algorithms();
    plan.repetitions = 2;
    const auto records = run_plan(plan);
    CHECK(records.size() == 14);
    for (const auto& r : records) {
        CHECK(r.correct);
        CHECK(r.reference_id == path);
        CHECK(r.repetitions == 2);
    }
    std::filesystem::remove(path);
}

TEST_CASE("run_plan errors") {
    BenchPlan plan;
    plan.algorithms = {Algorithm::Sad};
    plan.reference_path = temp_path("does_not_exist.pgm");
    CHECK_THROWS_AS(run_plan(plan), Error);

    const std::string junk = temp_path("junk.pgm");
    write_file(junk, std::vector<std::uint8_t>{'h', 'i'});
    plan.reference_path = junk;
    CHECK_THROWS_AS(run_plan(plan), PnmError);
    std::filesystem::remove(junk);

    const GrayImage ref = synthetic_texture(64, 64, 5);
    plan.sizes = {{16, 16}};
    plan.placement = Placement::Explicit;
    plan.positions = {{60, 0}};
    CHECK_THROWS_AS(run_plan(plan, ref), InvalidArgument);

    plan.positions = {{0, 0}};
    plan.repetitions = 0;
    CHECK_THROWS_AS(run_plan(plan, ref), InvalidArgument);
}

TEST_CASE("full-search cost grows with template area") {
    const GrayImage ref = synthetic_texture(256, 256, 6);
    BenchPlan plan;
    plan.sizes = {{16, 16}, {32, 32}, {64, 64}};
    plan.algorithms = {Algorithm::Sad};
    plan.repetitions = 5;
    const auto records = run_plan(plan, ref);
    for (std::size_t k = 1; k < records.size(); ++k) {
        CHECK(static_cast<double>(records[k].elapsed_ns) >= 0.9 * static_cast<double>(records[k - 1].elapsed_ns));
    }
}

TEST_CASE("emit_csv") {
    const std::string empty = emit_csv({});
    CHECK(empty == std::string(kCsvHeader) + "\n");
    CHECK(count_lines(empty) == 1);

    const std::string one = emit_csv({sample_record(1)});
    CHECK(count_lines(one) == 2);

    BenchRecord quoted = sample_record(2);
    quoted.reference_id = "a,\"b\"";
    const std::string text = emit_csv({quoted});
    CHECK(text.find("\"a,\"\"b\"\"\"") != std::string::npos);
}

TEST_CASE("csv round trip on random record lists") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::vector<BenchRecord> records;
        for (std::uint64_t k = 0; k < seed % 9; ++k) records.push_back(sample_record(seed * 31 + k));
        CHECK(testing::parse_records(emit_csv(records)) == records);
    }
}
