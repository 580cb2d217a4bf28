#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "vecmatch/bench.hpp"
#include "vecmatch/image.hpp"
#include "vecmatch/matchers.hpp"
#include "vecmatch/synthetic.hpp"

namespace vecmatch::cli {

namespace {

/// Bad usage detected after CLI11 parsing; reported like any other failure.
struct UsageError : Error {
    using Error::Error;
};

ColorMode parse_color_mode(const std::string& name) {
    if (name == "luma") return ColorMode::Luma;
    if (name == "channel-sum") return ColorMode::ChannelSum;
    throw UsageError("unknown color mode '" + name + "' (expected luma or channel-sum)");
}

std::string format_score(double score, Algorithm algorithm) {
    char buf[64];
    if (has_integer_score(algorithm)) {
        std::snprintf(buf, sizeof buf, "%.0f", score);
    } else {
        std::snprintf(buf, sizeof buf, "%.6f", score);
    }
    return buf;
}

std::string score_map_csv(const ScoreMap& map) {
    std::string out;
    char buf[64];
    for (std::size_t r = 0; r < map.rows; ++r) {
        for (std::size_t c = 0; c < map.cols; ++c) {
            if (c > 0) out += ',';
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, map(r, c));
            out.append(buf, ec == std::errc() ? ptr : buf);
        }
        out += '\n';
    }
    return out;
}

std::vector<bench::Position> parse_positions(const std::string& list) {
    std::vector<bench::Position> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto end = std::min(list.find(',', start), list.size());
        const std::string item = list.substr(start, end - start);
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw UsageError("position '" + item + "' is not ROW:COL");
        }
        bench::Position p;
        const auto parse = [&](std::string_view text, std::size_t& value) {
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size()) {
                throw UsageError("position '" + item + "' is not ROW:COL");
            }
        };
        parse(std::string_view(item).substr(0, colon), p.row);
        parse(std::string_view(item).substr(colon + 1), p.col);
        out.push_back(p);
        start = end + 1;
    }
    return out;
}

struct MatchArgs {
    std::string reference;
    std::string templ;
    std::string algo;
    std::optional<std::size_t> levels;
    std::optional<std::size_t> radius;
    std::string color_mode = "luma";
    std::string map_path;
};

int cmd_match(const MatchArgs& a, std::ostream& out, std::ostream& err) {
    const auto algorithm = parse_algorithm(a.algo);
    if (!algorithm) {
        throw UsageError("unknown algorithm '" + a.algo + "'");
    }
    const ColorMode mode = parse_color_mode(a.color_mode);
    if (!is_pyramid(*algorithm) && (a.levels || a.radius)) {
        err << "warning: --levels/--radius ignored for " << a.algo << "\n";
    }
    const GrayImage s = load_gray(a.reference, mode);
    const GrayImage t = load_gray(a.templ, mode);

    PyramidOptions options;
    options.levels = a.levels;
    if (a.radius) options.radius = *a.radius;
    const MatchResult result = match(s, t, *algorithm, options);

    if (!a.map_path.empty()) {
        Algorithm map_algo = *algorithm;
        if (is_pyramid(map_algo)) {
            map_algo = map_algo == Algorithm::SadPyramid ? Algorithm::Sad : Algorithm::Ncc;
            err << "note: --map for " << a.algo << " writes the full " << to_string(map_algo)
                << " score map\n";
        }
        const std::string csv = score_map_csv(score_map_only(s, t, map_algo));
        write_file(a.map_path, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                                         csv.size()));
    }

    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", static_cast<double>(result.elapsed_ns) / 1e6);
    out << result.row << ' ' << result.col << ' ' << format_score(result.score, *algorithm) << ' '
        << ms << '\n';
    return 0;
}

struct CropArgs {
    std::string input;
    std::string output;
    std::size_t top = 0;
    std::size_t left = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    std::string color_mode = "luma";
};

int cmd_crop(const CropArgs& a) {
    const GrayImage image = load_gray(a.input, parse_color_mode(a.color_mode));
    save_pgm(a.output, crop(image, {a.top, a.left, a.height, a.width}));
    return 0;
}

struct BenchArgs {
    std::string reference;
    std::string sizes = "25,50,100,150,200";
    std::string algos;
    std::size_t reps = 3;
    std::string out;
    std::string positions = "centered";
    std::string id;
    std::optional<std::size_t> levels;
    std::size_t radius = 2;
    std::string color_mode = "luma";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    bench::BenchPlan plan;
    plan.reference_path = a.reference;
    plan.reference_id = a.id;
    plan.sizes = bench::parse_sizes(a.sizes);
    plan.algorithms = bench::parse_algorithms(a.algos);
    plan.repetitions = a.reps;
    plan.color_mode = parse_color_mode(a.color_mode);
    plan.pyramid.levels = a.levels;
    plan.pyramid.radius = a.radius;
    if (a.positions == "centered") {
        plan.placement = bench::Placement::Centered;
    } else if (a.positions == "edge") {
        plan.placement = bench::Placement::Edge;
    } else {
        plan.placement = bench::Placement::Explicit;
        plan.positions = parse_positions(a.positions);
    }

    const auto records = bench::run_plan(plan);
    const std::string csv = bench::emit_csv(records);
    write_file(a.out, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
    const auto correct = std::count_if(records.begin(), records.end(),
                                       [](const bench::BenchRecord& r) { return r.correct; });
    out << records.size() << " records, " << correct << " correct\n";
    return 0;
}

struct SynthArgs {
    std::string out;
    std::size_t height = 512;
    std::size_t width = 512;
    std::uint64_t seed = 1;
};

int cmd_synth(const SynthArgs& a) {
    save_pgm(a.out, synthetic_texture(a.height, a.width, a.seed));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"vecmatch: template matching by column-sum projection, SAD, NCC and pyramids"};
    app.require_subcommand(1);

    MatchArgs match_args;
    auto* match_cmd = app.add_subcommand("match", "Locate a template in a reference image");
    match_cmd->add_option("--reference", match_args.reference, "Reference PGM/PPM")->required();
    match_cmd->add_option("--template", match_args.templ, "Template PGM/PPM")->required();
    match_cmd->add_option("--algo", match_args.algo,
                          "ncc|sad|nccp|sadp|vec-ssd|vec-sad|vec-euclid")
        ->required();
    match_cmd->add_option("--levels", match_args.levels, "Pyramid levels (default: auto)");
    match_cmd->add_option("--radius", match_args.radius, "Refinement radius (default 2)");
    match_cmd->add_option("--color-mode", match_args.color_mode, "luma|channel-sum");
    match_cmd->add_option("--map", match_args.map_path, "Write the score map as a CSV grid");

    CropArgs crop_args;
    auto* crop_cmd = app.add_subcommand("crop", "Cut a rectangle out of an image into a PGM");
    crop_cmd->add_option("--input", crop_args.input)->required();
    crop_cmd->add_option("--top", crop_args.top)->required();
    crop_cmd->add_option("--left", crop_args.left)->required();
    crop_cmd->add_option("--height", crop_args.height)->required();
    crop_cmd->add_option("--width", crop_args.width)->required();
    crop_cmd->add_option("--output", crop_args.output)->required();
    crop_cmd->add_option("--color-mode", crop_args.color_mode, "luma|channel-sum");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms on templates cropped from a reference");
    bench_cmd->add_option("--reference", bench_args.reference)->required();
    bench_cmd->add_option("--sizes", bench_args.sizes, "e.g. 25,50,150x200");
    bench_cmd->add_option("--algos", bench_args.algos, "Comma-separated algorithm names")->required();
    bench_cmd->add_option("--reps", bench_args.reps, "Repetitions per measurement (median)");
    bench_cmd->add_option("--out", bench_args.out, "CSV output path")->required();
    bench_cmd->add_option("--positions", bench_args.positions, "centered|edge|ROW:COL[,ROW:COL...]");
    bench_cmd->add_option("--id", bench_args.id, "reference_id column (default: path)");
    bench_cmd->add_option("--levels", bench_args.levels);
    bench_cmd->add_option("--radius", bench_args.radius);
    bench_cmd->add_option("--color-mode", bench_args.color_mode, "luma|channel-sum");

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "Write a deterministic synthetic texture PGM");
    synth_cmd->add_option("--out", synth_args.out)->required();
    synth_cmd->add_option("--height", synth_args.height);
    synth_cmd->add_option("--width", synth_args.width);
    synth_cmd->add_option("--seed", synth_args.seed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (match_cmd->parsed()) return cmd_match(match_args, out, err);
        if (crop_cmd->parsed()) return cmd_crop(crop_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args, out);
        if (synth_cmd->parsed()) return cmd_synth(synth_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 1;
}

}  // namespace vecmatch::cli
