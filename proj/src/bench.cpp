#include "vecmatch/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>

namespace vecmatch::bench {

namespace {

std::vector<std::string_view> split(std::string_view list, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = list.find(sep);
        parts.push_back(list.substr(0, pos));
        if (pos == std::string_view::npos) break;
        list.remove_prefix(pos + 1);
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view text, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        throw InvalidArgument(std::string("bad ") + what + ": '" + std::string(text) + "'");
    }
    return value;
}

void append_field(std::string& out, std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        out += field;
        return;
    }
    out += '"';
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::int64_t median(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return samples[mid - 1] + (samples[mid] - samples[mid - 1]) / 2;
}

}  // namespace

std::vector<TemplateSize> default_sizes() {
    return {{25, 25}, {50, 50}, {100, 100}, {150, 150}, {200, 200}};
}

std::vector<Algorithm> parse_algorithms(std::string_view list) {
    std::vector<Algorithm> out;
    for (const auto part : split(list, ',')) {
        const auto name = trim(part);
        const auto algorithm = parse_algorithm(name);
        if (!algorithm) {
            throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
        }
        out.push_back(*algorithm);
    }
    return out;
}

std::vector<TemplateSize> parse_sizes(std::string_view list) {
    std::vector<TemplateSize> out;
    for (const auto part : split(list, ',')) {
        const auto item = trim(part);
        const auto x = item.find_first_of("xX");
        if (x == std::string_view::npos) {
            const std::size_t side = parse_count(item, "template size");
            out.push_back({side, side});
        } else {
            out.push_back({parse_count(item.substr(0, x), "template height"),
                           parse_count(item.substr(x + 1), "template width")});
        }
    }
    return out;
}

std::vector<TemplateSize> clip_sizes(const std::vector<TemplateSize>& sizes,
                                     const GrayImage& reference) {
    std::vector<TemplateSize> out;
    out.reserve(sizes.size());
    for (const auto& size : sizes) {
        out.push_back({std::min(size.height, reference.height()),
                       std::min(size.width, reference.width())});
    }
    return out;
}

Position crop_position(const BenchPlan& plan, std::size_t index, const TemplateSize& size,
                       const GrayImage& reference) {
    switch (plan.placement) {
    case Placement::Centered:
        return {(reference.height() - size.height) / 2, (reference.width() - size.width) / 2};
    case Placement::Edge: return {0, 0};
    case Placement::Explicit:
        if (plan.positions.empty()) {
            throw InvalidArgument("explicit placement needs at least one position");
        }
        if (plan.positions.size() == 1) return plan.positions.front();
        if (index >= plan.positions.size()) {
            throw InvalidArgument("explicit placement: fewer positions than template sizes");
        }
        return plan.positions[index];
    }
    throw InvalidArgument("unknown placement");
}

std::vector<BenchRecord> run_plan(const BenchPlan& plan) {
    return run_plan(plan, load_gray(plan.reference_path, plan.color_mode));
}

std::vector<BenchRecord> run_plan(const BenchPlan& plan, const GrayImage& reference) {
    if (plan.repetitions == 0) {
        throw InvalidArgument("bench: repetitions must be at least 1");
    }
    if (plan.algorithms.empty()) {
        throw InvalidArgument("bench: no algorithms selected");
    }
    const std::string id = plan.reference_id.empty() ? plan.reference_path : plan.reference_id;
    const auto sizes = clip_sizes(plan.sizes, reference);

    std::vector<BenchRecord> records;
    records.reserve(sizes.size() * plan.algorithms.size());
    for (std::size_t index = 0; index < sizes.size(); ++index) {
        const TemplateSize& size = sizes[index];
        const Position at = crop_position(plan, index, size, reference);
        const GrayImage templ = crop(reference, {at.row, at.col, size.height, size.width});

        for (const Algorithm algorithm : plan.algorithms) {
            std::vector<std::int64_t> samples;
            samples.reserve(plan.repetitions);
            MatchResult result;
            for (std::size_t rep = 0; rep < plan.repetitions; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                result = match(reference, templ, algorithm, plan.pyramid);
                const auto stop = std::chrono::steady_clock::now();
                samples.push_back(std::max<std::int64_t>(
                    1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
            }

            BenchRecord record;
            record.reference_id = id;
            record.algorithm = std::string(to_string(algorithm));
            record.template_height = size.height;
            record.template_width = size.width;
            record.true_row = at.row;
            record.true_col = at.col;
            record.found_row = result.row;
            record.found_col = result.col;
            record.correct = result.row == at.row && result.col == at.col;
            record.score = result.score;
            record.elapsed_ns = median(std::move(samples));
            record.repetitions = plan.repetitions;
            records.push_back(std::move(record));
        }
    }
    return records;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        append_field(out, r.reference_id);
        out += ',';
        append_field(out, r.algorithm);
        for (const std::size_t v : {r.template_height, r.template_width, r.true_row, r.true_col,
                                    r.found_row, r.found_col}) {
            out += ',';
            out += std::to_string(v);
        }
        out += r.correct ? ",true," : ",false,";
        out += format_double(r.score);
        out += ',';
        out += std::to_string(r.elapsed_ns);
        out += ',';
        out += std::to_string(r.repetitions);
        out += '\n';
    }
    return out;
}

}  // namespace vecmatch::bench
