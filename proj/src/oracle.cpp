#include "vecmatch/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace vecmatch::oracle {

namespace {

ScoreMap empty_map(const GrayImage& s, const GrayImage& t) {
    if (t.height() > s.height() || t.width() > s.width()) {
        throw InvalidArgument("oracle: template larger than reference");
    }
    return ScoreMap(s.height() - t.height() + 1, s.width() - t.width() + 1);
}

}  // namespace

ScoreMap naive_projected_map(const GrayImage& s, const GrayImage& t, VectorMetric metric) {
    ScoreMap map = empty_map(s, t);
    const std::size_t m = t.height();
    const std::size_t n = t.width();

    std::vector<std::int64_t> nt(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m; ++r) nt[c] += t(r, c);
    }

    for (std::size_t i = 0; i < map.rows; ++i) {
        for (std::size_t j = 0; j < map.cols; ++j) {
            std::int64_t ssd = 0;
            std::int64_t sad = 0;
            for (std::size_t c = 0; c < n; ++c) {
                std::int64_t nw = 0;
                for (std::size_t k = i; k < i + m; ++k) nw += s(k, j + c);
                const std::int64_t d = nw - nt[c];
                ssd += d * d;
                sad += std::llabs(d);
            }
            switch (metric) {
            case VectorMetric::Ssd: map(i, j) = static_cast<double>(ssd); break;
            case VectorMetric::Sad: map(i, j) = static_cast<double>(sad); break;
            case VectorMetric::Euclidean: map(i, j) = std::sqrt(static_cast<double>(ssd)); break;
            }
        }
    }
    return map;
}

ScoreMap naive_sad_map(const GrayImage& s, const GrayImage& t) {
    ScoreMap map = empty_map(s, t);
    for (std::size_t i = 0; i < map.rows; ++i) {
        for (std::size_t j = 0; j < map.cols; ++j) {
            std::int64_t total = 0;
            for (std::size_t x = 0; x < t.height(); ++x) {
                for (std::size_t y = 0; y < t.width(); ++y) {
                    total += std::llabs(std::int64_t{s(i + x, j + y)} - std::int64_t{t(x, y)});
                }
            }
            map(i, j) = static_cast<double>(total);
        }
    }
    return map;
}

ScoreMap naive_ssd_map(const GrayImage& s, const GrayImage& t) {
    ScoreMap map = empty_map(s, t);
    for (std::size_t i = 0; i < map.rows; ++i) {
        for (std::size_t j = 0; j < map.cols; ++j) {
            std::int64_t total = 0;
            for (std::size_t x = 0; x < t.height(); ++x) {
                for (std::size_t y = 0; y < t.width(); ++y) {
                    const std::int64_t d = std::int64_t{s(i + x, j + y)} - std::int64_t{t(x, y)};
                    total += d * d;
                }
            }
            map(i, j) = static_cast<double>(total);
        }
    }
    return map;
}

ScoreMap naive_ncc_map(const GrayImage& s, const GrayImage& t) {
    ScoreMap map = empty_map(s, t);
    const double count = static_cast<double>(t.height() * t.width());

    double t_mean = 0.0;
    for (std::size_t x = 0; x < t.height(); ++x) {
        for (std::size_t y = 0; y < t.width(); ++y) t_mean += t(x, y);
    }
    t_mean /= count;
    double t_dev = 0.0;
    bool t_constant = true;
    for (std::size_t x = 0; x < t.height(); ++x) {
        for (std::size_t y = 0; y < t.width(); ++y) {
            t_dev += (t(x, y) - t_mean) * (t(x, y) - t_mean);
            t_constant = t_constant && t(x, y) == t(0, 0);
        }
    }
    if (t_constant) {
        throw DegenerateTemplate("oracle: constant template");
    }

    for (std::size_t i = 0; i < map.rows; ++i) {
        for (std::size_t j = 0; j < map.cols; ++j) {
            double s_mean = 0.0;
            bool s_constant = true;
            for (std::size_t x = 0; x < t.height(); ++x) {
                for (std::size_t y = 0; y < t.width(); ++y) {
                    s_mean += s(i + x, j + y);
                    s_constant = s_constant && s(i + x, j + y) == s(i, j);
                }
            }
            if (s_constant) {
                map(i, j) = ScoreMap::degenerate();
                continue;
            }
            s_mean /= count;
            double num = 0.0;
            double s_dev = 0.0;
            for (std::size_t x = 0; x < t.height(); ++x) {
                for (std::size_t y = 0; y < t.width(); ++y) {
                    const double a = s(i + x, j + y) - s_mean;
                    const double b = t(x, y) - t_mean;
                    num += a * b;
                    s_dev += a * a;
                }
            }
            map(i, j) = num / std::sqrt(s_dev * t_dev);
        }
    }
    return map;
}

}  // namespace vecmatch::oracle
