#include <doctest.h>

#include "vecmatch/matchers.hpp"
#include "vecmatch/synthetic.hpp"

using namespace vecmatch;

TEST_CASE("build_pyramid examples") {
    const auto p = build_pyramid(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3, 4}), 2);
    REQUIRE(p.levels.size() == 2);
    CHECK(p.levels[1].height == 1);
    CHECK(p.levels[1].width == 1);
    CHECK(p.levels[1](0, 0) == 2.5);

    const auto flat = build_pyramid(GrayImage(4, 4, std::uint8_t{8}), 2);
    CHECK(flat.levels[1].height == 2);
    CHECK(flat.levels[1].width == 2);
    for (const double v : flat.levels[1].pixels) CHECK(v == 8.0);

    const auto odd = build_pyramid(GrayImage(3, 3, std::vector<std::uint8_t>{1, 2, 90, 3, 4, 90, 90, 90, 90}), 2);
    CHECK(odd.levels[1].height == 1);
    CHECK(odd.levels[1].width == 1);
    CHECK(odd.levels[1](0, 0) == 2.5);

    const auto single = build_pyramid(GrayImage(3, 5, std::uint8_t{9}), 1);
    REQUIRE(single.levels.size() == 1);
    CHECK(single.levels[0].width == 5);
}

TEST_CASE("build_pyramid rejects impossible level counts") {
    CHECK_THROWS_AS(build_pyramid(GrayImage(4, 4), 0), InvalidArgument);
    CHECK_NOTHROW(build_pyramid(GrayImage(4, 4), 3));
    CHECK_THROWS_AS(build_pyramid(GrayImage(4, 4), 4), InvalidArgument);
    CHECK_THROWS_AS(build_pyramid(GrayImage(64, 3), 3), InvalidArgument);
    CHECK_THROWS_AS(build_pyramid(GrayImage(4, 4), 200), InvalidArgument);
}

TEST_CASE("pyramid level k is the block mean of the source") {
    // Independent route: average each 2^k x 2^k block of the original pixels.
    const GrayImage img = random_gray(37, 29, 11);
    const auto p = build_pyramid(img, 4);
    for (std::size_t k = 0; k < p.levels.size(); ++k) {
        const std::size_t block = std::size_t{1} << k;
        const auto& level = p.levels[k];
        CHECK(level.height == img.height() / block);
        CHECK(level.width == img.width() / block);
        for (std::size_t y = 0; y < level.height; ++y) {
            for (std::size_t x = 0; x < level.width; ++x) {
                double sum = 0.0;
                for (std::size_t dy = 0; dy < block; ++dy) {
                    for (std::size_t dx = 0; dx < block; ++dx) sum += img(y * block + dy, x * block + dx);
                }
                // Power-of-two divisions of small integers are exact.
                CHECK(level(y, x) == sum / static_cast<double>(block * block));
            }
        }
    }
}

TEST_CASE("auto level rule keeps the coarsest template side >= 8") {
    CHECK(auto_pyramid_levels(1, 1) == 1);
    CHECK(auto_pyramid_levels(7, 100) == 1);
    CHECK(auto_pyramid_levels(15, 15) == 1);
    CHECK(auto_pyramid_levels(16, 16) == 2);
    CHECK(auto_pyramid_levels(25, 25) == 2);
    CHECK(auto_pyramid_levels(50, 50) == 3);
    CHECK(auto_pyramid_levels(100, 100) == 4);
    CHECK(auto_pyramid_levels(150, 200) == 5);
    CHECK(auto_pyramid_levels(200, 200) == 5);
    for (std::size_t side = 16; side < 600; ++side) {
        const std::size_t levels = auto_pyramid_levels(side, side);
        CHECK((side >> (levels - 1)) >= 8);
        CHECK((side >> levels) < 8);
    }
}

TEST_CASE("sadp finds a centered crop and agrees with full sad") {
    const GrayImage s = synthetic_texture(64, 64, 5);
    const GrayImage t = crop(s, {24, 24, 16, 16});
    const auto full = match_full_sad(s, t).result;
    const auto pyr = match_pyramid(s, t, PyramidBase::Sad);
    CHECK(pyr.row == 24);
    CHECK(pyr.col == 24);
    CHECK(pyr.score == 0.0);
    CHECK(pyr.row == full.row);
    CHECK(pyr.col == full.col);
    CHECK(pyr.algorithm == Algorithm::SadPyramid);
}

TEST_CASE("corner crops survive refinement with radius 2") {
    const GrayImage s = synthetic_texture(64, 64, 6);
    for (const Rect r : {Rect{0, 0, 16, 16}, Rect{48, 48, 16, 16}, Rect{0, 47, 17, 17}}) {
        const GrayImage t = crop(s, r);
        const auto sad = match_pyramid(s, t, PyramidBase::Sad);
        CHECK(sad.row == r.top);
        CHECK(sad.col == r.left);
        CHECK(sad.score == 0.0);
        const auto ncc = match_pyramid(s, t, PyramidBase::Ncc);
        CHECK(ncc.row == r.top);
        CHECK(ncc.col == r.left);
        CHECK(ncc.score == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("one level is the base matcher") {
    const GrayImage s = synthetic_texture(40, 40, 8);
    const GrayImage t = random_gray(12, 12, 9);
    PyramidOptions one;
    one.levels = 1;
    const auto sad = match_full_sad(s, t).result;
    const auto sadp = match_pyramid(s, t, PyramidBase::Sad, one);
    CHECK(sadp.row == sad.row);
    CHECK(sadp.col == sad.col);
    CHECK(sadp.score == sad.score);

    const auto ncc = match_full_ncc(s, t).result;
    const auto nccp = match_pyramid(s, t, PyramidBase::Ncc, one);
    CHECK(nccp.row == ncc.row);
    CHECK(nccp.col == ncc.col);
    CHECK(nccp.score == ncc.score);
}

TEST_CASE("finest-level pyramid scores are bit-identical to the full maps") {
    const GrayImage s = synthetic_texture(80, 80, 12);
    const GrayImage t = crop(s, {31, 9, 24, 20});
    const auto sad_map = match_full_sad(s, t).map;
    const auto ncc_map = match_full_ncc(s, t).map;
    const auto sadp = match_pyramid(s, t, PyramidBase::Sad);
    const auto nccp = match_pyramid(s, t, PyramidBase::Ncc);
    CHECK(sadp.score == sad_map(sadp.row, sadp.col));
    CHECK(nccp.score == ncc_map(nccp.row, nccp.col));
}

TEST_CASE("explicit levels and radius") {
    const GrayImage s = synthetic_texture(128, 128, 13);
    const GrayImage t = crop(s, {70, 33, 32, 32});
    for (std::size_t levels = 1; levels <= 3; ++levels) {
        for (std::size_t radius : {1, 2, 4}) {
            PyramidOptions opt;
            opt.levels = levels;
            opt.radius = radius;
            const auto r = match_pyramid(s, t, PyramidBase::Sad, opt);
            CHECK(r.row == 70);
            CHECK(r.col == 33);
        }
    }
    PyramidOptions too_many;
    too_many.levels = 7;  // 32 >> 6 == 0
    CHECK_THROWS_AS(match_pyramid(s, t, PyramidBase::Sad, too_many), InvalidArgument);
}

TEST_CASE("nccp when averaging flattens the template") {
    // A 1-pixel checkerboard averages to a constant at level 1.
    GrayImage s(48, 48, std::uint8_t{0});
    const GrayImage noise = synthetic_texture(48, 48, 14);
    for (std::size_t r = 0; r < 48; ++r) {
        for (std::size_t c = 0; c < 48; ++c) s(r, c) = noise(r, c);
    }
    for (std::size_t r = 10; r < 26; ++r) {
        for (std::size_t c = 20; c < 36; ++c) s(r, c) = ((r + c) % 2) ? 200 : 40;
    }
    const GrayImage t = crop(s, {10, 20, 16, 16});
    const auto res = match_pyramid(s, t, PyramidBase::Ncc);
    CHECK(res.row == 10);
    CHECK(res.col == 20);
}

TEST_CASE("pyramid errors follow the base matcher") {
    const GrayImage s = synthetic_texture(32, 32, 1);
    CHECK_THROWS_AS(match_pyramid(s, GrayImage(16, 16, std::uint8_t{3}), PyramidBase::Ncc), DegenerateTemplate);
    CHECK_THROWS_AS(match_pyramid(GrayImage(8, 8), s, PyramidBase::Sad), InvalidArgument);
}
