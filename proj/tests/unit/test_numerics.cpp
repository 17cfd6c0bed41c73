#include "draftval/errors.hpp"
#include "draftval/numerics/antitonic.hpp"
#include "draftval/numerics/hypothesis.hpp"
#include "draftval/numerics/loess.hpp"
#include "draftval/synth.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace draftval;
using namespace draftval::numerics;

namespace {

std::vector<WeightedPoint> noisy_points(std::mt19937_64& gen, std::size_t n, bool duplicate_x) {
    std::uniform_real_distribution<double> u(0.0, 100.0);
    std::normal_distribution<double> e(0.0, 5.0);
    std::vector<WeightedPoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = duplicate_x ? std::floor(u(gen) / 10.0) : u(gen);
        pts.push_back({x, 50.0 - 0.3 * x + e(gen), 1.0});
    }
    return pts;
}

} // namespace

TEST_SUITE("numerics") {

TEST_CASE("smooth curve evaluation") {
    const SmoothCurve lin(FitKind::Loess, {1.0, 2.0, 4.0}, {10.0, 20.0, 0.0});
    CHECK(lin(0.0) == 10.0);
    CHECK(lin(1.5) == doctest::Approx(15.0));
    CHECK(lin(3.0) == doctest::Approx(10.0));
    CHECK(lin(9.0) == 0.0);
    const SmoothCurve step(FitKind::Antitonic, {1.0, 2.0, 4.0}, {10.0, 5.0, 1.0});
    CHECK(step(1.5) == 10.0);
    CHECK(step(3.9) == 5.0);
    CHECK(step(4.0) == 1.0);
    CHECK_THROWS(SmoothCurve(FitKind::Loess, {1.0, 1.0}, {0.0, 0.0}));
    CHECK(integer_grid(3, 5) == std::vector<double>{3.0, 4.0, 5.0});
}

TEST_CASE("PAVA on a small hand example") {
    const std::vector<double> y{1.0, 3.0, 2.0, 4.0};
    const std::vector<double> w{1.0, 1.0, 1.0, 1.0};
    CHECK(pava_nondecreasing(y, w) == std::vector<double>{1.0, 2.5, 2.5, 4.0});
    const std::vector<double> w2{1.0, 3.0, 1.0, 1.0};
    const auto fit = pava_nondecreasing(y, w2);
    CHECK(fit[1] == doctest::Approx(2.75));
    CHECK(fit[2] == doctest::Approx(2.75));
}

TEST_CASE("antitonic fit matches the brute-force partition oracle") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> nd(2, 8);
    std::uniform_real_distribution<double> yd(-10.0, 10.0), wd(0.1, 5.0);
    for (int inst = 0; inst < 50; ++inst) {
        const int n = nd(gen);
        std::vector<WeightedPoint> pts;
        std::vector<double> y, w;
        for (int i = 0; i < n; ++i) {
            pts.push_back({static_cast<double>(i), yd(gen), wd(gen)});
            y.push_back(pts.back().y);
            w.push_back(pts.back().w);
        }
        const auto fit = antitonic_fit(pts);
        const auto expect = oracle::antitonic_brute(y, w);
        REQUIRE(fit.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(std::abs(fit.values()[i] - expect[i]) <= 1e-9);
    }
}

TEST_CASE("antitonic ties are pooled and the fit is non-increasing") {
    const std::vector<WeightedPoint> pts{{1, 5, 1}, {1, 3, 1}, {2, 6, 2}, {3, 1, 1}};
    const auto agg = aggregate_ties(pts);
    REQUIRE(agg.size() == 3);
    CHECK(agg[0].y == 4.0);
    CHECK(agg[0].w == 2.0);
    const auto fit = antitonic_fit(pts);
    CHECK(fit.values()[0] == 5.0); // (4*2 + 6*2) / 4
    CHECK(fit.values()[1] == 5.0);
    CHECK(fit.values()[2] == 1.0);
    CHECK_THROWS_AS(antitonic_fit(std::vector<WeightedPoint>{{1, 1, 1}, {1, 2, 1}}), NumericError);
}

TEST_CASE("PAVA preserves the weighted mean and is idempotent") {
    std::mt19937_64 gen(5);
    for (int inst = 0; inst < 30; ++inst) {
        auto pts = noisy_points(gen, 40, inst % 2 == 0);
        for (auto& p : pts)
            p.w = 0.5 + std::fmod(p.y * p.y, 3.0);
        const auto agg = aggregate_ties(pts);
        const auto fit = antitonic_fit(pts);
        double sw = 0, swy = 0, swf = 0;
        for (std::size_t i = 0; i < agg.size(); ++i) {
            sw += agg[i].w;
            swy += agg[i].w * agg[i].y;
            swf += agg[i].w * fit.values()[i];
            if (i > 0)
                CHECK(fit.values()[i] <= fit.values()[i - 1]);
        }
        CHECK(swf / sw == doctest::Approx(swy / sw).epsilon(1e-12));

        std::vector<WeightedPoint> again;
        for (std::size_t i = 0; i < agg.size(); ++i)
            again.push_back({agg[i].x, fit.values()[i], agg[i].w});
        const auto twice = antitonic_fit(again);
        for (std::size_t i = 0; i < agg.size(); ++i)
            CHECK(twice.values()[i] == doctest::Approx(fit.values()[i]).epsilon(1e-12));
    }
}

TEST_CASE("loess agrees with the normal-equations oracle") {
    std::mt19937_64 gen(21);
    for (double span : {0.3, 0.5, 0.75, 1.0}) {
        const auto pts = noisy_points(gen, 60, false);
        std::vector<double> x, y;
        for (const auto& p : pts) {
            x.push_back(p.x);
            y.push_back(p.y);
        }
        LoessConfig cfg;
        cfg.span = span;
        for (double x0 : {0.0, 12.5, 50.0, 77.7, 100.0})
            CHECK(loess_at(pts, cfg, x0) == doctest::Approx(oracle::loess_normal_equations(x, y, span, x0)).epsilon(1e-9));
    }
}

TEST_CASE("loess reproduces lines and is linear in y") {
    std::mt19937_64 gen(8);
    const auto a = noisy_points(gen, 50, true);
    auto b = a;
    auto sum = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        b[i].y = 3.0 - 2.0 * a[i].x;
        sum[i].y = a[i].y + b[i].y;
    }
    const auto grid = integer_grid(0, 9);
    const LoessConfig cfg;
    const auto fa = loess_fit(a, cfg, grid);
    const auto fb = loess_fit(b, cfg, grid);
    const auto fs = loess_fit(sum, cfg, grid);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        CHECK(std::abs(fb.values()[g] - (3.0 - 2.0 * grid[g])) <= 1e-9);
        CHECK(std::abs(fs.values()[g] - fa.values()[g] - fb.values()[g]) <= 1e-9);
    }
}

TEST_CASE("loess degree 0 is a local weighted mean") {
    const std::vector<WeightedPoint> pts{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    LoessConfig cfg;
    cfg.degree = 0;
    cfg.span = 1.0;
    CHECK(loess_at(pts, cfg, 1.5) == doctest::Approx(1.0));
}

TEST_CASE("loess rejects degenerate designs and bad configuration") {
    const std::vector<WeightedPoint> two{{0, 1}, {1, 2}};
    CHECK_THROWS_AS(loess_at(two, LoessConfig{}, 0.5), NumericError);
    LoessConfig bad;
    bad.span = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.span = 0.5;
    bad.degree = 2;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("Shapiro-Wilk anchors") {
    const std::vector<double> s3{-1.0, 0.0, 1.0};
    const auto t = shapiro_wilk(s3);
    CHECK(std::abs(t.statistic - 1.0) <= 1e-9);
    CHECK(t.p_value == doctest::Approx(1.0));
    CHECK_THROWS_AS(shapiro_wilk(std::vector<double>{1.0, 2.0}), NumericError);
    CHECK_THROWS_AS(shapiro_wilk(std::vector<double>{2.0, 2.0, 2.0}), NumericError);
}

TEST_CASE("Shapiro-Wilk matches reference values across sample sizes") {
    // Reference W and p from an independent implementation (scipy.stats.shapiro)
    // on prefixes of the seed-42 standard normal sample.
    struct Ref {
        std::size_t n;
        double w, p;
    };
    const Ref refs[] = {
        {3, 0.8149224943955006, 0.15064478360279154},  {4, 0.7960700693163413, 0.09535675410787857},
        {7, 0.8445308478893335, 0.10946131179824065},  {11, 0.8770610572991527, 0.09546155778028254},
        {12, 0.8849011749901645, 0.10130685007180479}, {30, 0.9390466421817412, 0.08573890158457673},
    };
    const auto sample = synth::standard_normal_sample(42, 30);
    for (const auto& r : refs) {
        const auto t = shapiro_wilk(std::span<const double>(sample.data(), r.n));
        CHECK(t.statistic == doctest::Approx(r.w).epsilon(1e-6));
        CHECK(t.p_value == doctest::Approx(r.p).epsilon(1e-5));
    }
}

TEST_CASE("Shapiro-Wilk is affine invariant") {
    const auto s = synth::standard_normal_sample(9, 57);
    std::vector<double> t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        t[i] = 4.0 - 3.5 * s[i];
    CHECK(std::abs(shapiro_wilk(s).statistic - shapiro_wilk(t).statistic) <= 1e-9);
}

TEST_CASE("Pearson correlation") {
    const std::vector<double> x{1, 2, 3}, y{1, 3, 2};
    CHECK(pearson(x, y).statistic == doctest::Approx(0.5));
    CHECK(pearson(x, y).p_value == doctest::Approx(2.0 / 3.0).epsilon(1e-9)); // t = 1/sqrt(3), df = 1
    const std::vector<double> z{2, 4, 6};
    CHECK(pearson(x, z).statistic == doctest::Approx(1.0));
    CHECK(pearson(x, z).p_value == 0.0);
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2}), NumericError);
    CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 1, 1}), NumericError);

    const auto a = synth::standard_normal_sample(1, 40);
    const auto b = synth::standard_normal_sample(2, 40);
    std::vector<double> a2(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        a2[i] = 10.0 + 0.25 * a[i];
    CHECK(pearson(a, b).statistic == doctest::Approx(pearson(a2, b).statistic).epsilon(1e-12));
}

}
