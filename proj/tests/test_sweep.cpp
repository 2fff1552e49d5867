#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "sscdr/sweep.hpp"

namespace sw = sscdr::sweep;

namespace {

std::vector<sw::PointSample> random_samples(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> r(0.0, 1.0);
    std::uniform_real_distribution<double> s(0.1, 10.0);
    std::vector<sw::PointSample> out(n);
    for (auto& p : out) {
        p = {r(rng), s(rng)};
    }
    return out;
}

}  // namespace

TEST(Reduce, EmptyRange) {
    for (auto exec : {sw::Exec::Serial, sw::Exec::Parallel}) {
        const auto r = sw::reduce(0, [](std::size_t) { return sw::PointSample{}; }, exec);
        EXPECT_EQ(r.count, 0u);
        EXPECT_EQ(r.max_abs, 0.0);
        EXPECT_EQ(r.sum_sq, 0.0);
    }
}

TEST(Reduce, SerialValues) {
    const std::vector<sw::PointSample> pts{{1.0, 2.0}, {-3.0, 1.0}, {2.0, 0.5}, {-3.0, 4.0}};
    const auto r = sw::reduce_serial(pts.size(), [&](std::size_t i) { return pts[i]; });
    EXPECT_EQ(r.count, 4u);
    EXPECT_DOUBLE_EQ(r.max_abs, 3.0);
    EXPECT_EQ(r.worst_abs, 1u);
    EXPECT_DOUBLE_EQ(r.max_rel, 4.0);
    EXPECT_EQ(r.worst_rel, 2u);
    EXPECT_DOUBLE_EQ(r.sum_sq, 23.0);
    EXPECT_DOUBLE_EQ(r.max_scale, 4.0);
}

TEST(Reduce, ParallelMatchesSerial) {
    for (std::size_t n : {1u, 7u, 1000u, 100003u}) {
        const auto pts = random_samples(n, static_cast<unsigned>(n));
        const auto f = [&](std::size_t i) { return pts[i]; };
        const auto a = sw::reduce_serial(n, f);
        const auto b = sw::reduce_omp(n, f);
        EXPECT_EQ(a.count, b.count);
        EXPECT_EQ(a.max_abs, b.max_abs);
        EXPECT_EQ(a.worst_abs, b.worst_abs);
        EXPECT_EQ(a.max_rel, b.max_rel);
        EXPECT_EQ(a.worst_rel, b.worst_rel);
        EXPECT_EQ(a.max_scale, b.max_scale);
        EXPECT_NEAR(a.sum_sq, b.sum_sq, 1e-12 * a.sum_sq);
    }
}

TEST(Reduce, MergeKeepsFirstArgmax) {
    sw::Reduction a;
    a.count = 2;
    a.max_abs = 5.0;
    a.worst_abs = 1;
    a.max_rel = 1.0;
    a.worst_rel = 0;
    sw::Reduction b;
    b.count = 3;
    b.max_abs = 5.0;
    b.worst_abs = 4;
    b.max_rel = 2.0;
    b.worst_rel = 3;
    a.merge(b);
    EXPECT_EQ(a.count, 5u);
    EXPECT_EQ(a.worst_abs, 1u);
    EXPECT_EQ(a.worst_rel, 3u);
    EXPECT_DOUBLE_EQ(a.max_rel, 2.0);
}

TEST(Reduce, NanIsReportedAsInfinite) {
    for (auto exec : {sw::Exec::Serial, sw::Exec::Parallel}) {
        const auto r = sw::reduce(
            100,
            [](std::size_t i) {
                return sw::PointSample{i == 37 ? std::numeric_limits<double>::quiet_NaN() : 1e-3, 1.0};
            },
            exec);
        EXPECT_TRUE(std::isinf(r.max_abs));
        EXPECT_EQ(r.worst_abs, 37u);
        EXPECT_FALSE(r.max_abs <= 1.0);
    }
}

TEST(Reduce, ExceptionsPropagate) {
    for (auto exec : {sw::Exec::Serial, sw::Exec::Parallel}) {
        EXPECT_THROW(sw::reduce(
                         1000,
                         [](std::size_t i) -> sw::PointSample {
                             if (i == 500) {
                                 throw std::domain_error("bad point");
                             }
                             return {};
                         },
                         exec),
                     std::domain_error);
    }
}

TEST(ForEach, VisitsEveryIndexOnce) {
    for (auto exec : {sw::Exec::Serial, sw::Exec::Parallel}) {
        std::vector<int> hits(5000, 0);
        sw::for_each(hits.size(), [&](std::size_t i) { hits[i] += 1; }, exec);
        for (int h : hits) {
            ASSERT_EQ(h, 1);
        }
    }
}

TEST(ForEach, ExceptionsPropagate) {
    EXPECT_THROW(sw::for_each_omp(100,
                                  [](std::size_t i) {
                                      if (i == 3) {
                                          throw std::runtime_error("stop");
                                      }
                                  }),
                 std::runtime_error);
}

TEST(Threads, AtLeastOne) { EXPECT_GE(sw::max_threads(), 1); }
