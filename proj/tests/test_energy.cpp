#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/block_coloring.hpp"
#include "core/energy.hpp"
#include "core/tree.hpp"
#include "doctest.h"

using edc::BlockColoring;
using edc::EnergyProfile;
using edc::Tree;

TEST_CASE("most frequent color, frozen") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    CHECK(edc::most_frequent_color(col, 8) == 5);
}

TEST_CASE("profile shape and frozen statistics at q=3, d=8") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    const EnergyProfile p = edc::energy_profile(col, 8, 5, 400, 1);
    CHECK(p.q == 3);
    CHECK(p.d == 8);
    CHECK(p.color == 5);
    CHECK(p.class_size == 128);
    CHECK_FALSE(p.empty_class);
    CHECK(p.samples == 400);
    CHECK(p.seed == 1);
    REQUIRE(p.mean.size() == 5); // k = 0..d/2
    REQUIRE(p.sem.size() == 5);
    REQUIRE(p.diff_mean.size() == 4);
    REQUIRE(p.diff_sem.size() == 4);
    // E_0 is a function of the root alone: every walk sees the same value.
    CHECK(p.mean[0] == 1.0);
    CHECK(p.sem[0] == 0.0);
    for (double m : p.mean)
        CHECK(m >= 0.0);
}

TEST_CASE("difference statistics pair up with the means") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    const EnergyProfile p = edc::energy_profile(col, 8, 5, 300, 17);
    for (std::size_t k = 0; k + 1 < p.mean.size(); ++k)
        CHECK(std::abs((p.mean[k] - p.mean[k + 1]) - p.diff_mean[k]) <=
              1e-12);
}

TEST_CASE("the root-only energy is seed-independent") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    const double e0 = edc::energy_profile(col, 8, 5, 50, 1).mean[0];
    for (std::uint64_t seed : {2ULL, 3ULL, 99ULL})
        CHECK(edc::energy_profile(col, 8, 5, 50, seed).mean[0] == e0);
}

TEST_CASE("identical seeds give identical profiles") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    const EnergyProfile a = edc::energy_profile(col, 8, 5, 200, 42);
    const EnergyProfile b = edc::energy_profile(col, 8, 5, 200, 42);
    REQUIRE(a.mean.size() == b.mean.size());
    for (std::size_t k = 0; k < a.mean.size(); ++k) {
        CHECK(a.mean[k] == b.mean[k]);
        CHECK(a.sem[k] == b.sem[k]);
    }
}

TEST_CASE("an absent color yields the empty profile") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    const EnergyProfile p = edc::energy_profile(col, 8, 9999, 50, 1);
    CHECK(p.empty_class);
    CHECK(p.class_size == 0);
    for (double m : p.mean)
        CHECK(m == 0.0);
    for (double s : p.sem)
        CHECK(s == 0.0);
}

TEST_CASE("profile csv shape") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    const EnergyProfile p = edc::energy_profile(col, 8, 5, 100, 7);
    std::ostringstream out;
    p.write_csv(out);
    const std::string text = out.str();
    CHECK(text.find("# class_size: 128") != std::string::npos);
    CHECK(text.find("# samples: 100") != std::string::npos);
    CHECK(text.find("# seed: 7") != std::string::npos);
    CHECK(text.find("k,mean,sem,diff_mean,diff_sem") != std::string::npos);
}

TEST_CASE("profile validates input") {
    const Tree t(3, 3, 8);
    const BlockColoring col(t, 8, 1);
    CHECK_THROWS_AS(edc::energy_profile(col, 7, 5, 10, 1),
                    std::invalid_argument); // odd d
    CHECK_THROWS_AS(edc::energy_profile(col, 10, 5, 10, 1),
                    std::invalid_argument); // deeper than the truncation
    CHECK_THROWS_AS(edc::energy_profile(col, 8, 5, 0, 1),
                    std::invalid_argument); // no samples
}

TEST_CASE("deep profile with a wide block length runs") {
    // Regression: the first anchor level's block spans all root subtrees;
    // profiling the most frequent color must work on such colorings too.
    const Tree t(3, 3, 12);
    const BlockColoring col(t, 12, 6);
    const std::uint32_t c = edc::most_frequent_color(col, 12);
    const EnergyProfile p = edc::energy_profile(col, 12, c, 50, 1);
    CHECK(p.mean.size() == 7);
    CHECK(p.class_size > 0);
}
