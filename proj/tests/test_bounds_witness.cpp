#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/rational.hpp"
#include "core/tree.hpp"
#include "core/witness.hpp"
#include "doctest.h"

using edc::BoundRow;
using edc::Rational;
using edc::Tree;

namespace {

const BoundRow& row(const std::vector<BoundRow>& rows,
                    const std::string& name) {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const BoundRow& r) { return r.name == name; });
    REQUIRE(it != rows.end());
    return *it;
}

bool has_row(const std::vector<BoundRow>& rows, const std::string& name) {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const BoundRow& r) { return r.name == name; });
}

} // namespace

TEST_CASE("exact-distance bounds at q=3, d=8, frozen values") {
    const auto rows = edc::bounds_exact(3, 8);
    CHECK(row(rows, "clique").value == 3.0);
    CHECK(row(rows, "clique").exact);
    CHECK(row(rows, "clique").kind == "lower");
    // log2(d/4 + q - 1) = log2(4) = 2, exactly representable
    CHECK(row(rows, "level-sets").value == 2.0);
    CHECK_FALSE(row(rows, "level-sets").exact);
    CHECK(row(rows, "level-sets").family == "tqd");
    // d*ln(q-1) / (4 ln(d/2) + 4 ln(q-1)) = 8 ln2 / 12 ln2 = 2/3
    CHECK(std::abs(row(rows, "walk-energy").value - 2.0 / 3.0) <= 1e-9);
    // log2(d + 8) - 2 = log2(16) - 2 = 2
    CHECK(row(rows, "comb-level-sets").value == 2.0);
    CHECK(row(rows, "comb-level-sets").family == "p3");
    CHECK(row(rows, "block-greedy-k1").value == 12.0); // d + q + 1
    CHECK(row(rows, "block-greedy-k1").exact);
    CHECK(row(rows, "block-greedy-k1").kind == "upper");
    CHECK(row(rows, "layered").value == 18.0); // (d+1)(q-1)
    CHECK(has_row(rows, "block-greedy"));
    for (const BoundRow& r : rows)
        CHECK(!r.formula.empty());
}

TEST_CASE("row sets differ by distance parity") {
    const auto even = edc::bounds_exact(3, 6);
    CHECK(has_row(even, "clique"));
    CHECK(has_row(even, "level-sets"));
    CHECK(has_row(even, "walk-energy"));
    CHECK(has_row(even, "comb-level-sets"));
    CHECK(has_row(even, "block-greedy"));
    CHECK(has_row(even, "block-greedy-k1"));
    CHECK(has_row(even, "layered"));
    CHECK_FALSE(has_row(even, "parity"));

    const auto odd = edc::bounds_exact(3, 7);
    CHECK(has_row(odd, "parity"));
    CHECK(row(odd, "parity").value == 2.0);
    CHECK(row(odd, "parity").exact);
    CHECK(has_row(odd, "walk-energy-shifted"));
    CHECK(has_row(odd, "comb-level-sets-shifted"));
    CHECK(has_row(odd, "chordal-layered"));
    CHECK_FALSE(has_row(odd, "block-greedy"));

    // comb rows only exist for q = 3
    const auto q4 = edc::bounds_exact(4, 8);
    CHECK_FALSE(has_row(q4, "comb-level-sets"));
    CHECK(has_row(q4, "level-sets"));
}

TEST_CASE("no lower bound exceeds a comparable upper bound") {
    for (int q : {3, 4, 5})
        for (int d = 2; d <= 20; ++d) {
            CAPTURE(q);
            CAPTURE(d);
            const auto msgs =
                edc::check_bound_consistency(edc::bounds_exact(q, d));
            CHECK(msgs.empty());
        }
}

TEST_CASE("band bounds") {
    const auto rows = edc::bounds_interval(3, 4, Rational(3, 2));
    CHECK(row(rows, "greedy").value == 19.0);
    CHECK(row(rows, "greedy").kind == "upper");
    CHECK(has_row(rows, "clique"));
    CHECK(has_row(rows, "level-sets"));
    CHECK(row(rows, "clique").kind == "lower");
    CHECK(edc::check_bound_consistency(rows).empty());

    const auto rows2 = edc::bounds_interval(4, 2, Rational(2));
    CHECK(row(rows2, "greedy").value == 23.0);
}

TEST_CASE("bounds validate input") {
    CHECK_THROWS_AS(edc::bounds_exact(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(edc::bounds_exact(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(edc::bounds_interval(3, 3, Rational(3, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(edc::bounds_interval(3, 4, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("bounds csv shape") {
    std::ostringstream out;
    edc::write_bounds_csv(out, edc::bounds_exact(3, 8),
                          {{"q", "3"}, {"d", "8"}});
    const std::string text = out.str();
    CHECK(text.find("# q: 3") != std::string::npos);
    CHECK(text.find("# d: 8") != std::string::npos);
    CHECK(text.find("name,kind,family,value,exact,formula") !=
          std::string::npos);
    CHECK(text.find("level-sets") != std::string::npos);
}

TEST_CASE("exact-distance witnesses have size q and exact distances") {
    for (int q : {3, 4, 5})
        for (int d = 2; d <= 12; d += 2) {
            CAPTURE(q);
            CAPTURE(d);
            const Tree t(q, q, d / 2);
            const edc::CliqueWitness w = edc::exact_clique_witness(t, d);
            CHECK(w.members.size() == static_cast<std::size_t>(q));
            CHECK(w.lo == d);
            CHECK(w.hi == d);
            for (std::size_t i = 0; i < w.members.size(); ++i)
                for (std::size_t j = i + 1; j < w.members.size(); ++j)
                    CHECK(edc::distance(w.members[i], w.members[j]) == d);
        }
}

TEST_CASE("band witnesses have the closed-form size") {
    struct Point {
        int q, d;
        Rational c;
    };
    const Point grid[] = {
        {3, 4, Rational(3, 2)}, {3, 6, Rational(3, 2)},
        {3, 8, Rational(3, 2)}, {4, 4, Rational(3, 2)},
        {4, 6, Rational(3, 2)}, {4, 8, Rational(3, 2)},
        {3, 4, Rational(2)},    {3, 6, Rational(2)},
        {3, 8, Rational(2)},    {4, 4, Rational(2)},
        {4, 6, Rational(2)},    {4, 8, Rational(2)},
    };
    for (const Point& p : grid) {
        CAPTURE(p.q);
        CAPTURE(p.d);
        const int cap = static_cast<int>((p.c * Rational(p.d)).floor());
        const int half = static_cast<int>(
            (p.c * Rational(p.d) / Rational(2)).floor());
        const int shift = half - p.d / 2;
        const Tree t(p.q, p.q, half);
        const edc::CliqueWitness w = edc::interval_clique_witness(t, p.d, p.c);
        std::uint64_t expect = static_cast<std::uint64_t>(p.q);
        for (int i = 0; i < shift; ++i)
            expect *= static_cast<std::uint64_t>(p.q - 1);
        CHECK(w.members.size() == expect);
        CHECK(w.lo == p.d);
        CHECK(w.hi == 2 * half); // within the band: 2*floor(c*d/2) <= cap
        CHECK(w.hi <= cap);
        for (std::size_t i = 0; i < w.members.size(); ++i)
            for (std::size_t j = i + 1; j < w.members.size(); ++j) {
                const int dist =
                    edc::distance(w.members[i], w.members[j]);
                CHECK(dist >= p.d);
                CHECK(dist <= cap);
            }
    }
}

TEST_CASE("specific witness members at q=3, d=4, c=3/2") {
    const Tree t(3, 3, 3);
    const edc::CliqueWitness w = edc::interval_clique_witness(t, 4, Rational(3, 2));
    CHECK(w.members.size() == 6);
    CHECK(w.family.find("interval-clique") != std::string::npos);
    CHECK(w.lo == 4);
    CHECK(w.hi == 6);
}

TEST_CASE("witness csv shape") {
    const Tree t(3, 3, 2);
    const edc::CliqueWitness w = edc::exact_clique_witness(t, 4);
    std::ostringstream out;
    w.write_csv(out);
    const std::string text = out.str();
    CHECK(text.find("# witness: ") != std::string::npos);
    CHECK(text.find("# size: 3") != std::string::npos);
    CHECK(text.find("# distance_range: 4..4") != std::string::npos);
    CHECK(text.find("address") != std::string::npos);
}

TEST_CASE("witness construction validates input") {
    CHECK_THROWS_AS(edc::exact_clique_witness(Tree(3, 3, 4), 3),
                    std::invalid_argument); // odd d
    CHECK_THROWS_AS(edc::exact_clique_witness(Tree(3, 3, 1), 4),
                    std::invalid_argument); // too shallow
    CHECK_THROWS_AS(edc::exact_clique_witness(Tree(3, 2, 4), 4),
                    std::invalid_argument); // needs root arity q
    CHECK_THROWS_AS(
        edc::interval_clique_witness(Tree(3, 3, 2), 4, Rational(3, 2)),
        std::invalid_argument); // depth_cap < floor(c*d/2)
    CHECK_THROWS_AS(
        edc::interval_clique_witness(Tree(3, 3, 6), 4, Rational(1)),
        std::invalid_argument); // c must exceed 1
}
