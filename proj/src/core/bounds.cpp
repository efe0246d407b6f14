#include "core/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "core/block_coloring.hpp"
#include "core/text.hpp"

namespace edc {

namespace {

constexpr double kExactDoubleMax = 9007199254740992.0; // 2^53

// (q-1)^e in double; exact while the result stays below 2^53.
double dpow(int base, long long e) {
    return std::pow(static_cast<double>(base), static_cast<double>(e));
}

BoundRow row(std::string name, std::string kind, std::string family,
             double value, bool exact, std::string formula) {
    return BoundRow{std::move(name), std::move(kind), std::move(family),
                    value, exact, std::move(formula)};
}

} // namespace

std::vector<BoundRow> bounds_exact(int q, int d) {
    if (q < 3)
        throw std::invalid_argument("q must be at least 3");
    if (d < 2)
        throw std::invalid_argument("d must be at least 2");
    std::vector<BoundRow> rows;
    if (d % 2 == 0) {
        rows.push_back(row("clique", "lower", "tq", q, true, "q"));
        rows.push_back(row("level-sets", "lower", "tqd",
                           std::log2(d / 4.0 + q - 1), false,
                           "log2(d/4 + q - 1)"));
        rows.push_back(
            row("walk-energy", "lower", "tqd",
                d * std::log(q - 1.0) /
                    (4 * std::log(d / 2.0) + 4 * std::log(q - 1.0)),
                false, "d*ln(q-1) / (4*ln(d/2) + 4*ln(q-1))"));
        if (q == 3)
            rows.push_back(row("comb-level-sets", "lower", "p3",
                               std::log2(d + 8.0) - 2, false,
                               "log2(d + 8) - 2"));
        const int k = choose_block_length(q, d);
        const double vk = dpow(q - 1, k) + dpow(q - 1, k / 2) +
                          static_cast<double>((d + k - 1) / k) + 1;
        rows.push_back(row(
            "block-greedy", "upper", "tq", vk, vk <= kExactDoubleMax,
            "(q-1)^k + (q-1)^floor(k/2) + ceil(d/k) + 1 at k=" +
                std::to_string(k)));
        rows.push_back(row("block-greedy-k1", "upper", "tq",
                           static_cast<double>(d + q + 1), true,
                           "d + q + 1"));
        rows.push_back(row("layered", "upper", "tq",
                           static_cast<double>(d + 1) * (q - 1), true,
                           "(d+1)*(q-1)"));
    } else {
        rows.push_back(row("parity", "lower", "tq", 2, true, "2"));
        rows.push_back(row("parity", "upper", "tq", 2, true, "2"));
        if (q == 3) {
            rows.push_back(
                row("walk-energy-shifted", "lower", "u3",
                    (d + 1) * std::log(2.0) /
                            (4 * std::log((d + 1) / 2.0) +
                             4 * std::log(2.0)) -
                        1,
                    false,
                    "(d+1)*ln(2) / (4*ln((d+1)/2) + 4*ln(2)) - 1"));
            rows.push_back(row("comb-level-sets-shifted", "lower", "q3",
                               std::log2(d + 8.0) - 3, false,
                               "log2(d + 8) - 3"));
            rows.push_back(row("chordal-layered", "upper", "u3",
                               3.0 * (d + 1), true,
                               "binom(t 2)*(d+1) at clique number t=3"));
            rows.push_back(row("chordal-layered", "upper", "q3",
                               3.0 * (d + 1), true,
                               "binom(t 2)*(d+1) at clique number t=3"));
        }
    }
    return rows;
}

std::vector<BoundRow> bounds_interval(int q, int d, const Rational& c) {
    if (q < 3)
        throw std::invalid_argument("q must be at least 3");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "interval bounds require an even distance d >= 2");
    if (!(Rational{1, 1} < c))
        throw std::invalid_argument("interval bounds require c > 1, got c=" +
                                    c.str());
    const long long half = (c * Rational{d, 2}).floor(); // floor(c*d/2)
    const long long cap = (c * Rational{d, 1}).floor();  // floor(c*d)
    const long long ell = half - d / 2;
    std::vector<BoundRow> rows;

    const double lower = q * dpow(q - 1, ell);
    rows.push_back(row("clique", "lower", "tq", lower,
                       lower <= kExactDoubleMax,
                       "q*(q-1)^l at l=floor(c*d/2)-floor(d/2)=" +
                           std::to_string(ell)));

    const double levels = dpow(q - 1, half + 1) * static_cast<double>(cap + 1);
    rows.push_back(row("level-sets", "upper", "tq", levels,
                       levels <= kExactDoubleMax,
                       "(q-1)^(floor(c*d/2)+1) * (floor(c*d)+1)"));

    const double greedy =
        q * dpow(q - 1, ell + 1) / (q - 2) + static_cast<double>(cap) + 1;
    rows.push_back(row("greedy", "upper", "tq", greedy,
                       q <= 4 && greedy <= kExactDoubleMax,
                       "q/(q-2)*(q-1)^(l+1) + floor(c*d) + 1 at l=" +
                           std::to_string(ell)));
    return rows;
}

std::vector<std::string> check_bound_consistency(
    const std::vector<BoundRow>& rows) {
    // A lower bound for a family constrains an upper bound for the same
    // family; lower bounds for "tqd" and "p3" also constrain "tq" uppers,
    // since those graphs embed in the q-regular truncation with distances
    // preserved.
    auto comparable = [](const std::string& lf, const std::string& uf) {
        if (lf == uf)
            return true;
        return uf == "tq" && (lf == "tqd" || lf == "p3");
    };
    std::vector<std::string> failures;
    for (const auto& lo : rows) {
        if (lo.kind != "lower")
            continue;
        for (const auto& up : rows) {
            if (up.kind != "upper" || !comparable(lo.family, up.family))
                continue;
            if (lo.value > up.value + 1e-9)
                failures.push_back(
                    "lower bound " + lo.name + " (" + lo.family + ") = " +
                    format_double(lo.value) + " exceeds upper bound " +
                    up.name + " (" + up.family + ") = " +
                    format_double(up.value));
        }
    }
    return failures;
}

void write_bounds_csv(
    std::ostream& out, const std::vector<BoundRow>& rows,
    const std::vector<std::pair<std::string, std::string>>& header) {
    for (const auto& [k, v] : header)
        out << "# " << k << ": " << v << "\n";
    out << "name,kind,family,value,exact,formula\n";
    for (const auto& r : rows)
        out << r.name << ',' << r.kind << ',' << r.family << ','
            << format_double(r.value) << ',' << (r.exact ? 1 : 0) << ','
            << r.formula << '\n';
}

} // namespace edc
