#include "core/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/saturate.hpp"
#include "core/text.hpp"

namespace edc {

namespace {

std::uint64_t upow(std::uint64_t base, int e) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i)
        v *= base;
    return v;
}

// Energy of the level-conflict graph encoded by `mask` at walk step k:
// bit b stands for even depth base + 2b; distinct depths i, j are adjacent
// iff (i + j - d)/2 < k.
double mask_energy(std::uint32_t mask, int k, int d, int base, int q) {
    double e = 0;
    for (int bi = 0; (mask >> bi) != 0; ++bi) {
        if (((mask >> bi) & 1u) == 0)
            continue;
        const int i = base + 2 * bi;
        int deg = 0;
        for (int bj = 0; (mask >> bj) != 0; ++bj) {
            if (bj == bi || ((mask >> bj) & 1u) == 0)
                continue;
            const int j = base + 2 * bj;
            if (i + j < d + 2 * k)
                ++deg;
        }
        e += std::pow(static_cast<double>(q - 1), deg);
    }
    return e;
}

void check_subtree_args(const TreeColoring& col, int d, const Limits& lim) {
    const Tree& tree = col.tree();
    if (d < 0 || d > tree.depth_cap())
        throw std::invalid_argument(
            "subtree depth " + std::to_string(d) +
            " exceeds the coloring's depth cap " +
            std::to_string(tree.depth_cap()));
    std::int64_t total = 0;
    for (int t = 0; t <= d; ++t)
        total = sat_add(total, sat_pow(tree.branch_arity(), t));
    if (total > lim.scan_work)
        throw TooLargeError(
            "subtree scan over " + std::to_string(total) +
            " vertices exceeds the work limit " +
            std::to_string(lim.scan_work));
}

} // namespace

std::uint32_t most_frequent_color(const TreeColoring& col, int d) {
    check_subtree_args(col, d, Limits{});
    const std::uint64_t w =
        static_cast<std::uint64_t>(col.tree().branch_arity());
    std::vector<std::uint64_t> counts(col.palette_size(), 0);
    std::uint64_t n = 1;
    for (int t = 0; t <= d; ++t) {
        for (std::uint64_t r = 0; r < n; ++r)
            ++counts[col.color_at(t, r)];
        n *= w;
    }
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best])
            best = c;
    return best;
}

EnergyProfile energy_profile(const TreeColoring& col, int d,
                             std::uint32_t color, std::uint64_t samples,
                             std::uint64_t seed, const Limits& lim) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "energy profile requires an even distance d >= 2");
    if (samples < 1)
        throw std::invalid_argument("energy profile needs at least one walk");
    check_subtree_args(col, d, lim);
    const Tree& tree = col.tree();
    const int q = tree.q();
    const std::uint64_t w = static_cast<std::uint64_t>(q - 1);

    EnergyProfile prof;
    prof.q = q;
    prof.d = d;
    prof.color = color;
    prof.samples = samples;
    prof.seed = seed;

    // Bit layout for the depth masks: even depths in (d/2, d].
    int base = d / 2 + 1;
    if (base % 2 != 0)
        ++base;
    const int half = d / 2;

    // Bottom-up: mask(v) = OR of the children's masks, plus v's own depth
    // bit when v has the studied color at an even depth in (d/2, d].
    // Only levels 0..d/2 (the walk's range) are kept.
    std::vector<std::vector<std::uint32_t>> stored(
        static_cast<std::size_t>(half) + 1);
    std::vector<std::uint32_t> below;
    for (int t = d; t >= 0; --t) {
        const std::uint64_t n = upow(w, t);
        std::vector<std::uint32_t> cur(n, 0);
        for (std::uint64_t r = 0; r < n; ++r) {
            std::uint32_t m = 0;
            if (!below.empty()) {
                const std::uint64_t b0 = r * w;
                for (std::uint64_t b = 0; b < w; ++b)
                    m |= below[b0 + b];
            }
            if (col.color_at(t, r) == color) {
                ++prof.class_size;
                if (t % 2 == 0 && t > half)
                    m |= 1u << ((t - base) / 2);
            }
            cur[r] = m;
        }
        below = std::move(cur);
        if (t <= half)
            stored[static_cast<std::size_t>(t)] = below;
    }
    prof.empty_class = (prof.class_size == 0);

    std::vector<double> sum(static_cast<std::size_t>(half) + 1, 0.0);
    std::vector<double> sumsq(static_cast<std::size_t>(half) + 1, 0.0);
    std::vector<double> dsum(static_cast<std::size_t>(half), 0.0);
    std::vector<double> dsumsq(static_cast<std::size_t>(half), 0.0);
    std::vector<double> e(static_cast<std::size_t>(half) + 1, 0.0);

    for (std::uint64_t s = 0; s < samples; ++s) {
        // Independent per-walk substream so results do not depend on how
        // walks are batched.
        Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (s + 1)));
        std::uint64_t r = 0;
        for (int k = 0; k <= half; ++k) {
            e[static_cast<std::size_t>(k)] = mask_energy(
                stored[static_cast<std::size_t>(k)][r], k, d, base, q);
            if (k < half)
                r = r * w + rng.bounded(w);
        }
        for (int k = 0; k <= half; ++k) {
            sum[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k)];
            sumsq[static_cast<std::size_t>(k)] +=
                e[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(k)];
        }
        for (int k = 0; k < half; ++k) {
            const double diff = e[static_cast<std::size_t>(k)] -
                                e[static_cast<std::size_t>(k) + 1];
            dsum[static_cast<std::size_t>(k)] += diff;
            dsumsq[static_cast<std::size_t>(k)] += diff * diff;
        }
    }

    const double n = static_cast<double>(samples);
    auto finalize = [&](const std::vector<double>& s1,
                        const std::vector<double>& s2, std::vector<double>& m,
                        std::vector<double>& se) {
        m.resize(s1.size());
        se.resize(s1.size());
        for (std::size_t i = 0; i < s1.size(); ++i) {
            m[i] = s1[i] / n;
            double var = 0;
            if (samples > 1)
                var = std::max(0.0, (s2[i] - n * m[i] * m[i]) / (n - 1));
            se[i] = std::sqrt(var / n);
        }
    };
    finalize(sum, sumsq, prof.mean, prof.sem);
    finalize(dsum, dsumsq, prof.diff_mean, prof.diff_sem);
    return prof;
}

void EnergyProfile::write_csv(std::ostream& out) const {
    out << "# energy: q=" << q << " d=" << d << " color=" << color << "\n";
    out << "# class_size: " << class_size << "\n";
    out << "# empty_class: " << (empty_class ? 1 : 0) << "\n";
    out << "# samples: " << samples << "\n";
    out << "# seed: " << seed << "\n";
    out << "k,mean,sem,diff_mean,diff_sem\n";
    for (std::size_t k = 0; k < mean.size(); ++k) {
        out << k << ',' << format_double(mean[k]) << ','
            << format_double(sem[k]) << ',';
        if (k < diff_mean.size())
            out << format_double(diff_mean[k]) << ','
                << format_double(diff_sem[k]);
        else
            out << ',';
        out << '\n';
    }
}

} // namespace edc
