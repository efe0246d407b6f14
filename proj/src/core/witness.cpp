#include "core/witness.hpp"

#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace edc {

namespace {

// Verifies all pairwise distances and fills lo/hi with the claimed range.
void self_check(CliqueWitness& w, int lo, int hi) {
    w.lo = lo;
    w.hi = hi;
    for (std::size_t a = 0; a < w.members.size(); ++a) {
        for (std::size_t b = a + 1; b < w.members.size(); ++b) {
            const int dist = distance(w.members[a], w.members[b]);
            if (dist < lo || dist > hi)
                throw VerifyError(
                    "witness self-check failed: dist(" + w.members[a].str() +
                    ", " + w.members[b].str() + ") = " + std::to_string(dist) +
                    ", expected within [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
        }
    }
}

Address extend_with_zeros(Address a, int steps) {
    for (int i = 0; i < steps; ++i)
        a = a.child(0);
    return a;
}

} // namespace

void CliqueWitness::write_csv(std::ostream& out) const {
    out << "# witness: " << family << "\n";
    out << "# size: " << members.size() << "\n";
    out << "# distance_range: " << lo << ".." << hi << "\n";
    out << "address\n";
    for (const auto& m : members)
        out << m.str() << '\n';
}

CliqueWitness exact_clique_witness(const Tree& tree, int d) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "exact clique witness requires an even distance d >= 2");
    if (tree.root_arity() != tree.q())
        throw std::invalid_argument(
            "exact clique witness needs the full truncation: root arity "
            "must equal q");
    if (tree.depth_cap() < d / 2)
        throw std::invalid_argument(
            "exact clique witness needs depth_cap >= d/2 = " +
            std::to_string(d / 2) + ", got " +
            std::to_string(tree.depth_cap()));
    CliqueWitness w;
    w.family = "exact-clique q=" + std::to_string(tree.q()) +
               " d=" + std::to_string(d);
    for (int b = 0; b < tree.q(); ++b)
        w.members.push_back(
            extend_with_zeros(Address{}.child(static_cast<std::uint8_t>(b)),
                              d / 2 - 1));
    self_check(w, d, d);
    return w;
}

CliqueWitness interval_clique_witness(const Tree& tree, int d,
                                      const Rational& c) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument(
            "interval clique witness requires an even distance d >= 2");
    if (!(Rational{1, 1} < c))
        throw std::invalid_argument(
            "interval clique witness requires c > 1, got c=" + c.str());
    if (tree.root_arity() != tree.q())
        throw std::invalid_argument(
            "interval clique witness needs the full truncation: root arity "
            "must equal q");
    const long long half = (c * Rational{d, 2}).floor(); // floor(c*d/2)
    const int t = static_cast<int>(half) - d / 2;
    if (tree.depth_cap() < half)
        throw std::invalid_argument(
            "interval clique witness needs depth_cap >= floor(c*d/2) = " +
            std::to_string(half) + ", got " +
            std::to_string(tree.depth_cap()));
    const std::uint64_t size = tree.level_size(t + 1);
    if (size > 5000)
        throw TooLargeError(
            "interval clique witness would have " + std::to_string(size) +
            " members; pairwise verification is limited to 5000");
    CliqueWitness w;
    w.family = "interval-clique q=" + std::to_string(tree.q()) +
               " d=" + std::to_string(d) + " c=" + c.str();
    for (std::uint64_t r = 0; r < size; ++r)
        w.members.push_back(
            extend_with_zeros(tree.address_at(t + 1, r), d / 2 - 1));
    self_check(w, d, 2 * static_cast<int>(half));
    return w;
}

} // namespace edc
