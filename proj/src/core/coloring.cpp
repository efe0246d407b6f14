#include "core/coloring.hpp"

namespace edc {

void TreeColoring::write_csv(std::ostream& out) const {
    out << "# coloring: " << provenance_ << "\n";
    out << "# q: " << tree_.q() << "\n";
    out << "# root_arity: " << tree_.root_arity() << "\n";
    out << "# depth_cap: " << tree_.depth_cap() << "\n";
    out << "# palette_size: " << palette_ << "\n";
    out << "address,color\n";
    for (int t = 0; t <= tree_.depth_cap(); ++t) {
        const std::uint64_t n = tree_.level_size(t);
        for (std::uint64_t r = 0; r < n; ++r)
            out << tree_.address_at(t, r).str() << ',' << color_at(t, r)
                << '\n';
    }
}

ParityColoring::ParityColoring(const Tree& t)
    : TreeColoring(t, "depth-parity") {
    palette_ = t.depth_cap() >= 1 ? 2 : 1;
}

std::uint32_t ParityColoring::color_at(int depth, std::uint64_t) const {
    return static_cast<std::uint32_t>(depth & 1);
}

} // namespace edc
