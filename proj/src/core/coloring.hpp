#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include "core/tree.hpp"

namespace edc {

// A vertex coloring of a tree truncation, evaluated positionally by
// (depth, rank).  Concrete colorings store at most one value per "anchor"
// vertex; every other vertex inherits the color of an ancestor.  Colors are
// dense in [0, palette_size).
class TreeColoring {
public:
    virtual ~TreeColoring() = default;

    const Tree& tree() const { return tree_; }
    std::uint32_t palette_size() const { return palette_; }
    const std::string& provenance() const { return provenance_; }

    // Color of the vertex at (depth, rank).
    virtual std::uint32_t color_at(int depth, std::uint64_t rank) const = 0;

    // Depth of the ancestor that determines the color of a vertex at `depth`.
    // All vertices of that level sharing the same depth-a ancestor share one
    // color, i.e. colors are constant on aligned rank blocks of size
    // (q-1)^(depth - a).  a == 0 means the color is constant across the level.
    // This is what lets verification scan whole runs instead of single ranks.
    virtual int anchor_depth(int depth) const = 0;

    std::uint32_t color_of(const Address& a) const {
        return color_at(a.depth(), tree_.rank_of(a));
    }

    // Emits "address,color" rows in breadth-first order, preceded by comment
    // lines recording how the coloring was produced and its palette size.
    void write_csv(std::ostream& out) const;

protected:
    TreeColoring(Tree t, std::string provenance)
        : tree_(std::move(t)), provenance_(std::move(provenance)) {}

    Tree tree_;
    std::uint32_t palette_ = 0;
    std::string provenance_;
};

// Colors every vertex by the parity of its depth.  Proper for the exact
// distance-d graph of the tree for every odd d: any two vertices at an odd
// distance sit at depths of opposite parity.
class ParityColoring final : public TreeColoring {
public:
    explicit ParityColoring(const Tree& t);

    std::uint32_t color_at(int depth, std::uint64_t rank) const override;
    int anchor_depth(int /*depth*/) const override { return 0; }
};

} // namespace edc
