#pragma once

#include <compare>
#include <vector>

#include "rimhook/lattice_path.hpp"
#include "rimhook/partition.hpp"

namespace rimhook {

/// A North-East path along the rim of a shape. For the corner cell (i,j) the
/// hook runs from the bottom of column j, (λ'_j, j), to the end of row i,
/// (i, λ_i); it has hook_length(i,j) cells. Corner cells and rim-hooks of a
/// shape are in bijection.
class RimHook {
  public:
    /// Builds the rim-hook of the given corner cell. Throws std::out_of_range
    /// when the cell is not in the shape.
    RimHook(const Partition& shape, Cell corner);

    Cell corner() const { return corner_; }
    const LatticePath& path() const { return path_; }
    Cell head() const { return path_.head(); }
    Cell tail() const { return path_.tail(); }
    int length() const { return path_.length(); }
    /// Number of cells, i.e. the hook length of the corner cell.
    int cell_count() const { return length() + 1; }

    /// The contents of the hook's cells form the closed interval
    /// [head().content(), tail().content()].
    int min_diagonal() const { return path_.head().content(); }
    int max_diagonal() const { return path_.tail().content(); }

    /// True when this hook is exactly the rim-hook of its corner in `shape`.
    bool belongs_to(const Partition& shape) const;

    friend bool operator==(const RimHook& a, const RimHook& b) {
        return a.corner_ == b.corner_ && a.path_ == b.path_;
    }

  private:
    Cell corner_;
    LatticePath path_;
};

/// Order on rim-hooks: f precedes h when the head of f has larger content, or
/// the heads tie and the tail of f has no larger content. On corner cells this
/// coincides with the reverse lexicographic order.
std::strong_ordering rim_hook_compare(const RimHook& f, const RimHook& h);
bool rim_hook_less(const RimHook& f, const RimHook& h);

/// One rim-hook per cell of the shape, sorted ascending by rim_hook_compare.
std::vector<RimHook> all_rim_hooks(const Partition& shape);

}  // namespace rimhook
